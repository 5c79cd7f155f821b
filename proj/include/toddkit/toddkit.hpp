#pragma once

#include "toddkit/cicy.hpp"
#include "toddkit/config.hpp"
#include "toddkit/errors.hpp"
#include "toddkit/exactpoly.hpp"
#include "toddkit/hyperkahler.hpp"
#include "toddkit/intersect.hpp"
#include "toddkit/lemmas.hpp"
#include "toddkit/nonvanishing.hpp"
#include "toddkit/rational.hpp"
#include "toddkit/univariate.hpp"

namespace toddkit {
inline constexpr const char* kVersion = "0.1.0";
}
