#pragma once

// Exact rational scalars. GMP's mpq_class keeps every value in canonical
// form (positive denominator, coprime numerator) after each arithmetic step.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toddkit/errors.hpp"

namespace toddkit {

using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational make_rational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) throw DomainError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(BigInteger(static_cast<long>(num)), BigInteger(static_cast<long>(den)));
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline int sign(const BigRational& q) { return sgn(q); }

/// Always "numerator/denominator", e.g. "2/1". This is the wire format.
inline std::string to_fraction_string(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// "2" for integers, "22/3" otherwise.
inline std::string to_display_string(const BigRational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return to_fraction_string(q);
}

/// Accepts "n", "-n", "n/d". Rejects anything else (no decimals, no spaces).
inline BigRational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    const auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num_part) || !valid_int(den_part) || den_part[0] == '-')
        throw InputError("not a rational number: '" + std::string(text) + "'");
    if (den_part.find_first_not_of("+0") == std::string_view::npos)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    return make_rational(BigInteger(strip_plus(num_part)), BigInteger(strip_plus(den_part)));
}

inline BigInteger factorial(unsigned n) {
    BigInteger r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInteger binomial(unsigned n, unsigned k) {
    BigInteger r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Generalized binomial x(x-1)...(x-k+1)/k! for rational x.
inline BigRational binomial(const BigRational& x, unsigned k) {
    BigRational acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= BigRational(x - i);
    return BigRational(acc / BigRational(factorial(k)));
}

inline BigRational pow(const BigRational& base, unsigned exp) {
    BigRational acc = 1;
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

}  // namespace toddkit
