#pragma once

// Intersection numbers on P^{n_1} x ... x P^{n_m} and on complete
// intersections inside it.
//
// A class on X = [n|q] is represented by a lift to the ambient cohomology
// ring; integrating over X multiplies by the classes of the K defining
// divisors, Q_alpha = sum_s q_alpha^s H_s, and integrates over the ambient.

#include <cstdint>
#include <random>
#include <vector>

#include "toddkit/config.hpp"
#include "toddkit/errors.hpp"
#include "toddkit/exactpoly.hpp"

namespace toddkit {

class AmbientSpace {
public:
    explicit AmbientSpace(std::vector<unsigned> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw DomainError("ambient space needs at least one factor");
        for (unsigned n : dims_)
            if (n < 1) throw DomainError("projective factor dimensions must be positive");
        std::vector<Exponent> caps(dims_.begin(), dims_.end());
        ring_ = make_ring(std::move(caps));
    }

    static AmbientSpace of(const ConfigMatrix& cfg) { return AmbientSpace(cfg.dims()); }

    const std::vector<unsigned>& dims() const { return dims_; }
    std::size_t factor_count() const { return dims_.size(); }
    unsigned dimension() const {
        unsigned d = 0;
        for (unsigned n : dims_) d += n;
        return d;
    }
    /// Q[H_1..H_m] / (H_r^{n_r+1}).
    const Ring& ring() const { return ring_; }
    Monomial top_monomial() const { return Monomial(dims_.begin(), dims_.end()); }

private:
    std::vector<unsigned> dims_;
    Ring ring_;
};

namespace detail {

inline void require_ambient_ring(const MultiPoly& a, const AmbientSpace& space) {
    if (!same_ring(a.ring_ptr(), space.ring()))
        throw DomainError("class does not live in the cohomology ring of the ambient space");
}

}  // namespace detail

/// Coefficient of H_1^{n_1}...H_m^{n_m}.
inline BigRational ambient_integral(const MultiPoly& a, const AmbientSpace& space) {
    detail::require_ambient_ring(a, space);
    return a.coefficient(space.top_monomial());
}

/// Top coefficient of a*b without forming the full product.
inline BigRational ambient_pairing(const MultiPoly& a, const MultiPoly& b, const AmbientSpace& space) {
    detail::require_ambient_ring(a, space);
    detail::require_ambient_ring(b, space);
    const Monomial top = space.top_monomial();
    BigRational acc = 0;
    Monomial complement(top.size());
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < top.size(); ++i) complement[i] = top[i] - m[i];
        auto it = b.terms().find(complement);
        if (it != b.terms().end()) acc += c * it->second;
    }
    return acc;
}

/// The divisor class sum_s q_alpha^s H_s of equation alpha.
inline MultiPoly divisor_class(const ConfigMatrix& cfg, std::size_t alpha, const Ring& ring) {
    MultiPoly d(ring);
    for (std::size_t s = 0; s < cfg.factor_count(); ++s)
        if (cfg.q(alpha, s) != 0) d = d + MultiPoly::variable(ring, s, BigRational(cfg.q(alpha, s)));
    return d;
}

/// Class of X in the ambient ring: prod_alpha Q_alpha.
inline MultiPoly fundamental_class(const ConfigMatrix& cfg) {
    const AmbientSpace space = AmbientSpace::of(cfg);
    MultiPoly acc = MultiPoly::one(space.ring());
    for (std::size_t a = 0; a < cfg.equation_count(); ++a) acc = acc * divisor_class(cfg, a, space.ring());
    return acc;
}

/// gamma lifted to the ambient, times [X].
inline MultiPoly pushforward(const MultiPoly& a, const ConfigMatrix& cfg) {
    const AmbientSpace space = AmbientSpace::of(cfg);
    detail::require_ambient_ring(a, space);
    return a * fundamental_class(cfg);
}

/// Integral over X of a class given by an ambient lift.
inline BigRational cicy_integral(const MultiPoly& a, const ConfigMatrix& cfg) {
    return ambient_integral(pushforward(a, cfg), AmbientSpace::of(cfg));
}

/// A nef class L = sum t_r J_r with t_r >= 0, not all zero.
class NefSample {
public:
    explicit NefSample(std::vector<BigRational> weights) : weights_(std::move(weights)) {
        bool positive = false;
        for (const auto& w : weights_) {
            if (sgn(w) < 0) throw DomainError("nef weights must be non-negative");
            positive = positive || sgn(w) > 0;
        }
        if (!positive) throw DomainError("nef sample must have a positive weight");
    }
    const std::vector<BigRational>& weights() const { return weights_; }

    MultiPoly as_class(const Ring& ring) const {
        MultiPoly acc(ring);
        for (std::size_t r = 0; r < weights_.size(); ++r)
            if (sgn(weights_[r]) > 0) acc = acc + MultiPoly::variable(ring, r, weights_[r]);
        return acc;
    }

    friend bool operator==(const NefSample& a, const NefSample& b) { return a.weights_ == b.weights_; }

private:
    std::vector<BigRational> weights_;
};

/// Standard basis vectors, then the all-ones vector (m > 1), then seeded
/// random vectors with entries a/b, 0 <= a <= 64, 1 <= b <= 64. The basis
/// and all-ones vectors are always present, so the result has
/// max(count, m + [m > 1]) entries.
inline std::vector<NefSample> sample_nef(const AmbientSpace& space, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw DomainError("sample count must be at least 1");
    const std::size_t m = space.factor_count();
    std::vector<NefSample> out;
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<BigRational> w(m, BigRational(0));
        w[r] = 1;
        out.emplace_back(std::move(w));
    }
    if (m > 1) out.emplace_back(std::vector<BigRational>(m, BigRational(1)));

    // Raw engine output only: distribution objects are not portable.
    std::mt19937_64 rng(seed);
    while (out.size() < count) {
        std::vector<BigRational> w(m);
        bool positive = false;
        for (auto& x : w) {
            const long num = static_cast<long>(rng() % 65);
            const long den = static_cast<long>(rng() % 64) + 1;
            x = make_rational(num, den);
            positive = positive || num > 0;
        }
        if (positive) out.emplace_back(std::move(w));
    }
    return out;
}

}  // namespace toddkit
