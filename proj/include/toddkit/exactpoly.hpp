#pragma once

// Sparse multivariate polynomials over Q in a monomial quotient ring
//
//   Q[x_1..x_m] / (x_r^{cap_r + 1}, all monomials of degree > D)
//
// where the degree cap D is optional and the grading may be weighted.
// With cap_r = n_r this is the cohomology ring of P^{n_1} x ... x P^{n_m};
// with a degree cap it is a ring of truncated formal power series.
//
// Values are immutable once built. Every operation truncates eagerly, so a
// stored monomial always satisfies the caps and no stored coefficient is 0.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toddkit/errors.hpp"
#include "toddkit/rational.hpp"

namespace toddkit {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

inline constexpr Exponent kUncapped = std::numeric_limits<Exponent>::max();

class TruncatedRing {
public:
    /// `weights` defaults to all ones; the grading used by graded_part,
    /// the degree cap and the series operations is sum(weights[i] * e[i]).
    explicit TruncatedRing(std::vector<Exponent> caps, std::optional<std::uint64_t> total_degree_cap = std::nullopt,
                           std::vector<Exponent> weights = {})
        : caps_(std::move(caps)), total_cap_(total_degree_cap), weights_(std::move(weights)) {
        if (caps_.empty()) throw DomainError("ring needs at least one variable");
        if (weights_.empty()) weights_.assign(caps_.size(), 1);
        if (weights_.size() != caps_.size()) throw DomainError("weight count differs from variable count");
        if (std::any_of(weights_.begin(), weights_.end(), [](Exponent w) { return w == 0; }))
            throw DomainError("grading weights must be positive");
    }

    std::size_t var_count() const { return caps_.size(); }
    const std::vector<Exponent>& caps() const { return caps_; }
    const std::vector<Exponent>& weights() const { return weights_; }
    std::optional<std::uint64_t> total_degree_cap() const { return total_cap_; }

    std::uint64_t degree(const Monomial& m) const {
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += std::uint64_t(weights_[i]) * m[i];
        return d;
    }

    bool admits(const Monomial& m) const {
        if (m.size() != caps_.size()) return false;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > caps_[i]) return false;
        return !total_cap_ || degree(m) <= *total_cap_;
    }

    /// Largest degree a nonzero element can have; nullopt if unbounded.
    std::optional<std::uint64_t> max_degree() const {
        std::optional<std::uint64_t> by_caps = std::uint64_t{0};
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            if (caps_[i] == kUncapped) {
                by_caps.reset();
                break;
            }
            *by_caps += std::uint64_t(weights_[i]) * caps_[i];
        }
        if (by_caps && total_cap_) return std::min(*by_caps, *total_cap_);
        return by_caps ? by_caps : total_cap_;
    }

    bool operator==(const TruncatedRing&) const = default;

private:
    std::vector<Exponent> caps_;
    std::optional<std::uint64_t> total_cap_;
    std::vector<Exponent> weights_;
};

using Ring = std::shared_ptr<const TruncatedRing>;

inline Ring make_ring(std::vector<Exponent> caps, std::optional<std::uint64_t> total_degree_cap = std::nullopt,
                      std::vector<Exponent> weights = {}) {
    return std::make_shared<const TruncatedRing>(std::move(caps), total_degree_cap, std::move(weights));
}

/// Polynomial ring without per-variable caps.
inline Ring free_ring(std::size_t var_count, std::optional<std::uint64_t> total_degree_cap = std::nullopt) {
    return make_ring(std::vector<Exponent>(var_count, kUncapped), total_degree_cap);
}

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

class MultiPoly {
public:
    using Terms = std::map<Monomial, BigRational>;

    explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

    /// Drops zero coefficients and monomials outside the ring.
    static MultiPoly from_terms(Ring ring, Terms terms) {
        MultiPoly p(std::move(ring));
        for (auto it = terms.begin(); it != terms.end();) {
            if (it->first.size() != p.ring_->var_count())
                throw DomainError("monomial length differs from variable count");
            it->second.canonicalize();
            if (it->second == 0 || !p.ring_->admits(it->first))
                it = terms.erase(it);
            else
                ++it;
        }
        p.terms_ = std::move(terms);
        return p;
    }

    static MultiPoly constant(Ring ring, const BigRational& c) {
        Monomial zero(ring->var_count(), 0);
        return from_terms(ring, Terms{{zero, c}});
    }
    static MultiPoly one(Ring ring) { return constant(std::move(ring), 1); }

    static MultiPoly monomial(Ring ring, Monomial m, const BigRational& c = 1) {
        return from_terms(std::move(ring), Terms{{std::move(m), c}});
    }

    static MultiPoly variable(Ring ring, std::size_t index, const BigRational& c = 1) {
        if (index >= ring->var_count()) throw DomainError("variable index out of range");
        Monomial m(ring->var_count(), 0);
        m[index] = 1;
        return monomial(std::move(ring), std::move(m), c);
    }

    const Ring& ring_ptr() const { return ring_; }
    const TruncatedRing& ring() const { return *ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigRational coefficient(const Monomial& m) const {
        if (m.size() != ring_->var_count()) throw DomainError("monomial length differs from variable count");
        auto it = terms_.find(m);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    BigRational constant_term() const { return coefficient(Monomial(ring_->var_count(), 0)); }

    bool all_coefficients_nonnegative() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) >= 0; });
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

private:
    Ring ring_;
    Terms terms_;
};

namespace detail {

inline void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (!same_ring(a.ring_ptr(), b.ring_ptr())) throw RingMismatch();
}

inline void accumulate(MultiPoly::Terms& acc, const Monomial& m, const BigRational& c) {
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) it->second += c;
}

}  // namespace detail

inline MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    detail::require_same_ring(a, b);
    MultiPoly::Terms acc = a.terms();
    for (const auto& [m, c] : b.terms()) detail::accumulate(acc, m, c);
    return MultiPoly::from_terms(a.ring_ptr(), std::move(acc));
}

inline MultiPoly operator*(const BigRational& s, const MultiPoly& a) {
    MultiPoly::Terms acc;
    if (s != 0)
        for (const auto& [m, c] : a.terms()) acc.emplace(m, BigRational(s * c));
    return MultiPoly::from_terms(a.ring_ptr(), std::move(acc));
}

inline MultiPoly operator-(const MultiPoly& a) { return BigRational(-1) * a; }
inline MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    detail::require_same_ring(a, b);
    const TruncatedRing& ring = a.ring();
    MultiPoly::Terms acc;
    Monomial m(ring.var_count());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            bool ok = true;
            for (std::size_t i = 0; i < m.size() && ok; ++i) {
                m[i] = ma[i] + mb[i];
                ok = m[i] <= ring.caps()[i];
            }
            if (!ok || (ring.total_degree_cap() && ring.degree(m) > *ring.total_degree_cap())) continue;
            detail::accumulate(acc, m, BigRational(ca * cb));
        }
    }
    return MultiPoly::from_terms(a.ring_ptr(), std::move(acc));
}

inline MultiPoly pow(const MultiPoly& a, unsigned k) {
    MultiPoly result = MultiPoly::one(a.ring_ptr());
    MultiPoly base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

/// Terms of (weighted) degree exactly d.
inline MultiPoly graded_part(const MultiPoly& a, std::uint64_t d) {
    MultiPoly::Terms acc;
    for (const auto& [m, c] : a.terms())
        if (a.ring().degree(m) == d) acc.emplace(m, c);
    return MultiPoly::from_terms(a.ring_ptr(), std::move(acc));
}

/// Re-reads `a` in another ring with the same variables, dropping what the
/// target ring annihilates.
inline MultiPoly recast(const MultiPoly& a, Ring target) {
    if (target->var_count() != a.ring().var_count()) throw RingMismatch();
    return MultiPoly::from_terms(std::move(target), a.terms());
}

/// Coefficient of x_var^power, as a polynomial in the remaining variables.
inline MultiPoly coefficient_of_power(const MultiPoly& a, std::size_t var, Exponent power) {
    MultiPoly::Terms acc;
    for (const auto& [m, c] : a.terms()) {
        if (m.at(var) != power) continue;
        Monomial rest = m;
        rest[var] = 0;
        acc.emplace(std::move(rest), c);
    }
    return MultiPoly::from_terms(a.ring_ptr(), std::move(acc));
}

namespace detail {

inline std::uint64_t series_degree_bound(const MultiPoly& a) {
    auto bound = a.ring().max_degree();
    if (!bound) throw DomainError("series operations need a ring with bounded degree");
    return *bound;
}

inline void require_unit_constant(const MultiPoly& a, const char* op) {
    if (a.constant_term() != 1) throw DomainError(std::string(op) + ": constant term must be 1");
}

}  // namespace detail

/// b with a*b = 1, computed degree by degree: b_d = -sum_{i=1..d} a_i b_{d-i}.
inline MultiPoly series_inverse(const MultiPoly& a) {
    detail::require_unit_constant(a, "series_inverse");
    const auto top = detail::series_degree_bound(a);
    std::vector<MultiPoly> parts, inv;
    for (std::uint64_t d = 0; d <= top; ++d) parts.push_back(graded_part(a, d));
    inv.push_back(MultiPoly::one(a.ring_ptr()));
    MultiPoly result = inv[0];
    for (std::uint64_t d = 1; d <= top; ++d) {
        MultiPoly acc(a.ring_ptr());
        for (std::uint64_t i = 1; i <= d; ++i)
            if (!parts[i].is_zero() && !inv[d - i].is_zero()) acc = acc + parts[i] * inv[d - i];
        inv.push_back(-acc);
        result = result + inv.back();
    }
    return result;
}

/// b with b*b = a and constant term 1: b_d = (a_d - sum_{0<i<d} b_i b_{d-i}) / 2.
inline MultiPoly series_sqrt(const MultiPoly& a) {
    detail::require_unit_constant(a, "series_sqrt");
    const auto top = detail::series_degree_bound(a);
    const BigRational half(1, 2);
    std::vector<MultiPoly> root;
    root.push_back(MultiPoly::one(a.ring_ptr()));
    MultiPoly result = root[0];
    for (std::uint64_t d = 1; d <= top; ++d) {
        MultiPoly acc = graded_part(a, d);
        for (std::uint64_t i = 1; i < d; ++i)
            if (!root[i].is_zero() && !root[d - i].is_zero()) acc = acc - root[i] * root[d - i];
        root.push_back(half * acc);
        result = result + root.back();
    }
    return result;
}

/// Human-readable form, e.g. "1 + 5*H1 - 2/3*H1^2*H2". Variables are named
/// prefix1, prefix2, ... unless explicit names are given.
inline std::string to_string(const MultiPoly& a, const std::vector<std::string>& names = {},
                             const std::string& prefix = "H") {
    if (a.is_zero()) return "0";
    auto name = [&](std::size_t i) { return i < names.size() ? names[i] : prefix + std::to_string(i + 1); };
    // Ascending degree, then lexicographically descending exponents.
    std::vector<std::pair<Monomial, BigRational>> terms(a.terms().begin(), a.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
        auto dx = a.ring().degree(x.first), dy = a.ring().degree(y.first);
        if (dx != dy) return dx < dy;
        return x.first > y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool negative = sgn(c) < 0;
        const BigRational mag = abs(c);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += name(i);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            os << to_display_string(mag);
        else if (mag == 1)
            os << mono;
        else
            os << to_display_string(mag) << "*" << mono;
    }
    return os.str();
}

}  // namespace toddkit
