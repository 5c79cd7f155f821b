#pragma once

// Root analysis behind the minimal-power non-vanishing bound for nef and big
// L on a variety with c_1 = 0.
//
// f(t) = chi(L^t) is a polynomial of degree n with f(-t) = (-1)^n f(t) and
// leading constant alpha = int L^n / n! > 0. If H^0(L^i) = 0 for i = 1..N,
// Kawamata-Viehweg gives f(i) = 0 there, so f is alpha times a product of
// (t^2 - i^2) factors. The coefficient of t^{n-2} equals
// int L^{n-2} c_2 / (12 (n-2)!) >= 0 (Miyaoka-Yau), while the product makes
// it a negative multiple of alpha.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toddkit/errors.hpp"
#include "toddkit/exactpoly.hpp"
#include "toddkit/rational.hpp"
#include "toddkit/univariate.hpp"

namespace toddkit::nv {

/// floor((n-1)/4) + floor((n+2)/4).
inline unsigned min_nonvanishing_bound(long n) {
    if (n < 2) throw DomainError("non-vanishing bound needs n >= 2");
    return static_cast<unsigned>((n - 1) / 4 + (n + 2) / 4);
}

/// Ring Q[t, beta] holding f / alpha.
inline Ring vanishing_ring() {
    static const Ring ring = free_ring(2);
    return ring;
}

/// f / alpha for the given integer roots; with `free_quadratic` an extra
/// factor (t^2 - beta) with symbolic beta is appended. Roots must be closed
/// under negation, 0 must occur an odd number of times exactly when dim is
/// odd, and the degree must equal dim.
inline MultiPoly chi_vanishing_poly(long dim, const std::vector<long>& roots, bool free_quadratic = false) {
    if (dim < 1) throw DomainError("dimension must be positive");
    std::vector<long> sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long> negated;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) negated.push_back(-*it);
    if (sorted != negated) throw DomainError("roots are not symmetric under t -> -t");
    const auto zeros = std::count(sorted.begin(), sorted.end(), 0L);
    if ((zeros % 2 == 1) != (dim % 2 == 1))
        throw DomainError("multiplicity of the root 0 contradicts f(-t) = (-1)^dim f(t)");
    const long degree = static_cast<long>(sorted.size()) + (free_quadratic ? 2 : 0);
    if (degree != dim)
        throw DomainError("product has degree " + std::to_string(degree) + " but dim is " + std::to_string(dim));

    const Ring ring = vanishing_ring();
    const MultiPoly t = MultiPoly::variable(ring, 0);
    MultiPoly f = MultiPoly::one(ring);
    for (long r : sorted) f = f * (t - MultiPoly::constant(ring, BigRational(r)));
    if (free_quadratic) f = f * (t * t - MultiPoly::variable(ring, 1));
    return f;
}

enum class ParityCase { odd, even_4k2, even_4k4 };

inline const char* to_string(ParityCase c) {
    switch (c) {
        case ParityCase::odd: return "odd";
        case ParityCase::even_4k2: return "4k+2";
        case ParityCase::even_4k4: return "4k+4";
    }
    return "?";
}

struct VanishingCertificate {
    long dim;
    ParityCase parity;
    unsigned k;
    /// H^0(L^i) = 0 assumed for i = 1..vanishing_upto.
    unsigned vanishing_upto;
    /// f / alpha in Q[t, beta].
    MultiPoly product;
    /// Power of t carrying the Miyaoka-Yau coefficient (dim - 2).
    unsigned coefficient_power;
    /// That coefficient divided by alpha, as a polynomial in beta.
    MultiPoly coefficient;
    /// sum of i^2 over the assumed roots.
    BigInteger square_sum;
    /// 4k+4 only: beta <= beta_bound, and chi(O_X) = alpha * beta * constant_factor.
    std::optional<BigRational> beta_bound;
    std::optional<BigInteger> constant_factor;
    std::vector<std::string> transcript;
};

namespace detail {

inline BigInteger square_sum(unsigned upto) {
    BigInteger s = 0;
    for (unsigned i = 1; i <= upto; ++i) s += BigInteger(i) * i;
    return s;
}

inline std::vector<long> symmetric_roots(unsigned upto, bool with_zero) {
    std::vector<long> roots;
    if (with_zero) roots.push_back(0);
    for (unsigned i = 1; i <= upto; ++i) {
        roots.push_back(static_cast<long>(i));
        roots.push_back(-static_cast<long>(i));
    }
    return roots;
}

inline std::string product_text(unsigned upto, bool with_zero, bool free_quadratic) {
    std::string s = "f(t) = α";
    if (with_zero) s += "·t";
    for (unsigned i = 1; i <= upto; ++i) s += "·(t² - " + std::to_string(i * i) + ")";
    if (free_quadratic) s += "·(t² - β)";
    return s;
}

inline VanishingCertificate build(long dim, ParityCase parity, unsigned k, unsigned upto, bool with_zero,
                                  bool free_quadratic) {
    VanishingCertificate c{dim,
                           parity,
                           k,
                           upto,
                           chi_vanishing_poly(dim, symmetric_roots(upto, with_zero), free_quadratic),
                           static_cast<unsigned>(dim - 2),
                           MultiPoly(vanishing_ring()),
                           square_sum(upto),
                           std::nullopt,
                           std::nullopt,
                           {}};
    c.coefficient = coefficient_of_power(c.product, 0, c.coefficient_power);
    c.transcript.push_back("assume H^0(X, L^i) = 0 for i = 1.." + std::to_string(upto) +
                           "; Kawamata-Viehweg gives chi(L^i) = 0 there");
    c.transcript.push_back(product_text(upto, with_zero, free_quadratic));
    return c;
}

}  // namespace detail

/// dim = 2k+1, vanishing for i = 1..k: coefficient of t^{2k-1} is -alpha * sum i^2.
inline VanishingCertificate odd_certificate(unsigned k) {
    if (k < 1) throw DomainError("odd certificate needs k >= 1");
    auto c = detail::build(2 * static_cast<long>(k) + 1, ParityCase::odd, k, k, true, false);
    c.transcript.push_back("[t^" + std::to_string(c.coefficient_power) + "] f = -" + c.square_sum.get_str() +
                           "·α < 0");
    c.transcript.push_back("[t^" + std::to_string(c.coefficient_power) +
                           "] f = int L^{n-2} c2 / (12 (n-2)!) >= 0 by Miyaoka-Yau: contradiction");
    return c;
}

/// dim = 4k+2, vanishing for i = 1..2k+1: coefficient of t^{4k} is -alpha * sum i^2.
inline VanishingCertificate even_certificate_4k2(unsigned k) {
    auto c = detail::build(4 * static_cast<long>(k) + 2, ParityCase::even_4k2, k, 2 * k + 1, false, false);
    c.transcript.push_back("[t^" + std::to_string(c.coefficient_power) + "] f = -" + c.square_sum.get_str() +
                           "·α < 0");
    c.transcript.push_back("[t^" + std::to_string(c.coefficient_power) +
                           "] f = int L^{n-2} c2 / (12 (n-2)!) >= 0 by Miyaoka-Yau: contradiction");
    return c;
}

/// dim = 4k+4, vanishing for i = 1..2k+1 and one free root pair t^2 = beta:
/// -alpha (beta + S) >= 0 forces beta <= -S < 0, then
/// chi(O_X) = alpha * beta * ((2k+1)!)^2 < 0.
inline VanishingCertificate even_certificate_4k4(unsigned k) {
    auto c = detail::build(4 * static_cast<long>(k) + 4, ParityCase::even_4k4, k, 2 * k + 1, false, true);
    const BigInteger odd_fact = factorial(2 * k + 1);
    c.beta_bound = BigRational(-c.square_sum);
    c.constant_factor = odd_fact * odd_fact;
    c.transcript.push_back("[t^" + std::to_string(c.coefficient_power) + "] f = -(β + " + c.square_sum.get_str() +
                           ")·α >= 0 by Miyaoka-Yau");
    c.transcript.push_back("so β <= -" + c.square_sum.get_str() + " < 0");
    c.transcript.push_back("[t^0] f = α·β·" + c.constant_factor->get_str() + " = chi(X, O_X) < 0");
    c.transcript.push_back("chi(X, O_X) >= 0 for such X: contradiction");
    return c;
}

/// Dispatches on dim (>= 2; odd dim needs >= 3).
inline VanishingCertificate certificate_for_dim(long dim) {
    if (dim < 2) throw DomainError("certificate needs dim >= 2");
    if (dim % 2 == 1) return odd_certificate(static_cast<unsigned>((dim - 1) / 2));
    if (dim % 4 == 2) return even_certificate_4k2(static_cast<unsigned>((dim - 2) / 4));
    return even_certificate_4k4(static_cast<unsigned>((dim - 4) / 4));
}

/// Rebuilds the product with univariate arithmetic, at beta = 0 and beta = 1
/// where a free factor is present, and re-derives every recorded constraint.
inline bool recheck(const VanishingCertificate& c) {
    const bool with_zero = c.parity == ParityCase::odd;
    const bool free_quadratic = c.parity == ParityCase::even_4k4;
    const BigInteger s = detail::square_sum(c.vanishing_upto);
    if (s != c.square_sum) return false;

    for (int beta = 0; beta <= (free_quadratic ? 1 : 0); ++beta) {
        UniPoly f = with_zero ? UniPoly::linear(0, 1) : UniPoly::constant(1);
        for (unsigned i = 1; i <= c.vanishing_upto; ++i)
            f = f * UniPoly({BigRational(-BigInteger(i) * i), 0, 1});
        if (free_quadratic) f = f * UniPoly({BigRational(-beta), 0, 1});
        if (static_cast<long>(f.degree()) != c.dim) return false;

        // Compare the stored f at this beta coefficientwise.
        for (std::size_t j = 0; j < f.coefficients().size(); ++j) {
            BigRational stored = 0;
            for (const auto& [m, v] : c.product.terms())
                if (m[0] == j) stored += v * pow(BigRational(beta), m[1]);
            if (stored != f.coefficient(j)) return false;
        }
        BigRational coeff_here = 0;
        for (const auto& [m, v] : c.coefficient.terms()) coeff_here += v * pow(BigRational(beta), m[1]);
        if (coeff_here != f.coefficient(c.coefficient_power)) return false;
        const BigRational expected = free_quadratic ? BigRational(-(beta + BigRational(s))) : BigRational(-s);
        if (coeff_here != expected) return false;
    }

    if (!free_quadratic) return sgn(c.coefficient.constant_term()) < 0 && !c.beta_bound && !c.constant_factor;
    if (!c.beta_bound || !c.constant_factor) return false;
    const BigInteger fact = factorial(2 * c.k + 1);
    return *c.beta_bound == BigRational(-s) && sgn(*c.beta_bound) < 0 && *c.constant_factor == fact * fact &&
           c.product.coefficient({0, 1}) == BigRational(*c.constant_factor);
}

}  // namespace toddkit::nv
