#pragma once

// Exhaustive checks of two elementary lemmas the positivity arguments rely on:
//
//  * integrality: for rational lambda = p/q,
//      case 1: n >= 2 and (n+1)*binom(lambda+n, n) in Z  =>  lambda in Z
//      case 2:            binom(lambda+n+1, n) in Z      =>  lambda in Z
//  * positivity: for non-negative q_alpha^s,
//      f = (-x_1 + sum_alpha sum_s q_alpha^s x_s) * prod_alpha (x_1 + sum_s q_alpha^s x_s) + x_1^{K+1}
//    has only non-negative coefficients.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "toddkit/errors.hpp"
#include "toddkit/exactpoly.hpp"
#include "toddkit/rational.hpp"

namespace toddkit::lemmas {

enum class IntegralityCase { one, two };

struct SearchBounds {
    unsigned n = 2;
    unsigned qmax = 50;
    unsigned pmax = 500;
};

namespace detail {

/// Product of (p + i*q) over i in [lo, hi].
inline BigInteger shifted_product(const BigInteger& p, const BigInteger& q, unsigned lo, unsigned hi) {
    BigInteger acc = 1;
    for (unsigned i = lo; i <= hi; ++i) acc *= p + q * i;
    return acc;
}

/// Whether the case's binomial expression is an integer at lambda = p/q.
inline bool expression_is_integer(const BigInteger& p, const BigInteger& q, unsigned n, IntegralityCase which) {
    BigInteger qn;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
    const BigInteger den = factorial(n) * qn;
    const BigInteger num = which == IntegralityCase::one ? BigInteger(n + 1) * shifted_product(p, q, 1, n)
                                                         : shifted_product(p, q, 2, n + 1);
    return mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
}

inline std::vector<BigRational> search(const SearchBounds& b, IntegralityCase which) {
    if (b.n < 1) throw DomainError("integrality search needs n >= 1");
    std::vector<BigRational> hits;
    for (unsigned q = 2; q <= b.qmax; ++q) {
        for (long p = -static_cast<long>(b.pmax); p <= static_cast<long>(b.pmax); ++p) {
            if (std::gcd(static_cast<unsigned long>(std::labs(p)), static_cast<unsigned long>(q)) != 1) continue;
            if (expression_is_integer(BigInteger(p), BigInteger(q), b.n, which)) hits.push_back(make_rational(p, q));
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace detail

/// Non-integral lambda = p/q (2 <= q <= qmax, |p| <= pmax, coprime) for which
/// (n+1)*binom(lambda+n, n) is an integer. Empty for n >= 2; not for n = 1.
inline std::vector<BigRational> integer_lemma_case1(const SearchBounds& b) {
    return detail::search(b, IntegralityCase::one);
}

/// Non-integral lambda in the same range with binom(lambda+n+1, n) integral.
inline std::vector<BigRational> integer_lemma_case2(const SearchBounds& b) {
    return detail::search(b, IntegralityCase::two);
}

inline bool integrality_decision(const BigRational& value, unsigned n, IntegralityCase which) {
    const BigRational expr = which == IntegralityCase::one ? BigRational(BigRational(n + 1) * binomial(BigRational(value + n), n))
                                                           : binomial(BigRational(value + (n + 1)), n);
    return is_integer(expr);
}

using QTable = std::vector<std::vector<BigRational>>;  // K rows of (m - 1) entries

struct PositivePolyResult {
    /// f in Q[x_1..x_m], x_1 is variable 0.
    MultiPoly expanded;
    bool all_nonnegative = false;
    /// by_power[j] = coefficient of x_1^j from the subset-sum formula,
    /// j = 0..K+1, as a polynomial in x_2..x_m.
    std::vector<MultiPoly> closed_form_by_power;
    bool closed_form_matches = false;
};

namespace detail {

inline void validate_table(const QTable& table) {
    if (table.empty()) throw DomainError("positive polynomial table needs K >= 1 rows");
    const std::size_t width = table.front().size();
    if (width == 0) throw DomainError("positive polynomial table needs m >= 2");
    for (const auto& row : table) {
        if (row.size() != width) throw DomainError("positive polynomial table rows differ in length");
        for (const auto& v : row)
            if (sgn(v) < 0) throw DomainError("positive polynomial table entries must be non-negative");
    }
}

/// L_alpha = sum_{s>=2} q_alpha^s x_s.
inline MultiPoly row_form(const std::vector<BigRational>& row, const Ring& ring) {
    MultiPoly acc(ring);
    for (std::size_t s = 0; s < row.size(); ++s) acc = acc + MultiPoly::variable(ring, s + 1, row[s]);
    return acc;
}

}  // namespace detail

inline PositivePolyResult positive_poly_expand(const QTable& table) {
    detail::validate_table(table);
    const std::size_t K = table.size();
    const std::size_t m = table.front().size() + 1;
    const Ring ring = free_ring(m);
    const MultiPoly x1 = MultiPoly::variable(ring, 0);

    std::vector<MultiPoly> forms;
    MultiPoly form_sum(ring);
    for (const auto& row : table) {
        forms.push_back(detail::row_form(row, ring));
        form_sum = form_sum + forms.back();
    }

    MultiPoly f = form_sum - x1;
    for (const auto& form : forms) f = f * (x1 + form);
    f = f + pow(x1, static_cast<unsigned>(K + 1));

    // Coefficient of x_1^{K-k}: sum over alpha_1 < ... < alpha_k of
    // (sum_{alpha <= alpha_k} L_alpha) * prod_j L_{alpha_j}.
    std::vector<MultiPoly> by_power(K + 2, MultiPoly(ring));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << K); ++mask) {
        const auto k = static_cast<std::size_t>(std::popcount(mask));
        const std::size_t last = 63 - static_cast<std::size_t>(std::countl_zero(mask));
        MultiPoly prefix(ring);
        for (std::size_t a = 0; a <= last; ++a) prefix = prefix + forms[a];
        MultiPoly term = prefix;
        for (std::size_t a = 0; a < K; ++a)
            if (mask >> a & 1u) term = term * forms[a];
        by_power[K - k] = by_power[K - k] + term;
    }

    bool matches = true;
    for (std::size_t j = 0; j < by_power.size() && matches; ++j)
        matches = coefficient_of_power(f, 0, static_cast<Exponent>(j)) == by_power[j];
    // No term of f can carry x_1 to a power above K+1.
    for (const auto& [mono, c] : f.terms()) matches = matches && mono[0] <= K + 1;

    const bool nonneg = f.all_coefficients_nonnegative();
    return PositivePolyResult{std::move(f), nonneg, std::move(by_power), matches};
}

}  // namespace toddkit::lemmas
