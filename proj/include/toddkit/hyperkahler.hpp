#pragma once

// Riemann-Roch polynomials of hyperkahler manifolds.
//
// chi(X, L) depends on L only through q_X(c_1(L)) (equivalently through the
// characteristic value lambda(L)). This header provides the closed forms for
// the known deformation types, the Fujiki-constant arithmetic behind the
// positivity of C(c_2^2), and a generic engine that produces chi as a
// polynomial in lambda from a table of Chern numbers:
//
//   chi(X, L) = int_X exp( sum_k -B_{2k}/(2k) * ch_{2k}(X) * T_{2k}(sqrt(lambda/4 + 1)) )

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toddkit/errors.hpp"
#include "toddkit/exactpoly.hpp"
#include "toddkit/lemmas.hpp"
#include "toddkit/rational.hpp"
#include "toddkit/univariate.hpp"

namespace toddkit::hk {

// ---------------------------------------------------------------------------
// Models and closed-form chi

enum class Family { hilb_k3, kummer, og6 };

class HKModel {
public:
    static HKModel hilb_k3(unsigned n) {
        if (n < 1) throw DomainError("Hilbert scheme of n points needs n >= 1");
        return HKModel(Family::hilb_k3, n);
    }
    /// Kummer(1) is accepted for the chi polynomial; the h0 bound needs n >= 2.
    static HKModel kummer(unsigned n) {
        if (n < 1) throw DomainError("generalized Kummer needs n >= 1");
        return HKModel(Family::kummer, n);
    }
    static HKModel og6() { return HKModel(Family::og6, 3); }

    /// "hilb:n", "kummer:n" or "og6".
    static HKModel parse(std::string_view spec) {
        auto number = [&](std::string_view digits) {
            if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string_view::npos)
                throw InputError("bad model size in '" + std::string(spec) + "'");
            return static_cast<unsigned>(std::stoul(std::string(digits)));
        };
        if (spec == "og6") return og6();
        if (spec.starts_with("hilb:")) return hilb_k3(number(spec.substr(5)));
        if (spec.starts_with("kummer:")) return kummer(number(spec.substr(7)));
        throw InputError("unknown model '" + std::string(spec) + "' (expected hilb:n, kummer:n or og6)");
    }

    Family family() const { return family_; }
    unsigned half_dim() const { return n_; }

    std::string name() const {
        switch (family_) {
            case Family::hilb_k3: return "hilb:" + std::to_string(n_);
            case Family::kummer: return "kummer:" + std::to_string(n_);
            case Family::og6: return "og6";
        }
        return "?";
    }

private:
    HKModel(Family f, unsigned n) : family_(f), n_(n) {}
    Family family_;
    unsigned n_;
};

/// binom(q/2 + n + 1, n).
inline BigRational chi_hilb_q(unsigned n, const BigRational& q) {
    if (n < 1) throw DomainError("chi_hilb_q needs n >= 1");
    return binomial(BigRational(q / 2 + (n + 1)), n);
}

/// binom(chi(S,H) - (r^2 - 1)(n - 1), n).
inline BigRational chi_hilb_egl(unsigned n, long chi_s_h, long r) {
    if (n < 1) throw DomainError("chi_hilb_egl needs n >= 1");
    const BigInteger top = BigInteger(chi_s_h) - (BigInteger(r) * r - 1) * BigInteger(static_cast<long>(n) - 1);
    return binomial(BigRational(top), n);
}

/// (n+1) * binom((n+1) lambda / 4 + n, n).
inline BigRational chi_kummer(unsigned n, const BigRational& lambda) {
    if (n < 1) throw DomainError("chi_kummer needs n >= 1");
    return BigRational(n + 1) * binomial(BigRational(BigRational(n + 1) * lambda / 4 + n), n);
}

/// 4 * binom(lambda + 3, 3).
inline BigRational chi_og6(const BigRational& lambda) { return 4 * binomial(BigRational(lambda + 3), 3); }

enum class ChiVariable { q, lambda, t };

inline const char* to_string(ChiVariable v) {
    switch (v) {
        case ChiVariable::q: return "q";
        case ChiVariable::lambda: return "λ";
        case ChiVariable::t: return "t";
    }
    return "?";
}

struct ChiPolynomial {
    ChiVariable variable;
    UniPoly poly;

    BigRational operator()(const BigRational& x) const { return poly(x); }
    std::string to_string() const { return to_pretty_string(poly, hk::to_string(variable)); }
};

/// chi as a polynomial in q (Hilbert schemes) or lambda (Kummer, OG6).
inline ChiPolynomial chi_polynomial(const HKModel& model) {
    const unsigned n = model.half_dim();
    UniPoly acc = UniPoly::constant(1);
    switch (model.family()) {
        case Family::hilb_k3:
            // prod_{j=2}^{n+1} (q/2 + j) / n!
            for (unsigned j = 2; j <= n + 1; ++j) acc = acc * UniPoly::linear(BigRational(j), BigRational(1, 2));
            return {ChiVariable::q, BigRational(1, factorial(n)) * acc};
        case Family::kummer:
            // (n+1) prod_{j=1}^{n} ((n+1) lambda / 4 + j) / n!
            for (unsigned j = 1; j <= n; ++j)
                acc = acc * UniPoly::linear(BigRational(j), make_rational(static_cast<long>(n) + 1, 4));
            return {ChiVariable::lambda, BigRational(BigRational(n + 1) / BigRational(factorial(n))) * acc};
        case Family::og6:
            for (unsigned j = 1; j <= 3; ++j) acc = acc * UniPoly::linear(BigRational(j), BigRational(1));
            return {ChiVariable::lambda, make_rational(2, 3) * acc};
    }
    throw DomainError("unknown family");
}

struct ToddPositivity {
    /// Every coefficient of the chi polynomial is >= 0, equivalently every
    /// Todd class of X pairs non-negatively with powers of nef classes.
    bool all_effective;
    std::vector<BigRational> coefficients;
};

inline ToddPositivity todd_all_effective(const HKModel& model) {
    const auto chi = chi_polynomial(model);
    bool ok = true;
    for (const auto& c : chi.poly.coefficients()) ok = ok && sgn(c) >= 0;
    return {ok, chi.poly.coefficients()};
}

/// chi(O_X) = n + 1 on a hyperkahler manifold of dimension 2n.
inline unsigned chi_structure_sheaf(unsigned n) { return n + 1; }

struct H0Bound {
    BigInteger bound;
    /// The quantity forced to be a positive integer (q/2, (n+1)lambda/4 or lambda).
    std::string integral_quantity;
    /// Integrality lemma case and degree applied to that quantity.
    lemmas::IntegralityCase lemma_case;
    unsigned lemma_n;
};

/// Lower bound for h0(L), L nef and big: chi is an integer, so the lemma
/// makes the relevant quantity a positive integer; chi has positive
/// coefficients, so its value at 1 is the minimum.
inline H0Bound h0_lower_bound(const HKModel& model) {
    const unsigned n = model.half_dim();
    H0Bound out;
    BigRational value;
    switch (model.family()) {
        case Family::hilb_k3:
            value = chi_hilb_q(n, 2);
            out.integral_quantity = "q/2";
            out.lemma_case = lemmas::IntegralityCase::two;
            out.lemma_n = n;
            break;
        case Family::kummer:
            if (n < 2) throw DomainError("Kummer h0 bound needs n >= 2");
            value = chi_kummer(n, make_rational(4, static_cast<long>(n) + 1));
            out.integral_quantity = "(n+1)λ/4";
            out.lemma_case = lemmas::IntegralityCase::one;
            out.lemma_n = n;
            break;
        case Family::og6:
            value = chi_og6(1);
            out.integral_quantity = "λ";
            out.lemma_case = lemmas::IntegralityCase::one;
            out.lemma_n = 3;
            break;
    }
    if (!is_integer(value) || !lemmas::integrality_decision(BigRational(1), out.lemma_n, out.lemma_case))
        throw DomainError("h0 bound is not integral");
    out.bound = value.get_num();
    return out;
}

/// A 6-dimensional hyperkahler manifold has h0(L) > chi(O_X) = 4.
inline unsigned six_dimensional_h0_bound() { return chi_structure_sheaf(3) + 1; }

// ---------------------------------------------------------------------------
// Fujiki constants

struct FujikiData {
    unsigned n;            // half dimension
    unsigned b2;           // second Betti number
    BigRational fujiki_c;  // c_X > 0

    void validate() const {
        if (b2 < 1) throw DomainError("b2 must be at least 1");
        if (sgn(fujiki_c) <= 0) throw DomainError("Fujiki constant must be positive");
    }
};

/// int e_i^a e_j^b e_k^c for an orthonormal basis, n >= 2.
struct FujikiIntegrals {
    BigRational top;          // int e_i^{2n}
    BigRational two_two;      // int e_i^{2n-2} e_j^2
    BigRational four_four;    // int e_i^{2n-4} e_j^4
    BigRational two_two_two;  // int e_i^{2n-4} e_j^2 e_k^2
};

/// Reads the integrals off int (e_i + t e_j + s e_k)^{2n} = c_X (1 + t^2 + s^2)^n:
/// the coefficient of t^b s^c is binom(2n; a, b, c) * int e_i^a e_j^b e_k^c.
inline FujikiIntegrals fujiki_monomial_integrals(const FujikiData& data) {
    data.validate();
    if (data.n < 2) throw DomainError("Fujiki monomial integrals need n >= 2");
    const unsigned n = data.n;
    const Ring ring = free_ring(2);
    const MultiPoly t = MultiPoly::variable(ring, 0), s = MultiPoly::variable(ring, 1);
    const MultiPoly expansion = data.fujiki_c * pow(MultiPoly::one(ring) + t * t + s * s, n);
    auto integral = [&](unsigned b, unsigned c) {
        const unsigned a = 2 * n - b - c;
        const BigInteger multinomial = factorial(2 * n) / (factorial(a) * factorial(b) * factorial(c));
        return BigRational(expansion.coefficient({b, c}) / BigRational(multinomial));
    };
    return {integral(0, 0), integral(2, 0), integral(4, 0), integral(2, 2)};
}

/// C(Q^2) = int Q^2 e_1^{2n-4} with Q = sum e_i^2, from the four integrals.
inline BigRational c_q_squared(const FujikiData& data) {
    data.validate();
    if (data.n < 2) throw DomainError("C(Q^2) needs n >= 2");
    const BigRational c = data.fujiki_c;
    const BigRational d1 = 2 * data.n - 1, d3 = 2 * data.n - 3;
    const BigRational b = data.b2;
    BigRational v = c + 2 * (b - 1) * c / d1 + 3 * (b - 1) * c / (d1 * d3) + (b - 1) * (b - 2) * c / (d1 * d3);
    if (sgn(v) <= 0) throw DomainError("C(Q^2) is not positive");
    return v;
}

/// lambda(L) = 12 c_X q / ((2n-1) C(c_2)).
inline BigRational lambda_from_q(const BigRational& q, const FujikiData& data, const BigRational& c_c2) {
    if (sgn(c_c2) <= 0) throw DomainError("C(c2) must be positive");
    data.validate();
    return 12 * data.fujiki_c * q / (BigRational(2 * data.n - 1) * c_c2);
}

/// int sqrt(td)_4 L^{2n-4} = (2n-4)! binom(n, n-2) lambda^{n-2} int sqrt(td).
inline BigRational sqrt_td_pairing_identity(unsigned n, const BigRational& lambda, const BigRational& sqrt_td_total) {
    if (n < 2) throw DomainError("needs n >= 2");
    if (sgn(sqrt_td_total) <= 0) throw DomainError("int sqrt(td) must be positive");
    return BigRational(factorial(2 * n - 4) * binomial(n, n - 2)) * pow(lambda, n - 2) * sqrt_td_total;
}

/// Formal square root of td = 1 + c2/12 + (3 c2^2 - c4)/720 (c_1 = c_3 = 0)
/// in Q[c2, c4] graded by complex degree and truncated above degree 4.
inline MultiPoly sqrt_todd_to_degree4() {
    const Ring ring = make_ring({kUncapped, kUncapped}, 4, {2, 4});
    const MultiPoly c2 = MultiPoly::variable(ring, 0), c4 = MultiPoly::variable(ring, 1);
    const MultiPoly td = MultiPoly::one(ring) + BigRational(1, 12) * c2 +
                         BigRational(1, 720) * (BigRational(3) * (c2 * c2) - c4);
    return series_sqrt(td);
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and Chebyshev polynomials

/// B_j via sum_{i=0}^{j} binom(j+1, i) B_i = 0, B_0 = 1.
inline std::vector<BigRational> bernoulli_table(unsigned up_to) {
    std::vector<BigRational> b(up_to + 1);
    b[0] = 1;
    for (unsigned j = 1; j <= up_to; ++j) {
        BigRational acc = 0;
        for (unsigned i = 0; i < j; ++i) acc += BigRational(binomial(j + 1, i)) * b[i];
        b[j] = -acc / (j + 1);
    }
    return b;
}

/// B_{2k}, k >= 1.
inline BigRational bernoulli(unsigned k) {
    if (k < 1) throw DomainError("bernoulli(k) returns B_{2k} for k >= 1");
    return bernoulli_table(2 * k)[2 * k];
}

/// T_j from T_0 = 1, T_1 = x, T_{j+1} = 2x T_j - T_{j-1}.
inline UniPoly chebyshev(unsigned j) {
    UniPoly prev = UniPoly::constant(1), cur = UniPoly::linear(0, 1);
    if (j == 0) return prev;
    const UniPoly two_x = UniPoly::linear(0, 2);
    for (unsigned i = 1; i < j; ++i) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline UniPoly chebyshev_even(unsigned k) {
    if (k < 1) throw DomainError("chebyshev_even(k) needs k >= 1");
    return chebyshev(2 * k);
}

// ---------------------------------------------------------------------------
// Chern numbers, Chern character numbers, Nieper's formula

/// Exponent vector over (c2, c4, ..., c_{2n}): slot k-1 holds the power of c_{2k}.
using ClassMonomial = Monomial;

inline unsigned weighted_degree(const ClassMonomial& m) {
    unsigned d = 0;
    for (std::size_t k = 0; k < m.size(); ++k) d += static_cast<unsigned>(k + 1) * m[k];
    return d;
}

/// "c2^2*c4" for {2, 1, 0}; prefix "ch" gives "ch2^2*ch4".
inline std::string monomial_key(const ClassMonomial& m, const std::string& prefix = "c") {
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += prefix + std::to_string(2 * (k + 1));
        if (m[k] > 1) s += "^" + std::to_string(m[k]);
    }
    return s.empty() ? "1" : s;
}

/// All exponent vectors of weighted degree n (partitions of n).
inline std::vector<ClassMonomial> partitions_of(unsigned n) {
    std::vector<ClassMonomial> out;
    ClassMonomial cur(n, 0);
    auto rec = [&](auto&& self, unsigned part, unsigned remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (part == 0) return;
        for (unsigned mult = remaining / part + 1; mult-- > 0;) {
            cur[part - 1] = mult;
            self(self, part - 1, remaining - mult * part);
        }
        cur[part - 1] = 0;
    };
    rec(rec, n, n);
    return out;
}

class ChernNumberTable {
public:
    /// `dim` is the complex dimension 2n.
    explicit ChernNumberTable(unsigned dim) : dim_(dim) {
        if (dim < 2 || dim % 2 != 0) throw InputError("hyperkahler dimension must be even and positive");
    }

    unsigned dim() const { return dim_; }
    unsigned half_dim() const { return dim_ / 2; }
    const std::map<ClassMonomial, BigInteger>& entries() const { return entries_; }

    /// Parses "c2^3", "c2*c4", "c6", ... Only even Chern classes are allowed.
    ClassMonomial parse_key(std::string_view key) const {
        ClassMonomial m(half_dim(), 0);
        if (key.empty()) throw InputError("empty Chern monomial");
        std::size_t pos = 0;
        auto read_int = [&](const char* what) {
            const std::size_t start = pos;
            while (pos < key.size() && key[pos] >= '0' && key[pos] <= '9') ++pos;
            if (pos == start || pos - start > 6)
                throw InputError(std::string("expected ") + what + " in Chern monomial '" + std::string(key) + "'");
            return static_cast<unsigned>(std::stoul(std::string(key.substr(start, pos - start))));
        };
        while (true) {
            if (pos >= key.size() || key[pos] != 'c')
                throw InputError("expected 'c<even>' in Chern monomial '" + std::string(key) + "'");
            ++pos;
            const unsigned index = read_int("class index");
            unsigned power = 1;
            if (pos < key.size() && key[pos] == '^') {
                ++pos;
                power = read_int("exponent");
                if (power == 0) throw InputError("zero exponent in Chern monomial '" + std::string(key) + "'");
            }
            if (index == 0 || index % 2 != 0)
                throw InputError("odd or zero Chern class c" + std::to_string(index) + " in '" + std::string(key) +
                                 "' (c1 = 0 and odd classes vanish)");
            if (index > dim_) throw InputError("Chern class c" + std::to_string(index) + " exceeds the dimension");
            m[index / 2 - 1] += power;
            if (pos == key.size()) break;
            if (key[pos] != '*') throw InputError("unexpected character in Chern monomial '" + std::string(key) + "'");
            ++pos;
        }
        if (2 * weighted_degree(m) != dim_)
            throw InputError("Chern monomial '" + std::string(key) + "' has degree " +
                             std::to_string(2 * weighted_degree(m)) + ", expected " + std::to_string(dim_));
        return m;
    }

    void set(std::string_view key, const BigInteger& value) {
        auto m = parse_key(key);
        if (!entries_.emplace(m, value).second)
            throw InputError("duplicate Chern monomial '" + std::string(key) + "'");
    }

    /// Throws listing the first missing monomial of degree dim.
    void require_complete() const {
        for (const auto& m : partitions_of(half_dim()))
            if (!entries_.count(m)) throw InputError("Chern number table is missing " + monomial_key(m));
    }

    const BigInteger& at(const ClassMonomial& m) const {
        auto it = entries_.find(m);
        if (it == entries_.end()) throw InputError("Chern number table is missing " + monomial_key(m));
        return it->second;
    }

private:
    unsigned dim_;
    std::map<ClassMonomial, BigInteger> entries_;
};

/// Integrals of the Chern character monomials ch_2^{e_1} ch_4^{e_2} ...
/// of degree 2n, keyed like ClassMonomial.
using CharacterTable = std::map<ClassMonomial, BigRational>;

/// ch_{2k} as polynomials in c2, c4, ... (c_odd = 0) via Newton's identities
/// p_j = sum_{i<j} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j, ch_j = p_j / j!.
/// Variable k-1 is c_{2k}, graded by k; result[k-1] is ch_{2k}.
inline std::vector<MultiPoly> chern_character_classes(unsigned n) {
    std::vector<Exponent> weights(n);
    for (unsigned k = 0; k < n; ++k) weights[k] = k + 1;
    const Ring ring = make_ring(std::vector<Exponent>(n, kUncapped), n, weights);
    auto e = [&](unsigned j) {  // elementary symmetric e_j = c_j
        if (j == 0) return MultiPoly::one(ring);
        if (j % 2 != 0) return MultiPoly(ring);
        return MultiPoly::variable(ring, j / 2 - 1);
    };
    std::vector<MultiPoly> p(2 * n + 1, MultiPoly(ring));
    for (unsigned j = 1; j <= 2 * n; ++j) {
        MultiPoly acc(ring);
        for (unsigned i = 1; i < j; ++i) acc = acc + BigRational(i % 2 == 1 ? 1 : -1) * (e(i) * p[j - i]);
        acc = acc + BigRational(j % 2 == 1 ? long(j) : -long(j)) * e(j);
        p[j] = acc;
    }
    std::vector<MultiPoly> ch;
    for (unsigned k = 1; k <= n; ++k) ch.push_back(BigRational(1, factorial(2 * k)) * p[2 * k]);
    return ch;
}

inline CharacterTable chern_to_character(const ChernNumberTable& table) {
    table.require_complete();
    const unsigned n = table.half_dim();
    const auto ch = chern_character_classes(n);
    const Ring& ring = ch.front().ring_ptr();
    CharacterTable out;
    for (const auto& m : partitions_of(n)) {
        MultiPoly product = MultiPoly::one(ring);
        for (unsigned k = 0; k < n; ++k) product = product * pow(ch[k], m[k]);
        BigRational integral = 0;
        for (const auto& [cm, coeff] : product.terms()) integral += coeff * BigRational(table.at(cm));
        out.emplace(m, integral);
    }
    return out;
}

/// Coefficients of monomials T_2^{e_1} T_4^{e_2} ... in chi before the
/// Chebyshev polynomials are substituted.
using ChebyshevExpression = std::map<ClassMonomial, BigRational>;

struct NieperResult {
    ChebyshevExpression chebyshev_form;
    ChiPolynomial chi;  // in lambda
};

inline std::string to_string(const ChebyshevExpression& expr) {
    std::string s;
    for (const auto& [m, c] : expr) {
        if (c == 0) continue;
        const bool negative = sgn(c) < 0;
        s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        const BigRational mag = abs(c);
        const std::string mono = monomial_key(m, "T");
        if (mono == "1")
            s += to_display_string(mag);
        else
            s += (mag == 1 ? "" : to_display_string(mag) + "·") + mono;
    }
    return s.empty() ? "0" : s;
}

inline NieperResult nieper_chi(const ChernNumberTable& table) {
    const CharacterTable ch_numbers = chern_to_character(table);
    const unsigned n = table.half_dim();

    // exp(sum_k a_k y_k) with y_k = ch_{2k} T_{2k} of weight k, a_k = -B_{2k}/(2k).
    std::vector<Exponent> weights(n);
    for (unsigned k = 0; k < n; ++k) weights[k] = k + 1;
    const Ring ring = make_ring(std::vector<Exponent>(n, kUncapped), n, weights);
    const auto bern = bernoulli_table(2 * n);
    MultiPoly exponent(ring);
    for (unsigned k = 1; k <= n; ++k)
        exponent = exponent + MultiPoly::variable(ring, k - 1, BigRational(-bern[2 * k] / (2 * k)));
    MultiPoly series = MultiPoly::one(ring), power = MultiPoly::one(ring);
    for (unsigned j = 1; j <= n; ++j) {
        power = power * exponent;
        series = series + BigRational(1, factorial(j)) * power;
    }

    NieperResult out{{}, {ChiVariable::lambda, {}}};
    const MultiPoly top = graded_part(series, n);
    for (const auto& [m, coeff] : top.terms()) {
        const BigRational value = coeff * ch_numbers.at(m);
        if (value != 0) out.chebyshev_form.emplace(m, value);
    }

    // T_{2k}(sqrt(u)) as a polynomial in u, then u = 1 + lambda/4.
    const UniPoly u_of_lambda = UniPoly::linear(1, BigRational(1, 4));
    std::vector<UniPoly> t_of_lambda;
    for (unsigned k = 1; k <= n; ++k) t_of_lambda.push_back(chebyshev_even(k).even_part_in_square().compose(u_of_lambda));
    UniPoly chi;
    for (const auto& [m, c] : out.chebyshev_form) {
        UniPoly term = UniPoly::constant(c);
        for (unsigned k = 0; k < n; ++k) term = term * pow(t_of_lambda[k], m[k]);
        chi = chi + term;
    }
    out.chi.poly = std::move(chi);
    return out;
}

}  // namespace toddkit::hk
