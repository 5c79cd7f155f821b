#pragma once

// Chern and Todd classes of complete-intersection Calabi-Yau manifolds
// X = [n|q] in products of projective spaces, and fake-effectivity
// certificates for td_4 and c_2.
//
// Two independent routes to the Chern classes:
//  * adjunction series: c(X) = prod_r (1+H_r)^{n_r+1} / prod_alpha (1 + Q_alpha)
//  * closed coefficient formulas for c_2^{rs} and c_4^{rstu}
// The B-coefficients of 2880*td_4 = 4(3c_2^2 - c_4) are evaluated from their
// own closed forms and reassembled against the series route.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toddkit/config.hpp"
#include "toddkit/errors.hpp"
#include "toddkit/exactpoly.hpp"
#include "toddkit/intersect.hpp"
#include "toddkit/lemmas.hpp"

namespace toddkit::cicy {

// ---------------------------------------------------------------------------
// Rings

/// Ambient caps plus a total-degree cap of 4: enough for c_1..c_4.
inline Ring chern_ring(const ConfigMatrix& cfg) {
    return make_ring(std::vector<Exponent>(cfg.dims().begin(), cfg.dims().end()), 4);
}

/// Q[H_1..H_m] truncated only above degree 4. Here no relation H_r^{n_r+1}
/// hides a coefficient, so it is the ring for coefficient comparisons.
inline Ring comparison_ring(const ConfigMatrix& cfg) { return free_ring(cfg.factor_count(), 4); }

// ---------------------------------------------------------------------------
// Series route

inline MultiPoly total_chern(const ConfigMatrix& cfg, const Ring& ring) {
    if (ring->var_count() != cfg.factor_count()) throw RingMismatch();
    const MultiPoly one = MultiPoly::one(ring);
    MultiPoly tangent = one;
    for (std::size_t r = 0; r < cfg.factor_count(); ++r)
        tangent = tangent * pow(one + MultiPoly::variable(ring, r), cfg.n(r) + 1);
    MultiPoly normal = one;
    for (std::size_t a = 0; a < cfg.equation_count(); ++a) normal = normal * (one + divisor_class(cfg, a, ring));
    return tangent * series_inverse(normal);
}

inline MultiPoly total_chern(const ConfigMatrix& cfg) { return total_chern(cfg, chern_ring(cfg)); }

/// td_4 = (3 c_2^2 - c_4) / 720 via the series route, computed in the
/// comparison ring and then read in `target`.
inline MultiPoly td4_class(const ConfigMatrix& cfg, const Ring& target) {
    const MultiPoly c = total_chern(cfg, comparison_ring(cfg));
    const MultiPoly c2 = graded_part(c, 2);
    const MultiPoly c4 = graded_part(c, 4);
    const MultiPoly td4 = BigRational(1, 720) * (BigRational(3) * (c2 * c2) - c4);
    return recast(td4, target);
}

/// Lift of td_4(X) to the ambient cohomology ring.
inline MultiPoly td4_class(const ConfigMatrix& cfg) { return td4_class(cfg, AmbientSpace::of(cfg).ring()); }

inline MultiPoly c2_class(const ConfigMatrix& cfg, const Ring& target) {
    return recast(graded_part(total_chern(cfg, comparison_ring(cfg)), 2), target);
}
inline MultiPoly c2_class(const ConfigMatrix& cfg) { return c2_class(cfg, AmbientSpace::of(cfg).ring()); }

// ---------------------------------------------------------------------------
// Closed coefficient formulas

using Matrix = std::vector<std::vector<BigRational>>;

namespace detail {

/// sum_alpha prod_{i} q_alpha^{idx_i}
template <std::size_t N>
BigRational degree_moment(const ConfigMatrix& cfg, const std::array<std::size_t, N>& idx) {
    BigRational acc = 0;
    for (std::size_t a = 0; a < cfg.equation_count(); ++a) {
        BigRational term = 1;
        for (std::size_t r : idx) term *= cfg.q(a, r);
        acc += term;
    }
    return acc;
}

inline BigRational moment(const ConfigMatrix& cfg, std::size_t r, std::size_t s) {
    return degree_moment<2>(cfg, {r, s});
}

}  // namespace detail

/// c_2^{rs} = 1/2 [ -(n_r+1) delta^{rs} + sum_alpha q_alpha^r q_alpha^s ].
inline Matrix c2_coeffs(const ConfigMatrix& cfg) {
    const std::size_t m = cfg.factor_count();
    Matrix c2(m, std::vector<BigRational>(m));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) {
            BigRational v = detail::moment(cfg, r, s);
            if (r == s) v -= cfg.n(r) + 1;
            c2[r][s] = v / 2;
        }
    return c2;
}

/// Fully symmetric rank-4 tensor indexed by (r,s,t,u) in [0,m)^4.
class SymmetricTensor4 {
public:
    explicit SymmetricTensor4(std::size_t m) : m_(m), v_(m * m * m * m) {}
    std::size_t size() const { return m_; }
    const BigRational& operator()(std::size_t r, std::size_t s, std::size_t t, std::size_t u) const {
        return v_[((r * m_ + s) * m_ + t) * m_ + u];
    }
    BigRational& at(std::size_t r, std::size_t s, std::size_t t, std::size_t u) {
        return v_[((r * m_ + s) * m_ + t) * m_ + u];
    }

private:
    std::size_t m_;
    std::vector<BigRational> v_;
};

/// c_4^{rstu} = 1/4 [ -(n_r+1) delta^{rstu} + sum_alpha q^r q^s q^t q^u + 2 c_2^{rs} c_2^{tu} ],
/// symmetrized over the index permutations (only the c_2 c_2 term needs it).
inline SymmetricTensor4 c4_coeffs(const ConfigMatrix& cfg) {
    const std::size_t m = cfg.factor_count();
    const Matrix c2 = c2_coeffs(cfg);
    SymmetricTensor4 out(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
                for (std::size_t u = 0; u < m; ++u) {
                    BigRational v = detail::degree_moment<4>(cfg, {r, s, t, u});
                    if (r == s && s == t && t == u) v -= cfg.n(r) + 1;
                    v += BigRational(2, 3) * (c2[r][s] * c2[t][u] + c2[r][t] * c2[s][u] + c2[r][u] * c2[s][t]);
                    out.at(r, s, t, u) = v / 4;
                }
    return out;
}

/// sum_{r,s} c_2^{rs} H_r H_s.
inline MultiPoly c2_from_coeffs(const Matrix& c2, const Ring& ring) {
    MultiPoly acc(ring);
    for (std::size_t r = 0; r < c2.size(); ++r)
        for (std::size_t s = 0; s < c2.size(); ++s)
            acc = acc + c2[r][s] * (MultiPoly::variable(ring, r) * MultiPoly::variable(ring, s));
    return acc;
}

inline MultiPoly c4_from_coeffs(const SymmetricTensor4& c4, const Ring& ring) {
    const std::size_t m = c4.size();
    MultiPoly::Terms acc;
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t)
                for (std::size_t u = 0; u < m; ++u) {
                    Monomial mono(m, 0);
                    ++mono[r], ++mono[s], ++mono[t], ++mono[u];
                    auto [it, fresh] = acc.try_emplace(mono, c4(r, s, t, u));
                    if (!fresh) it->second += c4(r, s, t, u);
                }
    return MultiPoly::from_terms(ring, std::move(acc));
}

// ---------------------------------------------------------------------------
// B-coefficients of 2880 td_4 in the J-monomial basis

enum class BKind { rrrr, rrrs, rrss, rrst, rstu };

struct BEntry {
    BKind kind;
    /// 0-based indices: rrrr {r}, rrrs {r,s}, rrss {r,s}, rrst {r,s,t}, rstu {r,s,t,u}.
    std::vector<std::size_t> idx;
    BigRational value;

    /// Exponent vector of the J-monomial this entry multiplies.
    Monomial exponents(std::size_t m) const {
        Monomial e(m, 0);
        switch (kind) {
            case BKind::rrrr: e[idx[0]] = 4; break;
            case BKind::rrrs: e[idx[0]] = 3, e[idx[1]] = 1; break;
            case BKind::rrss: e[idx[0]] = 2, e[idx[1]] = 2; break;
            case BKind::rrst: e[idx[0]] = 2, e[idx[1]] = 1, e[idx[2]] = 1; break;
            case BKind::rstu: for (auto i : idx) e[i] = 1; break;
        }
        return e;
    }

    /// e.g. "B^{1112}" with 1-based indices as in the printed formula.
    std::string label() const {
        std::vector<std::size_t> full;
        switch (kind) {
            case BKind::rrrr: full = {idx[0], idx[0], idx[0], idx[0]}; break;
            case BKind::rrrs: full = {idx[0], idx[0], idx[0], idx[1]}; break;
            case BKind::rrss: full = {idx[0], idx[0], idx[1], idx[1]}; break;
            case BKind::rrst: full = {idx[0], idx[0], idx[1], idx[2]}; break;
            case BKind::rstu: full = idx; break;
        }
        std::string s = "B^{";
        for (std::size_t i = 0; i < full.size(); ++i) {
            if (i && (full[i] >= 9 || full[i - 1] >= 9)) s += ",";
            s += std::to_string(full[i] + 1);
        }
        return s + "}";
    }
};

inline const char* to_string(BKind k) {
    switch (k) {
        case BKind::rrrr: return "rrrr";
        case BKind::rrrs: return "rrrs";
        case BKind::rrss: return "rrss";
        case BKind::rrst: return "rrst";
        case BKind::rstu: return "rstu";
    }
    return "?";
}

class BTable {
public:
    explicit BTable(std::size_t m) : m_(m) {}
    std::size_t factor_count() const { return m_; }
    const std::vector<BEntry>& entries() const { return entries_; }
    void add(BEntry e) { entries_.push_back(std::move(e)); }

    /// Value of the entry of `kind` with these indices. B^{rrss} is also
    /// found as (s,r), matching the convention B^{rrss} = B^{ssrr}.
    const BigRational& at(BKind kind, std::vector<std::size_t> idx) const {
        for (const auto& e : entries_)
            if (e.kind == kind && e.idx == idx) return e.value;
        if (kind == BKind::rrss && idx.size() == 2) return at(kind, {idx[1], idx[0]});
        throw DomainError("no such B entry");
    }

    /// sum_entries B * (J-monomial), read in `ring`.
    MultiPoly reassemble(const Ring& ring) const {
        MultiPoly::Terms acc;
        for (const auto& e : entries_) {
            auto [it, fresh] = acc.try_emplace(e.exponents(m_), e.value);
            if (!fresh) it->second += e.value;
        }
        return MultiPoly::from_terms(ring, std::move(acc));
    }

private:
    std::size_t m_;
    std::vector<BEntry> entries_;
};

inline BTable b_coefficients(const ConfigMatrix& cfg) {
    using detail::degree_moment;
    using detail::moment;
    const std::size_t m = cfg.factor_count();
    // D_r = -(n_r+1) + sum_alpha (q_alpha^r)^2
    std::vector<BigRational> D(m);
    for (std::size_t r = 0; r < m; ++r) D[r] = moment(cfg, r, r) - (cfg.n(r) + 1);
    // A^{rstu} for pairwise distinct indices, paired as (rs)(tu).
    auto A_distinct = [&](std::size_t r, std::size_t s, std::size_t t, std::size_t u) {
        return BigRational(BigRational(5, 2) * moment(cfg, r, s) * moment(cfg, t, u) -
                           degree_moment<4>(cfg, {r, s, t, u}));
    };

    BTable table(m);
    for (std::size_t r = 0; r < m; ++r) {
        BigRational v = BigRational(5, 2) * D[r] * D[r] + (cfg.n(r) + 1) - degree_moment<4>(cfg, {r, r, r, r});
        table.add({BKind::rrrr, {r}, v});
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) {
            if (r == s) continue;
            BigRational v = 10 * D[r] * moment(cfg, r, s) - 4 * degree_moment<4>(cfg, {r, r, r, s});
            table.add({BKind::rrrs, {r, s}, v});
        }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = r + 1; s < m; ++s) {
            const BigRational mrs = moment(cfg, r, s);
            BigRational v = 10 * mrs * mrs + 5 * D[r] * D[s] - 6 * degree_moment<4>(cfg, {r, s, r, s});
            table.add({BKind::rrss, {r, s}, v});
        }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = s + 1; t < m; ++t) {
                if (s == r || t == r) continue;
                BigRational v = 10 * D[r] * moment(cfg, s, t) + 20 * moment(cfg, r, s) * moment(cfg, r, t) -
                                12 * degree_moment<4>(cfg, {r, r, s, t});
                table.add({BKind::rrst, {r, s, t}, v});
            }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = r + 1; s < m; ++s)
            for (std::size_t t = s + 1; t < m; ++t)
                for (std::size_t u = t + 1; u < m; ++u) {
                    BigRational v = 8 * (A_distinct(r, s, t, u) + A_distinct(r, t, s, u) + A_distinct(r, u, s, t));
                    table.add({BKind::rstu, {r, s, t, u}, v});
                }
    return table;
}

// ---------------------------------------------------------------------------
// Sign classification

enum class BException {
    none,
    /// one equation of degree 2 in factor r, all others of degree 1
    single_two,
    /// r in R: every equation of degree 1 in factor r
    unit_row,
};

inline const char* to_string(BException e) {
    switch (e) {
        case BException::none: return "none";
        case BException::single_two: return "single-two-column";
        case BException::unit_row: return "unit-row";
    }
    return "?";
}

struct BSign {
    BEntry entry;
    int sign;
    /// Exception pattern of the entry's index r that the sign lemma allows.
    BException pattern;
    /// sign >= 0, or sign < 0 and the allowed pattern is present.
    bool consistent;
};

struct BSignReport {
    std::vector<BSign> entries;
    std::size_t negative_count = 0;
    std::size_t violations = 0;
};

/// Index alpha_0 with q_{alpha_0}^r = 2 and all other q_alpha^r = 1, if any.
inline std::optional<std::size_t> single_two_equation(const ConfigMatrix& cfg, std::size_t r) {
    std::optional<std::size_t> two;
    for (std::size_t a = 0; a < cfg.equation_count(); ++a) {
        if (cfg.q(a, r) == 1) continue;
        if (cfg.q(a, r) != 2 || two) return std::nullopt;
        two = a;
    }
    return two;
}

inline BSignReport classify_b_signs(const ConfigMatrix& cfg, const BTable& table) {
    if (!cfg.strictly_positive()) throw DomainError("sign classification needs all degrees positive");
    BSignReport report;
    for (const auto& e : table.entries()) {
        const int s = sgn(e.value);
        BException pattern = BException::none;
        if (e.kind == BKind::rrrr && single_two_equation(cfg, e.idx[0])) pattern = BException::single_two;
        if (e.kind == BKind::rrrs && cfg.in_unit_set(e.idx[0])) pattern = BException::unit_row;
        const bool consistent = s >= 0 || pattern != BException::none;
        report.negative_count += s < 0;
        report.violations += !consistent;
        report.entries.push_back({e, s, pattern, consistent});
    }
    return report;
}

inline BSignReport classify_b_signs(const ConfigMatrix& cfg) { return classify_b_signs(cfg, b_coefficients(cfg)); }

// ---------------------------------------------------------------------------
// Symbolic absorption chain
//
// 2880 td_4 is split into one group per factor r plus a remainder:
//   r not in R:  B^{rrrr} J_r^4 + sum_{s!=r} B^{rrrs} J_r^3 J_s
//   r in R:      sum_{s!=r} B^{rrrs} J_r^3 J_s + sum_{s!=r, s not in R} B^{rrss} J_r^2 J_s^2
//                + sum_{s!=r, s in R} 1/2 B^{rrss} J_r^2 J_s^2 + sum_{s<t; s,t!=r} B^{rrst} J_r^2 J_s J_t
//   remainder:   B^{rrss} with r,s not in R, B^{rrst} with r not in R, all B^{rstu}.
// Each group must push forward to an ambient polynomial with non-negative
// coefficients, and the remainder must have non-negative coefficients.

enum class AbsorptionRule { trivial, single_two, unit_row };

inline const char* to_string(AbsorptionRule r) {
    switch (r) {
        case AbsorptionRule::trivial: return "nonnegative-coefficients";
        case AbsorptionRule::single_two: return "single-two-absorption";
        case AbsorptionRule::unit_row: return "unit-row-absorption";
    }
    return "?";
}

struct AbsorptionGroup {
    std::size_t r = 0;
    bool in_unit_set = false;
    AbsorptionRule rule = AbsorptionRule::trivial;
    std::vector<std::string> negative_entries;
    /// Closed-form values and lower bounds used by the absorption step hold.
    bool bounds_hold = true;
    /// Verdict of the positive-polynomial expansion for this group's table.
    std::optional<bool> positive_poly;
    bool pushforward_nonnegative = false;
    std::optional<MultiPoly> cycle;  // the group in the comparison ring

    bool ok() const { return bounds_hold && positive_poly.value_or(true) && pushforward_nonnegative; }
};

struct SymbolicChain {
    std::vector<AbsorptionGroup> groups;
    bool remainder_nonnegative = false;
    /// groups + remainder reproduce 2880 td_4 exactly.
    bool decomposition_exact = false;
    bool ok() const {
        if (!remainder_nonnegative || !decomposition_exact) return false;
        for (const auto& g : groups)
            if (!g.ok()) return false;
        return true;
    }
};

namespace detail {

inline BigRational column_sum(const ConfigMatrix& cfg, std::size_t s) {
    BigRational acc = 0;
    for (std::size_t a = 0; a < cfg.equation_count(); ++a) acc += cfg.q(a, s);
    return acc;
}

inline MultiPoly j_monomial(const Ring& ring, std::size_t m, std::initializer_list<std::size_t> idx,
                            const BigRational& c) {
    Monomial e(m, 0);
    for (auto i : idx) ++e[i];
    return MultiPoly::monomial(ring, std::move(e), c);
}

inline bool pushforward_nonnegative(const MultiPoly& cycle, const ConfigMatrix& cfg) {
    const AmbientSpace space = AmbientSpace::of(cfg);
    return pushforward(recast(cycle, space.ring()), cfg).all_coefficients_nonnegative();
}

/// Rows q_alpha^s (s != r), with equation `halved` (if any) scaled by 1/2.
inline lemmas::QTable reduced_table(const ConfigMatrix& cfg, std::size_t r, std::optional<std::size_t> halved) {
    lemmas::QTable table;
    for (std::size_t a = 0; a < cfg.equation_count(); ++a) {
        std::vector<BigRational> row;
        for (std::size_t s = 0; s < cfg.factor_count(); ++s) {
            if (s == r) continue;
            BigRational v = cfg.q(a, s);
            if (halved && *halved == a) v /= 2;
            row.push_back(v);
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace detail

inline SymbolicChain symbolic_chain(const ConfigMatrix& cfg, const BTable& table) {
    if (!cfg.strictly_positive()) throw DomainError("absorption chain needs all degrees positive");
    const std::size_t m = cfg.factor_count();
    const std::size_t K = cfg.equation_count();
    const Ring ring = comparison_ring(cfg);
    using detail::j_monomial;

    SymbolicChain chain;
    MultiPoly total(ring);
    for (std::size_t r = 0; r < m; ++r) {
        AbsorptionGroup g;
        g.r = r;
        g.in_unit_set = cfg.in_unit_set(r);
        MultiPoly cycle(ring);
        if (!g.in_unit_set) {
            const BigRational& b4 = table.at(BKind::rrrr, {r});
            cycle = cycle + j_monomial(ring, m, {r, r, r, r}, b4);
            if (sgn(b4) < 0) g.negative_entries.push_back(BEntry{BKind::rrrr, {r}, b4}.label());
            for (std::size_t s = 0; s < m; ++s) {
                if (s == r) continue;
                const BigRational& b3 = table.at(BKind::rrrs, {r, s});
                cycle = cycle + j_monomial(ring, m, {r, r, r, s}, b3);
                if (sgn(b3) < 0) {
                    g.negative_entries.push_back(BEntry{BKind::rrrs, {r, s}, b3}.label());
                    g.bounds_hold = false;
                }
            }
            if (sgn(b4) < 0) {
                g.rule = AbsorptionRule::single_two;
                const auto two = single_two_equation(cfg, r);
                g.bounds_hold = g.bounds_hold && two && b4 == -4;
                if (two) {
                    // B^{rrrs} = 8 q_{alpha_0}^s + 16 sum_{alpha != alpha_0} q_alpha^s
                    for (std::size_t s = 0; s < m && g.bounds_hold; ++s) {
                        if (s == r) continue;
                        BigRational expect = 0;
                        for (std::size_t a = 0; a < K; ++a) expect += (a == *two ? 8 : 16) * cfg.q(a, s);
                        g.bounds_hold = table.at(BKind::rrrs, {r, s}) == expect;
                    }
                    if (m >= 2) {
                        const auto res = lemmas::positive_poly_expand(detail::reduced_table(cfg, r, two));
                        g.positive_poly = res.all_nonnegative && res.closed_form_matches;
                    }
                }
            }
        } else {
            g.rule = AbsorptionRule::unit_row;
            for (std::size_t s = 0; s < m; ++s) {
                if (s == r) continue;
                const BigRational& b3 = table.at(BKind::rrrs, {r, s});
                cycle = cycle + j_monomial(ring, m, {r, r, r, s}, b3);
                if (sgn(b3) < 0) g.negative_entries.push_back(BEntry{BKind::rrrs, {r, s}, b3}.label());
                g.bounds_hold = g.bounds_hold && b3 == -4 * detail::column_sum(cfg, s);

                const BigRational& b22 = table.at(BKind::rrss, {std::min(r, s), std::max(r, s)});
                const BigRational share = cfg.in_unit_set(s) ? BigRational(b22 / 2) : b22;
                cycle = cycle + j_monomial(ring, m, {r, r, s, s}, share);
                const BigRational cs = detail::column_sum(cfg, s);
                // 1/2 B^{rrss} >= 4 (sum q^s)^2 needs K >= 3; for K <= 2, J_r^2 = 0.
                if (K >= 3) g.bounds_hold = g.bounds_hold && share >= 4 * cs * cs;
            }
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t t = s + 1; t < m; ++t) {
                    if (s == r || t == r) continue;
                    const BigRational& b211 = table.at(BKind::rrst, {r, s, t});
                    cycle = cycle + j_monomial(ring, m, {r, r, s, t}, b211);
                    g.bounds_hold =
                        g.bounds_hold && b211 >= 8 * detail::column_sum(cfg, s) * detail::column_sum(cfg, t);
                }
            if (m >= 2 && K >= 3) {
                const auto res = lemmas::positive_poly_expand(detail::reduced_table(cfg, r, std::nullopt));
                g.positive_poly = res.all_nonnegative && res.closed_form_matches;
            }
        }
        g.pushforward_nonnegative = detail::pushforward_nonnegative(cycle, cfg);
        g.cycle = cycle;
        total = total + cycle;
        chain.groups.push_back(std::move(g));
    }

    MultiPoly remainder(ring);
    bool remainder_ok = true;
    for (const auto& e : table.entries()) {
        bool leftover = false;
        switch (e.kind) {
            case BKind::rrss: leftover = !cfg.in_unit_set(e.idx[0]) && !cfg.in_unit_set(e.idx[1]); break;
            case BKind::rrst: leftover = !cfg.in_unit_set(e.idx[0]); break;
            case BKind::rstu: leftover = true; break;
            default: break;
        }
        if (!leftover) continue;
        remainder_ok = remainder_ok && sgn(e.value) >= 0;
        remainder = remainder + MultiPoly::monomial(ring, e.exponents(m), e.value);
    }
    chain.remainder_nonnegative = remainder_ok;
    chain.decomposition_exact = (total + remainder) == BigRational(2880) * td4_class(cfg, ring);
    return chain;
}

// ---------------------------------------------------------------------------
// Effectivity certificates

enum class Method { symbolic_chain, sampling, both };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::symbolic_chain: return "symbolic-chain";
        case Method::sampling: return "sampling";
        case Method::both: return "both";
    }
    return "?";
}

struct EffectivityCertificate {
    std::string config_id;
    std::string notation;
    std::string checked_class;  // "td4" or "c2"
    Method method = Method::both;
    std::uint64_t seed = 0;
    std::size_t sample_count = 0;
    BigRational minimum_pairing;
    std::vector<BigRational> minimizer;
    std::optional<SymbolicChain> chain;
    /// For c2: every c_2^{rs} >= 0, so c_2 is a non-negative sum of J_r J_s.
    std::optional<bool> coefficients_nonnegative;
    bool effective = false;
};

namespace detail {

inline void run_sampling(EffectivityCertificate& cert, const MultiPoly& pushed, const ConfigMatrix& cfg,
                         unsigned power, std::size_t samples, std::uint64_t seed) {
    const AmbientSpace space = AmbientSpace::of(cfg);
    const auto nef = sample_nef(space, samples, seed);
    cert.seed = seed;
    cert.sample_count = nef.size();
    bool first = true;
    for (const auto& L : nef) {
        const BigRational value = ambient_pairing(pushed, pow(L.as_class(space.ring()), power), space);
        if (first || value < cert.minimum_pairing) {
            cert.minimum_pairing = value;
            cert.minimizer = L.weights();
            first = false;
        }
    }
}

}  // namespace detail

/// Pairings of td_4 with L^{dim-4} over sampled nef L, plus the symbolic chain.
inline EffectivityCertificate check_td4_fake_effective(const ConfigMatrix& cfg, std::size_t samples,
                                                       std::uint64_t seed) {
    if (cfg.dim() < 4) throw DomainError("td4 pairing needs dim X >= 4, got " + std::to_string(cfg.dim()));
    if (!cfg.strictly_positive()) throw DomainError("td4 certificate needs all degrees positive");
    EffectivityCertificate cert;
    cert.config_id = cfg.id();
    cert.notation = cfg.notation();
    cert.checked_class = "td4";
    cert.method = Method::both;
    const MultiPoly pushed = pushforward(td4_class(cfg), cfg);
    detail::run_sampling(cert, pushed, cfg, static_cast<unsigned>(cfg.dim() - 4), samples, seed);
    cert.chain = symbolic_chain(cfg, b_coefficients(cfg));
    cert.effective = sgn(cert.minimum_pairing) >= 0 && cert.chain->ok();
    return cert;
}

inline EffectivityCertificate check_c2_fake_effective(const ConfigMatrix& cfg, std::size_t samples,
                                                      std::uint64_t seed) {
    if (cfg.dim() < 2) throw DomainError("c2 pairing needs dim X >= 2, got " + std::to_string(cfg.dim()));
    EffectivityCertificate cert;
    cert.config_id = cfg.id();
    cert.notation = cfg.notation();
    cert.checked_class = "c2";
    cert.method = Method::both;
    const MultiPoly pushed = pushforward(c2_class(cfg), cfg);
    detail::run_sampling(cert, pushed, cfg, static_cast<unsigned>(cfg.dim() - 2), samples, seed);
    bool nonneg = true;
    for (const auto& row : c2_coeffs(cfg))
        for (const auto& v : row) nonneg = nonneg && sgn(v) >= 0;
    cert.coefficients_nonnegative = nonneg;
    cert.effective = sgn(cert.minimum_pairing) >= 0 && nonneg;
    return cert;
}

// ---------------------------------------------------------------------------
// Random configurations

struct RandomConfigOptions {
    unsigned max_factors = 4;   // m
    unsigned max_factor_dim = 7;  // n_r
    int min_dim = 1;
    int max_dim = 1000;
    bool strictly_positive = true;
};

/// Draws n_r and K, then fills each row r with a composition of n_r + 1
/// into K parts, so the Calabi-Yau row sums hold by construction. Draws
/// whose dimension falls outside [min_dim, max_dim] are rejected.
template <class Engine>
ConfigMatrix random_config(Engine& rng, const RandomConfigOptions& opt) {
    auto uniform = [&rng](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        const unsigned m = uniform(1, opt.max_factors);
        const unsigned K = uniform(1, opt.max_factor_dim + 1);
        RawConfig raw;
        bool feasible = true;
        for (unsigned r = 0; r < m && feasible; ++r) {
            const unsigned lo = opt.strictly_positive ? std::max(1u, K - 1) : 1u;
            feasible = lo <= opt.max_factor_dim;
            if (feasible) raw.dims.push_back(uniform(lo, opt.max_factor_dim));
        }
        if (!feasible) continue;
        long long dim = -static_cast<long long>(K);
        for (long long n : raw.dims) dim += n;
        if (dim < opt.min_dim || dim > opt.max_dim) continue;

        raw.degrees.assign(K, std::vector<long long>(m, 0));
        for (unsigned r = 0; r < m; ++r) {
            const unsigned total = static_cast<unsigned>(raw.dims[r]) + 1;
            if (opt.strictly_positive) {
                // K-1 distinct cut points in 1..total-1.
                std::vector<unsigned> cuts(total - 1);
                for (unsigned i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
                for (unsigned i = 0; i + 1 < K; ++i) std::swap(cuts[i], cuts[uniform(i, static_cast<unsigned>(cuts.size()) - 1)]);
                cuts.resize(K - 1);
                std::sort(cuts.begin(), cuts.end());
                unsigned prev = 0;
                for (unsigned a = 0; a + 1 < K; ++a) raw.degrees[a][r] = cuts[a] - prev, prev = cuts[a];
                raw.degrees[K - 1][r] = total - prev;
            } else {
                for (unsigned unit = 0; unit < total; ++unit) ++raw.degrees[uniform(0, K - 1)][r];
            }
        }
        return validate_config(raw);
    }
    throw DomainError("random_config: no configuration satisfies the requested bounds");
}

}  // namespace toddkit::cicy
