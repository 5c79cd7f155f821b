#include <random>

#include <gtest/gtest.h>

#include "toddkit/cicy.hpp"

using namespace toddkit;
using cicy::BKind;

namespace {

ConfigMatrix cfg(std::vector<long long> dims, std::vector<std::vector<long long>> degrees) {
    return validate_config({"", std::move(dims), std::move(degrees)});
}

BigRational euler(const ConfigMatrix& c) {
    const auto chern = cicy::total_chern(c, AmbientSpace::of(c).ring());
    return cicy_integral(graded_part(chern, static_cast<unsigned>(c.dim())), c);
}

std::vector<ConfigMatrix> sweep(std::uint64_t seed, int count, int min_dim, int max_dim) {
    std::mt19937_64 rng(seed);
    cicy::RandomConfigOptions opt;
    opt.min_dim = min_dim;
    opt.max_dim = max_dim;
    std::vector<ConfigMatrix> out;
    for (int i = 0; i < count; ++i) out.push_back(cicy::random_config(rng, opt));
    return out;
}

}  // namespace

TEST(Chern, QuinticTotalClass) {
    const auto q = cfg({4}, {{5}});
    const auto c = cicy::total_chern(q);
    EXPECT_EQ(graded_part(c, 1), MultiPoly(c.ring_ptr()));
    EXPECT_EQ(graded_part(c, 2), MultiPoly::monomial(c.ring_ptr(), {2}, 10));
    EXPECT_EQ(c.coefficient({3}), -40);
    const auto j = MultiPoly::variable(AmbientSpace::of(q).ring(), 0);
    EXPECT_EQ(cicy_integral(cicy::c2_class(q) * j, q), 50);
    EXPECT_EQ(euler(q), -200);
}

TEST(Chern, KnownEulerNumbers) {
    EXPECT_EQ(euler(cfg({5}, {{3}, {3}})), -144);
    EXPECT_EQ(euler(cfg({5}, {{4}, {2}})), -176);
    EXPECT_EQ(euler(cfg({6}, {{3}, {2}, {2}})), -144);
    EXPECT_EQ(euler(cfg({7}, {{2}, {2}, {2}, {2}})), -128);
    EXPECT_EQ(euler(cfg({2, 2}, {{3, 3}})), -162);
    EXPECT_EQ(euler(cfg({1, 1, 1, 1}, {{2, 2, 2, 2}})), -128);
    EXPECT_EQ(euler(cfg({5}, {{6}})), 2610);
    EXPECT_EQ(euler(cfg({3}, {{4}})), 24);
}

TEST(Chern, FirstChernClassVanishes) {
    for (const auto& c : sweep(11, 100, 1, 12))
        EXPECT_TRUE(graded_part(cicy::total_chern(c, cicy::comparison_ring(c)), 1).is_zero()) << c.notation();
}

TEST(Chern, SurfacesHaveC2Equal24) {
    for (const auto& c : sweep(12, 100, 2, 2)) EXPECT_EQ(cicy_integral(cicy::c2_class(c), c), 24) << c.notation();
}

TEST(Todd, FourfoldsHaveChiO2) {
    for (const auto& c : sweep(13, 100, 4, 4)) EXPECT_EQ(cicy_integral(cicy::td4_class(c), c), 2) << c.notation();
}

TEST(Todd, SexticTd4) {
    const auto s = cfg({5}, {{6}});
    const auto td4 = cicy::td4_class(s);
    EXPECT_EQ(make_rational(2880) * td4, MultiPoly::monomial(td4.ring_ptr(), {4}, 960));
    EXPECT_EQ(cicy_integral(td4, s), 2);
    EXPECT_EQ(cicy::b_coefficients(s).at(BKind::rrrr, {0}), 960);
}

TEST(CrossMethod, ClosedFormulasMatchSeries) {
    for (const auto& c : sweep(14, 150, 1, 12)) {
        const auto ring = cicy::comparison_ring(c);
        const auto series = cicy::total_chern(c, ring);
        EXPECT_EQ(cicy::c2_from_coeffs(cicy::c2_coeffs(c), ring), graded_part(series, 2)) << c.notation();
        EXPECT_EQ(cicy::c4_from_coeffs(cicy::c4_coeffs(c), ring), graded_part(series, 4)) << c.notation();
        EXPECT_EQ(cicy::b_coefficients(c).reassemble(ring), make_rational(2880) * cicy::td4_class(c, ring))
            << c.notation();
    }
}

TEST(CrossMethod, NonStrictConfigurations) {
    std::mt19937_64 rng(15);
    cicy::RandomConfigOptions opt;
    opt.strictly_positive = false;
    for (int i = 0; i < 60; ++i) {
        const auto c = cicy::random_config(rng, opt);
        const auto ring = cicy::comparison_ring(c);
        EXPECT_EQ(cicy::b_coefficients(c).reassemble(ring), make_rational(2880) * cicy::td4_class(c, ring))
            << c.notation();
    }
}

TEST(CrossMethod, C4TensorIsSymmetric) {
    const auto c = cfg({3, 2, 2}, {{2, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    const auto t = cicy::c4_coeffs(c);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t u = 0; u < 3; ++u) {
                EXPECT_EQ(t(r, s, u, 0), t(s, r, 0, u));
                EXPECT_EQ(t(r, s, u, 0), t(0, u, s, r));
            }
}

TEST(BCoefficients, SingleTwoColumnGivesMinusFour) {
    // Factor 1 carries degrees (2,1,1): one equation of degree 2, the rest 1.
    for (const auto& c : {cfg({3, 4}, {{2, 1}, {1, 1}, {1, 3}}), cfg({3, 3}, {{2, 2}, {1, 1}, {1, 1}}),
                          cfg({3, 2, 5}, {{2, 1, 2}, {1, 1, 2}, {1, 1, 2}})}) {
        const auto table = cicy::b_coefficients(c);
        EXPECT_EQ(table.at(BKind::rrrr, {0}), -4) << c.notation();
        ASSERT_TRUE(cicy::single_two_equation(c, 0).has_value());
        EXPECT_EQ(*cicy::single_two_equation(c, 0), 0u);
    }
}

TEST(BCoefficients, UnitRowGivesMinusFourColumnSum) {
    const auto c = cfg({2, 4, 3}, {{1, 2, 1}, {1, 2, 2}, {1, 1, 1}});
    ASSERT_TRUE(c.in_unit_set(0));
    const auto table = cicy::b_coefficients(c);
    EXPECT_EQ(table.at(BKind::rrrs, {0, 1}), -4 * 5);
    EXPECT_EQ(table.at(BKind::rrrs, {0, 2}), -4 * 4);
}

TEST(BCoefficients, RrssIsSymmetric) {
    const auto c = cfg({3, 4}, {{2, 1}, {1, 1}, {1, 3}});
    const auto table = cicy::b_coefficients(c);
    EXPECT_EQ(table.at(BKind::rrss, {0, 1}), table.at(BKind::rrss, {1, 0}));
    EXPECT_THROW(table.at(BKind::rstu, {0, 1, 2, 3}), DomainError);
}

TEST(BCoefficients, EntryCountAndLabels) {
    const auto c = cfg({2, 2, 2, 2}, {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
    const auto table = cicy::b_coefficients(c);
    // m + m(m-1) + C(m,2) + m C(m-1,2) + C(m,4) for m = 4
    EXPECT_EQ(table.entries().size(), 4u + 12u + 6u + 12u + 1u);
    EXPECT_EQ(table.entries().front().label(), "B^{1111}");
    for (const auto& e : table.entries())
        if (e.kind == BKind::rstu) {
            EXPECT_EQ(e.label(), "B^{1234}");
        }
}

TEST(BSigns, SweepHasNoViolations) {
    std::size_t negatives = 0;
    for (const auto& c : sweep(16, 500, 1, 1000)) {
        const auto report = cicy::classify_b_signs(c);
        EXPECT_EQ(report.violations, 0u) << c.notation();
        negatives += report.negative_count;
        for (const auto& s : report.entries) {
            if (s.sign >= 0) continue;
            if (s.entry.kind == BKind::rrrr) {
                EXPECT_EQ(s.entry.value, -4) << c.notation();
            }
            if (s.entry.kind == BKind::rrrs) {
                BigRational col = 0;
                for (std::size_t a = 0; a < c.equation_count(); ++a) col += c.q(a, s.entry.idx[1]);
                EXPECT_EQ(s.entry.value, -4 * col) << c.notation();
            }
        }
    }
    EXPECT_GT(negatives, 0u);  // the sweep exercises both exception patterns
}

TEST(BSigns, RequiresStrictPositivity) {
    EXPECT_THROW(cicy::classify_b_signs(cfg({4, 1}, {{5, 0}, {0, 2}})), DomainError);
}

TEST(Chain, SweepCertifiesAllGroups) {
    for (const auto& c : sweep(17, 150, 4, 8)) {
        const auto chain = cicy::symbolic_chain(c, cicy::b_coefficients(c));
        EXPECT_TRUE(chain.decomposition_exact) << c.notation();
        EXPECT_TRUE(chain.remainder_nonnegative) << c.notation();
        for (const auto& g : chain.groups) EXPECT_TRUE(g.ok()) << c.notation() << " r=" << g.r + 1;
    }
}

TEST(Chain, SingleTwoGroupUsesPositivePolynomial) {
    const auto c = cfg({3, 4}, {{2, 1}, {1, 1}, {1, 3}});
    const auto chain = cicy::symbolic_chain(c, cicy::b_coefficients(c));
    ASSERT_TRUE(chain.ok());
    const auto& g = chain.groups[0];
    EXPECT_EQ(g.rule, cicy::AbsorptionRule::single_two);
    ASSERT_EQ(g.negative_entries.size(), 1u);
    EXPECT_EQ(g.negative_entries[0], "B^{1111}");
    EXPECT_EQ(g.positive_poly, std::optional<bool>(true));
}

TEST(Effectivity, Td4Sweep) {
    for (const auto& c : sweep(18, 100, 4, 8)) {
        const auto cert = cicy::check_td4_fake_effective(c, 20, 3);
        EXPECT_TRUE(cert.effective) << c.notation();
        EXPECT_GE(cert.minimum_pairing, 0) << c.notation();
        EXPECT_GE(cert.sample_count, 20u);
    }
}

TEST(Effectivity, SexticCertificate) {
    const auto cert = cicy::check_td4_fake_effective(cfg({5}, {{6}}), 20, 0);
    EXPECT_TRUE(cert.effective);
    EXPECT_EQ(cert.minimum_pairing, 2);
    EXPECT_EQ(cert.checked_class, "td4");
    EXPECT_EQ(cert.sample_count, 20u);
}

TEST(Effectivity, SamplingIsReproducible) {
    const auto c = cfg({3, 4}, {{2, 1}, {1, 1}, {1, 3}});
    const auto a = cicy::check_td4_fake_effective(c, 30, 99), b = cicy::check_td4_fake_effective(c, 30, 99);
    EXPECT_EQ(a.minimum_pairing, b.minimum_pairing);
    EXPECT_EQ(a.minimizer, b.minimizer);
}

TEST(Effectivity, PreconditionsAndC2) {
    EXPECT_THROW(cicy::check_td4_fake_effective(cfg({4}, {{5}}), 20, 0), DomainError);
    EXPECT_THROW(cicy::check_td4_fake_effective(cfg({5, 1}, {{6, 0}, {0, 2}}), 20, 0), DomainError);
    const auto cert = cicy::check_c2_fake_effective(cfg({4}, {{5}}), 20, 0);
    EXPECT_TRUE(cert.effective);
    // c2 = 10 H^2 on the quintic pairs to 50 w against w H; basis vector gives 50.
    ASSERT_EQ(cert.minimizer.size(), 1u);
    EXPECT_EQ(cert.minimum_pairing, BigRational(50) * cert.minimizer[0]);
    EXPECT_GT(cert.minimum_pairing, 0);
    for (const auto& c : sweep(19, 60, 2, 8)) EXPECT_TRUE(cicy::check_c2_fake_effective(c, 10, 1).effective);
}

TEST(RandomConfig, RespectsOptions) {
    std::mt19937_64 rng(20);
    cicy::RandomConfigOptions opt;
    opt.min_dim = 4;
    opt.max_dim = 8;
    for (int i = 0; i < 200; ++i) {
        const auto c = cicy::random_config(rng, opt);
        EXPECT_TRUE(c.strictly_positive());
        EXPECT_GE(c.dim(), 4);
        EXPECT_LE(c.dim(), 8);
        EXPECT_LE(c.factor_count(), 4u);
        for (auto n : c.dims()) EXPECT_LE(n, 7u);
    }
}
