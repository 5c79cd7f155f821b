#include <random>

#include <gtest/gtest.h>

#include "toddkit/lemmas.hpp"

using namespace toddkit;
using namespace toddkit::lemmas;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST(IntegerLemma, CaseOneEmptyForNAtLeastTwo) {
    for (unsigned n = 2; n <= 8; ++n) EXPECT_TRUE(integer_lemma_case1({n, 50, 500}).empty()) << n;
    EXPECT_TRUE(integer_lemma_case1({8, 20, 200}).empty());
}

TEST(IntegerLemma, CaseOneNegativeControl) {
    const auto hits = integer_lemma_case1({1, 50, 500});
    EXPECT_FALSE(hits.empty());
    EXPECT_TRUE(std::binary_search(hits.begin(), hits.end(), q(1, 2)));
    EXPECT_TRUE(std::is_sorted(hits.begin(), hits.end()));
    for (const auto& h : hits) EXPECT_TRUE(integrality_decision(h, 1, IntegralityCase::one));
}

TEST(IntegerLemma, CaseTwoEmpty) {
    for (unsigned n = 1; n <= 8; ++n) EXPECT_TRUE(integer_lemma_case2({n, 50, 500}).empty()) << n;
    EXPECT_TRUE(integer_lemma_case2({5, 20, 200}).empty());
}

TEST(IntegerLemma, DecisionAgreesWithSearch) {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned qmax = 2; qmax <= 9; ++qmax) {
            const auto hits1 = integer_lemma_case1({n, qmax, 40});
            const auto hits2 = integer_lemma_case2({n, qmax, 40});
            for (long p = -40; p <= 40; ++p) {
                const BigRational lam = q(p, qmax);
                const bool direct1 = is_integer(BigRational(BigRational(n + 1) * binomial(BigRational(lam + n), n)));
                const bool direct2 = is_integer(binomial(BigRational(lam + (n + 1)), n));
                EXPECT_EQ(integrality_decision(lam, n, IntegralityCase::one), direct1);
                EXPECT_EQ(integrality_decision(lam, n, IntegralityCase::two), direct2);
                if (lam.get_den() != qmax) continue;
                EXPECT_EQ(std::binary_search(hits1.begin(), hits1.end(), lam), direct1);
                EXPECT_EQ(std::binary_search(hits2.begin(), hits2.end(), lam), direct2);
            }
        }
}

TEST(IntegerLemma, DecisionExamples) {
    EXPECT_TRUE(integrality_decision(q(2), 3, IntegralityCase::two));
    EXPECT_FALSE(integrality_decision(q(1, 2), 2, IntegralityCase::two));
    EXPECT_TRUE(integrality_decision(q(3), 2, IntegralityCase::one));
    EXPECT_TRUE(integrality_decision(q(1, 2), 1, IntegralityCase::one));
}

TEST(PositivePoly, TelescopingCase) {
    const auto r = positive_poly_expand({{q(3)}});
    EXPECT_TRUE(r.all_nonnegative);
    EXPECT_TRUE(r.closed_form_matches);
    EXPECT_EQ(r.expanded.size(), 1u);
    EXPECT_EQ(r.expanded.coefficient({0, 2}), 9);
}

TEST(PositivePoly, TwoByOne) {
    // (-x + 2y)(x + y)^2 + x^3 = 3xy^2 + 2y^3 by hand.
    const auto r = positive_poly_expand({{q(1)}, {q(1)}});
    EXPECT_TRUE(r.all_nonnegative);
    EXPECT_EQ(r.expanded.coefficient({3, 0}), 0);
    EXPECT_EQ(r.expanded.coefficient({2, 1}), 0);
    EXPECT_EQ(r.expanded.coefficient({1, 2}), 3);
    EXPECT_EQ(r.expanded.coefficient({0, 3}), 2);
    EXPECT_TRUE(r.closed_form_matches);
}

TEST(PositivePoly, RandomTables) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 2 + rng() % 3, K = 1 + rng() % 5;
        QTable table(K, std::vector<BigRational>(m - 1));
        for (auto& row : table)
            for (auto& v : row) v = q(static_cast<long>(rng() % 7), static_cast<long>(rng() % 3) + 1);
        const auto r = positive_poly_expand(table);
        EXPECT_TRUE(r.all_nonnegative);
        EXPECT_TRUE(r.closed_form_matches);
        // Top two powers of x_1 cancel.
        EXPECT_TRUE(r.closed_form_by_power[K + 1].is_zero());
        EXPECT_TRUE(r.closed_form_by_power[K].is_zero());
    }
}

TEST(PositivePoly, RejectsBadTables) {
    EXPECT_THROW(positive_poly_expand({}), DomainError);
    EXPECT_THROW(positive_poly_expand({{}}), DomainError);
    EXPECT_THROW(positive_poly_expand({{q(1)}, {q(1), q(2)}}), DomainError);
    EXPECT_THROW(positive_poly_expand({{q(-1)}}), DomainError);
}
