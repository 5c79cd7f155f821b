#include <gtest/gtest.h>

#include "toddkit/nonvanishing.hpp"

using namespace toddkit;
using namespace toddkit::nv;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

MultiPoly constant(const BigRational& c) { return MultiPoly::constant(vanishing_ring(), c); }

}  // namespace

TEST(Bound, Table) {
    EXPECT_EQ(min_nonvanishing_bound(3), 1u);
    EXPECT_EQ(min_nonvanishing_bound(4), 1u);
    EXPECT_EQ(min_nonvanishing_bound(7), 3u);
    EXPECT_EQ(min_nonvanishing_bound(10), 5u);
    EXPECT_EQ(min_nonvanishing_bound(2), 1u);
    EXPECT_THROW(min_nonvanishing_bound(1), DomainError);
}

TEST(Bound, MatchesParityCases) {
    for (unsigned k = 1; k <= 50; ++k) EXPECT_EQ(min_nonvanishing_bound(2 * k + 1), k);
    for (unsigned k = 0; k <= 50; ++k) {
        EXPECT_EQ(min_nonvanishing_bound(4 * k + 2), 2 * k + 1);
        EXPECT_EQ(min_nonvanishing_bound(4 * k + 4), 2 * k + 1);
    }
}

TEST(VanishingPoly, Examples) {
    const auto ring = vanishing_ring();
    const auto t = MultiPoly::variable(ring, 0), beta = MultiPoly::variable(ring, 1);
    const auto one = MultiPoly::one(ring);
    EXPECT_EQ(chi_vanishing_poly(3, {0, 1, -1}), t * (t * t - one));
    EXPECT_EQ(chi_vanishing_poly(6, {1, -1, 2, -2, 3, -3}),
              (t * t - one) * (t * t - constant(4)) * (t * t - constant(9)));
    EXPECT_EQ(chi_vanishing_poly(4, {1, -1}, true), (t * t - one) * (t * t - beta));
}

TEST(VanishingPoly, ParityViolations) {
    EXPECT_THROW(chi_vanishing_poly(3, {1, -1, 2}), DomainError);   // not symmetric
    EXPECT_THROW(chi_vanishing_poly(4, {0, 1, -1, 0, 0}), DomainError);  // odd zero count, even dim
    EXPECT_THROW(chi_vanishing_poly(3, {1, -1, 2, -2}), DomainError);  // wrong degree and parity
    EXPECT_THROW(chi_vanishing_poly(6, {1, -1}), DomainError);  // wrong degree
    EXPECT_THROW(chi_vanishing_poly(0, {}), DomainError);
}

TEST(VanishingPoly, SymmetryUnderNegation) {
    for (long dim = 2; dim <= 12; ++dim) {
        std::vector<long> roots;
        if (dim % 2) roots.push_back(0);
        for (long i = 1; static_cast<long>(roots.size()) < dim; ++i) {
            roots.push_back(i);
            roots.push_back(-i);
        }
        const auto f = chi_vanishing_poly(dim, roots);
        for (const auto& [m, c] : f.terms()) EXPECT_EQ(m[0] % 2, static_cast<Exponent>(dim % 2));
    }
}

TEST(OddCertificate, Examples) {
    EXPECT_EQ(odd_certificate(1).coefficient, constant(-1));
    EXPECT_EQ(odd_certificate(2).coefficient, constant(-5));
    EXPECT_EQ(odd_certificate(3).coefficient, constant(-14));
    EXPECT_EQ(odd_certificate(3).coefficient_power, 5u);
    EXPECT_THROW(odd_certificate(0), DomainError);
}

TEST(OddCertificate, ClosedFormForSmallK) {
    for (long k = 1; k <= 10; ++k) {
        const auto c = odd_certificate(static_cast<unsigned>(k));
        EXPECT_EQ(c.coefficient, constant(q(-k * (k + 1) * (2 * k + 1), 6)));
        EXPECT_EQ(c.dim, 2 * k + 1);
        EXPECT_EQ(c.parity, ParityCase::odd);
        EXPECT_TRUE(recheck(c));
    }
}

TEST(EvenCertificate, FourKPlusTwo) {
    EXPECT_EQ(even_certificate_4k2(0).coefficient, constant(-1));
    EXPECT_EQ(even_certificate_4k2(0).coefficient_power, 0u);
    EXPECT_EQ(even_certificate_4k2(1).coefficient, constant(-14));
    EXPECT_EQ(even_certificate_4k2(2).coefficient, constant(-55));
    for (unsigned k = 0; k <= 8; ++k) {
        const auto c = even_certificate_4k2(k);
        EXPECT_LT(c.coefficient.constant_term(), 0);
        EXPECT_EQ(c.coefficient.size(), 1u);
        EXPECT_TRUE(recheck(c));
    }
}

TEST(EvenCertificate, FourKPlusFour) {
    const auto c0 = even_certificate_4k4(0);
    const auto beta = MultiPoly::variable(vanishing_ring(), 1);
    EXPECT_EQ(c0.coefficient, -(beta + constant(1)));
    EXPECT_EQ(c0.beta_bound, std::optional<BigRational>(-1));
    EXPECT_EQ(c0.constant_factor, std::optional<BigInteger>(1));
    EXPECT_TRUE(recheck(c0));

    const auto c1 = even_certificate_4k4(1);
    EXPECT_EQ(c1.square_sum, 14);
    EXPECT_EQ(c1.constant_factor, std::optional<BigInteger>(36));
    EXPECT_EQ(c1.beta_bound, std::optional<BigRational>(-14));
    for (unsigned k = 0; k <= 6; ++k) {
        const auto c = even_certificate_4k4(k);
        EXPECT_EQ(min_nonvanishing_bound(4 * static_cast<long>(k) + 4), 2 * k + 1);
        EXPECT_TRUE(recheck(c));
        // beta-free part of the coefficient is the negative square sum
        EXPECT_EQ(c.coefficient.constant_term(), BigRational(-c.square_sum));
        EXPECT_EQ(c.coefficient.coefficient({0, 1}), -1);
    }
}

TEST(Certificates, RecheckDetectsTampering) {
    auto c = odd_certificate(3);
    c.coefficient = constant(-13);
    EXPECT_FALSE(recheck(c));
    auto e = even_certificate_4k4(1);
    e.constant_factor = BigInteger(35);
    EXPECT_FALSE(recheck(e));
    auto f = even_certificate_4k2(1);
    f.product = f.product + MultiPoly::variable(vanishing_ring(), 0);
    EXPECT_FALSE(recheck(f));
}

TEST(Certificates, DispatchByDimension) {
    EXPECT_EQ(certificate_for_dim(7).parity, ParityCase::odd);
    EXPECT_EQ(certificate_for_dim(10).parity, ParityCase::even_4k2);
    EXPECT_EQ(certificate_for_dim(10).vanishing_upto, 5u);
    EXPECT_EQ(certificate_for_dim(8).parity, ParityCase::even_4k4);
    for (long n = 2; n <= 30; ++n) {
        const auto c = certificate_for_dim(n);
        EXPECT_EQ(c.vanishing_upto, min_nonvanishing_bound(n)) << n;
        EXPECT_TRUE(recheck(c)) << n;
        EXPECT_FALSE(c.transcript.empty());
    }
    EXPECT_THROW(certificate_for_dim(1), DomainError);
}
