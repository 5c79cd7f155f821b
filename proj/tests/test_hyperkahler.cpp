#include <gtest/gtest.h>

#include "toddkit/hyperkahler.hpp"

using namespace toddkit;
using namespace toddkit::hk;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

ChernNumberTable og6_table() {
    ChernNumberTable t(6);
    t.set("c2^3", 30720);
    t.set("c2*c4", 7680);
    t.set("c6", 1920);
    return t;
}

ChernNumberTable k3n2_table() {
    ChernNumberTable t(4);
    t.set("c2^2", 828);
    t.set("c4", 324);
    return t;
}

// C(Q^2) = int (e_1^2 + ... + e_b^2)^2 e_1^{2n-4}, term by term, with each monomial
// integral read off c_X (x^2 + t^2 + s^2)^n by hand-written multinomials.
BigRational c_q_squared_oracle(unsigned n, unsigned b2, const BigRational& c) {
    auto integral = [&](unsigned a, unsigned b, unsigned cc) {
        // coefficient of x^a t^b s^cc in c (x^2+t^2+s^2)^n divided by (2n)!/(a! b! cc!)
        if (a % 2 || b % 2 || cc % 2) return BigRational(0);
        const BigInteger coeff = factorial(n) / (factorial(a / 2) * factorial(b / 2) * factorial(cc / 2));
        const BigInteger multi = factorial(2 * n) / (factorial(a) * factorial(b) * factorial(cc));
        return BigRational(c * BigRational(coeff) / BigRational(multi));
    };
    // Q^2 = sum_i e_i^4 + 2 sum_{i<j} e_i^2 e_j^2, paired with e_1^{2n-4}.
    BigRational v = integral(2 * n, 0, 0);                                   // e_1^4
    v += BigRational(b2 - 1) * integral(2 * n - 4, 4, 0);                   // e_i^4, i != 1
    v += 2 * BigRational(b2 - 1) * integral(2 * n - 2, 2, 0);               // e_1^2 e_j^2
    v += BigRational((b2 - 1) * (b2 - 2)) * integral(2 * n - 4, 2, 2);      // e_i^2 e_j^2, i,j != 1
    return v;
}

}  // namespace

TEST(ChiClosedForms, HilbertScheme) {
    EXPECT_EQ(chi_hilb_q(2, 2), 6);
    EXPECT_EQ(chi_hilb_q(1, 0), 2);
    EXPECT_EQ(chi_hilb_q(3, 2), binomial(5, 3));
    EXPECT_THROW(chi_hilb_q(0, 2), DomainError);
}

TEST(ChiClosedForms, EglMatchesQForm) {
    // chi(S,H) = H^2/2 + 2 and q(H_n - rE) = H^2 - 2 r^2 (n-1).
    for (unsigned n = 1; n <= 5; ++n)
        for (long h2 = 2; h2 <= 20; h2 += 2)
            for (long r = -3; r <= 3; ++r) {
                const BigRational qv = BigRational(h2) - 2 * BigRational(r * r) * (n - 1);
                EXPECT_EQ(chi_hilb_egl(n, h2 / 2 + 2, r), chi_hilb_q(n, qv)) << n << " " << h2 << " " << r;
            }
    EXPECT_EQ(chi_hilb_egl(2, 3, 0), 6);
    EXPECT_EQ(chi_hilb_egl(1, 7, 3), 7);
}

TEST(ChiClosedForms, KummerAndOg6) {
    EXPECT_EQ(chi_og6(1), 16);
    EXPECT_EQ(chi_og6(0), 4);
    EXPECT_EQ(chi_kummer(2, q(4, 3)), 3 * binomial(3, 2));
    EXPECT_EQ(chi_kummer(2, 0), 3);
}

TEST(ChiPolynomial, MatchesClosedForms) {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto ph = chi_polynomial(HKModel::hilb_k3(n));
        const auto pk = chi_polynomial(HKModel::kummer(n));
        EXPECT_EQ(ph.variable, ChiVariable::q);
        for (long x = -6; x <= 12; ++x) {
            EXPECT_EQ(ph(q(x)), chi_hilb_q(n, q(x)));
            EXPECT_EQ(pk(q(x, 3)), chi_kummer(n, q(x, 3)));
        }
        EXPECT_EQ(ph.poly.degree(), static_cast<int>(n));
    }
    const auto p = chi_polynomial(HKModel::og6());
    EXPECT_EQ(p.to_string(), "4 + 22/3·λ + 4·λ² + 2/3·λ³");
}

TEST(ChiPolynomial, AllCoefficientsPositive) {
    for (unsigned n = 1; n <= 10; ++n)
        for (const auto& model : {HKModel::hilb_k3(n), HKModel::kummer(n)}) {
            const auto pos = todd_all_effective(model);
            EXPECT_TRUE(pos.all_effective) << model.name();
            for (const auto& c : pos.coefficients) EXPECT_GT(c, 0) << model.name();
        }
    EXPECT_TRUE(todd_all_effective(HKModel::og6()).all_effective);
}

TEST(Models, ParseSpecs) {
    EXPECT_EQ(HKModel::parse("hilb:3").name(), "hilb:3");
    EXPECT_EQ(HKModel::parse("kummer:2").family(), Family::kummer);
    EXPECT_EQ(HKModel::parse("og6").half_dim(), 3u);
    for (const char* bad : {"k3", "hilb:", "hilb:x", "og10", "kummer:-1"})
        EXPECT_THROW(HKModel::parse(bad), InputError) << bad;
    EXPECT_THROW(HKModel::parse("hilb:0"), DomainError);
}

TEST(H0Bound, Values) {
    EXPECT_EQ(h0_lower_bound(HKModel::og6()).bound, 16);
    const auto h = h0_lower_bound(HKModel::hilb_k3(2));
    EXPECT_EQ(h.bound, 6);
    EXPECT_EQ(h.lemma_case, lemmas::IntegralityCase::two);
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(h0_lower_bound(HKModel::hilb_k3(n)).bound, binomial(n + 2, n));
    for (unsigned n = 2; n <= 8; ++n)
        EXPECT_EQ(h0_lower_bound(HKModel::kummer(n)).bound, BigInteger((n + 1) * (n + 1)));
    EXPECT_THROW(h0_lower_bound(HKModel::kummer(1)), DomainError);
    EXPECT_EQ(six_dimensional_h0_bound(), 5u);
}

TEST(Fujiki, MonomialIntegralsMatchClosedForms) {
    for (unsigned n = 2; n <= 10; ++n) {
        const BigRational c = q(3, 2);
        const auto f = fujiki_monomial_integrals({n, 5, c});
        const BigRational d1 = 2 * n - 1, d3 = 2 * n - 3;
        EXPECT_EQ(f.top, c);
        EXPECT_EQ(f.two_two, c / d1);
        EXPECT_EQ(f.four_four, 3 * c / (d1 * d3));
        EXPECT_EQ(f.two_two_two, c / (d1 * d3));
    }
}

TEST(Fujiki, CQSquared) {
    EXPECT_EQ(c_q_squared({2, 3, 1}), 5);
    EXPECT_EQ(c_q_squared({3, 8, 4}), 32);
    for (unsigned n = 2; n <= 10; ++n)
        for (unsigned b2 = 1; b2 <= 30; ++b2)
            for (const auto& c : {q(1), q(1, 2), q(3)}) {
                const auto v = c_q_squared({n, b2, c});
                EXPECT_EQ(v, c_q_squared_oracle(n, b2, c)) << n << " " << b2;
                EXPECT_GT(v, 0);
            }
    EXPECT_THROW(c_q_squared({2, 3, 0}), DomainError);
    EXPECT_THROW(c_q_squared({1, 3, 1}), DomainError);
}

TEST(Fujiki, LambdaAndSqrtTdIdentity) {
    // K3^[2]: c_X = 1, C(c2) = 30, lambda = 12 q / (3 * 30) -> q = 2 gives 4/15.
    EXPECT_EQ(lambda_from_q(2, {2, 23, 1}, 30), q(4, 15));
    EXPECT_THROW(lambda_from_q(2, {2, 23, 1}, 0), DomainError);
    EXPECT_EQ(sqrt_td_pairing_identity(3, 0, q(1)), 0);
    EXPECT_EQ(sqrt_td_pairing_identity(2, 0, q(7)), 7);
    EXPECT_EQ(sqrt_td_pairing_identity(3, 2, q(1, 2)), BigRational(2 * 3 * 2) / 2);
    EXPECT_THROW(sqrt_td_pairing_identity(3, 1, 0), DomainError);
}

TEST(Fujiki, SqrtToddSeries) {
    const auto r = sqrt_todd_to_degree4();
    EXPECT_EQ(r.coefficient({1, 0}), q(1, 24));
    EXPECT_EQ(r.coefficient({2, 0}), q(7, 5760));
    EXPECT_EQ(r.coefficient({0, 1}), q(-1, 1440));
}

TEST(Special, BernoulliNumbers) {
    const std::vector<BigRational> expected = {q(1, 6), q(-1, 30), q(1, 42), q(-1, 30), q(5, 66), q(-691, 2730), q(7, 6)};
    for (unsigned k = 1; k <= expected.size(); ++k) EXPECT_EQ(bernoulli(k), expected[k - 1]);
    EXPECT_THROW(bernoulli(0), DomainError);
}

TEST(Special, ChebyshevIdentities) {
    EXPECT_EQ(chebyshev_even(1), UniPoly({q(-1), 0, q(2)}));
    EXPECT_EQ(chebyshev_even(2), UniPoly({q(1), 0, q(-8), 0, q(8)}));
    for (unsigned j = 0; j <= 16; ++j) {
        EXPECT_EQ(chebyshev(j)(q(1)), 1);
        EXPECT_EQ(chebyshev(j)(q(-1)), j % 2 ? -1 : 1);
        // T_j(T_2(x)) = T_{2j}(x)
        EXPECT_EQ(chebyshev(j).compose(chebyshev(2)), chebyshev(2 * j));
    }
}

TEST(ChernTable, KeyGrammar) {
    ChernNumberTable t(6);
    EXPECT_EQ(t.parse_key("c2^3"), (ClassMonomial{3, 0, 0}));
    EXPECT_EQ(t.parse_key("c2*c4"), (ClassMonomial{1, 1, 0}));
    EXPECT_EQ(t.parse_key("c4*c2"), (ClassMonomial{1, 1, 0}));
    EXPECT_EQ(t.parse_key("c2*c2*c2"), (ClassMonomial{3, 0, 0}));
    for (const char* bad : {"", "c3*c3", "c2^2", "c8", "c2 * c4", "c2^", "x6", "c2*", "c0*c6", "c2^0*c6", "c6*"})
        EXPECT_THROW(t.parse_key(bad), InputError) << bad;
    EXPECT_THROW(ChernNumberTable(5), InputError);
}

TEST(ChernTable, CompletenessAndDuplicates) {
    ChernNumberTable t(6);
    t.set("c2^3", 1);
    EXPECT_THROW(t.require_complete(), InputError);
    EXPECT_THROW(t.set("c2*c2*c2", 2), InputError);
    EXPECT_EQ(partitions_of(4).size(), 5u);
    EXPECT_EQ(partitions_of(6).size(), 11u);
}

TEST(Newton, CharacterClasses) {
    const auto ch = chern_character_classes(3);
    const auto& ring = ch[0].ring_ptr();
    const auto c2 = MultiPoly::variable(ring, 0), c4 = MultiPoly::variable(ring, 1), c6 = MultiPoly::variable(ring, 2);
    EXPECT_EQ(ch[0], -c2);
    EXPECT_EQ(ch[1], q(1, 12) * (c2 * c2 - q(2) * c4));
    EXPECT_EQ(ch[2], q(1, 360) * (-(c2 * c2 * c2) + q(3) * (c2 * c4) - q(3) * c6));
}

TEST(Newton, Og6CharacterNumbers) {
    const auto ch = chern_to_character(og6_table());
    EXPECT_EQ(ch.at({0, 0, 1}), q(-112, 3));
    EXPECT_EQ(ch.at({1, 1, 0}), -1280);
    EXPECT_EQ(ch.at({3, 0, 0}), -30720);
}

TEST(Nieper, Og6Pipeline) {
    const auto r = nieper_chi(og6_table());
    EXPECT_EQ(r.chebyshev_form.size(), 3u);
    EXPECT_EQ(r.chebyshev_form.at({0, 0, 1}), q(4, 27));
    EXPECT_EQ(r.chebyshev_form.at({1, 1, 0}), q(8, 9));
    EXPECT_EQ(r.chebyshev_form.at({3, 0, 0}), q(80, 27));
    EXPECT_EQ(r.chi.poly, chi_polynomial(HKModel::og6()).poly);
    EXPECT_EQ(r.chi(q(1)), 16);
    EXPECT_EQ(to_string(r.chebyshev_form), "4/27·T6 + 8/9·T2*T4 + 80/27·T2^3");
}

TEST(Nieper, HilbertSquareOfK3) {
    // K3^[2]: c2^2 = 828, c4 = 324, lambda = 2q/5 in this normalization
    // gives binom(q/2 + 3, 2).
    const auto r = nieper_chi(k3n2_table());
    EXPECT_EQ(r.chi(0), 3);
    for (long x = -10; x <= 10; ++x) EXPECT_EQ(r.chi(q(2 * x, 5)), chi_hilb_q(2, q(x))) << x;
}

TEST(Nieper, ValueAtZeroIsChiO) {
    // lambda = 0 means T_{2k}(1) = 1, so chi = int td = n + 1 for these tables.
    EXPECT_EQ(nieper_chi(og6_table()).chi(0), chi_structure_sheaf(3));
    EXPECT_EQ(nieper_chi(k3n2_table()).chi(0), chi_structure_sheaf(2));
}
