#include <gtest/gtest.h>

#include "mldeg/checks.hpp"
#include "mldeg/poly_n.hpp"

using namespace mldeg;

namespace {

const UniPolyQ n_ = UniPolyQ::variable();

void expect_clean(const CheckReport& rep) {
    EXPECT_TRUE(rep.ok()) << rep.suite << ": " << rep.failures.size() << " failures, first: "
                          << (rep.failures.empty() ? std::string("(none checked)") : rep.failures.front());
}

}  // namespace

TEST(Interpolate, RecoversKnownPolynomial) {
    UniPolyQ p{make_rat(-3, 7), BigRat(2), BigRat(0), make_rat(5, 2)};
    std::vector<BigRat> xs, ys;
    for (long x : {-2, 0, 3, 7}) {
        xs.emplace_back(x);
        ys.push_back(p(BigRat(x)));
    }
    EXPECT_EQ(interpolate(xs, ys), p);
    xs.push_back(BigRat(3));
    ys.push_back(BigRat(0));
    EXPECT_THROW(interpolate(xs, ys), DomainError);
}

TEST(FitPolynomial, EscalatesUntilExtraPointsAgree) {
    auto f = [](long x) { return BigRat(x * x * x * x - x); };
    FitOptions opt;
    opt.degree = 1;
    FitResult r = fit_polynomial(f, opt, "quartic");
    EXPECT_EQ(r.poly, n_ * n_ * n_ * n_ - n_);
    EXPECT_GE(r.escalations, 1);
    EXPECT_GE(r.degree_bound, 4);
    opt.escalate_by = 0;
    EXPECT_THROW(fit_polynomial(f, opt, "quartic"), ConsistencyError);
}

TEST(QuasiPoly, DispatchesOnResidue) {
    QuasiPolyQ q{2, {UniPolyQ(0), n_}};
    EXPECT_EQ(q(4), 0);
    EXPECT_EQ(q(5), 5);
    EXPECT_EQ(q(-3), -3);
}

TEST(LpPoly, Examples) {
    EXPECT_EQ(lp_poly(IndexSet{}), UniPolyQ(1));
    EXPECT_EQ(lp_poly(IndexSet{1}), binom_poly(0, 2));
    EXPECT_EQ(lp_poly(IndexSet{0, 2}), binom_poly(1, 4) * BigRat(2));
    EXPECT_EQ(lp_poly(IndexSet{0, 2})(4), 10);
    EXPECT_EQ(lp_leading_coefficient(IndexSet{1}), make_rat(1, 2));
    EXPECT_EQ(lp_leading_coefficient(IndexSet{0, 2}), make_rat(1, 12));
}

TEST(LpPoly, OneAndTwoElementClosedForms) {
    for (long i = 0; i <= 8; ++i) EXPECT_EQ(lp_poly(IndexSet{static_cast<int>(i)}), binom_poly(0, i + 1)) << i;
    for (long j = 1; j <= 7; ++j) EXPECT_EQ(lp_poly(IndexSet{0, static_cast<int>(j)}), binom_poly(1, j + 2) * BigRat(j)) << j;
}

TEST(LpPoly, LeadingCoefficientAndExtrapolation) {
    CheckCaps c;
    c.sum_max = 9;
    expect_clean(check_leading(default_poly_n(), c));
}

TEST(LpPoly, RecursionCertificates) { expect_clean(check_recursion(default_poly_n(), CheckCaps{})); }

TEST(LpAPoly, Examples) {
    EXPECT_EQ(lp_a_poly(IndexSet{}, IndexSet{}), UniPolyQ(1));
    for (auto [I, J] : {std::pair{IndexSet{0}, IndexSet{0}}, std::pair{IndexSet{1}, IndexSet{0}}, std::pair{IndexSet{0, 2}, IndexSet{1, 2}}}) {
        UniPolyQ p = lp_a_poly(I, J);
        for (long n = 1; n <= 8; ++n) EXPECT_EQ(p(n), BigRat(d_A_complement(I, J, n))) << I.str() << J.str() << n;
    }
    EXPECT_THROW(lp_a_poly(IndexSet{0}, IndexSet{0, 1}), DomainError);
}

TEST(LpDQuasiPoly, Examples) {
    QuasiPolyQ e = lp_d_quasipoly(IndexSet{});
    EXPECT_EQ(e.branches[0], UniPolyQ(1));
    EXPECT_EQ(e.branches[1], UniPolyQ(1));
    QuasiPolyQ z = lp_d_quasipoly(IndexSet{0});
    EXPECT_TRUE(z.branches[0] == UniPolyQ() || z.branches[1] == UniPolyQ());
    for (const auto& I : {IndexSet{0}, IndexSet{1}, IndexSet{0, 3}, IndexSet{1, 2}}) {
        QuasiPolyQ q = lp_d_quasipoly(I);
        for (long k = 0; k <= 12; ++k) EXPECT_EQ(q(k), BigRat(alpha_complement(I, k))) << I.str() << k;
    }
}

TEST(DeltaPoly, Examples) {
    EXPECT_EQ(delta_poly(MatrixType::symmetric, 2, 1), n_ * n_ - n_);
    EXPECT_EQ(delta_poly(MatrixType::symmetric, 5, 3), UniPolyQ());
    EXPECT_EQ(delta_poly(MatrixType::symmetric, 4, 2)(0), 0);
    EXPECT_THROW(delta_poly(MatrixType::symmetric, 0, 1), DomainError);
}

TEST(DeltaPoly, SymmetricPointwise) {
    for (long m = 1; m <= 6; ++m)
        for (long s = 1; s <= 3; ++s) {
            UniPolyQ p = delta_poly(MatrixType::symmetric, m, s);
            EXPECT_LE(p.degree(), m);
            for (long n = s; n <= 10; ++n) EXPECT_EQ(p(n), BigRat(delta_sym(m, n, n - s))) << m << " " << s << " " << n;
        }
}

TEST(DeltaPoly, TypeAAndTypeDPointwise) {
    for (long m = 1; m <= 4; ++m)
        for (long s = 1; s <= 2; ++s) {
            UniPolyQ a = delta_poly(MatrixType::general, m, s);
            UniPolyQ d = delta_poly(MatrixType::skew, m, s);
            for (long n = s + 1; n <= 6; ++n) {
                EXPECT_EQ(a(n), BigRat(delta_typeA(m, n, n - s))) << m << " " << s << " " << n;
                EXPECT_EQ(d(n), BigRat(delta_typeD(m, n, n - s))) << m << " " << s << " " << n;
            }
        }
}

TEST(PhiPoly, Examples) {
    EXPECT_EQ(phi_poly(MatrixType::symmetric, 1), UniPolyQ(1));
    EXPECT_EQ(phi_poly(MatrixType::symmetric, 2), n_ - UniPolyQ(1));
    UniPolyQ p3 = phi_poly(MatrixType::symmetric, 3);
    EXPECT_EQ(p3.degree(), 2);
    EXPECT_EQ(p3(3), 4);
}

TEST(PhiPoly, SymmetricTable) {
    for (long d = 1; d <= 8; ++d) {
        UniPolyQ p = phi_poly(MatrixType::symmetric, d);
        EXPECT_EQ(p.degree(), d - 1) << d;
        for (long n = 1; n <= d + 4; ++n) EXPECT_EQ(p(n), BigRat(phi_sym(n, d))) << d << " " << n;
    }
}

TEST(PhiPoly, TypeAIsPolynomialToo) {
    FitResult r = default_poly_n().phi_fit(MatrixType::general, 3);
    EXPECT_EQ(r.poly, (n_ - UniPolyQ(1)) * (n_ - UniPolyQ(1)));
}
