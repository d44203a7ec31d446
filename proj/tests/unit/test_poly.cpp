#include <gtest/gtest.h>

#include <random>

#include "chromcat.hpp"
#include "oracles.hpp"

using namespace chromcat;

namespace {

PolyFp P(const std::string& text, int p = 2) { return PolyFp::parse(text, p, std::vector<std::string>{"x", "y"}); }

const FpMatrix& c3()
{
    static const FpMatrix M = FpMatrix::from_rows(2, {{0, 1}, {1, 1}});
    return M;
}

PolyFp random_poly(std::mt19937& rng, int p, std::size_t nvars, unsigned max_degree)
{
    PolyFp f(p, nvars);
    std::uniform_int_distribution<int> coeff(0, p - 1);
    std::uniform_int_distribution<unsigned> exp(0, max_degree);
    std::uniform_int_distribution<int> terms(0, 4);
    for (int t = terms(rng); t > 0; --t) {
        Exponents e(nvars);
        for (auto& x : e) {
            x = exp(rng);
        }
        f.add_term(e, coeff(rng));
    }
    return f;
}

} // namespace

TEST(Poly, ParseAndRender)
{
    const auto f = P("x^2*y + x*y^2");
    EXPECT_EQ(f.to_string({"x", "y"}), "x^2*y + x*y^2");
    EXPECT_EQ(P(f.to_string({"x", "y"})), f);
    EXPECT_EQ(P("(x + y)^2").to_string({"x", "y"}), "x^2 + y^2");
    EXPECT_EQ(PolyFp::parse("(x+y)^2 - 3*x*y + 2", 3, 2).to_string(), "x^2 + 2*x*y + y^2 + 2");
    EXPECT_THROW(P("x^"), Error);
    EXPECT_THROW(P("q"), Error);
    EXPECT_EQ(P("0").degree(), -1);
}

TEST(Poly, RoundTripRandom)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        for (int p : {2, 3, 5}) {
            const auto f = random_poly(rng, p, 2, 5);
            EXPECT_EQ(PolyFp::parse(f.to_string(), p, 2), f);
        }
    }
}

TEST(Poly, RingAxiomsRandom)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const int p = i % 2 ? 3 : 2;
        const auto a = random_poly(rng, p, 2, 3);
        const auto b = random_poly(rng, p, 2, 3);
        const auto c = random_poly(rng, p, 2, 3);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, PolyFp(p, 2));
        ASSERT_EQ(a * PolyFp::constant(p, 2, 1), a);
    }
}

TEST(Poly, SubstituteLinearIsRingMap)
{
    std::mt19937 rng(3);
    const std::vector<FpMatrix> mats{c3(), FpMatrix::from_rows(2, {{0, 1}, {1, 0}}),
                                     FpMatrix::from_rows(2, {{1, 1}, {0, 1}})};
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(rng, 2, 2, 3);
        const auto b = random_poly(rng, 2, 2, 3);
        for (const auto& M : mats) {
            ASSERT_EQ((a + b).substitute_linear(M), a.substitute_linear(M) + b.substitute_linear(M));
            ASSERT_EQ((a * b).substitute_linear(M), a.substitute_linear(M) * b.substitute_linear(M));
        }
    }
    EXPECT_EQ(P("x^2*y").substitute_linear(FpMatrix::identity(2, 2)), P("x^2*y"));
    EXPECT_EQ(P("x^2*y").substitute_linear(c3()), P("x*y^2 + y^3"));
}

TEST(Invariants, C3Orbits)
{
    const LinearAction C3(2, 2, {c3()});
    EXPECT_EQ(C3.order(), 3u);
    EXPECT_EQ(orbit_sum(P("x^2*y"), C3), P("x^3 + x^2*y + y^3"));
    EXPECT_EQ(orbit_sum(P("x"), C3), P("0"));
    const auto D1 = P("x^2 + x*y + y^2");
    EXPECT_EQ(orbit_sum(D1, C3), D1);
}

TEST(Invariants, C3Bases)
{
    const LinearAction C3(2, 2, {c3()});
    const auto d2 = invariant_basis(C3, 2);
    ASSERT_EQ(d2.size(), 1u);
    EXPECT_EQ(d2[0], P("x^2 + x*y + y^2"));
    EXPECT_TRUE(invariant_basis(C3, 1).empty());
    const auto d3 = invariant_basis(C3, 3);
    EXPECT_EQ(d3.size(), 2u);
    EXPECT_TRUE(same_span(d3, {P("x^2*y + x*y^2"), P("x^3 + x^2*y + y^3")}));
    for (unsigned d = 0; d <= 6; ++d) {
        const auto basis = invariant_basis(C3, d);
        for (const auto& f : basis) {
            EXPECT_TRUE(is_invariant(f, C3));
            EXPECT_EQ(f.degree(), static_cast<int>(d));
        }
        EXPECT_EQ(basis.size(), oracle::invariant_dimension_by_subsets(C3, d)) << d;
    }
}

TEST(Invariants, DicksonAndSwap)
{
    const LinearAction GL2(2, 2, {c3(), FpMatrix::from_rows(2, {{0, 1}, {1, 0}})});
    EXPECT_EQ(GL2.order(), 6u);
    const auto D1 = P("x^2 + x*y + y^2");
    const auto D0 = P("x^2*y + x*y^2");
    const auto eta = P("x^3 + x^2*y + y^3");
    EXPECT_TRUE(is_invariant(D1, GL2));
    EXPECT_TRUE(is_invariant(D0, GL2));
    EXPECT_FALSE(is_invariant(eta, GL2));
    EXPECT_EQ(eta.substitute_linear(FpMatrix::from_rows(2, {{0, 1}, {1, 0}})), eta + D0);
}

TEST(Invariants, RelationAndMembership)
{
    const auto D1 = P("x^2 + x*y + y^2");
    const auto D0 = P("x^2*y + x*y^2");
    const auto eta = P("x^3 + x^2*y + y^3");
    EXPECT_TRUE((eta.pow(2) + eta * D0 + D1.pow(3) + D0.pow(2)).is_zero());
    EXPECT_EQ(eta.pow(2), P("x^6 + x^4*y^2 + y^6"));
    EXPECT_EQ(D1.pow(2), P("x^4 + x^2*y^2 + y^4"));
    const std::vector<PolyFp> chern{D1.pow(2), D0.pow(2)};
    EXPECT_TRUE(subring_membership(P("0"), chern));
    EXPECT_FALSE(subring_membership(eta, chern));
    EXPECT_FALSE(subring_membership(eta.pow(2), chern));
    EXPECT_TRUE(subring_membership(D0.pow(2), chern));
    EXPECT_TRUE(subring_membership(eta.pow(2), {D1, D0, eta}));
    EXPECT_THROW(subring_membership(P("x + x^2"), chern), Error);
    // subset-enumeration oracle on the graded pieces
    for (unsigned d = 0; d <= 12; ++d) {
        const auto piece = subring_graded_piece(chern, d, 2, 2);
        for (const auto& f : {eta.pow(2), D0.pow(2), D1.pow(2) * D0.pow(2), D1.pow(4) + D0.pow(2) * D1, eta * D0, D1.pow(3)}) {
            if (f.degree() == static_cast<int>(d)) {
                EXPECT_EQ(subring_membership(f, chern), oracle::in_span_by_subsets(f, piece));
            }
        }
    }
}

TEST(Invariants, ChernClassesInvariant)
{
    const LinearAction C3(2, 2, {c3()});
    EXPECT_TRUE(is_invariant(P("x^4 + x^2*y^2 + y^4"), C3));
    EXPECT_TRUE(is_invariant(P("x^4*y^2 + x^2*y^4"), C3));
}
