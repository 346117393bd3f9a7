#include <gtest/gtest.h>

#include <random>

#include "ncsys/ncs.hpp"
#include "test_util.hpp"

using namespace ncsys;
using ncsys::testing::poly;
using ncsys::testing::z;

TEST(Rational, ParsesAndCanonicalizes)
{
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-0/5")), "0");
    EXPECT_EQ(to_string(parse_rational("7")), "7");
    EXPECT_EQ(to_string(parse_rational("-3/6")), "-1/2");
    EXPECT_THROW(parse_rational("3/-6"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Ring, RejectsBadParameters)
{
    EXPECT_THROW(Ring(0, false, 3, 2), PreconditionError);
    EXPECT_THROW(Ring(1, false, 0, 2), PreconditionError);
    EXPECT_THROW(Ring(1, false, 3, -1), PreconditionError);
}

TEST(Ring, BasisSizes)
{
    EXPECT_EQ(Ring(2, false, 3, 0).basis_size(), 15u);
    EXPECT_EQ(Ring(2, true, 3, 0).basis_size(), 10u);
    EXPECT_EQ(Ring(1, false, 5, 0).basis_size(), 6u);
}

TEST(Series, NoncommutativeProductKeepsOrder)
{
    Ring r(2, false, 4, 2);
    EXPECT_FALSE(z(r, 0) * z(r, 1) == z(r, 1) * z(r, 0));
    Ring c(2, true, 4, 2);
    EXPECT_TRUE(z(c, 0) * z(c, 1) == z(c, 1) * z(c, 0));
}

TEST(Series, AdditiveIdentityAndRingIdentity)
{
    Ring r(1, true, 6, 2);
    const TruncSeries u = poly(r, {{0, {0}, 1}, {1, {0, 0}, 3}});
    EXPECT_EQ(u + TruncSeries(r), u);
    const TruncSeries a = z(r) + z(r) * z(r);
    const TruncSeries b = z(r) - z(r) * z(r);
    EXPECT_EQ(a * b, poly(r, {{0, {0, 0}, 1}, {0, {0, 0, 0, 0}, -1}}));
}

TEST(Series, TruncatesEagerly)
{
    Ring r(1, true, 3, 1);
    const TruncSeries u = poly(r, {{1, {0, 0}, 1}});
    EXPECT_TRUE((u * u).is_zero());
    EXPECT_TRUE(TruncSeries::monomial(r, 0, {0, 0, 0, 0}).is_zero());
}

TEST(Series, CanonicalRendering)
{
    Ring r(2, false, 3, 2);
    const TruncSeries u = poly(r, {{0, {}, 1}, {1, {0, 1}, -1}, {2, {0, 0, 0}, 2}});
    EXPECT_EQ(u.to_string(), "1 - t*z1*z2 + 2t^2*z1^3");
    EXPECT_EQ(TruncSeries(r).to_string(), "0");
    EXPECT_EQ(poly(r, {{1, {0}, Rational(1, 2)}}).to_string(), "1/2*t*z1");
    Ring one(1, true, 3, 2);
    EXPECT_EQ(poly(one, {{0, {0, 0}, -3}}).to_string(), "-3*z^2");
}

TEST(Series, ContextMismatchRejected)
{
    Ring a(1, true, 3, 2);
    Ring b(1, true, 4, 2);
    EXPECT_THROW(z(a) + z(b), ContextMismatch);
    EXPECT_THROW(z(a) * z(b), ContextMismatch);
}

TEST(Substitute, Examples)
{
    Ring r(1, true, 5, 0);
    const TruncSeries u = z(r) * z(r);
    const TruncSeries got = substitute(u, {z(r) + z(r) * z(r)});
    EXPECT_EQ(got, poly(r, {{0, {0, 0}, 1}, {0, {0, 0, 0}, 2}, {0, {0, 0, 0, 0}, 1}}));

    Ring nc(2, false, 3, 0);
    EXPECT_EQ(substitute(z(nc, 0) * z(nc, 1), {z(nc, 1), z(nc, 0)}), z(nc, 1) * z(nc, 0));
}

TEST(Substitute, RejectsConstantTerm)
{
    Ring r(1, true, 3, 0);
    EXPECT_THROW(substitute(z(r), {z(r) + TruncSeries::constant(r, 1)}), PreconditionError);
}

TEST(Substitute, IdentityGivesFirstComponent)
{
    Ring r(2, false, 4, 3);
    std::mt19937_64 rng(5);
    const Automorphism F = random_automorphism(r, 1, Profile::general, rng);
    EXPECT_EQ(substitute(z(r, 0), F.F()), F.F()[0]);
}

TEST(TDerivative, Examples)
{
    Ring r(1, true, 3, 3);
    EXPECT_EQ(t_derivative(poly(r, {{2, {0}, 1}})), poly(r, {{1, {0}, 2}}));
    EXPECT_TRUE(t_derivative(poly(r, {{0, {0, 0, 0}, 1}})).is_zero());
    const TruncSeries d = t_derivative(poly(r, {{1, {}, 1}, {2, {0, 0}, 1}}));
    EXPECT_EQ(d, poly(r, {{0, {}, 1}, {1, {0, 0}, 2}}));
    EXPECT_EQ(d.t_precision(), 2);
}

TEST(Orders, Examples)
{
    Ring r(1, true, 4, 4);
    EXPECT_EQ(orders(poly(r, {{2, {0, 0, 0}, 1}, {3, {0}, 1}})), (Orders{1, 2}));
    EXPECT_EQ(orders(TruncSeries(r)), (Orders{kInfiniteOrder, kInfiniteOrder}));
    EXPECT_EQ(orders(TruncSeries::constant(r, 5)), (Orders{0, 0}));
}

class SeriesProperties : public ::testing::TestWithParam<int> {};

TEST_P(SeriesProperties, RingAxiomsAndComposition)
{
    const int n = GetParam() % 3 + 1;
    const bool comm = GetParam() % 2 == 0;
    Ring r(n, comm, 5, 3);
    std::mt19937_64 rng(100 + static_cast<std::uint64_t>(GetParam()));
    auto rand_series = [&] {
        TruncSeries s = random_series(r, 3, 4, rng);
        return s + TruncSeries::constant(r, draw_coeff(rng)) + random_series(r, 2, 2, rng).shift_t(1);
    };
    const TruncSeries a = rand_series();
    const TruncSeries b = rand_series();
    const TruncSeries c = rand_series();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    if (comm) {
        EXPECT_EQ(a * b, b * a);
    }
    const TruncSeries u = random_series(r, 3, 3, rng);
    const TruncSeries v = random_series(r, 3, 3, rng);
    EXPECT_GE(orders(u * v).z_order, orders(u).z_order + orders(v).z_order);

    // substitute(substitute(u, F), G) = substitute(u, F(G)).
    const Automorphism F = random_automorphism(r, 1, Profile::general, rng);
    const Automorphism G = random_automorphism(r, 1, Profile::general, rng);
    EXPECT_EQ(substitute(substitute(u, F.F()), G.F()), substitute(u, substitute(F.F(), G.F())));
}

INSTANTIATE_TEST_SUITE_P(Random, SeriesProperties, ::testing::Range(0, 12));

TEST(Series, AbelianizedProductMatchesCommutative)
{
    Ring nc(2, false, 5, 2);
    Ring cm(2, true, 5, 2);
    std::mt19937_64 rng(9);
    auto abelianize = [&](const TruncSeries& s) {
        std::vector<SeriesTerm> terms;
        for (const auto& x : s.terms()) {
            terms.push_back({x.t, cm.index_of(nc.word(x.mono)), x.coeff});
        }
        return TruncSeries::from_terms(cm, std::move(terms));
    };
    for (int i = 0; i < 10; ++i) {
        const TruncSeries a = random_series(nc, 3, 4, rng);
        const TruncSeries b = random_series(nc, 3, 4, rng);
        EXPECT_EQ(abelianize(a * b), abelianize(a) * abelianize(b));
    }
}
