#include "support.hpp"

#include <gtest/gtest.h>

using namespace symprod;
using namespace symprod::testing;

namespace {

const Monomial one{};
const Monomial q1 = qn(1);

TEST(Half, PrintsIntegersAndHalves) {
    EXPECT_EQ(h(3).str(), "3");
    EXPECT_EQ(hh(3).str(), "3/2");
    EXPECT_EQ(hh(-1).str(), "-1/2");
    EXPECT_EQ(hh(4), h(2));
    EXPECT_TRUE(hh(6).is_odd_integer());
    EXPECT_FALSE(hh(3).is_integer());
}

TEST(SeriesAdd, Examples) {
    // (1+q) + (1−q) → 2
    EXPECT_EQ(series(3, {{1, one}, {1, q1}}) + series(3, {{1, one}, {-1, q1}}), series(3, {{2, one}}));
    const Series s = series(4, {{3, q1}, {Rational(1, 2), mono({{Var::t, h(1)}, {Var::q, h(2)}})}});
    EXPECT_EQ(s + Series::zero(Var::q, 4), s);
    // (q + t q²) + t q² at order 2
    const Monomial tq2 = mono({{Var::t, h(1)}, {Var::q, h(2)}});
    EXPECT_EQ(series(2, {{1, q1}, {1, tq2}}) + series(2, {{1, tq2}}), series(2, {{1, q1}, {2, tq2}}));
}

TEST(SeriesAdd, OrderIsMinimum) {
    EXPECT_EQ((series(5, {{1, qn(4)}}) + series(3, {{1, q1}})).order(), 3);
    EXPECT_TRUE((series(5, {{1, qn(4)}}) + series(3, {})).is_zero());
}

TEST(SeriesAdd, MismatchedCountingVariableIsUsageError) {
    EXPECT_THROW(series(2, {{1, one}}) + series(2, {{1, one}}, Var::p), UsageError);
    EXPECT_THROW(Series(Var::t, 2), UsageError);
}

TEST(SeriesMul, Examples) {
    EXPECT_EQ(series(2, {{1, one}, {1, q1}}) * series(2, {{1, one}, {-1, q1}}), series(2, {{1, one}, {-1, qn(2)}}));
    const Series s = series(3, {{2, q1}, {-1, mono({{Var::y, hh(-1)}, {Var::q, h(2)}})}});
    EXPECT_EQ(s * Series::one(Var::q, 3), s);
    // (1+tq)(1+t³q) = 1 + (t+t³)q + t⁴q²
    const Series a = series(2, {{1, one}, {1, mono({{Var::t, h(1)}, {Var::q, h(1)}})}});
    const Series b = series(2, {{1, one}, {1, mono({{Var::t, h(3)}, {Var::q, h(1)}})}});
    const Series expected = series(2, {{1, one},
                                       {1, mono({{Var::t, h(1)}, {Var::q, h(1)}})},
                                       {1, mono({{Var::t, h(3)}, {Var::q, h(1)}})},
                                       {1, mono({{Var::t, h(4)}, {Var::q, h(2)}})}});
    EXPECT_EQ(a * b, expected);
}

TEST(BinomPow, Examples) {
    EXPECT_EQ(q_coeffs(binom_pow(-1, q1, Rational(-2), Var::q, 3)), ints({1, 2, 3, 4}));
    EXPECT_EQ(binom_pow(1, mono({{Var::x, h(1)}, {Var::q, h(1)}}), Rational(0), Var::q, 5), Series::one(Var::q, 5));
    // (1−q²)^{−1/2} → 1 + ½q² + ⅜q⁴
    EXPECT_EQ(binom_pow(-1, qn(2), Rational(-1, 2), Var::q, 4),
              series(4, {{1, one}, {Rational(1, 2), qn(2)}, {Rational(3, 8), qn(4)}}));
}

TEST(BinomPow, ConstantMonomialIsUsageError) {
    EXPECT_THROW(binom_pow(1, Monomial::of(Var::t), Rational(2), Var::q, 3), UsageError);
    EXPECT_THROW(binom_pow(2, q1, Rational(2), Var::q, 3), UsageError);
}

TEST(ExpLog, Examples) {
    EXPECT_EQ(exp_series(Series::zero(Var::q, 4)), Series::one(Var::q, 4));
    EXPECT_EQ(q_coeffs(exp_series(log1m(q1, Var::q, 3).scaled(Rational(-2)))), ints({1, 2, 3, 4}));
    EXPECT_EQ(log1m(q1, Var::q, 3), series(3, {{-1, q1}, {Rational(-1, 2), qn(2)}, {Rational(-1, 3), qn(3)}}));
    EXPECT_THROW(exp_series(series(3, {{1, one}})), UsageError);
    EXPECT_THROW(log1m(Monomial::of(Var::y), Var::q, 3), UsageError);
}

TEST(ProductOverLevels, Examples) {
    auto colored = [](Rational e) {
        return [e](int l) { return binom_pow(-1, qn(l), e, Var::q, 5); };
    };
    EXPECT_EQ(q_coeffs(product_over_levels(colored(Rational(-2)), Var::q, 3)), ints({1, 2, 5, 10}));
    EXPECT_EQ(product_over_levels([](int) { return Series::one(Var::q, 4); }, Var::q, 4), Series::one(Var::q, 4));
    EXPECT_EQ(q_coeffs(product_over_levels(colored(Rational(-1)), Var::q, 5)), ints({1, 1, 2, 3, 5, 7}));
    EXPECT_THROW(product_over_levels([](int) { return series(4, {{2, one}}); }, Var::q, 4), UsageError);
}

TEST(Substitute, Examples) {
    const Monomial tq = mono({{Var::t, h(1)}, {Var::q, h(1)}});
    EXPECT_EQ(substitute(series(3, {{1, one}, {1, tq}}), Var::t, Monomial::of(Var::t, h(2))),
              series(3, {{1, one}, {1, mono({{Var::t, h(2)}, {Var::q, h(1)}})}}));
    EXPECT_EQ(substitute(series(3, {{1, one}, {1, mono({{Var::x, h(1)}, {Var::q, h(1)}})}}), Var::x, Monomial{}),
              series(3, {{1, one}, {1, q1}}));
}

TEST(Substitute, CountingVariableChange) {
    // 1 + y q + y² q² with q → y^{−1/2} p
    const Series s = series(2, {{1, one}, {1, mono({{Var::y, h(1)}, {Var::q, h(1)}})}, {1, mono({{Var::y, h(2)}, {Var::q, h(2)}})}});
    const Series r = substitute(s, Var::q, mono({{Var::y, hh(-1)}, {Var::p, h(1)}}), Var::p);
    EXPECT_EQ(r.trunc_var(), Var::p);
    EXPECT_EQ(r, series(2, {{1, one}, {1, mono({{Var::y, hh(1)}, {Var::p, h(1)}})}, {1, mono({{Var::y, h(1)}, {Var::p, h(2)}})}},
                        Var::p));
    // q → q² doubles the order
    EXPECT_EQ(substitute(series(2, {{1, q1}}), Var::q, qn(2)).order(), 4);
    EXPECT_THROW(substitute(s, Var::q, Monomial::of(Var::y)), UsageError);
}

TEST(Specialize, Examples) {
    const Series s = series(3, {{1, one}, {1, mono({{Var::x, h(1)}, {Var::y, h(1)}, {Var::q, h(1)}})}});
    EXPECT_EQ(specialize(s, {{Var::x, Rational(-1)}, {Var::y, Rational(-1)}}), series(3, {{1, one}, {1, q1}}));
    const Series half = series(3, {{1, one}, {1, mono({{Var::x, hh(1)}, {Var::q, h(1)}})}});
    EXPECT_THROW(specialize(half, {{Var::x, Rational(-1)}}), DomainError);
    EXPECT_THROW(specialize(half, {{Var::x, Rational(2)}}), DomainError);
    EXPECT_EQ(specialize(half, {{Var::x, Rational(4)}}), series(3, {{1, one}, {2, q1}}));
    EXPECT_THROW(specialize(half, {{Var::q, Rational(1)}}), UsageError);
    EXPECT_THROW(specialize(series(3, {{1, Monomial::of(Var::y, h(-1))}}), {{Var::y, Rational(0)}}), DomainError);
}

TEST(Render, CanonicalText) {
    const Series s = series(3, {{1, one}, {2, q1}, {1, mono({{Var::t, hh(3)}, {Var::q, h(2)}})}});
    EXPECT_EQ(s.str(), "1 + 2*q + t^(3/2)*q^2");
    EXPECT_EQ(series(3, {{-1, q1}, {Rational(1, 2), qn(2)}}).str(), "-q + 1/2*q^2");
    EXPECT_EQ(series(3, {{1, one}, {-3, mono({{Var::y, h(-1)}, {Var::q, h(1)}})}}).str(), "1 - 3*y^-1*q");
    EXPECT_EQ(Series::zero(Var::q, 2).str(), "0");
    EXPECT_EQ(series(3, {{1, mono({{Var::x, h(1)}, {Var::y, h(2)}, {Var::t, h(1)}, {Var::q, h(1)}})}}).str(), "t*x*y^2*q");
}

TEST(Invariants, NoZeroOrOverflowTermsStored) {
    Series s(Var::q, 2);
    s.add_term(qn(3), Rational(5));
    s.add_term(q1, Rational(2));
    s.add_term(q1, Rational(-2));
    EXPECT_TRUE(s.is_zero());
    EXPECT_THROW(s.add_term(Monomial::of(Var::q, hh(1)), Rational(1)), UsageError);
    EXPECT_THROW(s.add_term(Monomial::of(Var::q, h(-1)), Rational(1)), UsageError);
}

// ---------------------------------------------------------------------------
// properties

class RingLaws : public ::testing::TestWithParam<unsigned> {};

TEST_P(RingLaws, HoldExactly) {
    std::mt19937 rng(GetParam());
    const Series a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
}

INSTANTIATE_TEST_SUITE_P(Random, RingLaws, ::testing::Range(1u, 31u));

class ExpLogProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(ExpLogProperty, ExpOfLog1mIsOneMinusM) {
    std::mt19937 rng(GetParam());
    std::uniform_int_distribution<int> qe(1, 3), ye(-3, 3), te(0, 2);
    const Monomial m = mono({{Var::q, h(qe(rng))}, {Var::y, hh(ye(rng))}, {Var::t, h(te(rng))}});
    const int order = 7;
    EXPECT_EQ(exp_series(log1m(m, Var::q, order)), Series::one(Var::q, order) - Series::term(m, Rational(1), Var::q, order));
}

INSTANTIATE_TEST_SUITE_P(Random, ExpLogProperty, ::testing::Range(1u, 21u));

class BinomProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(BinomProperty, IntegerAlphaMatchesRepeatedProduct) {
    std::mt19937 rng(GetParam());
    std::uniform_int_distribution<int> qe(1, 2), ye(-2, 2), alpha(0, 5), sign(0, 1);
    const Monomial m = mono({{Var::q, h(qe(rng))}, {Var::y, hh(ye(rng))}});
    const int s = sign(rng) ? 1 : -1;
    const int a = alpha(rng);
    Series expected = Series::one(Var::q, 8);
    const Series base = Series::one(Var::q, 8) + Series::term(m, Rational(s), Var::q, 8);
    for (int i = 0; i < a; ++i) expected = expected * base;
    EXPECT_EQ(binom_pow(s, m, Rational(a), Var::q, 8), expected);
    // negative powers invert
    EXPECT_EQ(binom_pow(s, m, Rational(-a), Var::q, 8) * expected, Series::one(Var::q, 8));
}

INSTANTIATE_TEST_SUITE_P(Random, BinomProperty, ::testing::Range(1u, 21u));

class SubstituteSpecialize : public ::testing::TestWithParam<unsigned> {};

TEST_P(SubstituteSpecialize, CommuteOnDisjointVariables) {
    std::mt19937 rng(GetParam());
    const Series a = random_series(rng, 4, 8);
    const Monomial repl = Monomial::of(Var::x, h(2));
    // y carries half-integer exponents, so assign perfect squares
    for (const Rational& y : {Rational(9, 4), Rational(4), Rational(1)}) {
        const std::map<Var, Rational> at{{Var::y, y}};
        EXPECT_EQ(specialize(substitute(a, Var::t, repl), at), substitute(specialize(a, at), Var::t, repl));
    }
}

INSTANTIATE_TEST_SUITE_P(Random, SubstituteSpecialize, ::testing::Range(1u, 21u));

} // namespace
