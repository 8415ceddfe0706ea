#include "krw/homfly.hpp"

#include <doctest.h>

#include <random>

using namespace krw;

namespace {

HomflyPoly xpow(int e) { return HomflyPoly::monomial(2 * e, 0); }
HomflyPoly ypow(int e) { return HomflyPoly::monomial(0, 2 * e); }

} // namespace

TEST_CASE("unknot and unlink values")
{
    HomflyPoly u = unknot_homfly();
    CHECK(homfly(parse_braid("b=2; w= s1")) == u);
    CHECK(homfly(parse_braid("b=1; w=")) == u);
    CHECK(homfly(parse_braid("b=2; w=")) == u * u);
}

TEST_CASE("right trefoil matches the hand-expanded skein recursion")
{
    // P = x^2 u - x^3 y u^2 + x^2 y^2 u with u = (x - x^{-1})/y
    HomflyPoly u = unknot_homfly();
    HomflyPoly expected = xpow(2) * u - xpow(3) * ypow(1) * u * u + xpow(2) * ypow(2) * u;
    CHECK(homfly(parse_braid("b=2; w= s1 s1 s1")) == expected);
}

TEST_CASE("skein identity holds at every crossing of random words")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord w;
        w.strands = 2 + static_cast<int>(rng() % 3);
        int len = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) {
            int idx = 1 + static_cast<int>(rng() % (w.strands - 1));
            w.letters.push_back(rng() % 2 ? idx : -idx);
        }
        size_t pos = rng() % w.letters.size();
        CHECK(skein_residual(w, pos).is_zero());
    }
}

TEST_CASE("markov moves leave the polynomial alone: 200 words, b <= 4, length <= 7")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        BraidWord w;
        w.strands = 2 + static_cast<int>(rng() % 3);
        int len = static_cast<int>(rng() % 8);
        for (int i = 0; i < len; ++i) {
            int idx = 1 + static_cast<int>(rng() % (w.strands - 1));
            w.letters.push_back(rng() % 2 ? idx : -idx);
        }
        HomflyPoly p = homfly(w);
        BraidWord eta;
        eta.strands = w.strands;
        eta.letters = {1 + static_cast<int>(rng() % (w.strands - 1))};
        CHECK(homfly(conjugate(w, eta)) == p);
        CHECK(homfly(stabilize_pos(w)) == p);
        CHECK(homfly(stabilize_neg(w)) == p);
        CHECK(homfly(free_reduce(w)) == p);
    }
}

TEST_CASE("F_n reports a rational function when clearing fails")
{
    HomflyPoly lone_inverse_y = HomflyPoly::monomial(0, -2); // 1/y alone
    auto r = specialize_fn(lone_inverse_y, 2);
    REQUIRE(std::holds_alternative<RationalFunction>(r));
    CHECK(!std::get<RationalFunction>(r).is_polynomial());
}

TEST_CASE("F_n specialization values")
{
    HomflyPoly u = unknot_homfly();
    auto f3 = specialize_fn(u, 3);
    LaurentQ expected3; // t^2 + 1 + t^{-2}
    expected3.add_term(4, Rational(1));
    expected3.add_term(0, Rational(1));
    expected3.add_term(-4, Rational(1));
    CHECK(std::get<LaurentQ>(f3) == expected3);

    LaurentQ expected2; // t + t^{-1}
    expected2.add_term(2, Rational(1));
    expected2.add_term(-2, Rational(1));
    CHECK(std::get<LaurentQ>(specialize_fn(u, 2)) == expected2);

    CHECK(std::get<LaurentQ>(specialize_fn(u * u, 2)) == expected2 * expected2);
}

TEST_CASE("F-hat specialization")
{
    // x*x under the substitution: -t q^{-1}, squaring removes the root
    FhatPoly xx = fhat_x() * fhat_x();
    CHECK(xx.odd.is_zero());
    CHECK(xx.even == Laurent2<GaussianRational>::monomial(2, -2, GaussianRational(Rational(-1))));

    // F-hat(unknot) = -x^{-1} y^{-1} = -t^{-1} s / (q - q^{-1})
    FhatValue got = specialize_fhat(unknot_homfly());
    FhatValue expected;
    expected.num.odd = Laurent2<GaussianRational>::monomial(-2, 0, GaussianRational(Rational(-1)));
    expected.den = Laurent2Q();
    expected.den.add_term({0, 2}, Rational(1));
    expected.den.add_term({0, -2}, Rational(-1));
    CHECK(got == expected);

    // hatted skein residual on the (sigma1^3, sigma1, sigma1^2) triple
    CHECK(fhat_skein_residual(parse_braid("b=2; w= s1 s1 s1"), 0).is_zero());
    // and at a negative crossing
    CHECK(fhat_skein_residual(parse_braid("b=2; w= -s1 s1 s1"), 0).is_zero());
}

TEST_CASE("classical self-linking bound")
{
    CHECK(classical_sl_bound(homfly(parse_braid("b=2; w= s1"))) == -1);
    CHECK(classical_sl_bound(homfly(parse_braid("b=2; w= s1 s1 s1"))) == 1);
    CHECK(classical_sl_bound(homfly(parse_braid("b=2; w="))) == -2);
    // never violated by sl on a small sweep
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        BraidWord w;
        w.strands = 2 + static_cast<int>(rng() % 2);
        int len = static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) {
            int idx = 1 + static_cast<int>(rng() % (w.strands - 1));
            w.letters.push_back(rng() % 2 ? idx : -idx);
        }
        CHECK(stats(w).self_linking <= classical_sl_bound(homfly(w)));
    }
}

TEST_CASE("budget failure is explicit")
{
    HomflyEvaluator tiny(3);
    CHECK_THROWS_AS((void)tiny.eval(parse_braid("b=3; w= s1 s2 s1 s2")), budget_error);
}

TEST_CASE("memoized evaluation is presentation independent across calls")
{
    HomflyEvaluator eval;
    HomflyPoly a = eval.eval(parse_braid("b=3; w= s1 s2"));
    HomflyPoly b = eval.eval(parse_braid("b=3; w= s2 s1")); // same canonical key
    CHECK(a == b);
}
