#include "krw/json_io.hpp"
#include "krw/khovanov.hpp"

#include <doctest.h>

#include <random>

using namespace krw;

TEST_CASE("cube vertices: circle counts and degrees")
{
    CubeComplex cube(parse_braid("b=2; w= s1"));
    REQUIRE(cube.vertices().size() == 2);
    CHECK(cube.vertices()[0].circles() == 2);
    CHECK(cube.vertices()[0].h == 0);
    CHECK(cube.vertices()[1].circles() == 1);
    CHECK(cube.vertices()[1].h == -1);

    CubeComplex empty2(parse_braid("b=2; w="));
    REQUIRE(empty2.vertices().size() == 1);
    CHECK(empty2.vertices()[0].circles() == 2); // state space dimension 4
}

TEST_CASE("d squared vanishes blockwise")
{
    for (auto& text : {"b=3; w= s1 s2 s1", "b=3; w= s1 -s2 s1", "b=2; w= s1 s1 -s1"}) {
        CubeComplex cube(parse_braid(text));
        for (auto& [h, q] : cube.occupied_degrees()) {
            SparseMatrixQ d1 = cube.differential(h, q);
            SparseMatrixQ d2 = cube.differential(h + 1, q);
            for (int col = 0; col < d1.cols(); ++col) {
                std::vector<Rational> e(d1.cols(), Rational(0));
                e[col] = 1;
                for (auto& c : d2.apply(d1.apply(e)))
                    CHECK(c == 0);
            }
        }
    }
}

TEST_CASE("homology tables")
{
    KhovanovTable unknot = khovanov_homology(parse_braid("b=2; w= s1"));
    CHECK(unknot.dims == decltype(unknot.dims){{{0, -1}, 1}, {{0, 1}, 1}});
    CHECK(khovanov_homology(parse_braid("b=2; w= -s1")).dims == unknot.dims);
    CHECK(khovanov_homology(parse_braid("b=1; w=")).dims == unknot.dims);

    // 2-unlink: (q + q^{-1})^2 at h = 0
    KhovanovTable unlink = khovanov_homology(parse_braid("b=2; w="));
    CHECK(unlink.dim(0, -2) == 1);
    CHECK(unlink.dim(0, 0) == 2);
    CHECK(unlink.dim(0, 2) == 1);

    // trefoil's Euler characteristic equals F_2 of its HOMFLY polynomial
    BraidWord tre = parse_braid("b=2; w= s1 s1 s1");
    auto f2 = specialize_fn(homfly(tre), 2);
    CHECK(khovanov_homology(tre).euler() == std::get<LaurentQ>(f2));
}

TEST_CASE("chain-level Euler characteristic matches the shift bookkeeping")
{
    // sum over resolutions of (-1)^h q^{p} (q + q^{-1})^{circles}
    for (auto& text : {"b=2; w= s1 s1", "b=3; w= s1 -s2", "b=2; w= s1 -s1"}) {
        BraidWord b = parse_braid(text);
        CubeComplex cube(b);
        LaurentQ chain_euler;
        for (auto& v : cube.vertices()) {
            LaurentQ term = LaurentQ::monomial(2 * v.p, Rational(v.h % 2 ? -1 : 1));
            for (int c = 0; c < v.circles(); ++c)
                term *= quantum_integer(2);
            chain_euler += term;
        }
        CHECK(chain_euler == khovanov_homology(b).euler());
    }
}

TEST_CASE("g2 extremes")
{
    CHECK(g2_extremes(parse_braid("b=2; w= s1")) == std::pair<int, int>(-1, 1));
    CHECK(g2_extremes(parse_braid("b=2; w=")) == std::pair<int, int>(-2, 2));
    auto [lo, hi] = g2_extremes(parse_braid("b=2; w= s1 s1 s1"));
    CHECK(lo >= 1);  // (n-1)(w-b) - 2c_-
    CHECK(hi <= 11); // (n-1)(w+b) + 2c_+
}

TEST_CASE("homology is a link invariant under random Markov moves")
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        BraidWord w;
        w.strands = 2 + static_cast<int>(rng() % 2);
        int len = static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i) {
            int idx = 1 + static_cast<int>(rng() % (w.strands - 1));
            w.letters.push_back(rng() % 2 ? idx : -idx);
        }
        KhovanovTable base = khovanov_homology(w);
        BraidWord eta;
        eta.strands = w.strands;
        eta.letters = {1 + static_cast<int>(rng() % (w.strands - 1))};
        CHECK(khovanov_homology(conjugate(w, eta)).dims == base.dims);
        CHECK(khovanov_homology(stabilize_pos(w)).dims == base.dims);
        CHECK(khovanov_homology(stabilize_neg(w)).dims == base.dims);
    }
}

TEST_CASE("psi certificates on the three reference braids")
{
    PsiCertificate pos = psi2(parse_braid("b=2; w= s1"));
    CHECK(pos.cocycle);
    CHECK(!pos.class_zero); // transversal unknot at sl = -1
    CHECK(pos.q_degree == 1);
    CHECK(pos.h_degree == 0);

    PsiCertificate neg = psi2(parse_braid("b=2; w= -s1"));
    CHECK(neg.cocycle);
    CHECK(neg.class_zero); // stabilized unknot
    CHECK(neg.q_degree == 3);
    CHECK(!neg.preimage.empty());

    PsiCertificate tre = psi2(parse_braid("b=2; w= s1 s1 s1"));
    CHECK(!tre.class_zero);
    CHECK(tre.q_degree == -1); // -(n-1) sl = -1
}

TEST_CASE("psi degree always equals -sl")
{
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        BraidWord w;
        w.strands = 2 + static_cast<int>(rng() % 3);
        int len = static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) {
            int idx = 1 + static_cast<int>(rng() % (w.strands - 1));
            w.letters.push_back(rng() % 2 ? idx : -idx);
        }
        PsiCertificate c = psi2(w); // psi2 itself asserts q = -sl
        CHECK(c.q_degree == -stats(w).self_linking);
        CHECK(c.cocycle);
    }
}

TEST_CASE("json emission uses half-tick integers")
{
    nlohmann::json j = to_json(khovanov_homology(parse_braid("b=2; w= s1")));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["q"] == -2);
    CHECK(j[1]["q"] == 2);
    nlohmann::json p = to_json(homfly(parse_braid("b=2; w= s1")));
    CHECK(p[0]["x"] == -2);
    CHECK(p[0]["y"] == -2);
    CHECK(p[0]["c"] == "-1");
}
