#include "krw/braid.hpp"

#include <doctest.h>

#include <random>

using namespace krw;

TEST_CASE("parser accepts the word grammar and rejects bad indices")
{
    BraidWord w = parse_braid("b=3; w= s1 s2 -s1");
    CHECK(w.strands == 3);
    CHECK(w.letters == std::vector<int>{1, 2, -1});
    CHECK(parse_braid("b=2; w=").letters.empty());
    CHECK_THROWS_AS(parse_braid("b=2; w= s0"), parse_error);
    CHECK_THROWS_AS(parse_braid("b=2; w= s2"), parse_error);
    CHECK_THROWS_AS(parse_braid("b=3; w= q1"), parse_error);
    CHECK_THROWS_AS(parse_braid("nonsense"), parse_error);
    ResolvedWord mu = parse_resolved("b=3; w= t1 t2");
    CHECK(mu.letters == std::vector<int>{1, 2});
    CHECK_THROWS_AS(parse_resolved("b=3; w= t3"), parse_error);
    CHECK(parse_braid(format_word(w)) == w);
    CHECK(parse_resolved(format_word(mu)) == mu);
}

TEST_CASE("parser survives garbage without crashing")
{
    std::mt19937_64 rng(2024);
    const std::string alphabet = "bws=;-0123456789t %";
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        int len = static_cast<int>(rng() % 24);
        for (int i = 0; i < len; ++i)
            text += alphabet[rng() % alphabet.size()];
        try {
            (void)parse_braid(text);
        } catch (const parse_error&) {
        }
        try {
            (void)parse_resolved(text);
        } catch (const parse_error&) {
        }
    }
}

TEST_CASE("stats")
{
    BraidStats s = stats(parse_braid("b=2; w= s1 s1 s1"));
    CHECK(s.writhe == 3);
    CHECK(s.strands == 2);
    CHECK(s.positive == 3);
    CHECK(s.negative == 0);
    CHECK(s.self_linking == 1);

    s = stats(parse_braid("b=3; w="));
    CHECK(s.writhe == 0);
    CHECK(s.self_linking == -3);

    s = stats(parse_braid("b=3; w= s1 -s2"));
    CHECK(s.writhe == 0);
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.self_linking == -3);
}

TEST_CASE("markov moves")
{
    CHECK(stabilize_pos(parse_braid("b=2; w= s1")) == parse_braid("b=3; w= s1 s2"));
    CHECK(mirror(parse_braid("b=2; w= s1 s1 s1")) == parse_braid("b=2; w= -s1 -s1 -s1"));
    CHECK(free_reduce(parse_braid("b=2; w= s1 -s1")).letters.empty());
    CHECK(destabilize(parse_braid("b=3; w= s1 s2")) == parse_braid("b=2; w= s1"));
    CHECK_THROWS_AS(destabilize(parse_braid("b=3; w= s2 s1 s2")), invariant_error);
    CHECK_THROWS_AS(destabilize(parse_braid("b=3; w= s1")), invariant_error);
    BraidWord w = parse_braid("b=3; w= s1");
    BraidWord eta = parse_braid("b=3; w= s2");
    CHECK(conjugate(w, eta) == parse_braid("b=3; w= -s2 s1 s2"));
}

TEST_CASE("mirror flips crossing counts and sl accordingly")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        BraidWord w;
        w.strands = 2 + static_cast<int>(rng() % 3);
        int len = static_cast<int>(rng() % 7);
        for (int k = 0; k < len; ++k) {
            int idx = 1 + static_cast<int>(rng() % (w.strands - 1));
            w.letters.push_back(rng() % 2 ? idx : -idx);
        }
        BraidStats s = stats(w), m = stats(mirror(w));
        CHECK(m.positive == s.negative);
        CHECK(m.negative == s.positive);
        CHECK(m.self_linking == -s.writhe - s.strands);
    }
}

TEST_CASE("witness verification")
{
    BraidWord b = parse_braid("b=2; w= s1 s1 s1");
    QuasiPositiveWitness wit;
    BraidWord id2 = parse_braid("b=2; w=");
    wit.factors = {{id2, 1}, {id2, 1}, {id2, 1}};
    CHECK(verify_witness(b, wit));

    CHECK(!verify_witness(parse_braid("b=2; w= -s1"), wit));

    QuasiPositiveWitness wit2;
    wit2.factors = {{parse_braid("b=3; w= s2"), 1}};
    CHECK(verify_witness(parse_braid("b=3; w= s2 s1 -s2"), wit2));
}

TEST_CASE("resolutions carry the crossing shifts")
{
    auto rs = enumerate_resolutions(parse_braid("b=2; w= s1"), 2);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].homological_degree == 0);
    CHECK(rs[0].quantum_shift == 1); // n-1
    CHECK(rs[0].word.letters.empty());
    CHECK(rs[1].homological_degree == -1);
    CHECK(rs[1].quantum_shift == 2); // n
    CHECK(rs[1].word.letters == std::vector<int>{1});

    auto rneg = enumerate_resolutions(parse_braid("b=2; w= -s1"), 2);
    CHECK(rneg[0].quantum_shift == -1);
    CHECK(rneg[1].homological_degree == 1);
    CHECK(rneg[1].quantum_shift == -2);

    auto rempty = enumerate_resolutions(parse_braid("b=3; w="), 2);
    REQUIRE(rempty.size() == 1);
    CHECK(rempty[0].homological_degree == 0);
    CHECK(rempty[0].quantum_shift == 0);

    auto rfull = enumerate_resolutions(parse_braid("b=3; w= s1 -s2 s1"), 3);
    CHECK(rfull.size() == 8);
    for (auto& r : rfull) {
        int expect = 2 * stats(r.parent).writhe + r.c_gamma_plus - r.c_gamma_minus;
        CHECK(r.quantum_shift == expect); // p_Gamma = (n-1)w + c_{G,+} - c_{G,-}
    }
}

TEST_CASE("canonical keys quotient by rotation and free reduction")
{
    CHECK(canonical_key(parse_braid("b=3; w= s2 s1")) == canonical_key(parse_braid("b=3; w= s1 s2")));
    CHECK(canonical_key(parse_braid("b=3; w= s1 -s1 s2")) == canonical_key(parse_braid("b=3; w= s2")));
    CHECK(canonical_key(parse_braid("b=4; w=")) == "b:4|");
    // conjugation by a prefix is a rotation
    CHECK(canonical_key(parse_braid("b=3; w= -s1 s2 s1")) ==
          canonical_key(parse_braid("b=3; w= s1 -s1 s2")));
}

TEST_CASE("find_reduction classifies the three reduction patterns")
{
    auto sq = find_reduction(parse_resolved("b=2; w= t1 t1"));
    auto* s = std::get_if<SquareStep>(&sq);
    REQUIRE(s);
    CHECK(s->index == 1);
    CHECK(s->position == 0);

    auto um = find_reduction(parse_resolved("b=4; w= t3 t2 t1"));
    auto* u = std::get_if<UniqueMaxStep>(&um);
    REQUIRE(u);
    CHECK(u->index == 3);
    CHECK(u->transformed.letters.back() == 3);

    auto tr = find_reduction(parse_resolved("b=3; w= t2 t1 t2"));
    auto* t = std::get_if<TriangleStep>(&tr);
    REQUIRE(t);
    CHECK(t->index == 2);
    CHECK(t->position == 0);
    std::vector<int> tail(t->transformed.letters.end() - 3, t->transformed.letters.end());
    CHECK(tail == std::vector<int>{2, 1, 2});
}

TEST_CASE("recorded isotopies replay to the claimed pattern")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        ResolvedWord mu;
        mu.strands = 2 + static_cast<int>(rng() % 3);
        int len = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i)
            mu.letters.push_back(1 + static_cast<int>(rng() % (mu.strands - 1)));
        ReductionStep step = find_reduction(mu);
        std::visit(
            [&](auto& s) {
                std::vector<int> replayed = apply_isotopies(mu.letters, s.isotopies);
                CHECK(replayed == s.transformed.letters);
            },
            step);
        if (auto* s = std::get_if<SquareStep>(&step)) {
            auto& w = s->transformed.letters;
            CHECK(w[w.size() - 1] == s->index);
            CHECK(w[w.size() - 2] == s->index);
        } else if (auto* t = std::get_if<TriangleStep>(&step)) {
            auto& w = t->transformed.letters;
            CHECK(w[w.size() - 1] == t->index);
            CHECK(w[w.size() - 2] == t->index - 1);
            CHECK(w[w.size() - 3] == t->index);
        } else {
            auto& u = std::get<UniqueMaxStep>(step);
            auto& w = u.transformed.letters;
            CHECK(w.back() == u.index);
            for (size_t i = 0; i + 1 < w.size(); ++i)
                CHECK(w[i] < u.index);
        }
    }
}

TEST_CASE("reduction successors shrink the (strands, weight) measure")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        ResolvedWord mu;
        mu.strands = 2 + static_cast<int>(rng() % 3);
        int len = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < len; ++i)
            mu.letters.push_back(1 + static_cast<int>(rng() % (mu.strands - 1)));
        if (find_free_strand(mu))
            continue;
        auto measure = [](const ResolvedWord& w) {
            return std::make_pair(w.strands, weight(w));
        };
        auto base = measure(mu);
        ReductionStep step = find_reduction(mu);
        if (auto* u = std::get_if<UniqueMaxStep>(&step)) {
            ResolvedWord nu = u->transformed;
            nu.letters.pop_back();
            CHECK(measure(delete_strand(nu, u->index + 1)) < base);
        } else if (auto* s = std::get_if<SquareStep>(&step)) {
            ResolvedWord shorter = s->transformed;
            shorter.letters.pop_back();
            CHECK(measure(shorter) < base);
        } else {
            auto& t = std::get<TriangleStep>(step);
            ResolvedWord nu = t.transformed;
            nu.letters.resize(nu.letters.size() - 3);
            for (auto suffix : {std::vector<int>{t.index - 1, t.index, t.index - 1},
                                std::vector<int>{t.index},
                                std::vector<int>{t.index - 1}}) {
                ResolvedWord child = nu;
                child.letters.insert(child.letters.end(), suffix.begin(), suffix.end());
                CHECK(measure(child) < base);
            }
        }
    }
}
