#include "krw/bounds.hpp"

#include <doctest.h>

using namespace krw;

TEST_CASE("hat inequality reports")
{
    BoundReport r = check_hat_inequality(parse_braid("b=2; w= s1 s1 s1"));
    CHECK(r.resolutions.size() == 8);
    CHECK(r.all_pass());
    // implied hat window [(w-b)/2, (w+b)/2 - 1] = [1/2, 3/2] in half-ticks
    CHECK(r.verdicts[1].name == "main-hat");
    CHECK(r.verdicts[1].window == std::array<int, 2>{1, 3});

    BoundReport e = check_hat_inequality(parse_braid("b=3; w="));
    CHECK(e.resolutions.size() == 1);
    CHECK(e.resolutions[0].a_support == std::set<int>{-3, -2, -1});
    CHECK(e.all_pass());

    BoundReport m = check_hat_inequality(parse_braid("b=3; w= s1 -s2"));
    CHECK(m.resolutions.size() == 4);
    CHECK(m.all_pass());
    CHECK(m.verdicts[1].window == std::array<int, 2>{-3, 1}); // [-3/2, 1/2]
}

TEST_CASE("n-theory inequality reports")
{
    BoundReport r = check_n_inequality(parse_braid("b=2; w= s1 s1 s1"), 2);
    CHECK(r.all_pass());
    bool found = false;
    for (auto& v : r.verdicts)
        if (v.name == "main-n2-link") {
            found = true;
            CHECK(v.window == std::array<int, 2>{2, 22}); // [1, 11] in ticks
            CHECK(v.observed[0] >= 2);
            CHECK(v.observed[1] <= 22);
        }
    CHECK(found);

    // sigma1^{-1} at n = 3: the link window is
    // [(n-1)(w-b)-2c_-, (n-1)(w+b)+2c_+] = [-8, 2]
    BoundReport s = check_n_inequality(parse_braid("b=2; w= -s1"), 3);
    CHECK(s.all_pass());
    for (auto& v : s.verdicts)
        if (v.name == "main-n-window")
            CHECK(v.window == std::array<int, 2>{-16, 4}); // half-ticks

    // resolution-level window always contains the n=2 link extremes
    for (auto& text : {"b=2; w= s1 -s1", "b=3; w= s1 s2 -s1", "b=3; w= -s1 -s2"}) {
        BoundReport any = check_n_inequality(parse_braid(text), 2);
        CHECK(any.all_pass());
    }
}

TEST_CASE("sl report")
{
    QuasiPositiveWitness wit;
    BraidWord id2 = parse_braid("b=2; w=");
    wit.factors = {{id2, 1}, {id2, 1}, {id2, 1}};
    BoundReport tre = sl_report(parse_braid("b=2; w= s1 s1 s1"), wit);
    CHECK(*tre.self_linking == 1);
    CHECK(*tre.classical_bound == 1);
    CHECK(tre.psi_nonzero);
    CHECK(tre.witness_verified);
    CHECK(tre.sl_certified_evidence);
    CHECK(tre.all_pass());

    BoundReport neg = sl_report(parse_braid("b=2; w= -s1"));
    CHECK(*neg.self_linking == -3);
    CHECK(!neg.psi_nonzero);
    CHECK(!neg.sl_certified_evidence);
    CHECK(neg.all_pass());

    BoundReport empty = sl_report(parse_braid("b=2; w="));
    CHECK(*empty.self_linking == -2);
    CHECK(empty.all_pass());
}

TEST_CASE("negative stabilization drops sl by two and keeps every bound valid")
{
    for (auto& text : {"b=2; w= s1 s1 s1", "b=2; w=", "b=3; w= s1 -s2"}) {
        BraidWord w = parse_braid(text);
        BoundReport before = sl_report(w);
        BoundReport after = sl_report(stabilize_neg(w));
        CHECK(*after.self_linking == *before.self_linking - 2);
        // the classical bound is a link invariant, hence cannot grow
        CHECK(*after.classical_bound == *before.classical_bound);
        // the mirror proxy is presentation-dependent (it carries c_- of the
        // word) and may loosen; only validity is guaranteed
        CHECK(*after.self_linking <= *after.mirror_proxy_bound);
        CHECK(after.all_pass());
    }
}

TEST_CASE("bound report JSON carries the schema fields")
{
    nlohmann::json j = to_json(check_hat_inequality(parse_braid("b=2; w= s1")));
    REQUIRE(j.contains("inequalities"));
    for (auto& item : j["inequalities"]) {
        CHECK(item.contains("name"));
        CHECK(item.contains("window"));
        CHECK(item.contains("observed"));
        CHECK(item.contains("pass"));
        CHECK(item["window"].size() == 2);
    }
}
