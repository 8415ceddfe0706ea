#pragma once

// JSON emission for every CLI-facing value.  Grading-valued fields are
// half-tick integers (twice the underlying exponents) throughout.

#include "krw/homfly.hpp"
#include "krw/khovanov.hpp"
#include "krw/koszul.hpp"
#include "krw/moy.hpp"

#include <json.hpp>

namespace krw {

using nlohmann::json;

inline json to_json(const HomflyPoly& p)
{
    json arr = json::array();
    for (auto& [k, c] : p.terms())
        arr.push_back({{"x", k.first}, {"y", k.second}, {"c", rat_to_string(c)}});
    return arr;
}

inline json laurent_to_json(const LaurentQ& p, const std::string& var)
{
    json arr = json::array();
    for (auto& [e, c] : p.terms())
        arr.push_back({{var, e}, {"c", rat_to_string(c)}});
    return arr;
}

inline json to_json(const KhovanovTable& t)
{
    json arr = json::array();
    for (auto& [hq, d] : t.dims)
        arr.push_back({{"h", hq.first}, {"q", 2 * hq.second}, {"dim", d}});
    return arr;
}

inline json to_json(const GradedDimension& g)
{
    return laurent_to_json(g.poly, "q");
}

inline json to_json(const ASupport& s)
{
    json degrees = json::array();
    for (int d : s.degrees)
        degrees.push_back(2 * d);
    return {{"a_degrees", degrees}, {"exact", s.exact}};
}

inline json to_json(const PsiCertificate& c)
{
    json j{{"braid", format_word(c.input)},
           {"mirror", format_word(c.mirror_word)},
           {"phi", {{"vertex", c.phi_vertex}, {"state", c.phi_state}}},
           {"h", c.h_degree},
           {"q", 2 * c.q_degree},
           {"cocycle", c.cocycle},
           {"class_zero", c.class_zero},
           {"nonvanishing", !c.class_zero}};
    json wit = json::array();
    for (auto& [v, s, coeff] : c.preimage)
        wit.push_back({{"vertex", v}, {"state", s}, {"c", rat_to_string(coeff)}});
    j["preimage"] = wit;
    json obs = json::array();
    for (size_t i = 0; i < c.obstruction.size(); ++i)
        if (c.obstruction[i] != 0)
            obs.push_back({{"i", i}, {"c", rat_to_string(c.obstruction[i])}});
    j["obstruction"] = obs;
    return j;
}

inline json to_json(const KoszulFactorization& f)
{
    json rows = json::array();
    for (auto& r : f.rows)
        rows.push_back({{"a", r.a.to_string()},
                        {"b", r.b.to_string()},
                        {"shift", {2 * r.s0.a, 2 * r.s0.x, 2 * r.s1.a, 2 * r.s1.x}}});
    return rows;
}

inline json to_json(const BigradedTable& t)
{
    json arr = json::array();
    for (auto& [k, d] : t.dims)
        arr.push_back({{"z2", std::get<0>(k)},
                       {"a", 2 * std::get<1>(k)},
                       {"x", 2 * std::get<2>(k)},
                       {"dim", d}});
    return {{"dims", arr},
            {"window",
             {{"a", {2 * t.window.a_min, 2 * t.window.a_max}},
              {"x", {2 * t.window.x_min, 2 * t.window.x_max}}}},
            {"z2_concentrated", t.z2_concentrated},
            {"truncated", t.truncation_warning}};
}

} // namespace krw
