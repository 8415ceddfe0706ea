#pragma once

// Executable verification of the grading inequalities on braid closures,
// plus the self-linking report with the classical HOMFLY comparator.
// Every verdict keeps the raw numbers it was drawn from.

#include "krw/braid.hpp"
#include "krw/homfly.hpp"
#include "krw/khovanov.hpp"
#include "krw/koszul.hpp"
#include "krw/moy.hpp"

#include <json.hpp>

#include <optional>

namespace krw {

struct InequalityVerdict {
    std::string name;
    std::array<int, 2> window;  // half-ticks
    std::vector<int> observed;  // half-ticks
    bool pass = true;
};

struct ResolutionRecord {
    std::vector<bool> bits;
    int homological_degree = 0;
    int p_shift = 0; // ticks
    std::set<int> a_support;
    bool support_exact = true;
    std::optional<std::pair<int, int>> gn; // ticks
};

struct BoundReport {
    BraidStats braid;
    int n = 2;
    std::vector<InequalityVerdict> verdicts;
    std::vector<ResolutionRecord> resolutions;
    // sl_report extras
    std::optional<int> self_linking;
    std::optional<int> classical_bound;
    std::optional<int> mirror_proxy_bound;
    bool psi_nonzero = false;
    bool witness_verified = false;
    bool sl_certified_evidence = false;

    bool all_pass() const
    {
        for (auto& v : verdicts)
            if (!v.pass)
                return false;
        return true;
    }
};

// Hat-grading window for a closed braid, checked at resolution level:
// the a-support of every resolution lies in [-b, -1], which pins
// hat-g between (w-b)/2 and (w+b)/2 - 1.
inline BoundReport check_hat_inequality(const BraidWord& b)
{
    BoundReport rep;
    rep.braid = stats(b);
    int w = rep.braid.writhe, strands = rep.braid.strands;
    ASupportRewriter rewriter;
    int lo = 0, hi = 0;
    bool first = true, pass = true;
    for (auto& res : enumerate_resolutions(b, 2)) {
        ResolutionRecord rec;
        rec.bits = res.bits;
        rec.homological_degree = res.homological_degree;
        rec.p_shift = res.quantum_shift;
        ASupport s = rewriter.support(res.word);
        rec.a_support = s.degrees;
        rec.support_exact = s.exact;
        for (int d : s.degrees) {
            if (d < -strands || d > -1)
                pass = false;
            if (first) {
                lo = hi = d;
                first = false;
            }
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        rep.resolutions.push_back(std::move(rec));
    }
    InequalityVerdict per_res{"resolved-braids", {-2 * strands, -2}, {2 * lo, 2 * hi}, pass};
    rep.verdicts.push_back(per_res);
    // implied hat window (w-b)/2 .. (w+b)/2 - 1, in half-ticks
    InequalityVerdict hat{"main-hat",
                          {w - strands, w + strands - 2},
                          {2 * lo + (w + strands), 2 * hi + (w + strands)},
                          pass};
    rep.verdicts.push_back(hat);
    return rep;
}

// Quantum-grading window in the x^{n+1} theory: per-resolution extremes
// within +-((n-1)b + m_Gamma), the shifted hull within the link window,
// and (for n = 2) the actual link-level extremes inside both.
inline BoundReport check_n_inequality(const BraidWord& b, int n)
{
    if (n < 2)
        throw invariant_error("check_n_inequality needs n >= 2");
    BoundReport rep;
    rep.braid = stats(b);
    rep.n = n;
    int w = rep.braid.writhe, strands = rep.braid.strands;
    int cplus = rep.braid.positive, cminus = rep.braid.negative;
    int win_lo = (n - 1) * (w - strands) - 2 * cminus;
    int win_hi = (n - 1) * (w + strands) + 2 * cplus;

    MoyRewriter rewriter(n);
    bool res_pass = true, hull_pass = true;
    int hull_lo = 0, hull_hi = 0;
    bool first = true;
    for (auto& res : enumerate_resolutions(b, n)) {
        ResolutionRecord rec;
        rec.bits = res.bits;
        rec.homological_degree = res.homological_degree;
        rec.p_shift = res.quantum_shift;
        auto [lo, hi] = rewriter.extremes(res.word); // asserts the +-((n-1)b+m) bound
        rec.gn = {lo, hi};
        int m_gamma = static_cast<int>(res.word.letters.size());
        if (lo < -(n - 1) * strands - m_gamma || hi > (n - 1) * strands + m_gamma)
            res_pass = false;
        int slo = lo + res.quantum_shift, shi = hi + res.quantum_shift;
        if (slo < win_lo || shi > win_hi)
            hull_pass = false;
        if (first) {
            hull_lo = slo;
            hull_hi = shi;
            first = false;
        }
        hull_lo = std::min(hull_lo, slo);
        hull_hi = std::max(hull_hi, shi);
        rep.resolutions.push_back(std::move(rec));
    }
    rep.verdicts.push_back({"resolved-braids-n",
                            {-2 * ((n - 1) * strands + cplus + cminus),
                             2 * ((n - 1) * strands + cplus + cminus)},
                            {2 * hull_lo, 2 * hull_hi},
                            res_pass});
    rep.verdicts.push_back(
        {"main-n-window", {2 * win_lo, 2 * win_hi}, {2 * hull_lo, 2 * hull_hi}, hull_pass});
    if (n == 2) {
        auto [glo, ghi] = g2_extremes(b);
        bool link_pass = glo >= win_lo && ghi <= win_hi;
        bool subq_pass = glo >= hull_lo && ghi <= hull_hi;
        rep.verdicts.push_back(
            {"main-n2-link", {2 * win_lo, 2 * win_hi}, {2 * glo, 2 * ghi}, link_pass});
        rep.verdicts.push_back(
            {"main-n2-subquotient", {2 * hull_lo, 2 * hull_hi}, {2 * glo, 2 * ghi}, subq_pass});
    }
    return rep;
}

// Self-linking report: sl = w - b, the classical HOMFLY bound, the n=2
// mirror proxy from the grading window of the mirror, and the psi_2
// evidence flag.
inline BoundReport sl_report(const BraidWord& b,
                             const std::optional<QuasiPositiveWitness>& witness = std::nullopt)
{
    BoundReport rep;
    rep.braid = stats(b);
    int sl = rep.braid.self_linking;
    rep.self_linking = sl;

    int classical = classical_sl_bound(homfly(b));
    rep.classical_bound = classical;
    rep.verdicts.push_back({"sl-classical",
                            {2 * classical, 2 * classical},
                            {2 * sl},
                            sl <= classical});

    // the window applied to the mirror: sl <= -(g2_max(mirror) - 2 c_+(mirror))
    BraidWord mb = mirror(b);
    BraidStats ms = stats(mb);
    int proxy = -(g2_extremes(mb).second - 2 * ms.positive);
    rep.mirror_proxy_bound = proxy;
    rep.verdicts.push_back({"sl-mirror-n2-proxy", {2 * proxy, 2 * proxy}, {2 * sl}, sl <= proxy});

    PsiCertificate psi = psi2(b);
    rep.psi_nonzero = psi.cocycle && !psi.class_zero;
    if (witness) {
        rep.witness_verified = verify_witness(b, *witness);
        rep.sl_certified_evidence = rep.witness_verified && rep.psi_nonzero;
    }
    return rep;
}

inline nlohmann::json to_json(const BoundReport& rep)
{
    nlohmann::json j;
    j["braid"] = {{"w", rep.braid.writhe},
                  {"b", rep.braid.strands},
                  {"c_plus", rep.braid.positive},
                  {"c_minus", rep.braid.negative},
                  {"sl", rep.braid.self_linking}};
    j["n"] = rep.n;
    nlohmann::json items = nlohmann::json::array();
    for (auto& v : rep.verdicts)
        items.push_back({{"name", v.name},
                         {"window", {v.window[0], v.window[1]}},
                         {"observed", v.observed},
                         {"pass", v.pass}});
    j["inequalities"] = items;
    nlohmann::json res = nlohmann::json::array();
    for (auto& r : rep.resolutions) {
        nlohmann::json one{{"h", r.homological_degree}, {"p", 2 * r.p_shift}};
        std::string bits;
        for (bool bit : r.bits)
            bits += bit ? '1' : '0';
        one["bits"] = bits;
        if (!r.a_support.empty()) {
            nlohmann::json sup = nlohmann::json::array();
            for (int d : r.a_support)
                sup.push_back(2 * d);
            one["a_support"] = sup;
            one["support_exact"] = r.support_exact;
        }
        if (r.gn)
            one["gn"] = {2 * r.gn->first, 2 * r.gn->second};
        res.push_back(one);
    }
    j["resolutions"] = res;
    if (rep.self_linking) {
        j["sl"] = *rep.self_linking;
        j["classical_bound"] = *rep.classical_bound;
        j["mirror_proxy_bound"] = *rep.mirror_proxy_bound;
        j["psi_nonzero"] = rep.psi_nonzero;
        j["witness_verified"] = rep.witness_verified;
        j["sl_certified_evidence"] = rep.sl_certified_evidence;
        j["note"] = rep.sl_certified_evidence
                        ? "maximal sl certified at n=2 evidence level (finite-n proxy only)"
                        : "";
    }
    return j;
}

} // namespace krw
