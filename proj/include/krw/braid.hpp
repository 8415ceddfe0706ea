#pragma once

// Braid words, Markov-move calculus, resolutions of closed braids, and the
// reduction search on resolved words (unique-max / square / triangle
// patterns exposed by recorded, replayable isotopies).

#include "krw/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace krw {

// Letters are signed generator indices: +i for sigma_i, -i for sigma_i^{-1},
// 1 <= i <= strands-1.  Positive letters are positive crossings (Figure-1
// convention: opposite to the KR papers).
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord& a, const BraidWord& b)
    {
        return a.strands == b.strands && a.letters == b.letters;
    }
};

struct ResolvedWord {
    int strands = 1;
    std::vector<int> letters; // tau indices, 1 <= i <= strands-1

    friend bool operator==(const ResolvedWord& a, const ResolvedWord& b)
    {
        return a.strands == b.strands && a.letters == b.letters;
    }
    friend bool operator<(const ResolvedWord& a, const ResolvedWord& b)
    {
        return std::tie(a.strands, a.letters) < std::tie(b.strands, b.letters);
    }
};

inline void validate(const BraidWord& w)
{
    if (w.strands < 1)
        throw parse_error("braid needs at least one strand");
    for (int l : w.letters)
        if (l == 0 || std::abs(l) >= w.strands)
            throw parse_error("letter index out of range for strand count");
}

inline void validate(const ResolvedWord& w)
{
    if (w.strands < 1)
        throw parse_error("resolved word needs at least one strand");
    for (int l : w.letters)
        if (l < 1 || l >= w.strands)
            throw parse_error("tau index out of range for strand count");
}

// --- text format ------------------------------------------------------
// `b=<int>; w= s1 -s2 s1` for braids, `b=<int>; w= t1 t2` for resolved
// words.  Whitespace-separated tokens; indices >= b rejected.

namespace detail {

inline std::pair<int, std::vector<std::string>> parse_word_header(const std::string& text)
{
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw parse_error("expected `b=<int>; w= ...`");
    std::string bpart = text.substr(0, semi);
    auto eq = bpart.find('=');
    if (eq == std::string::npos || bpart.substr(0, eq).find('b') == std::string::npos)
        throw parse_error("expected `b=<int>` before `;`");
    int b = 0;
    try {
        b = std::stoi(bpart.substr(eq + 1));
    } catch (...) {
        throw parse_error("bad strand count");
    }
    std::string rest = text.substr(semi + 1);
    auto weq = rest.find('=');
    if (weq == std::string::npos || rest.substr(0, weq).find('w') == std::string::npos)
        throw parse_error("expected `w=` after `;`");
    std::istringstream is(rest.substr(weq + 1));
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok)
        tokens.push_back(tok);
    return {b, tokens};
}

} // namespace detail

inline BraidWord parse_braid(const std::string& text)
{
    auto [b, tokens] = detail::parse_word_header(text);
    BraidWord w;
    w.strands = b;
    for (auto& t : tokens) {
        bool neg = t.size() > 0 && t[0] == '-';
        std::string core = neg ? t.substr(1) : t;
        if (core.size() < 2 || core[0] != 's')
            throw parse_error("bad braid token: " + t);
        int idx;
        try {
            idx = std::stoi(core.substr(1));
        } catch (...) {
            throw parse_error("bad braid token: " + t);
        }
        w.letters.push_back(neg ? -idx : idx);
    }
    validate(w);
    return w;
}

inline ResolvedWord parse_resolved(const std::string& text)
{
    auto [b, tokens] = detail::parse_word_header(text);
    ResolvedWord w;
    w.strands = b;
    for (auto& t : tokens) {
        if (t.size() < 2 || t[0] != 't')
            throw parse_error("bad resolved token: " + t);
        int idx;
        try {
            idx = std::stoi(t.substr(1));
        } catch (...) {
            throw parse_error("bad resolved token: " + t);
        }
        w.letters.push_back(idx);
    }
    validate(w);
    return w;
}

inline std::string format_word(const BraidWord& w)
{
    std::ostringstream os;
    os << "b=" << w.strands << "; w=";
    for (int l : w.letters)
        os << " " << (l < 0 ? "-s" : "s") << std::abs(l);
    return os.str();
}

inline std::string format_word(const ResolvedWord& w)
{
    std::ostringstream os;
    os << "b=" << w.strands << "; w=";
    for (int l : w.letters)
        os << " t" << l;
    return os.str();
}

// --- statistics -------------------------------------------------------

struct BraidStats {
    int writhe = 0;
    int strands = 1;
    int positive = 0;
    int negative = 0;
    int self_linking = 0; // sl = w - b for the transversal braid closure
};

inline BraidStats stats(const BraidWord& w)
{
    BraidStats s;
    s.strands = w.strands;
    for (int l : w.letters)
        (l > 0 ? s.positive : s.negative)++;
    s.writhe = s.positive - s.negative;
    s.self_linking = s.writhe - s.strands;
    return s;
}

// --- Markov moves -----------------------------------------------------

inline BraidWord mirror(const BraidWord& w)
{
    BraidWord r = w;
    for (int& l : r.letters)
        l = -l;
    return r;
}

inline BraidWord free_reduce(const BraidWord& w)
{
    BraidWord r;
    r.strands = w.strands;
    for (int l : w.letters) {
        if (!r.letters.empty() && r.letters.back() == -l)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

inline BraidWord inverse(const BraidWord& w)
{
    BraidWord r;
    r.strands = w.strands;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b)
{
    if (a.strands != b.strands)
        throw invariant_error("concat of words with different strand counts");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

inline BraidWord conjugate(const BraidWord& w, const BraidWord& eta)
{
    return concat(concat(inverse(eta), w), eta);
}

inline BraidWord stabilize_pos(const BraidWord& w)
{
    BraidWord r = w;
    r.strands += 1;
    r.letters.push_back(w.strands);
    return r;
}

inline BraidWord stabilize_neg(const BraidWord& w)
{
    BraidWord r = w;
    r.strands += 1;
    r.letters.push_back(-w.strands);
    return r;
}

inline BraidWord destabilize(const BraidWord& w)
{
    int top = w.strands - 1;
    if (w.letters.empty() || std::abs(w.letters.back()) != top)
        throw invariant_error("destabilize: last letter is not sigma_{b-1}^{+-1}");
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (std::abs(w.letters[i]) == top)
            throw invariant_error("destabilize: sigma_{b-1} occurs more than once");
    BraidWord r;
    r.strands = w.strands - 1;
    r.letters.assign(w.letters.begin(), w.letters.end() - 1);
    return r;
}

// --- quasi-positive witnesses ----------------------------------------

struct QuasiPositiveWitness {
    // nu = mu_1 sigma_{i_1} mu_1^{-1} ... mu_k sigma_{i_k} mu_k^{-1}
    std::vector<std::pair<BraidWord, int>> factors;
};

inline BraidWord expand_witness(const QuasiPositiveWitness& wit, int strands)
{
    BraidWord r;
    r.strands = strands;
    for (auto& [mu, idx] : wit.factors) {
        if (mu.strands != strands)
            throw invariant_error("witness conjugator strand mismatch");
        if (idx < 1 || idx >= strands)
            throw invariant_error("witness generator index out of range");
        BraidWord gen;
        gen.strands = strands;
        gen.letters = {idx};
        r = concat(r, concat(concat(mu, gen), inverse(mu)));
    }
    return r;
}

inline bool verify_witness(const BraidWord& b, const QuasiPositiveWitness& wit)
{
    BraidWord lhs = free_reduce(b);
    BraidWord rhs = free_reduce(expand_witness(wit, b.strands));
    return lhs == rhs;
}

// --- canonical cache key ----------------------------------------------

// Cyclic free reduction (closure-level), then lexicographically minimal
// rotation.  Conjugation by a prefix hits the same key.
inline std::vector<int> cyclic_free_reduce(std::vector<int> letters)
{
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> out;
        for (int l : letters) {
            if (!out.empty() && out.back() == -l) {
                out.pop_back();
                changed = true;
            } else {
                out.push_back(l);
            }
        }
        while (out.size() >= 2 && out.front() == -out.back()) {
            out.erase(out.begin());
            out.pop_back();
            changed = true;
        }
        letters = std::move(out);
    }
    return letters;
}

inline std::vector<int> min_rotation(const std::vector<int>& v)
{
    if (v.empty())
        return v;
    std::vector<int> best = v;
    std::vector<int> cur = v;
    for (size_t k = 1; k < v.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best)
            best = cur;
    }
    return best;
}

inline std::string canonical_key(const BraidWord& w)
{
    std::vector<int> letters = min_rotation(cyclic_free_reduce(w.letters));
    std::ostringstream os;
    os << "b:" << w.strands << "|";
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i)
            os << " ";
        os << (letters[i] < 0 ? "-s" : "s") << std::abs(letters[i]);
    }
    return os.str();
}

// --- resolutions ------------------------------------------------------

// One complete smoothing of the closed braid: bit 1 at a crossing is the
// wide-edge resolution, bit 0 the oriented-arcs resolution.
struct Resolution {
    BraidWord parent;
    std::vector<bool> bits;
    ResolvedWord word;       // wide edges, in word order
    int c_gamma_plus = 0;    // 1-resolved positive crossings
    int c_gamma_minus = 0;   // 1-resolved negative crossings
    int homological_degree = 0;
    int quantum_shift = 0;   // p_Gamma for the chosen n
};

inline Resolution make_resolution(const BraidWord& b, const std::vector<bool>& bits, int n)
{
    if (bits.size() != b.letters.size())
        throw invariant_error("resolution bit count mismatch");
    Resolution r;
    r.parent = b;
    r.bits = bits;
    r.word.strands = b.strands;
    for (size_t i = 0; i < bits.size(); ++i) {
        int l = b.letters[i];
        if (bits[i]) {
            r.word.letters.push_back(std::abs(l));
            if (l > 0) {
                r.c_gamma_plus++;
                r.homological_degree -= 1;
                r.quantum_shift += n;
            } else {
                r.c_gamma_minus++;
                r.homological_degree += 1;
                r.quantum_shift += -n;
            }
        } else {
            r.quantum_shift += l > 0 ? n - 1 : 1 - n;
        }
    }
    return r;
}

inline std::vector<Resolution> enumerate_resolutions(const BraidWord& b, int n)
{
    if (n < 2)
        throw invariant_error("enumerate_resolutions needs n >= 2");
    size_t c = b.letters.size();
    if (c > 24)
        throw budget_error("too many crossings to enumerate resolutions");
    std::vector<Resolution> out;
    out.reserve(size_t(1) << c);
    for (size_t mask = 0; mask < (size_t(1) << c); ++mask) {
        std::vector<bool> bits(c);
        for (size_t i = 0; i < c; ++i)
            bits[i] = (mask >> i) & 1;
        out.push_back(make_resolution(b, bits, n));
    }
    return out;
}

// --- resolved-word utilities ------------------------------------------

inline long weight(const ResolvedWord& w)
{
    long s = 0;
    for (int l : w.letters)
        s += l;
    return s;
}

// Strand s (1-based) is a free circle iff no letter touches it.
inline std::optional<int> find_free_strand(const ResolvedWord& w)
{
    std::vector<bool> touched(w.strands + 2, false);
    for (int l : w.letters) {
        touched[l] = true;
        touched[l + 1] = true;
    }
    for (int s = 1; s <= w.strands; ++s)
        if (!touched[s])
            return s;
    return std::nullopt;
}

inline ResolvedWord delete_strand(const ResolvedWord& w, int s)
{
    ResolvedWord r;
    r.strands = w.strands - 1;
    for (int l : w.letters) {
        if (l == s - 1 || l == s)
            throw invariant_error("delete_strand: strand is not free");
        r.letters.push_back(l > s ? l - 1 : l);
    }
    return r;
}

// Memo key: lexicographically minimal rotation after a greedy type (I)
// commutation sort; invariant of the cyclic-word class we memoize on.
inline ResolvedWord canonical_cyclic(const ResolvedWord& w)
{
    std::vector<int> cur = w.letters;
    bool changed = true;
    while (changed) {
        changed = false;
        cur = min_rotation(cur);
        for (size_t p = 0; p + 1 < cur.size(); ++p) {
            if (std::abs(cur[p] - cur[p + 1]) > 1 && cur[p] > cur[p + 1]) {
                std::swap(cur[p], cur[p + 1]);
                changed = true;
            }
        }
    }
    ResolvedWord r;
    r.strands = w.strands;
    r.letters = cur;
    return r;
}

// --- reduction search (the induction engine) ---------------------------

struct IsotopyStep {
    enum Kind { Rotate, Commute } kind;
    int arg; // Rotate: left-rotation amount; Commute: swap positions arg, arg+1
};

struct UniqueMaxStep {
    int index;   // the unique maximal tau index i
    ResolvedWord transformed; // = nu tau_i with all nu letters < i
    std::vector<IsotopyStep> isotopies;
};

struct SquareStep {
    int index;   // j with suffix tau_j tau_j
    int position; // start of the pattern in `transformed`
    ResolvedWord transformed;
    std::vector<IsotopyStep> isotopies;
};

struct TriangleStep {
    int index;   // j with suffix tau_j tau_{j-1} tau_j
    int position;
    ResolvedWord transformed;
    std::vector<IsotopyStep> isotopies;
};

using ReductionStep = std::variant<UniqueMaxStep, SquareStep, TriangleStep>;

inline std::vector<int> apply_isotopies(std::vector<int> w, const std::vector<IsotopyStep>& steps)
{
    for (auto& s : steps) {
        if (s.kind == IsotopyStep::Rotate) {
            if (!w.empty())
                std::rotate(w.begin(), w.begin() + (s.arg % static_cast<int>(w.size())), w.end());
        } else {
            if (s.arg < 0 || s.arg + 1 >= static_cast<int>(w.size()))
                throw invariant_error("commute position out of range");
            if (std::abs(w[s.arg] - w[s.arg + 1]) <= 1)
                throw invariant_error("commute of interfering letters");
            std::swap(w[s.arg], w[s.arg + 1]);
        }
    }
    return w;
}

inline ReductionStep find_reduction(const ResolvedWord& mu)
{
    if (mu.letters.empty())
        throw invariant_error("find_reduction on empty word");
    const int m = static_cast<int>(mu.letters.size());
    std::vector<IsotopyStep> steps;
    std::vector<int> w = mu.letters;
    auto rotate_to_end = [&](int pos) { // left-rotate so w[pos] becomes last
        int amt = (pos + 1) % m;
        if (amt != 0) {
            steps.push_back({IsotopyStep::Rotate, amt});
            std::rotate(w.begin(), w.begin() + amt, w.end());
        }
    };

    int maxi = *std::max_element(w.begin(), w.end());
    std::vector<int> occ;
    for (int p = 0; p < m; ++p)
        if (w[p] == maxi)
            occ.push_back(p);

    if (occ.size() == 1) {
        rotate_to_end(occ[0]);
        UniqueMaxStep s;
        s.index = maxi;
        s.transformed = {mu.strands, w};
        s.isotopies = std::move(steps);
        return s;
    }

    // Two cyclically consecutive occurrences of the max; rotate the second
    // one to the end so the window sits inside the linear word.
    rotate_to_end(occ[1]);
    int lo = -1;
    for (int p = m - 2; p >= 0; --p)
        if (w[p] == maxi) {
            lo = p;
            break;
        }
    int hi = m - 1;
    int j = maxi;

    // Shrink [lo, hi] to bounding occurrences of j with interior letters
    // < j, descending j while the interior holds 2+ copies of j-1.
    while (true) {
        std::vector<int> inner;
        for (int p = lo + 1; p < hi; ++p)
            if (w[p] == j - 1)
                inner.push_back(p);
        if (inner.size() >= 2) {
            lo = inner[0];
            hi = inner[1];
            j -= 1;
            continue;
        }
        auto commute_left = [&](int p, int target) { // move w[p] left to `target`
            for (int q = p; q > target; --q) {
                steps.push_back({IsotopyStep::Commute, q - 1});
                std::swap(w[q - 1], w[q]);
            }
        };
        if (inner.empty()) {
            // evacuate interior letters (all <= j-2) leftward past w[lo]
            while (hi - lo > 1) {
                commute_left(lo + 1, lo);
                lo += 1;
            }
            rotate_to_end(hi);
            SquareStep s;
            s.index = j;
            s.position = m - 2;
            s.transformed = {mu.strands, w};
            s.isotopies = std::move(steps);
            return s;
        }
        // one tau_{j-1} at position t: evacuate (lo, t) leftward past w[lo]
        // and (t, hi) rightward past w[hi]; every swap involves tau_j and a
        // letter <= j-2, so each is a legal type (I) move
        int t = inner[0];
        while (t - lo > 1) {
            commute_left(lo + 1, lo);
            lo += 1;
        }
        t = lo + 1;
        while (hi - t > 1) {
            steps.push_back({IsotopyStep::Commute, hi - 1});
            std::swap(w[hi - 1], w[hi]);
            hi -= 1;
        }
        rotate_to_end(hi);
        TriangleStep s;
        s.index = j;
        s.position = m - 3;
        s.transformed = {mu.strands, w};
        s.isotopies = std::move(steps);
        return s;
    }
}

} // namespace krw
