#pragma once

// Rational n=2 link homology of braid closures via the cube of complete
// smoothings, with positive crossings placed at cohomological degrees
// -1..0, and the transversal class psi_2 of the mirror braid with an
// exact class-zero decision.

#include "krw/braid.hpp"
#include "krw/homfly.hpp"
#include "krw/linalg.hpp"

#include <array>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace krw {

// The crossing shifts already calibrate the theory: the unknot table
// sits at (0, -1), (0, +1) with zero extra offset in either grading.
inline constexpr int kh_homological_offset = 0;
inline constexpr int kh_quantum_offset = 0;

struct CubeVertex {
    std::vector<bool> bits;
    int h = 0;         // cohomological degree
    int p = 0;         // quantum shift p_Gamma at n = 2 (ticks)
    std::vector<int> circle_rep; // canonical representative interval per circle, sorted
    std::map<int, int> circle_of_rep;
    std::vector<int> interval_circle; // circle index per interval id

    int circles() const { return static_cast<int>(circle_rep.size()); }
};

class CubeComplex {
public:
    explicit CubeComplex(const BraidWord& braid) : braid_(braid)
    {
        validate(braid);
        const int m = static_cast<int>(braid.letters.size());
        if (m > 18)
            throw budget_error("cube too large");
        trace_intervals();
        vertices_.resize(size_t(1) << m);
        for (size_t mask = 0; mask < vertices_.size(); ++mask)
            build_vertex(mask);
    }

    const BraidWord& braid() const { return braid_; }
    const std::vector<CubeVertex>& vertices() const { return vertices_; }

    // chain generators at (h, q): pairs (vertex mask, state mask)
    struct Block {
        std::vector<std::pair<size_t, size_t>> basis;
        std::map<std::pair<size_t, size_t>, int> index;
    };

    const Block& block(int h, int q)
    {
        auto key = std::make_pair(h, q);
        auto it = blocks_.find(key);
        if (it != blocks_.end())
            return it->second;
        Block blk;
        for (size_t v = 0; v < vertices_.size(); ++v) {
            const CubeVertex& vert = vertices_[v];
            if (vert.h != h)
                continue;
            int c = vert.circles();
            int twice_k = q - vert.p + c;
            if (twice_k < 0 || twice_k % 2 || twice_k / 2 > c)
                continue;
            int k = twice_k / 2; // states with exactly k circles labelled x
            size_t s = (size_t(1) << k) - 1;
            while (true) {
                blk.index[{v, s}] = static_cast<int>(blk.basis.size());
                blk.basis.emplace_back(v, s);
                if (k == 0 || k == c)
                    break;
                size_t lowest = s & (~s + 1); // Gosper's hack
                size_t ripple = s + lowest;
                s = ripple | (((s ^ ripple) >> 2) / lowest);
                if (s >= (size_t(1) << c))
                    break;
            }
        }
        return blocks_.emplace(key, std::move(blk)).first->second;
    }

    // d_chi from (h, q) to (h+1, q): flips positive crossings 1 -> 0 and
    // negative crossings 0 -> 1, with the prefix-parity cube sign.
    SparseMatrixQ differential(int h, int q)
    {
        const Block& src = block(h, q);
        const Block& tgt = block(h + 1, q);
        SparseMatrixQ mat(static_cast<int>(tgt.basis.size()), static_cast<int>(src.basis.size()));
        const int m = static_cast<int>(braid_.letters.size());
        for (size_t col = 0; col < src.basis.size(); ++col) {
            auto [v, s] = src.basis[col];
            const CubeVertex& vert = vertices_[v];
            for (int c = 0; c < m; ++c) {
                bool bit = vert.bits[c];
                bool positive = braid_.letters[c] > 0;
                if (positive ? !bit : bit)
                    continue;
                size_t v2 = v ^ (size_t(1) << c);
                const CubeVertex& tv = vertices_[v2];
                int sign = __builtin_popcountll(v & ((size_t(1) << c) - 1)) % 2 ? -1 : 1;
                emit_edge(vert, tv, v2, c, s, static_cast<int>(col), sign, tgt, mat);
            }
        }
        return mat;
    }

    long rank_out(int h, int q)
    {
        auto key = std::make_pair(h, q);
        auto it = ranks_.find(key);
        if (it != ranks_.end())
            return it->second;
        long rk = block(h, q).basis.empty() ? 0 : rank(differential(h, q));
        ranks_.emplace(key, rk);
        return rk;
    }

    std::set<std::pair<int, int>> occupied_degrees()
    {
        std::set<std::pair<int, int>> degs;
        for (auto& vert : vertices_) {
            int c = vert.circles();
            for (int k = 0; k <= c; ++k)
                degs.insert({vert.h, 2 * k - c + vert.p});
        }
        return degs;
    }

private:
    void trace_intervals()
    {
        const int m = static_cast<int>(braid_.letters.size());
        int next = braid_.strands;
        std::vector<int> current(braid_.strands + 1);
        for (int s = 1; s <= braid_.strands; ++s)
            current[s] = s - 1;
        ports_.resize(m);
        for (int c = 0; c < m; ++c) {
            int i = std::abs(braid_.letters[c]);
            ports_[c] = {current[i], current[i + 1], next, next + 1};
            current[i] = next++;
            current[i + 1] = next++;
        }
        interval_count_ = next;
        for (int s = 1; s <= braid_.strands; ++s)
            closure_.emplace_back(current[s], s - 1);
    }

    void build_vertex(size_t mask)
    {
        const int m = static_cast<int>(braid_.letters.size());
        CubeVertex& v = vertices_[mask];
        v.bits.resize(m);
        for (int c = 0; c < m; ++c)
            v.bits[c] = (mask >> c) & 1;
        for (int c = 0; c < m; ++c) {
            bool positive = braid_.letters[c] > 0;
            if (v.bits[c]) {
                v.h += positive ? -1 : 1;
                v.p += positive ? 2 : -2;
            } else {
                v.p += positive ? 1 : -1;
            }
        }
        // circles: union-find over intervals
        std::vector<int> parent(interval_count_);
        for (int i = 0; i < interval_count_; ++i)
            parent[i] = i;
        auto find = [&](int r) {
            while (parent[r] != r)
                r = parent[r] = parent[parent[r]];
            return r;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (auto& [a, b] : closure_)
            unite(a, b);
        for (int c = 0; c < m; ++c) {
            auto [bl, br, tl, tr] = ports_[c];
            if (v.bits[c]) {
                unite(bl, br);
                unite(tl, tr);
            } else {
                unite(bl, tl);
                unite(br, tr);
            }
        }
        std::map<int, int> reps;
        v.interval_circle.resize(interval_count_);
        for (int i = 0; i < interval_count_; ++i) {
            int r = find(i);
            if (!reps.count(r)) {
                int idx = static_cast<int>(reps.size());
                reps[r] = idx;
                v.circle_rep.push_back(i); // first interval touched = min id = canonical
                v.circle_of_rep[i] = idx;
            }
            v.interval_circle[i] = reps[r];
        }
    }

    void emit_edge(const CubeVertex& src, const CubeVertex& tgt, size_t tgt_mask, int c, size_t s,
                   int col, int sign, const Block& tgt_block, SparseMatrixQ& mat) const
    {
        auto add_entry = [&](size_t state) {
            auto it = tgt_block.index.find({tgt_mask, state});
            if (it == tgt_block.index.end())
                throw invariant_error("cube differential left the quantum degree");
            mat.add(it->second, col, sign);
        };
        auto [bl, br, tl, tr] = ports_[c];
        int diff = tgt.circles() - src.circles();
        // circles untouched at this crossing keep their interval classes
        auto tgt_circle = [&](int src_circle) {
            return tgt.interval_circle[src.circle_rep[src_circle]];
        };
        if (diff == -1) { // Frobenius merge
            int A = src.interval_circle[bl];
            int B = -1;
            for (int cand : {src.interval_circle[br], src.interval_circle[tl], src.interval_circle[tr]})
                if (cand != A)
                    B = cand;
            if (B < 0)
                throw invariant_error("merge edge with a single source circle");
            bool a = (s >> A) & 1, b = (s >> B) & 1;
            if (a && b)
                return; // m(x,x) = 0
            size_t t = 0;
            for (int sc = 0; sc < src.circles(); ++sc) {
                if (sc == A || sc == B)
                    continue;
                if ((s >> sc) & 1)
                    t |= size_t(1) << tgt_circle(sc);
            }
            if (a || b)
                t |= size_t(1) << tgt.interval_circle[bl];
            add_entry(t);
        } else if (diff == 1) { // Frobenius split
            int C = src.interval_circle[bl];
            size_t base = 0;
            for (int sc = 0; sc < src.circles(); ++sc) {
                if (sc == C)
                    continue;
                if ((s >> sc) & 1)
                    base |= size_t(1) << tgt_circle(sc);
            }
            std::set<int> halves;
            for (int iv : {bl, br, tl, tr})
                halves.insert(tgt.interval_circle[iv]);
            if (halves.size() != 2)
                throw invariant_error("split edge without two target circles");
            auto it = halves.begin();
            int A = *it++, B = *it;
            if ((s >> C) & 1) {
                add_entry(base | (size_t(1) << A) | (size_t(1) << B)); // x -> x(x)x
            } else {
                add_entry(base | (size_t(1) << A)); // 1 -> 1(x)x + x(x)1
                add_entry(base | (size_t(1) << B));
            }
        } else {
            throw invariant_error("cube edge changed circle count by " + std::to_string(diff));
        }
    }

private:
    BraidWord braid_;
    std::vector<CubeVertex> vertices_;
    std::vector<std::array<int, 4>> ports_; // per crossing: bl, br, tl, tr interval ids
    std::vector<std::pair<int, int>> closure_;
    int interval_count_ = 0;
    std::map<std::pair<int, int>, Block> blocks_;
    std::map<std::pair<int, int>, long> ranks_;
};

// Bigraded homology table: (h, q ticks) -> dimension.
struct KhovanovTable {
    std::map<std::pair<int, int>, long> dims;

    long dim(int h, int q) const
    {
        auto it = dims.find({h, q});
        return it == dims.end() ? 0 : it->second;
    }
    bool empty() const { return dims.empty(); }

    // graded Euler characteristic as Laurent polynomial in t, half-ticks
    LaurentQ euler() const
    {
        LaurentQ e;
        for (auto& [hq, d] : dims)
            e.add_term(2 * hq.second, Rational((hq.first % 2 == 0 ? 1 : -1) * d));
        return e;
    }
    std::pair<int, int> q_extremes() const
    {
        if (dims.empty())
            throw invariant_error("empty homology table");
        int lo = dims.begin()->second ? dims.begin()->first.second : 0, hi = lo;
        bool first = true;
        for (auto& [hq, d] : dims) {
            if (first) {
                lo = hi = hq.second;
                first = false;
            }
            lo = std::min(lo, hq.second);
            hi = std::max(hi, hq.second);
        }
        return {lo, hi};
    }
};

inline KhovanovTable khovanov_homology_uncached(const BraidWord& b)
{
    CubeComplex cube(b);
    KhovanovTable t;
    for (auto& [h, q] : cube.occupied_degrees()) {
        long cols = static_cast<long>(cube.block(h, q).basis.size());
        long d = cols - cube.rank_out(h, q) - cube.rank_out(h - 1, q);
        if (d < 0)
            throw invariant_error("negative homology dimension");
        if (d > 0)
            t.dims[{h, q}] = d;
    }
    return t;
}

inline KhovanovTable khovanov_homology(const BraidWord& b)
{
    static std::map<std::string, KhovanovTable> memo;
    static std::mutex memo_mutex;
    std::string key = canonical_key(b);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    KhovanovTable t = khovanov_homology_uncached(b);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), t);
    return t;
}

inline std::pair<int, int> g2_extremes(const BraidWord& b)
{
    KhovanovTable t = khovanov_homology(b);
    if (t.empty())
        throw invariant_error("vanishing n=2 homology");
    return t.q_extremes();
}

// --- the transversal class ---------------------------------------------

struct PsiCertificate {
    BraidWord input;
    BraidWord mirror_word;
    size_t phi_vertex = 0; // the all-0 resolution
    size_t phi_state = 0;  // x (x) ... (x) x as a circle-label mask
    int h_degree = 0;
    int q_degree = 0; // ticks; equals -sl(input)
    bool cocycle = true;
    bool class_zero = false;
    // witness: preimage in sparse form, or a left-kernel unsolvability vector
    std::vector<std::tuple<size_t, size_t, Rational>> preimage; // (vertex, state, coeff)
    std::vector<Rational> obstruction;                          // y with yM = 0, y.phi != 0
};

inline PsiCertificate psi2(const BraidWord& b)
{
    PsiCertificate cert;
    cert.input = b;
    cert.mirror_word = mirror(b);
    CubeComplex cube(cert.mirror_word);

    // all-0 vertex: b concentric circles at cohomological degree 0
    const CubeVertex& v0 = cube.vertices()[0];
    if (v0.h != 0 || v0.circles() != b.strands)
        throw invariant_error("oriented resolution is not b circles at degree 0");
    size_t phi_state = (size_t(1) << v0.circles()) - 1; // x (x) ... (x) x
    int q = v0.circles() + v0.p;
    cert.phi_vertex = 0;
    cert.phi_state = phi_state;
    cert.h_degree = 0;
    cert.q_degree = q;
    if (q != -stats(b).self_linking)
        throw invariant_error("psi degree disagrees with -sl");

    const CubeComplex::Block& blk0 = cube.block(0, q);
    auto phi_it = blk0.index.find({0, phi_state});
    if (phi_it == blk0.index.end())
        throw invariant_error("phi generator missing from its block");
    int phi_idx = phi_it->second;

    // cocycle check
    SparseMatrixQ out = cube.differential(0, q);
    std::vector<Rational> phi(blk0.basis.size(), Rational(0));
    phi[phi_idx] = 1;
    for (Rational& c : out.apply(phi))
        if (c != 0) {
            cert.cocycle = false;
            return cert;
        }

    // class-zero decision on the single relevant bidegree block
    SparseMatrixQ in = cube.differential(-1, q);
    SolveResult res = solve_linear(in, phi);
    if (auto* sol = std::get_if<std::vector<Rational>>(&res)) {
        cert.class_zero = true;
        const auto& src = cube.block(-1, q);
        for (size_t i = 0; i < sol->size(); ++i)
            if ((*sol)[i] != 0)
                cert.preimage.emplace_back(src.basis[i].first, src.basis[i].second, (*sol)[i]);
        // re-verify exactly
        std::vector<Rational> check = in.apply(*sol);
        if (check != phi)
            throw invariant_error("psi witness failed re-verification");
    } else {
        cert.class_zero = false;
        cert.obstruction = std::get<Unsolvable>(res).left_kernel;
        std::vector<Rational> yM = in.apply_transpose(cert.obstruction);
        for (Rational& c : yM)
            if (c != 0)
                throw invariant_error("psi obstruction failed re-verification");
        Rational yb(0);
        for (size_t i = 0; i < phi.size(); ++i)
            yb += cert.obstruction[i] * phi[i];
        if (yb == 0)
            throw invariant_error("psi obstruction failed re-verification");
    }
    return cert;
}

} // namespace krw
