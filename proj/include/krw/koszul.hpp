#pragma once

// Koszul matrix factorizations for both potentials: construction from
// resolved closed braids, elementary row transformations, variable
// exclusion, boundary quotients, and brute-force per-bidegree homology.
// This is the ground-truth oracle the rewriter is checked against.
//
// Gradings inside this header are in natural units ("ticks",
// deg x_i = 2, deg a = (2,0)); JSON and GradedDimension interfaces double
// them into half-ticks.

#include "krw/braid.hpp"
#include "krw/laurent.hpp"
#include "krw/linalg.hpp"
#include "krw/multipoly.hpp"

#include <array>
#include <map>
#include <set>
#include <unordered_map>

namespace krw {

enum class Theory { Hn, Hax };

struct RingSpec {
    Theory theory = Theory::Hn;
    int n = 2; // only meaningful for Hn

    static RingSpec hn(int n) { return {Theory::Hn, n}; }
    static RingSpec hax() { return {Theory::Hax, 0}; }
};

struct Shift2 {
    int a = 0;
    int x = 0;
    friend Shift2 operator+(Shift2 p, Shift2 q) { return {p.a + q.a, p.x + q.x}; }
    friend bool operator==(Shift2 p, Shift2 q) { return p.a == q.a && p.x == q.x; }
};

struct KoszulRow {
    MultiPoly a;
    MultiPoly b;
    Shift2 s0; // grading shift of the even tensor factor
    Shift2 s1; // grading shift of the odd tensor factor
};

// sum of x_i^{n-s} x_j^{s}, s = 0..n
inline MultiPoly pi_poly(int n, int vi, int vj)
{
    MultiPoly p;
    for (int s = 0; s <= n; ++s)
        p += MultiPoly::var(vi, n - s) * MultiPoly::var(vj, s);
    return p;
}

struct UPolys {
    MultiPoly g;  // in vars x1 = first, x2 = second argument
    MultiPoly u1; // in vars x1..x4 = (x_i, x_j, x_k, x_l)
    MultiPoly u2;
};

// g(x+y, xy) = x^{n+1} + y^{n+1} via the Newton recursion
// p_k = e1 p_{k-1} - e2 p_{k-2}; evaluated directly on arguments.
inline MultiPoly power_sum_eval(int n, const MultiPoly& e1, const MultiPoly& e2)
{
    MultiPoly pk_2 = MultiPoly::constant(2); // p_0
    MultiPoly pk_1 = e1;                     // p_1
    if (n + 1 == 0)
        return pk_2;
    if (n + 1 == 1)
        return pk_1;
    MultiPoly pk;
    for (int k = 2; k <= n + 1; ++k) {
        pk = e1 * pk_1 - e2 * pk_2;
        pk_2 = pk_1;
        pk_1 = pk;
    }
    return pk_1;
}

inline UPolys u_polynomials(int n)
{
    if (n < 2)
        throw invariant_error("u_polynomials needs n >= 2");
    UPolys u;
    u.g = power_sum_eval(n, MultiPoly::x(1), MultiPoly::x(2));
    MultiPoly xi = MultiPoly::x(1), xj = MultiPoly::x(2), xk = MultiPoly::x(3), xl = MultiPoly::x(4);
    MultiPoly g_ij_ij = power_sum_eval(n, xi + xj, xi * xj);
    MultiPoly g_kl_ij = power_sum_eval(n, xk + xl, xi * xj);
    MultiPoly g_kl_kl = power_sum_eval(n, xk + xl, xk * xl);
    auto q1 = (g_ij_ij - g_kl_ij).divide_exact(xi + xj - xk - xl);
    auto q2 = (g_kl_ij - g_kl_kl).divide_exact(xi * xj - xk * xl);
    if (!q1 || !q2)
        throw invariant_error("u-polynomial division was not exact");
    u.u1 = *q1;
    u.u2 = *q2;
    if (u.u1.homogeneous_x_degree() != std::optional<int>(2 * n) ||
        u.u2.homogeneous_x_degree() != std::optional<int>(2 * n - 2))
        throw invariant_error("u-polynomial degrees are off");
    return u;
}

class KoszulFactorization {
public:
    RingSpec ring;
    std::vector<KoszulRow> rows;
    Shift2 overall;                          // accumulated by variable exclusion
    std::vector<std::pair<int, int>> boundary; // (marking var, +1 exit / -1 entry)
    std::vector<int> ring_vars;              // x-variables of the ambient ring

    bool is_closed() const { return boundary.empty(); }

    // Expected homogeneous degree of every differential entry.
    Shift2 map_degree() const
    {
        return ring.theory == Theory::Hn ? Shift2{0, ring.n + 1} : Shift2{1, 1};
    }

    MultiPoly potential() const
    {
        MultiPoly w;
        for (auto& r : rows)
            w += r.a * r.b;
        return w;
    }

    MultiPoly expected_potential() const
    {
        MultiPoly w;
        for (auto& [v, sign] : boundary) {
            MultiPoly term = ring.theory == Theory::Hn
                                 ? MultiPoly::var(v, ring.n + 1)
                                 : MultiPoly::a() * MultiPoly::x(v);
            w += sign > 0 ? term : -term;
        }
        return w;
    }

    // entry degree as a map between shifted free modules
    void check_homogeneous() const
    {
        Shift2 d = map_degree();
        for (auto& r : rows) {
            auto check = [&](const MultiPoly& p, Shift2 from, Shift2 to) {
                if (p.is_zero())
                    return;
                if (ring.theory == Theory::Hn) {
                    if (p.contains_var(0))
                        throw invariant_error("variable a in an x^{n+1}-theory entry");
                    auto deg = p.homogeneous_x_degree();
                    if (!deg || *deg + to.x - from.x != d.x)
                        throw invariant_error("inhomogeneous differential entry");
                } else {
                    auto deg = p.homogeneous_bidegree();
                    if (!deg || deg->first + to.a - from.a != d.a || deg->second + to.x - from.x != d.x)
                        throw invariant_error("inhomogeneous differential entry");
                }
            };
            check(r.a, r.s0, r.s1);
            check(r.b, r.s1, r.s0);
        }
    }

    void check_potential() const
    {
        if (potential() != expected_potential())
            throw invariant_error("potential does not match boundary data");
    }
};

// --- construction from a resolved closed braid --------------------------
//
// Markings sit at the four ports of every wide edge plus one per free
// circle; every regular edge then runs marking-to-marking and contributes
// an arc row, matching the explicit matrices of both theories.

namespace detail {

struct ClosedDiagram {
    int markings = 0;
    // per letter: port vars (top-left, top-right, bottom-left, bottom-right)
    std::vector<std::array<int, 4>> wide;
    std::vector<std::pair<int, int>> arcs; // (head var, tail var), oriented tail -> head
    std::vector<int> circles;              // marking var per free circle
};

inline ClosedDiagram trace_diagram(const ResolvedWord& w)
{
    validate(w);
    ClosedDiagram d;
    const int m = static_cast<int>(w.letters.size());
    d.wide.resize(m);
    // run ids: 0..b-1 baseline, then 2 per letter
    int next_run = w.strands;
    std::vector<int> current(w.strands + 1);
    for (int s = 1; s <= w.strands; ++s)
        current[s] = s - 1;
    struct RunInfo {
        int born_port = -1; // var id of tail marking, -1 for baseline
        int dies_port = -1; // var id of head marking, -1 until known
    };
    std::vector<RunInfo> runs(w.strands);
    auto port_var = [&](int letter, int which) { return 4 * letter + which + 1; };
    for (int k = 0; k < m; ++k) {
        int i = w.letters[k];
        d.wide[k] = {port_var(k, 0), port_var(k, 1), port_var(k, 2), port_var(k, 3)};
        runs[current[i]].dies_port = port_var(k, 2);     // bottom-left
        runs[current[i + 1]].dies_port = port_var(k, 3); // bottom-right
        runs.push_back({port_var(k, 0), -1});            // top-left out
        runs.push_back({port_var(k, 1), -1});            // top-right out
        current[i] = next_run++;
        current[i + 1] = next_run++;
    }
    d.markings = 4 * m;
    // closure: run at the top of position s continues as the baseline run
    std::vector<int> parent(runs.size());
    for (size_t r = 0; r < runs.size(); ++r)
        parent[r] = static_cast<int>(r);
    auto find = [&](int r) {
        while (parent[r] != r)
            r = parent[r] = parent[parent[r]];
        return r;
    };
    for (int s = 1; s <= w.strands; ++s)
        parent[find(current[s])] = find(s - 1);
    // collect classes
    std::map<int, std::vector<int>> classes;
    for (size_t r = 0; r < runs.size(); ++r)
        classes[find(static_cast<int>(r))].push_back(static_cast<int>(r));
    for (auto& [root, members] : classes) {
        int tail = -1, head = -1;
        for (int r : members) {
            if (runs[r].born_port >= 0)
                tail = runs[r].born_port;
            if (runs[r].dies_port >= 0)
                head = runs[r].dies_port;
        }
        if (tail < 0 && head < 0) {
            d.circles.push_back(++d.markings);
        } else if (tail >= 0 && head >= 0) {
            d.arcs.emplace_back(head, tail);
        } else {
            throw invariant_error("half-open regular edge in a closed diagram");
        }
    }
    return d;
}

} // namespace detail

inline KoszulFactorization build_closed(const ResolvedWord& w, const RingSpec& ring)
{
    detail::ClosedDiagram d = detail::trace_diagram(w);
    KoszulFactorization f;
    f.ring = ring;
    for (int v = 1; v <= d.markings; ++v)
        f.ring_vars.push_back(v);

    UPolys u;
    if (ring.theory == Theory::Hn)
        u = u_polynomials(ring.n);
    for (auto& ports : d.wide) {
        auto [ti, tj, bk, bl] = ports;
        MultiPoly lin = MultiPoly::x(ti) + MultiPoly::x(tj) - MultiPoly::x(bk) - MultiPoly::x(bl);
        MultiPoly quad = MultiPoly::x(ti) * MultiPoly::x(tj) - MultiPoly::x(bk) * MultiPoly::x(bl);
        if (ring.theory == Theory::Hn) {
            std::map<int, MultiPoly> repl{{1, MultiPoly::x(ti)},
                                          {2, MultiPoly::x(tj)},
                                          {3, MultiPoly::x(bk)},
                                          {4, MultiPoly::x(bl)}};
            f.rows.push_back({u.u1.substitute_many(repl), lin, Shift2{0, -1}, Shift2{0, -ring.n}});
            f.rows.push_back({u.u2.substitute_many(repl), quad, Shift2{0, 0}, Shift2{0, 3 - ring.n}});
        } else {
            f.rows.push_back({MultiPoly::a(), lin, Shift2{0, 0}, Shift2{-1, 1}});
            f.rows.push_back({MultiPoly(), quad, Shift2{0, 0}, Shift2{-1, 3}});
        }
    }
    for (auto& [head, tail] : d.arcs) {
        if (ring.theory == Theory::Hn)
            f.rows.push_back({pi_poly(ring.n, head, tail), MultiPoly::x(head) - MultiPoly::x(tail),
                              Shift2{0, 0}, Shift2{0, 1 - ring.n}});
        else
            f.rows.push_back({MultiPoly::a(), MultiPoly::x(head) - MultiPoly::x(tail),
                              Shift2{0, 0}, Shift2{-1, 1}});
    }
    for (int c : d.circles) {
        if (ring.theory == Theory::Hn)
            f.rows.push_back({pi_poly(ring.n, c, c), MultiPoly(), Shift2{0, 0}, Shift2{0, 1 - ring.n}});
        else
            f.rows.push_back({MultiPoly::a(), MultiPoly(), Shift2{0, 0}, Shift2{-1, 1}});
    }
    f.check_homogeneous();
    f.check_potential();
    return f;
}

inline KoszulFactorization build_closed(const Resolution& r, const RingSpec& ring)
{
    return build_closed(r.word, ring);
}

// Open oriented arc from marking `tail` to marking `head`, both endpoints
// open (tail an entry, head an exit).
inline KoszulFactorization arc_factorization(const RingSpec& ring, int head, int tail)
{
    KoszulFactorization f;
    f.ring = ring;
    f.ring_vars = {std::min(head, tail), std::max(head, tail)};
    if (ring.theory == Theory::Hn)
        f.rows.push_back({pi_poly(ring.n, head, tail), MultiPoly::x(head) - MultiPoly::x(tail),
                          Shift2{0, 0}, Shift2{0, 1 - ring.n}});
    else
        f.rows.push_back({MultiPoly::a(), MultiPoly::x(head) - MultiPoly::x(tail), Shift2{0, 0},
                          Shift2{-1, 1}});
    f.boundary = {{head, +1}, {tail, -1}};
    f.check_homogeneous();
    f.check_potential();
    return f;
}

// --- elementary operations ----------------------------------------------

// (a_i,b_i),(a_j,b_j) -> (a_i + l a_j, b_i),(a_j, b_j - l b_i)
inline KoszulFactorization row_transform(const KoszulFactorization& f, size_t i, size_t j,
                                         const MultiPoly& lambda)
{
    if (i == j || i >= f.rows.size() || j >= f.rows.size())
        throw invariant_error("row_transform needs two distinct rows");
    KoszulFactorization g = f;
    g.rows[i].a += lambda * f.rows[j].a;
    g.rows[j].b -= lambda * f.rows[i].b;
    g.check_homogeneous(); // rejects inhomogeneous lambda
    if (g.potential() != f.potential())
        throw invariant_error("row_transform changed the potential");
    return g;
}

// Remove row r whose b-entry is +-(v - f) and substitute v := f everywhere;
// chain homotopy equivalent, the excluded row's even shift joins the ledger.
inline KoszulFactorization exclude_variable(const KoszulFactorization& f, size_t r, int v)
{
    if (r >= f.rows.size())
        throw invariant_error("exclude_variable: row out of range");
    if (v < 1)
        throw invariant_error("exclude_variable: not a marking variable");
    for (auto& [bv, sign] : f.boundary)
        if (bv == v)
            throw invariant_error("exclude_variable: variable is a boundary marking");
    const MultiPoly& b = f.rows[r].b;
    Monomial vm(v + 1, 0);
    vm[v] = 1;
    auto it = b.terms().find(trim(vm));
    if (it == b.terms().end() || (it->second != 1 && it->second != -1))
        throw invariant_error("exclude_variable: b-entry is not +-(v - f)");
    Rational c = it->second;
    // b = c*v + g  =>  v := -g/c
    MultiPoly g_part = b;
    MultiPoly vterm;
    vterm.add_term(trim(vm), c);
    g_part -= vterm;
    MultiPoly value = (-1 / c) * g_part;
    if (value.contains_var(v))
        throw invariant_error("exclude_variable: substitution still involves v");

    KoszulFactorization out;
    out.ring = f.ring;
    out.overall = f.overall + f.rows[r].s0;
    out.boundary = f.boundary;
    for (int rv : f.ring_vars)
        if (rv != v)
            out.ring_vars.push_back(rv);
    for (size_t k = 0; k < f.rows.size(); ++k) {
        if (k == r)
            continue;
        KoszulRow row = f.rows[k];
        row.a = row.a.substitute(v, value);
        row.b = row.b.substitute(v, value);
        out.rows.push_back(std::move(row));
    }
    // no homogeneity re-check here: the square-move reduction excludes the
    // degree-4 symmetric function as a variable, which the uniform grading
    // cannot see; the homology engine still rejects ungraded differentials
    return out;
}

// Quotient by the ideal of boundary markings: the variables leave the
// ring and every entry is evaluated at zero.
inline KoszulFactorization quotient_boundary(const KoszulFactorization& f)
{
    if (f.boundary.empty())
        return f;
    KoszulFactorization out = f;
    out.boundary.clear();
    out.ring_vars.clear();
    for (int v : f.ring_vars) {
        bool is_boundary = false;
        for (auto& [bv, sign] : f.boundary)
            if (bv == v)
                is_boundary = true;
        if (!is_boundary)
            out.ring_vars.push_back(v);
    }
    for (auto& row : out.rows)
        for (auto& [v, sign] : f.boundary) {
            row.a = row.a.substitute(v, MultiPoly());
            row.b = row.b.substitute(v, MultiPoly());
        }
    out.check_homogeneous();
    out.check_potential();
    return out;
}

// Greedy exclusion pass: smallest eligible variable of the first eligible
// row, repeated to a fixpoint.  Deterministic.
inline KoszulFactorization reduce_by_exclusion(KoszulFactorization f)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t r = 0; r < f.rows.size() && !changed; ++r) {
            const MultiPoly& b = f.rows[r].b;
            if (b.is_zero())
                continue;
            for (int v : f.ring_vars) {
                bool is_boundary = false;
                for (auto& [bv, s] : f.boundary)
                    if (bv == v)
                        is_boundary = true;
                if (is_boundary)
                    continue;
                Monomial vm(v + 1, 0);
                vm[v] = 1;
                auto it = b.terms().find(trim(vm));
                if (it == b.terms().end() || (it->second != 1 && it->second != -1))
                    continue;
                MultiPoly g_part = b;
                MultiPoly vterm;
                vterm.add_term(trim(vm), it->second);
                g_part -= vterm;
                if (((-1 / it->second) * g_part).contains_var(v))
                    continue;
                f = exclude_variable(f, r, v);
                changed = true;
                break;
            }
        }
    }
    return f;
}

// --- brute-force per-bidegree homology -----------------------------------

struct HomologyWindow {
    int a_min = 0, a_max = 0; // ticks; ignored for Hn
    int x_min = 0, x_max = 0;
};

struct BigradedTable {
    Theory theory = Theory::Hn;
    HomologyWindow window;
    // (Z2 parity, a-tick, x-tick) -> dimension; only nonzero entries kept
    std::map<std::tuple<int, int, int>, long> dims;
    bool z2_concentrated = true;
    bool truncation_warning = false;

    long dim_at(int parity, int a, int x) const
    {
        auto it = dims.find({parity, a, x});
        return it == dims.end() ? 0 : it->second;
    }
    long total_at_x(int x) const
    {
        long t = 0;
        for (auto& [k, d] : dims)
            if (std::get<2>(k) == x)
                t += d;
        return t;
    }
    std::set<int> a_support() const
    {
        std::set<int> s;
        for (auto& [k, d] : dims)
            s.insert(std::get<1>(k));
        return s;
    }
    // graded dimension over x, half-tick exponents
    LaurentQ x_poincare() const
    {
        LaurentQ p;
        for (auto& [k, d] : dims)
            p.add_term(2 * std::get<2>(k), Rational(d));
        return p;
    }
};

class HomologyEngine {
public:
    explicit HomologyEngine(const KoszulFactorization& f) : f_(reduce_by_exclusion(f))
    {
        if (!f_.is_closed())
            throw invariant_error("graded homology needs a closed factorization");
        if (!f_.potential().is_zero())
            throw invariant_error("graded homology needs zero potential");
        if (f_.rows.size() > 24)
            throw budget_error("factorization too large after reduction");
        d_ = f_.ring.theory == Theory::Hn ? Shift2{0, f_.ring.n + 1} : Shift2{1, 1};
        // precompute subset shifts and parities
        size_t nsub = size_t(1) << f_.rows.size();
        shift_.resize(nsub);
        for (size_t s = 0; s < nsub; ++s) {
            Shift2 sh = f_.overall;
            for (size_t r = 0; r < f_.rows.size(); ++r)
                sh = sh + (((s >> r) & 1) ? f_.rows[r].s1 : f_.rows[r].s0);
            shift_[s] = sh;
        }
    }

    const KoszulFactorization& reduced() const { return f_; }

    long dim(int parity, int a, int x)
    {
        const Block& blk = block(parity, a, x);
        long rank_out = out_rank(parity, a, x);
        long rank_in = out_rank(1 - parity, a - d_.a, x - d_.x);
        return static_cast<long>(blk.basis.size()) - rank_out - rank_in;
    }

    BigradedTable table(const HomologyWindow& w)
    {
        BigradedTable t;
        t.theory = f_.ring.theory;
        t.window = w;
        bool hax = f_.ring.theory == Theory::Hax;
        int alo = hax ? w.a_min : 0, ahi = hax ? w.a_max : 0;
        for (int parity = 0; parity < 2; ++parity)
            for (int a = alo; a <= ahi; ++a)
                for (int x = w.x_min; x <= w.x_max; ++x) {
                    long d = dim(parity, a, x);
                    if (d < 0)
                        throw invariant_error("negative homology dimension");
                    if (d > 0)
                        t.dims[{parity, a, x}] = d;
                }
        int seen = -1;
        for (auto& [k, d] : t.dims) {
            int p = std::get<0>(k);
            if (seen < 0)
                seen = p;
            else if (seen != p)
                t.z2_concentrated = false;
        }
        return t;
    }

private:
    struct Block {
        std::vector<std::pair<size_t, Monomial>> basis; // (subset, monomial)
        std::map<std::pair<size_t, Monomial>, int> index;
    };
    using Key = std::tuple<int, int, int>;

    const Block& block(int parity, int a, int x)
    {
        Key key{parity, a, x};
        auto it = blocks_.find(key);
        if (it != blocks_.end())
            return it->second;
        Block blk;
        size_t nsub = shift_.size();
        for (size_t s = 0; s < nsub; ++s) {
            if (static_cast<int>(__builtin_popcountll(s) & 1) != parity)
                continue;
            int need_x = x - shift_[s].x;
            if (need_x < 0 || need_x % 2 != 0)
                continue;
            int ea = 0;
            if (f_.ring.theory == Theory::Hax) {
                int need_a = a - shift_[s].a;
                if (need_a < 0 || need_a % 2 != 0)
                    continue;
                ea = need_a / 2;
            }
            enumerate_monomials(need_x / 2, [&](const Monomial& xmono) {
                Monomial m = xmono;
                if (ea > 0) {
                    if (m.empty())
                        m.resize(1, 0);
                    m[0] = ea;
                }
                blk.basis.emplace_back(s, trim(m));
            });
        }
        for (size_t i = 0; i < blk.basis.size(); ++i)
            blk.index[blk.basis[i]] = static_cast<int>(i);
        return blocks_.emplace(key, std::move(blk)).first->second;
    }

    // all monomials in ring_vars with exponent sum `total`
    template <typename F>
    void enumerate_monomials(int total, F&& emit)
    {
        Monomial m;
        int maxv = 0;
        for (int v : f_.ring_vars)
            maxv = std::max(maxv, v);
        m.resize(maxv + 1, 0);
        rec_enumerate(0, total, m, emit);
    }
    template <typename F>
    void rec_enumerate(size_t idx, int remaining, Monomial& m, F&& emit)
    {
        if (idx == f_.ring_vars.size()) {
            if (remaining == 0)
                emit(m);
            return;
        }
        if (idx + 1 == f_.ring_vars.size()) {
            m[f_.ring_vars[idx]] = remaining;
            emit(m);
            m[f_.ring_vars[idx]] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m[f_.ring_vars[idx]] = e;
            rec_enumerate(idx + 1, remaining - e, m, emit);
            m[f_.ring_vars[idx]] = 0;
        }
    }

    long out_rank(int parity, int a, int x)
    {
        Key key{parity, a, x};
        auto it = ranks_.find(key);
        if (it != ranks_.end())
            return it->second;
        const Block& src = block(parity, a, x);
        long rk = 0;
        if (!src.basis.empty()) {
            const Block& tgt = block(1 - parity, a + d_.a, x + d_.x);
            SparseMatrixQ mat(static_cast<int>(tgt.basis.size()), static_cast<int>(src.basis.size()));
            for (size_t col = 0; col < src.basis.size(); ++col) {
                auto& [s, mono] = src.basis[col];
                for (size_t r = 0; r < f_.rows.size(); ++r) {
                    bool in = (s >> r) & 1;
                    const MultiPoly& p = in ? f_.rows[r].b : f_.rows[r].a;
                    if (p.is_zero())
                        continue;
                    int sign = __builtin_popcountll(s & ((size_t(1) << r) - 1)) % 2 ? -1 : 1;
                    size_t s2 = s ^ (size_t(1) << r);
                    for (auto& [pm, pc] : p.terms()) {
                        auto target = std::make_pair(s2, mono_mul(mono, pm));
                        auto jt = tgt.index.find(target);
                        if (jt == tgt.index.end())
                            throw invariant_error("differential left the graded block");
                        mat.add(jt->second, static_cast<int>(col), sign * pc);
                    }
                }
            }
            rk = rank(mat);
        }
        ranks_.emplace(key, rk);
        return rk;
    }

    KoszulFactorization f_;
    Shift2 d_;
    std::vector<Shift2> shift_;
    std::map<Key, Block> blocks_;
    std::map<Key, long> ranks_;
};

// x^{n+1}-theory homology of a resolved closed braid over the finite
// support window certified by the resolved-braids-n bound; two empty
// shells beyond the bound are verified, expanding on demand.
inline BigradedTable hn_graded_homology(const ResolvedWord& w, int n)
{
    KoszulFactorization f = build_closed(w, RingSpec::hn(n));
    HomologyEngine eng(f);
    int bound = (n - 1) * w.strands + static_cast<int>(w.letters.size());
    HomologyWindow win{0, 0, -bound, bound};
    BigradedTable t = eng.table(win);
    int extra = 0;
    while (extra < 16) {
        bool empty_shells = true;
        for (int parity = 0; parity < 2; ++parity)
            for (int dx = 1; dx <= 2; ++dx) {
                if (eng.dim(parity, 0, bound + extra + dx) != 0 ||
                    eng.dim(parity, 0, -bound - extra - dx) != 0)
                    empty_shells = false;
            }
        if (empty_shells)
            break;
        extra += 2; // a shell was occupied beyond the bound: widen and flag
        t.truncation_warning = true;
    }
    return t;
}

// ax-theory homology of a resolved closed braid.  The a-window is forced
// by the reduced row count; the x-window is the caller's truncation.
inline BigradedTable hax_graded_homology(const ResolvedWord& w, int x_min, int x_max)
{
    KoszulFactorization f = build_closed(w, RingSpec::hax());
    HomologyEngine eng(f);
    int rows = static_cast<int>(eng.reduced().rows.size());
    HomologyWindow win{-rows, 0, x_min, x_max};
    return eng.table(win);
}

// default x-window generous enough for the reduction drift at desk scale;
// adequacy is cross-validated against the rewriter on exact-support words
inline BigradedTable hax_graded_homology(const ResolvedWord& w)
{
    int b = w.strands, m = static_cast<int>(w.letters.size());
    return hax_graded_homology(w, -2 * (b + m) - 4, 2 * (b + m) + 6);
}

inline BigradedTable graded_homology(const KoszulFactorization& f, const HomologyWindow& w)
{
    HomologyEngine eng(f);
    return eng.table(w);
}

} // namespace krw
