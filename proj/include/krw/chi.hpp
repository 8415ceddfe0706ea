#pragma once

// The crossing-local chi maps between the arc pair Gamma_0 and the wide
// edge Gamma_1, in both theories, presented as explicit two-periodic
// factorizations with their U/V matrices.  Everything here is verified
// symbolically: d^1 d^0 = w, commutation with differentials, homogeneity,
// and the compositions chi_1 chi_0 = (x_k - x_j) id.
//
// Markings: x1 = x_i, x2 = x_j (top), x3 = x_k, x4 = x_l (bottom).

#include "krw/koszul.hpp"

namespace krw {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

inline PolyMatrix mat_mul(const PolyMatrix& p, const PolyMatrix& q)
{
    size_t rows = p.size(), inner = q.size(), cols = q.empty() ? 0 : q[0].size();
    PolyMatrix r(rows, std::vector<MultiPoly>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            for (size_t k = 0; k < inner; ++k)
                r[i][j] += p[i][k] * q[k][j];
    return r;
}

inline bool mat_equal(const PolyMatrix& p, const PolyMatrix& q)
{
    if (p.size() != q.size())
        return false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].size() != q[i].size())
            return false;
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != q[i][j])
                return false;
    }
    return true;
}

inline PolyMatrix scalar_matrix(const MultiPoly& s, size_t n)
{
    PolyMatrix r(n, std::vector<MultiPoly>(n));
    for (size_t i = 0; i < n; ++i)
        r[i][i] = s;
    return r;
}

// Explicit 2-periodic factorization: even -> odd -> even.
struct TwoPeriodic {
    RingSpec ring;
    std::vector<Shift2> even;
    std::vector<Shift2> odd;
    PolyMatrix d0; // |odd| x |even|
    PolyMatrix d1; // |even| x |odd|

    void check_mf(const MultiPoly& potential) const
    {
        if (!mat_equal(mat_mul(d1, d0), scalar_matrix(potential, even.size())) ||
            !mat_equal(mat_mul(d0, d1), scalar_matrix(potential, odd.size())))
            throw invariant_error("d^1 d^0 is not potential * id");
    }
};

struct MFMap {
    PolyMatrix even; // tgt.even x src.even
    PolyMatrix odd;  // tgt.odd x src.odd
    Shift2 degree;
};

namespace detail {

inline void check_entry_degrees(const RingSpec& ring, const PolyMatrix& m,
                                const std::vector<Shift2>& tgt, const std::vector<Shift2>& src,
                                Shift2 degree)
{
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m[r].size(); ++c) {
            const MultiPoly& p = m[r][c];
            if (p.is_zero())
                continue;
            if (ring.theory == Theory::Hn) {
                auto d = p.homogeneous_x_degree();
                if (!d || *d + tgt[r].x - src[c].x != degree.x)
                    throw invariant_error("map entry of wrong degree");
            } else {
                auto d = p.homogeneous_bidegree();
                if (!d || d->first + tgt[r].a - src[c].a != degree.a ||
                    d->second + tgt[r].x - src[c].x != degree.x)
                    throw invariant_error("map entry of wrong bidegree");
            }
        }
}

} // namespace detail

// Commutation with the differentials plus per-entry homogeneity.
inline void check_mf_map(const TwoPeriodic& src, const TwoPeriodic& tgt, const MFMap& f)
{
    if (!mat_equal(mat_mul(tgt.d0, f.even), mat_mul(f.odd, src.d0)) ||
        !mat_equal(mat_mul(tgt.d1, f.odd), mat_mul(f.even, src.d1)))
        throw invariant_error("map does not commute with the differentials");
    detail::check_entry_degrees(src.ring, f.even, tgt.even, src.even, f.degree);
    detail::check_entry_degrees(src.ring, f.odd, tgt.odd, src.odd, f.degree);
}

struct ChiPair {
    TwoPeriodic gamma0; // two oriented arcs
    TwoPeriodic gamma1; // wide edge
    MFMap chi0;         // gamma0 -> gamma1
    MFMap chi1;         // gamma1 -> gamma0
    MultiPoly a1;       // the correction entry (Hn only; zero for ax)
    MultiPoly xk_minus_xj;
};

inline ChiPair chi_pair(const RingSpec& ring)
{
    MultiPoly xi = MultiPoly::x(1), xj = MultiPoly::x(2), xk = MultiPoly::x(3), xl = MultiPoly::x(4);
    ChiPair c;
    c.xk_minus_xj = xk - xj;
    c.gamma0.ring = ring;
    c.gamma1.ring = ring;

    if (ring.theory == Theory::Hn) {
        int n = ring.n;
        UPolys u = u_polynomials(n);
        MultiPoly pik = pi_poly(n, 1, 3); // arc from x_k up to x_i
        MultiPoly pjl = pi_poly(n, 2, 4);
        auto q = (u.u1 + xi * u.u2 - pjl).divide_exact(xi - xk);
        if (!q)
            throw invariant_error("a_1 division was not exact");
        c.a1 = -u.u2 + *q;

        c.gamma0.even = {Shift2{0, 0}, Shift2{0, 2 - 2 * n}};
        c.gamma0.odd = {Shift2{0, 1 - n}, Shift2{0, 1 - n}};
        c.gamma0.d0 = {{pik, xj - xl}, {pjl, -xi + xk}};
        c.gamma0.d1 = {{xi - xk, xj - xl}, {pjl, -pik}};

        c.gamma1.even = {Shift2{0, -1}, Shift2{0, 3 - 2 * n}};
        c.gamma1.odd = {Shift2{0, -n}, Shift2{0, 2 - n}};
        c.gamma1.d0 = {{u.u1, xi * xj - xk * xl}, {u.u2, -xi - xj + xk + xl}};
        c.gamma1.d1 = {{xi + xj - xk - xl, xi * xj - xk * xl}, {u.u2, -u.u1}};

        c.chi0.even = {{xk - xj, MultiPoly()}, {c.a1, MultiPoly(Rational(1))}};
        c.chi0.odd = {{xk, -xj}, {MultiPoly(Rational(-1)), MultiPoly(Rational(1))}};
        c.chi0.degree = Shift2{0, 1};

        c.chi1.even = {{MultiPoly(Rational(1)), MultiPoly()}, {-c.a1, xk - xj}};
        c.chi1.odd = {{MultiPoly(Rational(1)), xj}, {MultiPoly(Rational(1)), xk}};
        c.chi1.degree = Shift2{0, 1};
    } else {
        MultiPoly a = MultiPoly::a();
        c.gamma0.even = {Shift2{0, 0}, Shift2{-2, 2}};
        c.gamma0.odd = {Shift2{-1, 1}, Shift2{-1, 1}};
        c.gamma0.d0 = {{a, xj - xl}, {a, -xi + xk}};
        c.gamma0.d1 = {{xi - xk, xj - xl}, {a, -a}};

        c.gamma1.even = {Shift2{0, 0}, Shift2{-2, 4}};
        c.gamma1.odd = {Shift2{-1, 1}, Shift2{-1, 3}};
        c.gamma1.d0 = {{a, xi * xj - xk * xl}, {MultiPoly(), -xi - xj + xk + xl}};
        c.gamma1.d1 = {{xi + xj - xk - xl, xi * xj - xk * xl}, {MultiPoly(), -a}};

        c.chi0.even = {{xk - xj, MultiPoly()}, {MultiPoly(), MultiPoly(Rational(1))}};
        c.chi0.odd = {{xk, -xj}, {MultiPoly(Rational(-1)), MultiPoly(Rational(1))}};
        c.chi0.degree = Shift2{0, 2};

        c.chi1.even = {{MultiPoly(Rational(1)), MultiPoly()}, {MultiPoly(), xk - xj}};
        c.chi1.odd = {{MultiPoly(Rational(1)), xj}, {MultiPoly(Rational(1)), xk}};
        c.chi1.degree = Shift2{0, 0};
    }
    return c;
}

// Symbolic verification of everything the construction claims; throws on
// the first violated identity.
inline void verify_chi_identities(const RingSpec& ring)
{
    ChiPair c = chi_pair(ring);
    MultiPoly xi = MultiPoly::x(1), xj = MultiPoly::x(2), xk = MultiPoly::x(3), xl = MultiPoly::x(4);
    MultiPoly w = ring.theory == Theory::Hn
                      ? MultiPoly::var(1, ring.n + 1) + MultiPoly::var(2, ring.n + 1) -
                            MultiPoly::var(3, ring.n + 1) - MultiPoly::var(4, ring.n + 1)
                      : MultiPoly::a() * (xi + xj - xk - xl);
    c.gamma0.check_mf(w);
    c.gamma1.check_mf(w);
    check_mf_map(c.gamma0, c.gamma1, c.chi0);
    check_mf_map(c.gamma1, c.gamma0, c.chi1);
    if (!mat_equal(mat_mul(c.chi1.even, c.chi0.even), scalar_matrix(c.xk_minus_xj, 2)) ||
        !mat_equal(mat_mul(c.chi1.odd, c.chi0.odd), scalar_matrix(c.xk_minus_xj, 2)))
        throw invariant_error("chi_1 chi_0 != (x_k - x_j) id");
    if (!mat_equal(mat_mul(c.chi0.even, c.chi1.even), scalar_matrix(c.xk_minus_xj, 2)) ||
        !mat_equal(mat_mul(c.chi0.odd, c.chi1.odd), scalar_matrix(c.xk_minus_xj, 2)))
        throw invariant_error("chi_0 chi_1 != (x_k - x_j) id");
}

} // namespace krw
