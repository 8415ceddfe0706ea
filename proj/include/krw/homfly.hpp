#pragma once

// HOMFLY polynomial of braid closures in the normalization
//   x P(L_-) - x^{-1} P(L_+) = y P(L_0),   P(unknot) = (x - x^{-1})/y,
// computed by Hecke-algebra rewriting over the positive-permutation-braid
// basis with a Markov-trace strand reduction.  The quadratic relation
// T_i^2 = x^2 - x y T_i is the skein relation applied at a double letter,
// so every rewrite is context-free; Markov moves enter only at closure.
//
// Also: the specializations F_n(t) = P(t^n, t - t^{-1}) and the hatted
// change of variables with the formal root s, s^2 = -tq.

#include "krw/braid.hpp"
#include "krw/laurent.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <variant>

namespace krw {

using HomflyPoly = Laurent2Q; // variables (x, y), half-tick exponents

inline HomflyPoly unknot_homfly()
{
    // (x - x^{-1})/y = x y^{-1} - x^{-1} y^{-1}
    HomflyPoly p;
    p.add_term({2, -2}, Rational(1));
    p.add_term({-2, -2}, Rational(-1));
    return p;
}

namespace detail {

using Perm = std::vector<int>;

inline Perm identity_perm(int b)
{
    Perm p(b);
    for (int i = 0; i < b; ++i)
        p[i] = i;
    return p;
}

// swap the values g, g+1 in the one-line word (right multiplication in the
// "apply, then swap" composition)
inline Perm swap_values(Perm p, int g)
{
    for (int& v : p)
        if (v == g)
            v = g + 1;
        else if (v == g + 1)
            v = g;
    return p;
}

// does right multiplication by s_g lengthen pi?
inline bool ascends(const Perm& p, int g)
{
    for (int v : p) {
        if (v == g)
            return true;
        if (v == g + 1)
            return false;
    }
    throw invariant_error("generator index outside permutation");
}

} // namespace detail

class HomflyEvaluator {
public:
    explicit HomflyEvaluator(long budget = 1000000) : budget_(budget) {}

    HomflyPoly eval(const BraidWord& b)
    {
        std::string key = canonical_key(b);
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end())
                return it->second;
        }
        State state;
        state[detail::identity_perm(b.strands)] = HomflyPoly(Rational(1));
        for (int l : b.letters)
            state = multiply(std::move(state), std::abs(l) - 1, l > 0);
        HomflyPoly p = close(std::move(state), b.strands);
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(std::move(key), p);
        return p;
    }

    long states_used() const { return used_; }

private:
    using State = std::map<detail::Perm, HomflyPoly>;

    void spend(long k = 1)
    {
        used_ += k;
        if (used_ > budget_)
            throw budget_error("homfly budget exceeded after " + std::to_string(used_) +
                               " basis operations");
    }

    static void accumulate(State& s, const detail::Perm& p, const HomflyPoly& c)
    {
        auto [it, inserted] = s.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                s.erase(it);
        }
    }

    State multiply(State state, int g, bool positive)
    {
        State out;
        const HomflyPoly x2 = HomflyPoly::monomial(4, 0);
        const HomflyPoly xy = HomflyPoly::monomial(2, 2);
        const HomflyPoly xm2 = HomflyPoly::monomial(-4, 0);
        const HomflyPoly xm1y = HomflyPoly::monomial(-2, 2);
        for (auto& [perm, c] : state) {
            spend();
            detail::Perm moved = detail::swap_values(perm, g);
            bool up = detail::ascends(perm, g);
            if (positive) {
                if (up) {
                    accumulate(out, moved, c);
                } else {
                    accumulate(out, moved, x2 * c);
                    accumulate(out, perm, -(xy * c));
                }
            } else {
                if (up) {
                    accumulate(out, moved, xm2 * c);
                    accumulate(out, perm, xm1y * c);
                } else {
                    accumulate(out, moved, c);
                }
            }
        }
        return out;
    }

    // Markov trace: split off the top strand.  A basis braid either fixes
    // it (disjoint unknot factor) or carries sigma_{b-1} exactly once in
    // its staircase coset factor, which destabilizes.
    HomflyPoly close(State state, int b)
    {
        const HomflyPoly u = unknot_homfly();
        while (b > 0) {
            State down;
            for (auto& [perm, c] : state) {
                spend();
                if (perm[b - 1] == b - 1) {
                    detail::Perm rest(perm.begin(), perm.end() - 1);
                    accumulate(down, rest, u * c);
                    continue;
                }
                int j = perm[b - 1];
                // rho = perm followed by e_j^{-1}, e_j = s_{b-2} ... s_j
                detail::Perm rho(b - 1);
                for (int k = 0; k + 1 < b; ++k) {
                    int v = perm[k];
                    rho[k] = v == j ? b - 1 : (v > j ? v - 1 : v);
                }
                // leftover tail T_{b-3} ... T_j after one destabilization
                State piece;
                piece[rho] = c;
                for (int g = b - 3; g >= j; --g)
                    piece = multiply(std::move(piece), g, true);
                for (auto& [p2, c2] : piece)
                    accumulate(down, p2, c2);
            }
            state = std::move(down);
            b -= 1;
        }
        auto it = state.find(detail::Perm{});
        return it == state.end() ? HomflyPoly() : it->second;
    }

    long budget_;
    std::atomic<long> used_ = 0;
    std::map<std::string, HomflyPoly> memo_;
    std::mutex memo_mutex_;
};

inline HomflyEvaluator& shared_homfly_evaluator()
{
    static HomflyEvaluator eval;
    return eval;
}

inline HomflyPoly homfly(const BraidWord& b)
{
    return shared_homfly_evaluator().eval(b);
}

// x P(L_-) - x^{-1} P(L_+) - y P(L_0) at the given letter; identically
// zero for a correct implementation.
inline HomflyPoly skein_residual(const BraidWord& b, size_t pos)
{
    if (pos >= b.letters.size())
        throw invariant_error("skein position out of range");
    BraidWord plus = b, minus = b, zero = b;
    plus.letters[pos] = std::abs(b.letters[pos]);
    minus.letters[pos] = -std::abs(b.letters[pos]);
    zero.letters.erase(zero.letters.begin() + static_cast<long>(pos));
    HomflyPoly x = HomflyPoly::monomial(2, 0);
    HomflyPoly xinv = HomflyPoly::monomial(-2, 0);
    HomflyPoly y = HomflyPoly::monomial(0, 2);
    return x * homfly(minus) - xinv * homfly(plus) - y * homfly(zero);
}

// --- F_n specialization -------------------------------------------------

using FnResult = std::variant<LaurentQ, RationalFunction>;

// x -> t^n, y -> t - t^{-1}; Laurent polynomial for every braid closure
// we meet, rational function reported otherwise.
inline FnResult specialize_fn(const HomflyPoly& p, int n)
{
    if (n < 2)
        throw invariant_error("specialize_fn needs n >= 2");
    if (p.is_zero())
        return LaurentQ();
    LaurentQ ty; // t - t^{-1}
    ty.add_term(2, Rational(1));
    ty.add_term(-2, Rational(-1));
    int min_ey = 0;
    for (auto& [k, c] : p.terms()) {
        if (k.second % 2 != 0 || k.first % 2 != 0)
            throw invariant_error("homfly exponents must be integers");
        min_ey = std::min(min_ey, k.second / 2);
    }
    int K = -min_ey;
    LaurentQ num;
    for (auto& [k, c] : p.terms()) {
        int ex = k.first / 2, ey = k.second / 2;
        LaurentQ term = LaurentQ::monomial(2 * n * ex, c);
        for (int i = 0; i < ey + K; ++i)
            term *= ty;
        num += term;
    }
    LaurentQ den(Rational(1));
    for (int i = 0; i < K; ++i)
        den *= ty;
    if (auto q = num.divide_exact(den))
        return *q;
    return RationalFunction(num, den);
}

// --- hatted specialization ----------------------------------------------
//
// Coefficients live in Q[i]; the square root (-tq)^{1/2} is carried as a
// formal s with s^2 = -tq, tracked as a parity: value = even + s * odd,
// both components Laurent in (t, q) with integer exponents.

struct FhatPoly {
    Laurent2<GaussianRational> even;
    Laurent2<GaussianRational> odd;

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    friend FhatPoly operator+(const FhatPoly& a, const FhatPoly& b)
    {
        return {a.even + b.even, a.odd + b.odd};
    }
    friend FhatPoly operator-(const FhatPoly& a, const FhatPoly& b)
    {
        return {a.even - b.even, a.odd - b.odd};
    }
    friend FhatPoly operator*(const FhatPoly& a, const FhatPoly& b)
    {
        Laurent2<GaussianRational> tq = Laurent2<GaussianRational>::monomial(2, 2);
        return {a.even * b.even - tq * (a.odd * b.odd), a.even * b.odd + a.odd * b.even};
    }
    friend bool operator==(const FhatPoly& a, const FhatPoly& b)
    {
        return a.even == b.even && a.odd == b.odd;
    }
};

inline FhatPoly fhat_x() // x = -q^{-1} s
{
    FhatPoly p;
    p.odd = Laurent2<GaussianRational>::monomial(0, -2, GaussianRational(Rational(-1)));
    return p;
}
inline FhatPoly fhat_x_inv() // x^{-1} = t^{-1} s
{
    FhatPoly p;
    p.odd = Laurent2<GaussianRational>::monomial(-2, 0, GaussianRational(Rational(1)));
    return p;
}
inline FhatPoly fhat_y() // y = q - q^{-1}
{
    FhatPoly p;
    p.even = Laurent2<GaussianRational>::monomial(0, 2, GaussianRational(Rational(1))) +
             Laurent2<GaussianRational>::monomial(0, -2, GaussianRational(Rational(-1)));
    return p;
}

// Value with a scalar (even, rational) denominator; compared and combined
// by cross multiplication, no canonical form needed.
struct FhatValue {
    FhatPoly num;
    Laurent2Q den = Laurent2Q(Rational(1));

    friend bool operator==(const FhatValue& a, const FhatValue& b)
    {
        auto lift = [](const Laurent2Q& p) {
            Laurent2<GaussianRational> out;
            for (auto& [k, c] : p.terms())
                out.add_term(k, GaussianRational(c));
            return out;
        };
        FhatPoly bd{lift(b.den), {}};
        FhatPoly ad{lift(a.den), {}};
        return a.num * bd == b.num * ad;
    }
    friend FhatValue operator*(const FhatPoly& s, const FhatValue& v) { return {s * v.num, v.den}; }
    friend FhatValue operator+(const FhatValue& a, const FhatValue& b)
    {
        auto lift = [](const Laurent2Q& p) {
            Laurent2<GaussianRational> out;
            for (auto& [k, c] : p.terms())
                out.add_term(k, GaussianRational(c));
            return out;
        };
        FhatPoly bd{lift(b.den), {}};
        FhatPoly ad{lift(a.den), {}};
        return {a.num * bd + b.num * ad, a.den * b.den};
    }
    friend FhatValue operator-(const FhatValue& a, const FhatValue& b)
    {
        FhatPoly neg;
        neg.even = -b.num.even;
        neg.odd = -b.num.odd;
        FhatValue nb{neg, b.den};
        return a + nb;
    }
    bool is_zero() const { return num.is_zero(); }
};

// F-hat satisfies the same skein relation as P but is normalized at
// -x^{-1} y^{-1} on the unknot, i.e. F-hat = P / (1 - x^2) after the
// substitution; 1 - x^2 = 1 + t q^{-1}.
inline FhatValue specialize_fhat(const HomflyPoly& p)
{
    int min_ey = 0;
    for (auto& [k, c] : p.terms())
        min_ey = std::min(min_ey, k.second / 2);
    int K = -min_ey;
    FhatPoly num;
    FhatPoly y = fhat_y();
    FhatPoly x = fhat_x();
    FhatPoly xinv = fhat_x_inv();
    for (auto& [k, c] : p.terms()) {
        int ex = k.first / 2, ey = k.second / 2;
        FhatPoly term;
        term.even = Laurent2<GaussianRational>::monomial(0, 0, GaussianRational(c));
        for (int i = 0; i < std::abs(ex); ++i)
            term = term * (ex > 0 ? x : xinv);
        for (int i = 0; i < ey + K; ++i)
            term = term * y;
        num = num + term;
    }
    Laurent2Q den(Rational(1));
    Laurent2Q yq;
    yq.add_term({0, 2}, Rational(1));
    yq.add_term({0, -2}, Rational(-1));
    for (int i = 0; i < K; ++i)
        den *= yq;
    Laurent2Q onemx2;
    onemx2.add_term({0, 0}, Rational(1));
    onemx2.add_term({2, -2}, Rational(1)); // 1 + t q^{-1}
    den *= onemx2;
    return {num, den};
}

// Hatted skein residual for a braid-diagram triple:
//   x Fhat(L_-) - x^{-1} Fhat(L_+) - y Fhat(L_0).
inline FhatValue fhat_skein_residual(const BraidWord& b, size_t pos)
{
    BraidWord plus = b, minus = b, zero = b;
    plus.letters[pos] = std::abs(b.letters[pos]);
    minus.letters[pos] = -std::abs(b.letters[pos]);
    zero.letters.erase(zero.letters.begin() + static_cast<long>(pos));
    FhatValue fm = specialize_fhat(homfly(minus));
    FhatValue fp = specialize_fhat(homfly(plus));
    FhatValue f0 = specialize_fhat(homfly(zero));
    return fhat_x() * fm - fhat_x_inv() * fp - fhat_y() * f0;
}

// Morton-style upper bound for the self-linking number: the minimal
// x-exponent of P in this normalization (calibrated on the unknot, sharp
// on positive torus braids).
inline int classical_sl_bound(const HomflyPoly& p)
{
    if (p.is_zero())
        throw invariant_error("sl bound of the zero polynomial");
    return p.min_degree_first() / 2;
}

} // namespace krw
