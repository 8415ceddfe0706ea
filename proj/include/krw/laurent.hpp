#pragma once

// Laurent polynomials in one and two variables.  Exponents are stored in
// half-ticks (stored int = 2 * exponent) so the half-integer gradings of
// the hatted theory need no special casing; integer exponents are even
// stored values.

#include "krw/rational.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace krw {

template <typename C>
class Laurent {
public:
    using Terms = std::map<int, C>; // half-tick exponent -> coefficient

    Laurent() = default;
    explicit Laurent(const C& c)
    {
        if (!(c == C(0)))
            terms_[0] = c;
    }

    static Laurent monomial(int half_tick, const C& c = C(1))
    {
        Laurent p;
        if (!(c == C(0)))
            p.terms_[half_tick] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(int e, const C& c)
    {
        if (c == C(0))
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == C(0))
                terms_.erase(it);
        }
    }

    int min_degree() const
    {
        if (terms_.empty())
            throw invariant_error("degree of zero Laurent polynomial");
        return terms_.begin()->first;
    }
    int max_degree() const
    {
        if (terms_.empty())
            throw invariant_error("degree of zero Laurent polynomial");
        return terms_.rbegin()->first;
    }

    Laurent operator-() const
    {
        Laurent r;
        for (auto& [e, c] : terms_)
            r.terms_[e] = -c;
        return r;
    }
    Laurent& operator+=(const Laurent& o)
    {
        for (auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o)
    {
        for (auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent p, const Laurent& q) { return p += q; }
    friend Laurent operator-(Laurent p, const Laurent& q) { return p -= q; }
    friend Laurent operator*(const Laurent& p, const Laurent& q)
    {
        Laurent r;
        for (auto& [ep, cp] : p.terms_)
            for (auto& [eq, cq] : q.terms_)
                r.add_term(ep + eq, cp * cq);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& p, const Laurent& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const Laurent& p, const Laurent& q) { return !(p == q); }

    Laurent shifted(int half_ticks) const
    {
        Laurent r;
        for (auto& [e, c] : terms_)
            r.terms_[e + half_ticks] = c;
        return r;
    }

    // Substitute the variable by its inverse.
    Laurent inverted() const
    {
        Laurent r;
        for (auto& [e, c] : terms_)
            r.terms_[-e] = c;
        return r;
    }

    bool palindromic() const { return *this == inverted(); }

    // Exact division; nullopt when not divisible.  In the Laurent ring the
    // quotient's minimal exponent is exactly min(f)-min(d), which bounds the
    // descent and guarantees termination on non-divisible inputs.
    std::optional<Laurent> divide_exact(const Laurent& d) const
    {
        if (d.is_zero())
            throw invariant_error("division by zero Laurent polynomial");
        if (is_zero())
            return Laurent();
        Laurent q;
        Laurent r = *this;
        int dtop = d.max_degree();
        int floor = min_degree() - d.min_degree();
        const C& dc = d.terms_.rbegin()->second;
        while (!r.is_zero()) {
            int rtop = r.max_degree();
            C fac = r.terms_.rbegin()->second / dc;
            int sh = rtop - dtop;
            if (sh < floor)
                return std::nullopt;
            q.add_term(sh, fac);
            r -= d.shifted(sh) * Laurent(fac);
        }
        return q;
    }

    std::string to_string(const std::string& var) const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto& [e, c] = *it;
            C ac = c < C(0) ? C(-c) : c;
            if (first) {
                if (c < C(0))
                    os << "-";
                first = false;
            } else {
                os << (c < C(0) ? " - " : " + ");
            }
            if (e == 0) {
                os << ac;
                continue;
            }
            if (!(ac == C(1)))
                os << ac << "*";
            os << var;
            if (e != 2) {
                os << "^";
                if (e % 2 == 0)
                    os << e / 2;
                else
                    os << "(" << e << "/2)";
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

using LaurentQ = Laurent<Rational>;

// Two-variable Laurent polynomials; exponent pairs in half-ticks.
template <typename C>
class Laurent2 {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, C>;

    Laurent2() = default;
    explicit Laurent2(const C& c)
    {
        if (!(c == C(0)))
            terms_[{0, 0}] = c;
    }
    static Laurent2 monomial(int e1, int e2, const C& c = C(1))
    {
        Laurent2 p;
        if (!(c == C(0)))
            p.terms_[{e1, e2}] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Key k, const C& c)
    {
        if (c == C(0))
            return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == C(0))
                terms_.erase(it);
        }
    }

    Laurent2 operator-() const
    {
        Laurent2 r;
        for (auto& [k, c] : terms_)
            r.terms_[k] = -c;
        return r;
    }
    Laurent2& operator+=(const Laurent2& o)
    {
        for (auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    Laurent2& operator-=(const Laurent2& o)
    {
        for (auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    friend Laurent2 operator+(Laurent2 p, const Laurent2& q) { return p += q; }
    friend Laurent2 operator-(Laurent2 p, const Laurent2& q) { return p -= q; }
    friend Laurent2 operator*(const Laurent2& p, const Laurent2& q)
    {
        Laurent2 r;
        for (auto& [kp, cp] : p.terms_)
            for (auto& [kq, cq] : q.terms_)
                r.add_term({kp.first + kq.first, kp.second + kq.second}, cp * cq);
        return r;
    }
    Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }
    friend bool operator==(const Laurent2& p, const Laurent2& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const Laurent2& p, const Laurent2& q) { return !(p == q); }

    int min_degree_first() const
    {
        if (terms_.empty())
            throw invariant_error("degree of zero polynomial");
        int m = terms_.begin()->first.first;
        for (auto& [k, c] : terms_)
            m = std::min(m, k.first);
        return m;
    }
    int max_degree_first() const
    {
        if (terms_.empty())
            throw invariant_error("degree of zero polynomial");
        int m = terms_.begin()->first.first;
        for (auto& [k, c] : terms_)
            m = std::max(m, k.first);
        return m;
    }

    // Exact division by graded-lex term elimination.  Extreme-exponent
    // multiplicativity in the Laurent domain floors the quotient support in
    // each variable, which bounds the descent on non-divisible inputs.
    std::optional<Laurent2> divide_exact(const Laurent2& d) const
    {
        if (d.is_zero())
            throw invariant_error("division by zero polynomial");
        if (is_zero())
            return Laurent2();
        auto lead = [](const Laurent2& p) {
            auto best = p.terms_.begin();
            for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it) {
                long sb = long(best->first.first) + best->first.second;
                long si = long(it->first.first) + it->first.second;
                if (si > sb || (si == sb && it->first > best->first))
                    best = it;
            }
            return best;
        };
        auto min_coord = [](const Laurent2& p, bool first) {
            int m = first ? p.terms_.begin()->first.first : p.terms_.begin()->first.second;
            for (auto& [k, c] : p.terms_)
                m = std::min(m, first ? k.first : k.second);
            return m;
        };
        int floor1 = min_coord(*this, true) - min_coord(d, true);
        int floor2 = min_coord(*this, false) - min_coord(d, false);
        Laurent2 q;
        Laurent2 r = *this;
        auto dl = lead(d);
        Key dk = dl->first;
        C dc = dl->second;
        while (!r.is_zero()) {
            auto rl = lead(r);
            Key sh{rl->first.first - dk.first, rl->first.second - dk.second};
            if (sh.first < floor1 || sh.second < floor2)
                return std::nullopt;
            C fac = rl->second / dc;
            q.add_term(sh, fac);
            Laurent2 t;
            t.add_term(sh, fac);
            r -= t * d;
        }
        return q;
    }

    std::string to_string(const std::string& v1, const std::string& v2) const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        auto print_var = [&os](const std::string& v, int e) {
            os << v;
            if (e != 2) {
                os << "^";
                if (e % 2 == 0)
                    os << e / 2;
                else
                    os << "(" << e << "/2)";
            }
        };
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto& [k, c] = *it;
            C ac = c < C(0) ? C(-c) : c;
            if (first) {
                if (c < C(0))
                    os << "-";
                first = false;
            } else {
                os << (c < C(0) ? " - " : " + ");
            }
            if (k.first == 0 && k.second == 0) {
                os << ac;
                continue;
            }
            bool star = false;
            if (!(ac == C(1))) {
                os << ac;
                star = true;
            }
            if (k.first != 0) {
                if (star)
                    os << "*";
                print_var(v1, k.first);
                star = true;
            }
            if (k.second != 0) {
                if (star)
                    os << "*";
                print_var(v2, k.second);
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

using Laurent2Q = Laurent2<Rational>;

// Univariate gcd via Euclid on shifted ordinary polynomials, monic result.
inline LaurentQ laurent_gcd(LaurentQ a, LaurentQ b)
{
    auto normalize = [](LaurentQ p) {
        if (p.is_zero())
            return p;
        p = p.shifted(-p.min_degree());
        Rational lead = p.terms().rbegin()->second;
        LaurentQ r;
        for (auto& [e, c] : p.terms())
            r.add_term(e, c / lead);
        return r;
    };
    a = normalize(a);
    b = normalize(b);
    while (!b.is_zero()) {
        // remainder of a by b
        LaurentQ r = a;
        int db = b.max_degree();
        Rational bc = b.terms().rbegin()->second;
        while (!r.is_zero() && r.max_degree() >= db) {
            int sh = r.max_degree() - db;
            Rational f = r.terms().rbegin()->second / bc;
            r -= b.shifted(sh) * LaurentQ(f);
        }
        a = b;
        b = normalize(r);
        a = normalize(a);
    }
    return a.is_zero() ? a : a;
}

// Quotients of one-variable Laurent polynomials; canonical form has a
// denominator with constant term, leading coefficient 1 and no common
// factor with the numerator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    explicit RationalFunction(LaurentQ n) : num_(std::move(n)), den_(Rational(1)) {}
    RationalFunction(LaurentQ n, LaurentQ d) : num_(std::move(n)), den_(std::move(d))
    {
        if (den_.is_zero())
            throw invariant_error("zero denominator");
        canonicalize();
    }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == LaurentQ(Rational(1)); }

    friend RationalFunction operator+(const RationalFunction& p, const RationalFunction& q)
    {
        return RationalFunction(p.num_ * q.den_ + q.num_ * p.den_, p.den_ * q.den_);
    }
    friend RationalFunction operator-(const RationalFunction& p, const RationalFunction& q)
    {
        return RationalFunction(p.num_ * q.den_ - q.num_ * p.den_, p.den_ * q.den_);
    }
    friend RationalFunction operator*(const RationalFunction& p, const RationalFunction& q)
    {
        return RationalFunction(p.num_ * q.num_, p.den_ * q.den_);
    }
    friend RationalFunction operator/(const RationalFunction& p, const RationalFunction& q)
    {
        if (q.num_.is_zero())
            throw invariant_error("division by zero rational function");
        return RationalFunction(p.num_ * q.den_, p.den_ * q.num_);
    }
    friend bool operator==(const RationalFunction& p, const RationalFunction& q)
    {
        return p.num_ == q.num_ && p.den_ == q.den_;
    }

    std::string to_string(const std::string& var) const
    {
        if (is_polynomial())
            return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void canonicalize()
    {
        if (num_.is_zero()) {
            den_ = LaurentQ(Rational(1));
            return;
        }
        LaurentQ g = laurent_gcd(num_, den_);
        if (!g.is_zero() && g.max_degree() > 0) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        int sh = den_.min_degree();
        den_ = den_.shifted(-sh);
        num_ = num_.shifted(-sh);
        Rational lead = den_.terms().rbegin()->second;
        LaurentQ n2, d2;
        for (auto& [e, c] : num_.terms())
            n2.add_term(e, c / lead);
        for (auto& [e, c] : den_.terms())
            d2.add_term(e, c / lead);
        num_ = n2;
        den_ = d2;
    }

    LaurentQ num_;
    LaurentQ den_;
};

} // namespace krw
