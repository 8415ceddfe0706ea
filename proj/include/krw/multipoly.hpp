#pragma once

// Multivariate polynomials over Q.  Variable 0 is the formal variable `a`
// of the ax theory; variable v >= 1 is the marking x_v.  Monomials store
// exponent vectors with trailing zeros trimmed, so equal monomials have
// equal representations regardless of how many variables are "in play".

#include "krw/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace krw {

using Monomial = std::vector<int>; // exponents; index 0 = a, index v = x_v

inline Monomial trim(Monomial m)
{
    while (!m.empty() && m.back() == 0)
        m.pop_back();
    return m;
}

inline Monomial mono_mul(const Monomial& p, const Monomial& q)
{
    Monomial r(std::max(p.size(), q.size()), 0);
    for (size_t i = 0; i < p.size(); ++i)
        r[i] += p[i];
    for (size_t i = 0; i < q.size(); ++i)
        r[i] += q[i];
    return trim(r);
}

// q | p as monomials?
inline bool mono_divides(const Monomial& q, const Monomial& p)
{
    if (q.size() > p.size())
        return false;
    for (size_t i = 0; i < q.size(); ++i)
        if (q[i] > p[i])
            return false;
    return true;
}

inline Monomial mono_div(const Monomial& p, const Monomial& q)
{
    Monomial r = p;
    for (size_t i = 0; i < q.size(); ++i)
        r[i] -= q[i];
    return trim(r);
}

inline int mono_total_degree(const Monomial& m)
{
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

// degrevlex with variable order a < x1 < x2 < ...; used both as the map
// order and the printing order.
struct DegRevLexLess {
    bool operator()(const Monomial& p, const Monomial& q) const
    {
        int dp = mono_total_degree(p), dq = mono_total_degree(q);
        if (dp != dq)
            return dp < dq;
        size_t n = std::max(p.size(), q.size());
        for (size_t i = n; i-- > 0;) {
            int ep = i < p.size() ? p[i] : 0;
            int eq = i < q.size() ? q[i] : 0;
            if (ep != eq)
                return ep > eq; // smaller in degrevlex has larger exponent at the last difference
        }
        return false;
    }
};

class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, DegRevLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c)
    {
        if (c != 0)
            terms_[Monomial{}] = c;
    }

    static MultiPoly var(int v, int exp = 1)
    {
        MultiPoly p;
        Monomial m(v + 1, 0);
        m[v] = exp;
        p.terms_[trim(m)] = 1;
        return p;
    }
    static MultiPoly a() { return var(0); }
    static MultiPoly x(int i) { return var(i); }
    static MultiPoly constant(long c) { return MultiPoly(Rational(c)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        Monomial key = trim(m);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    MultiPoly operator-() const
    {
        MultiPoly r;
        for (auto& [m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o)
    {
        for (auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o)
    {
        for (auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q)
    {
        MultiPoly r;
        for (auto& [mp, cp] : p.terms_)
            for (auto& [mq, cq] : q.terms_)
                r.add_term(mono_mul(mp, mq), cp * cq);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p)
    {
        MultiPoly r;
        if (c == 0)
            return r;
        for (auto& [m, cp] : p.terms_)
            r.terms_[m] = c * cp;
        return r;
    }
    friend bool operator==(const MultiPoly& p, const MultiPoly& q) { return p.terms_ == q.terms_; }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    // Leading term in degrevlex.
    std::pair<Monomial, Rational> leading_term() const
    {
        if (terms_.empty())
            throw invariant_error("leading_term of zero polynomial");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const
    {
        if (d.is_zero())
            throw invariant_error("division by zero polynomial");
        MultiPoly q;
        MultiPoly r = *this;
        auto [dm, dc] = d.leading_term();
        while (!r.is_zero()) {
            auto [rm, rc] = r.leading_term();
            if (!mono_divides(dm, rm))
                return std::nullopt;
            MultiPoly t;
            t.add_term(mono_div(rm, dm), rc / dc);
            q += t;
            r -= t * d;
        }
        return q;
    }

    bool contains_var(int v) const
    {
        for (auto& [m, c] : terms_)
            if (static_cast<size_t>(v) < m.size() && m[v] != 0)
                return true;
        return false;
    }

    int max_var() const
    {
        int mv = -1;
        for (auto& [m, c] : terms_)
            mv = std::max(mv, static_cast<int>(m.size()) - 1);
        return mv;
    }

    // Substitute variable v by the polynomial `value` (variable exclusion,
    // boundary quotients, specializations).
    MultiPoly substitute(int v, const MultiPoly& value) const
    {
        MultiPoly r;
        std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
        for (auto& [m, c] : terms_) {
            int e = static_cast<size_t>(v) < m.size() ? m[v] : 0;
            while (static_cast<int>(powers.size()) <= e)
                powers.push_back(powers.back() * value);
            Monomial rest = m;
            if (static_cast<size_t>(v) < rest.size())
                rest[v] = 0;
            MultiPoly t;
            t.add_term(trim(rest), c);
            r += t * powers[e];
        }
        return r;
    }

    // Simultaneous substitution; replacements see only the original
    // variables, never each other's output.
    MultiPoly substitute_many(const std::map<int, MultiPoly>& repl) const
    {
        MultiPoly r;
        for (auto& [m, c] : terms_) {
            MultiPoly t(c);
            Monomial rest(m.size(), 0);
            for (size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0)
                    continue;
                auto it = repl.find(static_cast<int>(v));
                if (it == repl.end()) {
                    rest[v] = m[v];
                    continue;
                }
                for (int k = 0; k < m[v]; ++k)
                    t *= it->second;
            }
            MultiPoly mono;
            mono.add_term(trim(rest), Rational(1));
            r += t * mono;
        }
        return r;
    }

    // Degree of x_i taken as `xdeg` (2 throughout), ignoring `a`.
    // Returns nullopt when not homogeneous.
    std::optional<int> homogeneous_x_degree() const
    {
        std::optional<int> deg;
        for (auto& [m, c] : terms_) {
            int d = 0;
            for (size_t i = 1; i < m.size(); ++i)
                d += 2 * m[i];
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
        return terms_.empty() ? std::optional<int>(0) : deg;
    }

    // Bidegree (a-part, x-part) with deg a = (2,0), deg x_i = (0,2).
    std::optional<std::pair<int, int>> homogeneous_bidegree() const
    {
        std::optional<std::pair<int, int>> deg;
        for (auto& [m, c] : terms_) {
            int da = m.empty() ? 0 : 2 * m[0];
            int dx = 0;
            for (size_t i = 1; i < m.size(); ++i)
                dx += 2 * m[i];
            if (deg && *deg != std::make_pair(da, dx))
                return std::nullopt;
            deg = {da, dx};
        }
        return terms_.empty() ? std::optional<std::pair<int, int>>({0, 0}) : deg;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        // print highest degrevlex term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational ac = abs(c);
            if (first) {
                if (c < 0)
                    os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool unit = ac == 1 && !m.empty() && mono_total_degree(m) > 0;
            if (!unit)
                os << rat_to_string(ac);
            bool any = false;
            for (size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0)
                    continue;
                if (any || !unit)
                    os << "*";
                if (v == 0)
                    os << "a";
                else
                    os << "x" << v;
                if (m[v] != 1)
                    os << "^" << m[v];
                any = true;
            }
            if (!any && unit)
                os << rat_to_string(ac);
        }
        return os.str();
    }

private:
    Terms terms_;
};

} // namespace krw
