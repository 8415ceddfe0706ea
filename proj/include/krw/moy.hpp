#pragma once

// Weight-decreasing rewriting for resolved closed braids: exact graded
// dimensions of the x^{n+1}-theory homology, and a-grading support of the
// ax-theory homology.  Recursion rules are the circle / unique-max /
// square / triangle decompositions; the triangle support rule is an
// over-approximation and is flagged as such.

#include "krw/braid.hpp"
#include "krw/laurent.hpp"

#include <map>
#include <set>

namespace krw {

// [n]_q = q^{1-n} + q^{3-n} + ... + q^{n-1}, half-tick exponents.
inline LaurentQ quantum_integer(int n)
{
    LaurentQ p;
    for (int k = 0; k < n; ++k)
        p.add_term(2 * (1 - n + 2 * k), Rational(1));
    return p;
}

// Graded dimension: Laurent polynomial in q with nonnegative integer
// coefficients, palindromic for the words we feed it.
struct GradedDimension {
    LaurentQ poly;

    bool is_zero() const { return poly.is_zero(); }
    int min_q() const { return poly.min_degree(); }
    int max_q() const { return poly.max_degree(); }
};

struct ASupport {
    std::set<int> degrees; // a-degrees (ticks, not half-ticks: always integers)
    bool exact = true;     // false once a Triangle union was taken
};

class MoyRewriter {
public:
    explicit MoyRewriter(int n) : n_(n)
    {
        if (n < 2)
            throw invariant_error("MoyRewriter needs n >= 2");
    }

    int n() const { return n_; }

    GradedDimension gdim(const ResolvedWord& mu)
    {
        validate(mu);
        LaurentQ p = gdim_impl(mu);
        for (auto& [e, c] : p.terms())
            if (c < 0 || c.get_den() != 1)
                throw invariant_error("graded dimension left nonnegative integers");
        if (!p.palindromic())
            throw invariant_error("graded dimension lost q <-> q^{-1} symmetry");
        return {p};
    }

    // Extreme nonzero q-degrees, in ticks; asserted within +-((n-1)b + m).
    std::pair<int, int> extremes(const ResolvedWord& mu)
    {
        GradedDimension g = gdim(mu);
        if (g.is_zero())
            throw invariant_error("homology of a resolved closed braid vanished");
        int lo = g.min_q() / 2, hi = g.max_q() / 2;
        int bound = (n_ - 1) * mu.strands + static_cast<int>(mu.letters.size());
        if (lo < -bound || hi > bound)
            throw invariant_error("extremes escape the resolved-braids-n bound");
        return {lo, hi};
    }

private:
    LaurentQ gdim_impl(const ResolvedWord& mu)
    {
        ResolvedWord key = canonical_cyclic(mu);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;

        LaurentQ result;
        if (mu.letters.empty()) {
            result = LaurentQ(Rational(1));
            LaurentQ qn = quantum_integer(n_);
            for (int s = 0; s < mu.strands; ++s)
                result *= qn;
        } else if (auto s = find_free_strand(mu)) {
            result = quantum_integer(n_) * gdim_impl(delete_strand(mu, *s));
        } else {
            ReductionStep step = find_reduction(mu);
            if (auto* um = std::get_if<UniqueMaxStep>(&step)) {
                ResolvedWord nu = um->transformed;
                nu.letters.pop_back();
                result = quantum_integer(n_ - 1) * gdim_impl(delete_strand(nu, um->index + 1));
            } else if (auto* sq = std::get_if<SquareStep>(&step)) {
                ResolvedWord shorter = sq->transformed;
                shorter.letters.pop_back();
                result = quantum_integer(2) * gdim_impl(shorter);
            } else {
                auto& tr = std::get<TriangleStep>(step);
                int j = tr.index;
                ResolvedWord nu = tr.transformed;
                nu.letters.resize(nu.letters.size() - 3);
                ResolvedWord mu1 = nu, mu2 = nu, mu4 = nu;
                mu1.letters.insert(mu1.letters.end(), {j - 1, j, j - 1});
                mu2.letters.push_back(j);
                mu4.letters.push_back(j - 1);
                result = gdim_impl(mu1) + gdim_impl(mu2) - gdim_impl(mu4);
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    int n_;
    std::map<ResolvedWord, LaurentQ> memo_;
};

inline GradedDimension gdim_hn(const ResolvedWord& mu, int n)
{
    return MoyRewriter(n).gdim(mu);
}

inline std::pair<int, int> gn_extremes(const ResolvedWord& mu, int n)
{
    return MoyRewriter(n).extremes(mu);
}

class ASupportRewriter {
public:
    ASupport support(const ResolvedWord& mu)
    {
        validate(mu);
        ASupport s = support_impl(mu);
        for (int d : s.degrees)
            if (d < -mu.strands || d > -1)
                throw invariant_error("a-support escapes [-b, -1]");
        return s;
    }

private:
    ASupport support_impl(const ResolvedWord& mu)
    {
        ResolvedWord key = canonical_cyclic(mu);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;

        ASupport result;
        if (mu.letters.empty()) {
            for (int k = 1; k <= mu.strands; ++k)
                result.degrees.insert(-k);
        } else if (auto s = find_free_strand(mu)) {
            ASupport inner = support_impl(delete_strand(mu, *s));
            result.exact = inner.exact;
            for (int d : inner.degrees) {
                result.degrees.insert(d);
                result.degrees.insert(d - 1);
            }
        } else {
            ReductionStep step = find_reduction(mu);
            if (auto* um = std::get_if<UniqueMaxStep>(&step)) {
                // move1: append/remove the unique-max letter keeps the
                // a-grading; recurse on the same-strand word without it
                ResolvedWord nu = um->transformed;
                nu.letters.pop_back();
                result = support_impl(nu);
            } else if (auto* sq = std::get_if<SquareStep>(&step)) {
                ResolvedWord shorter = sq->transformed;
                shorter.letters.pop_back();
                result = support_impl(shorter);
            } else {
                auto& tr = std::get<TriangleStep>(step);
                int j = tr.index;
                ResolvedWord nu = tr.transformed;
                nu.letters.resize(nu.letters.size() - 3);
                ResolvedWord mu1 = nu, mu2 = nu;
                mu1.letters.insert(mu1.letters.end(), {j - 1, j, j - 1});
                mu2.letters.push_back(j);
                ASupport s1 = support_impl(mu1);
                ASupport s2 = support_impl(mu2);
                result.exact = false;
                result.degrees = s1.degrees;
                result.degrees.insert(s2.degrees.begin(), s2.degrees.end());
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::map<ResolvedWord, ASupport> memo_;
};

inline ASupport a_support_h(const ResolvedWord& mu)
{
    return ASupportRewriter().support(mu);
}

} // namespace krw
