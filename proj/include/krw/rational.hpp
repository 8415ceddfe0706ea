#pragma once

// Exact arithmetic substrate: arbitrary-precision rationals over GMP,
// plus Q[i] coefficients used by the hatted HOMFLY specialization.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace krw {

using Rational = mpq_class;
using Integer = mpz_class;

struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_canonical(const Rational& r)
{
    return sgn(r.get_den()) > 0 && gcd(Integer(abs(r.get_num())), Integer(r.get_den())) == 1;
}

inline std::string rat_to_string(const Rational& r)
{
    return r.get_str();
}

inline Rational rat_from_string(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw parse_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

// Element of Q[i]/(i^2+1).
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
    {
        Rational nrm = b.re * b.re + b.im * b.im;
        if (nrm == 0)
            throw invariant_error("division by zero in Q[i]");
        return {(a.re * b.re + a.im * b.im) / nrm, (a.im * b.re - a.re * b.im) / nrm};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string to_string(const GaussianRational& g)
{
    if (g.im == 0)
        return rat_to_string(g.re);
    std::string s = g.re == 0 ? "" : rat_to_string(g.re);
    if (g.im > 0 && !s.empty())
        s += "+";
    s += rat_to_string(g.im) + "i";
    return s;
}

// FNV-1a, used for cache parameter digests.
inline std::string fnv1a_hex(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace krw
