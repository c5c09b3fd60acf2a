#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace polydisc {

using Int      = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Number of bits of |z|; bit_size(0) = 1.
inline std::size_t bit_size(const Int& z) {
    if (z == 0) return 1;
    return mpz_sizeinbase(z.backend().data(), 2);
}

/// Max bit-size of numerator and denominator.
inline std::size_t bit_size(const Rational& q) {
    return std::max(bit_size(num(q)), bit_size(den(q)));
}

inline Int floor_int(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.backend().data(), num(q).backend().data(), den(q).backend().data());
    return r;
}

inline Int ceil_int(const Rational& q) {
    Int r;
    mpz_cdiv_q(r.backend().data(), num(q).backend().data(), den(q).backend().data());
    return r;
}

/// 2^k as an exact rational, k may be negative.
inline Rational two_pow(long k) {
    Int p = 1;
    p <<= static_cast<unsigned long>(k < 0 ? -k : k);
    return k >= 0 ? Rational(p) : Rational(1, p);
}

/// Smallest integer s with q <= 2^s (q > 0).
inline long ceil_log2(const Rational& q) {
    if (q <= 0) throw error("ceil_log2: argument must be positive");
    long s = static_cast<long>(bit_size(num(q))) - static_cast<long>(bit_size(den(q))) + 1;
    while (q > two_pow(s)) ++s;
    while (s > std::numeric_limits<long>::min() && q <= two_pow(s - 1)) --s;
    return s;
}

inline Int isqrt_floor(const Int& n) {
    Int r;
    mpz_sqrt(r.backend().data(), n.backend().data());
    return r;
}

/// Rational upper bound on sqrt(q), q >= 0.
inline Rational ub_sqrt(const Rational& q) {
    if (q < 0) throw error("ub_sqrt: negative argument");
    if (q == 0) return 0;
    Int a = num(q), b = den(q);
    Int s = isqrt_floor(a * b);
    if (s * s < a * b) ++s;
    return Rational(s, b);
}

/// Rational lower bound on sqrt(q), q >= 0.
inline Rational lb_sqrt(const Rational& q) {
    if (q < 0) throw error("lb_sqrt: negative argument");
    if (q == 0) return 0;
    Int a = num(q), b = den(q);
    return Rational(isqrt_floor(a * b), b);
}

inline Rational pow_rat(Rational base, unsigned long e) {
    Rational r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Parse "a/b" or "a"; throws on malformed input.
inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        return q;
    } catch (const std::exception&) {
        throw error("malformed rational: '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Fixed-point decimal rendering (round toward zero), for human-readable output.
inline std::string to_decimal_string(const Rational& q, unsigned digits = 6) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int scaled = num(q) * scale / den(q);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string ds = scaled.str();
    if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();
    if (ds.back() == '.') ds.pop_back();
    return neg ? "-" + ds : ds;
}

/// Gaussian rational, the exact complex scalar used throughout.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational operator*(const Rational& c, const GaussianRational& z) {
    return {c * z.re, c * z.im};
}

inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string s = to_string(z.re);
    s += (z.im > 0) ? " + " : " - ";
    s += to_string(abs(z.im)) + "*i";
    return s;
}

}  // namespace polydisc
