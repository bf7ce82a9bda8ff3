#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace ordlift {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

constexpr long VAL_INF = std::numeric_limits<long>::max() / 2;

// p-adic valuation of a nonzero integer.
inline long vp_int(BigInt n, long p) {
    if (n == 0) return VAL_INF;
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// p-adic valuation of a rational; VAL_INF for zero.
inline long vp(const Rat& r, long p) {
    if (r == 0) return VAL_INF;
    return vp_int(rat_num(r), p) - vp_int(rat_den(r), p);
}

inline bool p_integral(const Rat& r, long p) { return r == 0 || vp(r, p) >= 0; }

// The p-prime-to-p unit part: r = p^vp(r) * unit(r).
inline Rat p_unit_part(const Rat& r, long p) {
    if (r == 0) throw std::domain_error("p_unit_part of zero");
    long v = vp(r, p);
    Rat pw = 1;
    BigInt pb = p;
    if (v >= 0) for (long i = 0; i < v; ++i) pw *= pb;
    else for (long i = 0; i < -v; ++i) pw /= pb;
    return r / pw;
}

inline Rat p_pow(long p, long e) {
    Rat r = 1;
    BigInt pb = p;
    if (e >= 0) for (long i = 0; i < e; ++i) r *= pb;
    else for (long i = 0; i < -e; ++i) r /= pb;
    return r;
}

// Canonical residue of a p-integral rational modulo p^k, in [0, p^k).
inline BigInt mod_ppow(const Rat& r, long p, long k) {
    BigInt pk = 1;
    for (long i = 0; i < k; ++i) pk *= p;
    BigInt num = rat_num(r) % pk, den = rat_den(r) % pk;
    if (num < 0) num += pk;
    if (den < 0) den += pk;
    if (boost::multiprecision::gcd(den, pk) != 1)
        throw std::domain_error("mod_ppow: denominator not prime to p");
    // modular inverse of den via extended gcd
    BigInt a = den, b = pk, x0 = 1, x1 = 0;
    while (b != 0) {
        BigInt q = a / b, t = a % b;
        a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    BigInt inv = x0 % pk;
    if (inv < 0) inv += pk;
    return (num * inv) % pk;
}

inline std::string rat_str(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash))) / Rat(BigInt(s.substr(slash + 1)));
}

} // namespace ordlift
