#pragma once

// Exact rational arithmetic and small-integer factorization helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace motkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Trial-division factorization of a positive integer. Trial divisors are
// capped at 2^21; a leftover cofactor below the square of the cap is prime
// and kept, anything larger is rejected. Intermediate products of already
// factorable values (all prime factors small) stay factorable this way even
// when they outgrow 64 bits.
inline std::map<Int, long> factorize(Int n) {
    if (n <= 0) throw std::domain_error("factorize: input must be positive");
    static const Int pcap = Int(1) << 21;
    std::map<Int, long> f;
    for (Int p = 2; p * p <= n && p <= pcap; ++p) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) {
        if (n > pcap * pcap)
            throw std::domain_error("factorize: prime factor exceeds 2^21 cap");
        ++f[n];
    }
    return f;
}

// p-adic valuation of a nonzero rational.
inline long padic_valuation(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("padic_valuation: zero input");
    long v = 0;
    Int n = rat_num(q) < 0 ? Int(-rat_num(q)) : rat_num(q);
    Int d = rat_den(q);
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }
    return v;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    long n = e;
    if (n < 0) {
        if (b == 0) throw std::domain_error("rat_pow: zero to negative power");
        b = Rat(1) / b;
        n = -n;
    }
    Rat acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_to_string(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("rat_from_string: zero denominator");
    return Rat(num, den);
}

inline long mod_reduce(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace motkit
