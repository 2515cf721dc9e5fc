#pragma once

// Truncated Dieudonne data over Z/p^m: Frobenius, Verschiebung, the
// nilpotent monodromy operator built from the geometric monodromy matrix,
// the carry-cocycle coproduct identity, the Artin-Hasse logarithm, p-adic
// logarithms of principal units, and integrals of the second kind.

#include "motkit/cocycles.hpp"
#include "motkit/finab.hpp"
#include "motkit/motive.hpp"
#include "motkit/series.hpp"

#include <stdexcept>
#include <vector>

namespace motkit {

using ModMatrix = std::vector<std::vector<Int>>;

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline Int int_pow(long base, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

struct DieudonneData {
    long p = 2, m = 1, d = 0, r = 0;
    // rank d+r; basis = (toric block of size d | etale block of size r)
    ModMatrix F, V, Nop;

    Int modulus() const { return int_pow(p, m); }
};

namespace detail {

inline ModMatrix mat_mul_mod(const ModMatrix& a, const ModMatrix& b, const Int& mod) {
    size_t n = a.size();
    ModMatrix c(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % mod;
        }
    return c;
}

inline ModMatrix scalar_mat(size_t n, const Int& s, const Int& mod) {
    ModMatrix c(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) c[i][i] = s % mod;
    return c;
}

}  // namespace detail

// With residue field F_p: F = diag(p I_d, I_r), V = diag(I_d, p I_r), and
// the monodromy operator sends the i-th toric basis vector to
// sum_j mu[i][j] times the j-th etale basis vector, killing the etale block.
inline DieudonneData build_dieudonne(const MonodromyMatrix& mu, long p, long m) {
    if (!is_prime(p)) throw std::domain_error("build_dieudonne: p must be prime");
    if (m < 1) throw std::domain_error("build_dieudonne: m must be >= 1");
    DieudonneData dd;
    dd.p = p;
    dd.m = m;
    dd.d = mu.rows();
    dd.r = mu.cols();
    Int mod = dd.modulus();
    size_t n = static_cast<size_t>(dd.d + dd.r);
    dd.F = detail::scalar_mat(n, Int(1), mod);
    dd.V = detail::scalar_mat(n, Int(1), mod);
    dd.Nop = detail::scalar_mat(n, Int(0), mod);
    for (long i = 0; i < dd.d; ++i) dd.F[i][i] = Int(p) % mod;
    for (long j = 0; j < dd.r; ++j) dd.V[dd.d + j][dd.d + j] = Int(p) % mod;
    for (long i = 0; i < dd.d; ++i)
        for (long j = 0; j < dd.r; ++j)
            dd.Nop[dd.d + j][i] = ((Int(mu.mu[i][j]) % mod) + mod) % mod;
    return dd;
}

inline bool check_fv_identity(const DieudonneData& dd) {
    Int mod = dd.modulus();
    size_t n = dd.F.size();
    auto fv = detail::mat_mul_mod(dd.F, dd.V, mod);
    auto vf = detail::mat_mul_mod(dd.V, dd.F, mod);
    auto pid = detail::scalar_mat(n, Int(dd.p), mod);
    return fv == pid && vf == pid;
}

inline bool check_nop_square_zero(const DieudonneData& dd) {
    Int mod = dd.modulus();
    auto n2 = detail::mat_mul_mod(dd.Nop, dd.Nop, mod);
    return n2 == detail::scalar_mat(dd.Nop.size(), Int(0), mod);
}

inline bool check_fnv_identity(const DieudonneData& dd) {
    Int mod = dd.modulus();
    auto fn = detail::mat_mul_mod(dd.F, dd.Nop, mod);
    return detail::mat_mul_mod(fn, dd.V, mod) == dd.Nop;
}

// h(a) = sigma(a) = a~/p^m satisfies h(a+b) - h(a) - h(b) = eps * carry(a,b)
// for one global sign eps; returns eps. Throws if no single sign works.
inline int coproduct_identity_check(long p, long m) {
    if (!is_prime(p)) throw std::domain_error("coproduct_identity_check: p not prime");
    Int nmod = int_pow(p, m);
    if (nmod > 10000) throw std::domain_error("coproduct_identity_check: p^m too large");
    long n = nmod.convert_to<long>();
    CanonicalSection sigma(n);
    int eps = 0;
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            Rat lhs = sigma.value(a + b) - sigma.value(a) - sigma.value(b);
            long long g = carry(a, b, n);
            if (g == 0) {
                if (lhs != 0) throw std::logic_error("coproduct identity failed");
                continue;
            }
            int e = lhs == Rat(g) ? 1 : (lhs == -Rat(g) ? -1 : 0);
            if (e == 0 || (eps != 0 && e != eps))
                throw std::logic_error("coproduct identity failed");
            eps = e;
        }
    return eps == 0 ? -1 : eps;
}

// Artin-Hasse logarithm l(Y) of 1+Y: the solution of
// exp(-l - p^{-1} l^p - p^{-2} l^{p^2} - ...) = 1 + Y, computed degreewise.
inline TruncatedSeries artin_hasse_log(long p, long degree) {
    if (!is_prime(p)) throw std::domain_error("artin_hasse_log: p not prime");
    if (degree < 1 || degree > 200)
        throw std::domain_error("artin_hasse_log: degree out of range");
    TruncatedSeries L = series_scale(Rat(-1), series_log1p(degree));  // -log(1+Y)
    TruncatedSeries l(degree);
    for (long k = 1; k <= degree; ++k) {
        // l = L - sum_{i>=1} p^{-i} l^{p^i}; the correction at degree k only
        // involves coefficients of l below k
        Rat corr(0);
        Rat pinv(1, p);
        Rat scale = pinv;
        TruncatedSeries lp = l;
        for (Int q = p; q <= degree; q *= p) {
            lp = series_pow(lp, p);
            corr += scale * lp[k];
            scale *= pinv;
        }
        l[k] = L[k] - corr;
    }
    return l;
}

// sum_{i>=0} p^{-i} l^{p^i} up to the degree; equals -log(1+Y) when l is
// the Artin-Hasse logarithm.
inline TruncatedSeries artin_hasse_first_kind(const TruncatedSeries& l, long p) {
    TruncatedSeries s = l;
    Rat pinv(1, p);
    Rat scale = pinv;
    TruncatedSeries lp = l;
    for (Int q = p; q <= l.degree; q *= p) {
        lp = series_pow(lp, p);
        s = series_add(s, series_scale(scale, lp));
        scale *= pinv;
    }
    return s;
}

// p-adic logarithm of a principal unit residue mod p^m.
inline Int padic_log(const Int& u, long p, long m) {
    if (!is_prime(p)) throw std::domain_error("padic_log: p not prime");
    Int mod = int_pow(p, m);
    if (p == 2) {
        if (((u % 4) + 4) % 4 != 1)
            throw std::domain_error("padic_log: need u = 1 mod 4 for p = 2");
    } else if (((u % p) + p) % p != 1) {
        throw std::domain_error("padic_log: need u = 1 mod p");
    }
    Int ur = ((u % mod) + mod) % mod;
    Int x = ur - 1;  // divisible by p (by 4 when p = 2)
    Int acc = 0;
    Int xk = 1;
    // terms x^k / k; v_p(x^k/k) grows without bound, stop once every further
    // term vanishes mod p^m
    long kmax = 2 * m + 64;
    for (long k = 1; k <= kmax; ++k) {
        xk *= x;
        if (xk == 0) break;
        Rat term = Rat(xk, k);
        if (k % 2 == 0) term = -term;
        long v = term == 0 ? m : padic_valuation(term, Int(p));
        if (v >= m) continue;
        // reduce the p-integral rational term mod p^m
        Int num = rat_num(term), den = rat_den(term);
        Int dinv = 1;
        // modular inverse of den (coprime to p) via extended Euclid
        {
            Int a = ((den % mod) + mod) % mod, b = mod, x0 = 1, x1 = 0;
            while (b != 0) {
                Int q = a / b;
                Int t = a - q * b;
                a = b;
                b = t;
                t = x0 - q * x1;
                x0 = x1;
                x1 = t;
            }
            dinv = ((x0 % mod) + mod) % mod;
        }
        acc = (acc + num % mod * dinv) % mod;
        xk %= int_pow(p, m + kmax);  // keep sizes bounded
    }
    return ((acc % mod) + mod) % mod;
}

// Integral of the second kind attached to principal units: the table
// h(a) = sum_i sigma(a_i) * (-log u_i), computed with m extra digits of
// precision so the division by p^m is resolved p-adically.
struct IntegralSecondKind {
    long p = 2, m = 1, r = 1;
    FinAbGroup A;          // (Z/p^m)^r
    std::vector<Rat> h;    // exact values, h(0) = 0
    std::vector<Int> logs; // representatives of log u_i mod p^{2m}
};

inline IntegralSecondKind second_kind_integral(const std::vector<Int>& units, long p,
                                               long m) {
    if (!is_prime(p)) throw std::domain_error("second_kind_integral: p not prime");
    IntegralSecondKind ik;
    ik.p = p;
    ik.m = m;
    ik.r = static_cast<long>(units.size());
    Int nmod = int_pow(p, m);
    if (nmod > 10000) throw std::domain_error("second_kind_integral: p^m too large");
    long n = nmod.convert_to<long>();
    ik.A = FinAbGroup(std::vector<long>(ik.r, n));
    for (const Int& u : units) ik.logs.push_back(padic_log(u, p, 2 * m));
    long sz = ik.A.size();
    ik.h.resize(sz, Rat(0));
    for (long idx = 0; idx < sz; ++idx) {
        FinAbElem a = ik.A.elem_at(idx);
        Rat v(0);
        for (long i = 0; i < ik.r; ++i) v += Rat(a[i], n) * Rat(-ik.logs[i]);
        ik.h[idx] = v;
    }
    return ik;
}

// h(a) + h(b) - h(a+b) = sum_i carry(a_i,b_i) * (-log u_i), exactly with
// the stored log representatives.
inline bool second_kind_coboundary_check(const IntegralSecondKind& ik) {
    long sz = ik.A.size();
    long n = ik.A.orders.empty() ? 1 : ik.A.orders[0];
    for (long ia = 0; ia < sz; ++ia)
        for (long ib = 0; ib < sz; ++ib) {
            FinAbElem a = ik.A.elem_at(ia), b = ik.A.elem_at(ib);
            long iab = ik.A.index_of(ik.A.add(a, b));
            Rat lhs = ik.h[ia] + ik.h[ib] - ik.h[iab];
            Rat rhs(0);
            for (long i = 0; i < ik.r; ++i)
                rhs += Rat(carry(a[i], b[i], n)) * Rat(-ik.logs[i]);
            if (lhs != rhs) return false;
        }
    return true;
}

}  // namespace motkit
