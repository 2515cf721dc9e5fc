#pragma once

// Exact model of the local field K = Q(pi) with the pi-adic valuation.
//
// General elements are fractions of polynomials in pi over Q (KElement);
// monomials c*pi^k get the dedicated PiMonomial type which additionally
// supports canonical n-th power class normalization.

#include "motkit/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace motkit {

// --- polynomials over Q, coefficients low -> high ---

using Poly = std::vector<Rat>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    poly_trim(a);
    return a;
}

// remainder of a / b, b nonzero
inline Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        Poly t(shift, Rat(0));
        t.push_back(q);
        a = poly_sub(a, poly_mul(t, b));
    }
    return a;
}

inline Poly poly_monic(Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

inline Poly poly_div_exact(Poly a, const Poly& b) {
    Poly q;
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
        q[shift] = c;
        Poly t(shift, Rat(0));
        t.push_back(c);
        a = poly_sub(a, poly_mul(t, b));
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

inline long poly_ord(const Poly& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<long>(i);
    throw std::domain_error("poly_ord: zero polynomial");
}

// --- KElement: reduced fraction num/den of polynomials in pi ---

class KElement {
  public:
    KElement() : num_{}, den_{Rat(1)} {}
    KElement(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }
    static KElement from_rational(const Rat& c) {
        return KElement(Poly{c}, Poly{Rat(1)});
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    KElement operator*(const KElement& o) const {
        return KElement(poly_mul(num_, o.num_), poly_mul(den_, o.den_));
    }

    bool operator==(const KElement& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

  private:
    void reduce() {
        poly_trim(num_);
        poly_trim(den_);
        if (den_.empty()) throw std::domain_error("KElement: zero denominator");
        if (num_.empty()) {
            den_ = Poly{Rat(1)};
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
        den_ = poly_monic(den_);
        // re-scale numerator so that den stays monic after the gcd division
        Poly g2 = poly_gcd(num_, den_);
        if (g2.size() > 1) {
            num_ = poly_div_exact(num_, g2);
            den_ = poly_div_exact(den_, g2);
            den_ = poly_monic(den_);
        }
    }

    Poly num_, den_;
};

inline long valuation(const KElement& x) {
    if (x.is_zero()) throw std::domain_error("valuation: zero input");
    return poly_ord(x.num()) - poly_ord(x.den());
}

// --- PiMonomial: c * pi^k with c a nonzero rational ---

struct PiMonomial {
    Rat coeff;
    long exponent = 0;

    PiMonomial() : coeff(1) {}
    PiMonomial(Rat c, long k) : coeff(std::move(c)), exponent(k) {
        if (coeff == 0) throw std::domain_error("PiMonomial: zero coefficient");
    }
    static PiMonomial one() { return PiMonomial(Rat(1), 0); }
    static PiMonomial pi(long k = 1) { return PiMonomial(Rat(1), k); }

    bool is_unit() const { return exponent == 0; }
    bool is_integral() const { return exponent >= 0; }

    PiMonomial operator*(const PiMonomial& o) const {
        return PiMonomial(coeff * o.coeff, exponent + o.exponent);
    }
    PiMonomial inverse() const {
        return PiMonomial(Rat(1) / coeff, -exponent);
    }
    PiMonomial pow(long e) const {
        return PiMonomial(rat_pow(coeff, e), exponent * e);
    }
    bool operator==(const PiMonomial& o) const {
        return coeff == o.coeff && exponent == o.exponent;
    }

    KElement to_kelement() const {
        Poly num, den;
        if (exponent >= 0) {
            num.assign(static_cast<size_t>(exponent) + 1, Rat(0));
            num.back() = coeff;
            den = Poly{Rat(1)};
        } else {
            num = Poly{coeff};
            den.assign(static_cast<size_t>(-exponent) + 1, Rat(0));
            den.back() = Rat(1);
        }
        return KElement(std::move(num), std::move(den));
    }
};

inline long valuation(const PiMonomial& x) { return x.exponent; }

inline PiMonomial unit_part(const PiMonomial& x) {
    return PiMonomial(x.coeff, 0);
}

// Canonical representative of x * (K^*)^n. The pi-exponent is reduced into
// [0,n), every prime exponent of the coefficient is reduced into [0,n), and
// the sign is dropped for odd n (since -1 is then an n-th power) and kept
// for even n. Two monomials get the same canonical form iff their ratio is
// an n-th power in Q(pi)^*.
inline PiMonomial nth_power_class(const PiMonomial& x, long n) {
    if (n <= 0) throw std::domain_error("nth_power_class: n must be positive");
    bool negative = x.coeff < 0;
    Int num = rat_num(x.coeff);
    if (num < 0) num = -num;
    Int den = rat_den(x.coeff);
    std::map<Int, long> exps = factorize(num == 0 ? Int(1) : num);
    for (auto& [p, e] : factorize(den)) exps[p] -= e;
    Rat c(1);
    for (auto& [p, e] : exps) {
        long r = mod_reduce(e, n);
        if (r != 0) c *= Rat(rat_pow(Rat(p), r));
    }
    if (negative && n % 2 == 0) c = -c;
    return PiMonomial(c, mod_reduce(x.exponent, n));
}

// True iff x is an n-th power in Q(pi)^* (used to certify class computations).
inline bool is_nth_power(const PiMonomial& x, long n) {
    if (n <= 0) throw std::domain_error("is_nth_power: n must be positive");
    PiMonomial c = nth_power_class(x, n);
    return c.coeff == 1 && c.exponent == 0;
}

}  // namespace motkit
