#pragma once

// Truncated power series with exact rational coefficients.

#include "motkit/rational.hpp"

#include <stdexcept>
#include <vector>

namespace motkit {

struct TruncatedSeries {
    long degree = 0;              // truncation bound (inclusive)
    std::vector<Rat> coeff;       // indexed 0..degree

    explicit TruncatedSeries(long deg = 0)
        : degree(deg), coeff(static_cast<size_t>(deg) + 1, Rat(0)) {
        if (deg < 0) throw std::domain_error("TruncatedSeries: negative degree");
    }

    Rat& operator[](long k) { return coeff[k]; }
    const Rat& operator[](long k) const { return coeff[k]; }

    bool operator==(const TruncatedSeries& o) const {
        return degree == o.degree && coeff == o.coeff;
    }
};

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.degree, b.degree));
    for (long k = 0; k <= r.degree; ++k) r[k] = a[k] + b[k];
    return r;
}

inline TruncatedSeries series_scale(const Rat& s, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& c : r.coeff) c *= s;
    return r;
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.degree, b.degree));
    for (long i = 0; i <= r.degree; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; i + j <= r.degree; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline TruncatedSeries series_pow(const TruncatedSeries& a, long e) {
    TruncatedSeries r(a.degree);
    r[0] = Rat(1);
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1) r = series_mul(r, base);
        base = series_mul(base, base);
        e >>= 1;
    }
    return r;
}

// log(1+Y) to the given degree
inline TruncatedSeries series_log1p(long degree) {
    TruncatedSeries r(degree);
    for (long k = 1; k <= degree; ++k)
        r[k] = Rat(k % 2 == 1 ? 1 : -1, k);
    return r;
}

// exp(f) for f with zero constant term, via k g_k = sum_j j f_j g_{k-j}
inline TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (f[0] != 0) throw std::domain_error("series_exp: nonzero constant term");
    TruncatedSeries g(f.degree);
    g[0] = Rat(1);
    for (long k = 1; k <= f.degree; ++k) {
        Rat s(0);
        for (long j = 1; j <= k; ++j)
            if (f[j] != 0) s += Rat(j) * f[j] * g[k - j];
        g[k] = s / Rat(k);
    }
    return g;
}

}  // namespace motkit
