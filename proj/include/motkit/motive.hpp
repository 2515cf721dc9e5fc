#pragma once

// Strict toric 1-motives u: Z^r -> G_m^d over K and their geometric
// monodromy. Entries are stored as a d x r matrix U with
// U[i][j] = e_i^*(u(e_j)), torus-character index first, so that the dual
// monodromy map is literally the matrix transpose.

#include "motkit/local_field.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace motkit {

struct Motive {
    long r = 0;  // rank of the lattice Y = Z^r
    long d = 0;  // rank of the split torus G_m^d
    std::vector<std::vector<PiMonomial>> entries;  // d rows, r columns

    Motive() = default;
    Motive(long r_, long d_, std::vector<std::vector<PiMonomial>> e)
        : r(r_), d(d_), entries(std::move(e)) {
        validate();
    }

    void validate() const {
        if (r < 1 || d < 1) throw std::domain_error("Motive: need r >= 1, d >= 1");
        if (static_cast<long>(entries.size()) != d)
            throw std::domain_error("Motive: row count != d");
        for (auto& row : entries)
            if (static_cast<long>(row.size()) != r)
                throw std::domain_error("Motive: column count != r");
    }

    bool operator==(const Motive& o) const {
        return r == o.r && d == o.d && entries == o.entries;
    }
};

struct MonodromyMatrix {
    std::vector<std::vector<long>> mu;  // mu[i][j] = mu(e_j, e_i^*)

    long rows() const { return static_cast<long>(mu.size()); }
    long cols() const { return mu.empty() ? 0 : static_cast<long>(mu[0].size()); }
    bool operator==(const MonodromyMatrix& o) const { return mu == o.mu; }
};

inline MonodromyMatrix compute_monodromy(const Motive& m) {
    MonodromyMatrix out;
    out.mu.resize(m.d);
    for (long i = 0; i < m.d; ++i) {
        out.mu[i].resize(m.r);
        for (long j = 0; j < m.r; ++j) out.mu[i][j] = valuation(m.entries[i][j]);
    }
    return out;
}

// Raynaud decomposition u = u1 * u2 (written multiplicatively, entrywise):
// u2 collects the pure pi-powers pi^mu[i][j], u1 the unit parts.
inline std::pair<Motive, Motive> raynaud_decompose(const Motive& m) {
    Motive u1 = m, u2 = m;
    for (long i = 0; i < m.d; ++i)
        for (long j = 0; j < m.r; ++j) {
            long v = valuation(m.entries[i][j]);
            u1.entries[i][j] = unit_part(m.entries[i][j]);
            u2.entries[i][j] = PiMonomial(Rat(1), v);
        }
    return {u1, u2};
}

inline std::pair<MonodromyMatrix, MonodromyMatrix> split_pm(const MonodromyMatrix& mu) {
    MonodromyMatrix plus = mu, minus = mu;
    for (auto& row : plus.mu)
        for (auto& v : row) v = v > 0 ? v : 0;
    for (auto& row : minus.mu)
        for (auto& v : row) v = v < 0 ? v : 0;
    return {plus, minus};
}

inline std::vector<std::vector<long>> level_n_monodromy(const MonodromyMatrix& mu, long n) {
    if (n <= 0) throw std::domain_error("level_n_monodromy: n must be positive");
    std::vector<std::vector<long>> out(mu.mu.size());
    for (size_t i = 0; i < mu.mu.size(); ++i) {
        out[i].resize(mu.mu[i].size());
        for (size_t j = 0; j < mu.mu[i].size(); ++j)
            out[i][j] = mod_reduce(mu.mu[i][j], n);
    }
    return out;
}

// Tate motive 1 -> c * pi^(n*r + s), an elliptic curve with split
// multiplicative reduction when |q| < 1.
inline Motive tate_motive(const Rat& c, long n, long r_mult, long s) {
    if (c == 0) throw std::domain_error("tate_motive: c must be nonzero");
    if (n < 1) throw std::domain_error("tate_motive: n must be positive");
    if (s < 0 || s > n - 1) throw std::domain_error("tate_motive: s out of range");
    if (r_mult < 0) throw std::domain_error("tate_motive: r must be >= 0");
    return Motive(1, 1, {{PiMonomial(c, n * r_mult + s)}});
}

inline Motive motive_mul(const Motive& a, const Motive& b) {
    if (a.r != b.r || a.d != b.d) throw std::domain_error("motive_mul: shape mismatch");
    Motive out = a;
    for (long i = 0; i < a.d; ++i)
        for (long j = 0; j < a.r; ++j)
            out.entries[i][j] = a.entries[i][j] * b.entries[i][j];
    return out;
}

inline Motive motive_pow(const Motive& a, long e) {
    Motive out = a;
    for (auto& row : out.entries)
        for (auto& x : row) x = x.pow(e);
    return out;
}

}  // namespace motkit
