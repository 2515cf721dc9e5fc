#pragma once

// Kummer-theoretic calculus of n-torsion extension classes: entries of a
// motive modulo n-th powers, Baer sums, good-reduction tests, and the
// (classical class, monodromy) pair classifying the logarithmic extension.

#include "motkit/motive.hpp"

#include <stdexcept>
#include <vector>

namespace motkit {

struct KummerClass {
    long n = 1, r = 0, d = 0;
    std::vector<std::vector<PiMonomial>> cls;  // canonical representatives

    bool operator==(const KummerClass& o) const {
        return n == o.n && r == o.r && d == o.d && cls == o.cls;
    }

    bool is_trivial() const {
        for (auto& row : cls)
            for (auto& x : row)
                if (!(x == PiMonomial::one())) return false;
        return true;
    }
};

inline KummerClass eta_class(const Motive& m, long n) {
    if (n <= 0) throw std::domain_error("eta_class: n must be positive");
    KummerClass k;
    k.n = n;
    k.r = m.r;
    k.d = m.d;
    k.cls.resize(m.d);
    for (long i = 0; i < m.d; ++i) {
        k.cls[i].reserve(m.r);
        for (long j = 0; j < m.r; ++j)
            k.cls[i].push_back(nth_power_class(m.entries[i][j], n));
    }
    return k;
}

inline KummerClass baer_sum_class(const KummerClass& c1, const KummerClass& c2) {
    if (c1.n != c2.n || c1.r != c2.r || c1.d != c2.d)
        throw std::domain_error("baer_sum_class: shape mismatch");
    KummerClass out = c1;
    for (long i = 0; i < c1.d; ++i)
        for (long j = 0; j < c1.r; ++j)
            out.cls[i][j] = nth_power_class(c1.cls[i][j] * c2.cls[i][j], c1.n);
    return out;
}

// Class of the Tate motive 1 |-> pi: the class [pi] (trivial for n = 1).
inline KummerClass theta_class(long n) {
    if (n <= 0) throw std::domain_error("theta_class: n must be positive");
    KummerClass k;
    k.n = n;
    k.r = 1;
    k.d = 1;
    k.cls = {{nth_power_class(PiMonomial::pi(), n)}};
    return k;
}

// True iff the n-torsion extension class extends over R, i.e. every
// monodromy entry is divisible by n.
inline bool extends_over_R(const Motive& m, long n) {
    if (n <= 0) throw std::domain_error("extends_over_R: n must be positive");
    for (auto& row : compute_monodromy(m).mu)
        for (long v : row)
            if (mod_reduce(v, n) != 0) return false;
    return true;
}

struct KatoPair {
    KummerClass classical;            // class of the good-reduction part
    std::vector<std::vector<long>> N;  // level-n monodromy, entries in [0,n)

    bool operator==(const KatoPair& o) const {
        return classical == o.classical && N == o.N;
    }
};

inline KatoPair kato_pair(const Motive& m, long n) {
    auto [u1, u2] = raynaud_decompose(m);
    KatoPair p;
    p.classical = eta_class(u1, n);
    p.N = level_n_monodromy(compute_monodromy(m), n);
    return p;
}

// Class with entries [pi^{N[i][j]}]: push-out of the Tate class by N.
inline KummerClass pushout_theta(const std::vector<std::vector<long>>& N, long n) {
    KummerClass k;
    k.n = n;
    k.d = static_cast<long>(N.size());
    k.r = N.empty() ? 0 : static_cast<long>(N[0].size());
    k.cls.resize(k.d);
    for (long i = 0; i < k.d; ++i)
        for (long j = 0; j < k.r; ++j)
            k.cls[i].push_back(nth_power_class(PiMonomial(Rat(1), N[i][j]), n));
    return k;
}

// Reconstruction from a Kato pair: classical class + [pi^N].
inline KummerClass reconstruct_class(const KatoPair& p) {
    return baer_sum_class(p.classical, pushout_theta(p.N, p.classical.n));
}

// eta(n, u2) must agree with the push-out of the Tate class by the level-n
// monodromy; true for every motive.
inline bool push_theorem_check(const Motive& m, long n) {
    auto [u1, u2] = raynaud_decompose(m);
    auto nu_n = level_n_monodromy(compute_monodromy(m), n);
    return eta_class(u2, n) == pushout_theta(nu_n, n);
}

}  // namespace motkit
