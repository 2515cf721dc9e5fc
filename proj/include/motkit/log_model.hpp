#pragma once

// Explicit algebra of the finite logarithmic model: the data
// (n, r, d, b_i: (Z/n)^r -> R) presenting B[T_1..T_d]/(T_i^n - b_i),
// assembled from the Raynaud decomposition as b_i = b_i^(1) b_i^+ b_i^-.

#include "motkit/finab.hpp"
#include "motkit/kummer.hpp"
#include "motkit/motive.hpp"

#include <stdexcept>
#include <vector>

namespace motkit {

struct ModelAlgebra {
    long n = 1, r = 0, d = 0;
    FinAbGroup points;  // (Z/n)^r, indexes the tables below
    // per torus index i, a dense table over the n^r points
    std::vector<std::vector<PiMonomial>> b, b1, bplus, bminus;

    const PiMonomial& value(long i, const FinAbElem& a) const {
        return b[i][points.index_of(a)];
    }
};

inline ModelAlgebra build_model_algebra(const Motive& m, long n,
                                        long point_limit = 1000000) {
    if (n <= 0) throw std::domain_error("build_model_algebra: n must be positive");
    ModelAlgebra alg;
    alg.n = n;
    alg.r = m.r;
    alg.d = m.d;
    alg.points = FinAbGroup(std::vector<long>(m.r, n));
    long npoints = 1;
    for (long j = 0; j < m.r; ++j) {
        npoints *= n;
        if (npoints > point_limit)
            throw std::domain_error("build_model_algebra: n^r exceeds point limit");
    }

    auto [u1, u2] = raynaud_decompose(m);
    auto mu = compute_monodromy(m);
    auto [muP, muM] = split_pm(mu);

    alg.b.assign(m.d, {});
    alg.b1.assign(m.d, {});
    alg.bplus.assign(m.d, {});
    alg.bminus.assign(m.d, {});
    for (long i = 0; i < m.d; ++i) {
        alg.b[i].reserve(npoints);
        alg.b1[i].reserve(npoints);
        alg.bplus[i].reserve(npoints);
        alg.bminus[i].reserve(npoints);
        for (long idx = 0; idx < npoints; ++idx) {
            FinAbElem a = alg.points.elem_at(idx);
            PiMonomial v1 = PiMonomial::one();
            long ep = 0, em = 0;
            for (long j = 0; j < m.r; ++j) {
                v1 = v1 * u1.entries[i][j].pow(a[j]);
                ep += a[j] * muP.mu[i][j];
                if (a[j] != 0) em += (n - a[j]) * (-muM.mu[i][j]);
            }
            PiMonomial vp(Rat(1), ep), vm(Rat(1), em);
            alg.b1[i].push_back(v1);
            alg.bplus[i].push_back(vp);
            alg.bminus[i].push_back(vm);
            alg.b[i].push_back(v1 * vp * vm);
        }
    }
    return alg;
}

// The model restricted to K must present the n-torsion of the motive:
// b_i(a) over prod_j U[i][j]^{a_j} is an n-th power for every i, a.
inline bool generic_fibre_check(const ModelAlgebra& alg, const Motive& m) {
    long npoints = alg.points.size();
    for (long i = 0; i < alg.d; ++i)
        for (long idx = 0; idx < npoints; ++idx) {
            FinAbElem a = alg.points.elem_at(idx);
            PiMonomial prod = PiMonomial::one();
            for (long j = 0; j < m.r; ++j)
                prod = prod * m.entries[i][j].pow(a[j]);
            if (!is_nth_power(alg.b[i][idx] * prod.inverse(), alg.n)) return false;
        }
    return true;
}

struct IntegralityReport {
    long min_valuation = 0;
    bool integral = true;
    // (torus index, point index) of every non-unit value: the log locus
    std::vector<std::pair<long, long>> nonunit_locus;
};

inline IntegralityReport integrality_report(const ModelAlgebra& alg) {
    IntegralityReport rep;
    bool first = true;
    long npoints = alg.points.size();
    for (long i = 0; i < alg.d; ++i)
        for (long idx = 0; idx < npoints; ++idx) {
            long v = valuation(alg.b[i][idx]);
            if (first || v < rep.min_valuation) rep.min_valuation = v;
            first = false;
            if (v != 0) rep.nonunit_locus.emplace_back(i, idx);
        }
    rep.integral = rep.min_valuation >= 0;
    return rep;
}

}  // namespace motkit
