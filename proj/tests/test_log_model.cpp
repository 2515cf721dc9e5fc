#include "motkit/log_model.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace motkit;

namespace {

Motive random_motive(std::mt19937_64& rng, long rmax = 2) {
    std::uniform_int_distribution<long> rd(1, rmax), dd(1, 3), e(-6, 6), pe(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    long r = rd(rng), d = dd(rng);
    std::vector<std::vector<PiMonomial>> entries(d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < r; ++j) {
            Rat c = rat_pow(Rat(2), pe(rng)) * rat_pow(Rat(3), pe(rng));
            if (coin(rng)) c = -c;
            entries[i].push_back(PiMonomial(c, e(rng)));
        }
    return Motive(r, d, std::move(entries));
}

}  // namespace

TEST_CASE("tate model table") {
    Motive tate(1, 1, {{PiMonomial::pi()}});
    ModelAlgebra alg = build_model_algebra(tate, 5);
    for (long a = 0; a < 5; ++a) {
        CHECK(alg.b[0][a] == PiMonomial(Rat(1), a));
        CHECK(alg.b1[0][a] == PiMonomial::one());
        CHECK(alg.bminus[0][a] == PiMonomial::one());
    }
    CHECK(generic_fibre_check(alg, tate));
}

TEST_CASE("inverse tate model table") {
    Motive tinv(1, 1, {{PiMonomial::pi(-1)}});
    for (long n = 2; n <= 6; ++n) {
        ModelAlgebra alg = build_model_algebra(tinv, n);
        CHECK(alg.b[0][0] == PiMonomial::one());
        for (long a = 1; a < n; ++a) CHECK(alg.b[0][a] == PiMonomial(Rat(1), n - a));
        CHECK(generic_fibre_check(alg, tinv));
    }
}

TEST_CASE("unit motive gives unit tables") {
    Motive m(2, 1, {{PiMonomial(Rat(3), 0), PiMonomial(Rat(1, 2), 0)}});
    ModelAlgebra alg = build_model_algebra(m, 4);
    long npoints = alg.points.size();
    for (long idx = 0; idx < npoints; ++idx) {
        FinAbElem a = alg.points.elem_at(idx);
        CHECK(alg.b[0][idx] ==
              PiMonomial(rat_pow(Rat(3), a[0]) * rat_pow(Rat(1, 2), a[1]), 0));
        CHECK(alg.b[0][idx].is_unit());
    }
    IntegralityReport rep = integrality_report(alg);
    CHECK(rep.integral);
    CHECK(rep.nonunit_locus.empty());
}

TEST_CASE("integrality reports") {
    Motive tate(1, 1, {{PiMonomial::pi()}});
    IntegralityReport rep = integrality_report(build_model_algebra(tate, 5));
    CHECK(rep.min_valuation == 0);
    CHECK(rep.integral);
    std::vector<std::pair<long, long>> want{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    CHECK(rep.nonunit_locus == want);

    Motive m5(1, 1, {{PiMonomial::pi(5)}});
    ModelAlgebra alg5 = build_model_algebra(m5, 5);
    for (long a = 0; a < 5; ++a) CHECK(alg5.b[0][a] == PiMonomial(Rat(1), 5 * a));
    CHECK(integrality_report(alg5).min_valuation == 0);
}

TEST_CASE("model properties on random motives") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 50; ++t) {
        Motive m = random_motive(rng);
        long n = 1 + t % 8;
        ModelAlgebra alg = build_model_algebra(m, n);
        CHECK(integrality_report(alg).integral);
        CHECK(generic_fibre_check(alg, m));
        // values factor as the recorded three-way product
        long npoints = alg.points.size();
        for (long i = 0; i < m.d; ++i)
            for (long idx = 0; idx < npoints; ++idx)
                CHECK(alg.b[i][idx] ==
                      alg.b1[i][idx] * alg.bplus[i][idx] * alg.bminus[i][idx]);
    }
}

TEST_CASE("divisible monodromy gives n-th power shifts") {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 30; ++t) {
        Motive m = random_motive(rng);
        long n = 2 + t % 5;
        for (auto& row : m.entries)
            for (auto& x : row) x = PiMonomial(x.coeff, (x.exponent / n) * n);
        REQUIRE(extends_over_R(m, n));
        ModelAlgebra alg = build_model_algebra(m, n);
        long npoints = alg.points.size();
        for (long i = 0; i < m.d; ++i)
            for (long idx = 0; idx < npoints; ++idx) {
                // unit times an n-th power of pi
                CHECK(valuation(alg.b[i][idx]) % n == 0);
            }
    }
}

TEST_CASE("model multiplicativity at class level") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        Motive u = random_motive(rng);
        Motive v = u;
        for (auto& row : v.entries)
            for (auto& x : row) x = random_motive(rng, 1).entries[0][0];
        long n = 1 + t % 6;
        ModelAlgebra au = build_model_algebra(u, n);
        ModelAlgebra av = build_model_algebra(v, n);
        ModelAlgebra auv = build_model_algebra(motive_mul(u, v), n);
        long npoints = au.points.size();
        for (long i = 0; i < u.d; ++i)
            for (long idx = 0; idx < npoints; ++idx)
                CHECK(is_nth_power(
                    auv.b[i][idx] * (au.b[i][idx] * av.b[i][idx]).inverse(), n));
    }
}

TEST_CASE("point limit guard") {
    Motive m(3, 1,
             {{PiMonomial::pi(), PiMonomial::pi(), PiMonomial::pi()}});
    CHECK_THROWS_AS(build_model_algebra(m, 100, 1000), std::domain_error);
    CHECK_THROWS_AS(build_model_algebra(m, 0), std::domain_error);
}
