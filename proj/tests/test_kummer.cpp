#include "motkit/kummer.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace motkit;

namespace {

Motive random_motive(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> rd(1, 3), e(-9, 9), pe(-2, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    long r = rd(rng), d = rd(rng);
    std::vector<std::vector<PiMonomial>> entries(d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < r; ++j) {
            Rat c = rat_pow(Rat(2), pe(rng)) * rat_pow(Rat(3), pe(rng)) *
                    rat_pow(Rat(5), pe(rng));
            if (coin(rng)) c = -c;
            entries[i].push_back(PiMonomial(c, e(rng)));
        }
    return Motive(r, d, std::move(entries));
}

}  // namespace

TEST_CASE("eta class") {
    Motive tate(1, 1, {{PiMonomial::pi()}});
    for (long n : {2L, 3L, 5L}) {
        KummerClass k = eta_class(tate, n);
        CHECK(k.cls[0][0] == PiMonomial::pi());
    }
    Motive powers(1, 1, {{PiMonomial(Rat(32), 0)}});
    CHECK(eta_class(powers, 5).is_trivial());
    Motive m(1, 1, {{PiMonomial(Rat(32), 7)}});
    CHECK(eta_class(m, 5).cls[0][0] == PiMonomial::pi(2));
    CHECK_THROWS_AS(eta_class(m, 0), std::domain_error);
}

TEST_CASE("baer sum of classes") {
    Motive m(1, 1, {{PiMonomial(Rat(6), 3)}});
    KummerClass c = eta_class(m, 5);
    KummerClass triv = eta_class(Motive(1, 1, {{PiMonomial::one()}}), 5);
    CHECK(baer_sum_class(c, triv) == c);

    KummerClass a = eta_class(Motive(1, 1, {{PiMonomial::pi(2)}}), 5);
    KummerClass b = eta_class(Motive(1, 1, {{PiMonomial::pi(4)}}), 5);
    CHECK(baer_sum_class(a, b).cls[0][0] == PiMonomial::pi(1));

    Motive inv = m;
    inv.entries[0][0] = m.entries[0][0].inverse();
    CHECK(baer_sum_class(c, eta_class(inv, 5)).is_trivial());

    KummerClass other = eta_class(Motive(2, 1, {{PiMonomial::one(), PiMonomial::one()}}), 5);
    CHECK_THROWS_AS(baer_sum_class(c, other), std::domain_error);
}

TEST_CASE("theta class") {
    CHECK(theta_class(5).cls[0][0] == PiMonomial::pi());
    CHECK(theta_class(1).is_trivial());
    for (long n = 2; n <= 8; ++n)
        CHECK(theta_class(n) == eta_class(tate_motive(Rat(1), n, 0, 1), n));
    // the inverse Tate motive
    for (long n = 2; n <= 8; ++n) {
        Motive tinv(1, 1, {{PiMonomial::pi(-1)}});
        CHECK(eta_class(tinv, n).cls[0][0] == PiMonomial::pi(n - 1));
    }
}

TEST_CASE("extension over the valuation ring") {
    CHECK(extends_over_R(Motive(1, 1, {{PiMonomial(Rat(7), 10)}}), 5));
    CHECK(extends_over_R(Motive(1, 1, {{PiMonomial(Rat(7), 0)}}), 5));
    Motive tate(1, 1, {{PiMonomial::pi()}});
    for (long n = 2; n <= 8; ++n) CHECK_FALSE(extends_over_R(tate, n));
}

TEST_CASE("kato pair") {
    KatoPair kp = kato_pair(tate_motive(Rat(2), 5, 2, 3), 5);
    CHECK(kp.classical.cls[0][0] == PiMonomial(Rat(2), 0));
    CHECK(kp.N == std::vector<std::vector<long>>{{3}});

    Motive good(1, 1, {{PiMonomial(Rat(6), 0)}});
    KatoPair kg = kato_pair(good, 5);
    CHECK(kg.classical == eta_class(good, 5));
    CHECK(kg.N == std::vector<std::vector<long>>{{0}});

    KatoPair k3 = kato_pair(Motive(1, 1, {{PiMonomial(Rat(3), 7)}}), 5);
    CHECK(k3.classical.cls[0][0] == PiMonomial(Rat(3), 0));
    CHECK(k3.N == std::vector<std::vector<long>>{{2}});
}

TEST_CASE("push-out theorem") {
    Motive tate(1, 1, {{PiMonomial::pi()}});
    CHECK(push_theorem_check(tate, 5));
    Motive m13(1, 1, {{PiMonomial(Rat(2), 13)}});
    CHECK(push_theorem_check(m13, 5));
    CHECK(eta_class(Motive(1, 1, {{PiMonomial::pi(13)}}), 5).cls[0][0] ==
          PiMonomial::pi(3));
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) CHECK(push_theorem_check(random_motive(rng), 1 + t % 8));
}

TEST_CASE("eta is a homomorphism") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        Motive u = random_motive(rng);
        Motive v = u;
        for (auto& row : v.entries)
            for (auto& x : row) x = random_motive(rng).entries[0][0];
        long n = 1 + t % 8;
        CHECK(eta_class(motive_mul(u, v), n) ==
              baer_sum_class(eta_class(u, n), eta_class(v, n)));
    }
}

TEST_CASE("good reduction equivalences") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; ++t) {
        Motive m = random_motive(rng);
        long n = 1 + t % 8;
        KatoPair kp = kato_pair(m, n);
        bool nzero = true;
        for (auto& row : kp.N)
            for (long v : row)
                if (v) nzero = false;
        auto [u1, u2] = raynaud_decompose(m);
        CHECK(extends_over_R(m, n) == nzero);
        CHECK(nzero == eta_class(u2, n).is_trivial());
    }
}

TEST_CASE("kato pair roundtrip and plus-minus consistency") {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 100; ++t) {
        Motive m = random_motive(rng);
        long n = 1 + t % 8;
        CHECK(reconstruct_class(kato_pair(m, n)) == eta_class(m, n));

        auto [u1, u2] = raynaud_decompose(m);
        auto [muP, muM] = split_pm(compute_monodromy(m));
        Motive up = m, um = m;
        for (long i = 0; i < m.d; ++i)
            for (long j = 0; j < m.r; ++j) {
                up.entries[i][j] = PiMonomial(Rat(1), muP.mu[i][j]);
                um.entries[i][j] = PiMonomial(Rat(1), muM.mu[i][j]);
            }
        KummerClass sum = baer_sum_class(
            baer_sum_class(eta_class(u1, n), eta_class(up, n)), eta_class(um, n));
        CHECK(sum == eta_class(m, n));
    }
}
