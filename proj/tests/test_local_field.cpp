#include "motkit/local_field.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace motkit;

TEST_CASE("valuation of monomials") {
    CHECK(valuation(PiMonomial(Rat(2, 5), 3)) == 3);
    CHECK(valuation(PiMonomial::one()) == 0);
    CHECK(valuation(PiMonomial(Rat(5), -2)) == -2);
}

TEST_CASE("valuation of general elements") {
    // (pi^2 + pi^3) / pi^5: expand and cancel -> valuation 2 - 5 = -3
    KElement num(Poly{Rat(0), Rat(0), Rat(1), Rat(1)}, Poly{Rat(1)});
    KElement den(Poly{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}, Poly{Rat(1)});
    KElement x(Poly{Rat(0), Rat(0), Rat(1), Rat(1)},
               Poly{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(valuation(x) == -3);
    CHECK(valuation(num) == 2);
    CHECK(valuation(den) == 5);
    CHECK_THROWS_AS(valuation(KElement()), std::domain_error);
}

TEST_CASE("valuation is additive") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> e(-7, 7);
    std::uniform_int_distribution<long> c(1, 40);
    for (int t = 0; t < 200; ++t) {
        PiMonomial x(Rat(c(rng), c(rng)), e(rng)), y(Rat(-c(rng), c(rng)), e(rng));
        CHECK(valuation(x * y) == valuation(x) + valuation(y));
        CHECK(valuation(x.to_kelement() * y.to_kelement()) ==
              valuation(x) + valuation(y));
    }
}

TEST_CASE("unit part") {
    CHECK(unit_part(PiMonomial(Rat(2), 13)) == PiMonomial(Rat(2), 0));
    CHECK(unit_part(PiMonomial(Rat(-3, 7), 0)) == PiMonomial(Rat(-3, 7), 0));
    CHECK(unit_part(PiMonomial(Rat(5), -2)) == PiMonomial(Rat(5), 0));
    PiMonomial x(Rat(9, 4), -5);
    CHECK(unit_part(x) * PiMonomial::pi(valuation(x)) == x);
}

TEST_CASE("nth power class examples") {
    // 32 = 2^5, 7 = 2 mod 5
    CHECK(nth_power_class(PiMonomial(Rat(32), 7), 5) == PiMonomial::pi(2));
    CHECK(nth_power_class(PiMonomial(Rat(-77, 30), 4), 1) == PiMonomial::one());
    // -8 = (-2)^3
    CHECK(nth_power_class(PiMonomial(Rat(-8), 3), 3) == PiMonomial::one());
    CHECK_THROWS_AS(nth_power_class(PiMonomial::one(), 0), std::domain_error);
}

TEST_CASE("sign handling per parity of n") {
    CHECK(nth_power_class(PiMonomial(Rat(-1), 0), 3) == PiMonomial::one());
    CHECK(nth_power_class(PiMonomial(Rat(-1), 0), 2) == PiMonomial(Rat(-1), 0));
    CHECK(is_nth_power(PiMonomial(Rat(-27), 3), 3));
    CHECK_FALSE(is_nth_power(PiMonomial(Rat(-4), 0), 2));
}

TEST_CASE("class is idempotent and multiplicative") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> e(-9, 9), pe(-2, 3), nd(1, 9);
    for (int t = 0; t < 200; ++t) {
        long n = nd(rng);
        auto mono = [&] {
            Rat c = rat_pow(Rat(2), pe(rng)) * rat_pow(Rat(3), pe(rng)) *
                    rat_pow(Rat(7), pe(rng));
            if (pe(rng) % 2) c = -c;
            return PiMonomial(c, e(rng));
        };
        PiMonomial x = mono(), y = mono();
        PiMonomial cx = nth_power_class(x, n);
        CHECK(nth_power_class(cx, n) == cx);
        CHECK(nth_power_class(x * y, n) ==
              nth_power_class(cx * nth_power_class(y, n), n));
        // x over the canonical lift of its class is an n-th power
        CHECK(is_nth_power(x * cx.inverse(), n));
    }
}
