#include <doctest.h>

#include <numeric>
#include <random>

#include "quasiq/cyclotomic.hpp"
#include "quasiq/error.hpp"

using namespace quasiq;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng) {
    static const long orders[] = {1, 3, 4, 8, 12};
    std::uniform_int_distribution<int> ord_pick(0, 4);
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    Cyclotomic out(0);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        long n = orders[ord_pick(rng)];
        long k = static_cast<long>(rng() % static_cast<unsigned long>(n));
        out += Cyclotomic(Rational(num(rng), den(rng))) * Cyclotomic::root_of_unity(n, k);
    }
    return out;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational(1, 0), error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), error);
}

TEST_CASE("roots of unity: defining cases") {
    CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1));
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
}

TEST_CASE("arithmetic on Gaussian integers") {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    Cyclotomic one(1);
    CHECK((one + i) * (one - i) == Cyclotomic(2));
    CHECK(Cyclotomic(-1).inv() == Cyclotomic(-1));
    CHECK((one + i) * (-i) == one - i);
    CHECK_THROWS_AS(Cyclotomic(0).inv(), error);
    CHECK_THROWS_AS(one / Cyclotomic(0), error);
}

TEST_CASE("minimal root-of-unity form") {
    auto r = Cyclotomic::root_of_unity(4, 1).as_root_of_unity();
    REQUIRE(r.has_value());
    CHECK(r->first == 4);
    CHECK(r->second == 1);
    CHECK(!Cyclotomic(2).as_root_of_unity().has_value());
    auto m = Cyclotomic(-1).as_root_of_unity();
    REQUIRE(m.has_value());
    CHECK(m->first == 2);
    CHECK(m->second == 1);
    CHECK(!Cyclotomic(0).as_root_of_unity().has_value());
    // Sums of roots of unity are usually not roots of unity.
    Cyclotomic z = Cyclotomic::root_of_unity(3, 1) + Cyclotomic(1);
    CHECK(z.as_root_of_unity().has_value() == (z.pow(6) == Cyclotomic(1)));
}

TEST_CASE("power round-trip through order 12") {
    for (long n = 1; n <= 12; ++n)
        for (long k = 0; k < n; ++k) {
            Cyclotomic z = Cyclotomic::root_of_unity(n, k);
            CHECK(z.pow(n) == Cyclotomic(1));
            auto r = z.as_root_of_unity();
            REQUIRE(r.has_value());
            CHECK(r->first == n / std::gcd(n, k == 0 ? n : k));
        }
}

TEST_CASE("representations at different orders agree") {
    for (long n = 1; n <= 9; ++n)
        for (long k = 0; k < n; ++k)
            CHECK(Cyclotomic::root_of_unity(n, k) == Cyclotomic::root_of_unity(2 * n, 2 * k));
    // zeta_6 lives in the order-3 field.
    CHECK(Cyclotomic::root_of_unity(6, 1).order() == 3);
    CHECK(Cyclotomic::root_of_unity(6, 1) == -Cyclotomic::root_of_unity(3, 2));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        Cyclotomic a = random_cyclotomic(rng), b = random_cyclotomic(rng),
                   c = random_cyclotomic(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inv() == Cyclotomic(1));
    }
}

TEST_CASE("pow handles negative exponents") {
    Cyclotomic z = Cyclotomic::root_of_unity(8, 3);
    CHECK(z.pow(-1) == z.inv());
    CHECK(z.pow(-3) * z.pow(3) == Cyclotomic(1));
    CHECK(z.pow(0) == Cyclotomic(1));
}

TEST_CASE("shorthand rendering and parsing") {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(Cyclotomic(1).str() == "1");
    CHECK(Cyclotomic(-1).str() == "-1");
    CHECK(i.str() == "i");
    CHECK((-i).str() == "-i");
    CHECK((Cyclotomic(1) + i).str() == "1+i");
    CHECK((Cyclotomic(1) - i).str() == "1-i");
    CHECK(Cyclotomic(Rational(1, 2)).str() == "1/2");
    CHECK(Cyclotomic::parse("i") == i);
    CHECK(Cyclotomic::parse("-i") == -i);
    CHECK(Cyclotomic::parse("-3/2") == Cyclotomic(Rational(-3, 2)));
    CHECK(Cyclotomic::parse("z8^3") == Cyclotomic::root_of_unity(8, 3));
    CHECK(Cyclotomic::parse("z8") == Cyclotomic::root_of_unity(8, 1));
    CHECK_THROWS_AS(Cyclotomic::parse("what"), error);
}

TEST_CASE("known subfield collapse") {
    // zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 = -1
    Cyclotomic s(0);
    for (long k = 1; k <= 4; ++k) s += Cyclotomic::root_of_unity(5, k);
    CHECK(s == Cyclotomic(-1));
    CHECK(s.order() == 1);
    // sqrt(-3) = 2*zeta_3 + 1 has conductor 3
    Cyclotomic sqrt_m3 = Cyclotomic(2) * Cyclotomic::root_of_unity(3, 1) + Cyclotomic(1);
    CHECK(sqrt_m3 * sqrt_m3 == Cyclotomic(-3));
    CHECK(sqrt_m3.order() == 3);
}
