#include "octic/gf.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace octic;

namespace {

// brute-force set of nonzero squares
std::set<Field::Elem> squares(const Field& F)
{
    std::set<Field::Elem> s;
    for (Field::Elem x : F.elements())
        if (x != 0)
            s.insert(F.mul(x, x));
    return s;
}

} // namespace

TEST_CASE("quadratic character examples")
{
    Field F7(7, 1);
    CHECK(F7.quadratic_character(F7.from_int(2)) == 1);
    CHECK(F7.quadratic_character(0) == 0);
    CHECK(F7.quadratic_character(F7.from_int(3)) == -1);

    Field F(11, 2);
    auto sq = squares(F);
    Field::Elem g = F.generator();
    for (uint64_t k : {1ull, 3ull, 61ull, 119ull}) {
        Field::Elem v = F.pow(g, k);
        CHECK(F.quadratic_character(v) == -1);
        CHECK(sq.count(v) == 0);
    }
}

TEST_CASE("quartic character examples")
{
    Field F(13, 1);
    Field::Elem r = F.quartic_character(F.from_int(5));
    CHECK(F.pow(r, 2) != 1);
    CHECK(F.pow(r, 4) == 1);
    CHECK(F.quartic_character(1) == 1);
    CHECK(F.quartic_character(0) == 0);
    Field::Elem r3 = F.quartic_character(F.from_int(3));
    CHECK(F.mul(r3, r3) == F.from_int(F.quadratic_character(F.from_int(3))));
    CHECK_THROWS(Field(7, 1).quartic_character(2));
    CHECK_THROWS(Field(11, 1).quartic_character(2));
    CHECK_NOTHROW(Field(11, 2).quartic_character(2));
}

TEST_CASE("power tables")
{
    Field F7(7, 1);
    PowerTable t = build_power_table(F7, 8);
    CHECK(t.table.size() == 7);
    CHECK(t[0] == 0);
    CHECK(t[1] == 1);
    CHECK(t[3] == 2);
    PowerTable z = build_power_table(F7, 0);
    for (Field::Elem x = 0; x < 7; ++x)
        CHECK(z[x] == 1);

    Field F(11, 2);
    PowerTable t8 = build_power_table(F, 8);
    CHECK(t8.table.size() == 121);
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        Field::Elem x = rng() % 121;
        Field::Elem y = 1;
        for (int k = 0; k < 8; ++k)
            y = F.mul(y, x);
        CHECK(t8[x] == y);
    }
}

TEST_CASE("nonresidue is the smallest non-square")
{
    for (uint32_t p : {7u, 11u, 13u, 17u, 19u, 23u, 31u, 41u, 71u}) {
        Field F(p, 2);
        uint32_t n = 2;
        while (legendre(n, p) != -1)
            ++n;
        CHECK(F.nonresidue() == n);
    }
}

TEST_CASE("characters are multiplicative")
{
    for (uint32_t p = 7; p <= 31; ++p) {
        if (!is_prime(p))
            continue;
        Field F(p, 1);
        for (Field::Elem u = 0; u < p; ++u)
            for (Field::Elem v = 0; v < p; ++v) {
                REQUIRE(F.quadratic_character(F.mul(u, v)) ==
                        F.quadratic_character(u) * F.quadratic_character(v));
                if (p % 4 == 1)
                    REQUIRE(F.quartic_character(F.mul(u, v)) ==
                            F.mul(F.quartic_character(u), F.quartic_character(v)));
            }
    }
}

TEST_CASE("half the units are squares")
{
    for (auto [p, d] : {std::pair{7u, 1}, {13u, 1}, {31u, 1}, {7u, 2}, {11u, 2}, {13u, 2}}) {
        Field F(p, d);
        int plus = 0;
        for (Field::Elem x : F.elements())
            plus += F.quadratic_character(x) == 1;
        CHECK(plus == static_cast<int>((F.q() - 1) / 2));
        CHECK(squares(F).size() == (F.q() - 1) / 2);
    }
}

TEST_CASE("Frobenius on F_{p^2}")
{
    for (uint32_t p : {7u, 11u, 13u}) {
        Field F(p, 2);
        std::set<Field::Elem> image;
        int fixed = 0;
        for (Field::Elem x : F.elements()) {
            Field::Elem fx = F.frobenius(x);
            image.insert(fx);
            if (fx == x) {
                ++fixed;
                CHECK(F.im(x) == 0);
            }
            CHECK(F.frobenius(fx) == x);
        }
        CHECK(fixed == static_cast<int>(p));
        CHECK(image.size() == F.q());
        // additive and multiplicative on a sample
        for (Field::Elem x = 0; x < F.q(); x += 7)
            for (Field::Elem y = 3; y < F.q(); y += 11) {
                CHECK(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
                CHECK(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
            }
    }
}

TEST_CASE("field arithmetic basics")
{
    Field F(19, 2);
    for (Field::Elem x = 1; x < F.q(); ++x) {
        REQUIRE(F.mul(x, F.inv(x)) == 1);
        REQUIRE(F.exp(F.log(x)) == x);
    }
    CHECK(F.from_rational(1, 2) == F.inv(2));
    CHECK_THROWS(F.from_rational(1, 19));
    Field::Elem i = F.sqrt_minus_one();
    CHECK(F.mul(i, i) == F.neg(1));
    CHECK_THROWS(Field(15, 1));
    CHECK(Barrett(97).reduce(12345678901ull) == 12345678901ull % 97);
}
