#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

namespace octic {

// Element w + x*sqrt(3) + y*sqrt(-5) + z*sqrt(-15) of K = Q(sqrt(3), sqrt(-5)).
struct KElem {
    std::array<mpq_class, 4> c{0, 0, 0, 0};

    KElem() = default;
    KElem(const mpq_class& w, const mpq_class& x = 0, const mpq_class& y = 0, const mpq_class& z = 0)
        : c{w, x, y, z} {}

    static KElem sqrt3() { return {0, 1, 0, 0}; }
    static KElem sqrt_m5() { return {0, 0, 1, 0}; }
    static KElem sqrt_m15() { return {0, 0, 0, 1}; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool operator==(const KElem& o) const { return c == o.c; }
    bool operator!=(const KElem& o) const { return !(*this == o); }

    KElem operator+(const KElem& o) const;
    KElem operator-(const KElem& o) const;
    KElem operator-() const;
    KElem operator*(const KElem& o) const;
    KElem operator*(const mpq_class& s) const;
    KElem operator/(const KElem& o) const { return *this * o.inverse(); }
    KElem pow(unsigned k) const;
    KElem inverse() const;
    std::string str() const;
};

// The three nontrivial automorphisms, named by the radical they fix.
enum class KConj { Fix3, FixM5, FixM15 };
KElem conjugate(const KElem& a, KConj s);
mpq_class norm(const KElem& a);

KElem j_of_E();

} // namespace octic
