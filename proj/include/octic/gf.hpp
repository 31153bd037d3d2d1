#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace octic {

// Barrett reduction for moduli below 2^32.
struct Barrett {
    uint64_t m = 1;
    uint64_t r = 0;

    Barrett() = default;
    explicit Barrett(uint64_t mod) : m(mod), r(~uint64_t(0) / mod) {}

    uint64_t reduce(uint64_t x) const
    {
        uint64_t qt = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * r) >> 64);
        uint64_t t = x - qt * m;
        while (t >= m)
            t -= m;
        return t;
    }
};

bool is_prime(uint64_t n);
int legendre(int64_t a, int64_t p);
int jacobi(int64_t a, int64_t n);
uint64_t powmod(uint64_t b, uint64_t e, uint64_t m);

// F_q for q = p or p^2. Elements are packed as a + p*b meaning a + b*sqrt(nr).
class Field {
public:
    using Elem = uint32_t;

    Field(uint32_t p, int degree);

    uint32_t p() const { return p_; }
    int degree() const { return deg_; }
    uint64_t q() const { return q_; }
    uint32_t nonresidue() const { return nr_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem make(uint32_t a, uint32_t b = 0) const { return a + p_ * b; }
    Elem from_int(int64_t v) const;
    uint32_t re(Elem x) const { return x % p_; }
    uint32_t im(Elem x) const { return x / p_; }

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem pow(Elem x, uint64_t e) const;
    Elem inv(Elem x) const;
    Elem frobenius(Elem x) const { return pow(x, p_); }
    // reduction of a rational num/den; throws if p divides den
    Elem from_rational(int64_t num, int64_t den) const;

    int quadratic_character(Elem x) const;
    // x^((q-1)/4); requires q = 1 mod 4
    Elem quartic_character(Elem x) const;
    Elem sqrt_minus_one() const;

    // smallest element (in packed order) generating the multiplicative group
    Elem generator() const { return gen_; }
    bool has_tables() const { return !log_.empty(); }
    // discrete log base generator(); x != 0
    uint32_t log(Elem x) const { return log_[x]; }
    Elem exp(uint64_t k) const { return exp_[k % (q_ - 1)]; }
    const std::vector<uint32_t>& log_table() const { return log_; }
    const std::vector<Elem>& exp_table() const { return exp_; }

    // enumeration order of elements is 0..q-1 in packed form
    std::vector<Elem> elements() const;
    // {0} followed by the nonzero squares
    std::vector<Elem> squares_with_zero() const;

private:
    uint32_t p_;
    int deg_;
    uint64_t q_;
    uint32_t nr_ = 0;
    Barrett bp_;
    Elem gen_ = 0;
    std::vector<uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<int8_t> chi_;

    uint32_t redp(uint64_t v) const { return static_cast<uint32_t>(bp_.reduce(v)); }
    void build_tables();
};

struct PowerTable {
    unsigned k = 0;
    std::vector<Field::Elem> table;
    Field::Elem operator[](Field::Elem x) const { return table[x]; }
};

// table[x] = x^k with 0^0 := 1
PowerTable build_power_table(const Field& F, unsigned k);

} // namespace octic
