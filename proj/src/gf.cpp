#include "octic/gf.hpp"

#include <string>

namespace octic {

namespace {

constexpr uint64_t kTableLimit = uint64_t(1) << 22;

std::vector<uint64_t> prime_factors(uint64_t n)
{
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

bool is_prime(uint64_t n)
{
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m)
{
    unsigned __int128 r = 1 % m, x = b % m;
    while (e) {
        if (e & 1)
            r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<uint64_t>(r);
}

int legendre(int64_t a, int64_t p)
{
    int64_t r = a % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int jacobi(int64_t a, int64_t n)
{
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: n must be odd positive");
    a %= n;
    if (a < 0)
        a += n;
    int s = 1;
    while (a) {
        while (a % 2 == 0) {
            a /= 2;
            int64_t r = n % 8;
            if (r == 3 || r == 5)
                s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

Field::Field(uint32_t p, int degree) : p_(p), deg_(degree), bp_(p)
{
    if (p < 3 || p >= (1u << 16) || !is_prime(p))
        throw std::invalid_argument("Field: p must be an odd prime below 2^16, got " + std::to_string(p));
    if (degree != 1 && degree != 2)
        throw std::invalid_argument("Field: degree must be 1 or 2");
    q_ = degree == 1 ? p : uint64_t(p) * p;
    for (uint32_t v = 2; v < p; ++v) {
        if (legendre(v, p) == -1) {
            nr_ = v;
            break;
        }
    }
    if (q_ <= kTableLimit)
        build_tables();
    else {
        auto fac = prime_factors(q_ - 1);
        for (Elem g = 2; g < q_; ++g) {
            bool ok = true;
            for (auto r : fac)
                if (pow(g, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen_ = g;
                break;
            }
        }
    }
}

void Field::build_tables()
{
    auto fac = prime_factors(q_ - 1);
    for (Elem g = 2; g < q_; ++g) {
        bool ok = true;
        for (auto r : fac)
            if (pow(g, (q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = g;
            break;
        }
    }
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    chi_.assign(q_, 0);
    Elem x = 1;
    for (uint64_t k = 0; k + 1 < q_; ++k) {
        exp_[k] = x;
        log_[x] = static_cast<uint32_t>(k);
        chi_[x] = (k % 2 == 0) ? 1 : -1;
        x = mul(x, gen_);
    }
}

Field::Elem Field::from_int(int64_t v) const
{
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

Field::Elem Field::from_rational(int64_t num, int64_t den) const
{
    Elem d = from_int(den);
    if (d == 0)
        throw std::domain_error("from_rational: denominator divisible by p");
    return mul(from_int(num), inv(d));
}

Field::Elem Field::add(Elem x, Elem y) const
{
    uint32_t a = re(x) + re(y), b = im(x) + im(y);
    if (a >= p_)
        a -= p_;
    if (b >= p_)
        b -= p_;
    return a + p_ * b;
}

Field::Elem Field::neg(Elem x) const
{
    uint32_t a = re(x), b = im(x);
    return (a ? p_ - a : 0) + p_ * (b ? p_ - b : 0);
}

Field::Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Field::Elem Field::mul(Elem x, Elem y) const
{
    uint64_t a = re(x), b = im(x), c = re(y), d = im(y);
    if (deg_ == 1)
        return redp(a * c);
    uint64_t r = redp(a * c + redp(b * d) * nr_);
    uint64_t i = redp(a * d + b * c);
    return static_cast<Elem>(r + p_ * i);
}

Field::Elem Field::pow(Elem x, uint64_t e) const
{
    Elem r = 1;
    while (e) {
        if (e & 1)
            r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

Field::Elem Field::inv(Elem x) const
{
    if (x == 0)
        throw std::domain_error("Field::inv: zero");
    return pow(x, q_ - 2);
}

int Field::quadratic_character(Elem x) const
{
    if (x == 0)
        return 0;
    if (!chi_.empty())
        return chi_[x];
    if (deg_ == 1)
        return legendre(x, p_);
    uint64_t a = re(x), b = im(x);
    int64_t n = static_cast<int64_t>(redp(a * a)) - static_cast<int64_t>(redp(redp(b * b) * nr_));
    return legendre(n, p_);
}

Field::Elem Field::quartic_character(Elem x) const
{
    if (q_ % 4 != 1)
        throw std::domain_error("quartic_character: q must be 1 mod 4");
    if (x == 0)
        return 0;
    return pow(x, (q_ - 1) / 4);
}

Field::Elem Field::sqrt_minus_one() const
{
    if (q_ % 4 != 1)
        throw std::domain_error("sqrt_minus_one: q must be 1 mod 4");
    return pow(gen_, (q_ - 1) / 4);
}

std::vector<Field::Elem> Field::elements() const
{
    std::vector<Elem> v(q_);
    for (uint64_t i = 0; i < q_; ++i)
        v[i] = static_cast<Elem>(i);
    return v;
}

std::vector<Field::Elem> Field::squares_with_zero() const
{
    std::vector<Elem> v{0};
    std::vector<char> seen(q_, 0);
    for (uint64_t i = 1; i < q_; ++i) {
        Elem s = mul(static_cast<Elem>(i), static_cast<Elem>(i));
        if (!seen[s]) {
            seen[s] = 1;
            v.push_back(s);
        }
    }
    return v;
}

PowerTable build_power_table(const Field& F, unsigned k)
{
    PowerTable t;
    t.k = k;
    t.table.resize(F.q());
    t.table[0] = (k == 0) ? 1 : 0;
    if (F.has_tables()) {
        for (uint64_t x = 1; x < F.q(); ++x)
            t.table[x] = F.exp(uint64_t(F.log(static_cast<Field::Elem>(x))) * k);
    } else {
        for (uint64_t x = 1; x < F.q(); ++x)
            t.table[x] = F.pow(static_cast<Field::Elem>(x), k);
    }
    return t;
}

} // namespace octic
