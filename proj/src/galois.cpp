#include "octic/galois.hpp"

#include "octic/gf.hpp"
#include "octic/lefschetz.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace octic {

namespace {

// Kronecker symbol (a/n) for n > 0
int kronecker(int64_t a, int64_t n)
{
    if (n <= 0)
        throw std::invalid_argument("kronecker: n must be positive");
    int r = 1;
    while (n % 2 == 0) {
        n /= 2;
        int64_t m = ((a % 8) + 8) % 8;
        if (m % 2 == 0)
            return 0;
        if (m == 3 || m == 5)
            r = -r;
    }
    return n == 1 ? r : r * jacobi(a, n);
}

constexpr std::array<int64_t, 4> kGens{-1, 2, 3, 5};

} // namespace

const char* convention_name(CharConvention c)
{
    return c == CharConvention::Kronecker ? "(d/p)" : "(p/|d|)";
}

SquareClassChar SquareClassChar::from_d(int64_t d)
{
    if (d == 0)
        throw std::invalid_argument("SquareClassChar: d = 0");
    SquareClassChar c;
    if (d < 0) {
        c.bits |= 1;
        d = -d;
    }
    for (int i = 1; i < 4; ++i) {
        int e = 0;
        while (d % kGens[i] == 0) {
            d /= kGens[i];
            ++e;
        }
        if (e % 2)
            c.bits |= 1u << i;
    }
    if (d != 1)
        throw std::invalid_argument("SquareClassChar: d must be supported on -1, 2, 3, 5");
    return c;
}

int64_t SquareClassChar::d() const
{
    int64_t d = 1;
    for (int i = 0; i < 4; ++i)
        if (bits >> i & 1)
            d *= kGens[i];
    return d;
}

int SquareClassChar::eval(int64_t p, CharConvention c) const
{
    if (c == CharConvention::Kronecker)
        return legendre(d(), p);
    int64_t ad = std::abs(d());
    return ad == 1 ? 1 : kronecker(p, ad);
}

std::string SquareClassChar::name() const { return bits ? "chi_" + std::to_string(d()) : "trivial"; }

int chi(int64_t d, int64_t p, CharConvention c)
{
    return SquareClassChar::from_d(d).eval(p, c);
}

unsigned FrobClass::bits() const
{
    unsigned b = 0;
    for (int i = 0; i < 4; ++i)
        if (symbols[i] == -1)
            b |= 1u << i;
    return b;
}

FrobClass frobenius_class(int64_t p)
{
    if (p < 7 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("frobenius_class: " + std::to_string(p) + " is not a prime outside {2,3,5}");
    FrobClass f{p, {}};
    for (int i = 0; i < 4; ++i)
        f.symbols[i] = legendre(kGens[i], p);
    return f;
}

std::map<unsigned, std::vector<int64_t>> class_coverage(const std::vector<int64_t>& primes)
{
    std::map<unsigned, std::vector<int64_t>> m;
    for (auto p : primes)
        m[frobenius_class(p).bits()].push_back(p);
    return m;
}

const std::vector<int64_t> kNonCubicPrimes{7, 11, 13, 17, 19, 23, 29, 31, 41, 43, 53, 61, 71, 73, 83, 241};
const std::vector<int64_t> kNonCubicPrimes14{7, 11, 13, 17, 19, 23, 29, 31, 41, 43, 53, 61, 71, 73};

NonCubicResult noncubic_check(const std::vector<unsigned>& classes, NonCubicVariant v)
{
    // monomials: subsets of the 4 variables of size 1..3, plus the constant
    std::vector<unsigned> monos;
    for (unsigned s = 1; s < 16; ++s)
        if (__builtin_popcount(s) <= 3)
            monos.push_back(s);
    if (v == NonCubicVariant::Inhomogeneous)
        monos.push_back(0);
    // evaluation vectors of each monomial on the classes
    std::vector<uint64_t> col(monos.size(), 0);
    for (size_t k = 0; k < monos.size(); ++k)
        for (size_t i = 0; i < classes.size(); ++i)
            if ((classes[i] & monos[k]) == monos[k])
                col[k] |= uint64_t(1) << i;
    const unsigned n = static_cast<unsigned>(monos.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        uint64_t val = 0;
        for (unsigned k = 0; k < n; ++k)
            if (mask >> k & 1)
                val ^= col[k];
        if (val == 0)
            return {false, mask};
    }
    return {true, 0};
}

Verdict even_trace_rule(const TraceSeq& seq)
{
    for (int64_t p : {7, 11, 13, 19}) {
        auto it = seq.find(p);
        if (it == seq.end())
            throw std::invalid_argument("even_trace_rule: missing trace at p = " + std::to_string(p));
        if (it->second % 2)
            return {false, "odd trace at p = " + std::to_string(p)};
    }
    return {true, "traces even at 7, 11, 13, 19"};
}

Verdict mod4_rule(const TraceSeq& seq)
{
    auto need = [&](int64_t p) {
        auto it = seq.find(p);
        if (it == seq.end())
            throw std::invalid_argument("mod4_rule: missing trace at p = " + std::to_string(p));
        return it->second;
    };
    if (need(13) % 2)
        return {false, "odd trace at 13"};
    for (int64_t p : {7, 11, 19})
        if (need(p) % 4)
            return {false, "trace at " + std::to_string(p) + " not divisible by 4"};
    for (auto& [p, t] : seq)
        if (p % 4 == 3 && p > 3 && t % 4)
            return {false, "counterexample at p = " + std::to_string(p)};
    return {true, "all traces at p = 3 mod 4 divisible by 4"};
}

namespace {

using M4 = std::array<int, 4>; // a b c d

M4 mul4(const M4& x, const M4& y)
{
    return {(x[0] * y[0] + x[1] * y[2]) % 4, (x[0] * y[1] + x[1] * y[3]) % 4, (x[2] * y[0] + x[3] * y[2]) % 4,
            (x[2] * y[1] + x[3] * y[3]) % 4};
}

int order_mod(const M4& m, int mod)
{
    M4 id{1, 0, 0, 1}, x = m;
    for (auto& v : x)
        v %= mod;
    M4 acc = x;
    for (int k = 1; k <= 48; ++k) {
        M4 r = acc;
        for (auto& v : r)
            v %= mod;
        if (r == id)
            return k;
        acc = mul4(acc, m);
    }
    return -1;
}

} // namespace

int gl2z4_order(const std::array<int, 4>& m) { return order_mod(m, 4); }

GL2Z4Audit gl2z4_trace_audit()
{
    GL2Z4Audit a;
    for (int e = 0; e < 256; ++e) {
        M4 m{e & 3, e >> 2 & 3, e >> 4 & 3, e >> 6 & 3};
        int det = ((m[0] * m[3] - m[1] * m[2]) % 4 + 4) % 4;
        if (det % 2 == 0)
            continue;
        ++a.total;
        if (det != 3)
            continue;
        ++a.det3;
        int tr = (m[0] + m[3]) % 4;
        int red = order_mod(m, 2), ord = gl2z4_order(m);
        bool ok;
        if (red == 1) {
            ++a.identity_lifts;
            ok = tr == 0;
        } else if (red == 3) {
            ++a.odd_trace;
            ok = tr % 2 == 1;
        } else if (ord == 2) {
            ++a.order2;
            ok = tr == 0;
        } else {
            ++a.order4;
            ok = ord == 4 && tr == 2;
        }
        if (!ok)
            ++a.mismatches;
    }
    return a;
}

namespace {

using Poly = std::vector<int64_t>; // F_p coefficients, low degree first

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Poly polymod(Poly a, const Poly& m, int64_t p)
{
    trim(a);
    int64_t inv = static_cast<int64_t>(powmod(static_cast<uint64_t>(m.back()), p - 2, p));
    while (a.size() >= m.size()) {
        int64_t c = a.back() * inv % p;
        size_t s = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[s + i] = ((a[s + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return polymod(r, m, p);
}

Poly powmod_poly(Poly b, int64_t e, const Poly& m, int64_t p)
{
    Poly r{1};
    b = polymod(b, m, p);
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m, p);
        b = mulmod(b, b, m, p);
        e >>= 1;
    }
    return r;
}

Poly polygcd(Poly a, Poly b, int64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = polymod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

Poly polydiv(Poly a, const Poly& m, int64_t p)
{
    trim(a);
    int64_t inv = static_cast<int64_t>(powmod(static_cast<uint64_t>(m.back()), p - 2, p));
    if (a.size() < m.size())
        return {};
    Poly q(a.size() - m.size() + 1, 0);
    while (a.size() >= m.size()) {
        int64_t c = a.back() * inv % p;
        size_t s = a.size() - m.size();
        q[s] = c;
        for (size_t i = 0; i < m.size(); ++i)
            a[s + i] = ((a[s + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return q;
}

} // namespace

int quartic_frobenius_order(int64_t a, int64_t p)
{
    if (p < 7 || !is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("quartic_frobenius_order: bad prime");
    int64_t am = ((a % p) + p) % p;
    Poly f{(p - am) % p, 0, 0, 0, 1};
    Poly g{1, 0, 1};
    Poly fg(7, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            fg[i + j] = (fg[i + j] + f[i] * g[j]) % p;
    trim(fg);
    Poly d(fg.size() - 1);
    for (size_t i = 1; i < fg.size(); ++i)
        d[i - 1] = fg[i] * static_cast<int64_t>(i) % p;
    Poly rad = polydiv(fg, polygcd(fg, d, p), p);
    if (rad.size() <= 2)
        return 1;
    Poly x{0, 1}, h = x;
    for (int k = 1; k <= 24; ++k) {
        h = powmod_poly(h, p, rad, p);
        if (polymod(h, rad, p) == polymod(x, rad, p))
            return k;
    }
    throw std::logic_error("quartic_frobenius_order: order above 24");
}

FslResult fsl_compare(const TraceSeq& a, const TraceSeq& b, const std::vector<int64_t>& primes)
{
    FslResult r;
    for (auto p : primes) {
        auto ia = a.find(p), ib = b.find(p);
        if (ia == a.end() || ib == b.end()) {
            r.missing.push_back(p);
            continue;
        }
        if (ia->second != ib->second)
            r.mismatches.push_back({p, ia->second, ib->second});
    }
    r.pass = r.mismatches.empty() && r.missing.empty();
    return r;
}

CharSolve solve_quadratic_character(const std::vector<std::pair<int64_t, int>>& constraints, CharConvention c)
{
    CharSolve r;
    for (unsigned b = 0; b < 16; ++b) {
        SquareClassChar ch{b};
        bool ok = std::all_of(constraints.begin(), constraints.end(),
                              [&](auto& ps) { return ch.eval(ps.first, c) == ps.second; });
        if (ok)
            r.consistent.push_back(ch);
    }
    r.status = r.consistent.empty()       ? CharSolve::Inconsistent
               : r.consistent.size() == 1 ? CharSolve::Unique
                                          : CharSolve::Underdetermined;
    return r;
}

namespace {

IntMatrix lemma_matrix(int64_t u1, int64_t u2, int64_t u3, int64_t u4)
{
    return {{u1, 9 - u1, 9, 9}, {u2, 9 - u2, 9, 9}, {u3, 1 - u3, 1, -3}, {u4, -1 - u4, 5, 1}};
}

} // namespace

int lemma_tr_determinant_audit()
{
    int bad = 0;
    for (int64_t u1 = -15; u1 <= 15; u1 += 2)
        for (int64_t u2 = -15; u2 <= 15; u2 += 2)
            for (int64_t u3 = -15; u3 <= 15; u3 += 2)
                for (int64_t u4 = -15; u4 <= 15; u4 += 2)
                    if (determinant(lemma_matrix(u1, u2, u3, u4)) != 216 * (u1 - u2))
                        ++bad;
    return bad;
}

UniquenessResult galois_trace_uniqueness(int64_t p, const std::array<int64_t, 4>& v0, int64_t translation_bound)
{
    UniquenessResult r;
    r.p = p;
    r.translation_bound = translation_bound >= 0 ? translation_bound : isqrt(16 * p);
    r.weil = isqrt(4 * p);
    auto in_box = [&](const std::array<int64_t, 4>& v) {
        return std::all_of(v.begin(), v.end(), [&](int64_t x) { return std::abs(x) <= r.weil && x % 4 == 0; });
    };
    r.v0_admissible = in_box(v0);
    std::set<std::array<int64_t, 4>> seen;
    // the sign argument gives |u1| < 9
    for (int64_t u = -7; u <= 7; u += 2)
        for (int64_t u3 = -15; u3 <= 15; u3 += 2)
            for (int64_t u4 = -15; u4 <= 15; u4 += 2) {
                ++r.matrices;
                IntMatrix m = lemma_matrix(u, u, u3, u4);
                m.erase(m.begin() + 1);
                auto k = kernel_vector(m);
                if (!k)
                    throw std::logic_error("galois_trace_uniqueness: kernel is not one dimensional");
                std::array<int64_t, 4> v;
                for (int i = 0; i < 4; ++i)
                    v[i] = 4 * (*k)[i];
                int64_t mx = 0;
                for (auto x : v)
                    mx = std::max(mx, std::abs(x));
                if (mx > r.translation_bound || !seen.insert(v).second)
                    continue;
                r.translations.push_back(v);
                for (int64_t s = 1; s * mx <= r.translation_bound; ++s)
                    for (int sg : {1, -1}) {
                        std::array<int64_t, 4> w;
                        for (int i = 0; i < 4; ++i)
                            w[i] = v0[i] + sg * s * v[i];
                        if (in_box(w))
                            r.survivors.push_back(w);
                    }
            }
    return r;
}

SignCheck sign_contradiction_check(std::pair<int64_t, int64_t> split, std::pair<int64_t, int64_t> counts,
                                   int64_t target)
{
    auto [d1, d2] = split;
    auto [np, nm] = counts;
    if (d1 < 0 || d2 < 0 || np < 0 || nm < 0 || d1 + d2 != np + nm)
        throw std::invalid_argument("sign_contradiction_check: dimensions do not match");
    int64_t agree = std::min(np, d1) + std::min(nm, d2);
    SignCheck s;
    s.max_trace = 2 * agree - (d1 + d2);
    s.achievable = s.max_trace >= target;
    return s;
}

std::vector<std::pair<std::string, std::string>> duplication_check(const std::map<std::string, TraceSeq>& seqs,
                                                                   const std::vector<int64_t>& primes)
{
    std::vector<std::pair<std::string, std::string>> dup;
    for (auto i = seqs.begin(); i != seqs.end(); ++i)
        for (auto j = std::next(i); j != seqs.end(); ++j) {
            bool same = true;
            for (auto p : primes) {
                auto a = i->second.find(p), b = j->second.find(p);
                if (a == i->second.end() || b == j->second.end())
                    throw std::invalid_argument("duplication_check: missing data at p = " + std::to_string(p));
                same = same && a->second == b->second;
            }
            if (same)
                dup.push_back({i->first, j->first});
        }
    return dup;
}

} // namespace octic
