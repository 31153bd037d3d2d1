#include "octic/count.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace octic {

namespace {

using Elem = Field::Elem;

struct Poly {
    int nv = 0;
    std::vector<FqTerm> t;
};

struct Domain {
    std::vector<Elem> vals;
    std::vector<uint32_t> logs;
    bool squares = false;
    int64_t weight(size_t j) const { return (squares && j > 0) ? 2 : 1; }
};

struct Engine {
    const Field& F;
    uint32_t p;
    uint64_t qm1;
    int kmax;
    std::vector<uint64_t> ext;
    std::vector<uint32_t> modtab;
    std::vector<int8_t> chi;

    Engine(const Field& f, int kmax_) : F(f), p(f.p()), qm1(f.q() - 1), kmax(std::max(kmax_, 1))
    {
        if (!F.has_tables())
            throw std::invalid_argument("point counting needs q <= 2^22");
        ext.resize((kmax + 1) * qm1);
        for (uint64_t k = 0; k < ext.size(); ++k)
            ext[k] = pack(F.exp(k));
        modtab.resize((kmax + 3) * uint64_t(p));
        for (uint64_t v = 0; v < modtab.size(); ++v)
            modtab[v] = static_cast<uint32_t>(v % p);
        chi.resize(F.q());
        for (uint64_t x = 0; x < F.q(); ++x)
            chi[x] = static_cast<int8_t>(F.quadratic_character(static_cast<Elem>(x)));
    }

    uint64_t pack(Elem x) const { return F.re(x) | (uint64_t(F.im(x)) << 32); }

    Elem power(Elem v, unsigned e) const
    {
        if (e == 0)
            return 1;
        if (v == 0)
            return 0;
        return F.exp(uint64_t(F.log(v)) * e);
    }

    Elem eval(const std::vector<Elem>& c, Elem v) const
    {
        Elem r = 0;
        for (size_t k = c.size(); k-- > 0;)
            r = F.add(F.mul(r, v), c[k]);
        return r;
    }

    // unweighted sums of chi(f(v)) and [f(v) = 0] over D.vals[jb..je), all nonzero
    void inner(const Domain& D, const std::vector<Elem>& c, size_t jb, size_t je, CharSums& out) const
    {
        uint64_t base = pack(c.empty() ? 0 : c[0]);
        uint32_t lc[32], kk[32];
        int na = 0;
        for (size_t k = 1; k < c.size(); ++k)
            if (c[k]) {
                lc[na] = F.log(c[k]);
                kk[na] = static_cast<uint32_t>(k);
                ++na;
            }
        int64_t cs = 0, zs = 0;
        const uint64_t* X = ext.data();
        const uint32_t* M = modtab.data();
        const int8_t* C = chi.data();
        const uint32_t* L = D.logs.data();
        for (size_t j = jb; j < je; ++j) {
            uint64_t s = base;
            uint64_t l = L[j];
            for (int a = 0; a < na; ++a)
                s += X[lc[a] + kk[a] * l];
            Elem idx = M[s & 0xffffffffu] + p * M[s >> 32];
            cs += C[idx];
            zs += (idx == 0);
        }
        out.chisum += cs;
        out.zeros += zs;
    }

    void add_value(Elem v, int64_t w, CharSums& out) const
    {
        out.chisum += w * chi[v];
        out.zeros += (v == 0) ? w : 0;
    }
};

Poly specialize(const Engine& E, const Poly& P, Elem v)
{
    std::map<std::array<uint8_t, 8>, Elem> acc;
    for (auto& t : P.t) {
        if (v == 0 && t.e[0])
            continue;
        Elem c = E.F.mul(t.c, E.power(v, t.e[0]));
        std::array<uint8_t, 8> e{};
        for (int j = 1; j < P.nv; ++j)
            e[j - 1] = t.e[j];
        auto [it, fresh] = acc.emplace(e, c);
        if (!fresh)
            it->second = E.F.add(it->second, c);
    }
    Poly r;
    r.nv = P.nv - 1;
    for (auto& [e, c] : acc)
        if (c) {
            FqTerm t;
            t.e = e;
            t.c = c;
            r.t.push_back(t);
        }
    return r;
}

std::vector<Elem> univariate(const Engine& E, const Poly& P)
{
    std::vector<Elem> c(E.kmax + 1, 0);
    for (auto& t : P.t)
        c[t.e[0]] = E.F.add(c[t.e[0]], t.c);
    return c;
}

void leaf(const Engine& E, const Domain& D, const Poly& P, int64_t w, CharSums& acc)
{
    auto c = univariate(E, P);
    E.add_value(c[0], w * D.weight(0), acc);
    CharSums s;
    E.inner(D, c, 1, D.vals.size(), s);
    int64_t wn = w * D.weight(1);
    acc.chisum += wn * s.chisum;
    acc.zeros += wn * s.zeros;
}

void recurse(const Engine& E, const std::vector<Domain>& doms, const Poly& P, int level, int64_t w, CharSums& acc)
{
    if (P.nv == 1) {
        leaf(E, doms[level], P, w, acc);
        return;
    }
    const Domain& D = doms[level];
    for (size_t j = 0; j < D.vals.size(); ++j)
        recurse(E, doms, specialize(E, P, D.vals[j]), level + 1, w * D.weight(j), acc);
}

bool is_symmetric(const Poly& P)
{
    std::map<std::array<uint8_t, 8>, Elem> m;
    for (auto& t : P.t)
        m[t.e] = t.c;
    for (auto& t : P.t)
        for (int a = 0; a + 1 < P.nv; ++a) {
            auto e = t.e;
            std::swap(e[a], e[a + 1]);
            auto it = m.find(e);
            if (it == m.end() || it->second != t.c)
                return false;
        }
    return true;
}

template <class Fn>
void parallel_for(size_t n, unsigned workers, Fn fn, CharSums& total)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n ? n : 1)));
    std::vector<CharSums> part(workers);
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i, part[0]);
    } else {
        std::vector<std::thread> th;
        for (unsigned w = 0; w < workers; ++w)
            th.emplace_back([&, w] {
                for (size_t i = w; i < n; i += workers)
                    fn(i, part[w]);
            });
        for (auto& t : th)
            t.join();
    }
    for (auto& s : part) {
        total.chisum += s.chisum;
        total.zeros += s.zeros;
    }
}

CharSums run_symmetric3(const Engine& E, const Domain& D, const Poly& P, unsigned workers)
{
    CharSums total;
    const size_t n = D.vals.size();
    parallel_for(
        n, workers,
        [&](size_t i0, CharSums& acc) {
            Poly P1 = specialize(E, P, D.vals[i0]);
            for (size_t i1 = i0; i1 < n; ++i1) {
                auto c = univariate(E, specialize(E, P1, D.vals[i1]));
                int64_t w01 = D.weight(i0) * D.weight(i1);
                E.add_value(E.eval(c, D.vals[i1]), (i0 == i1 ? 1 : 3) * w01 * D.weight(i1), acc);
                if (i1 + 1 < n) {
                    CharSums s;
                    E.inner(D, c, i1 + 1, n, s);
                    int64_t w = (i0 == i1 ? 3 : 6) * w01 * D.weight(n - 1);
                    acc.chisum += w * s.chisum;
                    acc.zeros += w * s.zeros;
                }
            }
        },
        total);
    return total;
}

CharSums run_symmetric2(const Engine& E, const Domain& D, const Poly& P, unsigned workers)
{
    CharSums total;
    const size_t n = D.vals.size();
    parallel_for(
        n, workers,
        [&](size_t i0, CharSums& acc) {
            auto c = univariate(E, specialize(E, P, D.vals[i0]));
            E.add_value(E.eval(c, D.vals[i0]), D.weight(i0) * D.weight(i0), acc);
            if (i0 + 1 < n) {
                CharSums s;
                E.inner(D, c, i0 + 1, n, s);
                int64_t w = 2 * D.weight(i0) * D.weight(n - 1);
                acc.chisum += w * s.chisum;
                acc.zeros += w * s.zeros;
            }
        },
        total);
    return total;
}

Domain make_domain(const Field& F, bool squares)
{
    Domain d;
    d.squares = squares;
    d.vals = squares ? F.squares_with_zero() : F.elements();
    d.logs.resize(d.vals.size(), 0);
    for (size_t j = 1; j < d.vals.size(); ++j)
        d.logs[j] = F.log(d.vals[j]);
    return d;
}

} // namespace

CharSums affine_sums(const FqPoly& f, const Field& F, const CountOptions& opt)
{
    const int m = f.nvars;
    if (m == 0) {
        Elem c = 0;
        for (auto& t : f.terms)
            c = F.add(c, t.c);
        return {c == 0 ? 1 : 0, F.quadratic_character(c)};
    }
    Poly P{m, f.terms};
    std::vector<bool> even(m, true);
    for (auto& t : P.t)
        for (int j = 0; j < m; ++j)
            if (t.e[j] % 2)
                even[j] = false;
    if (!opt.use_squares)
        std::fill(even.begin(), even.end(), false);
    for (auto& t : P.t)
        for (int j = 0; j < m; ++j)
            if (even[j])
                t.e[j] /= 2;
    int kmax = 1;
    for (auto& t : P.t)
        kmax = std::max<int>(kmax, t.e[m - 1]);
    Engine E(F, kmax);

    std::vector<Domain> doms;
    Domain dsq, dfull;
    bool need_sq = std::find(even.begin(), even.end(), true) != even.end();
    bool need_full = std::find(even.begin(), even.end(), false) != even.end();
    if (need_sq)
        dsq = make_domain(F, true);
    if (need_full)
        dfull = make_domain(F, false);
    for (int j = 0; j < m; ++j)
        doms.push_back(even[j] ? dsq : dfull);

    bool uniform = std::all_of(even.begin(), even.end(), [&](bool b) { return b == even[0]; });
    if (opt.use_symmetry && uniform && (m == 2 || m == 3) && is_symmetric(P)) {
        return m == 3 ? run_symmetric3(E, doms[0], P, opt.workers) : run_symmetric2(E, doms[0], P, opt.workers);
    }
    CharSums total;
    if (m == 1) {
        leaf(E, doms[0], P, 1, total);
        return total;
    }
    parallel_for(
        doms[0].vals.size(), opt.workers,
        [&](size_t j, CharSums& acc) {
            recurse(E, doms, specialize(E, P, doms[0].vals[j]), 1, doms[0].weight(j), acc);
        },
        total);
    return total;
}

CharSums projective_sums(const FqPoly& f, const Field& F, const CountOptions& opt)
{
    CharSums total;
    const int n = f.nvars;
    for (int i = 0; i < n; ++i) {
        // x_0 = ... = x_{i-1} = 0, x_i = 1
        FqPoly g;
        g.nvars = n - 1 - i;
        std::map<std::array<uint8_t, 8>, Elem> acc;
        for (auto& t : f.terms) {
            bool dead = false;
            for (int j = 0; j < i; ++j)
                if (t.e[j])
                    dead = true;
            if (dead)
                continue;
            std::array<uint8_t, 8> e{};
            for (int j = i + 1; j < n; ++j)
                e[j - i - 1] = t.e[j];
            auto [it, fresh] = acc.emplace(e, t.c);
            if (!fresh)
                it->second = F.add(it->second, t.c);
        }
        for (auto& [e, c] : acc)
            if (c) {
                FqTerm t;
                t.e = e;
                t.c = c;
                g.terms.push_back(t);
            }
        CharSums s = affine_sums(g, F, opt);
        total.chisum += s.chisum;
        total.zeros += s.zeros;
    }
    return total;
}

uint64_t projective_space_size(uint64_t q, int dim)
{
    uint64_t s = 0, pw = 1;
    for (int i = 0; i <= dim; ++i) {
        s += pw;
        pw *= q;
    }
    return s;
}

void require_good_prime(const Field& F)
{
    uint32_t p = F.p();
    if (p == 2 || p == 3 || p == 5)
        throw std::domain_error("bad prime " + std::to_string(p) + " (models have bad reduction at 2, 3, 5)");
}

uint64_t count_weighted_hypersurface(const WeightedHypersurface& m, const Field& F, const CountOptions& opt)
{
    require_good_prime(F);
    FqPoly f = reduce(m.poly, F);
    bool standard = std::all_of(m.weights.begin(), m.weights.end(), [](int w) { return w == 1; });
    if (standard)
        return static_cast<uint64_t>(projective_sums(f, F, opt).zeros);
    CharSums s = affine_sums(f, F, opt);
    int64_t cone = s.zeros - 1; // drop the origin
    if (cone % static_cast<int64_t>(F.q() - 1))
        throw std::logic_error("weighted count: cone size not divisible by q-1");
    return static_cast<uint64_t>(cone / static_cast<int64_t>(F.q() - 1));
}

uint64_t count_double_cover(const DoubleCoverModel& m, const Field& F, const CountOptions& opt)
{
    require_good_prime(F);
    if (m.branch.degree % 2 || m.branch.weights.size() != 4)
        throw std::invalid_argument("double cover needs an even degree branch surface in P^3");
    FqPoly f = reduce(m.branch.poly, F);
    if (m.cover_sign == -1)
        for (auto& t : f.terms)
            t.c = F.neg(t.c);
    CharSums s = projective_sums(f, F, opt);
    return static_cast<uint64_t>(static_cast<int64_t>(projective_space_size(F.q(), 3)) + s.chisum);
}

uint64_t count_twisted(const TwistedModel& m, const Field& F, const CountOptions& opt)
{
    if ((F.q() - 1) % m.aut.n)
        throw std::domain_error(std::string("twist ") + twist_name(m.aut.id) + " is not defined over F_q for q = " +
                                std::to_string(F.q()));
    return count_frobenius_twist(m, F, opt);
}

uint64_t count_frobenius_twist(const TwistedModel& m, const Field& F, const CountOptions& opt)
{
    require_good_prime(F);
    FqPoly f = reduce(m, F);
    CharSums s = projective_sums(f, F, opt);
    return static_cast<uint64_t>(static_cast<int64_t>(projective_space_size(F.q(), 3)) + s.chisum);
}

int64_t h3_trace(uint64_t count, uint64_t q)
{
    return static_cast<int64_t>(projective_space_size(q, 3)) - static_cast<int64_t>(count);
}

uint64_t count_elliptic_curve(const EllipticCurveModel& e, const Field& F)
{
    // complete the square: (2y + a1 x + a3)^2 = D(x)
    Elem four = F.from_int(4);
    Elem b2 = F.add(F.mul(e.a1, e.a1), F.mul(four, e.a2));
    Elem b4 = F.add(F.mul(e.a1, e.a3), F.mul(F.from_int(2), e.a4));
    Elem b6 = F.add(F.mul(e.a3, e.a3), F.mul(four, e.a6));
    Elem b8 = F.sub(F.add(F.mul(F.mul(e.a1, e.a1), e.a6), F.mul(F.mul(four, e.a2), e.a6)),
                    F.add(F.mul(F.mul(e.a1, e.a3), e.a4), F.sub(F.mul(e.a4, e.a4), F.mul(F.mul(e.a2, e.a3), e.a3))));
    Elem disc = F.sub(F.sub(F.neg(F.mul(F.mul(b2, b2), b8)), F.mul(F.from_int(8), F.mul(F.mul(b4, b4), b4))),
                      F.sub(F.mul(F.from_int(27), F.mul(b6, b6)), F.mul(F.from_int(9), F.mul(F.mul(b2, b4), b6))));
    if (disc == 0)
        throw std::domain_error("bad reduction: discriminant vanishes");
    uint64_t n = 1;
    for (uint64_t xi = 0; xi < F.q(); ++xi) {
        Elem x = static_cast<Elem>(xi);
        // D(x) = 4x^3 + b2 x^2 + 2 b4 x + b6
        Elem d = F.add(F.mul(F.add(F.mul(F.add(F.mul(four, x), b2), x), F.mul(F.from_int(2), b4)), x), b6);
        n += 1 + F.quadratic_character(d);
    }
    return n;
}

EllipticCurveModel quadratic_twist(const EllipticCurveModel& e, const Field& F, Field::Elem d)
{
    if (e.a1 || e.a3)
        throw std::invalid_argument("quadratic_twist: expects a1 = a3 = 0");
    EllipticCurveModel r = e;
    r.a2 = F.mul(e.a2, d);
    r.a4 = F.mul(e.a4, F.mul(d, d));
    r.a6 = F.mul(e.a6, F.mul(d, F.mul(d, d)));
    return r;
}

uint64_t count_elliptic_surface(const WeierstrassModel& m, const Field& F)
{
    require_good_prime(F);
    if (m.a2.degree() > 4 || m.a4.degree() > 8 || m.a6.degree() > 12)
        throw std::invalid_argument("count_elliptic_surface: degrees exceed the K3 bounds (4, 8, 12)");
    auto red = [&](const QPoly& f) {
        std::vector<Elem> c;
        for (auto& v : f.coeffs())
            c.push_back(reduce_rational(v, F));
        return c;
    };
    auto ev = [&](const std::vector<Elem>& c, Elem t) {
        Elem r = 0;
        for (size_t k = c.size(); k-- > 0;)
            r = F.add(F.mul(r, t), c[k]);
        return r;
    };
    auto fibre = [&](Elem A2, Elem A4, Elem A6) {
        uint64_t n = 1;
        for (uint64_t xi = 0; xi < F.q(); ++xi) {
            Elem x = static_cast<Elem>(xi);
            Elem v = F.add(F.mul(F.add(F.mul(F.add(x, A2), x), A4), x), A6);
            n += 1 + F.quadratic_character(v);
        }
        return n;
    };
    auto c2 = red(m.a2), c4 = red(m.a4), c6 = red(m.a6);
    uint64_t total = 0;
    for (uint64_t ti = 0; ti < F.q(); ++ti) {
        Elem t = static_cast<Elem>(ti);
        total += fibre(ev(c2, t), ev(c4, t), ev(c6, t));
    }
    auto top = [&](const QPoly& f, int d) { return reduce_rational(f[d], F); };
    total += fibre(top(m.a2, 4), top(m.a4, 8), top(m.a6, 12));
    return total;
}

} // namespace octic
