#include "octic/k3.hpp"

#include "octic/count.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace octic {

int KodairaConfig::euler_sum() const
{
    int s = 0;
    for (auto& f : fibres)
        s += f.count * f.euler;
    return s;
}

std::map<std::string, int> KodairaConfig::histogram() const
{
    std::map<std::string, int> h;
    for (auto& f : fibres)
        h[f.type] += f.count;
    return h;
}

std::string KodairaConfig::str() const
{
    std::string s;
    for (auto& f : fibres) {
        if (!s.empty())
            s += ", ";
        s += f.type + (f.count > 1 ? " x" + std::to_string(f.count) : "") + " @ " + f.place;
    }
    return s;
}

std::string kodaira_type(int v4, int v6, int vd)
{
    if (vd == 0)
        return "I0";
    if (v4 == 0)
        return "I" + std::to_string(vd);
    if (v4 == 2 && v6 == 3 && vd > 6)
        return "I" + std::to_string(vd - 6) + "*";
    switch (vd) {
    case 2:
        return "II";
    case 3:
        return "III";
    case 4:
        return "IV";
    case 6:
        return "I0*";
    case 8:
        return "IV*";
    case 9:
        return "III*";
    case 10:
        return "II*";
    }
    throw std::domain_error("kodaira_type: no fibre type for valuations (" + std::to_string(v4) + ", " +
                            std::to_string(v6) + ", " + std::to_string(vd) + ")");
}

int kodaira_euler(const std::string& type)
{
    static const std::map<std::string, int> fixed{{"I0", 0},   {"II", 2},   {"III", 3},  {"IV", 4},
                                                  {"I0*", 6}, {"IV*", 8}, {"III*", 9}, {"II*", 10}};
    auto it = fixed.find(type);
    if (it != fixed.end())
        return it->second;
    if (type.size() >= 2 && type[0] == 'I') {
        bool star = type.back() == '*';
        int n = std::stoi(type.substr(1, type.size() - 1 - (star ? 1 : 0)));
        return star ? n + 6 : n;
    }
    throw std::invalid_argument("kodaira_euler: unknown type " + type);
}

KodairaConfig kodaira_classify(const WeierstrassModel& m)
{
    constexpr int kInf = 1 << 20;
    QPoly c4 = m.c4(), c6 = m.c6(), d = m.discriminant();
    if (d.is_zero())
        throw std::domain_error("kodaira_classify: " + m.name + " has vanishing discriminant");
    std::vector<QPoly> inputs{d};
    if (!c4.is_zero())
        inputs.push_back(c4);
    if (!c6.is_zero())
        inputs.push_back(c6);
    KodairaConfig cfg;
    auto add = [&](const std::string& place, int count, int v4, int v6, int vd) {
        if (vd == 0)
            return;
        if (v4 >= 4 && v6 >= 6 && vd >= 12 && cfg.minimal) {
            cfg.minimal = false;
            cfg.nonminimal_place = place;
        }
        std::string t = kodaira_type(v4, v6, vd);
        cfg.fibres.push_back({place, count, t, kodaira_euler(t)});
    };
    for (auto& pi : coprime_basis(inputs)) {
        int vd = valuation(d, pi);
        int v4 = c4.is_zero() ? kInf : valuation(c4, pi);
        int v6 = c6.is_zero() ? kInf : valuation(c6, pi);
        add(pi.str(), pi.degree(), v4, v6, vd);
    }
    // s = 1/t with weights (8, 12, 24) for the K3 normalization
    if (c4.degree() > 8 || c6.degree() > 12 || d.degree() > 24)
        throw std::domain_error("kodaira_classify: " + m.name + " exceeds the K3 degree bounds");
    add("inf", 1, c4.is_zero() ? kInf : 8 - c4.degree(), c6.is_zero() ? kInf : 12 - c6.degree(), 24 - d.degree());
    return cfg;
}

WeierstrassModel two_isogeny(const WeierstrassModel& m)
{
    if (!m.has_two_torsion_form())
        throw std::invalid_argument("two_isogeny: model is not of the form x(x^2 + a x + b)");
    QPoly disc = m.a2 * m.a2 - m.a4 * mpq_class(4);
    if (disc.is_zero())
        throw std::domain_error("two_isogeny: a^2 - 4b vanishes");
    return WeierstrassModel::two_torsion(m.name + "/2", m.a2 * mpq_class(-2), disc);
}

WeierstrassModel scale(const WeierstrassModel& m, const mpq_class& u)
{
    mpq_class u2 = u * u;
    return {m.name, m.a2 * u2, m.a4 * (u2 * u2), m.a6 * (u2 * u2 * u2)};
}

WeierstrassModel quadratic_twist(const WeierstrassModel& m, const mpq_class& d)
{
    return {m.name + "^" + d.get_str(), m.a2 * d, m.a4 * (d * d), m.a6 * (d * d * d)};
}

bool same_model(const WeierstrassModel& a, const WeierstrassModel& b)
{
    return a.a2 == b.a2 && a.a4 == b.a4 && a.a6 == b.a6;
}

bool CongruenceRow::congruent() const
{
    if (counts.empty())
        return true;
    uint64_t r = counts.begin()->second % p;
    for (auto& [k, v] : counts)
        if (v % p != r)
            return false;
    return true;
}

std::vector<CongruenceRow> parameter_change_check(const WeierstrassModel& a, const WeierstrassModel& b,
                                                  const std::vector<int64_t>& primes)
{
    std::vector<CongruenceRow> rows;
    for (auto p : primes) {
        Field F(static_cast<uint32_t>(p), 1);
        CongruenceRow r{p, {}};
        r.counts[a.name] = count_elliptic_surface(a, F);
        r.counts[b.name] = count_elliptic_surface(b, F);
        rows.push_back(r);
    }
    return rows;
}

CongruenceRow k3_congruence_net(int64_t p)
{
    const Catalog& c = maschke_catalog();
    Field F(static_cast<uint32_t>(p), 1);
    CongruenceRow r{p, {}};
    r.counts["S1"] = count_weighted_hypersurface(c.S1, F);
    for (auto* m : {&c.S2, &c.S3, &c.S4, &c.S4_aux, &c.S5})
        r.counts[m->name] = count_elliptic_surface(*m, F);
    return r;
}

ModularPolynomial ModularPolynomial::parse(const std::string& text)
{
    ModularPolynomial m;
    std::istringstream in(text);
    std::string line;
    bool have_ell = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        if (!have_ell) {
            if (!(ls >> m.ell) || m.ell < 2)
                throw std::runtime_error("modular polynomial: bad level line");
            have_ell = true;
            continue;
        }
        int i, j;
        std::string cs;
        if (!(ls >> i >> j >> cs))
            throw std::runtime_error("modular polynomial: bad line '" + line + "'");
        mpz_class c(cs);
        for (auto key : {std::make_pair(i, j), std::make_pair(j, i)}) {
            auto it = m.coeffs.find(key);
            if (it != m.coeffs.end() && it->second != c)
                throw std::runtime_error("modular polynomial: conflicting coefficients");
            m.coeffs[key] = c;
        }
    }
    if (!have_ell)
        throw std::runtime_error("modular polynomial: empty file");
    return m;
}

ModularPolynomial ModularPolynomial::load(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

std::string default_modpoly_path(int ell)
{
    return std::string(OCTIC_DATA_DIR) + "/modpoly" + std::to_string(ell) + ".txt";
}

bool ModularPolynomial::symmetric() const
{
    for (auto& [k, c] : coeffs) {
        auto it = coeffs.find({k.second, k.first});
        if (it == coeffs.end() || it->second != c)
            return false;
    }
    return true;
}

bool ModularPolynomial::kronecker_congruence() const
{
    // (x^l - y)(x - y^l) = x^(l+1) - x^l y^l - x y + y^(l+1)
    std::map<std::pair<int, int>, mpz_class> ref{
        {{ell + 1, 0}, 1}, {{ell, ell}, -1}, {{1, 1}, -1}, {{0, ell + 1}, 1}};
    auto keys = ref;
    for (auto& [k, c] : coeffs)
        keys[k];
    for (auto& [k, unused] : keys) {
        mpz_class a = coeffs.count(k) ? coeffs.at(k) : mpz_class(0);
        mpz_class b = ref.count(k) ? ref.at(k) : mpz_class(0);
        if ((a - b) % ell != 0)
            return false;
    }
    return true;
}

mpz_class ModularPolynomial::eval(const mpz_class& x, const mpz_class& y) const
{
    mpz_class s = 0;
    for (auto& [k, c] : coeffs) {
        mpz_class xi, yj;
        mpz_pow_ui(xi.get_mpz_t(), x.get_mpz_t(), k.first);
        mpz_pow_ui(yj.get_mpz_t(), y.get_mpz_t(), k.second);
        s += c * xi * yj;
    }
    return s;
}

KElem ModularPolynomial::eval(const KElem& x, const KElem& y) const
{
    auto ys = specialize_first(x);
    KElem r;
    for (size_t j = ys.size(); j-- > 0;)
        r = r * y + ys[j];
    return r;
}

std::vector<KElem> ModularPolynomial::specialize_first(const KElem& x) const
{
    std::vector<KElem> xp{KElem(1)};
    for (int i = 1; i <= degree(); ++i)
        xp.push_back(xp.back() * x);
    std::vector<KElem> out(degree() + 1);
    for (auto& [k, c] : coeffs)
        out[k.second] = out[k.second] + xp[k.first] * mpq_class(c);
    return out;
}

KPoly kpoly_mul(const KPoly& f, const KPoly& g)
{
    if (f.empty() || g.empty())
        return {};
    KPoly r(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = r[i + j] + f[i] * g[j];
    return r;
}

KElem resultant(const KPoly& f0, const KPoly& g0)
{
    auto strip = [](KPoly p) {
        while (!p.empty() && p.back().is_zero())
            p.pop_back();
        return p;
    };
    KPoly f = strip(f0), g = strip(g0);
    if (f.empty() || g.empty())
        return KElem(0);
    const size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
    if (N == 0)
        return KElem(1);
    std::vector<std::vector<KElem>> s(N, std::vector<KElem>(N));
    for (size_t r = 0; r < n; ++r)
        for (size_t i = 0; i <= m; ++i)
            s[r][r + i] = f[m - i];
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i <= n; ++i)
            s[n + r][r + i] = g[n - i];
    KElem det(1);
    for (size_t c = 0; c < N; ++c) {
        size_t piv = c;
        while (piv < N && s[piv][c].is_zero())
            ++piv;
        if (piv == N)
            return KElem(0);
        if (piv != c) {
            std::swap(s[piv], s[c]);
            det = -det;
        }
        det = det * s[c][c];
        KElem inv = s[c][c].inverse();
        for (size_t r = c + 1; r < N; ++r) {
            if (s[r][c].is_zero())
                continue;
            KElem f = s[r][c] * inv;
            for (size_t k = c; k < N; ++k)
                s[r][k] = s[r][k] - f * s[c][k];
        }
    }
    return det;
}

IsogenyVerdict isogeny_chain_verdict(const ModularPolynomial& phi2, const ModularPolynomial& phi3)
{
    if (phi2.ell != 2 || phi3.ell != 3)
        throw std::invalid_argument("isogeny_chain_verdict: expects Phi_2 and Phi_3");
    KElem j = j_of_E();
    IsogenyVerdict v;
    v.phi2 = phi2.eval(j, conjugate(j, KConj::FixM5));
    v.phi3 = phi3.eval(j, conjugate(j, KConj::FixM15));
    // common root of Phi_2(j, x) and Phi_3(x, sigma_3 j): E -> E^{sigma_-5} -> E^{sigma_3}
    v.res6 = resultant(phi2.specialize_first(j), phi3.specialize_first(conjugate(j, KConj::Fix3)));
    return v;
}

namespace {

std::vector<Field::Elem> square_roots(const Field& F, Field::Elem a)
{
    std::vector<Field::Elem> r;
    for (uint64_t x = 0; x < F.q(); ++x)
        if (F.mul(static_cast<Field::Elem>(x), static_cast<Field::Elem>(x)) == a)
            r.push_back(static_cast<Field::Elem>(x));
    return r;
}

} // namespace

std::vector<Embedding> degree_one_embeddings(const Field& F)
{
    std::vector<Embedding> out;
    if (F.p() == 2 || F.p() == 3 || F.p() == 5)
        return out;
    for (auto s : square_roots(F, F.from_int(3)))
        for (auto t : square_roots(F, F.from_int(-5)))
            out.push_back({s, t});
    return out;
}

Field::Elem reduce_k(const KElem& a, const Field& F, const Embedding& e)
{
    Field::Elem r = reduce_rational(a.c[0], F);
    r = F.add(r, F.mul(reduce_rational(a.c[1], F), e.s3));
    r = F.add(r, F.mul(reduce_rational(a.c[2], F), e.sm5));
    r = F.add(r, F.mul(reduce_rational(a.c[3], F), F.mul(e.s3, e.sm5)));
    return r;
}

EllipticCurveModel reduce_at_prime(const KCurve& E, const Field& F, const Embedding& e)
{
    EllipticCurveModel m;
    m.a4 = reduce_k(E.A, F, e);
    m.a6 = reduce_k(E.B, F, e);
    return m;
}

} // namespace octic
