#include "octic/lefschetz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace octic {

mpz_class determinant(const IntMatrix& m)
{
    // Bareiss fraction-free elimination
    const size_t n = m.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(m[i][j]);
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t r = k + 1;
            while (r < n && a[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n ? sign * a[n - 1][n - 1] : mpz_class(1);
}

int matrix_rank(const IntMatrix& m)
{
    std::vector<std::vector<mpq_class>> a;
    for (auto& row : m)
        a.emplace_back(row.begin(), row.end());
    int rank = 0;
    const size_t cols = a.empty() ? 0 : a[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[rank]);
        for (size_t r = 0; r < a.size(); ++r)
            if (r != static_cast<size_t>(rank) && a[r][c] != 0) {
                mpq_class f = a[r][c] / a[rank][c];
                for (size_t k = c; k < cols; ++k)
                    a[r][k] -= f * a[rank][k];
            }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& m, const std::vector<mpz_class>& b)
{
    const size_t n = m.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(m[i][j]);
        a[i][n] = b[i];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t r = c;
        while (r < n && a[r][c] == 0)
            ++r;
        if (r == n)
            return std::nullopt;
        std::swap(a[c], a[r]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            mpq_class f = a[i][c] / a[c][c];
            for (size_t j = c; j <= n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    std::vector<mpq_class> x(n);
    for (size_t i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

std::optional<std::vector<int64_t>> kernel_vector(const IntMatrix& m)
{
    const size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            a[i][j] = static_cast<long>(m[i][j]);
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t s = r;
        while (s < rows && a[s][c] == 0)
            ++s;
        if (s == rows)
            continue;
        std::swap(a[r], a[s]);
        mpq_class inv = 1 / a[r][c];
        for (auto& v : a[r])
            v *= inv;
        for (size_t i = 0; i < rows; ++i)
            if (i != r && a[i][c] != 0) {
                mpq_class f = a[i][c];
                for (size_t j = 0; j < cols; ++j)
                    a[i][j] -= f * a[r][j];
            }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    if (cols - pivot_col.size() != 1)
        return std::nullopt;
    size_t free_col = 0;
    for (size_t c = 0; c < cols; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end())
            free_col = c;
    std::vector<mpq_class> v(cols, 0);
    v[free_col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = -a[i][free_col];
    mpz_class den = 1;
    for (auto& x : v)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> w(cols);
    mpz_class g = 0;
    for (size_t i = 0; i < cols; ++i) {
        mpq_class t = v[i] * den;
        w[i] = t.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    std::vector<int64_t> out(cols);
    for (size_t i = 0; i < cols; ++i)
        out[i] = mpz_class(w[i] / g).get_si();
    auto first = std::find_if(out.begin(), out.end(), [](int64_t x) { return x != 0; });
    if (first != out.end() && *first < 0)
        for (auto& x : out)
            x = -x;
    return out;
}

int64_t isqrt(int64_t n)
{
    if (n < 0)
        throw std::domain_error("isqrt of a negative number");
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

int64_t weil_bound(int64_t p, int w, int64_t mult)
{
    // floor(mult * p^(w/2)) = isqrt(mult^2 p^w)
    mpz_class v = mult * mult;
    for (int i = 0; i < w; ++i)
        v *= p;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r.get_si();
}

int64_t TraceVector::at(const std::string& name) const
{
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return values[i];
    throw std::out_of_range("TraceVector: no entry " + name);
}

std::string TraceVector::str() const
{
    std::ostringstream s;
    s << "p=" << p << " (";
    for (size_t i = 0; i < names.size(); ++i)
        s << (i ? ", " : "") << names[i] << "=" << values[i];
    s << ")";
    return s.str();
}

const char* status_name(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Unique:
        return "unique";
    case SolveStatus::None:
        return "no solution";
    case SolveStatus::Ambiguous:
        return "ambiguous";
    }
    return "?";
}

TraceVector YTraces::vector() const { return {p, {"trW1", "trU5", "trU9"}, {w1, u5, u9}}; }

std::pair<int64_t, int64_t> y_point_counts(const YTraces& t)
{
    const int64_t p = t.p, p2 = p * p, p3 = p2 * p;
    int64_t n1 = 1 + p + p2 + p3 - (t.w1 + 5 * p * t.u5 + 9 * p * t.u9);
    int64_t tr2 = t.w1 * t.w1 + 5 * p2 * t.u5 * t.u5 + 9 * p2 * t.u9 * t.u9 - 30 * p3;
    int64_t n2 = 1 + p2 + p2 * p2 + p3 * p3 - tr2;
    return {n1, n2};
}

YSolution solve_y_system(int64_t n_p, int64_t n_p2, int64_t p)
{
    const int64_t p2 = p * p, p3 = p2 * p;
    const int64_t lin = 1 + p + p2 + p3 - n_p;
    const int64_t quad = 1 + p2 + p2 * p2 + p3 * p3 - n_p2;
    const int64_t bw = weil_bound(p, 3), bu = weil_bound(p, 1);
    YSolution s;
    for (int64_t u5 = -bu; u5 <= bu; ++u5)
        for (int64_t u9 = -bu; u9 <= bu; ++u9) {
            int64_t w1 = lin - 5 * p * u5 - 9 * p * u9;
            if (std::abs(w1) > bw)
                continue;
            if (w1 * w1 + 5 * p2 * u5 * u5 + 9 * p2 * u9 * u9 - 30 * p3 != quad)
                continue;
            s.candidates.push_back({p, w1, u5, u9});
        }
    s.status = s.candidates.empty() ? SolveStatus::None
               : s.candidates.size() == 1 ? SolveStatus::Unique
                                          : SolveStatus::Ambiguous;
    return s;
}

std::array<int64_t, 3> solve_involution_traces(const std::vector<ComposedTrace>& composed,
                                               const std::vector<YTraces>& known)
{
    auto lookup = [&](int64_t p) -> const YTraces& {
        for (auto& k : known)
            if (k.p == p)
                return k;
        throw std::invalid_argument("solve_involution_traces: no known traces at p = " + std::to_string(p));
    };
    // the sign on W1 from tr(F_p o iota) = +-tr_p(W1) mod p
    int sign = 0;
    for (auto& c : composed) {
        const YTraces& t = lookup(c.p);
        if (t.w1 % c.p == 0)
            continue;
        int s = ((c.value - t.w1) % c.p == 0) ? 1 : ((c.value + t.w1) % c.p == 0) ? -1 : 0;
        if (s == 0)
            throw std::runtime_error("solve_involution_traces: composed trace is not +-trW1 mod p");
        if (sign && s != sign)
            throw std::runtime_error("solve_involution_traces: inconsistent signs on W1");
        sign = s;
    }
    if (!sign)
        throw std::runtime_error("solve_involution_traces: W1 sign undetermined");
    if (composed.size() < 2)
        throw std::invalid_argument("solve_involution_traces: need two primes");
    IntMatrix m;
    std::vector<mpz_class> b;
    for (size_t i = 0; i < 2; ++i) {
        const YTraces& t = lookup(composed[i].p);
        int64_t rest = composed[i].value - sign * t.w1;
        if (rest % t.p)
            throw std::runtime_error("solve_involution_traces: residual not divisible by p");
        m.push_back({t.u5, t.u9});
        b.push_back(static_cast<long>(rest / t.p));
    }
    auto x = solve_rational(m, b);
    if (!x)
        throw std::runtime_error("solve_involution_traces: singular system");
    for (auto& v : *x)
        if (v.get_den() != 1)
            throw std::runtime_error("solve_involution_traces: non-integral solution");
    std::array<int64_t, 3> r{sign, (*x)[0].get_num().get_si(), (*x)[1].get_num().get_si()};
    // remaining primes must agree
    for (size_t i = 2; i < composed.size(); ++i) {
        const YTraces& t = lookup(composed[i].p);
        if (sign * t.w1 + t.p * (r[1] * t.u5 + r[2] * t.u9) != composed[i].value)
            throw std::runtime_error("solve_involution_traces: inconsistent at p = " + std::to_string(t.p));
    }
    return r;
}

const std::array<const char*, kNumV> kVNames{"V1", "V5", "V9", "V15", "V30", "V45", "V45'"};

const std::array<std::array<int, kNumV>, 4> kAutTraces{{
    {1, 5, 9, 15, 30, 45, 45},
    {1, 5, 9, -1, -2, -3, -3},
    {1, 1, 1, 3, 2, -3, 1},
    {-1, 1, -3, -3, -2, 1, 5},
}};

const std::array<std::array<int, 3>, 4> kGaloisTraces{{
    {9, 9, 9},
    {9, 9, 9},
    {1, 1, -3},
    {-1, 5, 1},
}};

IntMatrix aut_matrix_w()
{
    IntMatrix m;
    for (auto& row : kAutTraces)
        m.push_back({row[3], row[4], row[5], row[6]});
    return m;
}

IntMatrix folded_matrix()
{
    // a120E on V5 + V45', a24B on V9 + V45, a15C on V15 + V30
    IntMatrix m;
    for (auto& r : kAutTraces)
        m.push_back({r[0], r[1] + r[6], r[2] + r[5], r[3] + r[4]});
    return m;
}

IntMatrix galois_folded_matrix()
{
    IntMatrix m;
    for (int i : {0, 2, 3}) {
        auto& r = kAutTraces[i];
        auto& g = kGaloisTraces[i];
        m.push_back({r[0], r[1] + g[2], r[2] + g[1], g[0]});
    }
    return m;
}

TraceVector XTraces::vector() const
{
    return {p, {"a120", "a120E", "a24B", "a15C"}, {a120, a120E, a24B, a15C}};
}

namespace {

int64_t h3(uint64_t count, int64_t q) { return 1 + q + q * q + q * q * q - static_cast<int64_t>(count); }

} // namespace

XTraces extract_x_traces(int64_t p, const std::array<uint64_t, 4>& counts)
{
    if (p % 4 != 1)
        throw std::invalid_argument("extract_x_traces: needs p = 1 mod 4");
    std::vector<mpz_class> b;
    for (auto c : counts)
        b.push_back(static_cast<long>(h3(c, p)));
    auto x = solve_rational(folded_matrix(), b);
    if (!x)
        throw std::logic_error("extract_x_traces: folded matrix singular");
    XTraces t{p};
    std::array<int64_t, 4> v{};
    for (int i = 0; i < 4; ++i) {
        mpq_class s = (*x)[i];
        if (i > 0)
            s /= p;
        if (s.get_den() != 1)
            throw std::runtime_error("extract_x_traces: non-integral solution at p = " + std::to_string(p));
        v[i] = s.get_num().get_si();
    }
    t.a120 = v[0];
    t.a120E = v[1];
    t.a24B = v[2];
    t.a15C = v[3];
    int64_t bu = weil_bound(p, 1), bw = weil_bound(p, 3);
    if (std::abs(t.a120) > bw || std::abs(t.a120E) > bu || std::abs(t.a24B) > bu || std::abs(t.a15C) > bu)
        throw std::runtime_error("extract_x_traces: Weil bound violated at p = " + std::to_string(p));
    return t;
}

std::vector<XTraces> x_trace_candidates_mod3(int64_t p, const std::array<uint64_t, 3>& counts)
{
    if (p % 4 != 3)
        throw std::invalid_argument("x_trace_candidates_mod3: needs p = 3 mod 4");
    IntMatrix m = galois_folded_matrix();
    std::array<int64_t, 3> tr{};
    for (int i = 0; i < 3; ++i)
        tr[i] = h3(counts[i], p);
    const int64_t bu = weil_bound(p, 1), bw = weil_bound(p, 3);
    std::vector<XTraces> out;
    auto start = [&](int64_t b) { return -(b - b % 4); };
    for (int64_t A = start(bu); A <= bu; A += 4)
        for (int64_t B = start(bu); B <= bu; B += 4)
            for (int64_t C = start(bu); C <= bu; C += 4) {
                // the identity row fixes a120
                int64_t a = (tr[0] - p * (m[0][1] * A + m[0][2] * B + m[0][3] * C)) * m[0][0];
                if (std::abs(a) > bw)
                    continue;
                bool ok = true;
                for (int i = 1; i < 3 && ok; ++i)
                    ok = m[i][0] * a + p * (m[i][1] * A + m[i][2] * B + m[i][3] * C) == tr[i];
                if (ok)
                    out.push_back({p, a, A, B, C});
            }
    return out;
}

int64_t x_trace_fp2(const XTraces& t)
{
    const int64_t p = t.p, p2 = p * p;
    auto w = [&](int64_t a) { return p2 * (a * a - 2 * p); };
    return t.a120 * t.a120 - 2 * p2 * p + 50 * w(t.a120E) + 54 * w(t.a24B) + 45 * w(t.a15C);
}

bool Fp2Extraction::ok() const
{
    return std::all_of(residuals.begin(), residuals.end(), [](int64_t r) { return r == 0; }) &&
           candidates.size() == 1 && candidates.front() == expected;
}

Fp2Extraction extract_x_traces_fp2(int64_t p, const std::array<uint64_t, 4>& counts, const XTraces& forms)
{
    if (p % 4 != 3)
        throw std::invalid_argument("extract_x_traces_fp2: needs p = 3 mod 4");
    const int64_t q = p * p;
    auto w = [&](int64_t a) { return q * (a * a - 2 * p); };
    // the Y part from the newform data
    const int64_t t1 = forms.a120 * forms.a120 - 2 * q * p, t5 = w(forms.a120E), t9 = w(forms.a24B);
    const IntMatrix m = aut_matrix_w();
    std::array<int64_t, 4> rest{};
    for (int i = 0; i < 4; ++i) {
        auto& r = kAutTraces[i];
        rest[i] = h3(counts[i], q) - (r[0] * t1 + r[1] * t5 + r[2] * t9);
    }
    Fp2Extraction e;
    e.p = p;
    e.rank = matrix_rank(m);
    e.expected = {w(forms.a15C), w(forms.a15C), w(forms.a24B), w(forms.a120E)};
    for (int i = 0; i < 4; ++i) {
        e.residuals[i] = rest[i];
        for (int j = 0; j < 4; ++j)
            e.residuals[i] -= m[i][j] * e.expected[j];
    }
    // the matrix is singular, so search the box of Tate twisted traces
    const int64_t b = 2 * p;
    std::array<int64_t, 4> t;
    for (t[0] = -b; t[0] <= b; t[0] += 2)
        for (t[1] = -b; t[1] <= b; t[1] += 2)
            for (t[2] = -b; t[2] <= b; t[2] += 2)
                for (t[3] = -b; t[3] <= b; t[3] += 2) {
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i)
                        ok = q * (m[i][0] * t[0] + m[i][1] * t[1] + m[i][2] * t[2] + m[i][3] * t[3]) == rest[i];
                    if (ok)
                        e.candidates.push_back({q * t[0], q * t[1], q * t[2], q * t[3]});
                }
    return e;
}

std::vector<mpq_class> Polygon::slopes() const
{
    std::vector<mpq_class> s;
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        mpq_class dx = vertices[i + 1].first - vertices[i].first;
        mpq_class sl = (vertices[i + 1].second - vertices[i].second) / dx;
        for (mpz_class k = 0; k < dx.get_num(); ++k)
            s.push_back(sl);
    }
    return s;
}

mpq_class Polygon::height_at(const mpq_class& x) const
{
    for (size_t i = 0; i + 1 < vertices.size(); ++i) {
        auto& [x0, y0] = vertices[i];
        auto& [x1, y1] = vertices[i + 1];
        if (x >= x0 && x <= x1)
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    throw std::out_of_range("Polygon::height_at outside the polygon");
}

namespace {

Polygon lower_hull(std::vector<std::pair<mpq_class, mpq_class>> pts)
{
    std::vector<std::pair<mpq_class, mpq_class>> h;
    for (auto& pt : pts) {
        while (h.size() >= 2) {
            auto& a = h[h.size() - 2];
            auto& b = h[h.size() - 1];
            // drop b if it lies on or above segment a-pt
            mpq_class cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                h.pop_back();
            else
                break;
        }
        h.push_back(pt);
    }
    return {h};
}

} // namespace

Polygon newton_polygon(const std::vector<mpz_class>& charpoly, int64_t p)
{
    std::vector<std::pair<mpq_class, mpq_class>> pts;
    mpz_class P = static_cast<long>(p);
    for (size_t i = 0; i < charpoly.size(); ++i) {
        if (charpoly[i] == 0)
            continue;
        mpz_class c = charpoly[i];
        long v = 0;
        while (c % P == 0) {
            c /= P;
            ++v;
        }
        pts.push_back({mpq_class(static_cast<long>(i)), mpq_class(v)});
    }
    return lower_hull(pts);
}

Polygon hodge_polygon(const std::vector<int>& hodge_numbers)
{
    std::vector<std::pair<mpq_class, mpq_class>> pts{{0, 0}};
    mpq_class x = 0, y = 0;
    for (size_t i = 0; i < hodge_numbers.size(); ++i) {
        if (!hodge_numbers[i])
            continue;
        x += hodge_numbers[i];
        y += mpq_class(static_cast<long>(i * hodge_numbers[i]));
        pts.push_back({x, y});
    }
    return lower_hull(pts);
}

bool dominates(const Polygon& newton, const Polygon& hodge)
{
    if (newton.vertices.front() != hodge.vertices.front() || newton.vertices.back() != hodge.vertices.back())
        return false;
    for (auto& v : newton.vertices)
        if (v.second < hodge.height_at(v.first))
            return false;
    for (auto& v : hodge.vertices)
        if (newton.height_at(v.first) < v.second)
            return false;
    return true;
}

std::vector<mpz_class> charpoly_from_traces(const std::vector<std::pair<mpz_class, int>>& factors, int64_t p, int w)
{
    mpz_class pw = 1;
    for (int i = 0; i < w; ++i)
        pw *= p;
    std::vector<mpz_class> c{1};
    for (auto& [t, mult] : factors)
        for (int k = 0; k < mult; ++k) {
            std::vector<mpz_class> n(c.size() + 2, 0);
            for (size_t i = 0; i < c.size(); ++i) {
                n[i] += c[i];
                n[i + 1] -= c[i] * t;
                n[i + 2] += c[i] * pw;
            }
            c = std::move(n);
        }
    return c;
}

bool slopes_allowed(int k, const std::vector<mpq_class>& slopes)
{
    mpq_class half(k, 2);
    half.canonicalize();
    for (auto& s : slopes) {
        bool integral = s.get_den() == 1 && s >= 0 && s <= k;
        bool middle = s == half;
        if (!integral && !middle)
            return false;
    }
    return true;
}

bool tate_twist_gate(const std::vector<mpq_class>& slopes)
{
    if (slopes.size() != 2)
        return false;
    return (slopes[0] == 1 && slopes[1] == 2) || (slopes[0] == mpq_class(3, 2) && slopes[1] == mpq_class(3, 2));
}

} // namespace octic
