#include "octic/models.hpp"

#include <stdexcept>

namespace octic {

WeightedHypersurface WeightedHypersurface::make(std::string name, std::vector<int> weights, MPoly poly)
{
    if (static_cast<int>(weights.size()) != poly.nvars())
        throw std::invalid_argument("WeightedHypersurface: weight count mismatch");
    int d = poly.weighted_degree(weights);
    if (d < 0)
        throw std::invalid_argument("WeightedHypersurface: " + name + " is not weighted homogeneous");
    return {std::move(name), std::move(weights), std::move(poly), d};
}

const char* twist_name(Twist t)
{
    switch (t) {
    case Twist::Id:
        return "id";
    case Twist::I1:
        return "i1";
    case Twist::I2:
        return "i2";
    case Twist::I3:
        return "i3";
    }
    return "?";
}

Twist parse_twist(const std::string& s)
{
    for (Twist t : {Twist::Id, Twist::I1, Twist::I2, Twist::I3})
        if (s == twist_name(t))
            return t;
    throw std::invalid_argument("unknown twist '" + s + "' (expected id, i1, i2, i3)");
}

Automorphism automorphism(Twist t)
{
    std::vector<MPoly> ident;
    for (int i = 0; i < 4; ++i)
        ident.push_back(MPoly::var(4, i));
    switch (t) {
    case Twist::Id:
        return {t, "identity", ident, {0, 0, 0, 0}, 1};
    case Twist::I1:
        return {t, "(x2,x3) -> (-x2,-x3)", ident, {0, 0, 1, 1}, 2};
    case Twist::I2: {
        // x2 = (u+v)/2, x3 = (u-v)/2 turns the swap into v -> -v
        mpq_class h(1, 2);
        auto u = MPoly::var(4, 2), v = MPoly::var(4, 3);
        std::vector<MPoly> ch{MPoly::var(4, 0), MPoly::var(4, 1), (u + v) * h, (u - v) * h};
        return {t, "(x1,x2,x3) -> (-x1,x3,x2)", ch, {0, 1, 0, 1}, 2};
    }
    case Twist::I3:
        return {t, "(x1,x2,x3) -> (i x1,-i x2,-x3)", ident, {0, 1, 3, 2}, 4};
    }
    throw std::logic_error("automorphism: bad id");
}

TwistedModel make_twisted(const DoubleCoverModel& base, Twist t)
{
    TwistedModel m{base, automorphism(t), {}};
    m.diagonal_poly = base.branch.poly.substitute(m.aut.coordinate_change);
    for (auto& [e, c] : m.diagonal_poly.terms()) {
        int s = 0;
        for (size_t j = 0; j < e.size(); ++j)
            s += e[j] * m.aut.a[j];
        if (s % m.aut.n)
            throw std::logic_error("make_twisted: polynomial not invariant under the automorphism");
    }
    return m;
}

Field::Elem reduce_rational(const mpq_class& c, const Field& F)
{
    mpz_class p = F.p();
    mpz_class num = c.get_num() % p, den = c.get_den() % p;
    if (num < 0)
        num += p;
    if (den == 0)
        throw std::domain_error("reduce: denominator divisible by p");
    return F.mul(static_cast<Field::Elem>(num.get_ui()), F.inv(static_cast<Field::Elem>(den.get_ui())));
}

FqPoly reduce(const MPoly& f, const Field& F)
{
    if (f.nvars() > 8)
        throw std::invalid_argument("reduce: at most 8 variables");
    FqPoly r;
    r.nvars = f.nvars();
    for (auto& [e, c] : f.terms()) {
        Field::Elem v = reduce_rational(c, F);
        if (v == 0)
            continue;
        FqTerm t;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] > 255)
                throw std::invalid_argument("reduce: exponent too large");
            t.e[j] = static_cast<uint8_t>(e[j]);
        }
        t.c = v;
        r.terms.push_back(t);
    }
    return r;
}

FqPoly reduce(const TwistedModel& m, const Field& F)
{
    const int n = m.aut.n;
    // n = 4 with q = 3 mod 4: F_q o iota is the Frobenius twist by a cocycle
    // defined over F_{q^2}; the same exponent recipe applies.
    bool semilinear = n == 4 && F.q() % 4 == 3;
    if ((F.q() - 1) % n && !semilinear)
        throw std::domain_error(std::string("twist ") + twist_name(m.aut.id) + " needs q = 1 mod " + std::to_string(n));
    FqPoly r = reduce(m.diagonal_poly, F);
    const uint64_t qm1 = F.q() - 1;
    Field::Elem g = F.generator();
    for (auto& t : r.terms) {
        int64_t s = 0;
        for (int j = 0; j < r.nvars; ++j)
            s += int64_t(t.e[j]) * m.aut.a[j];
        int64_t k = -(s / n);
        k %= static_cast<int64_t>(qm1);
        if (k < 0)
            k += qm1;
        t.c = F.mul(t.c, F.pow(g, static_cast<uint64_t>(k)));
    }
    if (m.base.cover_sign == -1)
        for (auto& t : r.terms)
            t.c = F.neg(t.c);
    return r;
}

KElem KCurve::j() const
{
    KElem a3 = A.pow(3) * mpq_class(4);
    KElem den = a3 + B * B * mpq_class(27);
    return a3 * mpq_class(1728) / den;
}

MPoly maschke_polynomial()
{
    MPoly F(4);
    std::vector<MPoly> x;
    for (int i = 0; i < 4; ++i)
        x.push_back(MPoly::var(4, i));
    for (int i = 0; i < 4; ++i)
        F = F + x[i].pow(8);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            F = F + x[i].pow(4) * x[j].pow(4) * mpq_class(14);
    F = F + (x[0] * x[1] * x[2] * x[3]).pow(2) * mpq_class(168);
    return F;
}

namespace {

// F only involves x2, x3 through squares and is symmetric in them; write it in
// sigma = x2^2 + x3^2 and tau = x2^2 x3^2.
MPoly quotient_model(const MPoly& F)
{
    MPoly G(4);
    for (auto& [e, c] : F.terms()) {
        if (e[2] % 2 || e[3] % 2)
            throw std::logic_error("quotient_model: odd power of x2 or x3");
        G.add_term({e[0], e[1], e[2] / 2, e[3] / 2}, c);
    }
    return symmetric_reduce(G, 2, 3);
}

Catalog build_catalog()
{
    Catalog c;
    MPoly F = maschke_polynomial();
    c.S = WeightedHypersurface::make("S", {1, 1, 1, 1}, F);
    c.X = {c.S, 1};
    c.S1 = WeightedHypersurface::make("S1", {1, 1, 2, 4}, quotient_model(F));

    QPoly t = QPoly::t();
    auto lin = [](long a, long b) { return QPoly({mpq_class(b), mpq_class(a)}); }; // a t + b
    QPoly tm2 = lin(1, -2), tp2 = lin(1, 2);
    c.S2 = WeierstrassModel::two_torsion(
        "S2", (t * t + QPoly::constant(1)).pow(2) * mpq_class(21),
        QPoly({1, -2, 2, 2, 1}) * QPoly({1, 2, 2, -2, 1}) * mpq_class(144));
    c.S3 = WeierstrassModel::two_torsion("S3", lin(4, 7) * tm2 * tp2 * mpq_class(6),
                                         lin(2, 5) * lin(6, 13) * tm2.pow(2) * tp2.pow(2) * mpq_class(9));
    c.S4 = WeierstrassModel::two_torsion("S4", lin(4, 7) * tm2 * tp2 * mpq_class(-3),
                                         tm2.pow(3) * tp2.pow(3) * mpq_class(9));
    QPoly r1 = t * lin(1, -12) * mpq_class(3), r2 = t * t * lin(4, -45);
    c.S4_aux = WeierstrassModel::two_torsion("S4_aux", -(r1 + r2), r1 * r2);
    c.S5 = WeierstrassModel::two_torsion("S5", t * t * mpq_class(-21),
                                         -(t.pow(3) * QPoly({81, -126, 1})));

    KElem s15 = KElem::sqrt_m15(), s5 = KElem::sqrt_m5(), s3 = KElem::sqrt3();
    KElem base = KElem(3) + s15;
    KElem A = base.pow(2) * (KElem(-11) + s15 * mpq_class(3) + s5 * mpq_class(8) - s3 * mpq_class(24, 5)) *
              mpq_class(-648, 25);
    KElem B = base.pow(3) * s3 * (KElem(1) + s5 * mpq_class(4, 5)) *
              (KElem(mpq_class(-77, 5)) + s15 * mpq_class(9) + s5 * mpq_class(56, 5) - s3 * mpq_class(72, 5)) *
              mpq_class(-5184, 125);
    c.E = {A, B};
    return c;
}

} // namespace

const Catalog& maschke_catalog()
{
    static const Catalog c = build_catalog();
    return c;
}

} // namespace octic
