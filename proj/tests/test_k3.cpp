#include "octic/count.hpp"
#include "octic/k3.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace octic;

namespace {

KElem random_kelem(std::mt19937& rng)
{
    auto r = [&] {
        mpq_class v(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
        v.canonicalize();
        return v;
    };
    return {r(), r(), r(), r()};
}

QPoly random_qpoly(std::mt19937& rng, int deg)
{
    std::vector<mpq_class> c;
    for (int i = 0; i <= deg; ++i)
        c.push_back(static_cast<long>(rng() % 21) - 10);
    return QPoly(c);
}

const ModularPolynomial& phi(int ell)
{
    static const ModularPolynomial p2 = ModularPolynomial::load(default_modpoly_path(2));
    static const ModularPolynomial p3 = ModularPolynomial::load(default_modpoly_path(3));
    return ell == 2 ? p2 : p3;
}

} // namespace

TEST_CASE("Kodaira symbols")
{
    CHECK(kodaira_type(0, 0, 0) == "I0");
    CHECK(kodaira_type(0, 0, 1) == "I1");
    CHECK(kodaira_type(0, 0, 5) == "I5");
    CHECK(kodaira_type(1, 1, 2) == "II");
    CHECK(kodaira_type(1, 2, 3) == "III");
    CHECK(kodaira_type(2, 2, 4) == "IV");
    CHECK(kodaira_type(2, 3, 6) == "I0*");
    CHECK(kodaira_type(2, 3, 8) == "I2*");
    CHECK(kodaira_type(3, 4, 8) == "IV*");
    CHECK(kodaira_type(3, 5, 9) == "III*");
    CHECK(kodaira_type(4, 5, 10) == "II*");
    CHECK_THROWS(kodaira_type(1, 1, 5));
    CHECK(kodaira_euler("I7") == 7);
    CHECK(kodaira_euler("I3*") == 9);
    CHECK(kodaira_euler("III*") == 9);
    CHECK_THROWS(kodaira_euler("V"));
}

TEST_CASE("fibre configurations of the catalog")
{
    const Catalog& c = maschke_catalog();
    using H = std::map<std::string, int>;
    CHECK(kodaira_classify(c.S2).histogram() == H{{"I1", 8}, {"I2", 8}});
    CHECK(kodaira_classify(c.S3).histogram() == H{{"I0*", 1}, {"I1*", 2}, {"I2", 2}});
    CHECK(kodaira_classify(c.S5).histogram() == H{{"I1", 2}, {"I2", 2}, {"III*", 2}});
    for (auto* m : {&c.S2, &c.S3, &c.S4, &c.S4_aux, &c.S5}) {
        KodairaConfig k = kodaira_classify(*m);
        CHECK_MESSAGE(k.euler_sum() == 24, m->name << ": " << k.str());
        CHECK(k.minimal);
    }
    // the chart at infinity assumes K3 weights; a rational surface leaves no valid fibre there
    WeierstrassModel rational{"rational", QPoly{}, QPoly({0, 1}), QPoly{}};
    CHECK_THROWS(kodaira_classify(rational));
    WeierstrassModel zero{"zero", QPoly({1}), QPoly{}, QPoly{}};
    CHECK_THROWS(kodaira_classify(zero));
}

TEST_CASE("discriminant of the 2-torsion form")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        QPoly a = random_qpoly(rng, 4), b = random_qpoly(rng, 8);
        WeierstrassModel m = WeierstrassModel::two_torsion("r", a, b);
        CHECK(m.discriminant() == b * b * (a * a - b * mpq_class(4)) * mpq_class(16));
        // 1728 Delta = c4^3 - c6^2
        CHECK(m.discriminant() * mpq_class(1728) == m.c4().pow(3) - m.c6() * m.c6());
    }
}

TEST_CASE("2-isogeny and twists")
{
    const Catalog& c = maschke_catalog();
    CHECK(same_model(two_isogeny(c.S3), scale(c.S4, 2)));
    CHECK(same_model(two_isogeny(two_isogeny(c.S3)), scale(c.S3, 2)));
    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto m = WeierstrassModel::two_torsion("r", random_qpoly(rng, 2), random_qpoly(rng, 4));
        CHECK(same_model(two_isogeny(two_isogeny(m)), scale(m, 2)));
    }
    CHECK_THROWS(two_isogeny(WeierstrassModel::two_torsion("deg", QPoly({2}), QPoly({1}))));
    CHECK_THROWS(two_isogeny(WeierstrassModel{"gen", QPoly{}, QPoly({1}), QPoly({1})}));

    CHECK(same_model(quadratic_twist(c.S4, 1), c.S4));
    WeierstrassModel tw = quadratic_twist(c.S4, -21);
    CHECK(tw.a2 == c.S4.a2 * mpq_class(-21));
    CHECK(tw.a4 == c.S4.a4 * mpq_class(441));
    CHECK_FALSE(same_model(tw, c.S4));
}

TEST_CASE("isogenous fibrations have congruent counts")
{
    const Catalog& c = maschke_catalog();
    for (auto& row : parameter_change_check(c.S4, c.S4_aux, {7, 11, 13}))
        CHECK(row.congruent());
    for (auto& row : parameter_change_check(c.S3, two_isogeny(c.S3), {7, 11, 13}))
        CHECK(row.congruent());
    for (int64_t p : {7, 11, 13, 17, 19, 23, 29, 31}) {
        CongruenceRow r = k3_congruence_net(p);
        CHECK(r.counts.size() == 6);
        CHECK(r.congruent());
    }
    CongruenceRow bad{7, {{"a", 8}, {"b", 9}}};
    CHECK_FALSE(bad.congruent());
}

TEST_CASE("arithmetic in K")
{
    KElem s3 = KElem::sqrt3(), s5 = KElem::sqrt_m5(), s15 = KElem::sqrt_m15();
    CHECK(s3 * s5 == s15);
    CHECK(s3 * s3 == KElem(3));
    CHECK(s5 * s5 == KElem(-5));
    CHECK(s15 * s15 == KElem(-15));
    CHECK(s3 * s15 == s5 * mpq_class(3));

    KElem j = j_of_E();
    CHECK(j == KElem(192632, -111328, -145824, 84280));
    CHECK(conjugate(j, KConj::FixM5) == KElem(192632, 111328, -145824, -84280));
    CHECK(conjugate(j, KConj::Fix3) == KElem(192632, -111328, 145824, -84280));
    CHECK(conjugate(j, KConj::FixM15) == KElem(192632, 111328, 145824, 84280));
    CHECK_FALSE(j.is_rational());
    CHECK(norm(j) != 0);

    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        KElem x = random_kelem(rng), y = random_kelem(rng);
        for (KConj s : {KConj::Fix3, KConj::FixM5, KConj::FixM15}) {
            CHECK(conjugate(x * y, s) == conjugate(x, s) * conjugate(y, s));
            CHECK(conjugate(x + y, s) == conjugate(x, s) + conjugate(y, s));
            CHECK(conjugate(conjugate(x, s), s) == x);
        }
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == KElem(1));
            CHECK((y / x) * x == y);
        }
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
    CHECK_THROWS(KElem().inverse());
}

TEST_CASE("j-invariant of the catalog curve")
{
    KElem j = maschke_catalog().E.j();
    bool conj = j == j_of_E() || j == conjugate(j_of_E(), KConj::Fix3) ||
                j == conjugate(j_of_E(), KConj::FixM5) || j == conjugate(j_of_E(), KConj::FixM15);
    CHECK_MESSAGE(conj, j.str());
}

TEST_CASE("resultants over K")
{
    // Res(x^2 - 2, x^2 - 3) = prod (a_i - b_j) = 1
    CHECK(resultant({KElem(-2), KElem(0), KElem(1)}, {KElem(-3), KElem(0), KElem(1)}) == KElem(1));
    CHECK(resultant({KElem(-3), KElem(0), KElem(1)}, {-KElem::sqrt3(), KElem(1)}).is_zero());
    CHECK_FALSE(resultant({KElem(1), KElem(0), KElem(1)}, {KElem(-2), KElem(0), KElem(1)}).is_zero());

    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        KElem r = random_kelem(rng);
        KPoly lin{-r, KElem(1)};
        KPoly g1{random_kelem(rng), random_kelem(rng), KElem(1)};
        KPoly g2{random_kelem(rng), KElem(1)};
        KPoly f = kpoly_mul(lin, g1), g = kpoly_mul(lin, g2);
        CHECK(resultant(f, g).is_zero());
        // distinct rational roots: Res(x - a, x - b) = +-(a - b)
        KElem a = random_kelem(rng), b = random_kelem(rng);
        KElem res = resultant({-a, KElem(1)}, {-b, KElem(1)});
        CHECK((res == a - b || res == b - a));
    }
}

TEST_CASE("modular polynomials")
{
    for (int ell : {2, 3}) {
        const ModularPolynomial& m = phi(ell);
        CHECK(m.ell == ell);
        CHECK(m.symmetric());
        CHECK(m.kronecker_congruence());
    }
    for (long j : {1728L, 8000L, -3375L})
        CHECK(phi(2).eval(mpz_class(j), mpz_class(j)) == 0);
    CHECK(phi(2).eval(mpz_class(0), mpz_class(0)) != 0);
    for (long j : {0L, 54000L, 8000L})
        CHECK(phi(3).eval(mpz_class(j), mpz_class(j)) == 0);
    CHECK(phi(3).eval(mpz_class(1728), mpz_class(1728)) != 0);
    // 1728 and 287496 = j(2i) are 2-isogenous
    CHECK(phi(2).eval(mpz_class(1728), mpz_class(287496)) == 0);

    IsogenyVerdict v = isogeny_chain_verdict(phi(2), phi(3));
    CHECK(v.phi2.is_zero());
    CHECK(v.phi3.is_zero());
    CHECK(v.res6.is_zero());
    CHECK(v.pass());
    CHECK_THROWS(isogeny_chain_verdict(phi(3), phi(2)));

    ModularPolynomial toy = ModularPolynomial::parse("2\n3 0 1\n1 0 5\n");
    CHECK_FALSE(toy.kronecker_congruence());
    CHECK(toy.coeffs.at({0, 3}) == 1);
    CHECK_THROWS(ModularPolynomial::parse(""));
    CHECK_THROWS(ModularPolynomial::parse("2\n1 1\n"));
    CHECK_THROWS(ModularPolynomial::parse("2\n1 0 1\n1 0 2\n"));
}

TEST_CASE("reduction of E at split primes")
{
    Field F23(23, 1);
    auto emb = degree_one_embeddings(F23);
    REQUIRE(emb.size() == 4);
    Embedding e{7, 8};
    CHECK(std::find_if(emb.begin(), emb.end(), [](auto& x) { return x.s3 == 7 && x.sm5 == 8; }) != emb.end());
    CHECK(reduce_k(KElem::sqrt_m15(), F23, e) == 10);
    CHECK(F23.mul(10, 10) == F23.from_int(-15));
    CHECK(reduce_k(KElem(mpq_class(1, 2)), F23, e) == 12);

    const KCurve& E = maschke_catalog().E;
    for (uint32_t p : {23u, 47u}) {
        Field F(p, 1);
        std::set<int64_t> traces;
        for (auto& em : degree_one_embeddings(F))
            traces.insert(int64_t(p) + 1 - int64_t(count_elliptic_curve(reduce_at_prime(E, F, em), F)));
        REQUIRE(traces.size() == 1);
        CHECK(std::abs(*traces.begin()) == 6);
    }
    // 7 is inert in Q(sqrt 3)
    CHECK(degree_one_embeddings(Field(7, 1)).empty());
    CHECK(degree_one_embeddings(Field(5, 1)).empty());
}
