#include "octic/count.hpp"
#include "octic/lefschetz.hpp"
#include "octic/modforms.hpp"

#include <doctest.h>

#include <cmath>

using namespace octic;

namespace {

const NewformTable& table()
{
    static const NewformTable t = load_newforms(default_newform_path());
    return t;
}

std::array<uint64_t, 4> x_counts(uint32_t p)
{
    const Catalog& c = maschke_catalog();
    Field F(p, 1);
    std::array<uint64_t, 4> n{};
    int i = 0;
    for (Twist t : {Twist::Id, Twist::I1, Twist::I2, Twist::I3})
        n[i++] = count_frobenius_twist(make_twisted(c.X, t), F);
    return n;
}

} // namespace

TEST_CASE("ingested records")
{
    const auto& t = table();
    for (auto& l : {"f120", "f120E", "f24B", "f15C", "f15", "f1200"})
        CHECK(t.count(l) == 1);
    const NewformRecord& b = t.at("f1200");
    CHECK(b.weight == 2);
    CHECK(b.at(7).rational() == 0);
    CHECK(b.at(11) == QuadIrr{0, 2, 6});
    CHECK(b.at(23).rational() == -6);
    CHECK(b.at(47).rational() == 6);
    CHECK_THROWS(b.a(11));
    CHECK(b.at(11).square().rational() == 24);

    const NewformRecord& e = t.at("f120E");
    CHECK(e.a(7) == 0);
    CHECK(e.a(11) == -4);
    CHECK(e.a(13) == 6);
    CHECK(t.at("f24B").a(11) == 4);
    CHECK(t.at("f120").a(13) == 54);
    CHECK_THROWS_AS(e.at(101), std::out_of_range);

    for (auto& [label, r] : t)
        for (auto& [p, v] : r.coeffs)
            if (p > 5)
                CHECK_MESSAGE(weil_ok(r, p), label << " at " << p);
}

TEST_CASE("newform file parsing")
{
    NewformTable t = parse_newforms("# comment\ng 2 11 1 1\n7 -2 0\n13 1/2 0\n\nh 2 8 -1 -3\n7 0 1\n");
    CHECK(t.at("g").a(7) == -2);
    CHECK(t.at("g").at(13).rational() == mpq_class(1, 2));
    CHECK(t.at("h").at(7) == QuadIrr{0, 1, -3});
    CHECK(t.at("h").nebentypus == -1);

    CHECK_THROWS_WITH(parse_newforms("g 2 11 1 1\n11 9 0\n"), doctest::Contains("Weil"));
    CHECK_THROWS(parse_newforms("7 0 0\n"));
    CHECK_THROWS(parse_newforms("g 2 11 1 1\n9 0 0\n"));
    CHECK_THROWS(parse_newforms("g 2 11 1 1\n7 0 0\n7 1 0\n"));
    CHECK_THROWS(parse_newforms("g 2 11 1 1\ng 2 11 1 1\n"));
    CHECK_THROWS(parse_newforms("g 2 11 1\n"));
    CHECK_THROWS(parse_newforms("g 2 11 1 1\n7 x 0\n"));
    CHECK_THROWS(load_newforms("/nonexistent/newforms.txt"));
}

TEST_CASE("Weil bounds on quadratic irrationals")
{
    CHECK(QuadIrr{0, 2, 6}.within(44));
    CHECK_FALSE(QuadIrr{9, 0, 1}.within(44));
    CHECK(QuadIrr{0, 2, -3}.within(12));
    CHECK_FALSE(QuadIrr{0, 2, -3}.within(11));
    // 1 + sqrt 2 squared is 3 + 2 sqrt 2 ~ 5.83
    CHECK(QuadIrr{1, 1, 2}.within(6));
    CHECK_FALSE(QuadIrr{1, 1, 2}.within(5));
    CHECK(QuadIrr{1, -1, 2}.within(6));
}

TEST_CASE("symmetric square traces")
{
    const auto& t = table();
    const NewformRecord& b = t.at("f1200");
    mpq_class s7 = trace_sym2(b, 7);
    CHECK((s7 == 7 || s7 == -7));
    mpq_class s11 = trace_sym2(b, 11);
    CHECK((s11 == 13 || s11 == 35));
    NewformRecord ss{"ss", 2, 11, 1, 1, {{7, {0, 0, 1}}}};
    CHECK(trace_sym2(ss, 7) == -7);

    // sym2 = (trace over F_{p^2}) + eps(p) p for every tabled weight 2 coefficient
    for (auto& [label, r] : t) {
        if (r.weight != 2)
            continue;
        for (auto& [p, v] : r.coeffs)
            if (p > 5)
                CHECK(trace_sym2(r, p) == trace_fp2(r, p) + r.eps(p) * p);
    }
}

TEST_CASE("assembled traces")
{
    const auto& t = table();
    CHECK(assemble_trace(spec_thm_y(), t, 11) == 180);
    CHECK(assemble_trace(spec_thm_y(), t, 13) == 54 + 5 * 13 * 6 + 9 * 13 * -2);
    CHECK(assemble_trace(spec_thm_y(), t, 7) == 0);
    for (auto c : {CharConvention::Kronecker, CharConvention::Reciprocal}) {
        mpq_class s7 = assemble_trace(spec_thm_s(), t, 7, c);
        CHECK(s7.get_den() == 1);
        CHECK(mpz_class(s7.get_num() % 7) == 0);
    }

    for (int64_t p = 7; p <= 97; ++p) {
        if (!is_prime(static_cast<uint64_t>(p)))
            continue;
        int64_t a = t.at("f120").a(p), A = t.at("f120E").a(p), B = t.at("f24B").a(p), C = t.at("f15C").a(p);
        mpq_class x = assemble_trace(spec_thm_x(), t, p);
        if (p % 4 == 1)
            CHECK(x == a + p * (50 * A + 54 * B + 45 * C));
        else
            CHECK(x == a + p * (14 * A + 18 * B + 9 * C));
        double bound = 2 * std::pow(p, 1.5) + 150 * 2 * p * std::sqrt(double(p));
        CHECK(std::abs(x.get_d()) <= bound);
        CHECK(assemble_trace_fp2(spec_thm_x(), t, p) == x_trace_fp2({p, a, A, B, C}));
    }
}

TEST_CASE("assembled traces agree with point counts of X")
{
    const Catalog& c = maschke_catalog();
    const auto& t = table();
    for (uint32_t p : {7u, 11u, 13u, 17u}) {
        uint64_t n = count_double_cover(c.X, Field(p, 1));
        CHECK(assemble_trace(spec_thm_x(), t, p) == h3_trace(n, p));
    }
    uint64_t n49 = count_double_cover(c.X, Field(7, 2));
    CHECK(assemble_trace_fp2(spec_thm_x(), t, 7) == h3_trace(n49, 49));
}

TEST_CASE("dimension audits")
{
    CHECK(dimension_audit(spec_thm_x()) == 300);
    CHECK(dimension_audit(spec_thm_y()) == 30);
    CHECK(dimension_audit(spec_thm_s()) == 100);
    for (auto s : {spec_thm_x(), spec_thm_y(), spec_thm_s()})
        CHECK(dimension_audit(s) == s.declared_dimension);
}

TEST_CASE("f120 from the counts of X")
{
    const auto& t = table();
    F120Derivation d = derive_f120(13, x_counts(13), t);
    CHECK(d.derived == 54);
    CHECK(d.match());
    CHECK(derive_f120(17, x_counts(17), t).match());
    CHECK_THROWS(derive_f120(5, {0, 0, 0, 0}, t));
}
