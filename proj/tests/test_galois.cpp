#include "octic/galois.hpp"
#include "octic/gf.hpp"
#include "octic/modforms.hpp"

#include <doctest.h>

#include <set>

using namespace octic;

namespace {

const NewformTable& table()
{
    static const NewformTable t = load_newforms(default_newform_path());
    return t;
}

std::vector<int64_t> primes_from(int64_t lo, int count)
{
    std::vector<int64_t> v;
    for (int64_t p = lo; static_cast<int>(v.size()) < count; ++p)
        if (is_prime(static_cast<uint64_t>(p)))
            v.push_back(p);
    return v;
}

} // namespace

TEST_CASE("Frobenius classes of the prime set")
{
    auto cov = class_coverage(kNonCubicPrimes);
    CHECK(cov.size() == 16);
    for (auto& [cls, ps] : cov)
        CHECK(ps.size() == 1);
    auto cov14 = class_coverage(kNonCubicPrimes14);
    CHECK(cov14.size() == 14);
    CHECK_THROWS(frobenius_class(49));
    CHECK_THROWS(frobenius_class(5));

    FrobClass f = frobenius_class(7);
    CHECK(f.symbols == std::array<int, 4>{-1, 1, -1, -1});
    CHECK(f.bits() == 0b1101);

    // surjective over primes below 250
    std::vector<int64_t> all;
    for (int64_t p = 7; p < 250; ++p)
        if (is_prime(static_cast<uint64_t>(p)))
            all.push_back(p);
    CHECK(class_coverage(all).size() == 16);
}

TEST_CASE("non-cubic sets")
{
    std::vector<unsigned> c14;
    for (auto p : kNonCubicPrimes14)
        c14.push_back(frobenius_class(p).bits());
    CHECK(noncubic_check(c14, NonCubicVariant::Homogeneous).pass);
    NonCubicResult inh = noncubic_check(c14, NonCubicVariant::Inhomogeneous);
    CHECK_FALSE(inh.pass);
    CHECK(inh.witness != 0);

    for (auto v : {NonCubicVariant::Homogeneous, NonCubicVariant::Inhomogeneous}) {
        CHECK_FALSE(noncubic_check({0b0110}, v).pass);
        std::vector<unsigned> nonzero;
        for (unsigned c = 1; c < 16; ++c)
            nonzero.push_back(c);
        CHECK(noncubic_check(nonzero, v).pass);
    }
}

TEST_CASE("even trace and mod 4 rules")
{
    TraceSeq y{{7, 0}, {11, 4}, {13, 54}, {19, 44}};
    CHECK(even_trace_rule(y).pass);
    TraceSeq odd = y;
    odd[7] = 3;
    CHECK_FALSE(even_trace_rule(odd).pass);
    CHECK_THROWS(even_trace_rule({{7, 0}, {11, 4}, {13, 54}}));
    for (auto& label : {"f120E", "f24B"}) {
        TraceSeq s = table().at(label).integer_sequence();
        CHECK(even_trace_rule(s).pass);
    }
    CHECK(even_trace_rule({{7, 0}, {11, 2}, {13, 0}, {19, 0}, {23, -6}}).pass);

    TraceSeq m4{{7, 0}, {11, 4}, {13, 2}, {19, -8}, {23, 8}};
    CHECK(mod4_rule(m4).pass);
    m4[23] = 6;
    CHECK_FALSE(mod4_rule(m4).pass);
    CHECK_FALSE(mod4_rule({{7, 0}, {11, 2}, {13, 2}, {19, 0}}).pass);
}

TEST_CASE("GL2(Z/4)")
{
    GL2Z4Audit a = gl2z4_trace_audit();
    CHECK(a.total == 96);
    CHECK(a.det3 == 48);
    CHECK(a.mismatches == 0);
    CHECK(a.identity_lifts + a.order2 + a.order4 + a.odd_trace == a.det3);
    CHECK(a.pass());

    CHECK(gl2z4_order({1, 0, 0, 3}) == 2); // diag(1, 3), trace 4 = 0
    CHECK(gl2z4_order({1, 1, 2, 1}) == 4); // trace 2, det -1
    CHECK(gl2z4_order({1, 0, 0, 1}) == 1);
}

TEST_CASE("quartic Frobenius orders")
{
    CHECK(quartic_frobenius_order(2, 11) == 2);
    for (int64_t a : {2, 3, 5, 6, 10, 15, 30})
        for (int64_t p = 7; p < 200; ++p)
            if (p % 4 == 3 && is_prime(static_cast<uint64_t>(p))) {
                REQUIRE(quartic_frobenius_order(a, p) <= 2);
                REQUIRE(quartic_frobenius_order(-a, p) <= 2);
            }
    // p = 1 mod 4: Kummer theory over F_p, which contains i
    for (int64_t p : {13, 17, 29, 37, 41})
        for (int64_t a : {2, 3, 5, 6, 10, 15, 30}) {
            std::set<int64_t> sq, fourth;
            for (int64_t x = 1; x < p; ++x) {
                sq.insert(x * x % p);
                fourth.insert(x * x % p * x % p * x % p);
            }
            int want = fourth.count(a % p) ? 1 : sq.count(a % p) ? 2 : 4;
            CHECK(quartic_frobenius_order(a, p) == want);
        }
    CHECK_THROWS(quartic_frobenius_order(2, 5));
}

TEST_CASE("FSL comparison")
{
    const auto& t = table();
    TraceSeq a = t.at("f24B").integer_sequence(), b = t.at("f120E").integer_sequence();
    CHECK(fsl_compare(a, a, kNonCubicPrimes14).pass);
    FslResult r = fsl_compare(a, b, kNonCubicPrimes14);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.mismatches.empty());
    CHECK(r.mismatches.front() == std::array<int64_t, 3>{11, 4, -4});
    FslResult m = fsl_compare(a, {{7, 0}}, {7, 11});
    CHECK_FALSE(m.pass);
    CHECK(m.missing == std::vector<int64_t>{11});
}

TEST_CASE("quadratic character solver")
{
    CharSolve s = solve_quadratic_character({{11, -1}, {53, -1}, {107, 1}, {139, -1}});
    REQUIRE(s.status == CharSolve::Unique);
    CHECK(s.consistent.front().d() == -5);
    CHECK(s.consistent.front().eval(127) == 1);
    CHECK(s.consistent.front().eval(179) == -1);

    std::vector<std::pair<int64_t, int>> plus;
    for (auto p : kNonCubicPrimes)
        plus.push_back({p, 1});
    CharSolve triv = solve_quadratic_character(plus);
    REQUIRE(triv.status == CharSolve::Unique);
    CHECK(triv.consistent.front().d() == 1);

    CHECK(solve_quadratic_character({{11, -1}}).status == CharSolve::Underdetermined);
    CHECK(solve_quadratic_character({{11, -1}, {11, 1}}).status == CharSolve::Inconsistent);

    std::vector<std::pair<int64_t, int>> phi;
    for (int64_t p : {11, 13, 17, 19})
        phi.push_back({p, chi(-1, p)});
    CharSolve f = solve_quadratic_character(phi);
    bool has = false;
    for (auto& c : f.consistent)
        has = has || c.d() == -1;
    CHECK(has);
}

TEST_CASE("characters are multiplicative in d")
{
    auto ps = primes_from(7, 50);
    for (auto conv : {CharConvention::Kronecker, CharConvention::Reciprocal})
        for (unsigned a = 0; a < 16; ++a)
            for (unsigned b = 0; b < 16; ++b)
                for (auto p : ps) {
                    SquareClassChar x{a}, y{b};
                    REQUIRE(x.eval(p, conv) * y.eval(p, conv) == (x * y).eval(p, conv));
                }
    // multiplicative in p: the Jacobi symbol (d/pq) factors
    for (size_t i = 0; i + 1 < ps.size(); ++i)
        for (int64_t d : {-1, 2, -3, 5, -15, 30})
            CHECK(jacobi(d, ps[i] * ps[i + 1]) == chi(d, ps[i]) * chi(d, ps[i + 1]));
    CHECK(SquareClassChar::from_d(-15).bits == 0b1101);
    CHECK(SquareClassChar::from_d(-60).d() == -15);
    CHECK_THROWS(SquareClassChar::from_d(7));
    CHECK(chi(3, 11, CharConvention::Kronecker) == 1);
    CHECK(chi(3, 11, CharConvention::Reciprocal) == -1);
}

TEST_CASE("Galois trace uniqueness")
{
    CHECK(lemma_tr_determinant_audit() == 0);
    const auto& t = table();
    auto v0 = [&](int64_t p) {
        return std::array<int64_t, 4>{t.at("f15C").a(p), t.at("f15C").a(p), t.at("f24B").a(p), t.at("f120E").a(p)};
    };
    UniquenessResult r71 = galois_trace_uniqueness(71, v0(71));
    CHECK(r71.translation_bound == 33);
    CHECK(r71.translations.size() == 9);
    CHECK(r71.unique());
    UniquenessResult r32 = galois_trace_uniqueness(71, v0(71), 32);
    CHECK(r32.translations.size() == 9);
    CHECK(r32.unique());
    CHECK(galois_trace_uniqueness(43, v0(43)).unique());

    // loosening the bound keeps v0 and only adds translations
    size_t prev = 0;
    for (int64_t b : {8, 16, 33, 48, 64}) {
        UniquenessResult r = galois_trace_uniqueness(71, v0(71), b);
        CHECK(r.v0_admissible);
        CHECK(r.translations.size() >= prev);
        prev = r.translations.size();
    }
}

TEST_CASE("sign contradiction")
{
    SignCheck s = sign_contradiction_check({12, 3}, {7, 8}, 9);
    CHECK(s.max_trace == 5);
    CHECK_FALSE(s.achievable);
    CHECK(sign_contradiction_check({15, 0}, {15, 0}, 15).achievable);
    CHECK(sign_contradiction_check({12, 3}, {15, 0}, 9).max_trace == 9);
    CHECK_THROWS(sign_contradiction_check({12, 3}, {7, 7}, 9));
}

TEST_CASE("duplication check")
{
    const auto& t = table();
    std::map<std::string, TraceSeq> s;
    for (auto& l : {"f15C", "f24B", "f120E"})
        s[l] = t.at(l).integer_sequence();
    CHECK(duplication_check(s).empty());
    s["copy"] = s["f24B"];
    auto d = duplication_check(s);
    REQUIRE(d.size() == 1);
    CHECK(d.front() == std::pair<std::string, std::string>{"copy", "f24B"});
    std::map<std::string, TraceSeq> partial{{"a", {{13, 2}, {29, 6}}}, {"b", {{13, 2}, {29, -6}}}};
    CHECK(duplication_check(partial).empty());
    CHECK_THROWS(duplication_check({{"a", {{13, 2}}}, {"b", {{13, 2}}}}));
}
