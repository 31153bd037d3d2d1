#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace octic {

// Evaluation convention for chi_d(p): the Legendre symbol (d/p), equal to the
// Kronecker symbol of the discriminant of Q(sqrt d) at odd p, or (p/|d|).
enum class CharConvention { Kronecker, Reciprocal };
const char* convention_name(CharConvention c);

// quadratic character unramified outside {2,3,5}: exponents over (-1, 2, 3, 5)
struct SquareClassChar {
    unsigned bits = 0; // bit 0: -1, bit 1: 2, bit 2: 3, bit 3: 5

    static SquareClassChar from_d(int64_t d);
    int64_t d() const;
    int eval(int64_t p, CharConvention c = CharConvention::Kronecker) const;
    SquareClassChar operator*(SquareClassChar o) const { return {bits ^ o.bits}; }
    bool operator==(const SquareClassChar&) const = default;
    std::string name() const;
};

// chi_d(p) for any d dividing +-30 (d = 1 trivial)
int chi(int64_t d, int64_t p, CharConvention c = CharConvention::Kronecker);

struct FrobClass {
    int64_t p = 0;
    std::array<int, 4> symbols{}; // (-1/p), (2/p), (3/p), (5/p)
    unsigned bits() const;        // bit set where the symbol is -1
};

FrobClass frobenius_class(int64_t p);
std::map<unsigned, std::vector<int64_t>> class_coverage(const std::vector<int64_t>& primes);

extern const std::vector<int64_t> kNonCubicPrimes;   // the 16 representatives
extern const std::vector<int64_t> kNonCubicPrimes14; // without 83 and 241

// Non-cubic test: no nonzero polynomial of degree <= 3 on F_2^4 vanishes on
// all classes. Homogeneous: polynomials without constant term (14 monomials);
// inhomogeneous: the constant is allowed (15 monomials).
enum class NonCubicVariant { Homogeneous, Inhomogeneous };
struct NonCubicResult {
    bool pass = false;
    unsigned witness = 0; // monomial mask of a vanishing polynomial when failing
};
NonCubicResult noncubic_check(const std::vector<unsigned>& classes, NonCubicVariant v);

using TraceSeq = std::map<int64_t, int64_t>;

struct Verdict {
    bool pass = false;
    std::string detail;
};

Verdict even_trace_rule(const TraceSeq& seq);
Verdict mod4_rule(const TraceSeq& seq);

struct GL2Z4Audit {
    int total = 0;   // elements of GL2(Z/4)
    int det3 = 0;    // with determinant 3
    int identity_lifts = 0, order2 = 0, order4 = 0, odd_trace = 0;
    int mismatches = 0;
    bool pass() const { return total == 96 && mismatches == 0; }
};
// det 3 elements: lifts of the identity have trace 0, elements of order 2 over
// a nontrivial reduction trace 0, order 4 trace 2 (mod 4); reductions of order 3 have odd trace
GL2Z4Audit gl2z4_trace_audit();
int gl2z4_order(const std::array<int, 4>& m);

// order of Frobenius on the splitting field of (x^4 - a)(x^2 + 1) over F_p
int quartic_frobenius_order(int64_t a, int64_t p);

struct FslResult {
    bool pass = false;
    std::vector<std::array<int64_t, 3>> mismatches; // (p, a, b)
    std::vector<int64_t> missing;
};
FslResult fsl_compare(const TraceSeq& a, const TraceSeq& b, const std::vector<int64_t>& primes);

struct CharSolve {
    enum Status { Unique, Underdetermined, Inconsistent } status = Inconsistent;
    std::vector<SquareClassChar> consistent;
};
CharSolve solve_quadratic_character(const std::vector<std::pair<int64_t, int>>& constraints,
                                    CharConvention c = CharConvention::Kronecker);

struct UniquenessResult {
    int64_t p = 0;
    int64_t translation_bound = 0; // floor(4 sqrt p)
    int64_t weil = 0;              // floor(2 sqrt p)
    int matrices = 0;              // rank 3 matrices examined
    std::vector<std::array<int64_t, 4>> translations; // distinct v_min within the bound
    std::vector<std::array<int64_t, 4>> survivors;    // v0 + k v_min within the Weil box, k != 0
    bool v0_admissible = false;
    bool unique() const { return v0_admissible && survivors.empty(); }
};
// v0 = (d, d, b, c)
UniquenessResult galois_trace_uniqueness(int64_t p, const std::array<int64_t, 4>& v0,
                                         int64_t translation_bound = -1);
// 216 (u1 - u2) over the grid of odd u in [-15, 15]; returns the number of failures
int lemma_tr_determinant_audit();

struct SignCheck {
    int64_t max_trace = 0;
    bool achievable = false;
};
// split (d', d'') of V against n+ and n- eigenvalues of the involution
SignCheck sign_contradiction_check(std::pair<int64_t, int64_t> split, std::pair<int64_t, int64_t> counts,
                                   int64_t target);

// labels of pairs that agree at every given prime
std::vector<std::pair<std::string, std::string>> duplication_check(const std::map<std::string, TraceSeq>& seqs,
                                                                   const std::vector<int64_t>& primes = {13, 29});

} // namespace octic
