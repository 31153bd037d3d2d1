#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace octic {

using IntMatrix = std::vector<std::vector<int64_t>>;

mpz_class determinant(const IntMatrix& m);
int matrix_rank(const IntMatrix& m);
// unique rational solution of m x = b, nullopt if m is singular
std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& m, const std::vector<mpz_class>& b);
// primitive integer generator of a one dimensional kernel (first nonzero entry positive)
std::optional<std::vector<int64_t>> kernel_vector(const IntMatrix& m);

int64_t isqrt(int64_t n);
// floor(mult * p^(w/2)), computed exactly
int64_t weil_bound(int64_t p, int w, int64_t mult = 2);

struct TraceVector {
    int64_t p = 0;
    std::vector<std::string> names;
    std::vector<int64_t> values;

    int64_t at(const std::string& name) const;
    std::string str() const;
};

enum class SolveStatus { Unique, None, Ambiguous };
const char* status_name(SolveStatus s);

// traces of Frobenius on W1 and the weight one traces on U5, U9
struct YTraces {
    int64_t p = 0, w1 = 0, u5 = 0, u9 = 0;
    TraceVector vector() const;
    bool operator==(const YTraces&) const = default;
};

struct YSolution {
    SolveStatus status = SolveStatus::None;
    std::vector<YTraces> candidates;
};

YSolution solve_y_system(int64_t n_p, int64_t n_p2, int64_t p);
// forward Lefschetz formulas: the point counts of Y over F_p and F_{p^2}
std::pair<int64_t, int64_t> y_point_counts(const YTraces& t);

struct ComposedTrace {
    int64_t p = 0;
    int64_t value = 0; // tr (F_p o iota) on H^3
};

// traces of iota on the multiplicity spaces of (W1, W5, W9); throws on
// inconsistent or non-integral input
std::array<int64_t, 3> solve_involution_traces(const std::vector<ComposedTrace>& composed,
                                               const std::vector<YTraces>& known);

// Automorphism traces on V1, V5, V9, V15, V30, V45, V45'; rows id, i1, i2, i3.
constexpr int kNumV = 7;
extern const std::array<const char*, kNumV> kVNames;
extern const std::array<std::array<int, kNumV>, 4> kAutTraces;
// Galois traces at p = 3 mod 4 on V15 (+ V30), V45, V45'; rows id, i1, i2, i3.
extern const std::array<std::array<int, 3>, 4> kGaloisTraces;

// 4x4 traces on (V15, V30, V45, V45') with rows id, i1, i2, i3
IntMatrix aut_matrix_w();
// coefficients of (a120, p a120E, p a24B, p a15C) in tr(F_p o iota), p = 1 mod 4
IntMatrix folded_matrix();
// same at p = 3 mod 4 using Galois traces; rows id, i2, i3 (i1 repeats id)
IntMatrix galois_folded_matrix();

struct XTraces {
    int64_t p = 0, a120 = 0, a120E = 0, a24B = 0, a15C = 0;
    TraceVector vector() const;
    bool operator==(const XTraces&) const = default;
};

// counts of X and its twists by i1, i2, i3 over F_p, p = 1 mod 4
XTraces extract_x_traces(int64_t p, const std::array<uint64_t, 4>& counts);

// p = 3 mod 4: counts of X and the twists by i2, i3 over F_p; returns all
// integral candidates within the Weil bounds with 4-divisible weight one traces
std::vector<XTraces> x_trace_candidates_mod3(int64_t p, const std::array<uint64_t, 3>& counts);
// predicted h3 trace over F_{p^2} when each piece matches its form: used to
// separate candidates with one extra count of X over F_{p^2}
int64_t x_trace_fp2(const XTraces& t);

struct Fp2Extraction {
    int64_t p = 0;
    int rank = 0;                        // of the automorphism matrix on (V15, V30, V45, V45')
    std::array<int64_t, 4> expected{};   // p^2 (A_p^2 - 2p) for the matching form
    std::array<int64_t, 4> residuals{};  // count equations evaluated at the expected traces
    // traces p^2 t on (W15, W30, W45, W45') solving the count equations with
    // t even and |t| <= 2p
    std::vector<std::array<int64_t, 4>> candidates;
    bool ok() const;
};

// counts of X and twists over F_{p^2}; (a120, A, B, C) are the coefficients of
// f120, f120E, f24B, f15C at p. The Y part is subtracted using these.
Fp2Extraction extract_x_traces_fp2(int64_t p, const std::array<uint64_t, 4>& counts, const XTraces& forms);

// Newton and Hodge polygons as lower convex vertex lists
struct Polygon {
    std::vector<std::pair<mpq_class, mpq_class>> vertices;
    // slopes with multiplicity, ascending
    std::vector<mpq_class> slopes() const;
    mpq_class height_at(const mpq_class& x) const;
};

// coefficients c_0..c_n of T^n + c_1 T^{n-1} + ... + c_n (c_0 = 1)
Polygon newton_polygon(const std::vector<mpz_class>& charpoly, int64_t p);
Polygon hodge_polygon(const std::vector<int>& hodge_numbers);
bool dominates(const Polygon& newton, const Polygon& hodge);

// product of (T^2 - t_i T + p^w) factors, highest power first
std::vector<mpz_class> charpoly_from_traces(const std::vector<std::pair<mpz_class, int>>& factors, int64_t p, int w);

// slopes allowed for a 2-dimensional piece of weight k: integers 0..k and k/2
bool slopes_allowed(int k, const std::vector<mpq_class>& slopes);
// weight 3 pieces that are Tate twists of weight one: slopes {1,2} or {3/2,3/2}
bool tate_twist_gate(const std::vector<mpq_class>& slopes);

} // namespace octic
