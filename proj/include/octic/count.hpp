#pragma once

#include "octic/gf.hpp"
#include "octic/models.hpp"
#include "octic/weierstrass.hpp"

#include <cstdint>

namespace octic {

struct CharSums {
    int64_t zeros = 0;  // number of points where the polynomial vanishes
    int64_t chisum = 0; // sum of the quadratic character of its values
};

struct CountOptions {
    unsigned workers = 1;
    bool use_squares = true;  // enumerate even variables through their squares
    bool use_symmetry = true; // enumerate symmetric polynomials over sorted tuples
};

// sums over F_q^n
CharSums affine_sums(const FqPoly& f, const Field& F, const CountOptions& opt = {});
// sums over P^{n-1}(F_q) for a homogeneous polynomial in the standard grading
CharSums projective_sums(const FqPoly& f, const Field& F, const CountOptions& opt = {});

uint64_t projective_space_size(uint64_t q, int dim);
void require_good_prime(const Field& F);

uint64_t count_weighted_hypersurface(const WeightedHypersurface& m, const Field& F, const CountOptions& opt = {});
uint64_t count_double_cover(const DoubleCoverModel& m, const Field& F, const CountOptions& opt = {});
uint64_t count_twisted(const TwistedModel& m, const Field& F, const CountOptions& opt = {});
// #Fix(F_q o iota) also when iota is only defined over F_{q^2} (iota_3 at q = 3 mod 4)
uint64_t count_frobenius_twist(const TwistedModel& m, const Field& F, const CountOptions& opt = {});
// 1 + q + q^2 + q^3 - #X, the trace of F_q o iota on H^3
int64_t h3_trace(uint64_t count, uint64_t q);

uint64_t count_elliptic_curve(const EllipticCurveModel& e, const Field& F);
EllipticCurveModel quadratic_twist(const EllipticCurveModel& e, const Field& F, Field::Elem d);
// sum over t in P^1(F_p) of the projective fibre counts, including singular fibres
uint64_t count_elliptic_surface(const WeierstrassModel& m, const Field& F);

} // namespace octic
