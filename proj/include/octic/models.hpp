#pragma once

#include "octic/gf.hpp"
#include "octic/mpoly.hpp"
#include "octic/numfield.hpp"
#include "octic/weierstrass.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace octic {

struct WeightedHypersurface {
    std::string name;
    std::vector<int> weights;
    MPoly poly;
    int degree = 0;

    static WeightedHypersurface make(std::string name, std::vector<int> weights, MPoly poly);
};

// w^2 = cover_sign * F(x) in P(1,1,1,1,4)
struct DoubleCoverModel {
    WeightedHypersurface branch;
    int cover_sign = 1;
};

enum class Twist { Id, I1, I2, I3 };
const char* twist_name(Twist t);
Twist parse_twist(const std::string& s);

// An automorphism of P^3 preserving S, given as a coordinate change x = P(y)
// after which it acts diagonally by y_j -> zeta_n^{a_j} y_j.
struct Automorphism {
    Twist id;
    std::string description;
    std::vector<MPoly> coordinate_change;
    std::vector<int> a;
    int n = 1;
};

Automorphism automorphism(Twist t);

struct TwistedModel {
    DoubleCoverModel base;
    Automorphism aut;
    MPoly diagonal_poly; // branch polynomial in the diagonalizing coordinates
};

TwistedModel make_twisted(const DoubleCoverModel& base, Twist t);

// Polynomial with coefficients reduced into a finite field.
struct FqTerm {
    std::array<uint8_t, 8> e{};
    Field::Elem c = 0;
};

struct FqPoly {
    int nvars = 0;
    std::vector<FqTerm> terms;
};

Field::Elem reduce_rational(const mpq_class& c, const Field& F);
FqPoly reduce(const MPoly& f, const Field& F);
// reduction of the twisted model: monomial y^e gets the extra factor g^(-(sum e_j a_j)/n)
FqPoly reduce(const TwistedModel& m, const Field& F);

struct EllipticCurveModel {
    Field::Elem a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

// E over K in short form y^2 = x^3 + A x + B
struct KCurve {
    KElem A, B;
    KElem j() const;
};

struct Catalog {
    WeightedHypersurface S;
    DoubleCoverModel X;
    WeightedHypersurface S1;
    WeierstrassModel S2, S3, S4, S4_aux, S5;
    KCurve E;
};

MPoly maschke_polynomial();
const Catalog& maschke_catalog();

} // namespace octic
