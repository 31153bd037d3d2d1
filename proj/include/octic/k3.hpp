#pragma once

#include "octic/gf.hpp"
#include "octic/models.hpp"
#include "octic/numfield.hpp"
#include "octic/qpoly.hpp"
#include "octic/weierstrass.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace octic {

struct KodairaFiber {
    std::string place; // factor of the discriminant, or "inf"
    int count = 1;     // number of geometric fibres (degree of the factor)
    std::string type;  // I0 (smooth), In, In*, II, III, IV, IV*, III*, II*
    int euler = 0;     // per fibre
};

struct KodairaConfig {
    std::vector<KodairaFiber> fibres;
    bool minimal = true;
    std::string nonminimal_place; // first place where the model is not minimal

    int euler_sum() const;
    // type -> number of fibres, e.g. {"I2": 8, "I1": 8}
    std::map<std::string, int> histogram() const;
    std::string str() const;
};

// Tate's algorithm in residue characteristic 0 from (v(c4), v(c6), v(Delta))
std::string kodaira_type(int v4, int v6, int vd);
int kodaira_euler(const std::string& type);
KodairaConfig kodaira_classify(const WeierstrassModel& m);

// y^2 = x(x^2 - 2a x + a^2 - 4b); throws if a^2 - 4b = 0
WeierstrassModel two_isogeny(const WeierstrassModel& m);
// (a2, a4, a6) -> (u^2 a2, u^4 a4, u^6 a6)
WeierstrassModel scale(const WeierstrassModel& m, const mpq_class& u);
// (a2, a4, a6) -> (d a2, d^2 a4, d^3 a6)
WeierstrassModel quadratic_twist(const WeierstrassModel& m, const mpq_class& d);
bool same_model(const WeierstrassModel& a, const WeierstrassModel& b);

struct CongruenceRow {
    int64_t p = 0;
    std::map<std::string, uint64_t> counts;
    bool congruent() const; // pairwise equal mod p
};
// counts of two fibrations of the same surface agree mod p at every prime
std::vector<CongruenceRow> parameter_change_check(const WeierstrassModel& a, const WeierstrassModel& b,
                                                  const std::vector<int64_t>& primes);
// S1 (weighted model) and the elliptic fibrations S2, S3, S4, S4_aux, S5
CongruenceRow k3_congruence_net(int64_t p);

class ModularPolynomial {
public:
    int ell = 0;
    std::map<std::pair<int, int>, mpz_class> coeffs; // full symmetric closure

    static ModularPolynomial load(const std::string& path);
    static ModularPolynomial parse(const std::string& text);
    int degree() const { return ell + 1; }

    bool symmetric() const;
    // Phi_l(x, y) = (x^l - y)(x - y^l) mod l
    bool kronecker_congruence() const;
    mpz_class eval(const mpz_class& x, const mpz_class& y) const;
    KElem eval(const KElem& x, const KElem& y) const;
    // coefficients of Phi(x, Y) as a polynomial in Y
    std::vector<KElem> specialize_first(const KElem& x) const;
};

std::string default_modpoly_path(int ell);

// K-polynomials, low degree first
using KPoly = std::vector<KElem>;
KElem resultant(const KPoly& f, const KPoly& g);
KPoly kpoly_mul(const KPoly& f, const KPoly& g);

struct IsogenyVerdict {
    KElem phi2, phi3, res6;
    bool pass() const { return phi2.is_zero() && phi3.is_zero() && res6.is_zero(); }
};
IsogenyVerdict isogeny_chain_verdict(const ModularPolynomial& phi2, const ModularPolynomial& phi3);

// images of sqrt 3 and sqrt -5 in F_q
struct Embedding {
    Field::Elem s3 = 0, sm5 = 0;
};
std::vector<Embedding> degree_one_embeddings(const Field& F);
Field::Elem reduce_k(const KElem& a, const Field& F, const Embedding& e);
EllipticCurveModel reduce_at_prime(const KCurve& E, const Field& F, const Embedding& e);

} // namespace octic
