#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace octic {

using Exps = std::vector<int>;

// Sparse multivariate polynomial over Q.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : n_(nvars) {}

    static MPoly constant(int nvars, const mpq_class& c);
    static MPoly var(int nvars, int i);
    static MPoly monomial(const Exps& e, const mpq_class& c);

    int nvars() const { return n_; }
    const std::map<Exps, mpq_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    mpq_class coeff(const Exps& e) const;
    void add_term(const Exps& e, const mpq_class& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const mpq_class& c) const;
    MPoly pow(unsigned k) const;
    bool operator==(const MPoly& o) const { return n_ == o.n_ && t_ == o.t_; }

    // substitute polynomials (all in the same ring) for each variable
    MPoly substitute(const std::vector<MPoly>& images) const;
    // weighted degree if homogeneous for the weights, -1 otherwise
    int weighted_degree(const std::vector<int>& w) const;
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int n_ = 0;
    std::map<Exps, mpq_class> t_;
};

// Rewrites f, symmetric in the variables i and j, as a polynomial in
// e1 = v_i + v_j and e2 = v_i v_j. The result has e1 in slot i and e2 in slot j.
MPoly symmetric_reduce(const MPoly& f, int i, int j);

} // namespace octic
