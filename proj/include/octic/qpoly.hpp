#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace octic {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<mpq_class> c) : c_(c) { trim(); }
    explicit QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
    static QPoly constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }
    static QPoly t() { return QPoly({0, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class operator[](int i) const { return (i >= 0 && i <= degree()) ? c_[i] : mpq_class(0); }
    mpq_class lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const mpq_class& s) const;
    QPoly pow(unsigned k) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    mpq_class eval(const mpq_class& x) const;
    QPoly derivative() const;
    QPoly monic() const;
    // t^n f(1/t) for n >= degree
    QPoly reversed(int n) const;
    std::string str(const std::string& var = "t") const;

private:
    std::vector<mpq_class> c_;
    void trim();
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly squarefree_part(const QPoly& f);
// multiplicity of the squarefree polynomial pi in f (f nonzero)
int valuation(const QPoly& f, const QPoly& pi);
// pairwise coprime monic squarefree polynomials such that every nonzero input
// is a constant times a product of their powers
std::vector<QPoly> coprime_basis(const std::vector<QPoly>& polys);

} // namespace octic
