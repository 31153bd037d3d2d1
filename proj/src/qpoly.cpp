#include "octic/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace octic {

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const
{
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const { return *this * mpq_class(-1); }
QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class& s) const
{
    std::vector<mpq_class> r(c_);
    for (auto& v : r)
        v *= s;
    return QPoly(std::move(r));
}

QPoly QPoly::pow(unsigned k) const
{
    QPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

mpq_class QPoly::eval(const mpq_class& x) const
{
    mpq_class r = 0;
    for (int i = degree(); i >= 0; --i)
        r = r * x + c_[i];
    return r;
}

QPoly QPoly::derivative() const
{
    std::vector<mpq_class> r;
    for (int i = 1; i <= degree(); ++i)
        r.push_back(c_[i] * i);
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const
{
    if (is_zero())
        return {};
    return *this * (mpq_class(1) / lead());
}

QPoly QPoly::reversed(int n) const
{
    if (degree() > n)
        throw std::invalid_argument("reversed: degree exceeds n");
    std::vector<mpq_class> r(n + 1);
    for (int i = 0; i <= degree(); ++i)
        r[n - i] = c_[i];
    return QPoly(std::move(r));
}

std::string QPoly::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0)
            continue;
        mpq_class a = abs(c_[i]);
        if (!first)
            os << (c_[i] < 0 ? " - " : " + ");
        else if (c_[i] < 0)
            os << "-";
        first = false;
        if (a != 1 || i == 0)
            os << a.get_str() << (i ? "*" : "");
        if (i)
            os << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("divmod: division by zero polynomial");
    std::vector<mpq_class> q(std::max(0, a.degree() - b.degree() + 1));
    QPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int s = r.degree() - b.degree();
        mpq_class c = r.lead() / b.lead();
        q[s] = c;
        std::vector<mpq_class> sh(s + 1);
        sh[s] = c;
        r = r - b * QPoly(std::move(sh));
    }
    return {QPoly(std::move(q)), r};
}

QPoly gcd(const QPoly& a, const QPoly& b)
{
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

QPoly squarefree_part(const QPoly& f)
{
    if (f.degree() <= 0)
        return QPoly::constant(1);
    return divmod(f, gcd(f, f.derivative())).first.monic();
}

int valuation(const QPoly& f, const QPoly& pi)
{
    if (f.is_zero())
        throw std::domain_error("valuation of zero polynomial");
    if (pi.degree() < 1)
        throw std::invalid_argument("valuation: place must be nonconstant");
    int v = 0;
    QPoly g = f;
    for (;;) {
        auto [q, r] = divmod(g, pi);
        if (!r.is_zero())
            return v;
        g = q;
        ++v;
    }
}

std::vector<QPoly> coprime_basis(const std::vector<QPoly>& polys)
{
    std::vector<QPoly> basis;
    for (auto& f : polys)
        if (!f.is_zero()) {
            // the layers f_1 f_2 ..., f_2 ..., ... of f = prod f_i^i separate
            // factors of different multiplicity
            QPoly cur = f;
            while (cur.degree() > 0) {
                QPoly s = squarefree_part(cur);
                basis.push_back(s.monic());
                cur = divmod(cur, s).first;
            }
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size() && !changed; ++i)
            for (size_t j = i + 1; j < basis.size() && !changed; ++j) {
                QPoly g = gcd(basis[i], basis[j]);
                if (g.degree() < 1)
                    continue;
                QPoly a = divmod(basis[i], g).first.monic();
                QPoly b = divmod(basis[j], g).first.monic();
                std::vector<QPoly> next;
                for (size_t k = 0; k < basis.size(); ++k)
                    if (k != i && k != j)
                        next.push_back(basis[k]);
                for (auto* h : {&g, &a, &b})
                    if (h->degree() > 0)
                        next.push_back(*h);
                basis = std::move(next);
                changed = true;
            }
    }
    return basis;
}

} // namespace octic
