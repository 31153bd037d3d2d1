#include "octic/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace octic {

MPoly MPoly::constant(int nvars, const mpq_class& c)
{
    MPoly r(nvars);
    r.add_term(Exps(nvars, 0), c);
    return r;
}

MPoly MPoly::var(int nvars, int i)
{
    MPoly r(nvars);
    Exps e(nvars, 0);
    e[i] = 1;
    r.add_term(e, 1);
    return r;
}

MPoly MPoly::monomial(const Exps& e, const mpq_class& c)
{
    MPoly r(static_cast<int>(e.size()));
    r.add_term(e, c);
    return r;
}

mpq_class MPoly::coeff(const Exps& e) const
{
    auto it = t_.find(e);
    return it == t_.end() ? mpq_class(0) : it->second;
}

void MPoly::add_term(const Exps& e, const mpq_class& c)
{
    if (static_cast<int>(e.size()) != n_)
        throw std::invalid_argument("MPoly: exponent length mismatch");
    if (c == 0)
        return;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const
{
    MPoly r = *this;
    if (r.n_ == 0)
        r.n_ = o.n_;
    for (auto& [e, c] : o.t_)
        r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + o * mpq_class(-1); }

MPoly MPoly::operator*(const MPoly& o) const
{
    MPoly r(n_ ? n_ : o.n_);
    for (auto& [e, c] : t_)
        for (auto& [f, d] : o.t_) {
            Exps g(e.size());
            for (size_t k = 0; k < e.size(); ++k)
                g[k] = e[k] + f[k];
            r.add_term(g, c * d);
        }
    return r;
}

MPoly MPoly::operator*(const mpq_class& c) const
{
    MPoly r(n_);
    if (c == 0)
        return r;
    for (auto& [e, d] : t_)
        r.t_.emplace(e, d * c);
    return r;
}

MPoly MPoly::pow(unsigned k) const
{
    MPoly r = constant(n_, 1);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const
{
    if (static_cast<int>(images.size()) != n_)
        throw std::invalid_argument("substitute: need one image per variable");
    int m = images.empty() ? 0 : images[0].nvars();
    MPoly r(m);
    std::vector<std::vector<MPoly>> powers(n_);
    for (auto& [e, c] : t_) {
        MPoly term = constant(m, c);
        for (int i = 0; i < n_; ++i) {
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(constant(m, 1));
            while (static_cast<int>(pw.size()) <= e[i])
                pw.push_back(pw.back() * images[i]);
            if (e[i])
                term = term * pw[e[i]];
        }
        r = r + term;
    }
    return r;
}

int MPoly::weighted_degree(const std::vector<int>& w) const
{
    int d = -1;
    for (auto& [e, c] : t_) {
        int s = 0;
        for (int i = 0; i < n_; ++i)
            s += w[i] * e[i];
        if (d >= 0 && s != d)
            return -1;
        d = s;
    }
    return d;
}

std::string MPoly::str(const std::vector<std::string>& names) const
{
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto& [e, c] = *it;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        mpq_class a = abs(c);
        bool unit = true;
        for (int v : e)
            if (v)
                unit = false;
        if (a != 1 || unit)
            os << a.get_str();
        bool lead = (a == 1 && !unit);
        for (int i = 0; i < n_; ++i) {
            if (!e[i])
                continue;
            if (!lead)
                os << "*";
            lead = false;
            os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1)
                os << "^" << e[i];
        }
    }
    if (first)
        os << "0";
    return os.str();
}

MPoly symmetric_reduce(const MPoly& f, int i, int j)
{
    MPoly rest = f;
    MPoly out(f.nvars());
    int n = f.nvars();
    MPoly e1 = MPoly::var(n, i) + MPoly::var(n, j);
    MPoly e2 = MPoly::var(n, i) * MPoly::var(n, j);
    while (!rest.is_zero()) {
        // leading term in the (i, j) exponents: largest e_i, then largest e_j
        auto best = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
            auto& e = it->first;
            auto& b = best->first;
            if (e[i] > b[i] || (e[i] == b[i] && e[j] > b[j]))
                best = it;
        }
        Exps e = best->first;
        mpq_class c = best->second;
        if (e[i] < e[j])
            throw std::invalid_argument("symmetric_reduce: polynomial not symmetric");
        int a = e[i] - e[j], b = e[j];
        Exps rest_e = e;
        rest_e[i] = 0;
        rest_e[j] = 0;
        MPoly subtract = MPoly::monomial(rest_e, c) * e1.pow(a) * e2.pow(b);
        rest = rest - subtract;
        Exps oe = rest_e;
        oe[i] = a;
        oe[j] = b;
        out.add_term(oe, c);
    }
    return out;
}

} // namespace octic
