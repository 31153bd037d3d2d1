#include "octic/numfield.hpp"

#include <sstream>
#include <stdexcept>

namespace octic {

KElem KElem::operator+(const KElem& o) const
{
    KElem r;
    for (int i = 0; i < 4; ++i)
        r.c[i] = c[i] + o.c[i];
    return r;
}

KElem KElem::operator-() const { return *this * mpq_class(-1); }
KElem KElem::operator-(const KElem& o) const { return *this + (-o); }

KElem KElem::operator*(const mpq_class& s) const
{
    KElem r;
    for (int i = 0; i < 4; ++i)
        r.c[i] = c[i] * s;
    return r;
}

// basis products: r3^2 = 3, r5^2 = -5, r15^2 = -15,
// r3 r5 = r15, r3 r15 = 3 r5, r5 r15 = -5 r3
KElem KElem::operator*(const KElem& o) const
{
    const auto& a = c;
    const auto& b = o.c;
    KElem r;
    r.c[0] = a[0] * b[0] + 3 * a[1] * b[1] - 5 * a[2] * b[2] - 15 * a[3] * b[3];
    r.c[1] = a[0] * b[1] + a[1] * b[0] - 5 * (a[2] * b[3] + a[3] * b[2]);
    r.c[2] = a[0] * b[2] + a[2] * b[0] + 3 * (a[1] * b[3] + a[3] * b[1]);
    r.c[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    return r;
}

KElem KElem::pow(unsigned k) const
{
    KElem r(1);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

KElem KElem::inverse() const
{
    if (is_zero())
        throw std::domain_error("KElem::inverse: zero");
    // a * sigma(a) lies in Q(sqrt3) when sigma fixes sqrt3
    KElem s = conjugate(*this, KConj::Fix3);
    KElem m = *this * s;
    KElem mt = conjugate(m, KConj::FixM5); // flips sqrt3
    mpq_class n = (m * mt).c[0];
    return s * mt * (mpq_class(1) / n);
}

std::string KElem::str() const
{
    std::ostringstream os;
    os << "(" << c[0].get_str() << ", " << c[1].get_str() << ", " << c[2].get_str() << ", " << c[3].get_str() << ")";
    return os.str();
}

KElem conjugate(const KElem& a, KConj s)
{
    KElem r = a;
    switch (s) {
    case KConj::Fix3:
        r.c[2] = -r.c[2];
        r.c[3] = -r.c[3];
        break;
    case KConj::FixM5:
        r.c[1] = -r.c[1];
        r.c[3] = -r.c[3];
        break;
    case KConj::FixM15:
        r.c[1] = -r.c[1];
        r.c[2] = -r.c[2];
        break;
    }
    return r;
}

mpq_class norm(const KElem& a)
{
    KElem r = a * conjugate(a, KConj::Fix3) * conjugate(a, KConj::FixM5) * conjugate(a, KConj::FixM15);
    return r.c[0];
}

KElem j_of_E() { return {192632, -111328, -145824, 84280}; }

} // namespace octic
