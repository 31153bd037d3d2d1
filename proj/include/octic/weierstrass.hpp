#pragma once

#include "octic/qpoly.hpp"

#include <string>

namespace octic {

// y^2 = x^3 + a2(t) x^2 + a4(t) x + a6(t); the 2-torsion form x(x^2 + a x + b)
// has a2 = a, a4 = b, a6 = 0.
struct WeierstrassModel {
    std::string name;
    QPoly a2, a4, a6;

    static WeierstrassModel two_torsion(std::string name, QPoly a, QPoly b)
    {
        return {std::move(name), std::move(a), std::move(b), QPoly{}};
    }
    bool has_two_torsion_form() const { return a6.is_zero(); }

    QPoly c4() const { return (a2 * a2 - a4 * mpq_class(3)) * mpq_class(16); }
    QPoly c6() const
    {
        return a2.pow(3) * mpq_class(-64) + a2 * a4 * mpq_class(288) - a6 * mpq_class(864);
    }
    // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6 with a1 = a3 = 0
    QPoly discriminant() const
    {
        QPoly b2 = a2 * mpq_class(4), b4 = a4 * mpq_class(2), b6 = a6 * mpq_class(4);
        QPoly b8 = a2 * a6 * mpq_class(4) - a4 * a4;
        return -(b2 * b2 * b8) - b4.pow(3) * mpq_class(8) - b6 * b6 * mpq_class(27) + b2 * b4 * b6 * mpq_class(9);
    }
};

} // namespace octic
