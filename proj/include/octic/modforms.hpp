#pragma once

#include "octic/galois.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octic {

// x + y sqrt(m), m squarefree
struct QuadIrr {
    mpq_class x = 0, y = 0;
    int64_t m = 1;

    bool is_rational() const { return y == 0 || m == 1; }
    mpq_class rational() const; // throws unless rational
    QuadIrr square() const;
    // |x +- y sqrt m|^2 maximized over both conjugates is <= bound2 (exact)
    bool within(const mpq_class& bound2) const;
    bool operator==(const QuadIrr& o) const;
    std::string str() const;
};

struct NewformRecord {
    std::string label;
    int weight = 2;
    int level = 1;
    int64_t nebentypus = 1; // p -> (d/p); 1 is trivial
    int64_t radicand = 1;
    std::map<int64_t, QuadIrr> coeffs;

    int eps(int64_t p, CharConvention c = CharConvention::Kronecker) const
    {
        return nebentypus == 1 ? 1 : chi(nebentypus, p, c);
    }
    const QuadIrr& at(int64_t p) const;
    bool has(int64_t p) const { return coeffs.count(p) != 0; }
    // integer coefficient, throws when irrational
    int64_t a(int64_t p) const;
    TraceSeq integer_sequence() const;
};

using NewformTable = std::map<std::string, NewformRecord>;

NewformTable load_newforms(const std::string& path);
NewformTable parse_newforms(const std::string& text);
std::string default_newform_path();
// |a_p| <= 2 p^((k-1)/2) for both conjugates
bool weil_ok(const NewformRecord& r, int64_t p);

// a_p^2 - eps(p) p
mpq_class trace_sym2(const NewformRecord& r, int64_t p, CharConvention c = CharConvention::Kronecker);
// a_p^2 - 2 eps(p) p^(k-1)
mpq_class trace_fp2(const NewformRecord& r, int64_t p);

struct Piece {
    int mult = 1;
    std::string label;
    int tate = 0;         // Tate twist (-tate)
    int64_t char_d = 1;   // quadratic character twist, 1 trivial
    bool sym2 = false;
};

struct DecompositionSpec {
    std::string name;
    std::vector<Piece> pieces;
    int declared_dimension = 0;
};

DecompositionSpec spec_thm_x();
DecompositionSpec spec_thm_y();
DecompositionSpec spec_thm_s();

int dimension_audit(const DecompositionSpec& s);
mpq_class assemble_trace(const DecompositionSpec& s, const NewformTable& t, int64_t p,
                         CharConvention c = CharConvention::Kronecker);
mpq_class assemble_trace_fp2(const DecompositionSpec& s, const NewformTable& t, int64_t p,
                             CharConvention c = CharConvention::Kronecker);

struct F120Derivation {
    int64_t p = 0;
    int64_t derived = 0;
    int64_t table = 0;
    bool match() const { return derived == table; }
};
// a120 at p = 1 mod 4 from the counts of X and its three twists
F120Derivation derive_f120(int64_t p, const std::array<uint64_t, 4>& counts, const NewformTable& t);

} // namespace octic
