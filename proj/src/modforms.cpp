#include "octic/modforms.hpp"

#include "octic/gf.hpp"
#include "octic/lefschetz.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace octic {

mpq_class QuadIrr::rational() const
{
    if (!is_rational())
        throw std::domain_error("coefficient " + str() + " is irrational");
    return m == 1 ? x + y : x;
}

QuadIrr QuadIrr::square() const
{
    if (m == 1)
        return {(x + y) * (x + y), 0, 1};
    return {x * x + y * y * m, 2 * x * y, m};
}

bool QuadIrr::within(const mpq_class& bound2) const
{
    if (is_rational()) {
        mpq_class r = rational();
        return r * r <= bound2;
    }
    if (m < 0) // complex conjugates share the absolute value
        return x * x + y * y * (-m) <= bound2;
    // (|x| + |y| sqrt m)^2 <= B^2  iff  2|x||y| sqrt m <= B^2 - x^2 - m y^2
    mpq_class s2 = x * x, t2 = y * y * m;
    mpq_class rest = bound2 - s2 - t2;
    if (rest < 0)
        return false;
    return 4 * s2 * t2 <= rest * rest;
}

bool QuadIrr::operator==(const QuadIrr& o) const
{
    if (is_rational() && o.is_rational())
        return rational() == o.rational();
    return x == o.x && y == o.y && m == o.m;
}

std::string QuadIrr::str() const
{
    if (is_rational())
        return rational().get_str();
    std::string s;
    if (x != 0)
        s = x.get_str() + (y > 0 ? "+" : "");
    return s + y.get_str() + "*sqrt(" + std::to_string(m) + ")";
}

const QuadIrr& NewformRecord::at(int64_t p) const
{
    auto it = coeffs.find(p);
    if (it == coeffs.end())
        throw std::out_of_range(label + ": no coefficient at p = " + std::to_string(p));
    return it->second;
}

int64_t NewformRecord::a(int64_t p) const
{
    mpq_class v = at(p).rational();
    if (v.get_den() != 1)
        throw std::domain_error(label + ": non-integral coefficient");
    return v.get_num().get_si();
}

TraceSeq NewformRecord::integer_sequence() const
{
    TraceSeq s;
    for (auto& [p, v] : coeffs)
        if (v.is_rational() && v.rational().get_den() == 1)
            s[p] = v.rational().get_num().get_si();
    return s;
}

bool weil_ok(const NewformRecord& r, int64_t p)
{
    mpq_class b2 = 4;
    for (int i = 0; i < r.weight - 1; ++i)
        b2 *= p;
    return r.at(p).within(b2);
}

namespace {

mpq_class parse_rational(const std::string& s, int line)
{
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::runtime_error("newforms line " + std::to_string(line) + ": bad rational '" + s + "'");
    v.canonicalize();
    return v;
}

} // namespace

NewformTable parse_newforms(const std::string& text)
{
    NewformTable t;
    NewformRecord* cur = nullptr;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;)
            tok.push_back(w);
        if (tok.empty())
            continue;
        if (!std::isdigit(static_cast<unsigned char>(tok[0][0]))) {
            if (tok.size() != 5)
                throw std::runtime_error("newforms line " + std::to_string(ln) + ": header needs 5 fields");
            NewformRecord r;
            r.label = tok[0];
            try {
                r.weight = std::stoi(tok[1]);
                r.level = std::stoi(tok[2]);
                r.nebentypus = std::stoll(tok[3]);
                r.radicand = std::stoll(tok[4]);
            } catch (const std::exception&) {
                throw std::runtime_error("newforms line " + std::to_string(ln) + ": bad header");
            }
            if (t.count(r.label))
                throw std::runtime_error("newforms: duplicate label " + r.label);
            cur = &(t[r.label] = r);
            continue;
        }
        if (!cur)
            throw std::runtime_error("newforms line " + std::to_string(ln) + ": data before header");
        if (tok.size() != 3 && tok.size() != 4)
            throw std::runtime_error("newforms line " + std::to_string(ln) + ": expected 'p x y [m]'");
        int64_t p = std::stoll(tok[0]);
        if (!is_prime(static_cast<uint64_t>(p)))
            throw std::runtime_error("newforms line " + std::to_string(ln) + ": " + tok[0] + " is not prime");
        QuadIrr v{parse_rational(tok[1], ln), parse_rational(tok[2], ln),
                  tok.size() == 4 ? std::stoll(tok[3]) : cur->radicand};
        if (cur->coeffs.count(p))
            throw std::runtime_error("newforms line " + std::to_string(ln) + ": repeated prime");
        cur->coeffs[p] = v;
        if (!weil_ok(*cur, p))
            throw std::runtime_error("newforms: " + cur->label + " violates the Weil bound at p = " + tok[0]);
    }
    return t;
}

NewformTable load_newforms(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot read newform file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_newforms(ss.str());
}

std::string default_newform_path() { return std::string(OCTIC_DATA_DIR) + "/newforms.txt"; }

mpq_class trace_sym2(const NewformRecord& r, int64_t p, CharConvention c)
{
    return r.at(p).square().rational() - r.eps(p, c) * mpq_class(static_cast<long>(p));
}

mpq_class trace_fp2(const NewformRecord& r, int64_t p)
{
    mpz_class pk = 1;
    for (int i = 0; i < r.weight - 1; ++i)
        pk *= p;
    return r.at(p).square().rational() - 2 * r.eps(p) * mpq_class(pk);
}

DecompositionSpec spec_thm_x()
{
    return {"thmX",
            {{1, "f120", 0, 1, false},
             {32, "f120E", 1, 1, false},
             {18, "f120E", 1, -1, false},
             {36, "f24B", 1, 1, false},
             {18, "f24B", 1, -1, false},
             {27, "f15C", 1, 1, false},
             {18, "f15C", 1, -1, false}},
            300};
}

DecompositionSpec spec_thm_y()
{
    return {"thmY", {{1, "f120", 0, 1, false}, {5, "f120E", 1, 1, false}, {9, "f24B", 1, 1, false}}, 30};
}

DecompositionSpec spec_thm_s()
{
    return {"thmS", {{5, "f15", 0, 1, false}, {18, "f1200", 0, -15, true}, {12, "f1200", 0, 15, true}}, 100};
}

int dimension_audit(const DecompositionSpec& s)
{
    int d = 0;
    for (auto& pc : s.pieces)
        d += pc.mult * (pc.sym2 ? 3 : 2);
    return d;
}

namespace {

const NewformRecord& form(const NewformTable& t, const std::string& label)
{
    auto it = t.find(label);
    if (it == t.end())
        throw std::out_of_range("no newform " + label);
    return it->second;
}

} // namespace

mpq_class assemble_trace(const DecompositionSpec& s, const NewformTable& t, int64_t p, CharConvention c)
{
    mpq_class total = 0;
    for (auto& pc : s.pieces) {
        const NewformRecord& r = form(t, pc.label);
        mpq_class v = pc.sym2 ? trace_sym2(r, p, c) : r.at(p).rational();
        for (int i = 0; i < pc.tate; ++i)
            v *= p;
        total += pc.mult * (pc.char_d == 1 ? 1 : chi(pc.char_d, p, c)) * v;
    }
    return total;
}

mpq_class assemble_trace_fp2(const DecompositionSpec& s, const NewformTable& t, int64_t p, CharConvention)
{
    mpq_class total = 0;
    for (auto& pc : s.pieces) {
        const NewformRecord& r = form(t, pc.label);
        mpq_class v;
        if (pc.sym2) {
            mpq_class f2 = trace_fp2(r, p);
            v = f2 * f2 - mpq_class(static_cast<long>(p * p));
        } else {
            v = trace_fp2(r, p);
        }
        for (int i = 0; i < 2 * pc.tate; ++i)
            v *= p;
        total += pc.mult * v; // chi(p)^2 = 1
    }
    return total;
}

F120Derivation derive_f120(int64_t p, const std::array<uint64_t, 4>& counts, const NewformTable& t)
{
    if (p == 2 || p == 3 || p == 5)
        throw std::domain_error("derive_f120: bad prime " + std::to_string(p));
    XTraces x = extract_x_traces(p, counts);
    return {p, x.a120, form(t, "f120").a(p)};
}

} // namespace octic
