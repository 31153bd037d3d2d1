#!/usr/bin/env python3
# Regenerates data/newforms.txt from PARI/GP (pip install cypari).
# Offline helper only; the C++ code never calls it.
import math
import sys
from fractions import Fraction

import cypari

pari = cypari.pari
pari.allocatemem(2 * 10**9)

PMAX = 100

# (label, weight, level, pari character, nebentypus as d of chi_d, eigenbasis index)
FORMS = [
    ("f120", 4, 120, None, 1, 2),
    ("f120E", 2, 120, None, 1, 0),
    ("f24B", 2, 24, None, 1, 0),
    ("f15C", 2, 15, None, 1, 0),
    ("f15", 3, 15, -15, -15, 1),
    ("f1200", 2, 1200, 12, 3, 12),
]


def primes(n):
    return [int(p) for p in pari.primes([2, n])]


def squarefree_part(n):
    sign = -1 if n < 0 else 1
    f = pari.factor(abs(n))
    m = 1
    for i in range(len(f[0])):
        if int(f[1][i]) % 2:
            m *= int(f[0][i])
    return sign * m


def frac(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def split_coeff(c, emb):
    # c is an element of a field where c or c^2 is rational
    c = pari.simplify(pari.lift(c))
    if str(pari.type(c)) in ("t_INT", "t_FRAC"):
        return Fraction(str(c)), Fraction(0), 1
    sq = pari(f"simplify(lift(Mod({c},{emb['pol']})^2))")
    if str(pari.type(sq)) not in ("t_INT", "t_FRAC"):
        return None
    r = Fraction(str(sq))
    num = r.numerator * r.denominator
    m = squarefree_part(num)
    y2 = r / m
    y = Fraction(math.isqrt(y2.numerator), math.isqrt(y2.denominator))
    val = complex(pari(f"subst({c},y,{emb['root']})"))
    root_m = complex(pari(f"sqrt({m})"))
    if (val / (y * root_m)).real < 0:
        y = -y
    return Fraction(0), y, m


def form_coeffs(level, weight, chi, idx):
    spec = f"[{level},{weight}{',' + str(chi) if chi is not None else ''}]"
    pari(f"mf=mfinit({spec},0)")
    pari("L=mfeigenbasis(mf)")
    pol = pari(f"mffields(mf)[{idx + 1}]")
    co = pari(f"mfcoefs(L[{idx + 1}],{PMAX})")
    return pol, co


def main(out):
    lines = [
        "# Hecke eigenvalues a_p, p <= 100, from PARI/GP mfeigenbasis (tools/gen_newforms.py).",
        "# header: label weight level nebentypus radicand",
        "# data:   p x y [m]   meaning a_p = x + y*sqrt(m); m defaults to the header radicand",
        "# nebentypus d means the character p -> (d/p); 1 is trivial.",
        "# f1200: coefficient field Q(sqrt(-2),sqrt(-3)); the embedding is fixed so that",
        "#        b_11 = +2*sqrt(6) and b_17 = +2*sqrt(-3). Other inner twists differ by signs.",
    ]
    for label, k, level, chi, neb, idx in FORMS:
        pol, co = form_coeffs(level, k, chi, idx)
        emb = {"pol": pol, "root": None}
        rows = []
        if pari.poldegree(pol) > 1:
            roots = pari.polroots(pol)
            chosen = None
            for r in roots:
                emb["root"] = r
                _, y11, m11 = split_coeff(pari(f"Mod({pari.lift(co[11])},{pol})"), emb)
                _, y17, m17 = split_coeff(pari(f"Mod({pari.lift(co[17])},{pol})"), emb)
                if y11 > 0 and m11 == 6 and y17 > 0 and m17 == -3:
                    chosen = r
                    break
            emb["root"] = chosen
        radicands = set()
        for p in primes(PMAX):
            c = co[p]
            if emb["root"] is not None:
                got = split_coeff(pari(f"Mod({pari.lift(c)},{pol})"), emb)
                if got is None:
                    if level % p:
                        raise SystemExit(f"{label}: a_{p} is not of the form y*sqrt(m)")
                    continue
                x, y, m = got
            else:
                x, y, m = Fraction(str(c)), Fraction(0), 1
            rows.append((p, x, y, m))
            if y != 0:
                radicands.add(m)
        head_m = 1 if not radicands else min(radicands, key=lambda v: (abs(v), v))
        lines.append(f"{label} {k} {level} {neb} {head_m}")
        for p, x, y, m in rows:
            extra = f" {m}" if (y != 0 and m != head_m) else ""
            lines.append(f"{p} {frac(x)} {frac(y)}{extra}")
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/newforms.txt")
