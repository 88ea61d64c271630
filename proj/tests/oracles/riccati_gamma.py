#!/usr/bin/env python3
"""Independent Riccati expansion with sympy.

Writes golden Gamma coefficients for the AKNS and Kaup-Newell x-Riccati
equations in the text format the C++ parser reads.  Run once and commit the
output; the C++ tests never call this script.

AKNS:  G_x = 2i lam G + r - q G^2,      G = sum_{n>=1} g_n lam^-n,   Gamma_n = (2i)^n g_n
KN:    G_x = lam r + 2i lam^2 G - lam q G^2,  G = sum_{n>=0} g_n lam^-(2n+1),
       Gamma_n = (2i)^(2n+1) g_n
"""
import sys
from pathlib import Path

import sympy as sp

x = sp.Symbol("x")
q = sp.Function("q")(x)
r = sp.Function("r")(x)


def akns(N):
    g = {1: -r / (2 * sp.I)}
    for n in range(1, N):
        conv = sum(g[j] * g[n - j] for j in range(1, n))
        g[n + 1] = sp.expand((sp.diff(g[n], x) + q * conv) / (2 * sp.I))
    return [sp.expand((2 * sp.I) ** n * g[n]) for n in range(1, N + 1)]


def kn(N):
    # odd coefficients c_k of lam^-k
    c = {1: -r / (2 * sp.I)}
    k = 1
    while k < 2 * N + 1:
        conv = sum(c.get(j, 0) * c.get(k + 1 - j, 0) for j in range(1, k + 1))
        c[k + 2] = sp.expand((sp.diff(c[k], x) + q * conv) / (2 * sp.I))
        k += 2
    return [sp.expand((2 * sp.I) ** (2 * n + 1) * c[2 * n + 1]) for n in range(N + 1)]


def factor_name(f):
    if isinstance(f, sp.Derivative):
        base = f.expr.func.__name__
        order = sum(c for _, c in f.variable_count)
        return f"{base}_x{order}"
    return f.func.__name__


def coeff_text(c):
    re, im = sp.re(c), sp.im(c)
    parts = []
    if re != 0:
        parts.append(str(re))
    if im != 0:
        s = str(im)
        if parts and not s.startswith("-"):
            s = "+" + s
        parts.append(s + "i")
    return "".join(parts)


def poly_text(e):
    if e == 0:
        return "0"
    terms = []
    for t in sp.Add.make_args(e):
        coeff, rest = t.as_coeff_Mul()
        factors = []
        for f in sp.Mul.make_args(rest):
            if f.is_number:
                coeff *= f
                continue
            b, p = f.as_base_exp()
            factors.append(factor_name(b) + (f"^{p}" if p != 1 else ""))
        factors.sort()
        terms.append("(" + coeff_text(sp.nsimplify(coeff)) + ")" + "".join("*" + f for f in factors))
    terms.sort()
    return " + ".join(terms)


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "golden"
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "akns_gamma.txt", "w") as fh:
        for n, g in enumerate(akns(6), start=1):
            fh.write(f"Gamma_{n} = {poly_text(g)}\n")
    with open(out / "kn_gamma.txt", "w") as fh:
        for n, g in enumerate(kn(4)):
            fh.write(f"Gamma_{n} = {poly_text(g)}\n")


if __name__ == "__main__":
    main()
