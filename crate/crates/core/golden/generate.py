"""Regenerate the golden tables with exact Python fractions.

Run from this directory: python3 generate.py
"""
import json
from fractions import Fraction as F


def poch(x, k):
    out = F(1)
    for i in range(k):
        out *= x + i
    return out


def fmt(x):
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ex1_l(g, n, k):
    if k == 2:
        return F(1, 2) * poch(F(n + 1), 2)
    if k == 1:
        return -(n + 1) * (2 * g + 2 * n + 3)
    if k == 0:
        return (24 * n * n + 4 * (10 * g + 11) * n + (2 * g + 1) * (6 * g + 13)) / 8
    if k == -1:
        return -F(1, 2) * (2 * g + 2 * n - 1) * (2 * g + 2 * n + 3)
    if k == -2:
        return F(1, 8) * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3)
    raise ValueError(k)


def ex1_j(g, h, n, k):
    a, b = g + h, g - h
    if k == 2:
        return (poch(F(n + 1), 2) * (b + 2) * poch(a + n, 2) * (2 * h + 2 * n - 3)
                / (poch(a + 2 * n, 4) * (2 * h + 2 * n + 1)))
    if k == 1:
        return ((n + 1) * (a - 1) * (a + n) * (2 * g + 2 * n + 3) * (2 * h + 2 * n - 3)
                / (poch(a + 2 * n - 1, 3) * (a + 2 * n + 3)))
    if k == 0:
        s = 2 * n * (a + n)
        inner = (-b * (b + 4) * (s - (a - 2) * (a - 1))
                 + (a + 2 * n - 1) * (a + 2 * n + 1) * (s - (a - 2) * (2 * a - 1)))
        return (b + 2) / (4 * poch(a + 2 * n - 2, 2) * poch(a + 2 * n + 1, 2)) * inner
    if k == -1:
        return ((a - 1) * (2 * g + 2 * n - 1) * (2 * g + 2 * n + 3) * poch(h + n - F(3, 2), 2)
                / ((a + 2 * n - 3) * poch(a + 2 * n - 1, 3)))
    if k == -2:
        return ((b + 2) * (2 * g + 2 * n - 3) * (2 * g + 2 * n + 3) * poch(h + n - F(3, 2), 2)
                / (4 * poch(a + 2 * n - 3, 4)))
    raise ValueError(k)


def table(fn, n_max):
    return [[fmt(fn(n, k)) if n + k >= 0 else "0" for k in range(-2, 3)] for n in range(n_max + 1)]


def quartic(g):
    """Coefficients (ascending) of -2 Xi for Laguerre D = {1^I, 2^II}."""
    c = F(5, 2)
    return [poch(g - c, 4), 2 * poch(g - c, 2) * (2 * g + 1), (g - c) * (6 * g - 1), 2 * (2 * g - 3), F(1)]


def mul(p, q):
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def lin(r):
    return [F(-r), F(1)]


def main():
    lag = []
    for g in [F(2), F(7, 3), F(9, 4)]:
        lag.append({"g": fmt(g), "rows": table(lambda n, k: ex1_l(g, n, k), 12)})
    jac = []
    for g, h in [(F(7, 3), F(9, 4)), (F(3), F(5, 2)), (F(13, 5), F(7, 2))]:
        jac.append({"g": fmt(g), "h": fmt(h), "rows": table(lambda n, k: ex1_j(g, h, n, k), 10)})
    eta = [F(0), F(1)]
    factored = {
        "-1/2": mul(mul(mul(eta, eta), lin(2)), lin(6)),
        "3/2": mul(mul(eta, eta), [F(-8), F(0), F(1)]),
        "5/2": mul(mul(mul(eta, eta), eta), lin(-4)),
        "-13/2": mul(mul(mul(lin(6), lin(6)), lin(6)), lin(14)),
    }
    degen = []
    for gs, fac in factored.items():
        q = quartic(F(gs))
        assert q == fac, gs
        degen.append({"g": gs, "minus_two_xi": [fmt(x) for x in q]})
    out = {
        "laguerre_one_seed": {"k_range": [-2, 2], "cases": lag},
        "jacobi_one_seed": {"k_range": [-2, 2], "cases": jac},
        "laguerre_two_seed_degenerate": degen,
    }
    with open("examples.json", "w") as fh:
        json.dump(out, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
