"""Independent sympy oracle for the golden polynomials in tests/data/v1.

The three linear relations are derived here from the functional equation
alone (two ways of reaching f(m+n+p, k)), not copied from the C++ sources.
Run from the repository root:  python3 tests/oracle/gen_golden.py
"""

import pathlib

from sympy import Function, Matrix, Poly, cancel, div, expand, gcd, symbols, together

a, b, bp, rho, p, k, m, n = symbols("a b bp rho p k m n")
f = Function("f")

# Variable order used by the C++ canonical form, smallest first.
ORDER = ["a", "b", "bp", "rho", "p", "k", "m", "n", "c"]


def step(mm, pp, kk):
    """f(mm+pp, kk) from the functional equation."""
    return ((a + pp + kk + bp * mm) * f(pp, kk) - (a + kk + b * mm) * f(pp, mm + kk)) / (pp - mm * rho)


def relation(mm, nn, kk):
    """Direct step by mm+nn minus two steps (nn, then mm), cleared of denominators."""
    direct = step(mm + nn, p, kk)
    inner = step(mm, nn + p, kk)
    # inner is in terms of f(nn+p, .), expand those with one more step by nn.
    two = inner.replace(f, lambda x, y: step(nn, p, y) if expand(x - (nn + p)) == 0 else f(x, y))
    num, _ = together(direct - two).as_numer_denom()
    return expand(num)


def row(expr, cols):
    return [expr.coeff(c) for c in cols]


def canonical(expr):
    if expr == 0:
        return "0"
    gens = symbols(ORDER)
    poly = Poly(expand(expr), *gens)
    terms = poly.terms()
    terms.sort(key=lambda t: (sum(t[0]), tuple(reversed(t[0]))), reverse=True)
    out = []
    for exps, coeff in terms:
        mono = "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(ORDER, exps) if e != 0
        )
        cs = str(coeff)
        if not mono:
            out.append("1" if coeff == 1 else f"({cs})")
        elif coeff == 1:
            out.append(mono)
        else:
            out.append(f"({cs})*{mono}")
    return " + ".join(out)


def main():
    cols = [f(p, k + m), f(p, k), f(p, k - m)]
    rows = [row(relation(mm, nn, kk), cols) for mm, nn, kk in [(m, m, k - m), (-m, -m, k + m), (m, -m, k)]]
    # Each derived relation carries a polynomial content; keep the primitive part.
    normalized = []
    for r in rows:
        g = gcd(gcd(r[0], r[1]), r[2])
        normalized.append([cancel(x / g) for x in r])
    delta = expand(Matrix(normalized).det(method="berkowitz"))
    l1 = bp - b + rho
    l2 = 1 + b - bp - rho
    q, r = div(delta, expand(l1 * l2 * m**6), a, b, bp, rho, p, k, m)
    assert r == 0, "determinant is not divisible by the linear factors and m^6"
    q = expand(q)
    m2 = expand(q.coeff(p, 0).coeff(m, 2))
    p2 = expand(q.coeff(p, 2))
    akp = expand(q.coeff(p, 1).coeff(a, 1))
    assert expand(q - m2 * m**2 - akp * (a + k) * p - p2 * p**2) == 0
    s0 = expand(delta.subs(bp, b))
    s0_quotient, r0 = div(s0, expand((rho - 1) * rho * (1 + rho) * m**6), a, b, rho, p, k, m)
    assert r0 == 0
    return {
        "delta": delta,
        "shape_m2": m2,
        "shape_akp": akp,
        "shape_p2": p2,
        "s0": s0,
        "s0_quotient": expand(s0_quotient),
    }


if __name__ == "__main__":
    out_dir = pathlib.Path(__file__).resolve().parent.parent / "data" / "v1"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, expr in main().items():
        (out_dir / f"{name}.txt").write_text(canonical(expr) + "\n")
        print(name, len(Poly(expr, *symbols(ORDER)).terms()), "terms")
