"""Independent sympy evaluation of the generalized subset sum.

Writes tests/golden/u_gen_<n>_<m>_<k>.txt, one polynomial per file in the
"c*z^i*w^j*a^k*b^l" term syntax the C++ parser accepts.
"""
import itertools
import pathlib
import sys

import sympy as sp

z, w, a, b = sp.symbols("z w a b")


def param_product(sym, i):
    # prod over j <= i with j = i (mod 2) of (sym + (j-1)^2)
    return sp.Mul(*[sym + (j - 1) ** 2 for j in range(i % 2 or 2, i + 1, 2)]) if i > 0 else sp.Integer(1)


def u_gen(n, m, k):
    ground = list(range(1, n + 1)) + [n + 2 * j for j in range(1, m + 1)]
    base = set(range(1, k + 1))
    rest = [x for x in ground if x not in base]
    total = sp.Integer(0)
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            members = base | set(extra)
            outside = [x for x in ground if x not in members]
            d = sp.Integer(1)
            for i in members:
                for j in outside:
                    d *= sp.Rational(abs(i + j), abs(i - j))
            c = sum((i - n) // 2 for i in members if i > n)
            pre = sp.Integer(1)
            for i in extra:
                for j in base:
                    pre *= sp.Rational(i + j, j - i)
            term = (-1) ** c * d * pre
            term *= sp.Mul(*[param_product(a, i) for i in extra]) * sp.Mul(*[param_product(b, i) for i in outside])
            term *= z ** sum(extra) * w ** sum(outside)
            total += term
    return sp.Poly(sp.expand(total), z, w, a, b)


def render(poly):
    if poly.is_zero:
        return "0"
    parts = []
    for exps, coeff in poly.terms():
        s = str(sp.Rational(coeff))
        for name, e in zip("zwab", exps):
            if e:
                s += f"*{name}" + (f"^{e}" if e > 1 else "")
        parts.append(s)
    return " + ".join(parts).replace("+ -", "- ")


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parents[1] / "golden")
    out.mkdir(parents=True, exist_ok=True)
    for n in range(0, 7):
        for m in range(0, 4):
            if n + 2 * m > 6:
                continue
            for k in range(0, n + 1):
                (out / f"u_gen_{n}_{m}_{k}.txt").write_text(render(u_gen(n, m, k)) + "\n")


if __name__ == "__main__":
    main()
