"""Emit src/essransac/solvers/_constraint_matrix.py.

The five-point solver writes the essential matrix as
E = x*X + y*Y + z*Z + W, where X, Y, Z, W are the four null-space basis rows
(row-major 3x3).  Substituting this into det(E) = 0 and
2 E E^T E - trace(E E^T) E = 0 gives ten cubic polynomials in (x, y, z).
This script expands them with sympy in two stages (quadratic products first,
then cubic), runs common-subexpression elimination and writes the resulting
straight-line arithmetic as Python source.

Run from the repository root:

    python tools/gen_constraint_matrix.py
"""

import pathlib
import sys

import sympy as sp

MONOMIALS = [
    "x**3", "y**3", "x**2*y", "x*y**2", "x**2*z", "x**2", "y**2*z", "y**2",
    "x*y*z", "x*y", "x*z**2", "x*z", "x", "y*z**2", "y*z", "y", "z**3",
    "z**2", "z", "1",
]

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "essransac" / "solvers" / "_constraint_matrix.py"


def _linear_entries(x, y, z):
    X = sp.symbols("x0:9")
    Y = sp.symbols("y0:9")
    Z = sp.symbols("z0:9")
    W = sp.symbols("w0:9")
    E = sp.Matrix(3, 3, [x * X[k] + y * Y[k] + z * Z[k] + W[k] for k in range(9)])
    return E


def _coeffs(expr, x, y, z, monos):
    p = sp.Poly(sp.expand(expr), x, y, z)
    table = dict(zip(p.monoms(), p.coeffs()))
    out = []
    for m in monos:
        mp = sp.Poly(sp.sympify(m), x, y, z).monoms()[0]
        out.append(table.get(mp, sp.Integer(0)))
    return out


def generate():
    x, y, z = sp.symbols("x y z")
    E = _linear_entries(x, y, z)

    quad_monos = ["x**2", "x*y", "y**2", "x*z", "y*z", "z**2", "x", "y", "z", "1"]
    quad_mono_polys = [sp.sympify(m) for m in quad_monos]

    assignments = []

    # Stage 1: quadratic products.  EE^T is symmetric; the determinant uses
    # the 2x2 minors of rows 1 and 2.
    def quad_symbol(name, expr):
        cs = _coeffs(expr, x, y, z, quad_monos)
        syms = sp.symbols(f"{name}_0:{len(quad_monos)}")
        for s, c in zip(syms, cs):
            assignments.append((s, c))
        return sum(s * m for s, m in zip(syms, quad_mono_polys))

    EEt = sp.zeros(3, 3)
    for i in range(3):
        for j in range(i, 3):
            q = quad_symbol(f"p{i}{j}", sum(E[i, k] * E[j, k] for k in range(3)))
            EEt[i, j] = q
            EEt[j, i] = q
    minors = [
        quad_symbol("m0", E[1, 1] * E[2, 2] - E[1, 2] * E[2, 1]),
        quad_symbol("m1", E[1, 2] * E[2, 0] - E[1, 0] * E[2, 2]),
        quad_symbol("m2", E[1, 0] * E[2, 1] - E[1, 1] * E[2, 0]),
    ]

    # Stage 2: cubic constraints expressed in the quadratic coefficients.
    rows = [sum(E[0, k] * minors[k] for k in range(3))]
    trace = EEt[0, 0] + EEt[1, 1] + EEt[2, 2]
    for i in range(3):
        for j in range(3):
            rows.append(2 * sum(EEt[i, k] * E[k, j] for k in range(3)) - trace * E[i, j])

    stage1 = list(assignments)
    entries = []
    for r in rows:
        entries.extend(_coeffs(r, x, y, z, MONOMIALS))

    stage1_syms = [s for s, _ in stage1]
    stage1_exprs = [e for _, e in stage1]
    repl1, red1 = sp.cse(stage1_exprs, symbols=sp.numbered_symbols("a"))
    repl2, red2 = sp.cse(entries, symbols=sp.numbered_symbols("b"))
    return stage1_syms, repl1, red1, repl2, red2


def emit():
    stage1_syms, repl1, red1, repl2, red2 = generate()
    lines = [
        '"""Machine-generated by tools/gen_constraint_matrix.py.  Do not edit."""',
        "",
        "import numpy as np",
        "",
        "",
        "def constraint_matrix(basis):",
        '    """Return the 10x20 cubic constraint matrix for a 4x9 null-space basis."""',
        "    X, Y, Z, W = (list(map(float, row)) for row in basis)",
        "    x0, x1, x2, x3, x4, x5, x6, x7, x8 = X",
        "    y0, y1, y2, y3, y4, y5, y6, y7, y8 = Y",
        "    z0, z1, z2, z3, z4, z5, z6, z7, z8 = Z",
        "    w0, w1, w2, w3, w4, w5, w6, w7, w8 = W",
    ]
    for s, e in repl1:
        lines.append(f"    {s} = {sp.pycode(e)}")
    for s, e in zip(stage1_syms, red1):
        lines.append(f"    {s} = {sp.pycode(e)}")
    for s, e in repl2:
        lines.append(f"    {s} = {sp.pycode(e)}")
    lines.append("    M = np.empty((10, 20))")
    for idx, e in enumerate(red2):
        r, c = divmod(idx, 20)
        lines.append(f"    M[{r}, {c}] = {sp.pycode(e)}")
    lines.append("    return M")
    lines.append("")
    OUT.write_text("\n".join(lines))
    print(f"wrote {OUT} ({len(lines)} lines)", file=sys.stderr)


if __name__ == "__main__":
    emit()
