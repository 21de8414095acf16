"""Derive the manufactured-solution data and write src/charsbp/_mms_generated.py.

The solution is written in Cartesian form (r sin(theta) = x2,
r cos(theta) = x1), so no atan2 branch enters the generated code.
Requires sympy (optional ``derive`` extra).
"""
from __future__ import annotations

from pathlib import Path

import sympy as sp

x1, x2, t = sp.symbols("x1 x2 t", real=True)
r = sp.sqrt(x1**2 + x2**2)
E = sp.E
K = E / (1 + 2 * E)  # traction continuity at r = 1 fixes this constant

SOLUTIONS = {
    "in": sp.sin(t) * K * (2 - sp.exp(-r**2)) * x2,
    "out": sp.sin(t) * ((r - 1) ** 2 * x1 / r + (r - 1) * x2 / r),
}


def fields(u):
    ux1, ux2 = sp.diff(u, x1), sp.diff(u, x2)
    # rho = 1, C = identity
    f = sp.diff(u, t, 2) - (sp.diff(ux1, x1) + sp.diff(ux2, x2))
    # every field is sin(t) or cos(t) times a spatial profile
    fs = sp.simplify(f / sp.sin(t))
    assert not fs.has(t)
    return {"u": u, "ut": sp.diff(u, t), "ux1": ux1, "ux2": ux2, "f": f,
            "fs": fs, "us": sp.simplify(u / sp.sin(t))}


def emit() -> str:
    out = ['"""Generated by scripts/derive_mms.py; do not edit."""',
           "import numpy as np", "", f"K = {sp.N(K, 20)}", ""]
    printer = sp.printing.numpy.NumPyPrinter({"fully_qualified_modules": True})
    for side, u in SOLUTIONS.items():
        for name, expr in fields(u).items():
            code = printer.doprint(expr).replace("numpy.", "np.")
            out.append(f"def {name}_{side}(x1, x2, t):")
            out.append(f"    return {code} + 0 * x1")
            out.append("")
    return "\n".join(out)


def main() -> None:
    path = Path(__file__).resolve().parents[1] / "src" / "charsbp" / "_mms_generated.py"
    path.write_text(emit())
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
