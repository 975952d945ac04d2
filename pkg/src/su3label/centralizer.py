"""Structure constants of the specialised centraliser and its defining relations.

The constants are W(E6)-invariant polynomials in m; they are evaluated here
by brute-force averaging of one monomial per degree over all 51840 group
elements, exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np
import sympy

from . import qmat
from .e6 import averaging_kernels
from .errors import DimensionMismatch, Underdetermined

F = Fraction


class InvariantValues(NamedTuple):
    p2: Fraction
    p5: Fraction
    p6: Fraction
    p8: Fraction
    p9: Fraction
    p12: Fraction


@dataclass(frozen=True)
class StructureConstants:
    a2: Fraction
    a5: Fraction
    a6: Fraction
    a8: Fraction
    a9: Fraction
    a12: Fraction

    @property
    def x(self) -> dict:
        return {
            "x1": 6 * self.a5 + 2 * self.a9,
            "x2": -2 * self.a6 - 2 * self.a8,
            "x3": 6 * self.a2 + self.a6,
            "x4": -self.a5,
            "x5": 8 * self.a2 - 24,
            "x7": -2 * self.a2 + 12,
        }

    def replace(self, **kw) -> "StructureConstants":
        d = dict(self.__dict__)
        d.update({k: F(v) for k, v in kw.items()})
        return StructureConstants(**d)


def _as_int_vector(m):
    fr = [F(x) for x in m]
    den = math.lcm(*(x.denominator for x in fr))
    return [int(x * den) for x in fr], den


@lru_cache(maxsize=4096)
def _invariants(mi: tuple, den: int) -> InvariantValues:
    K = averaging_kernels()
    T = np.einsum("sji,j->si", K, np.array(mi, dtype=np.int64)).astype(object)  # 3*den*m' per element
    a, b, c, d, e, f = (T[:, i] for i in range(6))
    N = T.shape[0]

    def avg(col, deg):
        return F(int(col.sum()), N * (3 * den) ** deg)

    abc = a * b * c
    full = abc * d * e * f
    return InvariantValues(
        F(3, 2) * avg(a * a, 2),
        F(8, 3) * avg(c * c * d * e * f, 5),
        10 * avg(full, 6),
        F(5, 3) * avg(a * c * full, 8),
        F(40, 27) * avg(abc * full, 9),
        F(20, 3) * avg(full * full, 12),
    )


def invariant_values(m) -> InvariantValues:
    mi, den = _as_int_vector(m)
    return _invariants(tuple(mi), den)


def constants_from_invariants(p: InvariantValues) -> StructureConstants:
    p2, p5, p6, p8, p9, p12 = p
    a2 = p2 - 3
    a5 = -p5
    a6 = p6 + p2 ** 3 / 9 + F(2, 3) * p2 ** 2 - F(3, 2) * p2 + 1
    a8 = -p8 + p2 ** 4 / 54 + p2 * p6 / 12 + p2 ** 3 / 18 + p6 / 2 + p2 ** 2 / 6 - p2 / 4 + F(1, 8)
    a9 = -p9 - p5 * (p2 ** 2 / 27 + p2 / 3 - F(1, 4))
    a12 = (-p12 + F(35, 12) * p6 ** 2 + p2 ** 6 / 36 + F(17, 72) * p2 ** 3 * p6 - p2 ** 2 * p8 / 18
           - F(7, 18) * p2 * p5 ** 2 + p2 ** 5 / 162 - p2 * p8 / 3 + p2 ** 2 * p6 / 36 - p5 ** 2 / 4
           - F(13, 108) * p2 ** 4 + F(13, 2) * p8 - F(13, 24) * p2 * p6 - F(19, 54) * p2 ** 3
           - 3 * p6 - F(11, 12) * p2 ** 2 + F(11, 8) * p2 - F(11, 16))
    return StructureConstants(a2, a5, a6, a8, a9, a12)


def structure_constants(m) -> StructureConstants:
    return constants_from_invariants(invariant_values(m))


class RelationDefects(NamedTuple):
    b: Fraction
    c: Fraction
    d: Fraction

    @property
    def ok(self):
        return self.b == 0 and self.c == 0 and self.d == 0


def relation_residuals(X, Y, c: StructureConstants):
    """Exact residual matrices of the three defining relations."""
    X, Y = qmat.to_frac(X), qmat.to_frac(Y)
    if qmat.shape(X) != qmat.shape(Y) or len(X) != len(X[0]):
        raise DimensionMismatch("X and Y must be square of the same size")
    n = len(X)
    I = qmat.eye(n)
    Z = qmat.comm(X, Y)
    X2, Y2 = qmat.mul(X, X), qmat.mul(Y, Y)
    XY = qmat.acomm(X, Y)
    rb = qmat.sub(qmat.comm(X, Z), qmat.add(qmat.scale(-6, Y2), qmat.scale(c.a2, X2),
                                            qmat.scale(c.a5, X), qmat.scale(c.a8, I)))
    rc = qmat.sub(qmat.comm(Y, Z), qmat.add(qmat.scale(-2, qmat.mul(X2, X)), qmat.scale(-c.a2, XY),
                                            qmat.scale(-c.a5, Y), qmat.scale(c.a6, X), qmat.scale(c.a9, I)))
    x = c.x
    lhs = qmat.add(qmat.scale(x["x1"], X), qmat.scale(x["x2"], Y), qmat.scale(x["x3"], X2),
                   qmat.scale(x["x4"], XY), qmat.scale(x["x5"], Y2),
                   qmat.scale(x["x7"], qmat.chain(X, Y, X)), qmat.scale(-1, qmat.mul(X2, X2)),
                   qmat.scale(4, qmat.mul(Y2, Y)), qmat.mul(Z, Z))
    rd = qmat.sub(lhs, qmat.scale(c.a12, I))
    return rb, rc, rd


def special_relation_lhs(X, Y, c: StructureConstants):
    """Left side of the degree-12 relation (should be central)."""
    rd = relation_residuals(X, Y, c)[2]
    return qmat.add(rd, qmat.scale(c.a12, qmat.eye(len(X))))


def verify_relations(X, Y, c: StructureConstants) -> RelationDefects:
    return RelationDefects(*(qmat.max_abs(r) for r in relation_residuals(X, Y, c)))


FIT_NAMES = ("a2", "a5", "a6", "a8", "a9")


def fit_constants_from_rep(X, Y) -> dict:
    """Solve the two commutation relations entrywise for (a2, a5, a6, a8, a9).

    Returns only the constants pinned down by the equations.
    """
    X, Y = qmat.to_frac(X), qmat.to_frac(Y)
    n = len(X)
    if n < 2:
        raise Underdetermined("a 1x1 representation has no commutator content")
    I = qmat.eye(n)
    Z = qmat.comm(X, Y)
    X2, Y2 = qmat.mul(X, X), qmat.mul(Y, Y)
    XY = qmat.acomm(X, Y)
    lb = qmat.add(qmat.comm(X, Z), qmat.scale(6, Y2))         # = a2 X^2 + a5 X + a8 I
    lc = qmat.add(qmat.comm(Y, Z), qmat.scale(2, qmat.mul(X2, X)))  # = -a2{X,Y} - a5 Y + a6 X + a9 I
    zero = qmat.zeros(n)
    rows, rhs = [], []
    for lhs, basis in ((lb, (X2, X, zero, I, zero)), (lc, (qmat.scale(-1, XY), qmat.scale(-1, Y), X, zero, I))):
        for i in range(n):
            for j in range(n):
                rows.append([bm[i][j] for bm in basis])
                rhs.append(lhs[i][j])
    A = sympy.Matrix(rows)
    b = sympy.Matrix(rhs)
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError as exc:
        raise Underdetermined("relations inconsistent for these matrices") from exc
    out = {}
    for name, expr in zip(FIT_NAMES, sol):
        if not expr.free_symbols:
            out[name] = F(int(expr.p), int(expr.q))
    if not out:
        raise Underdetermined("no constant is determined by this representation")
    return out
