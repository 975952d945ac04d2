"""The 144 symmetries of the missing label acting on the double magic square.

An element is stored as (col, row, transpose, swap) and acts as
C_col . R_row . T^transpose . S^swap, where S exchanges the two squares,
T transposes both, R_p sends line i to line p[i] and C_p column j to p[j].
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import NonIntegral, NotPhysical
from .tridiag import build_X, build_Y, char_poly
from .weights import ParamSet, as_params, multiplicity

IDP = (0, 1, 2)


def _compose(a, b):
    return tuple(a[b[i]] for i in range(3))


def _inverse(a):
    out = [0] * 3
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _parity(p):
    return sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j]) % 2


@dataclass(frozen=True, order=True)
class SymmetryElement:
    col: tuple = IDP
    row: tuple = IDP
    transpose: bool = False
    swap: bool = False

    def __matmul__(self, other: "SymmetryElement") -> "SymmetryElement":
        # self after other
        c2, r2 = (other.row, other.col) if self.transpose else (other.col, other.row)
        return SymmetryElement(_compose(self.col, c2), _compose(self.row, r2),
                               self.transpose != other.transpose, self.swap != other.swap)

    def inverse(self) -> "SymmetryElement":
        for e in enumerate_group():
            if e @ self == IDENTITY:
                return e
        raise AssertionError("no inverse found")

    def label(self) -> str:
        c = "".join(str(i + 1) for i in self.col)
        r = "".join(str(i + 1) for i in self.row)
        return f"C{c}.L{r}.T{int(self.transpose)}.S{int(self.swap)}"

    @classmethod
    def parse(cls, text: str) -> "SymmetryElement":
        """Inverse of label(); e.g. 'C321.L123.T0.S1'."""
        try:
            c, r, t, s = text.split(".")
            col = tuple(int(ch) - 1 for ch in c[1:])
            row = tuple(int(ch) - 1 for ch in r[1:])
            assert sorted(col) == [0, 1, 2] and sorted(row) == [0, 1, 2]
            assert c[0] == "C" and r[0] == "L" and t[0] == "T" and s[0] == "S"
            return cls(col, row, t[1:] == "1", s[1:] == "1")
        except (ValueError, AssertionError, IndexError) as exc:
            raise ValueError(f"bad element label {text!r}") from exc


IDENTITY = SymmetryElement()


class EquivalenceReport(NamedTuple):
    sign: int
    x_charpoly_match: bool
    y_charpoly_match: bool
    dims_equal: bool

    @property
    def ok(self):
        return self.x_charpoly_match and self.y_charpoly_match and self.dims_equal


def _grids(m):
    # rational version of the arrangement so that non-integral l, n still transform linearly
    m1, m2, p1, p2, q1, q2 = (Fraction(x) for x in m)
    l = (m1 + 2 * m2 + p1 + 2 * p2 - q1 - 2 * q2) / 3
    n = (2 * m1 + m2 + 2 * p1 + p2 - 2 * q1 - q2) / 3
    left = [[m1, p1, q2], [p1 + p2 - l, m1 + m2 - l, n], [m2 + n - l, p2 + n - l, q1 + n - l]]
    right = [[x + l - n for x in r] for r in left]
    return left, right


def act_on_grids(e: SymmetryElement, left, right):
    if e.swap:
        left, right = right, left
    if e.transpose:
        left = [list(r) for r in zip(*left)]
        right = [list(r) for r in zip(*right)]
    out = []
    for g in (left, right):
        h = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                h[e.row[i]][e.col[j]] = g[i][j]
        out.append(h)
    return out[0], out[1]


def apply(e: SymmetryElement, m) -> ParamSet:
    left, right = act_on_grids(e, *_grids(as_params(m)))
    vals = (left[0][0], right[2][0], left[0][1], right[2][1], right[2][2], left[0][2])
    if any(v.denominator != 1 for v in vals):
        raise NonIntegral(f"{e.label()} maps {tuple(m)} outside the integers")
    return ParamSet(*(int(v) for v in vals))


def sign_of(e: SymmetryElement) -> int:
    return -1 if (_parity(e.row) + _parity(e.col)) % 2 else 1


_GROUP = None


def enumerate_group():
    global _GROUP
    if _GROUP is None:
        perms = list(itertools.permutations(IDP))
        _GROUP = tuple(SymmetryElement(c, r, t, s) for s in (False, True) for t in (False, True)
                       for r in perms for c in perms)
    return _GROUP


def line_exchange(i, j) -> SymmetryElement:
    p = list(IDP)
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return SymmetryElement(row=tuple(p))


def column_exchange(i, j) -> SymmetryElement:
    p = list(IDP)
    p[i - 1], p[j - 1] = p[j - 1], p[i - 1]
    return SymmetryElement(col=tuple(p))


TRANSPOSE = SymmetryElement(transpose=True)
SWAP = SymmetryElement(swap=True)
DUAL = SymmetryElement(row=(2, 1, 0), swap=True)


def classical_subgroup():
    cols = [SymmetryElement(col=p) for p in itertools.permutations(IDP)]
    return cols + [DUAL @ c for c in cols]


def _scaled(cp, s):
    # coefficients of s^d * p(s x)
    d = cp.degree
    return tuple(c * s ** (d + k) for k, c in enumerate(cp.coeffs))


def verify_equivalence(m, e: SymmetryElement) -> EquivalenceReport:
    if multiplicity(m) < 1:
        raise NotPhysical(f"multiplicity of {tuple(m)} is 0")
    mp = apply(e, m)
    s = sign_of(e)
    if multiplicity(mp) != multiplicity(m):
        return EquivalenceReport(s, False, False, False)
    X, Y = _charpolys(tuple(m))
    Xp, Yp = _charpolys(tuple(mp))
    return EquivalenceReport(
        s,
        Xp.coeffs == _scaled(X, s),
        Yp.coeffs == Y.coeffs,
        X.degree == Xp.degree,
    )


@lru_cache(maxsize=4096)
def _charpolys(m):
    return char_poly(build_X(m)), char_poly(build_Y(m))


def orbit(m) -> set:
    out = set()
    for e in enumerate_group():
        out.add(apply(e, m))
    return out


def generic_points(count: int = 5, seed: int = 1, top: int = 7) -> list:
    """Physical parameter sets with multiplicity >= 2 and at least four distinct entries."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = tuple(rng.randint(1, top) for _ in range(6))
        if len(set(m)) >= 4 and multiplicity(m) >= 2 and m not in out:
            out.append(m)
    return out


def e6_isomorphism(points=None) -> dict:
    """Match each element of the 144-element signed Weyl subgroup with the
    magic-square symmetry that moves every sample point the same way.

    Raises ValueError when some element has no match or several matches.
    """
    from .e6 import apply_param_action, missing_label_subgroup, param_action

    points = points or generic_points()
    table = {}
    for e in enumerate_group():
        table.setdefault(tuple(apply(e, p) for p in points), []).append(e)
    out = {}
    for g in missing_label_subgroup():
        M = param_action(g)
        key = tuple(ParamSet(*(int(x) for x in apply_param_action(M, p))) for p in points)
        hits = table.get(key, [])
        if len(hits) != 1:
            raise ValueError(f"{len(hits)} magic-square matches for a subgroup element")
        out[g] = hits[0]
    return out
