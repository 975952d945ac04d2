"""Coupling parameters for su(3) tensor products.

A parameter set m = (m1, m2, m'1, m'2, m''1, m''2) asks for the copies of
[m''1, m''2] inside [m1, m2] x [m'1, m'2].  Labels are shifted by one: the
pair [a, b] has highest weight (a-1, b-1) in Dynkin coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import BoundExceeded, NonIntegral


class ParamSet(NamedTuple):
    m1: int
    m2: int
    mp1: int
    mp2: int
    mpp1: int
    mpp2: int


class HighestWeightPair(NamedTuple):
    m1: int
    m2: int


class DerivedLN(NamedTuple):
    l: int
    n: int


@dataclass(frozen=True)
class Arrangement:
    left: tuple
    right: tuple

    def entries(self):
        return [x for g in (self.left, self.right) for row in g for x in row]

    def line_sums(self, grid):
        g = self.left if grid == "left" else self.right
        rows = [sum(r) for r in g]
        cols = [sum(g[i][j] for i in range(3)) for j in range(3)]
        diag = [sum(g[i][i] for i in range(3)), sum(g[i][2 - i] for i in range(3))]
        return rows + cols + diag


def as_params(m) -> ParamSet:
    return m if isinstance(m, ParamSet) else ParamSet(*(int(x) for x in m))


def derive_ln(m) -> DerivedLN:
    m1, m2, p1, p2, q1, q2 = as_params(m)
    l3 = m1 + 2 * m2 + p1 + 2 * p2 - q1 - 2 * q2
    n3 = 2 * m1 + m2 + 2 * p1 + p2 - 2 * q1 - q2
    if l3 % 3 or n3 % 3:
        raise NonIntegral(f"l or n not integral for {tuple(m)}")
    return DerivedLN(l3 // 3, n3 // 3)


def arrangement(m) -> Arrangement:
    m1, m2, p1, p2, q1, q2 = as_params(m)
    l, n = derive_ln(m)
    left = (
        (m1, p1, q2),
        (p1 + p2 - l, m1 + m2 - l, n),
        (m2 + n - l, p2 + n - l, q1 + n - l),
    )
    right = tuple(tuple(x + l - n for x in row) for row in left)
    return Arrangement(left, right)


def params_from_arrangement(arr: Arrangement) -> ParamSet:
    L, R = arr.left, arr.right
    return ParamSet(L[0][0], R[2][0], L[0][1], R[2][1], R[2][2], L[0][2])


def multiplicity(m) -> int:
    try:
        arr = arrangement(m)
    except NonIntegral:
        return 0
    lo = min(arr.entries())
    return lo if lo > 0 else 0


def is_physical(m) -> bool:
    return all(x >= 1 for x in m) and multiplicity(m) > 0


def casimir_values(w) -> tuple[Fraction, Fraction]:
    a, b = w
    k = Fraction(2, 3) * (a * a + b * b + a * b) - 2
    lval = Fraction((a + 2 * b) * (2 * a + b) * (a - b), 9)
    return k, lval


# --- independent oracle: Brauer-Klimyk over weight multiplicities -------

def _gt_weight_multiplicities(a: int, b: int) -> dict:
    """Weight multiplicities of the irrep with Dynkin labels (a, b).

    Counts Gelfand-Tsetlin patterns for the GL3 partition (a+b, b, 0).
    """
    top = (a + b, b, 0)
    out: dict = {}
    for x1 in range(top[1], top[0] + 1):
        for x2 in range(top[2], top[1] + 1):
            for y in range(x2, x1 + 1):
                w1 = y
                w2 = x1 + x2 - y
                w3 = sum(top) - x1 - x2
                key = (w1 - w2, w2 - w3)
                out[key] = out.get(key, 0) + 1
    return out


def _to_dominant(a: int, b: int):
    # Weyl group of A2 on Dynkin coordinates; returns (a, b, sign) or None on a wall
    sign = 1
    for _ in range(10):
        if a == 0 or b == 0:
            return None
        if a < 0:
            a, b, sign = -a, a + b, -sign
        elif b < 0:
            a, b, sign = a + b, -b, -sign
        else:
            return a, b, sign
    return None


@lru_cache(maxsize=None)
def _tensor_decomposition(l1: tuple, l2: tuple) -> dict:
    mults = _gt_weight_multiplicities(*l2)
    out: dict = {}
    for (wa, wb), k in mults.items():
        r = _to_dominant(l1[0] + wa + 1, l1[1] + wb + 1)
        if r is None:
            continue
        a, b, s = r
        key = (a - 1, b - 1)
        out[key] = out.get(key, 0) + s * k
    return {k: v for k, v in out.items() if v}


def lr_oracle(w, wp, wpp, bound: int = 12) -> int:
    """Multiplicity of [wpp] in [w] x [wp] by character arithmetic."""
    for pair in (w, wp, wpp):
        if max(pair) > bound:
            raise BoundExceeded(f"weight {tuple(pair)} exceeds oracle bound {bound}")
        if min(pair) < 1:
            return 0
    dec = _tensor_decomposition((w[0] - 1, w[1] - 1), (wp[0] - 1, wp[1] - 1))
    return dec.get((wpp[0] - 1, wpp[1] - 1), 0)


def arrangement_forms() -> tuple:
    """The 18 arrangement entries as linear forms in m (coefficient tuples of Fractions)."""
    e = [tuple(Fraction(int(i == k)) for i in range(6)) for k in range(6)]
    m1, m2, p1, p2, q1, q2 = e
    l = tuple(Fraction(c, 3) for c in (1, 2, 1, 2, -1, -2))
    n = tuple(Fraction(c, 3) for c in (2, 1, 2, 1, -2, -1))

    def lin(*terms):
        out = [Fraction(0)] * 6
        for s, v in terms:
            for i in range(6):
                out[i] += s * v[i]
        return tuple(out)

    left = [lin((1, m1)), lin((1, p1)), lin((1, q2)),
            lin((1, p1), (1, p2), (-1, l)), lin((1, m1), (1, m2), (-1, l)), lin((1, n)),
            lin((1, m2), (1, n), (-1, l)), lin((1, p2), (1, n), (-1, l)), lin((1, q1), (1, n), (-1, l))]
    right = [lin((1, v), (1, l), (-1, n)) for v in left]
    return tuple(left + right)
