"""4-faces of the E6 root polytope and their tridiagonal representations.

Each face F = {xi_1..xi_5} together with its orthogonal positive root Lambda
gives a pair of Z-indexed tridiagonal matrices (A, B); X acts by sign*A and Y
by B.  Integral parameter values let one cut finite blocks out of them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import qmat
from .centralizer import relation_residuals, structure_constants
from .e6 import THETA, generate_roots, inner, minimal_word, param_root_map, root, weyl_group, word_matrix
from .errors import EmptyWindow, NotARoot, NotPhysical
from .tridiag import RationalTridiagonal, char_poly, x_diagonal, y_diagonal
from .weights import derive_ln, multiplicity

F = Fraction

CANONICAL_ROOTS = tuple(root(s) for s in ("12345", "1234", "123", "12", "1"))


@dataclass(frozen=True)
class FourFace:
    roots: tuple           # ordered xi_1..xi_5 as root vectors
    orthogonal_root: tuple  # the positive root Lambda
    k: int
    sign: int

    def key(self) -> frozenset:
        return frozenset(self.roots)


@dataclass(frozen=True)
class FaceValues:
    xi: tuple  # five values then xi6 = 0
    Lambda_value: Fraction
    lambda_plus: Fraction
    lambda_minus: Fraction


def canonical_face() -> FourFace:
    return FourFace(CANONICAL_ROOTS, THETA, 0, 1)


def face(Lam, k: int = 0, sign: int = 1) -> FourFace:
    Lam = tuple(int(x) for x in Lam)
    if Lam not in set(generate_roots().positive):
        raise NotARoot(f"{Lam} is not a positive root")
    if k not in range(6) or sign not in (1, -1):
        raise ValueError("k must be in 0..5 and sign +-1")
    w = word_matrix(minimal_word(Lam))
    base = [tuple(int(x) for x in w @ np.array(r)) for r in CANONICAL_ROOTS]
    if k:
        xk = np.array(base[k - 1])
        base = [tuple(int(x) for x in (-xk if i == k - 1 else np.array(b) - xk)) for i, b in enumerate(base)]
    if sign < 0:
        base = [tuple(-x for x in b) for b in base]
    return FourFace(tuple(base), Lam, k, sign)


def enumerate_faces() -> list:
    out = []
    for Lam in generate_roots().positive:
        for sign in (1, -1):
            for k in range(6):
                out.append(face(Lam, k, sign))
    return out


def face_orbit_keys(signed: bool = True) -> set:
    """Orbit of the canonical face under W(E6) (and -Id if signed)."""
    R = np.array(CANONICAL_ROOTS, dtype=np.int64).T
    imgs = weyl_group() @ R
    keys = set()
    for sign in ((1, -1) if signed else (1,)):
        for im in imgs:
            keys.add(frozenset(map(tuple, (sign * im).T.tolist())))
    return keys


def orthogonal_positive_roots(f: FourFace) -> list:
    return [r for r in generate_roots().positive if all(inner(r, x) == 0 for x in f.roots)]


def face_values(f: FourFace, m) -> FaceValues:
    pm = param_root_map()
    xi = tuple(pm.value(r, m) for r in f.roots) + (F(0),)
    # -F is orthogonal to the same Lambda; the sign travels with the face
    lam = f.sign * pm.value(f.orthogonal_root, m)
    s6 = sum(xi, F(0)) / 6
    return FaceValues(xi, lam, lam / 2 + s6, -lam / 2 + s6)


class FaceRep:
    """Row/column generator for the infinite matrices X^F, Y^F at given values."""

    def __init__(self, f: FourFace, m=None, values: FaceValues | None = None):
        self.face = f
        self.v = values if values is not None else face_values(f, m)

    def a_super(self, j):
        return F(j) * math.prod((j - x for x in self.v.xi[:5]), start=F(1))

    def entries(self, j):
        """(A diag, A super, A sub, B diag, B super, B sub) at row j."""
        v = self.v
        sh = [x - j + F(1, 2) for x in v.xi]
        asup = self.a_super(j)
        return (x_diagonal(sh, v.Lambda_value), asup, F(1),
                y_diagonal(sh, v.Lambda_value), asup * (j - v.lambda_minus), j - v.lambda_plus)

    def window(self, lo: int, hi: int):
        """Dense X^F, Y^F restricted to indices lo..hi inclusive."""
        n = hi - lo + 1
        X, Y = qmat.zeros(n), qmat.zeros(n)
        eps = self.face.sign
        for i in range(n):
            ad, asup, asub, bd, bsup, bsub = self.entries(lo + i)
            X[i][i], Y[i][i] = eps * ad, bd
            if i + 1 < n:
                X[i][i + 1], Y[i][i + 1] = eps * asup, bsup
                X[i + 1][i], Y[i + 1][i] = eps * asub, bsub
        return X, Y


def rep_window(f: FourFace, m, j0: int, width: int):
    return FaceRep(f, m).window(j0, j0 + width - 1)


def verify_window(f: FourFace, m, j0: int, constants=None, corrupt=None):
    """Exact defects of the three relations on the basis vector v_{j0}.

    Uses the 9x9 block on indices j0-4..j0+4; every relation has degree at
    most four, so its action on the centre vector never leaves the block.
    `corrupt=(i, delta)` perturbs one X diagonal entry (for negative tests).
    """
    c = constants or structure_constants(m)
    X, Y = FaceRep(f, m).window(j0 - 4, j0 + 4)
    if corrupt is not None:
        i, delta = corrupt
        X[i][i] += delta
    res = relation_residuals(X, Y, c)
    return tuple(max(abs(r[i][4]) for i in range(9)) for r in res)


def sorted_values(f: FourFace, m) -> list:
    vals = face_values(f, m).xi
    if any(x.denominator != 1 for x in vals):
        raise ValueError("face values are not integral")
    return sorted(int(x) for x in vals)


def extract_finite(f: FourFace, m, a: int):
    """Block with indices xi_a+1 .. xi_{a+1} (xi sorted, 1-based a)."""
    if a not in range(1, 6):
        raise ValueError("a must be in 1..5")
    s = sorted_values(f, m)
    lo, hi = s[a - 1] + 1, s[a]
    if hi < lo:
        raise EmptyWindow(f"xi_{a} = xi_{a + 1} = {s[a - 1]}")
    return FaceRep(f, m).window(lo, hi)


def physical_face(m):
    """Face whose a=3 block realises X_m, Y_m, together with the index window."""
    if multiplicity(m) < 1:
        raise NotPhysical(f"multiplicity of {tuple(m)} is 0")
    l, n = derive_ln(m)
    Lam = THETA if n <= l else tuple(x - (1 if i == 5 else 0) for i, x in enumerate(THETA))
    f = face(Lam, 0, 1)
    s = sorted_values(f, m)
    return f, (s[2] + 1, s[3])


def diagonally_similar(A, B) -> bool:
    """Tridiagonal A ~ B by a diagonal conjugation: same diagonal and same super*sub products."""
    ta, tb = RationalTridiagonal.from_dense(A), RationalTridiagonal.from_dense(B)
    return (ta.diag == tb.diag and ta.products() == tb.products()
            and char_poly(ta) == char_poly(tb))
