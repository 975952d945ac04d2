"""E6 root system, its Weyl group, and the dictionary with coupling parameters.

Roots are integer vectors on the simple roots a1..a6 (a3 is the branch node,
a6 hangs off it).  Group elements are 6x6 integer matrices acting on those
coordinates.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NotARoot

CARTAN = np.array([
    [2, -1, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0],
    [0, -1, 2, -1, 0, -1],
    [0, 0, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 2],
], dtype=np.int64)

THETA = (1, 2, 3, 2, 1, 2)
GROUP_CAP = 60000


def root(label: str) -> tuple:
    """'1236' -> a1+a2+a3+a6.  Digits may repeat."""
    v = [0] * 6
    for ch in label:
        v[int(ch) - 1] += 1
    return tuple(v)


def inner(a, b) -> int:
    return int(np.asarray(a) @ CARTAN @ np.asarray(b))


def simple_reflection(i: int) -> np.ndarray:
    """Matrix of s_i (i is 1-based): x -> x - (x, a_i) a_i."""
    s = np.eye(6, dtype=np.int64)
    s[i - 1, :] -= CARTAN[i - 1, :]
    return s


SIMPLE = tuple(simple_reflection(i) for i in range(1, 7))


def reflect(i: int, beta) -> tuple:
    return tuple(int(x) for x in SIMPLE[i - 1] @ np.asarray(beta))


@dataclass(frozen=True)
class RootSystem:
    roots: tuple
    positive: tuple
    highest: tuple


@lru_cache(maxsize=None)
def generate_roots() -> RootSystem:
    start = [root(str(i)) for i in range(1, 7)]
    seen = set(start)
    queue = deque(start)
    while queue:
        b = queue.popleft()
        for i in range(1, 7):
            c = reflect(i, b)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    roots = tuple(sorted(seen))
    pos = tuple(r for r in roots if all(x >= 0 for x in r))
    highest = max(pos, key=sum)
    return RootSystem(roots, pos, highest)


def is_root(beta) -> bool:
    return tuple(int(x) for x in beta) in set(generate_roots().roots)


@lru_cache(maxsize=None)
def weyl_group() -> np.ndarray:
    """All 51840 elements, identity first, as an (N, 6, 6) int64 array."""
    eye = np.eye(6, dtype=np.int64)
    seen = {eye.tobytes(): eye}
    frontier = [eye]
    while frontier:
        nxt = []
        for g in frontier:
            for s in SIMPLE:
                h = s @ g
                key = h.tobytes()
                if key not in seen:
                    seen[key] = h
                    nxt.append(h)
                    if len(seen) > GROUP_CAP:
                        raise RuntimeError("Weyl group closure exceeded safety cap")
        frontier = nxt
    return np.array(list(seen.values()))


@lru_cache(maxsize=None)
def longest_element() -> np.ndarray:
    W = weyl_group()
    # w0 sends every simple root to a negative root
    images = W  # columns of each matrix are images of the simple roots
    neg = np.all(images <= 0, axis=1).all(axis=1)
    (idx,) = np.nonzero(neg)
    assert len(idx) == 1
    return W[idx[0]]


@dataclass(frozen=True)
class SignedWeylElement:
    matrix: tuple  # 6x6 nested tuples of ints
    sign: int = 1

    @classmethod
    def of(cls, mat, sign=1):
        return cls(tuple(tuple(int(x) for x in row) for row in np.asarray(mat)), sign)

    def array(self) -> np.ndarray:
        return self.sign * np.array(self.matrix, dtype=np.int64)

    def __matmul__(self, other):
        return SignedWeylElement.of(np.array(self.matrix) @ np.array(other.matrix), self.sign * other.sign)

    def act(self, beta) -> tuple:
        return tuple(int(x) for x in self.array() @ np.asarray(beta))


# --- parameters <-> roots ------------------------------------------------

PARAM_ROOT_LABELS = ("345", "12346", "123", "23456", "36", "234")  # m1, m2, m'1, m'2, m''1, m''2


@dataclass(frozen=True)
class ParamRootMap:
    B: np.ndarray      # columns: roots attached to m1..m''2
    Binv3: np.ndarray  # 3 * B^{-1}, integral

    def linear_form(self, beta) -> tuple:
        """Coefficients c with value(beta) = c . m, as Fractions."""
        v = self.Binv3 @ np.asarray(beta, dtype=np.int64)
        return tuple(Fraction(int(x), 3) for x in v)

    def value(self, beta, m) -> Fraction:
        return sum((c * x for c, x in zip(self.linear_form(beta), m)), Fraction(0))


@lru_cache(maxsize=None)
def param_root_map() -> ParamRootMap:
    B = np.array([root(s) for s in PARAM_ROOT_LABELS], dtype=np.int64).T
    Binv3 = np.rint(np.linalg.inv(B) * 3).astype(np.int64)
    if not (Binv3 @ B == 3 * np.eye(6, dtype=np.int64)).all():
        raise AssertionError("3 B^-1 is not integral")
    return ParamRootMap(B, Binv3)


def _int_inverse(mat: np.ndarray) -> np.ndarray:
    inv = np.rint(np.linalg.inv(mat)).astype(np.int64)
    assert (inv @ mat == np.eye(6, dtype=np.int64)).all()
    return inv


def param_action(s) -> list:
    """Matrix M with (s.m) = M m, so that root values transform as v_{s.m}(b) = v_m(s^-1 b)."""
    if not isinstance(s, SignedWeylElement):
        s = SignedWeylElement.of(s)
    pm = param_root_map()
    sinv = _int_inverse(np.array(s.matrix, dtype=np.int64)) * s.sign
    M3 = (pm.Binv3 @ sinv @ pm.B).T
    return [[Fraction(int(x), 3) for x in row] for row in M3]


def apply_param_action(M, m) -> tuple:
    return tuple(sum((a * x for a, x in zip(row, m)), Fraction(0)) for row in M)


@lru_cache(maxsize=None)
def averaging_kernels() -> np.ndarray:
    """K_s = 3 B^-1 s B for every s in W; 3 m' = K_s^T m runs over the orbit of m."""
    pm = param_root_map()
    return np.einsum("ij,sjk,kl->sil", pm.Binv3, weyl_group(), pm.B)


def coefficient_one_roots() -> list:
    return [r for r in generate_roots().positive if r[2] == 1]


def omega3() -> tuple:
    inv = np.linalg.inv(CARTAN.astype(float))
    return tuple(Fraction(x).limit_denominator(12) for x in inv[:, 2])


def _key(vecs: np.ndarray) -> frozenset:
    return frozenset(map(tuple, vecs.T.tolist()))


@lru_cache(maxsize=None)
def missing_label_subgroup() -> tuple:
    """Closure of s1, s2, s4, s5, s6 and -w0 inside the signed Weyl group."""
    gens = [SignedWeylElement.of(SIMPLE[i - 1]) for i in (1, 2, 4, 5, 6)]
    gens.append(SignedWeylElement.of(longest_element(), -1))
    ident = SignedWeylElement.of(np.eye(6, dtype=np.int64))
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s @ g
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return tuple(sorted(seen, key=lambda e: (e.sign, e.matrix)))


def set_stabilizer(roots) -> list:
    """All elements of +-W(E6) mapping the given root set onto itself."""
    R = np.array(roots, dtype=np.int64).T
    target = _key(R)
    W = weyl_group()
    imgs = W @ R
    out = []
    for sign in (1, -1):
        for k in range(len(W)):
            if _key(sign * imgs[k]) == target:
                out.append(SignedWeylElement.of(W[k], sign))
    return out


def minimal_word(target) -> list:
    """Shortest word [i1, ..., ik] with s_i1 ... s_ik (Theta) = target (rightmost acts first)."""
    target = tuple(int(x) for x in target)
    rs = generate_roots()
    if target not in set(rs.positive):
        raise NotARoot(f"{target} is not a positive root")
    prev = {rs.highest: None}
    queue = deque([rs.highest])
    while queue:
        b = queue.popleft()
        if b == target:
            break
        for i in range(1, 7):
            c = reflect(i, b)
            if c not in prev:
                prev[c] = (b, i)
                queue.append(c)
    applied = []
    node = target
    while prev[node] is not None:
        node, i = prev[node]
        applied.append(i)
    # applied lists the last reflection first, i.e. the written word order
    return applied


def word_matrix(word) -> np.ndarray:
    out = np.eye(6, dtype=np.int64)
    for i in word:
        out = out @ SIMPLE[i - 1]
    return out


def root_poset() -> dict:
    """Covering edges (beta, beta + a_i, i) among positive roots."""
    pos = generate_roots().positive
    ps = set(pos)
    edges = []
    for b in pos:
        for i in range(1, 7):
            c = tuple(x + (1 if k == i - 1 else 0) for k, x in enumerate(b))
            if c in ps:
                edges.append((b, c, i))
    return {"nodes": list(pos), "edges": edges}


def root_label(beta) -> str:
    """Inverse of root() for non-negative roots, e.g. (1,1,1,0,0,1) -> '1236'."""
    sign = "-" if any(x < 0 for x in beta) else ""
    return sign + "".join(str(i + 1) * abs(int(c)) for i, c in enumerate(beta))
