"""Dense univariate polynomials as ascending coefficient lists.

Works for any field-like scalar (int, Fraction, complex, sympy numbers), which
keeps the exact and floating-point code paths identical.
"""
from __future__ import annotations


def trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [0]


def add(*ps):
    n = max(len(p) for p in ps)
    return trim([sum((p[i] for p in ps if i < len(p)), 0) for i in range(n)])


def scale(c, p):
    return trim([c * a for a in p])


def mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def deriv(p, k=1):
    for _ in range(k):
        p = [i * p[i] for i in range(1, len(p))] or [0]
    return trim(p)


def degree(p):
    p = trim(p)
    return -1 if p == [0] else len(p) - 1


def divmod_(p, q):
    p, q = trim(p), trim(q)
    if q == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    quo = [0] * max(len(p) - dq, 1)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = rem[k + dq] / q[-1]
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
    return trim(quo), trim(rem[:dq] if dq else [0])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def from_roots(roots):
    out = [1]
    for r in roots:
        out = mul(out, [-r, 1])
    return out


def is_zero(p):
    return all(c == 0 for c in p)


def monic(p):
    p = trim(p)
    return [c / p[-1] for c in p]


U = [0, 1]          # u
U_UM1 = [0, -1, 1]  # u(u-1)
