"""Tiny dense matrix helpers over Fraction (lists of lists).

The matrices in this package are at most ~10x10, where plain lists beat
any general linear-algebra wrapper.
"""
from fractions import Fraction


def zeros(r, c=None):
    c = r if c is None else c
    return [[Fraction(0)] * c for _ in range(r)]


def eye(n, scale=1):
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(scale)
    return out


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def add(*mats):
    r, c = shape(mats[0])
    return [[sum((m[i][j] for m in mats), Fraction(0)) for j in range(c)] for i in range(r)]


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(s, a):
    return [[s * x for x in row] for row in a]


def mul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def chain(*mats):
    out = mats[0]
    for m in mats[1:]:
        out = mul(out, m)
    return out


def comm(a, b):
    return sub(mul(a, b), mul(b, a))


def acomm(a, b):
    return add(mul(a, b), mul(b, a))


def transpose(a):
    return [list(r) for r in zip(*a)]


def max_abs(a):
    return max((abs(x) for row in a for x in row), default=Fraction(0))


def is_zero(a):
    return all(x == 0 for row in a for x in row)


def to_frac(a):
    return [[Fraction(x) for x in row] for row in a]
