"""Exact tridiagonal missing-label operators X_m, Y_m and their spectra."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import NotPhysical, OutOfRange, ToleranceNotMet
from .weights import as_params, casimir_values, derive_ln, multiplicity

F = Fraction


@dataclass(frozen=True)
class XiParams:
    xi: tuple
    xi_a: int
    xi_b: int
    Lambda: int
    lambda_plus: Fraction
    lambda_minus: Fraction
    branch: str  # "l<=n" or "n<l"

    @property
    def dim(self):
        return self.xi_a - self.xi_b


@dataclass(frozen=True)
class RationalTridiagonal:
    diag: tuple
    sup: tuple
    sub: tuple

    def __post_init__(self):
        if len(self.sup) != len(self.diag) - 1 or len(self.sub) != len(self.diag) - 1:
            raise ValueError("inconsistent tridiagonal lengths")

    @property
    def dim(self):
        return len(self.diag)

    def dense(self):
        d = self.dim
        out = [[F(0)] * d for _ in range(d)]
        for i, x in enumerate(self.diag):
            out[i][i] = F(x)
        for i in range(d - 1):
            out[i][i + 1] = F(self.sup[i])
            out[i + 1][i] = F(self.sub[i])
        return out

    def products(self):
        return [a * b for a, b in zip(self.sup, self.sub)]

    @classmethod
    def from_dense(cls, a):
        d = len(a)
        return cls(tuple(F(a[i][i]) for i in range(d)),
                   tuple(F(a[i][i + 1]) for i in range(d - 1)),
                   tuple(F(a[i + 1][i]) for i in range(d - 1)))


@dataclass(frozen=True)
class CharPoly:
    coeffs: tuple  # ascending powers, last entry 1

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sympy_poly(self, var=None):
        var = var or sympy.Symbol("x")
        return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
                          var, domain="QQ")


@dataclass(frozen=True)
class Spectrum:
    values: tuple
    tolerance: float
    exact: tuple  # Fraction for rational eigenvalues, else None


def xi_params(m) -> XiParams:
    m1, m2, p1, p2, q1, q2 = as_params(m)
    l, n = derive_ln(m)
    if l <= n:
        head, branch = (l, m2, p1 + l - n), "l<=n"
    else:
        head, branch = (n, p1, m2 + n - l), "n<l"
    xi = head + (l - p2, n - m1, 0)
    lam = sum(xi[:3]) - sum(xi[3:]) + 2 * abs(l - n)
    s6 = F(sum(xi), 6)
    return XiParams(xi, min(xi[:3]), max(xi[3:]), lam, F(lam, 2) + s6, -F(lam, 2) + s6, branch)


def _power_sums(xs, top):
    return [sum(x ** k for x in xs) for k in range(1, top + 1)]


def x_diagonal(shifted, Lam):
    """Diagonal entry of X given the six shifted values xi_i - j + 1/2 (+ offsets)."""
    e1, e2, e3 = _power_sums(shifted, 3)
    return -F(1, 108) * (F(7, 2) * e1 ** 3 - 18 * e1 * e2 + 18 * e3) - F(1, 24) * e1 * (Lam ** 2 + 2)


def y_diagonal(shifted, Lam):
    e1, e2, e3, e4 = _power_sums(shifted, 4)
    L2 = Lam ** 2
    return F(1, 288) * (F(5, 2) * e1 ** 4 + 32 * e1 * e3 + 6 * (e2 ** 2 - 3 * e1 ** 2 * e2 - 4 * e4)
                        + 6 * e2 * (L2 + 2) - 3 * e1 ** 2 * (L2 - 2) - F(3, 2) * L2 ** 2 + 6 * L2 - 36)


def _shifted(xi, j, xb):
    return [F(x) - j - xb + F(1, 2) for x in xi]


def _require_physical(m):
    if multiplicity(m) < 1:
        raise NotPhysical(f"multiplicity of {tuple(m)} is 0")


def build_X(m) -> RationalTridiagonal:
    _require_physical(m)
    p = xi_params(m)
    xi, xb, d = p.xi, p.xi_b, p.dim
    diag = tuple(x_diagonal(_shifted(xi, j, xb), p.Lambda) for j in range(1, d + 1))
    sup = tuple(F(math.prod(j + xb - x for x in xi[:3])) for j in range(1, d))
    sub = tuple(F(math.prod(j + xb - x for x in xi[3:])) for j in range(1, d))
    return RationalTridiagonal(diag, sup, sub)


def build_Y(m) -> RationalTridiagonal:
    _require_physical(m)
    p = xi_params(m)
    xi, xb, d = p.xi, p.xi_b, p.dim
    diag = tuple(y_diagonal(_shifted(xi, j, xb), p.Lambda) for j in range(1, d + 1))
    sup = tuple(math.prod(j + xb - x for x in xi[:3]) * (j + xb - p.lambda_minus) for j in range(1, d))
    sub = tuple(math.prod(j + xb - x for x in xi[3:]) * (j + xb - p.lambda_plus) for j in range(1, d))
    return RationalTridiagonal(diag, sup, sub)


def _pmul_linear(p, c):
    # (x - c) * p, ascending coefficients
    out = [F(0)] * (len(p) + 1)
    for i, a in enumerate(p):
        out[i + 1] += a
        out[i] -= c * a
    return out


def char_poly(T: RationalTridiagonal) -> CharPoly:
    prev, cur = [F(1)], _pmul_linear([F(1)], F(T.diag[0])) if T.dim else [F(1)]
    for k in range(1, T.dim):
        nxt = _pmul_linear(cur, F(T.diag[k]))
        c = F(T.sup[k - 1]) * F(T.sub[k - 1])
        for i, a in enumerate(prev):
            nxt[i] -= c * a
        prev, cur = cur, nxt
    return CharPoly(tuple(cur))


def spectrum(T: RationalTridiagonal, tol: float = 1e-12) -> Spectrum:
    """Sorted real eigenvalues, isolated exactly on the characteristic polynomial.

    Rational eigenvalues are returned exactly (split off as linear factors);
    the rest are located by exact real-root isolation refined to `tol`.
    """
    cp = char_poly(T)
    x = sympy.Symbol("x")
    poly = cp.sympy_poly(x)
    _, factors = poly.factor_list()
    found = []
    for fac, mult in factors:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -b / a
            found += [(float(r), F(int(r.p), int(r.q)))] * mult
            continue
        eps = sympy.Rational(tol).limit_denominator(10 ** 15) if tol < 1 else sympy.Rational(1, 2)
        ivs = fac.intervals(eps=eps)
        nreal = sum(k for _, k in ivs)
        if nreal != fac.degree():
            raise ToleranceNotMet(f"{fac.degree() - nreal} non-real eigenvalues")
        for (lo, hi), k in ivs:
            if hi - lo > 2 * eps:
                raise ToleranceNotMet("root refinement did not reach tolerance")
            found += [(float((lo + hi) / 2), None)] * (mult * k)
    found.sort(key=lambda t: t[0])
    return Spectrum(tuple(v for v, _ in found), tol, tuple(e for _, e in found))


# --- closed forms for the worked examples ------------------------------

def xsca(m) -> Fraction:
    """Scalar value of X when l = 1 (one-dimensional multiplicity space)."""
    a, b, c, d, e, f = as_params(m)
    l, n = derive_ln(m)

    def lc(x, y):
        return casimir_values((x, y))[1]

    t = F(1, 6) * (lc(a, b) - lc(c, d) + lc(e, f) + (n - 1) * (2 * c + 4 * d - 3) * (a + c - n) - a + b - c + d)
    t -= F(c * d * (3 * a - 3 * b + c - d), 27)
    t -= F((a + b) * (2 * c - 1 + 2 * d) * (c - d), 12)
    t -= (F(c - d, 27) + F(a - b, 36)) * (c + d) * (2 * c + 2 * d - 9)
    return t


def example2_params(p, q):
    return (2, 2, p + 1, q + 1, p + 1, q + 1)


def example3_params(L, p, q):
    return (2, p + 1, 2, q + 1, L, p + q - 2 * L + 4)


def _ex3_centre(L, p, q, printed=False):
    # (q - p) agrees with build_X and with the L=2 reduction; printed=True gives the (p - q) variant
    c = F(q - p, 54) * (54 + 36 * p + 36 * q + 4 * p * p + 4 * q * q + 10 * p * q
                         - 36 * L + 9 * L * L - 9 * L * p - 9 * L * q)
    return -c if printed else c


def closed_form_examples(family: str, printed: bool = False, **kw):
    if family == "Example1":
        m = kw["m"]
        if derive_ln(m).l != 1:
            raise OutOfRange("Example 1 needs l = 1")
        return (xsca(m),)
    if family == "Example2":
        p, q = kw["p"], kw["q"]
        if p < 1 or q < 1:
            raise OutOfRange("Example 2 needs p, q >= 1")
        alpha = -F(1, 27) * (p - q) * (3 + 2 * p + q) * (3 + p + 2 * q)
        s = math.sqrt((p + q + 1.5) ** 2 - p * q)
        return (float(alpha) - s, float(alpha) + s)
    if family == "Example3":
        L, p, q = kw["L"], kw["p"], kw["q"]
        if not 2 <= L <= p + 1 <= q + 1:
            raise OutOfRange("Example 3 needs 2 <= L <= p+1 <= q+1")
        c = _ex3_centre(L, p, q, printed)
        disc = F(1, 4) * (1 - 4 * L + L * L - L * p - L * q) ** 2 - (2 - L + q) * (2 - L + p)
        s = math.sqrt(disc)
        return (float(c) - s, float(c) + s)
    raise OutOfRange(f"unknown family {family!r}")


def closed_form_charpoly(family: str, **kw) -> CharPoly:
    """Monic x^2 - 2 c x + (c^2 - D) for the d=2 families, exact."""
    if family == "Example2":
        p, q = kw["p"], kw["q"]
        c = -F(1, 27) * (p - q) * (3 + 2 * p + q) * (3 + p + 2 * q)
        D = (p + q + F(3, 2)) ** 2 - p * q
    elif family == "Example3":
        L, p, q = kw["L"], kw["p"], kw["q"]
        c = _ex3_centre(L, p, q)
        D = F(1, 4) * (1 - 4 * L + L * L - L * p - L * q) ** 2 - (2 - L + q) * (2 - L + p)
    else:
        raise OutOfRange(f"no quadratic closed form for {family!r}")
    return CharPoly((c * c - D, -2 * c, F(1)))
