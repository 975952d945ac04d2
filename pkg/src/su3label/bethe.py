"""Bethe-ansatz side of the missing-label operator X.

Bethe roots nu (n-1 of them) and lambda (l-1 of them) solve a pair of coupled
rational equations; the eigenvalue of X is then a symmetric function of the
roots.  Equivalent polynomial formulations are provided for exact checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import poly
from .errors import NonSimpleRoots, PoleHit
from .tridiag import build_X, spectrum, xsca
from .weights import as_params, derive_ln, multiplicity

F = Fraction
P = np.polynomial.polynomial


class BetheConfig(NamedTuple):
    m1: int
    m2: int
    mp1: int
    mp2: int
    n: int
    l: int

    @classmethod
    def from_params(cls, m):
        m = as_params(m)
        l, n = derive_ln(m)
        return cls(m.m1, m.m2, m.mp1, m.mp2, n, l)


class BetheRoots(NamedTuple):
    nu: tuple
    lam: tuple


def _check_poles(r: BetheRoots, tol=0.0):
    pts = list(r.nu) + list(r.lam)
    for z in pts:
        if abs(z) <= tol or abs(z - 1) <= tol:
            raise PoleHit(f"Bethe root {z} sits on 0 or 1")
    for grp in (r.nu, r.lam):
        for i in range(len(grp)):
            for j in range(i):
                if abs(grp[i] - grp[j]) <= tol:
                    raise PoleHit("coincident Bethe roots")
    for a in r.nu:
        for b in r.lam:
            if abs(a - b) <= tol:
                raise PoleHit("a nu root coincides with a lambda root")


def bethe_residual(cfg: BetheConfig, r: BetheRoots) -> list:
    """|LHS - RHS| of each equation, nu-equations first."""
    _check_poles(r)
    out = []
    for own, other, mm, mmp, big, small in ((r.nu, r.lam, cfg.m1, cfg.mp1, cfg.n, cfg.l),
                                             (r.lam, r.nu, cfg.m2, cfg.mp2, cfg.l, cfg.n)):
        for p, z in enumerate(own):
            lhs = (mm - 1 + z * (2 + mmp - 2 * big + small)) / (z * (1 - z))
            rhs = sum(2 / (z - w) for k, w in enumerate(own) if k != p) - sum(1 / (z - w) for w in other)
            out.append(abs(lhs - rhs))
    return out


def eigenvalue_offset(cfg: BetheConfig, printed: bool = False):
    """Root-independent part of the eigenvalue, minus the l=1 scalar.

    printed=True returns the middle term alone; the default adds the
    correction needed to match the direct spectrum.
    """
    a, b, c, d, n, l = cfg
    mid = -F(l - 1, 6) * ((a - b + 2 * c - 2 * d - 3 * n + 3 * l) * (n - 1) + (b + 2 * a - 2 * c - d) * (l - b - d))
    if printed:
        return mid
    return mid - F(l - 1, 6) * (b + d + n - l - 1) * (2 * a + b + 2 * c + d - 3 * n)


def eigenvalue_from_roots(cfg: BetheConfig, r: BetheRoots, x_scalar, printed: bool = False):
    total = 0
    for a in r.nu:
        for b in r.lam:
            if a == b:
                raise PoleHit("nu_k = lambda_s")
            total += (a + b - 2) / (a - b)
    base = x_scalar + eigenvalue_offset(cfg, printed)
    if not r.nu or not r.lam:
        return base
    return base + F(cfg.m1 + cfg.m2 - 1, 2) * total


def x_scalar_for(m):
    """The l=1 scalar formula evaluated at m (used as the base of the eigenvalue)."""
    return xsca(m)


# --- polynomial formulations -------------------------------------------

def _check_simple(y, exact: bool):
    if poly.degree(y) < 2:
        return
    if exact:
        g = _poly_gcd(y, poly.deriv(y))
        if poly.degree(g) > 0:
            raise NonSimpleRoots("polynomial has a repeated root")


def _poly_gcd(a, b):
    a, b = poly.trim(a), poly.trim(b)
    while not poly.is_zero(b):
        _, r = poly.divmod_(a, b)
        a, b = b, r
    return a


def _exact(y):
    return all(isinstance(c, (int, Fraction)) for c in y)


def master_polynomial(cfg: BetheConfig, y1, y2):
    """Left side of the bilinear second-order equation in (y1, y2)."""
    m1, m2, p1, p2, n, l = cfg
    d1, dd1, d2, dd2 = poly.deriv(y1), poly.deriv(y1, 2), poly.deriv(y2), poly.deriv(y2, 2)
    core = poly.add(poly.mul(y1, dd2), poly.scale(-1, poly.mul(d1, d2)), poly.mul(dd1, y2))
    C = (l - 1) * (l - 1 - p2) + (n - 1) * (n - 1 - p1) - (n - 1) * (l - 1)
    return poly.add(
        poly.mul(poly.U_UM1, core),
        poly.mul(poly.mul([m1 - 1, p1 - 2 * n + l + 2], d1), y2),
        poly.mul(poly.mul([m2 - 1, p2 - 2 * l + n + 2], y1), d2),
        poly.scale(C, poly.mul(y1, y2)),
    )


def master_residual(cfg: BetheConfig, y1, y2):
    for y in (y1, y2):
        _check_simple(y, _exact(y))
    return master_polynomial(cfg, y1, y2)


class PJResult(NamedTuple):
    rho1: list
    remainder1: list
    rho2: list
    remainder2: list


def pj_residual(cfg: BetheConfig, y1, y2) -> PJResult:
    m1, m2, p1, p2, n, l = cfg
    out = []
    for ya, yb, mm, mmp, big, small in ((y1, y2, m1, p1, n, l), (y2, y1, m2, p2, l, n)):
        da, dda, db = poly.deriv(ya), poly.deriv(ya, 2), poly.deriv(yb)
        bracket = poly.add(poly.mul([mm - 1, mmp - 2 * big + small + 2], yb), poly.mul([0, 1, -1], db))
        rest = poly.add(poly.mul(poly.U_UM1, poly.mul(yb, dda)), poly.mul(bracket, da))
        q, r = poly.divmod_(rest, ya)
        out += [poly.scale(-1, q), r]
    return PJResult(*out)


def _gbinom(z, r: int):
    out = F(1)
    for i in range(r):
        out = out * (z - i) / (i + 1)
    return out


def jacobi_shifted(k: int, a, b) -> list:
    """P_k^{(a,b)}(2u - 1) as ascending coefficients in u (standard normalisation)."""
    out = [0]
    for s in range(k + 1):
        term = poly.scale(_gbinom(k + a, k - s) * _gbinom(k + b, s),
                          poly.mul(_pow([-1, 1], s), _pow([0, 1], k - s)))
        out = poly.add(out, term)
    return out


def _pow(p, e):
    out = [1]
    for _ in range(e):
        out = poly.mul(out, p)
    return out


def jacobi_monic(k: int, a, b) -> list:
    a, b = F(a), F(b)
    p = jacobi_shifted(k, a, b)
    if poly.degree(p) != k:
        raise ValueError(f"P_{k}^({a},{b}) loses degree; cannot normalise")
    return poly.monic(p)


def example1_polynomial(cfg: BetheConfig) -> list:
    """Monic y1 solving the l=1 reduction (degree n-1)."""
    return jacobi_monic(cfg.n - 1, cfg.m1 + cfg.mp1 - 2 * cfg.n + 1, -cfg.m1)


def example3_nu(L, p, q) -> tuple:
    """Roots of the quadratic fixing the single nu root in the n=2 family."""
    A, B, C = q + 2, -(L * L - L * (p + q + 4) - 1), p + 2
    disc = B * B - 4 * A * C
    s = math.sqrt(disc)
    return ((-B - s) / (2 * A), (-B + s) / (2 * A))


def example3_y2(L, p, q, nu) -> list:
    """Monic y2 of degree L-1 for the n=2 family, given one nu root."""
    a = q + p - 2 * L + 4
    main = jacobi_shifted(L - 1, F(a), F(-p - 2))
    if L >= 2:
        extra = jacobi_shifted(L - 2, F(a), F(-p - 1))
        coeff = (nu + 1) / (L - 1)
        main = poly.add(main, [coeff * c for c in extra])
    return [c / main[-1] for c in main]


def example2_roots(p, q) -> list:
    """Both root pairs (nu, lambda) of the n = l = 2 family."""
    s = math.sqrt((p + q + 1.5) ** 2 - p * q)
    out = []
    for sg in (1, -1):
        lam = (-2 * p - 4 * q - 3 + sg * 2 * s) / (2 * q * (p + q + 1))
        nu = (-4 * p - 2 * q - 3 - sg * 2 * s) / (2 * p * (p + q + 1))
        out.append(BetheRoots((nu,), (lam,)))
    return out


# --- numeric solver -----------------------------------------------------

@dataclass
class SolveOptions:
    seeds: int = 60
    max_iter: int = 100
    tol: float = 1e-12
    cap: int = 5
    rng_seed: int = 0
    match_tol: float = 1e-8
    residual_tol: float = 1e-10


@dataclass
class Solution:
    roots: BetheRoots
    eigenvalue: complex
    residual: float
    matched: float | None  # spectrum entry, or None when unmatched


@dataclass
class SolveReport:
    solutions: list = field(default_factory=list)
    expected: int = 0

    @property
    def recovered(self):
        return sorted({round(s.matched, 9) for s in self.solutions if s.matched is not None})

    @property
    def complete(self):
        return len(self.recovered) == self.expected


def _np_master(cfg, y1, y2):
    m1, m2, p1, p2, n, l = cfg
    d1, dd1, d2, dd2 = P.polyder(y1), P.polyder(y1, 2), P.polyder(y2), P.polyder(y2, 2)
    core = P.polyadd(P.polysub(P.polymul(y1, dd2), P.polymul(d1, d2)), P.polymul(dd1, y2))
    C = (l - 1) * (l - 1 - p2) + (n - 1) * (n - 1 - p1) - (n - 1) * (l - 1)
    t = P.polymul([0, -1, 1], core)
    t = P.polyadd(t, P.polymul(P.polymul([m1 - 1, p1 - 2 * n + l + 2], d1), y2))
    t = P.polyadd(t, P.polymul(P.polymul([m2 - 1, p2 - 2 * l + n + 2], y1), d2))
    t = P.polyadd(t, C * P.polymul(y1, y2))
    N = n + l - 2
    return np.concatenate([np.asarray(t, complex), np.zeros(N + 1, complex)])[:N]


def _unit(i, size):
    e = np.zeros(size, complex)
    e[i] = 1
    return e


def _newton(cfg, v, opts):
    n1, l1 = cfg.n - 1, cfg.l - 1
    N = n1 + l1
    for _ in range(opts.max_iter):
        y1 = np.append(v[:n1], 1)
        y2 = np.append(v[n1:], 1)
        Fv = _np_master(cfg, y1, y2)
        J = np.empty((N, N), complex)
        # the system is bilinear in the coefficients, so columns are exact
        for i in range(n1):
            J[:, i] = _np_master(cfg, _unit(i, n1 + 1), y2)
        for i in range(l1):
            J[:, n1 + i] = _np_master(cfg, y1, _unit(i, l1 + 1))
        try:
            dv = np.linalg.solve(J, -Fv)
        except np.linalg.LinAlgError:
            return None
        v = v + dv
        if np.linalg.norm(dv) <= opts.tol * (1 + np.linalg.norm(v)):
            return v
        if not np.all(np.isfinite(v)) or np.linalg.norm(v) > 1e12:
            return None
    return None


def _polish(cfg, r: BetheRoots, steps=8):
    """A few Newton steps directly on the Bethe equations."""
    z = np.array(list(r.nu) + list(r.lam), complex)
    n1 = len(r.nu)

    def resid(z):
        nu, lam = z[:n1], z[n1:]
        out = []
        for own, other, mm, mmp, big, small in ((nu, lam, cfg.m1, cfg.mp1, cfg.n, cfg.l),
                                                 (lam, nu, cfg.m2, cfg.mp2, cfg.l, cfg.n)):
            for p, x in enumerate(own):
                lhs = mm - 1 + x * (2 + mmp - 2 * big + small)
                rhs = x * (1 - x) * (sum(2 / (x - w) for k, w in enumerate(own) if k != p) - sum(1 / (x - w) for w in other))
                out.append(lhs - rhs)
        return np.array(out)

    h = 1e-7
    for _ in range(steps):
        f0 = resid(z)
        if np.max(np.abs(f0)) < 1e-15:
            break
        J = np.empty((len(z), len(z)), complex)
        for i in range(len(z)):
            dz = np.zeros(len(z), complex)
            dz[i] = h
            J[:, i] = (resid(z + dz) - f0) / h
        try:
            z = z - np.linalg.solve(J, f0)
        except np.linalg.LinAlgError:
            break
    return BetheRoots(tuple(z[:n1]), tuple(z[n1:]))


def _acceptable(y1, y2, sep=1e-6):
    for y in (y1, y2):
        if len(y) > 1:
            scale = max(1.0, np.max(np.abs(y)))
            if abs(P.polyval(0, y)) < sep * scale or abs(P.polyval(1, y)) < sep * scale:
                return None
    nu = P.polyroots(y1) if len(y1) > 1 else np.array([])
    lam = P.polyroots(y2) if len(y2) > 1 else np.array([])
    for grp in (nu, lam):
        for i in range(len(grp)):
            for j in range(i):
                if abs(grp[i] - grp[j]) < sep:
                    return None
    for a in nu:
        for b in lam:
            if abs(a - b) < sep:
                return None
    return BetheRoots(tuple(nu), tuple(lam))


def _jacobi_seed(k, a, b):
    if k == 0:
        return np.zeros(0, complex)
    try:
        return np.array([complex(c) for c in jacobi_monic(k, a, b)][:-1])
    except ValueError:
        return np.zeros(k, complex)


def _seed_vectors(cfg, opts, rng):
    n1, l1 = cfg.n - 1, cfg.l - 1
    anchor = np.concatenate([_jacobi_seed(n1, cfg.m1 + cfg.mp1 - 2 * cfg.n + 1, -cfg.m1),
                             _jacobi_seed(l1, cfg.m2 + cfg.mp2 - 2 * cfg.l + 1, -cfg.m2)])
    yield anchor
    size = n1 + l1
    for k in range(opts.seeds):
        noise = rng.normal(size=size) + 1j * rng.normal(size=size)
        if k % 2 == 0:
            yield anchor + noise * (0.5 + k / opts.seeds) * (1 + np.abs(anchor))
        else:
            yield noise * 3


def numeric_solve(m, opts: SolveOptions | None = None) -> SolveReport:
    """Best-effort Newton search for Bethe solutions; each hit is matched to spec(X_m)."""
    opts = opts or SolveOptions()
    cfg = BetheConfig.from_params(m)
    if cfg.n > opts.cap or cfg.l > opts.cap:
        raise ValueError(f"n, l must be at most {opts.cap}")
    d = multiplicity(m)
    report = SolveReport(expected=d)
    spec = np.array(spectrum(build_X(m)).values)
    x0 = xsca(m)
    if cfg.n == 1 or cfg.l == 1:
        seeds = iter([None])
    else:
        seeds = _seed_vectors(cfg, opts, np.random.default_rng(opts.rng_seed))
    seen = []
    for v0 in seeds:
        if v0 is None:
            # no nu-lambda coupling: the eigenvalue does not depend on the roots
            n1, l1 = cfg.n - 1, cfg.l - 1
            y1 = np.append(_jacobi_seed(n1, cfg.m1 + cfg.mp1 - 2 * cfg.n + 1, -cfg.m1), 1)
            y2 = np.append(_jacobi_seed(l1, cfg.m2 + cfg.mp2 - 2 * cfg.l + 1, -cfg.m2), 1)
            r = BetheRoots((), ())
            if l1 == 0 and cfg.n > 1 or n1 == 0 and cfg.l > 1:
                r = _acceptable(y1, y2) or r
        else:
            v = _newton(cfg, np.asarray(v0, complex), opts)
            if v is None:
                continue
            y1 = np.append(v[:cfg.n - 1], 1)
            y2 = np.append(v[cfg.n - 1:], 1)
            r = _acceptable(y1, y2)
            if r is None:
                continue
            r = _polish(cfg, r)
        key = np.sort_complex(np.array(list(r.nu) + [100 + z for z in r.lam], complex))
        if any(len(k) == len(key) and np.max(np.abs(k - key)) < 1e-6 for k in seen):
            continue
        seen.append(key)
        try:
            res = max(bethe_residual(cfg, r), default=0.0)
        except PoleHit:
            continue
        if res > opts.residual_tol:
            continue
        ev = complex(eigenvalue_from_roots(cfg, r, float(x0)))
        k = int(np.argmin(np.abs(spec - ev)))
        matched = float(spec[k]) if abs(spec[k] - ev) < opts.match_tol else None
        report.solutions.append(Solution(r, ev, res, matched))
        if report.complete:
            break
    return report
