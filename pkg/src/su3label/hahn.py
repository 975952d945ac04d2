"""Hahn matrices H1, H2 and the Heun-Hahn form of X_m and Y_m."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import qmat
from .errors import DimensionMismatch, EmptyWindow
from .tridiag import XiParams, xi_params

F = Fraction


class EtaParams(NamedTuple):
    eta: tuple  # six rationals, eta[5] == 0


class HahnStructure(NamedTuple):
    A2: Fraction
    A3: Fraction


@dataclass(frozen=True)
class ZCoefficients:
    z: tuple  # z0 .. z12

    def __getitem__(self, i):
        return self.z[i]


def eta_from_xi(xi: XiParams) -> EtaParams:
    """Relabel xi so that min(eta1, eta2) = xi_a and max(eta5, eta6) = xi_b.

    The largest of xi1..xi3 goes to eta3 and the smallest of xi4, xi5 to eta4;
    the remaining order is irrelevant because every formula below is
    symmetric in (eta1, eta2) and in (eta5, eta6).
    """
    top = sorted(xi.xi[:3])
    bot = sorted(xi.xi[3:5])
    return EtaParams((F(top[0]), F(top[1]), F(top[2]), F(bot[0]), F(bot[1]), F(0)))


def hahn_structure(eta: EtaParams) -> HahnStructure:
    e1, e2, _, _, e5, e6 = eta.eta
    A2 = F(1, 2) * (1 - e1 ** 2 - e2 ** 2 - e5 ** 2 - e6 ** 2) + F(1, 8) * (e1 + e2 + e5 + e6) ** 2
    A3 = -F(1, 4) * (e1 + e2 - e5 - e6) * ((e1 - e2) ** 2 - (e5 - e6) ** 2)
    return HahnStructure(A2, A3)


def _alpha_up(eta, j, eb):
    e1, e2 = eta[0], eta[1]
    return -(j + eb - e1) * (j + eb - e2)


def _alpha_down(eta, j, eb):
    e5, e6 = eta[4], eta[5]
    return -(j + eb - e5) * (j + eb - e6)


def hahn_matrices(eta: EtaParams):
    """(H1, H2) as dense Fraction matrices of size xi_a - xi_b."""
    e = eta.eta
    ea, eb = min(e[0], e[1]), max(e[4], e[5])
    N = int(ea - eb)
    if N < 1:
        raise EmptyWindow(f"xi_a - xi_b = {N}")
    shift = (e[0] + e[1] + e[4] + e[5] - 2) / 4 - eb
    H1 = qmat.zeros(N)
    for i in range(N):
        H1[i][i] = shift - i
    c = F(1, 4) * (e[0] + e[1] - e[4] - e[5]) * (e[0] + e[1] - e[4] - e[5] - 2)
    H2 = qmat.zeros(N)
    for j in range(1, N + 1):
        up = _alpha_up(e, j, eb) if j < N else 0
        down = _alpha_down(e, j - 1, eb) if j > 1 else 0
        H2[j - 1][j - 1] = up + down + c
        if j < N:
            H2[j - 1][j] = _alpha_up(e, j, eb)
            H2[j][j - 1] = _alpha_down(e, j, eb)
    return H1, H2


def z_coefficients(eta: EtaParams, Lam) -> ZCoefficients:
    e1, e2, e3, e4, e5, e6 = eta.eta
    L = F(Lam)
    A2, A3 = hahn_structure(eta)
    s = e1 + e2 + e5 + e6
    q2 = e1 ** 2 + e2 ** 2 + e5 ** 2 + e6 ** 2
    q4 = e1 ** 4 + e2 ** 4 + e5 ** 4 + e6 ** 4
    z2 = (e3 + e4) / 2 - s / 4
    z3 = (e3 - e4) / 2
    z1 = z3 ** 2 - L ** 2 / 4
    z4 = F(1, 2)
    z0 = A3 / 4 - z2 / 3 * (L ** 2 / 4 + z3 ** 2 - 2 * z2 ** 2 / 9 - A2 - F(1, 2))
    # the q2**2 term enters with a minus sign (checked against build_Y on every physical m)
    z5 = (z3 * (A2 * L + z3) / 3 - z2 * A3 / 3 - A2 * (L - 2 * z3 + 4) * (L - 2 * z3 + 2) / 24
          - (L ** 2 - 4 - 4 * z3 ** 2) ** 2 / 192 - A3 * s / 8
          - ((2 * A2 - 1) * s ** 2 - q2 ** 2) / 48 - q4 / 12)
    z6 = (4 * z3 ** 2 - L ** 2) * z2 / 6 - A3 / 2
    z7 = (L + 1) * (2 * z3 - 1) / 4 - z2 ** 2 / 3
    z8 = (3 * L - 2 * z3) * z2 / 6
    z9 = -2 * z2 / 3
    z10 = (2 * z3 - L) * (L + 2 - 2 * z3) / 4
    z11 = L / 2 - z3
    z12 = z3 - L / 2 - 1
    return ZCoefficients((z0, z1, z2, z3, z4, z5, z6, z7, z8, z9, z10, z11, z12))


def heun_hahn_compose(H1, H2, z: ZCoefficients):
    if qmat.shape(H1) != qmat.shape(H2):
        raise DimensionMismatch("H1 and H2 differ in size")
    n = len(H1)
    I = qmat.eye(n)
    H3 = qmat.comm(H1, H2)
    AC = qmat.acomm(H1, H2)
    H11 = qmat.mul(H1, H1)
    Xp = qmat.add(qmat.scale(z[0], I), qmat.scale(z[1], H1), qmat.scale(z[2], H2),
                  qmat.scale(z[3], H3), qmat.scale(z[4], AC))
    Yp = qmat.add(qmat.scale(z[5], I), qmat.scale(z[6], H1), qmat.scale(z[7], H2),
                  qmat.scale(z[8], H3), qmat.scale(z[9], AC), qmat.scale(z[10], H11),
                  qmat.scale(z[11], qmat.mul(H11, H2)), qmat.scale(z[12], qmat.chain(H1, H2, H1)))
    return Xp, Yp


def hahn_algebra_check(H1, H2, eta: EtaParams):
    """Max-abs residuals of [H3,H2] = 2{H1,H2} + A3 and [H1,H3] = 2H1^2 + H2 + A2."""
    A2, A3 = hahn_structure(eta)
    n = len(H1)
    I = qmat.eye(n)
    H3 = qmat.comm(H1, H2)
    r1 = qmat.sub(qmat.comm(H3, H2), qmat.add(qmat.scale(2, qmat.acomm(H1, H2)), qmat.scale(A3, I)))
    r2 = qmat.sub(qmat.comm(H1, H3), qmat.add(qmat.scale(2, qmat.mul(H1, H1)), H2, qmat.scale(A2, I)))
    return qmat.max_abs(r1), qmat.max_abs(r2)


def compose_for_params(m):
    """Convenience: (X', Y', H1, H2, eta, z) for a physical parameter set."""
    xp = xi_params(m)
    eta = eta_from_xi(xp)
    H1, H2 = hahn_matrices(eta)
    z = z_coefficients(eta, xp.Lambda)
    Xp, Yp = heun_hahn_compose(H1, H2, z)
    return Xp, Yp, H1, H2, eta, z
