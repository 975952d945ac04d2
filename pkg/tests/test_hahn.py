from fractions import Fraction as F

import pytest

from su3label import qmat
from su3label.errors import DimensionMismatch, EmptyWindow
from su3label.hahn import (EtaParams, compose_for_params, eta_from_xi, hahn_algebra_check, hahn_matrices,
                           heun_hahn_compose, z_coefficients)
from su3label.tridiag import build_X, build_Y, xi_params


def test_composition_reproduces_matrices(small_physical):
    for m in small_physical[::13]:
        Xp, Yp, H1, H2, eta, _ = compose_for_params(m)
        assert Xp == build_X(m).dense()
        assert Yp == build_Y(m).dense()
        assert hahn_algebra_check(H1, H2, eta) == (0, 0)


def test_eta_relabel_puts_extremes_last():
    xp = xi_params((3, 2, 4, 3, 2, 3))
    e = eta_from_xi(xp).eta
    assert e[2] == max(xp.xi[:3]) and e[3] == min(xp.xi[3:5]) and e[5] == 0
    assert min(e[0], e[1]) == xp.xi_a and max(e[4], e[5]) == xp.xi_b


def test_hahn_pair_size():
    m = (3, 3, 3, 3, 3, 3)
    H1, H2 = hahn_matrices(eta_from_xi(xi_params(m)))
    assert len(H1) == len(H2) == build_X(m).dim


def test_algebra_check_sees_a_perturbation():
    _, _, H1, H2, eta, _ = compose_for_params((3, 3, 3, 3, 3, 3))
    H2 = [row[:] for row in H2]
    H2[0][0] += 1
    assert hahn_algebra_check(H1, H2, eta) != (0, 0)


def test_empty_window():
    with pytest.raises(EmptyWindow):
        hahn_matrices(EtaParams((F(1), F(1), F(2), F(0), F(1), F(0))))


def test_compose_shape_check():
    z = z_coefficients(EtaParams((F(3), F(4), F(5), F(0), F(1), F(0))), 2)
    with pytest.raises(DimensionMismatch):
        heun_hahn_compose(qmat.eye(2), qmat.eye(3), z)
