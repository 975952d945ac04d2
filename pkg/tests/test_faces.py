import random
from fractions import Fraction as F

import pytest

from su3label.centralizer import structure_constants
from su3label.e6 import THETA, inner, root
from su3label.errors import EmptyWindow, NotARoot
from su3label.faces import (FaceRep, canonical_face, diagonally_similar, enumerate_faces, extract_finite,
                            face, face_orbit_keys, face_values, orthogonal_positive_roots, physical_face,
                            verify_window)
from su3label.tridiag import RationalTridiagonal, build_X, build_Y, char_poly


def test_canonical_face_is_orthogonal_to_theta():
    f = canonical_face()
    assert orthogonal_positive_roots(f) == [THETA]
    assert all(inner(r, s) == (2 if r == s else 1) for r in f.roots for s in f.roots)


def test_432_faces_in_one_orbit():
    fs = enumerate_faces()
    keys = {f.key() for f in fs}
    assert len(fs) == len(keys) == 432
    assert keys == face_orbit_keys(signed=True)
    assert len(face_orbit_keys(signed=False)) == 216


def test_each_face_has_one_orthogonal_root():
    for f in enumerate_faces()[::7]:
        assert orthogonal_positive_roots(f) == [f.orthogonal_root]


def test_theta_minus_alpha6_face():
    target = tuple(a - b for a, b in zip(THETA, root("6")))
    f = face(target)
    labels = {root(s) for s in ("123456", "12346", "1236", "12", "1")}
    assert set(f.roots) == labels


def test_face_errors():
    with pytest.raises(NotARoot):
        face((1, 0, 0, 0, 0, 1))
    with pytest.raises(ValueError):
        face(THETA, 6)


def test_lambda_split_on_faces():
    m = (3, 2, 4, 3, 2, 3)
    for f in enumerate_faces()[::37]:
        v = face_values(f, m)
        assert v.lambda_plus - v.lambda_minus == v.Lambda_value
        assert v.xi[5] == 0


def test_windows_satisfy_relations():
    rng = random.Random(7)
    fs = enumerate_faces()
    m = (3, 2, 4, 3, 2, 3)
    c = structure_constants(m)
    for _ in range(6):
        f = rng.choice(fs)
        assert verify_window(f, m, rng.randint(-6, 6), constants=c) == (0, 0, 0)


def test_window_check_detects_corruption():
    m = (3, 2, 4, 3, 2, 3)
    assert verify_window(canonical_face(), m, 0, corrupt=(4, F(1))) != (0, 0, 0)


def test_super_diagonal_vanishes_on_face_values():
    m = (3, 3, 3, 3, 3, 3)
    rep = FaceRep(canonical_face(), m)
    for x in rep.v.xi[:5]:
        if x.denominator == 1:
            assert rep.a_super(int(x)) == 0
    assert rep.a_super(0) == 0


def test_physical_extraction(small_physical):
    for m in small_physical[::17]:
        f, (lo, hi) = physical_face(m)
        X, Y = FaceRep(f, m).window(lo, hi)
        assert diagonally_similar(X, build_X(m).dense())
        assert diagonally_similar(Y, build_Y(m).dense())


def test_empty_extraction_window():
    m = (2, 2, 2, 2, 2, 2)
    f = canonical_face()
    with pytest.raises(EmptyWindow):
        for a in range(1, 6):
            extract_finite(f, m, a)


def test_k_faces_are_index_shifts():
    m = (3, 2, 4, 3, 2, 3)
    f0 = face(THETA, 0, 1)
    xi = face_values(f0, m).xi
    for k in range(1, 6):
        s = int(xi[k - 1])
        assert FaceRep(face(THETA, k, 1), m).window(-3, 3) == FaceRep(f0, m).window(s - 3, s + 3)


def test_minus_face_blocks_mirror_the_face(small_physical):
    for m in small_physical[::41]:
        f, fm = face(THETA, 0, 1), face(THETA, 0, -1)
        for a in range(1, 6):
            try:
                X1, Y1 = extract_finite(fm, m, a)
            except EmptyWindow:
                continue
            X2, Y2 = extract_finite(f, m, 6 - a)
            cp = [char_poly(RationalTridiagonal.from_dense(A)) for A in (X1, X2, Y1, Y2)]
            assert cp[0] == cp[1] and cp[2] == cp[3]
