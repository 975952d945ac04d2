from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from su3label.e6 import (CARTAN, THETA, SignedWeylElement, apply_param_action, averaging_kernels,
                         coefficient_one_roots, generate_roots, inner, is_root, longest_element,
                         minimal_word, missing_label_subgroup, omega3, param_action, param_root_map,
                         root, root_label, root_poset, set_stabilizer, weyl_group, word_matrix)
from su3label.errors import NotARoot
from su3label.weights import arrangement, arrangement_forms


def test_root_counts():
    rs = generate_roots()
    assert len(rs.roots) == 72 and len(rs.positive) == 36
    assert rs.highest == THETA == (1, 2, 3, 2, 1, 2)
    assert all(inner(r, r) == 2 for r in rs.roots)


def test_cartan_symmetric_and_definite():
    assert (CARTAN == CARTAN.T).all()
    assert np.all(np.linalg.eigvalsh(CARTAN.astype(float)) > 0)


def test_root_labels():
    assert root("12346") == (1, 1, 1, 1, 0, 1)
    assert root_label((1, 1, 1, 0, 0, 1)) == "1236"
    assert not is_root(root("126"))
    assert not is_root(root("16"))


def test_weyl_order():
    W = weyl_group()
    assert len(W) == 51840
    w0 = longest_element()
    assert (w0 @ np.array(THETA) == -np.array(THETA)).all()


def test_coefficient_one_roots_are_the_arrangement():
    pm = param_root_map()
    forms = Counter(pm.linear_form(r) for r in coefficient_one_roots())
    assert len(coefficient_one_roots()) == 18
    assert forms == Counter(arrangement_forms())


def test_parameter_roots_take_parameter_values():
    pm = param_root_map()
    m = (3, 2, 4, 3, 2, 3)
    for k in range(6):
        assert pm.value(pm.B[:, k], m) == m[k]
    # values of the 18 roots reproduce the arrangement entries
    arr = arrangement(m)
    vals = sorted(pm.value(r, m) for r in coefficient_one_roots())
    assert vals == sorted(Fraction(x) for x in arr.entries())


def test_missing_label_subgroup():
    G = missing_label_subgroup()
    assert len(G) == 144
    assert set(G) == set(set_stabilizer(coefficient_one_roots()))
    assert sum(g.sign for g in G) == 0


def test_param_action_preserves_multiplicity_values():
    m = (3, 2, 4, 3, 2, 3)
    base = sorted(param_root_map().value(r, m) for r in coefficient_one_roots())
    for g in missing_label_subgroup()[::9]:
        mp = apply_param_action(param_action(g), m)
        vals = sorted(param_root_map().value(r, mp) for r in coefficient_one_roots())
        assert vals == base


def test_averaging_kernels_move_the_orbit():
    K = averaging_kernels()
    assert K.shape == (51840, 6, 6)
    assert (K[0] % 1 == 0).all()


def test_omega3_pairs_with_simple_roots():
    w = omega3()
    for i in range(6):
        a = np.zeros(6, dtype=np.int64)
        a[i] = 1
        assert sum(Fraction(int(x)) * y for x, y in zip(CARTAN @ a, w)) == int(i == 2)


def test_minimal_word():
    target = tuple(a - b for a, b in zip(THETA, root("6")))
    assert minimal_word(target) == [6]
    w = minimal_word(root("1"))
    assert len(w) == 10
    assert tuple(word_matrix(w) @ np.array(THETA)) == root("1")
    with pytest.raises(NotARoot):
        minimal_word((1, 0, 0, 0, 0, 1))


def test_poset_edges():
    P = root_poset()
    assert len(P["nodes"]) == 36
    for b, c, i in P["edges"]:
        assert tuple(y - x for x, y in zip(b, c)) == root(str(i))
    # the highest root covers nothing
    assert all(b != THETA for b, _, _ in P["edges"])


def test_signed_elements_compose():
    s = SignedWeylElement.of(weyl_group()[5], -1)
    t = SignedWeylElement.of(weyl_group()[9])
    assert (s @ t).act(THETA) == s.act(t.act(THETA))
