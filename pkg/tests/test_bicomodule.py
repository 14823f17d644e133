"""Bicomodules, coaction laws, centralizers, quotients and restrictions."""

import random

import pytest

from coprimespec.bicomodule import (act, centralizer, is_subbicomodule,
                                    phi_matrix, quotient, regular_bicomodule,
                                    restrict)
from coprimespec.catalog import (comatrix, divided_power, grouplike,
                                 right_comodule)
from coprimespec.exceptions import NotSubbicomodule
from coprimespec.fields import prime_field, rationals
from coprimespec.lattice import cyclic_subbicomodule
from coprimespec.linalg import Matrix, Subspace

F2 = prime_field(2)
F3 = prime_field(3)
QQ = rationals()


def test_regular_bicomodules_satisfy_the_coaction_laws():
    for field in (F2, F3, QQ):
        for c in (grouplike(2, field), divided_power(3, field),
                  comatrix(2, field)):
            m = regular_bicomodule(c)
            report = m.validate()
            assert report.ok, report.issues
            assert m.dim == c.dim
            assert m.regular_of is c


def test_one_sided_comodule_has_trivial_left_side():
    m = right_comodule(divided_power(2, F3))
    assert m.validate().ok
    assert m.left.dim == 1
    assert m.right.dim == 3
    assert m.regular_of is None


def test_operator_matrices_match_raw_tensors():
    m = regular_bicomodule(divided_power(3, F2))
    for i, j, k, coeff in m.right_triples():
        assert m.rho_right[i][j][k] == coeff
    for i, j, k, coeff in m.left_triples():
        assert m.rho_left[i][j][k] == coeff


def test_centralizer_elements_commute_with_both_coactions():
    for c in (divided_power(3, F2), grouplike(3, F3), comatrix(2, F2)):
        m = regular_bicomodule(c)
        cen = centralizer(m)
        n = m.dim
        right_ops = [Matrix.from_rows(m.field,
                                      [[m.rho_right[i][j][k] for i in range(n)]
                                       for j in range(n)])
                     for k in range(n)]
        left_ops = [Matrix.from_rows(m.field,
                                     [[m.rho_left[i][j][k] for i in range(n)]
                                      for k in range(n)])
                    for j in range(n)]
        for f in cen.basis():
            mat = phi_matrix(m, f)
            for op in right_ops + left_ops:
                assert (mat @ op) == (op @ mat)


def test_regular_centralizer_is_the_center_of_the_dual():
    cases = ((divided_power(4, F2), 5), (grouplike(3, F3), 3),
             (comatrix(2, F3), 1))
    for c, expected in cases:
        cen = centralizer(regular_bicomodule(c))
        assert cen.dim == expected
        assert cen.contains_counit()
        assert cen.closed_under_convolution()


def test_rational_actions_land_in_the_module():
    rng = random.Random(29)
    m = regular_bicomodule(divided_power(3, F3))
    for _ in range(20):
        f = [F3.random_element(rng) for _ in range(m.dim)]
        v = [F3.random_element(rng) for _ in range(m.dim)]
        lv = act(m, f, v, "left")
        rv = act(m, f, v, "right")
        assert len(lv) == m.dim and len(rv) == m.dim


def test_subbicomodule_detection_on_the_divided_power_chain():
    m = regular_bicomodule(divided_power(3, F2))
    c1 = Subspace.from_vectors(F2, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert is_subbicomodule(m, c1)
    skew = Subspace.from_vectors(F2, 4, [(0, 1, 0, 0)])
    assert not is_subbicomodule(m, skew)


def test_cyclic_subbicomodule_of_a_divided_power_generator():
    m = regular_bicomodule(divided_power(3, F2))
    for n in range(4):
        gen = tuple(1 if i == n else 0 for i in range(4))
        sub = cyclic_subbicomodule(m, gen)
        assert sub.dim == n + 1
        assert sub.contains_vector(gen)
        assert is_subbicomodule(m, sub)


def test_quotient_projects_the_coactions():
    m = regular_bicomodule(divided_power(3, F2))
    c0 = Subspace.from_vectors(F2, 4, [(1, 0, 0, 0)])
    q, proj = quotient(m, c0)
    assert q.dim == 3
    assert q.validate().ok
    assert proj.rows == 3 and proj.cols == 4
    assert all(m.field.is_zero(x) for x in proj.apply((1, 0, 0, 0)))
    with pytest.raises(ValueError):
        quotient(m, Subspace.full(F2, 4))


def test_restrict_keeps_the_laws():
    m = regular_bicomodule(divided_power(3, F2))
    c1 = cyclic_subbicomodule(m, (0, 1, 0, 0))
    r, embed = restrict(m, c1)
    assert r.dim == 2
    assert r.validate().ok
    for col in range(embed.cols):
        assert c1.contains_vector(embed.column(col))
    with pytest.raises(ValueError):
        restrict(m, Subspace.zero(F2, 4))
    skew = Subspace.from_vectors(F2, 4, [(0, 1, 0, 0)])
    with pytest.raises(NotSubbicomodule):
        restrict(m, skew)
