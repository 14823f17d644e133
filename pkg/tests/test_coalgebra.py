"""Coalgebra axioms, dual algebras, and coalgebra morphisms."""

import random
from fractions import Fraction

import pytest

from coprimespec.catalog import (chain_inclusion, comatrix, direct_sum,
                                 divided_power, grouplike, incidence,
                                 permutation_morphism, Poset)
from coprimespec.coalgebra import (Coalgebra, CoalgebraMorphism, dual_algebra,
                                   identity_morphism)
from coprimespec.exceptions import InvalidMorphism
from coprimespec.fields import prime_field, rationals

F2 = prime_field(2)
F3 = prime_field(3)
QQ = rationals()


def test_catalog_families_satisfy_the_axioms():
    for field in (F2, F3, QQ):
        for c in (grouplike(3, field), divided_power(4, field),
                  comatrix(2, field)):
            report = c.validate()
            assert report.ok, report.issues


def test_direct_sum_validates_and_adds_dimensions():
    a = grouplike(2, F2)
    b = divided_power(2, F2)
    s = direct_sum(a, b)
    assert s.dim == a.dim + b.dim
    assert s.validate().ok


def test_incidence_coalgebra_of_a_chain_poset():
    poset = Poset.from_pairs(3, [(0, 1), (1, 2)])
    c = incidence(poset, F3)
    assert c.validate().ok
    assert c.dim == 6
    with pytest.raises(ValueError):
        Poset.from_pairs(2, [(0, 1), (1, 0)])


def test_validation_catches_a_broken_comultiplication():
    c = grouplike(2, F2)
    delta = [[list(row) for row in plane] for plane in c.delta]
    delta[0][0][0] = F2.zero
    broken = Coalgebra(F2, 2, delta, list(c.counit))
    report = broken.validate()
    assert not report.ok
    assert any(issue.law in ("counit-left", "counit-right")
               for issue in report.issues)


def test_validation_catches_a_broken_counit():
    c = divided_power(2, QQ)
    counit = list(c.counit)
    counit[0] = Fraction(2)
    broken = Coalgebra(QQ, c.dim, c.delta, counit)
    assert not broken.validate().ok


def test_shifted_divided_power_is_invalid():
    for field in (F2, QQ):
        report = divided_power(3, field, start=1).validate()
        assert not report.ok
        bad = {issue.index[0] for issue in report.issues
               if issue.law == "counit-left"}
        assert bad == {0, 1, 2, 3}


def unit_vector(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


def test_dual_of_grouplike_is_commutative_and_split():
    d = dual_algebra(grouplike(3, F3))
    e = d.unit_coords
    for i in range(3):
        f = unit_vector(F3, 3, i)
        assert tuple(d.multiply(f, e)) == f
        assert tuple(d.multiply(e, f)) == f
        assert tuple(d.multiply(f, f)) == f
        for j in range(3):
            g = unit_vector(F3, 3, j)
            assert tuple(d.multiply(f, g)) == tuple(d.multiply(g, f))


def test_dual_of_comatrix_is_a_matrix_algebra():
    d = dual_algebra(comatrix(2, F2))
    n = d.dim
    units = [unit_vector(F2, n, i) for i in range(n)]
    assert any(tuple(d.multiply(f, g)) != tuple(d.multiply(g, f))
               for f in units for g in units)


def test_dual_algebra_is_associative_on_seeded_samples():
    rng = random.Random(13)
    for c in (divided_power(3, F3), comatrix(2, F3)):
        d = dual_algebra(c)
        for _ in range(25):
            f, g, h = ([F3.random_element(rng) for _ in range(c.dim)]
                       for _ in range(3))
            left = d.multiply(d.multiply(f, g), h)
            right = d.multiply(f, d.multiply(g, h))
            assert tuple(left) == tuple(right)


def test_chain_inclusion_is_an_injective_morphism():
    theta = chain_inclusion(2, 4, F2)
    theta.require_valid()
    assert theta.is_injective()
    assert not theta.is_bijective()
    assert theta.source.dim == 3 and theta.target.dim == 5


def test_permutation_morphism_is_an_automorphism():
    theta = permutation_morphism(3, (2, 0, 1), F3)
    theta.require_valid()
    assert theta.is_bijective()
    inv = theta.inverse()
    both = theta.compose(inv)
    ident = identity_morphism(theta.source)
    assert both.matrix == ident.matrix


def test_identity_morphism_round_trip():
    c = divided_power(3, QQ)
    ident = identity_morphism(c)
    ident.require_valid()
    assert ident.is_bijective()


def test_non_coalgebra_map_is_rejected():
    from coprimespec.linalg import Matrix
    c = grouplike(2, F2)
    swap = Matrix.from_rows(F2, [(0, 1), (1, 0)])
    CoalgebraMorphism(c, c, swap).require_valid()
    shear = Matrix.from_rows(F2, [(1, 1), (0, 1)])
    with pytest.raises(InvalidMorphism):
        CoalgebraMorphism(c, c, shear).require_valid()
