"""Catalog families, references, and the seeded random instance generator."""

import json
import random

import pytest

from coprimespec.catalog import (Poset, comatrix, divided_power, grouplike,
                                 incidence, looks_like_ref, random_instance,
                                 random_poset, resolve_ref,
                                 resolve_ref_to_bicomodule, right_comodule)
from coprimespec.coalgebra import Coalgebra
from coprimespec.exceptions import ParseError
from coprimespec.fields import prime_field, rationals

F2 = prime_field(2)
F3 = prime_field(3)
QQ = rationals()


def test_grouplike_structure_constants():
    c = grouplike(2, F3)
    assert c.dim == 2
    assert c.delta[0][0][0] == F3.one
    assert c.delta[0][0][1] == F3.zero
    assert c.delta[1][1][1] == F3.one
    assert list(c.counit) == [1, 1]


def test_divided_power_structure_constants():
    c = divided_power(2, QQ)
    assert c.dim == 3
    assert c.delta[2][0][2] == QQ.one
    assert c.delta[2][1][1] == QQ.one
    assert c.delta[2][2][0] == QQ.one
    assert c.delta[2][1][0] == QQ.zero
    assert list(c.counit) == [1, 0, 0]


def test_family_constructors_reject_bad_sizes():
    with pytest.raises(ValueError):
        grouplike(0, F2)
    with pytest.raises(ValueError):
        comatrix(0, F2)
    with pytest.raises(ValueError):
        divided_power(-1, F2)


def test_reference_resolution():
    assert looks_like_ref("grouplike:3")
    assert looks_like_ref("sum:(grouplike:2,divided:1)")
    assert not looks_like_ref("instances/foo.json")
    kind, c = resolve_ref("grouplike:3", F2)
    assert kind == "coalgebra"
    assert isinstance(c, Coalgebra) and c.dim == 3
    assert resolve_ref("divided:4", QQ)[1].dim == 5
    assert resolve_ref("comatrix:2", F3)[1].dim == 4


def test_reference_errors():
    for bad in ("grouplike", "grouplike:x", "nosuch:3", "divided:"):
        with pytest.raises(ParseError):
            resolve_ref(bad, F2)


def test_sum_and_quotient_references():
    kind, s = resolve_ref("sum:(grouplike:2,divided:1)", F2)
    assert kind == "coalgebra" and s.dim == 4
    m = resolve_ref_to_bicomodule("quotient:(divided:3,v0)", F2)
    assert m.dim == 3
    assert m.validate().ok


def test_incidence_reference_via_json_file(tmp_path):
    spec = {"size": 3, "leq": [[0, 1], [1, 2]]}
    path = tmp_path / "poset.json"
    path.write_text(json.dumps(spec))
    kind, c = resolve_ref(f"incidence:{path}", F2)
    assert kind == "coalgebra" and c.dim == 6
    assert c.validate().ok


def test_right_comodule_reference():
    m = resolve_ref_to_bicomodule("grouplike:2", F2)
    assert m.regular_of is not None
    one_sided = right_comodule(resolve_ref("grouplike:2", F2)[1])
    assert one_sided.left.dim == 1


def test_random_poset_is_seed_deterministic():
    a = random_poset(random.Random(4), max_intervals=5)
    b = random_poset(random.Random(4), max_intervals=5)
    assert a == b
    c = random_poset(random.Random(5), max_intervals=5)
    assert isinstance(c, Poset)


def test_random_instance_is_seed_deterministic():
    for seed in (0, 7, 23):
        m1, d1 = random_instance(seed, field=F2)
        m2, d2 = random_instance(seed, field=F2)
        assert d1 == d2
        assert m1.dim == m2.dim
        assert m1.rho_left == m2.rho_left
        assert m1.rho_right == m2.rho_right


def test_random_instances_respect_the_dimension_budget():
    for seed in range(20):
        m, desc = random_instance(seed, dim_budget=5, field=F3)
        assert 1 <= m.dim <= 5, desc
        assert m.validate().ok, desc


def test_random_instances_vary_with_the_seed():
    descriptors = {random_instance(seed, field=F2)[1] for seed in range(12)}
    assert len(descriptors) >= 4
