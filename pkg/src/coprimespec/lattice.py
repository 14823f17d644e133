"""Subbicomodule lattices, socles, and structural predicates.

Over a finite field the whole lattice is enumerated from reduced echelon
forms and certified exhaustive.  Over Q the lattice of subbicomodules can
be infinite, so a Generated mode closes cyclic subbicomodules of basis and
probe vectors under sum and intersection; every result computed against a
Generated lattice is only valid relative to the enumerated elements and is
reported as such.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from random import Random

from .bicomodule import Bicomodule, is_subbicomodule, restrict
from .endo import EndoAlgebra, an, intertwiners, ke, right_ideal_generated
from .exceptions import (BudgetExceeded, ExhaustiveUnavailableOverQ,
                         UncertifiedLattice)
from .linalg import Matrix, Subspace, count_subspaces, enumerate_subspaces

_CLOSURE_CAP = 20000


class LatticeMode(Enum):
    EXHAUSTIVE = "exhaustive"
    GENERATED = "generated"


def cyclic_subbicomodule(m: Bicomodule, v) -> Subspace:
    """Smallest subbicomodule containing v: the two-sided rational orbit span."""
    field = m.field
    sub = Subspace.from_vectors(field, m.dim, [tuple(field.coerce(x) for x in v)])
    ops = m.all_ops()
    queue = list(sub.basis)
    while queue:
        w = queue.pop()
        for op in ops:
            u = op.apply(w)
            if not sub.contains_vector(u):
                sub = sub.sum_with(Subspace.from_vectors(field, m.dim, [u]))
                queue.append(u)
    return sub


def is_fully_invariant(sub: Subspace, endo: EndoAlgebra) -> bool:
    """Stability under every bicolinear endomorphism (basis suffices)."""
    for mat in endo.basis:
        for row in sub.basis:
            if not sub.contains_vector(mat.apply(row)):
                return False
    return True


class Lattice:
    """Canonically sorted subbicomodule list with a full-invariance mask."""

    def __init__(self, bicomodule: Bicomodule, elements, fi_mask, mode: LatticeMode):
        self.bicomodule = bicomodule
        self.elements = tuple(elements)
        self.fi_mask = tuple(fi_mask)
        self.mode = mode
        self._index = {sub.key(): i for i, sub in enumerate(self.elements)}

    @property
    def certified(self) -> bool:
        return self.mode is LatticeMode.EXHAUSTIVE

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index_of(self, sub: Subspace) -> int:
        try:
            return self._index[sub.key()]
        except KeyError:
            raise KeyError(f"subspace not in the enumerated lattice: {sub!r}") from None

    def contains_element(self, sub: Subspace) -> bool:
        return sub.key() in self._index

    def is_fi(self, sub: Subspace) -> bool:
        return self.fi_mask[self.index_of(sub)]

    def fi_elements(self):
        return [e for e, m in zip(self.elements, self.fi_mask) if m]

    def nonzero_elements(self):
        return [e for e in self.elements if not e.is_zero()]

    def nonzero_fi_elements(self):
        return [e for e in self.fi_elements() if not e.is_zero()]

    def zero(self) -> Subspace:
        return Subspace.zero(self.bicomodule.field, self.bicomodule.dim)

    def top(self) -> Subspace:
        return Subspace.full(self.bicomodule.field, self.bicomodule.dim)

    def elements_below(self, bound: Subspace):
        return [e for e in self.elements if bound.contains(e)]


def _all_ops_scalar(m: Bicomodule) -> bool:
    for op in m.all_ops():
        c = op.data[0][0]
        for i in range(m.dim):
            for j in range(m.dim):
                want = c if i == j else m.field.zero
                if op.data[i][j] != want:
                    return False
    return True


def enumerate_lattice(m: Bicomodule, mode: str = "exhaustive", budget: int = 200000,
                      endo: EndoAlgebra | None = None, seed: int = 0) -> Lattice:
    """Subbicomodule lattice of m.

    mode 'exhaustive' (finite fields only): every subspace is tested; the
    budget bounds the subspace count of the ambient space.  mode 'generated':
    cyclic subbicomodules of the basis vectors plus a few dozen seeded probe
    vectors (never more than the budget), closed under sum and intersection.
    """
    field = m.field
    if endo is None:
        endo = EndoAlgebra.compute(m)
    if mode == "exhaustive":
        if field.p is None:
            raise ExhaustiveUnavailableOverQ(
                "exhaustive lattice enumeration needs a finite field; use mode='generated'")
        elements = [sub for sub in enumerate_subspaces(field, m.dim, budget=budget)
                    if is_subbicomodule(m, sub)]
        lattice_mode = LatticeMode.EXHAUSTIVE
    elif mode == "generated":
        if field.p is None and m.dim >= 2 and _all_ops_scalar(m):
            raise ExhaustiveUnavailableOverQ(
                "every 1-dimensional subspace is a subbicomodule, so the lattice "
                "is infinite over Q; no finite enumeration is faithful")
        rng = Random(seed)
        probe_count = min(max(0, budget), 8 * m.dim + 16)
        probes = [tuple(field.random_element(rng) for _ in range(m.dim))
                  for _ in range(probe_count)]
        basis_vectors = Matrix.identity(field, m.dim).data
        seeds = [cyclic_subbicomodule(m, v) for v in list(basis_vectors) + probes]
        seen = {}
        for sub in seeds + [Subspace.zero(field, m.dim), Subspace.full(field, m.dim)]:
            seen[sub.key()] = sub
        worklist = list(seen.values())
        while worklist:
            current = worklist.pop()
            for other in list(seen.values()):
                for candidate in (current.sum_with(other), current.intersect(other)):
                    if candidate.key() not in seen:
                        if len(seen) >= _CLOSURE_CAP:
                            raise BudgetExceeded(
                                f"generated lattice closure exceeded {_CLOSURE_CAP} elements")
                        seen[candidate.key()] = candidate
                        worklist.append(candidate)
        elements = list(seen.values())
        lattice_mode = LatticeMode.GENERATED
    else:
        raise ValueError(f"mode must be 'exhaustive' or 'generated', got {mode!r}")

    elements.sort(key=lambda s: s.sort_key())
    fi_mask = [is_fully_invariant(sub, endo) for sub in elements]
    return Lattice(m, elements, fi_mask, lattice_mode)


@dataclass
class SocleReport:
    simples: list
    simples_fi: list
    coradical: Subspace
    certified: bool


def simples(lattice: Lattice):
    """Minimal nonzero lattice elements."""
    nonzero = lattice.nonzero_elements()
    out = []
    for e in nonzero:
        if not any(o is not e and e.contains(o) and o != e for o in nonzero):
            out.append(e)
    return out


def simples_fi(lattice: Lattice):
    """Minimal nonzero fully invariant elements (within the invariant sublattice)."""
    nonzero = lattice.nonzero_fi_elements()
    out = []
    for e in nonzero:
        if not any(o is not e and e.contains(o) and o != e for o in nonzero):
            out.append(e)
    return out


def coradical(lattice: Lattice) -> Subspace:
    total = lattice.zero()
    for s in simples(lattice):
        total = total.sum_with(s)
    return total


def socle_report(lattice: Lattice) -> SocleReport:
    if not lattice.certified:
        warnings.warn("socle computed relative to a generated lattice",
                      UncertifiedLattice, stacklevel=2)
    return SocleReport(simples(lattice), simples_fi(lattice), coradical(lattice),
                       lattice.certified)


@dataclass
class PredicateReport:
    """Structural hypotheses evaluated on one instance.

    `certified` is False when the lattice is Generated, in which case every
    universally quantified answer is relative to the enumerated elements.
    """

    duo: bool
    quasi_duo: bool
    self_injective: bool
    self_cogenerator: bool
    intrinsically_injective: bool
    intrinsic_partial: bool
    subdirectly_irreducible: bool
    semisimple: bool
    property_s: bool
    property_s_fi: bool
    corad_essential: bool
    e_right_duo: bool | None
    certified: bool
    notes: tuple = dataclass_field(default_factory=tuple)

    def to_dict(self):
        return {
            "duo": self.duo,
            "quasi_duo": self.quasi_duo,
            "self_injective": self.self_injective,
            "self_cogenerator": self.self_cogenerator,
            "intrinsically_injective": self.intrinsically_injective,
            "intrinsic_partial": self.intrinsic_partial,
            "subdirectly_irreducible": self.subdirectly_irreducible,
            "semisimple": self.semisimple,
            "property_s": self.property_s,
            "property_s_fi": self.property_s_fi,
            "corad_essential": self.corad_essential,
            "e_right_duo": self.e_right_duo,
            "certified": self.certified,
            "notes": list(self.notes),
        }


def predicates(m: Bicomodule, lattice: Lattice, endo: EndoAlgebra,
               right_ideals=None, ideal_budget: int = 50000, seed: int = 0) -> PredicateReport:
    """Evaluate the structural hypotheses used to gate theorem checks."""
    notes = []
    if not lattice.certified:
        notes.append("relative to enumerated lattice")

    duo = all(lattice.fi_mask)
    simple_list = simples(lattice)
    quasi_duo = all(lattice.is_fi(s) for s in simple_list)

    self_injective = True
    for k in lattice.nonzero_elements():
        restricted, _ = restrict(m, k)
        hom_dim = len(intertwiners(restricted, m))
        an_dim = an(k, endo).subspace.dim
        if hom_dim != endo.dim - an_dim:
            self_injective = False
            break

    self_cogenerator = all(ke(an(k, endo), endo) == k for k in lattice.elements)

    intrinsic_partial = False
    if endo.field.p is not None:
        if right_ideals is None:
            try:
                from .endo import enumerate_ideals
                right_ideals = enumerate_ideals(endo, side="right", budget=ideal_budget)
            except BudgetExceeded:
                right_ideals = None
        samples = right_ideals
    else:
        samples = None
    if samples is None:
        intrinsic_partial = True
        rng = Random(seed)
        sampled = [an(k, endo) for k in lattice.elements]
        for _ in range(8):
            vec = tuple(endo.field.random_element(rng) for _ in range(endo.dim))
            sampled.append(right_ideal_generated(endo, [vec]))
        samples = sampled
        notes.append("intrinsic injectivity tested on a finite ideal sample")
    intrinsically_injective = all(
        an(ke(ideal, endo), endo).subspace == ideal.subspace for ideal in samples)

    nonzero = lattice.nonzero_elements()
    meet = lattice.top()
    for e in nonzero:
        meet = meet.intersect(e)
    subdirectly_irreducible = not meet.is_zero()

    corad = coradical(lattice)
    semisimple = corad.is_full()
    property_s = all(any(e.contains(s) for s in simple_list) for e in nonzero)
    fi_simples = simples_fi(lattice)
    property_s_fi = all(any(e.contains(s) for s in fi_simples)
                        for e in lattice.nonzero_fi_elements())
    corad_essential = all(not corad.intersect(e).is_zero() for e in nonzero)

    if endo.field.p is not None and right_ideals is not None:
        e_right_duo = all(i.is_two_sided for i in right_ideals)
    else:
        e_right_duo = None
        if endo.field.p is None:
            notes.append("right-duo status of the endomorphism ring unknown over Q")

    return PredicateReport(
        duo=duo, quasi_duo=quasi_duo, self_injective=self_injective,
        self_cogenerator=self_cogenerator,
        intrinsically_injective=intrinsically_injective,
        intrinsic_partial=intrinsic_partial,
        subdirectly_irreducible=subdirectly_irreducible, semisimple=semisimple,
        property_s=property_s, property_s_fi=property_s_fi,
        corad_essential=corad_essential, e_right_duo=e_right_duo,
        certified=lattice.certified, notes=tuple(notes))
