"""Bicolinear endomorphism rings, annihilators, kernels, and ideals.

The endomorphism ring of a bicomodule is computed as the joint commutant
of all dual-action operators; over a field a linear map is bicolinear
exactly when it commutes with both rational actions.  The ring product is
opposite composition (x * y means "apply x, then y"), which makes the
annihilator of any subspace a right ideal.

Ideal enumeration/primality is written against a tiny algebra protocol
(field, dim, multiply, unit_coords) so the same machinery serves both the
endomorphism ring and a convolution dual algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bicomodule import Bicomodule
from .exceptions import (AmbientMismatch, BudgetExceeded, CoalgebraMismatch,
                         UnsupportedOverQ)
from .linalg import Matrix, Subspace, enumerate_subspaces, kernel


def intertwiners(src: Bicomodule, tgt: Bicomodule):
    """Basis of bicolinear maps src -> tgt over the same coalgebra pair."""
    if src.left != tgt.left or src.right != tgt.right:
        raise CoalgebraMismatch("intertwiners need matching coalgebras")
    field = src.field
    ns, nt = src.dim, tgt.dim
    rows = []
    for op_s, op_t in zip(src.all_ops(), tgt.all_ops()):
        ts, tt = op_s.data, op_t.data
        for a in range(nt):
            for i in range(ns):
                row = [field.zero] * (nt * ns)
                for b in range(ns):
                    if ts[b][i]:
                        row[a * ns + b] = field.add(row[a * ns + b], ts[b][i])
                for b in range(nt):
                    if tt[a][b]:
                        row[b * ns + i] = field.sub(row[b * ns + i], tt[a][b])
                rows.append(row)
    sol = kernel(Matrix(field, len(rows), nt * ns, rows))
    mats = []
    for flat in sol.basis:
        data = [flat[a * ns:(a + 1) * ns] for a in range(nt)]
        mats.append(Matrix(field, nt, ns, data))
    return mats


class EndoAlgebra:
    """Ring of bicolinear endomorphisms with opposite-composition product."""

    __slots__ = ("bicomodule", "field", "basis", "dim", "flat", "unit_coords", "_table")

    def __init__(self, bicomodule: Bicomodule, basis):
        self.bicomodule = bicomodule
        self.field = bicomodule.field
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        n = bicomodule.dim
        self.flat = Subspace.from_vectors(self.field, n * n,
                                          [mat.flatten() for mat in self.basis])
        ident = Matrix.identity(self.field, n)
        self.unit_coords = self.coords_of(ident)
        self._table = None

    @classmethod
    def compute(cls, m: Bicomodule) -> "EndoAlgebra":
        return cls(m, intertwiners(m, m))

    def element(self, coords) -> Matrix:
        field, n = self.field, self.bicomodule.dim
        data = [[field.zero] * n for _ in range(n)]
        for c, mat in zip(coords, self.basis):
            if c:
                for a in range(n):
                    row = mat.data[a]
                    for b in range(n):
                        if row[b]:
                            data[a][b] = field.add(data[a][b], field.mul(c, row[b]))
        return Matrix(field, n, n, data)

    def coords_of(self, mat: Matrix):
        """Coordinates of a bicolinear matrix in the stored basis."""
        return self.flat.coords_of(mat.flatten())

    def contains_matrix(self, mat: Matrix) -> bool:
        return self.flat.contains_vector(mat.flatten())

    def multiply(self, x, y):
        """Opposite composition on coordinates: (x * y)(v) = y(x(v))."""
        if self._table is None:
            table = []
            for a in range(self.dim):
                row = []
                for b in range(self.dim):
                    row.append(self.coords_of(self.basis[b] @ self.basis[a]))
                table.append(tuple(row))
            self._table = tuple(table)
        field = self.field
        out = [field.zero] * self.dim
        for a, xa in enumerate(x):
            if xa:
                row = self._table[a]
                for b, yb in enumerate(y):
                    if yb:
                        prod = row[b]
                        coeff = field.mul(xa, yb)
                        for i, p in enumerate(prod):
                            if p:
                                out[i] = field.add(out[i], field.mul(coeff, p))
        return tuple(out)

    def is_commutative(self) -> bool:
        units = coordinate_vectors(self.field, self.dim)
        for a, ea in enumerate(units):
            for eb in units[a + 1:]:
                if self.multiply(ea, eb) != self.multiply(eb, ea):
                    return False
        return True

    def elements(self):
        """All ring elements as coordinate vectors; finite fields only."""
        zero_vec = Subspace.full(self.field, self.dim)
        return zero_vec.members()

    def __repr__(self):
        return f"EndoAlgebra(dim={self.dim} over {self.field.name})"


def endo_algebra(m: Bicomodule) -> EndoAlgebra:
    return EndoAlgebra.compute(m)


def coordinate_vectors(field, n):
    ident = Matrix.identity(field, n)
    return [tuple(row) for row in ident.data]


@dataclass
class RightIdeal:
    """Subspace of an algebra flagged with its closure properties."""

    algebra: object
    subspace: Subspace
    is_right: bool
    is_two_sided: bool

    @property
    def dim(self):
        return self.subspace.dim

    def is_proper(self):
        return not self.subspace.contains_vector(self.algebra.unit_coords)


def _closure_flags(algebra, sub: Subspace):
    units = coordinate_vectors(algebra.field, algebra.dim)
    right = True
    for x in sub.basis:
        for e in units:
            if not sub.contains_vector(algebra.multiply(x, e)):
                right = False
                break
        if not right:
            break
    left = True
    for x in sub.basis:
        for e in units:
            if not sub.contains_vector(algebra.multiply(e, x)):
                left = False
                break
        if not left:
            break
    return right, left


def make_ideal(algebra, sub: Subspace) -> RightIdeal:
    right, left = _closure_flags(algebra, sub)
    return RightIdeal(algebra, sub, right, right and left)


def an(sub: Subspace, endo: EndoAlgebra) -> RightIdeal:
    """Annihilator {f : f(sub) = 0} as a right ideal of the endomorphism ring."""
    m = endo.bicomodule
    if sub.ambient != m.dim:
        raise AmbientMismatch("subspace does not live in the bicomodule")
    field = endo.field
    rows = []
    for v in sub.basis:
        images = [mat.apply(v) for mat in endo.basis]
        for i in range(m.dim):
            rows.append([img[i] for img in images])
    if not rows:
        solution = Subspace.full(field, endo.dim)
    else:
        solution = kernel(Matrix(field, len(rows), endo.dim, rows))
    ideal = make_ideal(endo, solution)
    return ideal


def ke(ideal, endo: EndoAlgebra) -> Subspace:
    """Joint kernel of an ideal (or plain coordinate subspace) of endomorphisms."""
    sub = ideal.subspace if isinstance(ideal, RightIdeal) else ideal
    m = endo.bicomodule
    if sub.is_zero():
        return Subspace.full(endo.field, m.dim)
    mats = [endo.element(coords) for coords in sub.basis]
    return kernel(Matrix.stack(mats))


def ideal_product(algebra, a: Subspace, b: Subspace) -> Subspace:
    """Span of pairwise products; the ideal product for two-sided operands."""
    vectors = [algebra.multiply(x, y) for x in a.basis for y in b.basis]
    return Subspace.from_vectors(algebra.field, algebra.dim, vectors)


def enumerate_ideals(algebra, side: str = "right", budget: int = 50000):
    """All right (or two-sided) ideals of a finite algebra, canonically sorted.

    Raises UnsupportedOverQ over the rationals and BudgetExceeded when the
    subspace count of the coordinate space is too large.
    """
    field = algebra.field
    if field.p is None:
        raise UnsupportedOverQ("ideal enumeration needs a finite field")
    if side not in ("right", "two_sided"):
        raise ValueError(f"side must be 'right' or 'two_sided', got {side!r}")
    found = []
    for sub in enumerate_subspaces(field, algebra.dim, budget=budget):
        right, left = _closure_flags(algebra, sub)
        if not right:
            continue
        if side == "two_sided" and not left:
            continue
        found.append(RightIdeal(algebra, sub, right, right and left))
    found.sort(key=lambda ideal: ideal.subspace.sort_key())
    return found


def is_prime_ideal(algebra, ideal: RightIdeal, two_sided) -> bool:
    """Primality of a proper two-sided ideal against an enumerated ideal list."""
    if not ideal.is_two_sided or not ideal.is_proper():
        return False
    sub = ideal.subspace
    for j1 in two_sided:
        if sub.contains(j1.subspace):
            continue
        for j2 in two_sided:
            if sub.contains(j2.subspace):
                continue
            if sub.contains(ideal_product(algebra, j1.subspace, j2.subspace)):
                return False
    return True


def is_semiprime_ideal(algebra, ideal: RightIdeal, two_sided) -> bool:
    """J*J <= I implies J <= I over enumerated two-sided J, with I proper."""
    if not ideal.is_two_sided or not ideal.is_proper():
        return False
    sub = ideal.subspace
    for j in two_sided:
        if sub.contains(j.subspace):
            continue
        if sub.contains(ideal_product(algebra, j.subspace, j.subspace)):
            return False
    return True


def prime_radical(algebra, two_sided) -> Subspace:
    """Intersection of the prime two-sided ideals."""
    primes = [i for i in two_sided if is_prime_ideal(algebra, i, two_sided)]
    out = Subspace.full(algebra.field, algebra.dim)
    for ideal in primes:
        out = out.intersect(ideal.subspace)
    return out


def maximal_ideals(ideals):
    """Maximal proper members of an ideal list, by inclusion."""
    proper = [i for i in ideals if i.is_proper()]
    out = []
    for i in proper:
        if not any(j is not i and j.subspace.contains(i.subspace)
                   and j.subspace != i.subspace for j in proper):
            out.append(i)
    return out


def jacobson_radical(algebra, right_ideals) -> Subspace:
    """Intersection of the maximal right ideals."""
    out = Subspace.full(algebra.field, algebra.dim)
    for ideal in maximal_ideals(right_ideals):
        out = out.intersect(ideal.subspace)
    return out


def radical_char0(algebra) -> Subspace:
    """Radical of a finite-dimensional algebra in characteristic zero.

    Dickson's criterion: the radical is {x : tr(L_{xy}) = 0 for all y},
    with L the left-multiplication operator.  The algebra is Artinian, so
    the Jacobson and prime radicals coincide with it.  The trace form can
    degenerate in characteristic p, so this route is rejected there.
    """
    field = algebra.field
    if field.is_finite:
        raise ValueError("the trace-form radical needs characteristic zero")
    n = algebra.dim
    units = coordinate_vectors(field, n)

    def left_trace(z):
        total = field.zero
        for c, e in enumerate(units):
            total = field.add(total, algebra.multiply(z, e)[c])
        return total

    gram = [[left_trace(algebra.multiply(e_i, e_j)) for e_i in units]
            for e_j in units]
    return kernel(Matrix(field, n, n, gram))


def right_ideal_generated(algebra, vectors) -> RightIdeal:
    """Right ideal generated by coordinate vectors, closed by iteration."""
    units = coordinate_vectors(algebra.field, algebra.dim)
    sub = Subspace.from_vectors(algebra.field, algebra.dim, vectors)
    queue = list(sub.basis)
    while queue:
        x = queue.pop()
        for e in units:
            y = algebra.multiply(x, e)
            if not sub.contains_vector(y):
                sub = sub.sum_with(Subspace.from_vectors(algebra.field, algebra.dim, [y]))
                queue.append(y)
    return make_ideal(algebra, sub)
