"""Bicomodules over a pair of coalgebras, with their rational dual actions.

A (D, C)-bicomodule M carries a left D-coaction and a right C-coaction:

    rho_right[i][j][k] = coefficient of e_j (x) c_k in the right coaction of e_i
    rho_left[i][j][k]  = coefficient of d_j (x) e_k in the left coaction of e_i

Dual vectors act rationally: f in C^* acts by f -> m = sum m_(0) f(m_(1)),
g in D^* by m <- g = sum g(m_(-1)) m_(0).  On the fixed basis these are the
operator matrices right_ops()/left_ops(); a subspace is a subbicomodule
exactly when it is stable under all of them, which is the workhorse test.
"""

from __future__ import annotations

from .coalgebra import Coalgebra, DualAlgebra, ValidationReport
from .exceptions import (AmbientMismatch, CoalgebraMismatch, InvalidBicomodule,
                         NotSubbicomodule)
from .fields import Field
from .linalg import Matrix, Subspace


class Bicomodule:
    """Finite-dimensional (left, right)-bicomodule by coaction tensors."""

    __slots__ = ("left", "right", "field", "dim", "rho_left", "rho_right",
                 "regular_of", "_right_ops", "_left_ops")

    def __init__(self, left: Coalgebra, right: Coalgebra, dim: int,
                 rho_left, rho_right, regular_of: Coalgebra | None = None):
        if left.field != right.field:
            raise CoalgebraMismatch("coalgebras live over different fields")
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        field = left.field
        self.left = left
        self.right = right
        self.field = field
        self.dim = dim
        self.rho_left = tuple(tuple(tuple(field.coerce(x) for x in row) for row in plane)
                              for plane in rho_left)
        self.rho_right = tuple(tuple(tuple(field.coerce(x) for x in row) for row in plane)
                               for plane in rho_right)
        if len(self.rho_right) != dim or any(len(p) != dim for p in self.rho_right) \
                or any(len(r) != right.dim for p in self.rho_right for r in p):
            raise ValueError("right coaction tensor shape mismatch")
        if len(self.rho_left) != dim or any(len(p) != left.dim for p in self.rho_left) \
                or any(len(r) != dim for p in self.rho_left for r in p):
            raise ValueError("left coaction tensor shape mismatch")
        self.regular_of = regular_of
        self._right_ops = None
        self._left_ops = None

    @classmethod
    def from_triples(cls, left, right, dim, left_triples, right_triples,
                     regular_of=None) -> "Bicomodule":
        field = left.field
        rl = [[[field.zero] * dim for _ in range(left.dim)] for _ in range(dim)]
        for i, j, k, coeff in left_triples:
            rl[i][j][k] = field.add(rl[i][j][k], field.coerce(coeff))
        rr = [[[field.zero] * right.dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, coeff in right_triples:
            rr[i][j][k] = field.add(rr[i][j][k], field.coerce(coeff))
        return cls(left, right, dim, rl, rr, regular_of=regular_of)

    def left_triples(self):
        return [(i, j, k, self.rho_left[i][j][k])
                for i in range(self.dim) for j in range(self.left.dim) for k in range(self.dim)
                if self.rho_left[i][j][k] != 0]

    def right_triples(self):
        return [(i, j, k, self.rho_right[i][j][k])
                for i in range(self.dim) for j in range(self.dim) for k in range(self.right.dim)
                if self.rho_right[i][j][k] != 0]

    # -- validation -----------------------------------------------------------

    def validate(self) -> ValidationReport:
        field, n = self.field, self.dim
        nc, nd = self.right.dim, self.left.dim
        r, l = self.rho_right, self.rho_left
        dc, dd = self.right.delta, self.left.delta
        ec, ed = self.right.counit, self.left.counit
        fmt = field.format_scalar
        report = ValidationReport()
        add, mul, zero = field.add, field.mul, field.zero

        for i in range(n):
            for a in range(n):
                for b in range(nc):
                    for c in range(nc):
                        lhs = zero
                        for j in range(n):
                            if r[i][j][c] and r[j][a][b]:
                                lhs = add(lhs, mul(r[i][j][c], r[j][a][b]))
                        rhs = zero
                        for k in range(nc):
                            if r[i][a][k] and dc[k][b][c]:
                                rhs = add(rhs, mul(r[i][a][k], dc[k][b][c]))
                        if lhs != rhs:
                            report.add("right-coassociativity", (i, a, b, c),
                                       f"{fmt(lhs)} != {fmt(rhs)}")
        for i in range(n):
            for j in range(n):
                val = zero
                for k in range(nc):
                    if r[i][j][k] and ec[k]:
                        val = add(val, mul(r[i][j][k], ec[k]))
                want = field.one if i == j else zero
                if val != want:
                    report.add("right-counit", (i, j), f"{fmt(val)} != {fmt(want)}")
        for i in range(n):
            for a in range(nd):
                for b in range(nd):
                    for c in range(n):
                        lhs = zero
                        for j in range(nd):
                            if l[i][j][c] and dd[j][a][b]:
                                lhs = add(lhs, mul(l[i][j][c], dd[j][a][b]))
                        rhs = zero
                        for k in range(n):
                            if l[i][a][k] and l[k][b][c]:
                                rhs = add(rhs, mul(l[i][a][k], l[k][b][c]))
                        if lhs != rhs:
                            report.add("left-coassociativity", (i, a, b, c),
                                       f"{fmt(lhs)} != {fmt(rhs)}")
        for i in range(n):
            for k in range(n):
                val = zero
                for j in range(nd):
                    if l[i][j][k] and ed[j]:
                        val = add(val, mul(l[i][j][k], ed[j]))
                want = field.one if i == k else zero
                if val != want:
                    report.add("left-counit", (i, k), f"{fmt(val)} != {fmt(want)}")
        for i in range(n):
            for a in range(nd):
                for b in range(n):
                    for k in range(nc):
                        lhs = zero
                        for j in range(n):
                            if r[i][j][k] and l[j][a][b]:
                                lhs = add(lhs, mul(r[i][j][k], l[j][a][b]))
                        rhs = zero
                        for j in range(n):
                            if l[i][a][j] and r[j][b][k]:
                                rhs = add(rhs, mul(l[i][a][j], r[j][b][k]))
                        if lhs != rhs:
                            report.add("coaction-compatibility", (i, a, b, k),
                                       f"{fmt(lhs)} != {fmt(rhs)}")
        return report

    def require_valid(self):
        for side, coalg in (("left", self.left), ("right", self.right)):
            rep = coalg.validate()
            if not rep.ok:
                raise InvalidBicomodule(f"{side} coalgebra invalid: {rep}")
        report = self.validate()
        if not report.ok:
            raise InvalidBicomodule(str(report))
        return self

    # -- dual actions -----------------------------------------------------------

    def right_ops(self):
        """Operator matrices of the right-coalgebra dual basis acting by f -> m."""
        if self._right_ops is None:
            field, n = self.field, self.dim
            ops = []
            for k in range(self.right.dim):
                ops.append(Matrix(field, n, n,
                                  [[self.rho_right[i][j][k] for i in range(n)]
                                   for j in range(n)]))
            self._right_ops = tuple(ops)
        return self._right_ops

    def left_ops(self):
        """Operator matrices of the left-coalgebra dual basis acting by m <- g."""
        if self._left_ops is None:
            field, n = self.field, self.dim
            ops = []
            for j in range(self.left.dim):
                ops.append(Matrix(field, n, n,
                                  [[self.rho_left[i][j][k] for i in range(n)]
                                   for k in range(n)]))
            self._left_ops = tuple(ops)
        return self._left_ops

    def all_ops(self):
        return self.right_ops() + self.left_ops()

    def act_right(self, f, v):
        """f -> v for f given by dual coordinates on the right coalgebra."""
        if len(f) != self.right.dim or len(v) != self.dim:
            raise AmbientMismatch("bad operand lengths for the right dual action")
        field, n = self.field, self.dim
        out = []
        for j in range(n):
            acc = field.zero
            for i, vi in enumerate(v):
                if vi:
                    row = self.rho_right[i][j]
                    for k, fk in enumerate(f):
                        if fk and row[k]:
                            acc = field.add(acc, field.mul(vi, field.mul(row[k], fk)))
            out.append(acc)
        return tuple(out)

    def act_left(self, g, v):
        """v <- g for g given by dual coordinates on the left coalgebra."""
        if len(g) != self.left.dim or len(v) != self.dim:
            raise AmbientMismatch("bad operand lengths for the left dual action")
        field, n = self.field, self.dim
        out = []
        for k in range(n):
            acc = field.zero
            for i, vi in enumerate(v):
                if vi:
                    plane = self.rho_left[i]
                    for j, gj in enumerate(g):
                        if gj and plane[j][k]:
                            acc = field.add(acc, field.mul(vi, field.mul(plane[j][k], gj)))
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, Bicomodule) and self.left == other.left
                and self.right == other.right and self.dim == other.dim
                and self.rho_left == other.rho_left and self.rho_right == other.rho_right)

    def __hash__(self):
        return hash((self.left, self.right, self.dim, self.rho_left, self.rho_right))

    def __repr__(self):
        kind = "regular " if self.regular_of is not None else ""
        return f"Bicomodule({kind}{self.field.name}, dim={self.dim})"


def act(m: Bicomodule, f, v, side: str):
    """Rational action dispatch: side 'right' is f -> v, side 'left' is v <- f."""
    if side == "right":
        return m.act_right(f, v)
    if side == "left":
        return m.act_left(f, v)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def regular_bicomodule(c: Coalgebra) -> Bicomodule:
    """C as a (C, C)-bicomodule with both coactions the comultiplication."""
    c.require_valid()
    return Bicomodule(c, c, c.dim, c.delta, c.delta, regular_of=c)


def is_subbicomodule(m: Bicomodule, sub: Subspace) -> bool:
    """Stability of a subspace under every dual action operator."""
    if sub.ambient != m.dim or sub.field != m.field:
        raise AmbientMismatch("subspace does not live in the bicomodule")
    for op in m.all_ops():
        for row in sub.basis:
            if not sub.contains_vector(op.apply(row)):
                return False
    return True


def restrict(m: Bicomodule, sub: Subspace):
    """Subbicomodule structure on a coaction-stable subspace.

    Returns (bicomodule on sub in basis coordinates, embed matrix) where
    embed maps sub coordinates back into the ambient space.
    """
    if not is_subbicomodule(m, sub):
        raise NotSubbicomodule("subspace is not stable under the coactions")
    if sub.is_zero():
        raise ValueError("cannot restrict to the zero subspace")
    field = m.field
    s = sub.dim
    r_ops, l_ops = m.right_ops(), m.left_ops()
    rho_right = [[[field.zero] * m.right.dim for _ in range(s)] for _ in range(s)]
    rho_left = [[[field.zero] * s for _ in range(m.left.dim)] for _ in range(s)]
    for t, row in enumerate(sub.basis):
        for k, op in enumerate(r_ops):
            coords = sub.coords_of(op.apply(row))
            for j, x in enumerate(coords):
                rho_right[t][j][k] = x
        for j, op in enumerate(l_ops):
            coords = sub.coords_of(op.apply(row))
            for k, x in enumerate(coords):
                rho_left[t][j][k] = x
    restricted = Bicomodule(m.left, m.right, s, rho_left, rho_right)
    embed = sub.matrix().transpose()
    return restricted, embed


def quotient(m: Bicomodule, sub: Subspace):
    """Quotient bicomodule M/sub with induced coactions.

    Returns (quotient bicomodule, projection matrix).  Coset representatives
    are the standard basis vectors at the non-pivot columns of sub's basis.
    """
    if not is_subbicomodule(m, sub):
        raise NotSubbicomodule("subspace is not stable under the coactions")
    if sub.is_full():
        raise ValueError("quotient by the full space is zero-dimensional")
    field, n = m.field, m.dim
    free = [j for j in range(n) if j not in set(sub.pivots)]
    q = len(free)
    proj_cols = []
    for b in range(n):
        e_b = tuple(field.one if i == b else field.zero for i in range(n))
        reduced = sub.reduce_vector(e_b)
        proj_cols.append([reduced[t] for t in free])
    proj = Matrix(field, q, n, [[proj_cols[b][t] for b in range(n)] for t in range(q)])
    r_ops, l_ops = m.right_ops(), m.left_ops()
    rho_right = [[[field.zero] * m.right.dim for _ in range(q)] for _ in range(q)]
    rho_left = [[[field.zero] * q for _ in range(m.left.dim)] for _ in range(q)]
    for t, b in enumerate(free):
        e_b = tuple(field.one if i == b else field.zero for i in range(n))
        for k, op in enumerate(r_ops):
            w = proj.apply(op.apply(e_b))
            for u, x in enumerate(w):
                rho_right[t][u][k] = x
        for j, op in enumerate(l_ops):
            w = proj.apply(op.apply(e_b))
            for u, x in enumerate(w):
                rho_left[t][j][u] = x
    quot = Bicomodule(m.left, m.right, q, rho_left, rho_right)
    return quot, proj


class Centralizer:
    """Dual vectors whose left and right rational actions agree everywhere."""

    __slots__ = ("bicomodule", "subspace", "dual")

    def __init__(self, bicomodule: Bicomodule, subspace: Subspace):
        self.bicomodule = bicomodule
        self.subspace = subspace
        self.dual = DualAlgebra(bicomodule.right)

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def basis(self):
        return self.subspace.basis

    def contains_counit(self) -> bool:
        return self.subspace.contains_vector(self.bicomodule.right.counit)

    def closed_under_convolution(self) -> bool:
        for f in self.subspace.basis:
            for g in self.subspace.basis:
                if not self.subspace.contains_vector(self.dual.multiply(f, g)):
                    return False
        return True


def centralizer(m: Bicomodule) -> Centralizer:
    """Solve f -> v = v <- f for all v; needs matching coalgebras on both sides."""
    if m.left != m.right:
        raise CoalgebraMismatch("centralizer needs the same coalgebra on both sides")
    from .linalg import kernel
    field, n, nc = m.field, m.dim, m.right.dim
    r_ops, l_ops = m.right_ops(), m.left_ops()
    rows = []
    for i in range(n):
        for a in range(n):
            rows.append([field.sub(r_ops[k].data[a][i], l_ops[k].data[a][i])
                         for k in range(nc)])
    sol = kernel(Matrix(field, len(rows), nc, rows))
    return Centralizer(m, sol)


def phi_matrix(m: Bicomodule, f) -> Matrix:
    """The endomorphism v -> (f -> v) of a centralizer element f."""
    field, n = m.field, m.dim
    r_ops = m.right_ops()
    data = [[field.zero] * n for _ in range(n)]
    for k, fk in enumerate(f):
        if fk:
            op = r_ops[k].data
            for a in range(n):
                row = op[a]
                for i in range(n):
                    if row[i]:
                        data[a][i] = field.add(data[a][i], field.mul(fk, row[i]))
    return Matrix(field, n, n, data)
