"""Exact dense linear algebra with canonical subspace representatives.

Vectors are tuples of field elements.  A matrix acts on column vectors,
so composition of linear maps is the matrix product in the same order.
Subspaces are stored as reduced row-echelon bases with zero rows removed;
two Subspace values are equal iff their stored bases are identical, which
makes RREF the equality oracle for the whole package.
"""

from __future__ import annotations

from itertools import combinations, product

from .exceptions import AmbientMismatch, BudgetExceeded
from .fields import Field


def _check_same_field(a: Field, b: Field):
    if a != b:
        raise AmbientMismatch(f"field mismatch: {a.name} vs {b.name}")


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data):
        data = tuple(tuple(row) for row in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"data shape does not match {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, field: Field, data) -> "Matrix":
        data = [[field.coerce(x) for x in row] for row in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(field, rows, cols, data)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, n, n, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        zero = field.zero
        return cls(field, rows, cols, [[zero] * cols for _ in range(rows)])

    @classmethod
    def stack(cls, mats) -> "Matrix":
        mats = list(mats)
        if not mats:
            raise ValueError("cannot stack zero matrices")
        field, cols = mats[0].field, mats[0].cols
        for m in mats[1:]:
            _check_same_field(field, m.field)
            if m.cols != cols:
                raise AmbientMismatch("stack needs equal column counts")
        data = [row for m in mats for row in m.data]
        return cls(field, len(data), cols, data)

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      [self.column(j) for j in range(self.cols)])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise AmbientMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        f = self.field
        p = f.p
        ocols = other.cols
        odata = other.data
        out = []
        for arow in self.data:
            new = []
            for j in range(ocols):
                acc = 0
                for k, a in enumerate(arow):
                    if a:
                        acc += a * odata[k][j]
                new.append(acc % p if p is not None else f.coerce(acc))
            out.append(new)
        return Matrix(f, self.rows, ocols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      [[f.add(a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      [[f.sub(a, b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      [[f.mul(c, a) for a in row] for row in self.data])

    def _check_shape(self, other: "Matrix"):
        _check_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise AmbientMismatch("shape mismatch")

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise AmbientMismatch(f"vector length {len(vec)} != {self.cols}")
        f = self.field
        p = f.p
        out = []
        for row in self.data:
            acc = 0
            for a, v in zip(row, vec):
                if a and v:
                    acc += a * v
            out.append(acc % p if p is not None else f.coerce(acc))
        return tuple(out)

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.data)

    def flatten(self):
        return tuple(x for row in self.data for x in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format_scalar(x) for x in row) for row in self.data)
        return f"Matrix({self.field.name}, {self.rows}x{self.cols}: {body})"


def _rref_rows(field: Field, rows):
    """In-place Gauss-Jordan on a list of row lists; returns (rows, pivots).

    Output rows are the canonical reduced echelon basis, zero rows removed.
    """
    p = field.p
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            row = rows[r]
            if p is not None:
                rows[r] = [(x * inv) % p for x in row]
            else:
                rows[r] = [x * inv for x in row]
        lead = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                row = rows[i]
                if p is not None:
                    rows[i] = [(x - factor * y) % p for x, y in zip(row, lead)]
                else:
                    rows[i] = [x - factor * y for x, y in zip(row, lead)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in rows[:r]], tuple(pivots)


def rref(m: Matrix):
    """Canonical reduced row-echelon form (zero rows removed) and rank."""
    rows, pivots = _rref_rows(m.field, m.data)
    return Matrix(m.field, len(rows), m.cols, rows), len(pivots)


def kernel(m: Matrix) -> "Subspace":
    """Null space {v : m @ v = 0} as a canonical subspace of the domain."""
    field = m.field
    n = m.cols
    rows, pivots = _rref_rows(field, m.data)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    zero, one = field.zero, field.one
    for f_col in free:
        v = [zero] * n
        v[f_col] = one
        for i, p_col in enumerate(pivots):
            v[p_col] = field.neg(rows[i][f_col])
        basis.append(v)
    return Subspace.from_vectors(field, n, basis)


class Subspace:
    """Subspace of k^n held as a canonical RREF row basis."""

    __slots__ = ("field", "ambient", "basis", "pivots", "_vanish")

    def __init__(self, field: Field, ambient: int, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = tuple(tuple(row) for row in basis)
        self.pivots = tuple(pivots)
        self._vanish = None

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors) -> "Subspace":
        vectors = [v for v in vectors if any(x != 0 for x in v)]
        for v in vectors:
            if len(v) != ambient:
                raise AmbientMismatch(f"vector length {len(v)} != ambient {ambient}")
        if not vectors:
            return cls(field, ambient, (), ())
        rows, pivots = _rref_rows(field, vectors)
        return cls(field, ambient, rows, pivots)

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls.from_vectors(field, ambient, Matrix.identity(field, ambient).data)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient, self.basis)

    # -- membership ----------------------------------------------------------

    def reduce_vector(self, v):
        """Reduce v modulo this subspace; zero result means membership."""
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector length {len(v)} != ambient {self.ambient}")
        field = self.field
        p = field.p
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            coeff = v[c]
            if coeff:
                if p is not None:
                    v = [(x - coeff * y) % p for x, y in zip(v, row)]
                else:
                    v = [x - coeff * y for x, y in zip(v, row)]
        return tuple(v)

    def contains_vector(self, v) -> bool:
        return all(x == 0 for x in self.reduce_vector(v))

    def coords_of(self, v):
        """Coordinates of v in the stored basis; v must be a member."""
        coords = tuple(v[c] for c in self.pivots)
        if not self.contains_vector(v):
            raise ValueError("vector is not in the subspace")
        return coords

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains_vector(row) for row in other.basis)

    # -- lattice operations ----------------------------------------------------

    def _check_compatible(self, other: "Subspace"):
        _check_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} != {other.ambient}")

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        return Subspace.from_vectors(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient)
        if self.is_full():
            return other
        if other.is_full():
            return self
        stacked = Matrix.stack([self.vanishing(), other.vanishing()])
        return kernel(stacked)

    def vanishing(self) -> Matrix:
        """Matrix N with N @ v = 0 exactly for members v."""
        if self._vanish is None:
            if self.is_zero():
                self._vanish = Matrix.identity(self.field, self.ambient)
            else:
                null = kernel(self.matrix())
                self._vanish = Matrix(self.field, null.dim, self.ambient, null.basis)
        return self._vanish

    def apply(self, f: Matrix) -> "Subspace":
        """Image subspace f(self) inside k^{f.rows}."""
        if f.cols != self.ambient:
            raise AmbientMismatch(f"map domain {f.cols} != ambient {self.ambient}")
        return Subspace.from_vectors(self.field, f.rows,
                                     [f.apply(row) for row in self.basis])

    # -- identity and ordering ---------------------------------------------------

    def key(self):
        return (self.ambient, self.basis)

    def sort_key(self):
        field = self.field
        flat = tuple(field.sort_key(x) for row in self.basis for x in row)
        return (self.dim, self.pivots, flat)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        rows = ", ".join("(" + ", ".join(self.field.format_scalar(x) for x in row) + ")"
                         for row in self.basis)
        return f"Subspace({self.field.name}^{self.ambient}: [{rows}])"

    # -- finite enumeration --------------------------------------------------------

    def members(self):
        """All vectors of the subspace; finite fields only."""
        field = self.field
        if field.p is None:
            raise ValueError("cannot enumerate vectors over Q")
        if self.is_zero():
            yield (field.zero,) * self.ambient
            return
        p = field.p
        for coeffs in product(range(p), repeat=self.dim):
            v = [0] * self.ambient
            for c, row in zip(coeffs, self.basis):
                if c:
                    for i, x in enumerate(row):
                        v[i] = (v[i] + c * x) % p
            yield tuple(v)


def preimage(f: Matrix, y: Subspace) -> Subspace:
    """{v : f @ v in y}, a subspace of the domain of f."""
    if f.rows != y.ambient:
        raise AmbientMismatch(f"map codomain {f.rows} != ambient {y.ambient}")
    if y.is_full():
        return Subspace.full(f.field, f.cols)
    return kernel(y.vanishing() @ f)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_subspaces(p: int, n: int) -> int:
    """Number of subspaces of F_p^n (all dimensions)."""
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def enumerate_subspaces(field: Field, ambient: int, budget: int | None = None):
    """Yield every subspace of F_p^ambient via reduced echelon forms.

    Each subspace appears exactly once because reduced echelon bases are
    unique.  Raises BudgetExceeded up front when the count is too large.
    """
    p = field.p
    if p is None:
        raise ValueError("subspace enumeration needs a finite field")
    total = count_subspaces(p, ambient)
    if budget is not None and total > budget:
        raise BudgetExceeded(f"{total} subspaces of {field.name}^{ambient} exceed budget {budget}")
    yield Subspace.zero(field, ambient)
    for r in range(1, ambient + 1):
        for pivots in combinations(range(ambient), r):
            pivot_set = set(pivots)
            free_cells = [(i, j) for i in range(r)
                          for j in range(pivots[i] + 1, ambient)
                          if j not in pivot_set]
            for values in product(range(p), repeat=len(free_cells)):
                rows = [[0] * ambient for _ in range(r)]
                for i, c in enumerate(pivots):
                    rows[i][c] = 1
                for (i, j), v in zip(free_cells, values):
                    rows[i][j] = v
                yield Subspace(field, ambient, [tuple(r_) for r_ in rows], pivots)
