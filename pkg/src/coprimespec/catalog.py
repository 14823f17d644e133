"""Instance catalog: classical coalgebra families and seeded random instances.

Every constructor returns validated objects.  The divided-power builder
takes the first index of the splitting sum as a parameter: the coalgebra
uses start=0; start=1 yields a structure violating the counit law and is
kept only as a negative control for the validator.
"""

from __future__ import annotations

from random import Random

from .bicomodule import Bicomodule, quotient, regular_bicomodule
from .coalgebra import Coalgebra, CoalgebraMorphism
from .exceptions import ParseError
from .fields import Field
from .lattice import cyclic_subbicomodule
from .linalg import Matrix


def grouplike(n: int, field: Field) -> Coalgebra:
    """n group-like elements: each basis vector g satisfies delta(g) = g (x) g."""
    if n < 1:
        raise ValueError("need at least one group-like element")
    triples = [(i, i, i, 1) for i in range(n)]
    return Coalgebra.from_triples(field, n, triples, [1] * n).require_valid()


def divided_power(n_top: int, field: Field, start: int = 0) -> Coalgebra:
    """Chain coalgebra on x_0..x_N with delta(x_n) = sum_j x_j (x) x_{n-j}.

    The sum runs over start <= j <= n; only start=0 satisfies the counit law.
    """
    if n_top < 0:
        raise ValueError("top index must be nonnegative")
    dim = n_top + 1
    triples = [(n, j, n - j, 1) for n in range(dim) for j in range(start, n + 1)]
    counit = [1 if n == 0 else 0 for n in range(dim)]
    c = Coalgebra.from_triples(field, dim, triples, counit)
    if start == 0:
        c.require_valid()
    return c


def comatrix(n: int, field: Field) -> Coalgebra:
    """Matrix-coefficient coalgebra: delta(e_ij) = sum_k e_ik (x) e_kj."""
    if n < 1:
        raise ValueError("need size at least 1")
    dim = n * n
    idx = lambda i, j: i * n + j
    triples = [(idx(i, j), idx(i, k), idx(k, j), 1)
               for i in range(n) for j in range(n) for k in range(n)]
    counit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return Coalgebra.from_triples(field, dim, triples, counit).require_valid()


class Poset:
    """Finite poset stored as a full reflexive-transitive relation."""

    def __init__(self, size: int, leq):
        if size < 1:
            raise ValueError("poset must be nonempty")
        self.size = size
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)
        if len(self.leq) != size or any(len(r) != size for r in self.leq):
            raise ValueError("relation shape mismatch")
        for i in range(size):
            if not self.leq[i][i]:
                raise ValueError(f"relation is not reflexive at {i}")
        for i in range(size):
            for j in range(size):
                if i != j and self.leq[i][j] and self.leq[j][i]:
                    raise ValueError(f"relation is not antisymmetric at ({i}, {j})")
        for i in range(size):
            for j in range(size):
                if self.leq[i][j]:
                    for k in range(size):
                        if self.leq[j][k] and not self.leq[i][k]:
                            raise ValueError(f"relation is not transitive at ({i}, {j}, {k})")

    @classmethod
    def from_pairs(cls, size: int, pairs) -> "Poset":
        """Reflexive-transitive closure of the given pairs; cycles are rejected."""
        rel = [[i == j for j in range(size)] for i in range(size)]
        for i, j in pairs:
            if not (0 <= i < size and 0 <= j < size):
                raise ValueError(f"pair ({i}, {j}) out of range")
            rel[i][j] = True
        for k in range(size):
            for i in range(size):
                if rel[i][k]:
                    row_k = rel[k]
                    row_i = rel[i]
                    for j in range(size):
                        if row_k[j]:
                            row_i[j] = True
        return cls(size, rel)

    def intervals(self):
        """All pairs (x, z) with x <= z, in lexicographic order."""
        return [(x, z) for x in range(self.size) for z in range(self.size)
                if self.leq[x][z]]

    def __eq__(self, other):
        return isinstance(other, Poset) and self.size == other.size and self.leq == other.leq

    def __repr__(self):
        pairs = [(i, j) for i, j in self.intervals() if i != j]
        return f"Poset(size={self.size}, strict_pairs={pairs})"


def incidence(poset: Poset, field: Field) -> Coalgebra:
    """Incidence coalgebra: basis = intervals, splitting over interior points."""
    intervals = poset.intervals()
    index = {iv: t for t, iv in enumerate(intervals)}
    triples = []
    for (x, z), t in index.items():
        for y in range(poset.size):
            if poset.leq[x][y] and poset.leq[y][z]:
                triples.append((t, index[(x, y)], index[(y, z)], 1))
    counit = [1 if x == z else 0 for (x, z) in intervals]
    return Coalgebra.from_triples(field, len(intervals), triples, counit).require_valid()


def direct_sum(a: Coalgebra, b: Coalgebra) -> Coalgebra:
    if a.field != b.field:
        raise ValueError("direct sum needs a common field")
    dim = a.dim + b.dim
    triples = [(i, j, k, c) for (i, j, k, c) in a.triples()]
    triples += [(i + a.dim, j + a.dim, k + a.dim, c) for (i, j, k, c) in b.triples()]
    counit = list(a.counit) + list(b.counit)
    return Coalgebra.from_triples(a.field, dim, triples, counit).require_valid()


def right_comodule(c: Coalgebra) -> Bicomodule:
    """The coalgebra as a bicomodule whose left coalgebra is one group-like.

    Subbicomodules of the result are exactly the right coideals of c, and
    the fully invariant ones are the two-sided coideals, so spectra of the
    one-sided comodule structure can be computed with the same machinery.
    """
    left = grouplike(1, c.field)
    left_triples = [(i, 0, i, 1) for i in range(c.dim)]
    return Bicomodule.from_triples(left, c, c.dim, left_triples,
                                   c.triples()).require_valid()


def chain_inclusion(n_small: int, n_big: int, field: Field) -> CoalgebraMorphism:
    """Inclusion of divided-power chains x_n -> x_n."""
    if n_small > n_big:
        raise ValueError("source chain must not exceed the target chain")
    src = divided_power(n_small, field)
    tgt = divided_power(n_big, field)
    rows = [[1 if t == i else 0 for i in range(src.dim)] for t in range(tgt.dim)]
    return CoalgebraMorphism(src, tgt, Matrix.from_rows(field, rows)).require_valid()


def permutation_morphism(n: int, perm, field: Field) -> CoalgebraMorphism:
    """Automorphism of the n group-like coalgebra permuting the basis."""
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm!r} is not a permutation of range({n})")
    c = grouplike(n, field)
    rows = [[1 if perm[i] == t else 0 for i in range(n)] for t in range(n)]
    return CoalgebraMorphism(c, c, Matrix.from_rows(field, rows)).require_valid()


def random_poset(rng: Random, max_intervals: int) -> Poset:
    """Seeded random poset whose interval count is bounded by max_intervals."""
    while True:
        n = rng.randint(1, max(1, max_intervals))
        density = rng.random() * 0.6
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < density]
        poset = Poset.from_pairs(n, pairs)
        if len(poset.intervals()) <= max_intervals:
            return poset


def random_instance(seed: int, dim_budget: int = 5, field: Field | None = None):
    """Deterministic random bicomodule: returns (bicomodule, descriptor).

    Mix: incidence coalgebras of random posets (regular bicomodules), their
    quotients by random cyclic subbicomodules, and regular bicomodules of
    direct sums of small catalog coalgebras.
    """
    from .fields import GF2
    if field is None:
        field = GF2
    rng = Random(seed)
    roll = rng.random()
    if roll < 0.6:
        poset = random_poset(rng, dim_budget)
        c = incidence(poset, field)
        return regular_bicomodule(c), f"incidence({poset!r}) over {field.name}"
    if roll < 0.8:
        poset = random_poset(rng, dim_budget)
        c = incidence(poset, field)
        m = regular_bicomodule(c)
        for _ in range(16):
            v = tuple(field.random_element(rng) for _ in range(m.dim))
            k = cyclic_subbicomodule(m, v)
            if not k.is_zero() and not k.is_full():
                quot, _ = quotient(m, k)
                return quot, (f"incidence({poset!r})/cyclic(dim={k.dim}) over {field.name}")
        return m, f"incidence({poset!r}) over {field.name}"
    budget_a = rng.randint(1, max(1, dim_budget - 1))
    budget_b = max(1, dim_budget - budget_a)
    pick = rng.random()
    if pick < 0.5:
        a = grouplike(budget_a, field)
        b = divided_power(budget_b - 1, field)
        label = f"grouplike({budget_a}) (+) divided({budget_b - 1})"
    else:
        a = divided_power(budget_a - 1, field)
        b = grouplike(budget_b, field)
        label = f"divided({budget_a - 1}) (+) grouplike({budget_b})"
    c = direct_sum(a, b)
    return regular_bicomodule(c), f"{label} over {field.name}"


# -- catalog references ---------------------------------------------------------

CATALOG_NAMES = ("grouplike", "divided", "comatrix", "incidence", "sum", "quotient")


def _split_pair(body: str):
    depth = 0
    for pos, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:pos], body[pos + 1:]
    raise ParseError(f"expected a comma-separated pair in {body!r}")


def looks_like_ref(text: str) -> bool:
    head = text.split(":", 1)[0]
    return ":" in text and head in CATALOG_NAMES


def resolve_ref(ref: str, field: Field):
    """Resolve a catalog reference to ('coalgebra', C) or ('bicomodule', M)."""
    if ":" not in ref:
        raise ParseError(f"bad catalog reference {ref!r}")
    head, body = ref.split(":", 1)
    if head == "grouplike":
        return "coalgebra", grouplike(_ref_int(ref, body), field)
    if head == "divided":
        return "coalgebra", divided_power(_ref_int(ref, body), field)
    if head == "comatrix":
        return "coalgebra", comatrix(_ref_int(ref, body), field)
    if head == "incidence":
        import json
        try:
            with open(body) as handle:
                payload = json.load(handle)
            poset = Poset.from_pairs(int(payload["size"]),
                                     [tuple(p) for p in payload.get("leq", [])])
        except OSError as exc:
            raise ParseError(f"cannot read poset file {body!r}: {exc}") from None
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            raise ParseError(f"bad poset file {body!r}: {exc}") from None
        return "coalgebra", incidence(poset, field)
    if head == "sum":
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"sum reference needs parentheses: {ref!r}")
        left, right = _split_pair(body[1:-1])
        kind_a, a = resolve_ref(left.strip(), field)
        kind_b, b = resolve_ref(right.strip(), field)
        if kind_a != "coalgebra" or kind_b != "coalgebra":
            raise ParseError("sum components must be coalgebra references")
        return "coalgebra", direct_sum(a, b)
    if head == "quotient":
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"quotient reference needs parentheses: {ref!r}")
        left, right = _split_pair(body[1:-1])
        m = resolve_ref_to_bicomodule(left.strip(), field)
        spec = right.strip()
        if not spec.startswith("v"):
            raise ParseError(
                f"quotient generator must be v<basis-index>, got {spec!r}")
        index = _ref_int(ref, spec[1:])
        if not (0 <= index < m.dim):
            raise ParseError(f"basis index {index} out of range for dim {m.dim}")
        v = tuple(field.one if i == index else field.zero for i in range(m.dim))
        k = cyclic_subbicomodule(m, v)
        if k.is_full():
            raise ParseError(
                f"the cyclic subbicomodule of v{index} is the whole space, "
                "so the quotient would be zero")
        quot, _ = quotient(m, k)
        return "bicomodule", quot
    raise ParseError(f"unknown catalog family {head!r} in {ref!r}")


def _ref_int(ref: str, text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise ParseError(f"bad integer {text!r} in catalog reference {ref!r}") from None


def resolve_ref_to_bicomodule(ref: str, field: Field) -> Bicomodule:
    kind, obj = resolve_ref(ref, field)
    if kind == "coalgebra":
        return regular_bicomodule(obj)
    return obj
