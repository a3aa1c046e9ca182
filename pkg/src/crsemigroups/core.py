"""Finite semigroups over a dense Cayley table.

Every structure in the package lives on one universe: element indices
0..n-1 with an n x n multiplication table.  A `FiniteSemigroup` is validated
exhaustively at construction (associativity included) and is immutable
afterwards; derived data (idempotents, Green's relations, inversion maps)
is computed lazily and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    HostMismatch,
    IndexOutOfRange,
    NotAssociative,
    NotClosed,
    NotCompletelyRegular,
    NotCompletelyRegularElement,
)
from .relations import BinaryRelation, Congruence, Partition


@dataclass(frozen=True)
class ElementView:
    """One element of a completely regular semigroup, with its group data."""

    index: int
    is_idempotent: bool
    inverse: int
    idempotent_power: int


@dataclass(frozen=True)
class GreenData:
    """Green's equivalences of a semigroup as canonical partitions."""

    l: Partition
    r: Partition
    h: Partition
    d: Partition


class FiniteSemigroup:
    """Semigroup on {0, ..., n-1} given by its full multiplication table."""

    __slots__ = (
        "order",
        "table",
        "labels",
        "flat_table",
        "_idempotents",
        "_cr_witness",
        "_green",
        "_canonical",
    )

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
    ):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0:
            raise ValueError("semigroup order must be positive")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise IndexOutOfRange(i, j, v, n)
        flat = tuple(v for row in rows for v in row)
        witness = kernels.associativity_witness(flat, n)
        if witness is not None:
            raise NotAssociative(*witness)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "flat_table", flat)
        object.__setattr__(self, "_idempotents", None)
        object.__setattr__(self, "_cr_witness", -1)
        object.__setattr__(self, "_green", None)
        object.__setattr__(self, "_canonical", None)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSemigroup is immutable")

    def _cache(self, name, value):
        object.__setattr__(self, name, value)

    # -- basic structure ---------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def idempotents(self) -> frozenset[int]:
        """Indices e with e*e == e."""
        if self._idempotents is None:
            self._cache(
                "_idempotents",
                frozenset(e for e in range(self.order) if self.table[e][e] == e),
            )
        return self._idempotents

    def inverses_set(self, a: int) -> frozenset[int]:
        """All x with a*x*a == a and x*a*x == x."""
        table = self.table
        out = []
        for x in range(self.order):
            ax = table[a][x]
            if table[ax][a] == a and table[table[x][a]][x] == x:
                out.append(x)
        return frozenset(out)

    def completely_regular_witness(self) -> tuple[int, ...] | None:
        """Map a -> commuting inverse of a, or None when some element has none."""
        if self._cr_witness == -1:
            table = self.table
            inv = []
            for a in range(self.order):
                found = None
                for x in range(self.order):
                    ax = table[a][x]
                    if (
                        ax == table[x][a]
                        and table[ax][a] == a
                        and table[table[x][a]][x] == x
                    ):
                        found = x
                        break
                if found is None:
                    inv = None
                    break
                inv.append(found)
            self._cache("_cr_witness", tuple(inv) if inv is not None else None)
        return self._cr_witness

    def is_completely_regular(self) -> bool:
        """True when every element has a commuting inverse."""
        return self.completely_regular_witness() is not None

    def require_completely_regular(self) -> None:
        witness = self.completely_regular_witness()
        if witness is None:
            bad = next(
                a
                for a in range(self.order)
                if not any(
                    self.table[a][x] == self.table[x][a]
                    and self.table[self.table[a][x]][a] == a
                    and self.table[self.table[x][a]][x] == x
                    for x in range(self.order)
                )
            )
            raise NotCompletelyRegular(bad)

    def element_view(self, a: int) -> ElementView:
        """Inversion data of a single element (it must lie in a subgroup)."""
        table = self.table
        if table[a][a] == a:
            return ElementView(a, True, a, a)
        candidates = [
            x
            for x in range(self.order)
            if table[a][x] == table[x][a]
            and table[table[a][x]][a] == a
            and table[table[x][a]][x] == x
        ]
        if not candidates:
            raise NotCompletelyRegularElement(a)
        if len(candidates) != 1:
            raise AssertionError(f"element {a} has several commuting inverses")
        x = candidates[0]
        return ElementView(a, False, x, table[a][x])

    def inverse_map(self) -> tuple[int, ...]:
        """a -> a^-1; requires complete regularity."""
        self.require_completely_regular()
        return self.completely_regular_witness()

    def idempotent_power_map(self) -> tuple[int, ...]:
        """a -> a^0 = a * a^-1; requires complete regularity."""
        inv = self.inverse_map()
        return tuple(self.table[a][inv[a]] for a in range(self.order))

    # -- order and Green's relations ----------------------------------------

    def natural_order(self) -> BinaryRelation:
        """a <= b iff a = e*b and a = b*f for some idempotents e, f."""
        table = self.table
        idem = sorted(self.idempotents())
        n = self.order
        rows = []
        for a in range(n):
            acc = 0
            for b in range(n):
                rb = table[b]
                if any(table[e][b] == a for e in idem) and any(
                    rb[f] == a for f in idem
                ):
                    acc |= 1 << b
            rows.append(acc)
        return BinaryRelation(n, rows)

    def green(self) -> GreenData:
        """Green's relations via principal one-sided ideals over S^1."""
        if self._green is None:
            table = self.table
            n = self.order
            left = []  # bitmask of S^1 * a
            right = []  # bitmask of a * S^1
            for a in range(n):
                lm = 1 << a
                rm = 1 << a
                ra = table[a]
                for x in range(n):
                    lm |= 1 << table[x][a]
                    rm |= 1 << ra[x]
                left.append(lm)
                right.append(rm)

            def group_by(masks):
                ids: dict[int, int] = {}
                return Partition(ids.setdefault(m, len(ids)) for m in masks)

            l = group_by(left)
            r = group_by(right)
            self._cache("_green", GreenData(l, r, l.meet(r), l.join(r)))
        return self._green

    # -- subobjects and quotients -------------------------------------------

    def subsemigroup(self, subset: Iterable[int]):
        """Induced semigroup on a multiplicatively closed subset.

        Returns (semigroup, elements) where elements[i] is the index in the
        ambient semigroup of the i-th element of the new one.
        """
        elements = sorted(set(subset))
        if not elements:
            raise ValueError("subset must be non-empty")
        for a in elements:
            if not 0 <= a < self.order:
                raise ValueError(f"element {a} outside universe of size {self.order}")
        index = {a: i for i, a in enumerate(elements)}
        table = []
        for a in elements:
            row = []
            for b in elements:
                p = self.table[a][b]
                if p not in index:
                    raise NotClosed(a, b, p)
                row.append(index[p])
            table.append(row)
        labels = (
            tuple(self.labels[a] for a in elements) if self.labels is not None else None
        )
        return FiniteSemigroup(table, labels), tuple(elements)

    def quotient(self, c: Congruence):
        """Quotient semigroup and the projection partition."""
        if c.host.table != self.table:
            raise HostMismatch("congruence lives on a different semigroup")
        blocks = c.partition.blocks()
        reps = [b[0] for b in blocks]
        ids = c.partition.block_id
        table = [[ids[self.table[ra][rb]] for rb in reps] for ra in reps]
        labels = tuple(
            "{" + ",".join(self.label(i) for i in block) + "}" for block in blocks
        )
        return FiniteSemigroup(table, labels), c.partition

    def direct_product(self, other: "FiniteSemigroup") -> "FiniteSemigroup":
        """Componentwise product on index pairs, ordered lexicographically."""
        n, m = self.order, other.order
        table = [
            [
                self.table[a][c] * m + other.table[b][d]
                for c in range(n)
                for d in range(m)
            ]
            for a in range(n)
            for b in range(m)
        ]
        labels = None
        if self.labels is not None and other.labels is not None:
            labels = tuple(
                f"({la},{lb})" for la in self.labels for lb in other.labels
            )
        return FiniteSemigroup(table, labels)

    # -- identity and comparison ---------------------------------------------

    def canonical_table(self) -> tuple[int, ...]:
        """Lexicographically least flattened table over all relabelings."""
        if self._canonical is None:
            n = self.order
            table = self.table
            best = None
            for perm in permutations(range(n)):
                flat = [0] * (n * n)
                for a in range(n):
                    pa = perm[a] * n
                    ta = table[a]
                    for b in range(n):
                        flat[pa + perm[b]] = perm[ta[b]]
                cand = tuple(flat)
                if best is None or cand < best:
                    best = cand
            self._cache("_canonical", best)
        return self._canonical

    def is_isomorphic(self, other: "FiniteSemigroup") -> bool:
        """Canonical-form comparison; factorial cost, small orders only."""
        return (
            self.order == other.order
            and self.canonical_table() == other.canonical_table()
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteSemigroup)
            and self.table == other.table
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash(self.table)

    def __reduce__(self):
        return (FiniteSemigroup, (self.table, self.labels))

    def __repr__(self) -> str:
        return f"FiniteSemigroup(order={self.order})"


def from_table(
    table: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> FiniteSemigroup:
    """Validate and wrap a Cayley table (exhaustive associativity check)."""
    return FiniteSemigroup(table, labels)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    return S.direct_product(T)
