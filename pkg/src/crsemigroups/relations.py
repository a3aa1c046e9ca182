"""Equivalences, general binary relations and congruences on a finite universe.

Partitions are the working representation of every relation that happens to
be an equivalence (Green's classes, traces, congruences); general relations
such as the natural partial order or the idempotent-power relation stay as
boolean matrices because they need not be transitive and must never be
silently promoted.
"""

from __future__ import annotations

import json
from functools import reduce
from typing import TYPE_CHECKING, Callable, Iterable, Iterator, Sequence

from . import kernels
from .errors import HostMismatch, NotACongruence, OrderBoundExceeded

if TYPE_CHECKING:  # pragma: no cover
    from .core import FiniteSemigroup

Pair = tuple[int, int]


def _canonical_ids(ids: Sequence[int]) -> tuple[int, ...]:
    remap: dict[int, int] = {}
    out = []
    for b in ids:
        r = remap.get(b)
        if r is None:
            r = len(remap)
            remap[b] = r
        out.append(r)
    return tuple(out)


class Partition:
    """Canonical partition of {0, ..., n-1}.

    Block ids are assigned in order of least member, so two partitions of the
    same universe are equal exactly when their block-id arrays are equal.
    """

    __slots__ = ("block_id",)

    def __init__(self, block_ids: Iterable[int]):
        object.__setattr__(self, "block_id", _canonical_ids(list(block_ids)))
        if not self.block_id:
            raise ValueError("empty partition")

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def n(self) -> int:
        return len(self.block_id)

    @property
    def num_blocks(self) -> int:
        return max(self.block_id) + 1

    @classmethod
    def equality(cls, n: int) -> "Partition":
        return cls(range(n))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls([0] * n)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        ids = [-1] * n
        for k, block in enumerate(blocks):
            for i in block:
                if not 0 <= i < n:
                    raise ValueError(f"element {i} outside universe of size {n}")
                if ids[i] != -1:
                    raise ValueError(f"element {i} listed in two blocks")
                ids[i] = k
        if any(b == -1 for b in ids):
            missing = [i for i, b in enumerate(ids) if b == -1]
            raise ValueError(f"elements {missing} missing from block list")
        return cls(ids)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "Partition":
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
        return cls(find(i) for i in range(n))

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        blocks = json.loads(text)
        n = sum(len(b) for b in blocks)
        return cls.from_blocks(n, blocks)

    def same(self, a: int, b: int) -> bool:
        return self.block_id[a] == self.block_id[b]

    def block_of(self, a: int) -> tuple[int, ...]:
        bid = self.block_id[a]
        return tuple(i for i, b in enumerate(self.block_id) if b == bid)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for i, b in enumerate(self.block_id):
            out[b].append(i)
        return tuple(tuple(block) for block in out)

    def pairs(self) -> Iterator[Pair]:
        """Distinct related pairs (a, b) with a < b."""
        ids = self.block_id
        n = self.n
        for a in range(n):
            for b in range(a + 1, n):
                if ids[a] == ids[b]:
                    yield (a, b)

    def meet(self, other: "Partition") -> "Partition":
        self._check_universe(other)
        o = other.block_id
        return Partition(
            self.block_id[i] * other.num_blocks + o[i] for i in range(self.n)
        )

    def join(self, other: "Partition") -> "Partition":
        """Join as equivalence relations (transitive closure of the union)."""
        self._check_universe(other)
        n = self.n
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ids in (self.block_id, other.block_id):
            leader: dict[int, int] = {}
            for i, b in enumerate(ids):
                if b in leader:
                    ra, rb = find(leader[b]), find(i)
                    if ra != rb:
                        parent[rb] = ra
                else:
                    leader[b] = i
        return Partition(find(i) for i in range(n))

    def refines(self, other: "Partition") -> bool:
        """True when every block of self lies inside a block of other."""
        self._check_universe(other)
        seen: dict[int, int] = {}
        for mine, theirs in zip(self.block_id, other.block_id):
            prev = seen.setdefault(mine, theirs)
            if prev != theirs:
                return False
        return True

    def restrict(self, elements: Sequence[int]) -> "Partition":
        """Induced partition on `elements`, renumbered by position."""
        return Partition(self.block_id[e] for e in elements)

    def relation(self) -> "BinaryRelation":
        masks = [0] * self.num_blocks
        for i, b in enumerate(self.block_id):
            masks[b] |= 1 << i
        return BinaryRelation(self.n, tuple(masks[b] for b in self.block_id))

    def to_text(self) -> str:
        return json.dumps([list(b) for b in self.blocks()], separators=(",", ":"))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.block_id == other.block_id

    def __hash__(self) -> int:
        return hash(self.block_id)

    def __reduce__(self):
        return (Partition, (self.block_id,))

    def __repr__(self) -> str:
        return f"Partition({self.to_text()})"

    def _check_universe(self, other: "Partition") -> None:
        if self.n != other.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")


class BinaryRelation:
    """Relation on {0, ..., n-1} stored as one bitmask row per element."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if len(rows) != n:
            raise ValueError("row count must equal universe size")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryRelation is immutable")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "BinaryRelation":
        rows = [0] * n
        for a, b in pairs:
            rows[a] |= 1 << b
        return cls(n, rows)

    @classmethod
    def equality(cls, n: int) -> "BinaryRelation":
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def universal(cls, n: int) -> "BinaryRelation":
        full = (1 << n) - 1
        return cls(n, [full] * n)

    def has(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def pairs(self) -> Iterator[Pair]:
        for a, row in enumerate(self.rows):
            b = 0
            while row:
                if row & 1:
                    yield (a, b)
                row >>= 1
                b += 1

    def count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def __and__(self, other: "BinaryRelation") -> "BinaryRelation":
        self._check(other)
        return BinaryRelation(self.n, [a & b for a, b in zip(self.rows, other.rows)])

    def __or__(self, other: "BinaryRelation") -> "BinaryRelation":
        self._check(other)
        return BinaryRelation(self.n, [a | b for a, b in zip(self.rows, other.rows)])

    def compose(self, other: "BinaryRelation") -> "BinaryRelation":
        """Relational product: (a, c) iff a self b and b other c for some b."""
        self._check(other)
        out = []
        for row in self.rows:
            acc = 0
            b = 0
            while row:
                if row & 1:
                    acc |= other.rows[b]
                row >>= 1
                b += 1
            out.append(acc)
        return BinaryRelation(self.n, out)

    def transpose(self) -> "BinaryRelation":
        rows = [0] * self.n
        for a, b in self.pairs():
            rows[b] |= 1 << a
        return BinaryRelation(self.n, rows)

    def is_subset(self, other: "BinaryRelation") -> bool:
        self._check(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_transitive(self) -> bool:
        return self.compose(self).is_subset(self)

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def to_partition(self) -> Partition:
        if not self.is_equivalence():
            raise ValueError("relation is not an equivalence")
        return Partition.from_pairs(self.n, self.pairs())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BinaryRelation)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"BinaryRelation(n={self.n}, pairs={sorted(self.pairs())})"

    def _check(self, other: "BinaryRelation") -> None:
        if self.n != other.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")


def congruence_violation(S: "FiniteSemigroup", p: Partition):
    """Witness (a, b, c, side) where compatibility fails, or None."""
    table = S.table
    for a, b in p.pairs():
        ra, rb = table[a], table[b]
        for c in range(S.order):
            if not p.same(table[c][a], table[c][b]):
                return (a, b, c, "left")
            if not p.same(ra[c], rb[c]):
                return (a, b, c, "right")
    return None


def is_congruence(S: "FiniteSemigroup", p: Partition) -> bool:
    """True when the partition is compatible with multiplication."""
    return congruence_violation(S, p) is None


class Congruence:
    """A partition certified compatible with its host's multiplication."""

    __slots__ = ("partition", "host")

    def __init__(self, partition: Partition, host: "FiniteSemigroup", *, _trusted=False):
        if partition.n != host.order:
            raise ValueError("partition universe does not match semigroup order")
        if not _trusted:
            witness = congruence_violation(host, partition)
            if witness is not None:
                raise NotACongruence(*witness)
        object.__setattr__(self, "partition", partition)
        object.__setattr__(self, "host", host)

    def __setattr__(self, name, value):
        raise AttributeError("Congruence is immutable")

    @classmethod
    def equality(cls, S: "FiniteSemigroup") -> "Congruence":
        return cls(Partition.equality(S.order), S, _trusted=True)

    @classmethod
    def universal(cls, S: "FiniteSemigroup") -> "Congruence":
        return cls(Partition.universal(S.order), S, _trusted=True)

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def key(self) -> tuple[int, ...]:
        return self.partition.block_id

    def same(self, a: int, b: int) -> bool:
        return self.partition.same(a, b)

    def blocks(self):
        return self.partition.blocks()

    def meet(self, other: "Congruence") -> "Congruence":
        self._check_host(other)
        return Congruence(self.partition.meet(other.partition), self.host, _trusted=True)

    def join(self, other: "Congruence") -> "Congruence":
        # For two congruences the equivalence join is already compatible,
        # hence equals the least congruence containing the union.
        self._check_host(other)
        return Congruence(self.partition.join(other.partition), self.host, _trusted=True)

    def refines(self, other: "Congruence") -> bool:
        self._check_host(other)
        return self.partition.refines(other.partition)

    def relation(self) -> BinaryRelation:
        return self.partition.relation()

    def is_equality(self) -> bool:
        return self.partition.num_blocks == self.n

    def is_universal(self) -> bool:
        return self.partition.num_blocks == 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Congruence)
            and self.partition == other.partition
            and self.host.table == other.host.table
        )

    def __hash__(self) -> int:
        return hash((self.partition, self.host.table))

    def __repr__(self) -> str:
        return f"Congruence({self.partition.to_text()})"

    def _check_host(self, other: "Congruence") -> None:
        if self.host.table != other.host.table:
            raise HostMismatch("congruences live on different semigroups")


def congruence_closure(
    S: "FiniteSemigroup", generator: BinaryRelation | Iterable[Pair]
) -> Congruence:
    """Least congruence containing the given relation or pair list."""
    if isinstance(generator, BinaryRelation):
        if generator.n != S.order:
            raise ValueError("relation universe does not match semigroup order")
        pairs = list(generator.pairs())
    else:
        pairs = list(generator)
    n = S.order
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"pair ({a}, {b}) outside universe of size {n}")
    blocks = kernels.closure_blocks(S.flat_table, n, pairs)
    return Congruence(Partition(blocks), S, _trusted=True)


def greatest_contained_congruence(S: "FiniteSemigroup", e: Partition) -> Congruence:
    """Greatest congruence contained in the equivalence `e`."""
    if e.n != S.order:
        raise ValueError("partition universe does not match semigroup order")
    blocks = kernels.greatest_contained_blocks(S.flat_table, S.order, e.block_id)
    return Congruence(Partition(blocks), S, _trusted=True)


def saturation_congruence(S: "FiniteSemigroup", subset: Iterable[int]) -> Congruence:
    """Greatest congruence saturating `subset` (subset = union of classes)."""
    member = [0] * (S.order + 1)
    for a in subset:
        if not 0 <= a < S.order:
            raise ValueError(f"element {a} outside universe of size {S.order}")
        member[a] = 1
    blocks = kernels.saturation_blocks(S.flat_table, S.order, member)
    return Congruence(Partition(blocks), S, _trusted=True)


class CongruenceLattice:
    """The complete, deterministically ordered set of congruences of a host."""

    def __init__(self, host: "FiniteSemigroup", congruences: Sequence[Congruence]):
        self.host = host
        self.congruences = tuple(congruences)
        self._keys = {c.key: i for i, c in enumerate(self.congruences)}
        self._hasse: tuple[Pair, ...] | None = None

    def __iter__(self) -> Iterator[Congruence]:
        return iter(self.congruences)

    def __len__(self) -> int:
        return len(self.congruences)

    def __contains__(self, c: Congruence) -> bool:
        return c.key in self._keys

    def index(self, c: Congruence) -> int:
        return self._keys[c.key]

    @property
    def equality(self) -> Congruence:
        return self.congruences[self._keys[Partition.equality(self.host.order).block_id]]

    @property
    def universal(self) -> Congruence:
        return self.congruences[self._keys[Partition.universal(self.host.order).block_id]]

    def least_where(self, pred: Callable[[Congruence], bool]) -> Congruence | None:
        """Least congruence satisfying pred, or None when no least exists."""
        cands = [c for c in self.congruences if pred(c)]
        if not cands:
            return None
        m = reduce(lambda x, y: x.meet(y), cands)
        return m if m.key in self._keys and pred(m) else None

    def greatest_where(self, pred: Callable[[Congruence], bool]) -> Congruence | None:
        cands = [c for c in self.congruences if pred(c)]
        if not cands:
            return None
        j = reduce(lambda x, y: x.join(y), cands)
        return j if j.key in self._keys and pred(j) else None

    def hasse_edges(self) -> tuple[Pair, ...]:
        """Covering pairs (i, j): congruence i strictly below j, nothing between."""
        if self._hasse is None:
            cs = self.congruences
            below = [
                [i != j and cs[i].refines(cs[j]) for j in range(len(cs))]
                for i in range(len(cs))
            ]
            edges = []
            for i in range(len(cs)):
                for j in range(len(cs)):
                    if below[i][j] and not any(
                        below[i][k] and below[k][j] for k in range(len(cs))
                    ):
                        edges.append((i, j))
            self._hasse = tuple(sorted(edges))
        return self._hasse

    def to_dot(self) -> str:
        lines = ["digraph congruence_lattice {", "  rankdir=BT;"]
        for i, c in enumerate(self.congruences):
            label = c.partition.to_text() if self.host.order <= 12 else (
                f"{c.partition.num_blocks} blocks"
            )
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.hasse_edges():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "order": self.host.order,
            "count": len(self.congruences),
            "congruences": [c.partition.to_text() for c in self.congruences],
            "hasse": [list(e) for e in self.hasse_edges()],
        }


def theta_relation(S: "FiniteSemigroup") -> BinaryRelation:
    """Pairs (a, b) with a^0 * b == a * b^0.

    Reflexive and relates any two idempotents, but transitivity is not
    guaranteed, so the result stays a raw relation.
    """
    zero = S.idempotent_power_map()
    table = S.table
    n = S.order
    rows = []
    for a in range(n):
        za = table[zero[a]]
        ra = table[a]
        acc = 0
        for b in range(n):
            if za[b] == ra[zero[b]]:
                acc |= 1 << b
        rows.append(acc)
    return BinaryRelation(n, rows)


def f_relation(S: "FiniteSemigroup") -> BinaryRelation:
    """Pairs (a, b) with a * b^-1 idempotent."""
    inv = S.inverse_map()
    table = S.table
    idem = S.idempotents()
    n = S.order
    rows = []
    for a in range(n):
        ra = table[a]
        acc = 0
        for b in range(n):
            if ra[inv[b]] in idem:
                acc |= 1 << b
        rows.append(acc)
    return BinaryRelation(n, rows)


def y_relation(S: "FiniteSemigroup") -> BinaryRelation:
    """Pairs (a, b) whose inverse sets coincide; always an equivalence."""
    n = S.order
    vsets = [frozenset(S.inverses_set(a)) for a in range(n)]
    rows = []
    for a in range(n):
        acc = 0
        for b in range(n):
            if vsets[a] == vsets[b]:
                acc |= 1 << b
        rows.append(acc)
    return BinaryRelation(n, rows)


DEFAULT_LATTICE_BOUND = 8


def all_congruences(S: "FiniteSemigroup", bound: int = DEFAULT_LATTICE_BOUND) -> CongruenceLattice:
    """Every congruence of S: principal congruences closed under join.

    Exhaustive, so guarded by an order bound (default 8).
    """
    n = S.order
    if n > bound:
        raise OrderBoundExceeded(n, bound, "congruence lattice enumeration")
    seen: dict[tuple[int, ...], Congruence] = {}
    eps = Congruence.equality(S)
    seen[eps.key] = eps
    frontier = []
    for a in range(n):
        for b in range(a + 1, n):
            c = congruence_closure(S, [(a, b)])
            if c.key not in seen:
                seen[c.key] = c
                frontier.append(c)
    while frontier:
        fresh = []
        for c in frontier:
            for d in list(seen.values()):
                j = c.join(d)
                if j.key not in seen:
                    seen[j.key] = j
                    fresh.append(j)
        frontier = fresh
    ordered = sorted(seen.values(), key=lambda c: c.key)
    return CongruenceLattice(S, ordered)
