"""Canonical constructions, exhaustive small-order enumeration, ingestion.

The enumerator produces every semigroup of a given order up to isomorphism
(canonical form: lexicographically least table over all relabelings).  It is
the quantification domain for the verification battery, so it favours
correctness and determinism over scale: exhaustive search is bounded at
order 4.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterator

from . import kernels
from .classify import ClassificationReport, classify, is_group
from .core import FiniteSemigroup, from_table
from .errors import (
    NotAGroup,
    NotAssociative,
    OrderBoundExceeded,
    ParseError,
    SemigroupError,
)
from .textio import format_cayley_table, parse_cayley_text

ENUMERATION_BOUND = 4


# -- constructors -------------------------------------------------------------


def cyclic_group(n: int) -> FiniteSemigroup:
    return from_table([[(a + b) % n for b in range(n)] for a in range(n)])


def left_zero(n: int) -> FiniteSemigroup:
    return from_table([[a] * n for a in range(n)])


def right_zero(n: int) -> FiniteSemigroup:
    return from_table([list(range(n)) for _ in range(n)])


def chain_semilattice(n: int) -> FiniteSemigroup:
    return from_table([[min(a, b) for b in range(n)] for a in range(n)])


def rectangular_band(m: int, k: int) -> FiniteSemigroup:
    return left_zero(m).direct_product(right_zero(k))


@dataclass(frozen=True)
class ReesMatrixSpec:
    """Parameters of a Rees matrix semigroup over a group.

    Elements are triples (i, g, lam) with product
    (i, g, lam)(j, h, mu) = (i, g * P[lam][j] * h, mu).
    """

    group: FiniteSemigroup
    rows: int
    cols: int
    sandwich: tuple[tuple[int, ...], ...]  # cols x rows, group element indices


def rees_matrix(spec: ReesMatrixSpec) -> FiniteSemigroup:
    """Completely simple semigroup M(G; I, L; P)."""
    G = spec.group
    if not is_group(G):
        raise NotAGroup("the sandwich construction requires a group")
    ni, nl, g = spec.rows, spec.cols, G.order
    if ni < 1 or nl < 1:
        raise ValueError("row and column counts must be positive")
    P = spec.sandwich
    if len(P) != nl or any(len(row) != ni for row in P):
        raise ValueError(f"sandwich matrix must be {nl} x {ni}")
    for row in P:
        for v in row:
            if not 0 <= v < g:
                raise ValueError(f"sandwich entry {v} is not a group element")

    def idx(i: int, a: int, lam: int) -> int:
        return (i * g + a) * nl + lam

    size = ni * g * nl
    table = [[0] * size for _ in range(size)]
    for i in range(ni):
        for a in range(g):
            for lam in range(nl):
                x = idx(i, a, lam)
                for j in range(ni):
                    p = G.table[a][P[lam][j]]
                    for b in range(g):
                        ab = G.table[p][b]
                        for mu in range(nl):
                            table[x][idx(j, b, mu)] = idx(i, ab, mu)
    labels = tuple(
        f"({i},{a},{lam})" for i in range(ni) for a in range(g) for lam in range(nl)
    )
    return from_table(table, labels)


# -- enumeration ---------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    """One isomorphism class of semigroups of a given order."""

    semigroup: FiniteSemigroup
    order: int
    flags: ClassificationReport


def enumerate_semigroups(
    n: int, predicate: Callable[[CensusEntry], bool] | None = None
) -> Iterator[CensusEntry]:
    """Every semigroup of order n up to isomorphism, canonically ordered.

    Exhaustive backtracking over tables with associativity pruning, then
    deduplication by canonical form.  The filter runs after
    canonicalisation.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > ENUMERATION_BOUND:
        raise OrderBoundExceeded(n, ENUMERATION_BOUND, "exhaustive enumeration")
    canon: set[tuple[int, ...]] = set()
    for flat in kernels.associative_tables(n):
        table = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
        S = FiniteSemigroup(table)
        canon.add(S.canonical_table())
    for key in sorted(canon):
        table = [list(key[i * n : (i + 1) * n]) for i in range(n)]
        S = FiniteSemigroup(table)
        entry = CensusEntry(S, n, classify(S))
        if predicate is None or predicate(entry):
            yield entry


# -- ingestion -----------------------------------------------------------------


@dataclass(frozen=True)
class IngestError:
    line: int
    kind: str  # "parse" or "not-associative" or "invalid"
    message: str


@dataclass(frozen=True)
class IngestResult:
    semigroups: tuple[FiniteSemigroup, ...]
    lines: tuple[int, ...]  # section header line per semigroup
    errors: tuple[IngestError, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


def ingest_text(text: str) -> IngestResult:
    """Parse and validate every table section; errors are per-table."""
    parsed, parse_errors = parse_cayley_text(text)
    errors = [IngestError(e.line, "parse", str(e)) for e in parse_errors]
    semigroups = []
    lines = []
    for entry in parsed:
        try:
            S = from_table(entry.table, entry.labels)
        except NotAssociative as e:
            errors.append(IngestError(entry.line, "not-associative", str(e)))
            continue
        except SemigroupError as e:
            errors.append(IngestError(entry.line, "invalid", str(e)))
            continue
        except ValueError as e:
            errors.append(IngestError(entry.line, "invalid", str(e)))
            continue
        semigroups.append(S)
        lines.append(entry.line)
    errors.sort(key=lambda e: e.line)
    return IngestResult(tuple(semigroups), tuple(lines), tuple(errors))


def ingest(path: str | os.PathLike) -> IngestResult:
    with open(path, "r", encoding="utf-8") as fh:
        return ingest_text(fh.read())


def serialize(S: FiniteSemigroup) -> str:
    return format_cayley_table(S.table, S.labels)


# -- the shipped reference instances -------------------------------------------


def non_orthodox_completely_simple() -> FiniteSemigroup:
    """Order-8 completely simple semigroup whose idempotents are not closed.

    2 x 2 sandwich construction over the two-element group with one
    non-identity sandwich entry.
    """
    z2 = cyclic_group(2)
    return rees_matrix(ReesMatrixSpec(z2, 2, 2, ((0, 0), (0, 1))))


def rectangular_group_8() -> FiniteSemigroup:
    """The 2 x 2 rectangular band times the two-element group."""
    return rectangular_band(2, 2).direct_product(cyclic_group(2))


def non_cryptic_order4() -> FiniteSemigroup:
    """Two-element group acting on a two-element left-zero band.

    Smallest completely regular semigroup on which Green's H fails to be a
    congruence; it is orthodox, so it also separates cryptic from orthodox.
    """
    return from_table(
        [
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 2, 2, 2],
            [3, 3, 3, 3],
        ]
    )


def builtin_instances() -> dict[str, FiniteSemigroup]:
    """Named reference instances used by tests and the shipped corpus."""
    return {
        "trivial": from_table([[0]]),
        "left_zero_2": left_zero(2),
        "right_zero_2": right_zero(2),
        "chain_2": chain_semilattice(2),
        "chain_3": chain_semilattice(3),
        "chain_4": chain_semilattice(4),
        "z2": cyclic_group(2),
        "z3": cyclic_group(3),
        "z4": cyclic_group(4),
        "rect_band_2x2": rectangular_band(2, 2),
        "non_cryptic_4": non_cryptic_order4(),
        "clifford_chain2_z2": chain_semilattice(2).direct_product(cyclic_group(2)),
        "clifford_chain3_z2": chain_semilattice(3).direct_product(cyclic_group(2)),
        "clifford_chain2_z3": chain_semilattice(2).direct_product(cyclic_group(3)),
        "clifford_chain4_z2": chain_semilattice(4).direct_product(cyclic_group(2)),
        "completely_simple_8": non_orthodox_completely_simple(),
        "rectangular_group_8": rectangular_group_8(),
    }
