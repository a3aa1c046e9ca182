"""Kernel and trace of congruences, and the four class-extremum operators.

On a completely regular semigroup a congruence is determined by its trace
(restriction to the idempotents) and its kernel (union of classes meeting
the idempotents).  Congruences sharing a trace form an interval; so do
congruences sharing a kernel.  `lower_t`/`upper_t` map a congruence to the
ends of its trace interval, `lower_k`/`upper_k` to the ends of its kernel
interval.  Iterating the two lower operators from a root produces the
min-network realised by `min_network`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FiniteSemigroup
from .errors import NotACongruence
from .relations import (
    BinaryRelation,
    Congruence,
    Partition,
    congruence_closure,
    congruence_violation,
    greatest_contained_congruence,
    saturation_congruence,
    theta_relation,
)

MAX_NETWORK_DEPTH = 16


@dataclass(frozen=True)
class KernelTrace:
    """Kernel (element subset) and trace (partition of the idempotents)."""

    kernel: frozenset[int]
    idempotents: tuple[int, ...]
    trace: Partition


def kernel_trace(c: Congruence) -> KernelTrace:
    """Kernel and trace of a congruence on a completely regular semigroup."""
    S = c.host
    S.require_completely_regular()
    idem = tuple(sorted(S.idempotents()))
    idem_blocks = {c.partition.block_id[e] for e in idem}
    kernel = frozenset(
        a for a in range(S.order) if c.partition.block_id[a] in idem_blocks
    )
    return KernelTrace(kernel, idem, c.partition.restrict(idem))


def reconstruct_test(c: Congruence, a: int, b: int) -> bool:
    """Membership test rebuilt from kernel and trace.

    Evaluates: a^0 and b^0 trace-related, and a*b^-1 in the kernel.  For a
    true congruence this agrees with (a, b) in c for every pair.
    """
    S = c.host
    kt = kernel_trace(c)
    zero = S.idempotent_power_map()
    inv = S.inverse_map()
    if not c.partition.same(zero[a], zero[b]):
        return False
    return S.table[a][inv[b]] in kt.kernel


def lower_t(c: Congruence) -> Congruence:
    """Least congruence with the same trace as c.

    Computed both as the closure of the trace pairs and as the closure of
    the intersection with the idempotent-power relation; the two must agree.
    """
    S = c.host
    S.require_completely_regular()
    idem = sorted(S.idempotents())
    trace_pairs = [
        (e, f) for i, e in enumerate(idem) for f in idem[i + 1 :] if c.same(e, f)
    ]
    via_trace = congruence_closure(S, trace_pairs)
    theta = theta_relation(S)
    via_theta = congruence_closure(S, c.relation() & theta)
    if via_trace != via_theta:
        raise AssertionError(
            "trace closure and theta-intersection closure disagree: "
            f"{via_trace.partition.to_text()} vs {via_theta.partition.to_text()}"
        )
    return via_trace


def lower_k(c: Congruence) -> Congruence:
    """Least congruence with the same kernel as c: closure of c meet H."""
    S = c.host
    S.require_completely_regular()
    h = S.green().h
    return congruence_closure(S, c.partition.meet(h).pairs())


def upper_t(c: Congruence) -> Congruence:
    """Greatest congruence with the same trace as c: (c join H)^0."""
    S = c.host
    S.require_completely_regular()
    return greatest_contained_congruence(S, c.partition.join(S.green().h))


def upper_k(c: Congruence) -> Congruence:
    """Greatest congruence with the same kernel as c: saturation of ker c."""
    S = c.host
    S.require_completely_regular()
    return saturation_congruence(S, kernel_trace(c).kernel)


def _omega(S: FiniteSemigroup) -> Congruence:
    return Congruence.universal(S)


def _eta(S: FiniteSemigroup) -> Congruence:
    """Green's D as a congruence; on completely regular semigroups it is one."""
    d = S.green().d
    witness = congruence_violation(S, d)
    if witness is not None:
        raise NotACongruence(*witness)
    return Congruence(d, S, _trusted=True)


RELATIVE_TARGETS = ("cryptogroup", "e_unitary", "orthodox")


def relative_least(rho: Congruence, target: str) -> Congruence:
    """Least congruence containing rho whose quotient lies in the target class.

    cryptogroup: rho join kappa; e_unitary / orthodox: closure of
    (rho join sigma/nu) intersected with the composite relation rho.H.rho.
    """
    S = rho.host
    S.require_completely_regular()
    if target == "cryptogroup":
        kappa = lower_t(lower_k(_omega(S)))
        return rho.join(kappa)
    if target == "e_unitary":
        base = lower_t(_omega(S))
    elif target == "orthodox":
        base = lower_t(_eta(S))
    else:
        raise ValueError(f"unknown target {target!r}; expected one of {RELATIVE_TARGETS}")
    joined = rho.join(base).relation()
    rho_rel = rho.relation()
    h_rel = S.green().h.relation()
    sandwich = rho_rel.compose(h_rel).compose(rho_rel)
    return congruence_closure(S, joined & sandwich)


_ALIASES = {
    "omega": {
        "": "omega",
        "t": "sigma",
        "k": "beta",
        "tk": "pi",
        "kt": "kappa",
        "tkt": "pi_t",
        "ktk": "kappa_k",
    },
    "d": {
        "": "eta",
        "t": "nu",
        "tk": "lambda",
        "tkt": "lambda_t",
    },
}


@dataclass
class MinNetwork:
    """Congruences reached from a root by alternating the two lower operators.

    Nodes are keyed by operator words ("omega", "omega_t", "omega_tk", ...).
    Both branches (first letter t, first letter k) are followed to depth at
    least three and then until two consecutive congruences coincide.
    """

    root: str
    nodes: dict[str, Congruence]
    edges: list[tuple[str, str]]  # (child, parent): child included in parent
    stabilized_depth: int
    host: FiniteSemigroup = field(repr=False)

    def alias(self, word: str) -> str | None:
        suffix = word[len(self.root) :].replace("_", "")
        return _ALIASES.get(self.root, {}).get(suffix)

    def node_label(self, word: str) -> str:
        c = self.nodes[word]
        alias = self.alias(word)
        name = word if alias is None else f"{word} = {alias}"
        if self.host.order <= 12:
            return f"{name}\\n{c.partition.to_text()}"
        return f"{name}\\n{c.partition.num_blocks} blocks"

    def sorted_words(self) -> list[str]:
        return sorted(self.nodes, key=lambda w: (len(w), w))

    def to_dot(self) -> str:
        lines = ["digraph min_network {", "  rankdir=BT;"]
        for word in self.sorted_words():
            lines.append(f'  "{word}" [label="{self.node_label(word)}"];')
        for child, parent in sorted(self.edges):
            lines.append(f'  "{child}" -> "{parent}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "root": self.root,
            "nodes": {
                word: {
                    "alias": self.alias(word),
                    "blocks": self.nodes[word].partition.to_text(),
                }
                for word in self.sorted_words()
            },
            "edges": sorted([list(e) for e in self.edges]),
            "stabilized_depth": self.stabilized_depth,
        }


def min_network(S: FiniteSemigroup, root: str = "omega") -> MinNetwork:
    """Min-network of the universal congruence or of Green's D."""
    S.require_completely_regular()
    if root == "omega":
        start = _omega(S)
    elif root == "d":
        start = _eta(S)
    else:
        raise ValueError(f"unknown root {root!r}; expected 'omega' or 'd'")
    nodes = {root: start}
    edges: list[tuple[str, str]] = []
    depth_reached = 0
    for first in ("t", "k"):
        word = root
        current = start
        letters = ""
        letter = first
        while True:
            nxt = lower_t(current) if letter == "t" else lower_k(current)
            letters += letter
            child = f"{root}_{letters}"
            nodes[child] = nxt
            edges.append((child, word))
            if not nxt.refines(current):
                raise AssertionError(f"lower operator enlarged the congruence at {child}")
            stable = nxt == current and len(letters) >= 3
            word, current = child, nxt
            depth_reached = max(depth_reached, len(letters))
            if stable:
                break
            if len(letters) >= MAX_NETWORK_DEPTH:
                raise AssertionError(
                    f"min-network branch failed to stabilize within {MAX_NETWORK_DEPTH} steps"
                )
            letter = "k" if letter == "t" else "t"
    return MinNetwork(root, nodes, edges, depth_reached, S)


def combined_network_dot(S: FiniteSemigroup) -> str:
    """One DOT graph holding both root networks.

    The direct edge from the band branch to the universal congruence is
    routed through the semilattice root, matching the containment
    beta <= eta <= omega.
    """
    net_o = min_network(S, "omega")
    net_d = min_network(S, "d")
    words: dict[str, tuple[MinNetwork, str]] = {}
    for net in (net_o, net_d):
        for w in net.nodes:
            words[w] = (net, w)
    edges = set(net_o.edges) | set(net_d.edges)
    if ("omega_k", "omega") in edges:
        edges.discard(("omega_k", "omega"))
        edges.add(("omega_k", "d"))
    edges.add(("d", "omega"))
    lines = ["digraph min_network {", "  rankdir=BT;"]
    for w in sorted(words, key=lambda w: (len(w), w)):
        net, word = words[w]
        lines.append(f'  "{w}" [label="{net.node_label(word)}"];')
    for child, parent in sorted(edges):
        lines.append(f'  "{child}" -> "{parent}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
