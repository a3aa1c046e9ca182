"""Computing with finite completely regular semigroups.

Cayley-table semigroups, Green's relations, congruence lattices, the
kernel-trace operators with their min-networks, named congruences,
classification predicates, and a verification battery that checks the
package's congruence identities against brute-force oracles.
"""

from .classify import (
    ClassificationReport,
    CongruencePredicates,
    NamedCongruenceSet,
    classify,
    congruence_predicates,
    named_congruences,
)
from .core import ElementView, FiniteSemigroup, GreenData, direct_product, from_table
from .instances import (
    CensusEntry,
    ReesMatrixSpec,
    chain_semilattice,
    cyclic_group,
    enumerate_semigroups,
    ingest,
    ingest_text,
    left_zero,
    rectangular_band,
    rees_matrix,
    right_zero,
    serialize,
)
from .kernel_trace import (
    KernelTrace,
    MinNetwork,
    kernel_trace,
    lower_k,
    lower_t,
    min_network,
    reconstruct_test,
    relative_least,
    upper_k,
    upper_t,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .relations import (
    BinaryRelation,
    Congruence,
    CongruenceLattice,
    Partition,
    all_congruences,
    congruence_closure,
    f_relation,
    greatest_contained_congruence,
    is_congruence,
    saturation_congruence,
    theta_relation,
    y_relation,
)
from .verifiers import RESULT_IDS, Verdict, verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "BinaryRelation",
    "CensusEntry",
    "ClassificationReport",
    "Congruence",
    "CongruenceLattice",
    "CongruencePredicates",
    "ElementView",
    "FiniteSemigroup",
    "GreenData",
    "KERNEL_BACKEND",
    "KernelTrace",
    "MinNetwork",
    "NamedCongruenceSet",
    "Partition",
    "ReesMatrixSpec",
    "RESULT_IDS",
    "Verdict",
    "all_congruences",
    "chain_semilattice",
    "classify",
    "congruence_closure",
    "congruence_predicates",
    "cyclic_group",
    "direct_product",
    "enumerate_semigroups",
    "f_relation",
    "from_table",
    "greatest_contained_congruence",
    "ingest",
    "ingest_text",
    "is_congruence",
    "kernel_trace",
    "left_zero",
    "lower_k",
    "lower_t",
    "min_network",
    "named_congruences",
    "reconstruct_test",
    "rectangular_band",
    "rees_matrix",
    "relative_least",
    "right_zero",
    "saturation_congruence",
    "serialize",
    "theta_relation",
    "upper_k",
    "upper_t",
    "verify",
    "verify_all",
    "y_relation",
]
