"""Named congruences and classification predicates.

The twelve named congruences are all reachable from the universal relation
and Green's D by the kernel-trace operators; the classification report
evaluates the standard class predicates (band, cryptic, orthodox, ...) plus
the three quotient-level properties the verification battery revolves
around.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .core import FiniteSemigroup
from .errors import NotClosed
from .kernel_trace import (
    _eta,
    _omega,
    kernel_trace,
    lower_k,
    lower_t,
    upper_k,
    upper_t,
)
from .relations import Congruence, f_relation, is_congruence


@dataclass(frozen=True)
class NamedCongruenceSet:
    """The named congruences of one completely regular semigroup."""

    sigma: Congruence  # least group congruence
    beta: Congruence  # least band congruence
    eta: Congruence  # least semilattice congruence (Green's D)
    nu: Congruence  # least Clifford congruence
    kappa: Congruence  # least cryptogroup congruence
    pi: Congruence  # least E-unitary congruence
    lambda_: Congruence  # least orthodox congruence
    mu: Congruence  # greatest idempotent separating congruence
    tau: Congruence  # greatest idempotent pure congruence
    pi_t: Congruence
    lambda_t: Congruence
    kappa_k: Congruence

    def as_dict(self) -> dict[str, Congruence]:
        return {f.name.rstrip("_"): getattr(self, f.name) for f in fields(self)}

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "congruences": {
                name: c.partition.to_text() for name, c in self.as_dict().items()
            },
        }


def named_congruences(S: FiniteSemigroup) -> NamedCongruenceSet:
    """Compute all twelve named congruences via the kernel-trace operators."""
    S.require_completely_regular()
    omega = _omega(S)
    eps = Congruence.equality(S)
    sigma = lower_t(omega)
    beta = lower_k(omega)
    eta = _eta(S)
    nu = lower_t(eta)
    kappa = lower_t(beta)
    pi = lower_k(sigma)
    lam = lower_k(nu)
    return NamedCongruenceSet(
        sigma=sigma,
        beta=beta,
        eta=eta,
        nu=nu,
        kappa=kappa,
        pi=pi,
        lambda_=lam,
        mu=upper_t(eps),
        tau=upper_k(eps),
        pi_t=lower_t(pi),
        lambda_t=lower_t(lam),
        kappa_k=lower_k(kappa),
    )


# -- whole-semigroup predicates (independent code paths) ----------------------


def is_band(S: FiniteSemigroup) -> bool:
    return len(S.idempotents()) == S.order


def is_commutative(S: FiniteSemigroup) -> bool:
    t = S.table
    return all(
        t[a][b] == t[b][a] for a in range(S.order) for b in range(a + 1, S.order)
    )


def is_semilattice(S: FiniteSemigroup) -> bool:
    return is_band(S) and is_commutative(S)


def is_rectangular_band(S: FiniteSemigroup) -> bool:
    """The identity a*b*a == a (it forces every element idempotent)."""
    t = S.table
    return all(
        t[t[a][b]][a] == a for a in range(S.order) for b in range(S.order)
    )


def is_group(S: FiniteSemigroup) -> bool:
    return S.is_completely_regular() and len(S.idempotents()) == 1


def is_completely_simple(S: FiniteSemigroup) -> bool:
    return S.is_completely_regular() and S.green().d.num_blocks == 1


def is_cryptic(S: FiniteSemigroup) -> bool:
    """Green's H is a congruence."""
    return is_congruence(S, S.green().h)


def is_orthodox(S: FiniteSemigroup) -> bool:
    t = S.table
    idem = S.idempotents()
    return all(t[e][f] in idem for e in idem for f in idem)


def is_clifford(S: FiniteSemigroup) -> bool:
    """Completely regular with every idempotent central."""
    if not S.is_completely_regular():
        return False
    t = S.table
    return all(
        t[e][a] == t[a][e] for e in S.idempotents() for a in range(S.order)
    )


def is_rectangular_group(S: FiniteSemigroup) -> bool:
    """Completely simple with the idempotents forming a rectangular band."""
    idem = sorted(S.idempotents())
    if not idem:
        return False
    t = S.table
    if any(t[e][f] not in S.idempotents() for e in idem for f in idem):
        return False
    if any(t[t[e][f]][e] != e for e in idem for f in idem):
        return False
    return is_completely_simple(S)


def subset_is_rectangular_band(S: FiniteSemigroup, subset) -> bool:
    """The subset is closed and satisfies a*b*a == a within itself."""
    elems = sorted(subset)
    members = set(elems)
    t = S.table
    for a in elems:
        for b in elems:
            p = t[a][b]
            if p not in members:
                return False
            if t[p][a] != a:
                return False
    return True


def classes_with_idempotent_are_rectangular_bands(
    S: FiniteSemigroup, c: Congruence
) -> bool:
    """Every class of c containing an idempotent is a rectangular band."""
    idem = S.idempotents()
    seen = set()
    for e in sorted(idem):
        bid = c.partition.block_id[e]
        if bid in seen:
            continue
        seen.add(bid)
        if not subset_is_rectangular_band(S, c.partition.block_of(e)):
            return False
    return True


# -- congruence-level predicates ----------------------------------------------


@dataclass(frozen=True)
class CongruencePredicates:
    """Properties of one congruence on a completely regular semigroup."""

    idempotent_separating: bool
    idempotent_pure: bool
    over_groups: bool
    over_rectangular_bands: bool
    group_congruence: bool
    band_congruence: bool
    semilattice_congruence: bool
    cryptogroup_congruence: bool
    e_unitary_congruence: bool
    orthodox_congruence: bool
    clifford_congruence: bool

    def to_json_dict(self) -> dict:
        return {"schema": 1, **{f.name: getattr(self, f.name) for f in fields(self)}}


def congruence_predicates(c: Congruence) -> CongruencePredicates:
    S = c.host
    S.require_completely_regular()
    idem = S.idempotents()
    h = S.green().h
    frel = f_relation(S)

    separating = c.partition.refines(h)
    sep_direct = not any(
        c.same(e, f) for e in idem for f in idem if e != f
    )
    if separating != sep_direct:
        raise AssertionError("idempotent-separating characterisations disagree")

    pure = c.relation().is_subset(frel)
    kernel = kernel_trace(c).kernel
    pure_direct = kernel == idem
    if pure != pure_direct:
        raise AssertionError("idempotent-pure characterisations disagree")

    # A class is a subsemigroup iff a and a*a are related for any member; in a
    # completely regular semigroup such a class must contain an idempotent.
    table = S.table
    for block in c.blocks():
        a = block[0]
        if c.same(a, table[a][a]) and not any(b in idem for b in block):
            raise AssertionError("subsemigroup class without idempotent")

    over_groups = True
    over_rb = True
    seen = set()
    for e in sorted(idem):
        bid = c.partition.block_id[e]
        if bid in seen:
            continue
        seen.add(bid)
        block = c.partition.block_of(e)
        if sum(1 for b in block if b in idem) != 1:
            over_groups = False
        if not subset_is_rectangular_band(S, block):
            over_rb = False

    Q, _ = S.quotient(c)
    return CongruencePredicates(
        idempotent_separating=separating,
        idempotent_pure=pure,
        over_groups=over_groups,
        over_rectangular_bands=over_rb,
        group_congruence=is_group(Q),
        band_congruence=is_band(Q),
        semilattice_congruence=is_semilattice(Q),
        cryptogroup_congruence=Q.is_completely_regular() and is_cryptic(Q),
        e_unitary_congruence=classify(Q).e_unitary is True,
        orthodox_congruence=is_orthodox(Q),
        clifford_congruence=is_clifford(Q),
    )


# -- the classification report -------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    """Class membership flags; fields needing named congruences are None
    when the input is not completely regular."""

    completely_regular: bool
    band: bool
    semilattice: bool
    rectangular_band: bool
    group: bool
    rectangular_group: bool
    completely_simple: bool
    cryptic: bool
    orthodox: bool
    orthogroup: bool
    clifford: bool
    e_unitary: bool | None
    band_of_rectangular_groups: bool | None
    ker_sigma_cryptic: bool | None
    ker_nu_cryptic: bool | None
    kappa_over_rectangular_bands: bool | None

    def to_json_dict(self) -> dict:
        return {"schema": 1, **{f.name: getattr(self, f.name) for f in fields(self)}}


def subsemigroup_is_cryptic(S: FiniteSemigroup, subset) -> bool | None:
    """Cryptic flag of the induced subsemigroup; None when not closed."""
    try:
        T, _ = S.subsemigroup(subset)
    except NotClosed:
        return None
    return is_cryptic(T)


def classify(S: FiniteSemigroup) -> ClassificationReport:
    cr = S.is_completely_regular()
    e_unitary = None
    borg = None
    ker_sigma = None
    ker_nu = None
    kappa_over = None
    if cr:
        omega = _omega(S)
        sigma = lower_t(omega)
        beta = lower_k(omega)
        nu = lower_t(_eta(S))
        kappa = lower_t(beta)
        idem = S.idempotents()

        e_unitary = kernel_trace(sigma).kernel == idem

        borg = True
        for block in beta.blocks():
            T, _ = S.subsemigroup(block)
            if not is_rectangular_group(T):
                borg = False
                break

        ker_sigma = subsemigroup_is_cryptic(S, kernel_trace(sigma).kernel)
        ker_nu = subsemigroup_is_cryptic(S, kernel_trace(nu).kernel)
        if ker_sigma is None or ker_nu is None:
            raise AssertionError("kernel of a group/Clifford congruence must be closed")

        kappa_over = classes_with_idempotent_are_rectangular_bands(S, kappa)

    return ClassificationReport(
        completely_regular=cr,
        band=is_band(S),
        semilattice=is_semilattice(S),
        rectangular_band=is_rectangular_band(S),
        group=is_group(S),
        rectangular_group=is_rectangular_group(S),
        completely_simple=is_completely_simple(S),
        cryptic=is_cryptic(S),
        orthodox=is_orthodox(S),
        orthogroup=cr and is_orthodox(S),
        clifford=is_clifford(S),
        e_unitary=e_unitary,
        band_of_rectangular_groups=borg,
        ker_sigma_cryptic=ker_sigma,
        ker_nu_cryptic=ker_nu,
        kappa_over_rectangular_bands=kappa_over,
    )
