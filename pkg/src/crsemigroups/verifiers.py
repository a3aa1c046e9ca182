"""Machine verification battery for congruence identities and equivalences.

Each verifier checks one statement on one completely regular semigroup and
returns a `Verdict`: either every listed condition evaluated to the same
truth value (for equivalence statements), or a stated identity held, or the
hypothesis failed and the verdict is vacuous.  Conditions are evaluated by
independent code paths so agreement is evidence, not tautology.  Failures
carry a re-checkable witness.

`verify_all` also accepts an externally supplied named-congruence set; the
fault-injection tests use that hook to confirm the battery notices any
perturbed congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .classify import (
    ClassificationReport,
    CongruencePredicates,
    NamedCongruenceSet,
    classes_with_idempotent_are_rectangular_bands,
    classify,
    congruence_predicates,
    is_cryptic,
    is_rectangular_group,
    is_semilattice,
    named_congruences,
    subsemigroup_is_cryptic,
)
from .core import FiniteSemigroup
from .errors import NotClosed
from .kernel_trace import _eta, _omega, kernel_trace, lower_k, lower_t, upper_k, upper_t
from .relations import (
    BinaryRelation,
    Congruence,
    CongruenceLattice,
    all_congruences,
    congruence_closure,
    f_relation,
    is_congruence,
    theta_relation,
    y_relation,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one verifier on one semigroup."""

    result_id: str
    holds: bool
    witness: dict | None = None

    @property
    def vacuous(self) -> bool:
        return bool(self.witness) and self.witness.get("vacuous", False) is True

    def to_json_dict(self) -> dict:
        return {
            "result_id": self.result_id,
            "holds": self.holds,
            "vacuous": self.vacuous,
            "witness": self.witness,
        }


class TheoremContext:
    """Shared, cached computations for one battery run on one semigroup."""

    def __init__(
        self,
        S: FiniteSemigroup,
        bound: int = 8,
        named: NamedCongruenceSet | None = None,
    ):
        S.require_completely_regular()
        self.S = S
        self.bound = bound
        self._named = named
        self._quotients: dict[tuple[int, ...], FiniteSemigroup] = {}
        self._reports: dict[tuple[int, ...], ClassificationReport] = {}
        self._preds: dict[tuple[int, ...], CongruencePredicates] = {}

    @cached_property
    def lattice(self) -> CongruenceLattice:
        return all_congruences(self.S, self.bound)

    @cached_property
    def green(self):
        return self.S.green()

    @cached_property
    def theta(self) -> BinaryRelation:
        return theta_relation(self.S)

    @cached_property
    def frel(self) -> BinaryRelation:
        return f_relation(self.S)

    @cached_property
    def yrel(self) -> BinaryRelation:
        return y_relation(self.S)

    @cached_property
    def named(self) -> NamedCongruenceSet:
        return self._named if self._named is not None else named_congruences(self.S)

    @cached_property
    def report(self) -> ClassificationReport:
        return classify(self.S)

    @cached_property
    def idempotents(self) -> frozenset[int]:
        return self.S.idempotents()

    @cached_property
    def equality(self) -> Congruence:
        return Congruence.equality(self.S)

    def quotient_of(self, c: Congruence) -> FiniteSemigroup:
        if c.key not in self._quotients:
            self._quotients[c.key] = self.S.quotient(c)[0]
        return self._quotients[c.key]

    def classify_quotient(self, c: Congruence) -> ClassificationReport:
        if c.key not in self._reports:
            self._reports[c.key] = classify(self.quotient_of(c))
        return self._reports[c.key]

    def predicates(self, c: Congruence) -> CongruencePredicates:
        if c.key not in self._preds:
            self._preds[c.key] = congruence_predicates(c)
        return self._preds[c.key]

    def kernel(self, c: Congruence) -> frozenset[int]:
        return kernel_trace(c).kernel

    def trace(self, c: Congruence):
        return kernel_trace(c).trace

    def least_where(self, pred: Callable[[Congruence], bool]) -> Congruence:
        found = self.lattice.least_where(pred)
        if found is None:
            raise AssertionError("expected a least congruence but none exists")
        return found

    def greatest_where(self, pred: Callable[[Congruence], bool]) -> Congruence:
        found = self.lattice.greatest_where(pred)
        if found is None:
            raise AssertionError("expected a greatest congruence but none exists")
        return found

    def kernel_closed_and_cryptic(self, c: Congruence) -> bool:
        flag = subsemigroup_is_cryptic(self.S, self.kernel(c))
        return bool(flag)

    def push_to_quotient(self, base: Congruence, c: Congruence):
        """Partition induced by c on the classes of base (base must refine c)."""
        reps = [block[0] for block in base.partition.blocks()]
        from .relations import Partition

        return Partition(c.partition.block_id[r] for r in reps)


def _agreement_verdict(result_id: str, conditions: dict[str, bool], extra=None) -> Verdict:
    values = set(conditions.values())
    if len(values) <= 1:
        return Verdict(result_id, True)
    witness = {"conditions": conditions}
    if extra:
        witness.update(extra)
    return Verdict(result_id, False, witness)


def _all_rho_agreement(
    ctx: TheoremContext,
    result_id: str,
    rhos,
    conditions_of: Callable[[Congruence], dict[str, bool]],
) -> Verdict:
    for rho in rhos:
        conditions = conditions_of(rho)
        if len(set(conditions.values())) > 1:
            return Verdict(
                result_id,
                False,
                {"rho": rho.partition.to_text(), "conditions": conditions},
            )
    return Verdict(result_id, True)


# -- individual verifiers -------------------------------------------------------


def _check_lemma_theta(ctx: TheoremContext) -> Verdict:
    """H intersected with the idempotent-power relation is the equality."""
    meet = ctx.green.h.relation() & ctx.theta
    if meet == BinaryRelation.equality(ctx.S.order):
        return Verdict("LEMMA_THETA", True)
    bad = next(p for p in meet.pairs() if p[0] != p[1])
    return Verdict("LEMMA_THETA", False, {"pair": list(bad)})


def _check_lemma_con(ctx: TheoremContext) -> Verdict:
    """Kernel-trace reconstruction matches membership for every congruence."""
    n = ctx.S.order
    zero = ctx.S.idempotent_power_map()
    inv = ctx.S.inverse_map()
    table = ctx.S.table
    for c in ctx.lattice:
        kernel = ctx.kernel(c)
        ids = c.partition.block_id
        for a in range(n):
            for b in range(n):
                rebuilt = ids[zero[a]] == ids[zero[b]] and table[a][inv[b]] in kernel
                if rebuilt != (ids[a] == ids[b]):
                    return Verdict(
                        "LEMMA_CON",
                        False,
                        {"congruence": c.partition.to_text(), "pair": [a, b]},
                    )
    return Verdict("LEMMA_CON", True)


def _check_lemma_extreme(ctx: TheoremContext) -> Verdict:
    """The four operator formulas hit the extrema of each trace/kernel class."""
    traces = {c.key: ctx.trace(c) for c in ctx.lattice}
    kernels_ = {c.key: ctx.kernel(c) for c in ctx.lattice}
    idem = sorted(ctx.idempotents)
    for c in ctx.lattice:
        t_class = [d for d in ctx.lattice if traces[d.key] == traces[c.key]]
        k_class = [d for d in ctx.lattice if kernels_[d.key] == kernels_[c.key]]
        t_min = t_class[0]
        t_max = t_class[0]
        for d in t_class[1:]:
            t_min = t_min.meet(d)
            t_max = t_max.join(d)
        k_min = k_class[0]
        k_max = k_class[0]
        for d in k_class[1:]:
            k_min = k_min.meet(d)
            k_max = k_max.join(d)
        trace_pairs = [
            (e, f) for i, e in enumerate(idem) for f in idem[i + 1 :] if c.same(e, f)
        ]
        via_trace = congruence_closure(ctx.S, trace_pairs)
        via_theta = congruence_closure(ctx.S, c.relation() & ctx.theta)
        checks = {
            "lower_t": lower_t(c) == t_min,
            "upper_t": upper_t(c) == t_max,
            "lower_k": lower_k(c) == k_min,
            "upper_k": upper_k(c) == k_max,
            "double_formula": via_trace == via_theta,
            "t_min_in_lattice": t_min in ctx.lattice,
            "k_max_in_lattice": k_max in ctx.lattice,
        }
        if not all(checks.values()):
            return Verdict(
                "LEMMA_EXTREME",
                False,
                {
                    "congruence": c.partition.to_text(),
                    "conditions": checks,
                },
            )
    return Verdict("LEMMA_EXTREME", True)


def _kcg_conditions(ctx: TheoremContext, rho: Congruence, with_kernel: bool) -> dict[str, bool]:
    mu = ctx.named.mu
    h = ctx.green.h
    rho_k = lower_k(rho)
    conditions = {}
    if with_kernel:
        conditions["1_kernel_cryptic"] = ctx.kernel_closed_and_cryptic(rho)
    conditions.update(
        {
            "2_kernel_in_ker_mu": ctx.kernel(rho) <= ctx.kernel(mu),
            "3_meet_h_eq_meet_mu": rho.partition.meet(h)
            == rho.partition.meet(mu.partition),
            "4_meet_h_congruence": is_congruence(ctx.S, rho.partition.meet(h)),
            "5_lower_k_below_mu": rho_k.refines(mu),
            "6_lower_k_t_trivial": lower_t(rho_k).is_equality(),
            "7_lower_k_theta_trivial": (rho_k.relation() & ctx.theta)
            == BinaryRelation.equality(ctx.S.order),
            "8_lower_k_over_groups": ctx.predicates(rho_k).over_groups,
        }
    )
    return conditions


def _check_lemma_kcg(ctx: TheoremContext) -> Verdict:
    """For orthodox congruences: eight kernel-crypticity conditions agree."""
    orthodox = [
        rho for rho in ctx.lattice if ctx.classify_quotient(rho).orthodox
    ]
    return _all_rho_agreement(
        ctx, "LEMMA_KCG", orthodox, lambda rho: _kcg_conditions(ctx, rho, True)
    )


def _check_lemma_kcg_nonorthodox(ctx: TheoremContext) -> Verdict:
    """Conditions 2-8 agreement without the orthodoxy hypothesis (reported,
    not asserted by the battery gate)."""
    return _all_rho_agreement(
        ctx,
        "LEMMA_KCG_NONORTHODOX",
        ctx.lattice,
        lambda rho: _kcg_conditions(ctx, rho, False),
    )


def _check_corollary_mu(ctx: TheoremContext) -> Verdict:
    """If the maximal idempotent-separating congruence is orthodox, its
    kernel is cryptic."""
    mu = ctx.named.mu
    if not ctx.classify_quotient(mu).orthodox:
        return Verdict("COROLLARY_MU", True, {"vacuous": True})
    if ctx.kernel_closed_and_cryptic(mu):
        return Verdict("COROLLARY_MU", True)
    return Verdict("COROLLARY_MU", False, {"ker_mu": sorted(ctx.kernel(mu))})


def _check_theorem_sigmacg(ctx: TheoremContext) -> Verdict:
    """Nine characterisations of 'the kernel of the least group congruence
    is cryptic' agree."""
    named = ctx.named
    sigma, pi, mu, pi_t = named.sigma, named.pi, named.mu, named.pi_t
    h = ctx.green.h
    eq_rel = BinaryRelation.equality(ctx.S.order)
    exists_sep_unit = any(
        c.partition.refines(h) and ctx.classify_quotient(c).e_unitary is True
        for c in ctx.lattice
    )
    conditions = {
        "1_ker_sigma_cryptic": ctx.kernel_closed_and_cryptic(sigma),
        "2_ker_sigma_in_ker_mu": ctx.kernel(sigma) <= ctx.kernel(mu),
        "3_meet_h_eq_meet_mu": sigma.partition.meet(h)
        == sigma.partition.meet(mu.partition),
        "4_meet_h_congruence": is_congruence(ctx.S, sigma.partition.meet(h)),
        "5_pi_below_mu": pi.refines(mu),
        "6_pi_t_trivial": pi_t.is_equality(),
        "7_exists_separating_e_unitary": exists_sep_unit,
        "8_pi_theta_trivial": (pi.relation() & ctx.theta) == eq_rel,
        "9_pi_over_groups": ctx.predicates(pi).over_groups,
    }
    return _agreement_verdict("THEOREM_SIGMACG", conditions)


def _oracle_least_containing(
    ctx: TheoremContext, rho: Congruence, quotient_pred: Callable[[ClassificationReport], bool]
) -> Congruence:
    return ctx.least_where(
        lambda c: rho.refines(c) and quotient_pred(ctx.classify_quotient(c))
    )


def _check_prop_rho(ctx: TheoremContext) -> Verdict:
    """Relative least congruence formulas and their quotient-side forms."""
    named = ctx.named
    h_rel = ctx.green.h.relation()
    for rho in ctx.lattice:
        sandwich = rho.relation().compose(h_rel).compose(rho.relation())
        kappa_rho = rho.join(named.kappa)
        pi_rho = congruence_closure(
            ctx.S, rho.join(named.sigma).relation() & sandwich
        )
        lambda_rho = congruence_closure(
            ctx.S, rho.join(named.nu).relation() & sandwich
        )
        oracle_kappa = _oracle_least_containing(
            ctx, rho, lambda r: r.completely_regular and r.cryptic
        )
        oracle_pi = _oracle_least_containing(ctx, rho, lambda r: r.e_unitary is True)
        oracle_lambda = _oracle_least_containing(ctx, rho, lambda r: r.orthodox)

        Q = ctx.quotient_of(rho)
        omega_q = _omega(Q)
        kappa_q = lower_t(lower_k(omega_q))
        pi_q = lower_k(lower_t(omega_q))
        lambda_q = lower_k(lower_t(_eta(Q)))

        conditions = {
            "kappa_formula": kappa_rho == oracle_kappa,
            "pi_formula": pi_rho == oracle_pi,
            "lambda_formula": lambda_rho == oracle_lambda,
            "kappa_quotient_side": ctx.push_to_quotient(rho, kappa_rho)
            == kappa_q.partition,
            "pi_quotient_side": ctx.push_to_quotient(rho, pi_rho) == pi_q.partition,
            "lambda_quotient_side": ctx.push_to_quotient(rho, lambda_rho)
            == lambda_q.partition,
        }
        if not all(conditions.values()):
            return Verdict(
                "PROP_RHO",
                False,
                {"rho": rho.partition.to_text(), "conditions": conditions},
            )
    return Verdict("PROP_RHO", True)


def _check_prop_sigmacgc(ctx: TheoremContext) -> Verdict:
    """Three characterisations of 'the quotient has cryptic ker sigma'."""

    def conditions_of(rho: Congruence) -> dict[str, bool]:
        pi_rho = _oracle_least_containing(ctx, rho, lambda r: r.e_unitary is True)
        return {
            "1_quotient_ker_sigma_cryptic": ctx.classify_quotient(rho).ker_sigma_cryptic
            is True,
            "2_pi_rho_below_upper_t": pi_rho.refines(upper_t(rho)),
            "3_traces_equal": ctx.trace(pi_rho) == ctx.trace(rho),
        }

    return _all_rho_agreement(ctx, "PROP_SIGMACGC", ctx.lattice, conditions_of)


def _check_corollary_pit(ctx: TheoremContext) -> Verdict:
    """pi_t is the composite word value and the least congruence whose
    quotient has cryptic ker sigma."""
    fresh = lower_t(lower_k(lower_t(_omega(ctx.S))))
    oracle = ctx.least_where(
        lambda c: ctx.classify_quotient(c).ker_sigma_cryptic is True
    )
    conditions = {
        "word_value": ctx.named.pi_t == fresh,
        "least_by_scan": ctx.named.pi_t == oracle,
    }
    if all(conditions.values()):
        return Verdict("COROLLARY_PIT", True)
    return Verdict(
        "COROLLARY_PIT",
        False,
        {
            "conditions": conditions,
            "pi_t": ctx.named.pi_t.partition.to_text(),
            "oracle": oracle.partition.to_text(),
        },
    )


def _check_theorem_nucg(ctx: TheoremContext) -> Verdict:
    """Nine characterisations of 'the kernel of the least Clifford congruence
    is cryptic' agree."""
    named = ctx.named
    nu, lam, mu, lambda_t = named.nu, named.lambda_, named.mu, named.lambda_t
    h = ctx.green.h
    eq_rel = BinaryRelation.equality(ctx.S.order)
    exists_sep_orth = any(
        c.partition.refines(h) and ctx.classify_quotient(c).orthodox
        for c in ctx.lattice
    )
    conditions = {
        "1_ker_nu_cryptic": ctx.kernel_closed_and_cryptic(nu),
        "2_ker_nu_in_ker_mu": ctx.kernel(nu) <= ctx.kernel(mu),
        "3_meet_h_eq_meet_mu": nu.partition.meet(h) == nu.partition.meet(mu.partition),
        "4_meet_h_congruence": is_congruence(ctx.S, nu.partition.meet(h)),
        "5_lambda_below_mu": lam.refines(mu),
        "6_lambda_t_trivial": lambda_t.is_equality(),
        "7_exists_separating_orthodox": exists_sep_orth,
        "8_lambda_theta_trivial": (lam.relation() & ctx.theta) == eq_rel,
        "9_lambda_over_groups": ctx.predicates(lam).over_groups,
    }
    return _agreement_verdict("THEOREM_NUCG", conditions)


def _check_prop_nucgc(ctx: TheoremContext) -> Verdict:
    """Three characterisations of 'the quotient has cryptic ker nu'."""

    def conditions_of(rho: Congruence) -> dict[str, bool]:
        lambda_rho = _oracle_least_containing(ctx, rho, lambda r: r.orthodox)
        return {
            "1_quotient_ker_nu_cryptic": ctx.classify_quotient(rho).ker_nu_cryptic
            is True,
            "2_lambda_rho_below_upper_t": lambda_rho.refines(upper_t(rho)),
            "3_traces_equal": ctx.trace(lambda_rho) == ctx.trace(rho),
        }

    return _all_rho_agreement(ctx, "PROP_NUCGC", ctx.lattice, conditions_of)


def _check_corollary_lambdat(ctx: TheoremContext) -> Verdict:
    """lambda_t is the composite word value and the least congruence whose
    quotient has cryptic ker nu."""
    fresh = lower_t(lower_k(lower_t(_eta(ctx.S))))
    oracle = ctx.least_where(lambda c: ctx.classify_quotient(c).ker_nu_cryptic is True)
    conditions = {
        "word_value": ctx.named.lambda_t == fresh,
        "least_by_scan": ctx.named.lambda_t == oracle,
    }
    if all(conditions.values()):
        return Verdict("COROLLARY_LAMBDAT", True)
    return Verdict(
        "COROLLARY_LAMBDAT",
        False,
        {
            "conditions": conditions,
            "lambda_t": ctx.named.lambda_t.partition.to_text(),
            "oracle": oracle.partition.to_text(),
        },
    )


def _check_prop_brecg(ctx: TheoremContext) -> Verdict:
    """Classes-over-rectangular-bands implies band of rectangular groups."""
    if ctx.report.kappa_over_rectangular_bands is not True:
        return Verdict("PROP_BRECG", True, {"vacuous": True})
    if ctx.report.band_of_rectangular_groups is True:
        return Verdict("PROP_BRECG", True)
    return Verdict("PROP_BRECG", False, {"report": ctx.report.to_json_dict()})


def _check_lemma_ftheta(ctx: TheoremContext) -> Verdict:
    """On bands of rectangular groups the band congruence meets the
    idempotent-product and idempotent-power relations identically."""
    if ctx.report.band_of_rectangular_groups is not True:
        return Verdict("LEMMA_FTHETA", True, {"vacuous": True})
    beta_rel = ctx.named.beta.relation()
    lhs = beta_rel & ctx.frel
    rhs = beta_rel & ctx.theta
    if lhs == rhs:
        return Verdict("LEMMA_FTHETA", True)
    diff = sorted(set(lhs.pairs()) ^ set(rhs.pairs()))
    return Verdict("LEMMA_FTHETA", False, {"differing_pairs": [list(p) for p in diff[:5]]})


def _check_theorem_korecb(ctx: TheoremContext) -> Verdict:
    """Ten characterisations of 'the least cryptogroup congruence is over
    rectangular bands' agree."""
    named = ctx.named
    kappa, beta, tau, kappa_k = named.kappa, named.beta, named.tau, named.kappa_k
    beta_rel = beta.relation()
    theta = ctx.theta
    idem = ctx.idempotents
    bt = beta_rel & theta
    bt_is_congruence = bt.is_equivalence() and is_congruence(ctx.S, bt.to_partition())
    exists_pure_cryptogroup = any(
        ctx.kernel(c) == idem
        and ctx.classify_quotient(c).completely_regular
        and ctx.classify_quotient(c).cryptic
        for c in ctx.lattice
    )
    kt_beta = ctx.trace(beta)
    kt_tau = ctx.trace(tau)
    conditions = {
        "1_kappa_over_rect_bands": classes_with_idempotent_are_rectangular_bands(
            ctx.S, kappa
        ),
        "2_beta_meets_agree": (beta_rel & ctx.frel) == bt
        and bt == (beta_rel & tau.relation()),
        "3_beta_theta_congruence": bt_is_congruence,
        "4_kappa_h_trivial": kappa.partition.meet(ctx.green.h).num_blocks
        == ctx.S.order,
        "5_kappa_below_tau": kappa.refines(tau),
        "6_kappa_k_trivial": kappa_k.is_equality(),
        "7_exists_pure_cryptogroup": exists_pure_cryptogroup,
        "8_kappa_in_f": kappa.relation().is_subset(ctx.frel),
        "9_borg_with_trace_inclusion": ctx.report.band_of_rectangular_groups is True
        and kt_beta.refines(kt_tau),
        "10_kappa_in_y": kappa.relation().is_subset(ctx.yrel),
    }
    return _agreement_verdict("THEOREM_KORECB", conditions)


def _check_prop_korecbc(ctx: TheoremContext) -> Verdict:
    """Three characterisations of 'the quotient's least cryptogroup
    congruence is over rectangular bands'."""

    def conditions_of(rho: Congruence) -> dict[str, bool]:
        rho_K = upper_k(rho)
        report_K = ctx.classify_quotient(rho_K)
        return {
            "1_quotient_kappa_over_rb": ctx.classify_quotient(
                rho
            ).kappa_over_rectangular_bands
            is True,
            "2_upper_k_cryptogroup": report_K.completely_regular and report_K.cryptic,
            "3_kernel_join_kappa": ctx.kernel(rho.join(ctx.named.kappa))
            == ctx.kernel(rho),
        }

    return _all_rho_agreement(ctx, "PROP_KORECBC", ctx.lattice, conditions_of)


def _check_corollary_kappak(ctx: TheoremContext) -> Verdict:
    """kappa_k is the composite word value and the least congruence whose
    quotient has its least cryptogroup congruence over rectangular bands."""
    fresh = lower_k(lower_t(lower_k(_omega(ctx.S))))
    oracle = ctx.least_where(
        lambda c: ctx.classify_quotient(c).kappa_over_rectangular_bands is True
    )
    conditions = {
        "word_value": ctx.named.kappa_k == fresh,
        "least_by_scan": ctx.named.kappa_k == oracle,
    }
    if all(conditions.values()):
        return Verdict("COROLLARY_KAPPAK", True)
    return Verdict(
        "COROLLARY_KAPPAK",
        False,
        {
            "conditions": conditions,
            "kappa_k": ctx.named.kappa_k.partition.to_text(),
            "oracle": oracle.partition.to_text(),
        },
    )


def _check_prop_meet(ctx: TheoremContext) -> Verdict:
    """kappa meet pi equals pi_t join kappa_k, and is least with both
    quotient properties."""
    named = ctx.named
    meet = named.kappa.meet(named.pi)
    join = named.pi_t.join(named.kappa_k)
    oracle = ctx.least_where(
        lambda c: ctx.classify_quotient(c).ker_sigma_cryptic is True
        and ctx.classify_quotient(c).kappa_over_rectangular_bands is True
    )
    conditions = {
        "meet_eq_join": meet == join,
        "least_by_scan": meet == oracle,
    }
    if all(conditions.values()):
        return Verdict("PROP_MEET", True)
    return Verdict(
        "PROP_MEET",
        False,
        {
            "conditions": conditions,
            "kappa_meet_pi": meet.partition.to_text(),
            "pi_t_join_kappa_k": join.partition.to_text(),
        },
    )


def _check_prop_union(ctx: TheoremContext) -> Verdict:
    """On classes-over-rectangular-bands semigroups, the least cryptogroup
    congruence is the union of the least group congruences of the band
    components."""
    if ctx.report.kappa_over_rectangular_bands is not True:
        return Verdict("PROP_UNION", True, {"vacuous": True})
    beta = lower_k(_omega(ctx.S))
    union_pairs: set[tuple[int, int]] = set()
    for block in beta.blocks():
        T, embed = ctx.S.subsemigroup(block)
        sigma_alpha = lower_t(_omega(T))
        for a, b in sigma_alpha.partition.pairs():
            union_pairs.add((embed[a], embed[b]))
    kappa_pairs = set(ctx.named.kappa.partition.pairs())
    if union_pairs == kappa_pairs:
        return Verdict("PROP_UNION", True)
    diff = sorted(union_pairs ^ kappa_pairs)
    return Verdict("PROP_UNION", False, {"differing_pairs": [list(p) for p in diff[:5]]})


def _check_lemma_ot(ctx: TheoremContext) -> Verdict:
    """On orthogroups the trace minimum is the closure of the intersection
    with the idempotent-product relation."""
    if not ctx.report.orthogroup:
        return Verdict("LEMMA_OT", True, {"vacuous": True})
    for rho in ctx.lattice:
        via_f = congruence_closure(ctx.S, rho.relation() & ctx.frel)
        if via_f != lower_t(rho):
            return Verdict(
                "LEMMA_OT",
                False,
                {
                    "rho": rho.partition.to_text(),
                    "via_f": via_f.partition.to_text(),
                    "lower_t": lower_t(rho).partition.to_text(),
                },
            )
    return Verdict("LEMMA_OT", True)


def _check_theorem_orthogroup(ctx: TheoremContext) -> Verdict:
    """Thirteen characterisations of orthodoxy agree."""
    named = ctx.named
    nu, tau = named.nu, named.tau
    S = ctx.S
    d = ctx.green.d
    d_rel = d.relation()
    theta = ctx.theta
    frel = ctx.frel
    tau_rel = tau.relation()
    eq = Congruence.equality(S)

    semilattice_of_rg = False
    if is_congruence(S, d):
        Q, _ = S.quotient(Congruence(d, S, _trusted=True))
        if is_semilattice(Q):
            semilattice_of_rg = True
            for block in d.blocks():
                T, _ = S.subsemigroup(block)
                if not is_rectangular_group(T):
                    semilattice_of_rg = False
                    break

    df = d_rel & frel
    dt = d_rel & theta

    def rel_is_congruence(rel: BinaryRelation) -> bool:
        return rel.is_equivalence() and is_congruence(S, rel.to_partition())

    exists_pure_clifford = any(
        ctx.kernel(c) == ctx.idempotents and ctx.classify_quotient(c).clifford
        for c in ctx.lattice
    )
    conditions = {
        "1_orthodox": ctx.report.orthodox,
        "2_semilattice_of_rectangular_groups": semilattice_of_rg,
        "3_df_eq_dtau": df == (d_rel & tau_rel),
        "4_df_congruence": rel_is_congruence(df),
        "5_dtheta_eq_dtau": dt == (d_rel & tau_rel),
        "6_dtheta_congruence": rel_is_congruence(dt),
        "7_nu_below_tau": nu.refines(tau),
        "8_nu_h_trivial": nu.partition.meet(ctx.green.h).num_blocks == S.order,
        "9_nu_k_trivial": lower_k(nu) == eq,
        "10_exists_pure_clifford": exists_pure_clifford,
        "11_nu_in_f": nu.relation().is_subset(frel),
        "12_nu_over_rect_bands": ctx.predicates(nu).over_rectangular_bands,
        "13_nu_in_y": nu.relation().is_subset(ctx.yrel),
    }
    return _agreement_verdict("THEOREM_ORTHOGROUP", conditions)


FIGURE_INCLUSIONS = (
    ("sigma", "omega"),
    ("beta", "eta"),
    ("eta", "omega"),
    ("kappa", "sigma"),
    ("kappa", "beta"),
    ("pi", "sigma"),
    ("pi", "beta"),
    ("nu", "sigma"),
    ("nu", "eta"),
    ("lambda", "nu"),
    ("lambda", "beta"),
    ("pi_t", "pi"),
    ("kappa_k", "kappa"),
    ("lambda_t", "lambda"),
)


def _check_figure1_identities(ctx: TheoremContext) -> Verdict:
    """The labelled join/meet identities and inclusion edges of the
    min-network diagrams."""
    named = ctx.named
    by_name = {"omega": Congruence.universal(ctx.S), **named.as_dict()}
    identities = {
        "kappa_join_pi_eq_sigma_meet_beta": named.kappa.join(named.pi)
        == named.sigma.meet(named.beta),
        "nu_join_pi_eq_sigma_meet_eta": named.nu.join(named.pi)
        == named.sigma.meet(named.eta),
        "kappa_join_lambda_eq_nu_meet_beta": named.kappa.join(named.lambda_)
        == named.nu.meet(named.beta),
    }
    inclusions = {
        f"{a}_in_{b}": by_name[a].refines(by_name[b]) for a, b in FIGURE_INCLUSIONS
    }
    failed = {k: v for k, v in {**identities, **inclusions}.items() if not v}
    if not failed:
        return Verdict("FIGURE1_IDENTITIES", True)
    return Verdict("FIGURE1_IDENTITIES", False, {"failed": sorted(failed)})


def _check_green_restriction(ctx: TheoremContext) -> Verdict:
    """Green's relations of the standard generated subsemigroups equal the
    restrictions of the ambient ones, and those subsemigroups are completely
    regular."""
    S = ctx.S
    table = S.table
    n = S.order
    subsets: set[tuple[int, ...]] = set()
    for e in sorted(ctx.idempotents):
        es = frozenset(table[e][x] for x in range(n)) | {e}
        se = frozenset(table[x][e] for x in range(n)) | {e}
        ese = frozenset(table[table[e][x]][e] for x in range(n)) | {e}
        subsets.add(tuple(sorted(es)))
        subsets.add(tuple(sorted(se)))
        subsets.add(tuple(sorted(ese)))
    for rho in ctx.lattice:
        for e in sorted(ctx.idempotents):
            subsets.add(rho.partition.block_of(e))
        kernel = tuple(sorted(ctx.kernel(rho)))
        closed = all(
            table[a][b] in ctx.kernel(rho) for a in kernel for b in kernel
        )
        if closed:
            subsets.add(kernel)
    ambient = ctx.green
    for subset in sorted(subsets):
        T, embed = S.subsemigroup(subset)
        if not T.is_completely_regular():
            return Verdict(
                "GREEN_RESTRICTION", False, {"subset": list(subset), "reason": "not CR"}
            )
        local = T.green()
        restricted = {
            "l": ambient.l.restrict(embed),
            "r": ambient.r.restrict(embed),
            "h": ambient.h.restrict(embed),
            "d": ambient.d.restrict(embed),
        }
        for name, part in (("l", local.l), ("r", local.r), ("h", local.h), ("d", local.d)):
            if part != restricted[name]:
                return Verdict(
                    "GREEN_RESTRICTION",
                    False,
                    {"subset": list(subset), "relation": name},
                )
    return Verdict("GREEN_RESTRICTION", True)


def _check_named_oracles(ctx: TheoremContext) -> Verdict:
    """Every named congruence equals its defining lattice-scan oracle."""
    named = ctx.named
    h = ctx.green.h
    idem = ctx.idempotents

    def quotient_flag(attr: str) -> Callable[[Congruence], bool]:
        return lambda c: getattr(ctx.classify_quotient(c), attr) is True

    checks = {
        "sigma": named.sigma == ctx.least_where(quotient_flag("group")),
        "beta": named.beta == ctx.least_where(quotient_flag("band")),
        "eta": named.eta == ctx.least_where(quotient_flag("semilattice"))
        and named.eta.partition == ctx.green.d,
        "nu": named.nu == ctx.least_where(quotient_flag("clifford")),
        "kappa": named.kappa
        == ctx.least_where(
            lambda c: ctx.classify_quotient(c).completely_regular
            and ctx.classify_quotient(c).cryptic
        ),
        "pi": named.pi == ctx.least_where(quotient_flag("e_unitary")),
        "lambda": named.lambda_ == ctx.least_where(quotient_flag("orthodox")),
        "mu": named.mu == ctx.greatest_where(lambda c: c.partition.refines(h)),
        "tau": named.tau == ctx.greatest_where(lambda c: ctx.kernel(c) == idem),
        "pi_t": named.pi_t == ctx.least_where(quotient_flag("ker_sigma_cryptic")),
        "lambda_t": named.lambda_t == ctx.least_where(quotient_flag("ker_nu_cryptic")),
        "kappa_k": named.kappa_k
        == ctx.least_where(quotient_flag("kappa_over_rectangular_bands")),
    }
    failed = sorted(name for name, ok in checks.items() if not ok)
    if not failed:
        return Verdict("NAMED_ORACLES", True)
    return Verdict("NAMED_ORACLES", False, {"failed": failed})


_VERIFIERS: dict[str, Callable[[TheoremContext], Verdict]] = {
    "LEMMA_THETA": _check_lemma_theta,
    "LEMMA_CON": _check_lemma_con,
    "LEMMA_EXTREME": _check_lemma_extreme,
    "LEMMA_KCG": _check_lemma_kcg,
    "COROLLARY_MU": _check_corollary_mu,
    "THEOREM_SIGMACG": _check_theorem_sigmacg,
    "PROP_RHO": _check_prop_rho,
    "PROP_SIGMACGC": _check_prop_sigmacgc,
    "COROLLARY_PIT": _check_corollary_pit,
    "THEOREM_NUCG": _check_theorem_nucg,
    "PROP_NUCGC": _check_prop_nucgc,
    "COROLLARY_LAMBDAT": _check_corollary_lambdat,
    "PROP_BRECG": _check_prop_brecg,
    "LEMMA_FTHETA": _check_lemma_ftheta,
    "THEOREM_KORECB": _check_theorem_korecb,
    "PROP_KORECBC": _check_prop_korecbc,
    "COROLLARY_KAPPAK": _check_corollary_kappak,
    "PROP_MEET": _check_prop_meet,
    "PROP_UNION": _check_prop_union,
    "LEMMA_OT": _check_lemma_ot,
    "THEOREM_ORTHOGROUP": _check_theorem_orthogroup,
    "FIGURE1_IDENTITIES": _check_figure1_identities,
    "GREEN_RESTRICTION": _check_green_restriction,
    "NAMED_ORACLES": _check_named_oracles,
    "LEMMA_KCG_NONORTHODOX": _check_lemma_kcg_nonorthodox,
}

RESULT_IDS = tuple(_VERIFIERS)

# Reported but never gated: the agreement of the non-orthodox variant is an
# open observation, not an asserted statement.
INFORMATIONAL_IDS = frozenset({"LEMMA_KCG_NONORTHODOX"})


def verify(
    S: FiniteSemigroup,
    result_id: str,
    bound: int = 8,
    named: NamedCongruenceSet | None = None,
    context: TheoremContext | None = None,
) -> Verdict:
    """Run one verifier on a completely regular semigroup."""
    if result_id not in _VERIFIERS:
        raise ValueError(f"unknown result id {result_id!r}")
    ctx = context if context is not None else TheoremContext(S, bound, named)
    return _VERIFIERS[result_id](ctx)


def verify_all(
    S: FiniteSemigroup,
    bound: int = 8,
    named: NamedCongruenceSet | None = None,
) -> list[Verdict]:
    """Run the whole battery, sharing one cached context."""
    ctx = TheoremContext(S, bound, named)
    return [_VERIFIERS[rid](ctx) for rid in RESULT_IDS]


def battery_passes(verdicts: list[Verdict]) -> bool:
    """True when every gated verdict holds (vacuous counts as holding)."""
    return all(v.holds for v in verdicts if v.result_id not in INFORMATIONAL_IDS)
