import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crsemigroups.errors import HostMismatch, NotACongruence, OrderBoundExceeded
from crsemigroups.instances import builtin_instances, cyclic_group
from crsemigroups.relations import (
    BinaryRelation,
    Congruence,
    Partition,
    all_congruences,
    congruence_closure,
    congruence_violation,
    f_relation,
    greatest_contained_congruence,
    is_congruence,
    saturation_congruence,
    theta_relation,
    y_relation,
)


def brute_least_containing(lattice, pairs):
    """Oracle: meet of all lattice members containing the pairs."""
    cands = [
        c for c in lattice if all(c.same(a, b) for a, b in pairs)
    ]
    out = cands[0]
    for c in cands[1:]:
        out = out.meet(c)
    return out


class TestPartition:
    def test_canonical_ids(self):
        p = Partition([5, 2, 5, 9])
        assert p.block_id == (0, 1, 0, 2)

    def test_blocks_sorted_by_least_member(self):
        p = Partition.from_blocks(4, [[1, 3], [0, 2]])
        assert p.blocks() == ((0, 2), (1, 3))
        assert p.to_text() == "[[0,2],[1,3]]"

    def test_text_round_trip(self):
        p = Partition.from_text("[[0,2],[1,3]]")
        assert p == Partition([0, 1, 0, 1])

    def test_meet_join_on_chains(self):
        p = Partition([0, 0, 1, 1])
        q = Partition([0, 1, 1, 2])
        assert p.meet(q) == Partition.equality(4)
        assert p.join(q) == Partition.universal(4)
        r = Partition([0, 0, 1, 2])
        assert p.meet(r) == Partition([0, 0, 1, 2])

    @given(ids=st.lists(st.integers(0, 5), min_size=1, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_canonical_invariants(self, ids):
        p = Partition(ids)
        seen_max = -1
        for i, b in enumerate(p.block_id):
            assert b <= i
            assert b <= seen_max + 1
            seen_max = max(seen_max, b)

    @given(
        a=st.lists(st.integers(0, 3), min_size=5, max_size=5),
        b=st.lists(st.integers(0, 3), min_size=5, max_size=5),
    )
    @settings(max_examples=100, deadline=None)
    def test_lattice_laws(self, a, b):
        p, q = Partition(a), Partition(b)
        assert p.meet(q) == q.meet(p)
        assert p.join(q) == q.join(p)
        assert p.meet(p.join(q)) == p
        assert p.join(p.meet(q)) == p
        assert p.meet(q).refines(p)
        assert p.refines(p.join(q))

    def test_restrict(self):
        p = Partition([0, 1, 0, 1, 2])
        assert p.restrict([0, 2, 4]) == Partition([0, 0, 1])


class TestBinaryRelation:
    def test_compose_with_equality(self):
        r = BinaryRelation.from_pairs(3, [(0, 1), (1, 2)])
        assert BinaryRelation.equality(3).compose(r) == r
        assert r.compose(BinaryRelation.equality(3)) == r

    def test_compose(self):
        r = BinaryRelation.from_pairs(3, [(0, 1)])
        s = BinaryRelation.from_pairs(3, [(1, 2)])
        assert list(r.compose(s).pairs()) == [(0, 2)]

    def test_partition_relation_round_trip(self):
        p = Partition([0, 1, 0, 1])
        assert p.relation().to_partition() == p

    def test_not_an_equivalence(self):
        r = BinaryRelation.from_pairs(2, [(0, 1)])
        assert not r.is_equivalence()
        with pytest.raises(ValueError):
            r.to_partition()


class TestThetaFY:
    def test_theta_left_zero_universal(self, l2):
        assert theta_relation(l2) == BinaryRelation.universal(2)

    def test_theta_group_equality(self, z3):
        assert theta_relation(z3) == BinaryRelation.equality(3)

    def test_theta_relates_idempotents(self, cr_sample):
        for S in cr_sample:
            theta = theta_relation(S)
            for e in S.idempotents():
                for f in S.idempotents():
                    assert theta.has(e, f)

    def test_f_band_universal(self, r22):
        assert f_relation(r22) == BinaryRelation.universal(4)

    def test_f_group_equality(self, z3):
        assert f_relation(z3) == BinaryRelation.equality(3)

    def test_f_cs8_strictly_between(self, cs8):
        f = f_relation(cs8)
        assert f != BinaryRelation.equality(8)
        assert f != BinaryRelation.universal(8)

    def test_y_group_equality(self, z3):
        assert y_relation(z3) == BinaryRelation.equality(3)

    def test_y_rectangular_band_universal(self, r22):
        assert y_relation(r22) == BinaryRelation.universal(4)

    def test_y_chain_equality(self, y2):
        assert y_relation(y2) == BinaryRelation.equality(2)

    def test_h_meet_theta_is_equality(self, cr_sample):
        for S in cr_sample:
            meet = S.green().h.relation() & theta_relation(S)
            assert meet == BinaryRelation.equality(S.order)


class TestIsCongruence:
    def test_l_on_rectangular_band(self, r22):
        assert is_congruence(r22, r22.green().l)

    def test_equality_always(self, y2):
        assert is_congruence(y2, Partition.equality(2))

    def test_subgroup_cosets(self, z4):
        assert is_congruence(z4, Partition([0, 1, 0, 1]))

    def test_violation_witness(self, nc4):
        h = nc4.green().h
        witness = congruence_violation(nc4, h)
        assert witness is not None
        a, b, c, side = witness
        if side == "left":
            assert not h.same(nc4.mul(c, a), nc4.mul(c, b))
        else:
            assert not h.same(nc4.mul(a, c), nc4.mul(b, c))

    def test_constructor_rejects(self, nc4):
        with pytest.raises(NotACongruence):
            Congruence(nc4.green().h, nc4)


class TestClosure:
    def test_empty_gives_equality(self, z4):
        assert congruence_closure(z4, []) == Congruence.equality(z4)

    def test_z4_pair(self, z4):
        c = congruence_closure(z4, [(0, 2)])
        assert c.partition == Partition([0, 1, 0, 1])
        oracle = brute_least_containing(all_congruences(z4), [(0, 2)])
        assert c == oracle

    def test_universal_input(self, z4):
        rel = BinaryRelation.universal(4)
        assert congruence_closure(z4, rel) == Congruence.universal(z4)

    @given(data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_closure_operator_laws(self, data):
        instances = builtin_instances()
        name = data.draw(
            st.sampled_from(
                ["z4", "rect_band_2x2", "non_cryptic_4", "chain_3", "clifford_chain2_z2"]
            )
        )
        S = instances[name]
        n = S.order
        pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        pairs1 = data.draw(st.lists(pair, max_size=4))
        pairs2 = data.draw(st.lists(pair, max_size=4))
        c1 = congruence_closure(S, pairs1)
        # extensive
        assert all(c1.same(a, b) for a, b in pairs1)
        # idempotent
        assert congruence_closure(S, c1.partition.pairs()) == c1
        # monotone
        c12 = congruence_closure(S, pairs1 + pairs2)
        assert c1.refines(c12)

    def test_closure_matches_lattice_oracle(self, cr_sample):
        for S in cr_sample:
            if S.order > 4:
                continue
            lattice = all_congruences(S)
            for a in range(S.order):
                for b in range(a + 1, S.order):
                    assert congruence_closure(S, [(a, b)]) == brute_least_containing(
                        lattice, [(a, b)]
                    )


class TestGreatestContained:
    def test_universal(self, z4):
        c = greatest_contained_congruence(z4, Partition.universal(4))
        assert c.is_universal()

    def test_equality(self, z4):
        c = greatest_contained_congruence(z4, Partition.equality(4))
        assert c.is_equality()

    def test_h_of_cs8_is_max_separating(self, cs8):
        c = greatest_contained_congruence(cs8, cs8.green().h)
        lattice = all_congruences(cs8)
        cands = [d for d in lattice if d.partition.refines(cs8.green().h)]
        best = cands[0]
        for d in cands[1:]:
            best = best.join(d)
        assert c == best
        assert c.partition.refines(cs8.green().h)

    def test_oracle_on_sample(self, cr_sample):
        for S in cr_sample:
            if S.order > 4:
                continue
            lattice = all_congruences(S)
            for e in (S.green().h, S.green().d, Partition.universal(S.order)):
                got = greatest_contained_congruence(S, e)
                cands = [d for d in lattice if d.partition.refines(e)]
                best = cands[0]
                for d in cands[1:]:
                    best = best.join(d)
                assert got == best


class TestSaturation:
    def test_full_subset(self, z4):
        assert saturation_congruence(z4, range(4)).is_universal()

    def test_empty_subset(self, z4):
        assert saturation_congruence(z4, []).is_universal()

    def test_idempotents_of_z2(self, z2):
        c = saturation_congruence(z2, z2.idempotents())
        assert c.is_equality()
        # greatest idempotent-pure congruence by lattice scan
        lattice = all_congruences(z2)
        idem = z2.idempotents()
        cands = []
        for d in lattice:
            classes_of_idem = {d.partition.block_id[e] for e in idem}
            kernel = {
                a for a in range(2) if d.partition.block_id[a] in classes_of_idem
            }
            if kernel == idem:
                cands.append(d)
        best = cands[0]
        for d in cands[1:]:
            best = best.join(d)
        assert c == best

    def test_saturates(self, cr_sample):
        for S in cr_sample:
            subset = sorted(S.idempotents())
            c = saturation_congruence(S, subset)
            for block in c.blocks():
                inside = [x in S.idempotents() for x in block]
                assert all(inside) or not any(inside)


class TestJoinMeet:
    def test_lattice_identities(self, z4):
        eps = Congruence.equality(z4)
        omega = Congruence.universal(z4)
        c = congruence_closure(z4, [(0, 2)])
        assert eps.join(c) == c
        assert omega.meet(c) == c
        assert c.join(eps) == c

    def test_join_with_equality(self, z4):
        c = Congruence(Partition([0, 1, 0, 1]), z4)
        assert c.join(Congruence.equality(z4)) == c

    def test_host_mismatch(self, z2, z4):
        with pytest.raises(HostMismatch):
            Congruence.equality(z2).join(Congruence.equality(z4))

    def test_join_equals_closure_of_union(self, cr_sample):
        for S in cr_sample:
            if S.order > 6:
                continue
            lattice = all_congruences(S)
            pairs = list(itertools.combinations(lattice, 2))[:20]
            for c, d in pairs:
                union_pairs = list(c.partition.pairs()) + list(d.partition.pairs())
                assert c.join(d) == congruence_closure(S, union_pairs)

    def test_absorption_over_lattice(self, cr_sample):
        for S in cr_sample:
            if S.order > 4:
                continue
            lattice = list(all_congruences(S))
            for c in lattice:
                for d in lattice:
                    assert c.meet(c.join(d)) == c
                    assert c.join(c.meet(d)) == c
                    assert c.meet(d) == d.meet(c)
                    assert c.join(d) == d.join(c)


class TestAllCongruences:
    def test_trivial(self, trivial):
        lattice = all_congruences(trivial)
        assert len(lattice) == 1

    def test_simple_group(self, z2):
        lattice = all_congruences(z2)
        assert len(lattice) == 2

    def test_chain(self, y2):
        lattice = all_congruences(y2)
        assert len(lattice) == 2
        assert congruence_closure(y2, [(0, 1)]).is_universal()

    def test_every_member_is_congruence(self, cr_sample):
        for S in cr_sample:
            for c in all_congruences(S):
                assert congruence_violation(S, c.partition) is None

    def test_bound(self):
        S = cyclic_group(3).direct_product(cyclic_group(3))
        with pytest.raises(OrderBoundExceeded):
            all_congruences(S, bound=8)

    def test_hasse_edges_are_covers(self, z4):
        lattice = all_congruences(z4)
        # Z4 congruence chain: eps < cosets < omega
        assert len(lattice) == 3
        assert lattice.hasse_edges() == ((0, 2), (2, 1))
