import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crsemigroups import from_table
from crsemigroups.core import FiniteSemigroup
from crsemigroups.errors import (
    HostMismatch,
    IndexOutOfRange,
    NotAssociative,
    NotClosed,
    NotCompletelyRegular,
    NotCompletelyRegularElement,
)
from crsemigroups.relations import Congruence, Partition


def brute_associativity(table):
    """Independent triple-loop oracle."""
    n = len(table)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return (a, b, c)
    return None


class TestFromTable:
    def test_trivial(self):
        S = from_table([[0]])
        assert S.order == 1

    def test_left_zero_is_valid(self):
        S = from_table([[0, 0], [1, 1]])
        assert S.order == 2
        assert brute_associativity(S.table) is None

    def test_rejects_non_associative_with_witness(self):
        table = [[1, 0], [0, 0]]
        expected = brute_associativity(table)
        assert expected is not None
        with pytest.raises(NotAssociative) as exc:
            from_table(table)
        a, b, c = exc.value.witness
        assert table[table[a][b]][c] != table[a][table[b][c]]

    def test_rejects_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            from_table([[0, 2], [1, 1]])

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            from_table([[0, 0], [1]])

    def test_rejects_duplicate_labels(self):
        with pytest.raises(ValueError):
            from_table([[0, 0], [1, 1]], labels=["a", "a"])

    @given(
        st.integers(2, 3).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
    )
    @settings(max_examples=120, deadline=None)
    def test_matches_brute_oracle(self, table):
        expected = brute_associativity(table)
        if expected is None:
            assert from_table(table).order == len(table)
        else:
            with pytest.raises(NotAssociative):
                from_table(table)


class TestCompleteRegularity:
    def test_left_zero(self, l2):
        assert l2.is_completely_regular()

    def test_group(self, z3):
        assert z3.is_completely_regular()

    def test_null_semigroup_is_not(self, null2):
        # 1*x*1 = 0 != 1 for every x
        assert not null2.is_completely_regular()
        with pytest.raises(NotCompletelyRegular) as exc:
            null2.require_completely_regular()
        assert exc.value.element == 1

    def test_witness_is_commuting_inverse(self, cr_sample):
        for S in cr_sample:
            inv = S.completely_regular_witness()
            for a in range(S.order):
                x = inv[a]
                ax = S.mul(a, x)
                assert ax == S.mul(x, a)
                assert S.mul(ax, a) == a
                assert S.mul(S.mul(x, a), x) == x


class TestElementView:
    def test_group_generator(self, z3):
        view = z3.element_view(1)
        assert view.inverse == 2
        assert view.idempotent_power == 0
        assert not view.is_idempotent

    def test_idempotent(self, l2):
        view = l2.element_view(0)
        assert view.inverse == 0 and view.idempotent_power == 0
        assert view.is_idempotent

    def test_rectangular_band_self_inverse(self, r22):
        for a in range(4):
            view = r22.element_view(a)
            assert view.inverse == a and view.idempotent_power == a

    def test_error_outside_subgroups(self, null2):
        with pytest.raises(NotCompletelyRegularElement):
            null2.element_view(1)

    def test_idempotent_power_laws(self, cr_sample):
        for S in cr_sample:
            zero = S.idempotent_power_map()
            for a in range(S.order):
                a0 = zero[a]
                assert S.mul(a0, a0) == a0
                assert S.mul(a, a0) == a == S.mul(a0, a)


class TestIdempotentsAndInverses:
    def test_group_single_idempotent(self, z2):
        assert z2.idempotents() == {0}

    def test_rectangular_band_all(self, r22):
        assert r22.idempotents() == {0, 1, 2, 3}

    def test_cs8_has_four(self, cs8):
        direct = {e for e in range(cs8.order) if cs8.mul(e, e) == e}
        assert cs8.idempotents() == direct
        assert len(direct) == 4

    def test_group_inverse(self, z3):
        assert z3.inverses_set(1) == {2}

    def test_rectangular_band_everything(self, r22):
        for a in range(4):
            assert r22.inverses_set(a) == set(range(4))

    def test_trivial(self, trivial):
        assert trivial.inverses_set(0) == {0}


class TestNaturalOrder:
    def test_chain(self, y2):
        le = y2.natural_order()
        assert le.has(0, 1) and le.has(0, 0) and le.has(1, 1)
        assert not le.has(1, 0)

    def test_group_order_is_equality(self, z3):
        assert z3.natural_order() == z3.natural_order().equality(3)

    def test_rectangular_band_order_is_equality(self, r22):
        from crsemigroups.relations import BinaryRelation

        assert r22.natural_order() == BinaryRelation.equality(4)

    def test_restriction_to_idempotents(self, cr_sample):
        # on idempotents: e <= f iff e == ef == fe
        for S in cr_sample:
            le = S.natural_order()
            for e in S.idempotents():
                for f in S.idempotents():
                    expected = e == S.mul(e, f) == S.mul(f, e)
                    assert le.has(e, f) == expected


class TestGreen:
    def test_group_universal(self, z2):
        g = z2.green()
        assert g.h == Partition.universal(2)
        assert g.d == Partition.universal(2)

    def test_left_zero(self, l2):
        g = l2.green()
        assert g.l == Partition.universal(2)
        assert g.r == Partition.equality(2)
        assert g.h == Partition.equality(2)
        assert g.d == Partition.universal(2)

    def test_chain_all_trivial(self, y2):
        g = y2.green()
        for part in (g.l, g.r, g.h, g.d):
            assert part == Partition.equality(2)

    def test_h_is_meet(self, cr_sample):
        for S in cr_sample:
            g = S.green()
            assert g.h == g.l.meet(g.r)
            assert g.d == g.l.join(g.r)
            assert g.h.refines(g.l) and g.h.refines(g.r)
            assert g.l.refines(g.d) and g.r.refines(g.d)


class TestSubsemigroup:
    def test_identity_of_group(self, z2):
        T, embed = z2.subsemigroup([0])
        assert T.order == 1 and embed == (0,)

    def test_l_class_of_rectangular_band(self, r22):
        # an L-class {(0,j),(1,j)} multiplies to its left factor
        l_class = r22.green().l.block_of(0)
        assert len(l_class) == 2
        T, _ = r22.subsemigroup(l_class)
        assert T.table == ((0, 0), (1, 1))

    def test_top_of_chain(self, y2):
        T, embed = y2.subsemigroup([1])
        assert T.order == 1 and embed == (1,)

    def test_not_closed(self, z4):
        with pytest.raises(NotClosed) as exc:
            z4.subsemigroup([0, 1])
        a, b = exc.value.witness
        assert z4.mul(a, b) not in {0, 1}

    def test_generated_subsemigroups_completely_regular(self, cr_sample):
        # eS, Se and eSe are completely regular for every idempotent e
        for S in cr_sample:
            for e in S.idempotents():
                for subset in (
                    {S.mul(e, x) for x in range(S.order)},
                    {S.mul(x, e) for x in range(S.order)},
                    {S.mul(S.mul(e, x), e) for x in range(S.order)},
                ):
                    T, _ = S.subsemigroup(subset)
                    assert T.is_completely_regular()


class TestQuotient:
    def test_by_equality_is_isomorphic(self, z4):
        Q, _ = z4.quotient(Congruence.equality(z4))
        assert Q.is_isomorphic(z4)

    def test_by_universal_is_trivial(self, cs8):
        Q, _ = cs8.quotient(Congruence.universal(cs8))
        assert Q.order == 1

    def test_rectangular_band_by_l(self, r22):
        c = Congruence(r22.green().l, r22)
        Q, _ = r22.quotient(c)
        # columns collapse; the quotient multiplies to its right factor
        assert Q.table == ((0, 1), (0, 1))

    def test_host_mismatch(self, z2, z3):
        with pytest.raises(HostMismatch):
            z3.quotient(Congruence.equality(z2))


class TestDirectProduct:
    def test_rectangular_band_is_product(self, l2, r2, r22):
        assert l2.direct_product(r2) == r22

    def test_rg8_idempotents(self, rg8):
        direct = {e for e in range(8) if rg8.mul(e, e) == e}
        assert direct == rg8.idempotents()
        assert len(direct) == 4

    def test_trivial_identity(self, trivial, cs8):
        assert trivial.direct_product(cs8).is_isomorphic(cs8)


class TestCanonicalForm:
    @given(perm=st.permutations(list(range(4))))
    @settings(max_examples=24, deadline=None)
    def test_invariant_under_relabeling(self, perm):
        from crsemigroups.instances import non_cryptic_order4

        S = non_cryptic_order4()
        n = S.order
        table = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                table[perm[a]][perm[b]] = perm[S.table[a][b]]
        relabeled = FiniteSemigroup(table)
        assert relabeled.canonical_table() == S.canonical_table()

    def test_canonical_is_least(self, z3):
        flat = tuple(v for row in z3.table for v in row)
        assert z3.canonical_table() <= flat


class TestGreenRestriction:
    def test_regular_subsemigroup_restriction(self, cs8):
        # the maximal subgroup at an idempotent e is eSe here
        e = sorted(cs8.idempotents())[0]
        subset = {cs8.mul(cs8.mul(e, x), e) for x in range(cs8.order)}
        T, embed = cs8.subsemigroup(subset)
        g_small = T.green()
        g_big = cs8.green()
        assert g_small.l == g_big.l.restrict(embed)
        assert g_small.r == g_big.r.restrict(embed)
        assert g_small.h == g_big.h.restrict(embed)
        assert g_small.d == g_big.d.restrict(embed)
