import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framestarters.groups import (
    abelian_basis,
    classify_abelian,
    direct_product,
    make_group,
    parse_element,
    parse_group,
    quotient,
    subgroup_as_group,
    subgroup_closure,
    sylow_cyclic_nontrivial,
)


def cyclic_subgroup(group, k):
    return subgroup_closure(group, [(k,)])


class TestMakeGroup:
    def test_single_factor(self):
        g = make_group([10])
        assert g.factors == (10,)
        assert g.order == 10

    def test_z4_z4(self):
        g = make_group([4, 4])
        assert g.factors == (4, 4)
        assert g.order == 16

    def test_existing_chain_kept(self):
        assert make_group([2, 4]).factors == (2, 4)

    def test_coprime_factors_merge(self):
        assert make_group([2, 5]).factors == (10,)
        assert make_group([3, 4, 5]).factors == (60,)

    def test_non_chain_normalized(self):
        # Z4 x Z2 and Z2 x Z4 are the same group
        assert make_group([4, 2]).factors == (2, 4)
        assert make_group([6, 4]).factors == (2, 12)

    def test_trivial(self):
        g = make_group([])
        assert g.factors == ()
        assert g.order == 1
        assert g.zero() == ()

    def test_bad_factor(self):
        with pytest.raises(ValueError):
            make_group([1])
        with pytest.raises(ValueError):
            make_group([0, 3])


class TestArithmetic:
    def test_add_z10(self):
        g = make_group([10])
        assert g.add((3,), (4,)) == (7,)

    def test_sub_z10(self):
        # independent oracle: (1 - 8) mod 10
        g = make_group([10])
        assert g.sub((1,), (8,)) == ((1 - 8) % 10,)
        assert g.sub((1,), (8,)) == (3,)

    def test_neg_z4z4(self):
        g = make_group([4, 4])
        assert g.neg((1, 1)) == (3, 3)

    def test_dimension_mismatch(self):
        g = make_group([10])
        with pytest.raises(ValueError):
            g.add((1,), (1, 2))

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_group_axioms(self, data):
        factors = data.draw(
            st.lists(st.integers(min_value=2, max_value=12), min_size=0, max_size=3)
        )
        g = make_group(factors)
        elems = g.elements()
        a = data.draw(st.sampled_from(elems))
        b = data.draw(st.sampled_from(elems))
        assert g.add(a, b) == g.add(b, a)
        assert g.add(a, g.neg(a)) == g.zero()
        assert g.order % g.element_order(a) == 0


class TestElementOrder:
    def test_z10(self):
        g = make_group([10])
        assert g.element_order((5,)) == 2
        assert g.element_order((2,)) == 5

    def test_z4z4_two_torsion(self):
        g = make_group([4, 4])
        for a in [(0, 2), (2, 0), (2, 2)]:
            assert g.element_order(a) == 2
        assert g.element_order((0, 0)) == 1


class TestSubgroups:
    def test_z10_gen5(self):
        h = cyclic_subgroup(make_group([10]), 5)
        assert h.elements == ((0,), (5,))
        assert h.order == 2

    def test_z15_gen5(self):
        h = cyclic_subgroup(make_group([15]), 5)
        assert h.elements == ((0,), (5,), (10,))
        assert h.order == 3

    def test_trivial_closure(self):
        g = make_group([4, 4])
        h = subgroup_closure(g, [])
        assert h.elements == ((0, 0),)

    def test_closure_idempotent(self):
        g = make_group([12])
        h = subgroup_closure(g, [(4,), (6,)])
        again = subgroup_closure(g, h.elements)
        assert again.elements == h.elements

    def test_order_divides(self):
        g = make_group([2, 4])
        for gens in itertools.combinations(g.elements(), 2):
            h = subgroup_closure(g, gens)
            assert g.order % h.order == 0


class TestQuotient:
    def test_z15_mod_3(self):
        g = make_group([15])
        q = quotient(g, cyclic_subgroup(g, 5))
        assert q.coset_count == 5
        assert q.structure == (5,)

    def test_z4z4_mod_klein(self):
        g = make_group([4, 4])
        h = subgroup_closure(g, [(0, 2), (2, 0)])
        q = quotient(g, h)
        assert q.coset_count == 4
        assert q.structure == (2, 2)

    def test_z8_mod_2(self):
        # oracle: classify by element orders of the coset group
        g = make_group([8])
        q = quotient(g, cyclic_subgroup(g, 4))
        assert q.coset_count == 4
        orders = sorted(
            q.group.element_order(q.project(a)) for a in g.elements()
        )
        assert max(orders) == 4
        assert q.structure == (4,)

    def test_wrong_parent(self):
        g = make_group([8])
        h = cyclic_subgroup(make_group([10]), 5)
        with pytest.raises(ValueError):
            quotient(g, h)

    def test_projection_is_homomorphism(self):
        for factors, gens in [([15], [(5,)]), ([4, 4], [(0, 2), (2, 0)]), ([12], [(4,)])]:
            g = make_group(factors)
            q = quotient(g, subgroup_closure(g, gens))
            for a in g.elements():
                for b in g.elements():
                    assert q.project(g.add(a, b)) == q.group.add(
                        q.project(a), q.project(b)
                    )

    def test_coset_index_well_defined(self):
        g = make_group([10])
        q = quotient(g, cyclic_subgroup(g, 5))
        for a in g.elements():
            for b in g.elements():
                if q.coset_index(a) == q.coset_index(b):
                    assert g.sub(a, b) in set(q.kernel.elements)

    def test_trivial_kernel_identity_chart(self):
        g = make_group([2, 4])
        q = quotient(g, subgroup_closure(g, []))
        assert q.group == g
        for a in g.elements():
            assert q.project(a) == a
            assert q.lift(a) == a

    def test_lift_is_least_representative(self):
        g = make_group([15])
        q = quotient(g, cyclic_subgroup(g, 5))
        for a in g.elements():
            rep = q.lift(q.project(a))
            coset = sorted(g.add(a, h) for h in q.kernel.elements)
            assert rep == coset[0]


def all_factor_lists(max_product):
    """Every multiset of integers >= 2 with product <= max_product."""
    out = [[]]

    def rec(prefix, minimum, budget):
        f = minimum
        while f <= budget:
            cur = prefix + [f]
            out.append(cur)
            rec(cur, f, budget // f)
            f += 1

    rec([], 2, max_product)
    return out


class TestClassify:
    def test_klein_table(self):
        elems = list(itertools.product([0, 1], repeat=2))
        add = lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)
        assert classify_abelian(elems, add) == (2, 2)

    def test_z9(self):
        add = lambda a, b: (a + b) % 9
        assert classify_abelian(list(range(9)), add) == (9,)

    def test_roundtrip_up_to_64(self):
        for factors in all_factor_lists(64):
            g = make_group(factors)
            assert classify_abelian(g.elements(), g.add) == g.factors

    def test_validate_rejects_non_group(self):
        with pytest.raises(ValueError):
            classify_abelian([0, 1, 2], lambda a, b: min(a + b, 2), validate=True)

    def test_basis_spans(self):
        g = make_group([2, 2, 4])
        factors, basis = abelian_basis(g.elements(), g.add)
        assert factors == (2, 2, 4)
        spanned = set()
        for coords in itertools.product(*(range(f) for f in factors)):
            total = g.zero()
            for c, b in zip(coords, basis):
                total = g.add(total, g.scale(c, b))
            spanned.add(total)
        assert len(spanned) == g.order


class TestDirectProduct:
    def test_z10_times_z7(self):
        p = direct_product(make_group([10]), make_group([7]))
        assert p.group.factors == (70,)

    def test_identity_product(self):
        p = direct_product(make_group([10]), make_group([]))
        assert p.group.factors == (10,)
        for a in p.left.elements():
            assert p.embed_left(a) == a

    def test_z2_times_z4(self):
        p = direct_product(make_group([2]), make_group([4]))
        assert p.group.factors == (2, 4)

    def test_embeddings_are_homomorphisms(self):
        p = direct_product(make_group([6]), make_group([4]))
        g1, g2 = p.left, p.right
        for a in g1.elements():
            for b in g1.elements():
                assert p.embed_left(g1.add(a, b)) == p.group.add(
                    p.embed_left(a), p.embed_left(b)
                )
        for a in g2.elements():
            for b in g2.elements():
                assert p.embed_right(g2.add(a, b)) == p.group.add(
                    p.embed_right(a), p.embed_right(b)
                )
        # the two images intersect only at zero and jointly span
        left = {p.embed_left(a) for a in g1.elements()}
        right = {p.embed_right(b) for b in g2.elements()}
        assert left & right == {p.group.zero()}
        assert len({p.group.add(a, b) for a in left for b in right}) == p.group.order

    def test_pair_consistency(self):
        p = direct_product(make_group([4, 4]), make_group([3]))
        for a in p.left.elements()[:6]:
            for b in p.right.elements():
                assert p.pair(a, b) == p.group.add(p.embed_left(a), p.embed_right(b))


class TestSylow:
    def test_z10_p2(self):
        assert sylow_cyclic_nontrivial(make_group([10]), 2) is True

    def test_z4z4_p2_noncyclic(self):
        assert sylow_cyclic_nontrivial(make_group([4, 4]), 2) is False

    def test_z7_p2_trivial(self):
        assert sylow_cyclic_nontrivial(make_group([7]), 2) is False

    def test_requires_prime(self):
        with pytest.raises(ValueError):
            sylow_cyclic_nontrivial(make_group([10]), 4)


class TestSubgroupAsGroup:
    def test_klein_inside_z4z4(self):
        g = make_group([4, 4])
        h = subgroup_closure(g, [(0, 2), (2, 0)])
        emb = subgroup_as_group(h)
        assert emb.group.factors == (2, 2)
        for a in emb.group.elements():
            for b in emb.group.elements():
                assert emb.to_parent(emb.group.add(a, b)) == g.add(
                    emb.to_parent(a), emb.to_parent(b)
                )
        assert {emb.to_parent(a) for a in emb.group.elements()} == set(h.elements)

    def test_roundtrip(self):
        g = make_group([12])
        h = subgroup_closure(g, [(2,)])
        emb = subgroup_as_group(h)
        for a in emb.group.elements():
            assert emb.from_parent(emb.to_parent(a)) == a


class TestNotation:
    def test_group_roundtrip(self):
        for text, factors in [("Z(10)", (10,)), ("Z(4,4)", (4, 4)), ("Z()", ())]:
            g = parse_group(text)
            assert g.factors == factors
            assert parse_group(g.notation()) == g

    def test_element_forms(self):
        g = make_group([4, 4])
        assert parse_element(g, "(1,3)") == (1, 3)
        z = make_group([10])
        assert parse_element(z, "7") == (7,)
        assert parse_element(z, "(7)") == (7,)

    def test_bad_notation(self):
        with pytest.raises(ValueError):
            parse_group("GF(4)")
        with pytest.raises(ValueError):
            parse_element(make_group([10]), "(1,2)")

    def test_format_element(self):
        assert make_group([10]).format_element((3,)) == "3"
        assert make_group([4, 4]).format_element((1, 2)) == "(1,2)"
