from __future__ import annotations

import itertools
from functools import reduce

import pytest

from metacyclic.group import (
    MetacyclicGroup,
    cocyclic_subgroup_from_triple,
    cocyclic_subgroups_of_product,
    cocyclic_triples,
)
from metacyclic.numth import p_part

S3 = MetacyclicGroup(3, 2, 0, 2)
Q8 = MetacyclicGroup(4, 2, 2, 3)
D8 = MetacyclicGroup(4, 2, 0, 3)
M16 = MetacyclicGroup(8, 2, 0, 5)
SAMPLE = (S3, Q8, D8, M16, MetacyclicGroup(12, 4, 6, 5), MetacyclicGroup(9, 3, 0, 4))


def test_presentation_consistency_is_enforced() -> None:
    with pytest.raises(ValueError):
        MetacyclicGroup(4, 2, 0, 2)  # t not a unit mod m
    with pytest.raises(ValueError):
        MetacyclicGroup(16, 2, 0, 3)  # t^n != 1 mod m
    with pytest.raises(ValueError):
        MetacyclicGroup(4, 2, 1, 3)  # s(t-1) != 0 mod m, b^n not central


def test_defining_relations_hold() -> None:
    for G in SAMPLE:
        a, b = G.gen_a, G.gen_b
        assert G.power(a, G.m) == G.identity
        assert G.power(b, G.n) == G.power(a, G.s)
        # twist orientation: b a b^-1 = a^t
        assert G.mul(G.mul(b, a), G.inv(b)) == G.power(a, G.t)


def test_group_axioms_on_samples() -> None:
    for G in (S3, Q8, MetacyclicGroup(6, 2, 0, 5)):
        elems = G.elements
        assert len(elems) == G.order == G.m * G.n
        for x in elems:
            assert G.mul(x, G.identity) == x
            assert G.mul(G.inv(x), x) == G.identity
        for x, y, z in itertools.islice(itertools.product(elems, repeat=3), 400):
            assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))


def test_power_matches_iterated_multiplication() -> None:
    G = MetacyclicGroup(12, 4, 6, 5)
    for x in G.elements[:12]:
        for k in range(10):
            by_mul = reduce(G.mul, [x] * k, G.identity)
            assert G.power(x, k) == by_mul
        assert G.power(x, -1) == G.inv(x)
        assert G.power(x, -3) == G.inv(G.power(x, 3))


def test_element_order_divides_group_order() -> None:
    for G in SAMPLE:
        for x in G.elements:
            d = G.element_order(x)
            assert G.order % d == 0
            assert G.power(x, d) == G.identity
            assert all(G.power(x, e) != G.identity for e in range(1, min(d, 6)))


def test_element_part_splits_commuting_factors() -> None:
    G = MetacyclicGroup(12, 4, 6, 5)
    for x in G.elements:
        x2 = G.element_part(x, (2,))
        x3 = G.element_part(x, (3,))
        assert G.mul(x2, x3) == x
        assert G.mul(x3, x2) == x
        assert G.element_order(x2) == p_part(G.element_order(x), 2)
        assert G.element_order(x3) == p_part(G.element_order(x), 3)


def test_gen_b_degenerate_quotient() -> None:
    # n = 1 collapses b into <a>; the generator must keep the a^s value
    G = MetacyclicGroup(32, 1, 28, 1)
    assert G.gen_b == (28, 0)
    H = MetacyclicGroup(32, 1, 29, 1)
    assert G.brute_force_isomorphic(H)  # both are cyclic of order 32


def test_brute_force_isomorphism_separates_q8_from_d8() -> None:
    assert not Q8.brute_force_isomorphic(D8)
    assert Q8.brute_force_isomorphic(Q8)
    assert not M16.brute_force_isomorphic(MetacyclicGroup(16, 1, 0, 1))


def test_center_derived_and_class_counts() -> None:
    assert S3.center().order == 1
    assert S3.derived_subgroup().order == 3
    assert len(S3.conjugacy_classes()) == 3
    assert Q8.center().order == 2
    assert D8.center().order == 2
    assert len(Q8.conjugacy_classes()) == 5
    assert len(D8.conjugacy_classes()) == 5
    assert M16.center().order == 4
    assert len(M16.conjugacy_classes()) == 10


def test_conjugacy_classes_partition_the_group() -> None:
    for G in SAMPLE:
        classes = G.conjugacy_classes()
        seen = [x for c in classes for x in c]
        assert sorted(seen) == sorted(G.elements)
        for c in classes:
            assert G.order % len(c) == 0


def test_abelianization_smith_form() -> None:
    assert S3.abelianization_invariants() == (2,)
    assert Q8.abelianization_invariants() == (2, 2)
    assert D8.abelianization_invariants() == (2, 2)
    assert M16.abelianization_invariants() == (2, 4)
    assert MetacyclicGroup(5, 4, 0, 2).abelianization_invariants() == (4,)


def test_order_profiles() -> None:
    assert S3.order_profile() == ((1, 1), (2, 3), (3, 2))
    assert Q8.order_profile() == ((1, 1), (2, 1), (4, 6))
    assert D8.order_profile() == ((1, 1), (2, 5), (4, 2))


def test_subgroup_enumeration_counts() -> None:
    assert len(S3.subgroups()) == 6
    assert len(Q8.subgroups()) == 6
    assert len(D8.subgroups()) == 10
    assert len(M16.subgroups()) == 11


def test_subgroups_are_closed_and_distinct() -> None:
    for G in (S3, Q8, D8):
        subs = G.subgroups()
        assert len({S.elems for S in subs}) == len(subs)
        for S in subs:
            assert G.order % S.order == 0
            for x, y in itertools.product(S, repeat=2):
                assert G.mul(x, G.inv(y)) in S


def test_generated_and_cyclic_subgroups() -> None:
    G = D8
    whole = G.generated([G.gen_a, G.gen_b])
    assert whole.order == G.order
    cyc = G.cyclic_subgroup(G.gen_a)
    assert cyc.order == 4 and cyc.is_cyclic and cyc.generator == G.gen_a
    assert len(G.cyclic_subgroups()) == len([S for S in G.subgroups() if S.is_cyclic])


def test_l_subgroup_orders() -> None:
    G = MetacyclicGroup(12, 4, 6, 5)
    for d in (1, 2, 4):
        L = G.l_subgroup(d)
        assert L.order == G.order // d
        assert G.gen_a in L


def test_normalizer_core_centralizer() -> None:
    G = D8
    refl = G.cyclic_subgroup(G.gen_b)
    N = G.normalizer(refl)
    assert refl.elems <= N.elems
    assert N.order == 4
    assert G.core(refl).order == 1
    assert G.centralizer(G.elements) == G.center()


def test_hall_and_sylow_subgroups() -> None:
    G = MetacyclicGroup(12, 2, 6, 5)
    assert G.sylow_subgroup(2).order == 8
    assert G.sylow_subgroup(3).order == 3
    assert G.hall_subgroup((3,)).order == 3
    assert G.hall_subgroup((2, 3)).order == 24
    assert G.hall_subgroup(()).order == 1
    assert M16.sylow_subgroup(2).is_normal


def test_subgroup_relations() -> None:
    A = D8.cyclic_subgroup(D8.gen_a)
    Z = D8.center()
    assert Z <= A
    assert A.is_normal and A.is_abelian
    assert A.index == 2


def test_coset_order() -> None:
    G = D8
    A = G.cyclic_subgroup(G.gen_a)
    assert G.coset_order(G.gen_b, A) == 2
    assert G.coset_order(G.gen_a, A) == 1


def _has_cyclic_quotient(G: MetacyclicGroup, A, K) -> bool:
    q = A.order // K.order
    return any(G.coset_order(z, K) == q for z in A)


def test_cocyclic_triples_parametrize_distinct_subgroups() -> None:
    # abelian product C4 x C4 realized with t = 1
    G = MetacyclicGroup(4, 4, 0, 1)
    g, h = G.gen_a, G.gen_b
    A = G.generated([g, h])
    seen = set()
    for tr in cocyclic_triples(4, 4, 2):
        K = cocyclic_subgroup_from_triple(G, g, h, tr)
        assert K.elems not in seen
        seen.add(K.elems)
        assert _has_cyclic_quotient(G, A, K)


def test_cocyclic_subgroups_of_product_all_valid() -> None:
    G = MetacyclicGroup(4, 4, 0, 1)
    subs = cocyclic_subgroups_of_product(G, G.gen_a, G.gen_b)
    A = G.generated([G.gen_a, G.gen_b])
    assert len(subs) == len({S.elems for S in subs})
    for K in subs:
        assert _has_cyclic_quotient(G, A, K)
    # brute-force comparison over all subgroups of C4 x C4
    brute = {S.elems for S in G.subgroups() if _has_cyclic_quotient(G, A, S)}
    assert {S.elems for S in subs} == brute
