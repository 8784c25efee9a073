from __future__ import annotations

from collections import Counter

from metacyclic.group import MetacyclicGroup
from metacyclic.wedderburn import (
    DIFFERENT,
    EQUAL,
    RATIONALS,
    UNKNOWN,
    canonical_conductor,
    commutative_conductors,
    compare_algebras,
    cyclotomic_field,
    decomposition,
    fingerprint,
    fixed_field,
    galois_preimage,
    idempotent_check,
    intersect_cyclotomic,
    is_subfield,
    perlis_walker,
    perlis_walker_conductors,
    roots_of_unity_order,
    strong_shoda_pairs,
)
from metacyclic.numth import cyclic_subgroup

S3 = MetacyclicGroup(3, 2, 0, 2)
Q8 = MetacyclicGroup(4, 2, 2, 3)
D8 = MetacyclicGroup(4, 2, 0, 3)
M27 = MetacyclicGroup(9, 3, 0, 4)


def test_canonical_conductor_drops_half_even_values() -> None:
    # conductors 2 mod 4 collapse: Q(zeta_6) = Q(zeta_3)
    assert canonical_conductor(6) == 3
    assert canonical_conductor(10) == 5
    assert canonical_conductor(12) == 12
    assert canonical_conductor(1) == 1
    assert cyclotomic_field(6) == cyclotomic_field(3)


def test_fixed_field_canonicalizes_conductor() -> None:
    assert fixed_field(12, cyclic_subgroup(5, 12)) == cyclotomic_field(4)
    assert fixed_field(9, cyclic_subgroup(4, 9)) == cyclotomic_field(3)
    assert fixed_field(5, cyclic_subgroup(2, 5)) == RATIONALS


def test_fixed_field_degrees() -> None:
    assert RATIONALS.degree == 1
    assert cyclotomic_field(8).degree == 4
    real_q8 = fixed_field(8, cyclic_subgroup(7, 8))  # Q(sqrt 2)
    assert real_q8.degree == 2
    assert real_q8 != cyclotomic_field(4)


def test_roots_of_unity_orders() -> None:
    assert roots_of_unity_order(RATIONALS) == 2
    assert roots_of_unity_order(cyclotomic_field(3)) == 6
    assert roots_of_unity_order(cyclotomic_field(4)) == 4
    assert roots_of_unity_order(cyclotomic_field(8)) == 8
    # real subfield of Q(zeta_8) keeps only -1 despite the even conductor
    assert roots_of_unity_order(fixed_field(8, cyclic_subgroup(7, 8))) == 2


def test_subfield_and_intersection() -> None:
    assert is_subfield(RATIONALS, cyclotomic_field(8))
    assert is_subfield(cyclotomic_field(4), cyclotomic_field(8))
    assert not is_subfield(cyclotomic_field(3), cyclotomic_field(8))
    assert intersect_cyclotomic(cyclotomic_field(12), 4) == cyclotomic_field(4)
    assert intersect_cyclotomic(cyclotomic_field(3), 8) == RATIONALS


def test_galois_preimage_fixes_the_field() -> None:
    assert galois_preimage(cyclotomic_field(4), 12).elements == (1, 5)
    assert galois_preimage(RATIONALS, 8).elements == (1, 3, 5, 7)


def test_strong_shoda_pairs_counts_and_idempotents() -> None:
    for G, count in ((S3, 3), (Q8, 5), (D8, 5)):
        pairs = strong_shoda_pairs(G)
        assert len(pairs) == count
        for L, K in pairs:
            assert K <= L
            assert idempotent_check(G, L, K)


def test_decomposition_s3() -> None:
    comps = decomposition(S3)
    dims = sorted(c.q_dimension for c in comps)
    assert dims == [1, 1, 4]
    big = max(comps, key=lambda c: c.q_dimension)
    assert big.total_degree == 2
    assert big.center == RATIONALS
    assert big.conductor == 3 and big.y == 0  # split: M_2(Q)


def test_decomposition_quaternion_vs_dihedral() -> None:
    q = decomposition(Q8)
    d = decomposition(D8)
    assert sorted(c.q_dimension for c in q) == [1, 1, 1, 1, 4]
    assert sorted(c.q_dimension for c in d) == [1, 1, 1, 1, 4]
    qbig = max(q, key=lambda c: c.q_dimension)
    dbig = max(d, key=lambda c: c.q_dimension)
    assert qbig.conductor == 4 and qbig.x == 3 and qbig.center == RATIONALS
    assert dbig.conductor == 4 and dbig.x == 3 and dbig.center == RATIONALS
    # the twist separates the quaternions from the split algebra
    assert qbig.y == 2 and dbig.y == 0


def test_decomposition_order_27_exponent_9() -> None:
    comps = decomposition(M27)
    by_dim = Counter(c.q_dimension for c in comps)
    assert by_dim == {1: 1, 2: 4, 18: 1}
    big = max(comps, key=lambda c: c.q_dimension)
    assert big.total_degree == 3
    assert big.center == cyclotomic_field(3)
    assert big.conductor == 9


def test_dimension_identity_small_range() -> None:
    from metacyclic.invariants import construct_group, valid_tuples

    for inv in valid_tuples(32):
        G = construct_group(inv)
        assert sum(c.q_dimension for c in decomposition(G)) == G.order


def test_perlis_walker_multiplicities() -> None:
    assert perlis_walker((2,)) == ((1, 1), (2, 1))
    assert perlis_walker((6,)) == ((1, 1), (2, 1), (3, 1), (6, 1))
    assert perlis_walker((2, 2)) == ((1, 1), (2, 3))
    # QC4 = Q + Q + Q(i)
    assert perlis_walker((4,)) == ((1, 1), (2, 1), (4, 1))


def test_commutative_slice_matches_perlis_walker() -> None:
    for G in (S3, Q8, D8, M27, MetacyclicGroup(6, 2, 0, 5)):
        got = commutative_conductors(decomposition(G))
        want = perlis_walker_conductors(G.abelianization_invariants())
        assert got == want


def test_compare_algebras_verdicts() -> None:
    assert compare_algebras(Q8, D8) == UNKNOWN  # never EQUAL on this pair
    assert compare_algebras(Q8, Q8) == EQUAL
    assert compare_algebras(S3, MetacyclicGroup(6, 1, 0, 1)) == DIFFERENT


def test_fingerprint_is_degree_center_multiset() -> None:
    fp = fingerprint(decomposition(S3))
    assert len(fp) == 3
    assert fingerprint(decomposition(Q8)) == fingerprint(decomposition(D8))


def test_component_json_keys() -> None:
    comp = max(decomposition(Q8), key=lambda c: c.q_dimension)
    data = comp.to_json()
    assert set(data) == {"matrix_size", "conductor", "x", "y", "center", "degree", "dim"}
    assert data["dim"] == 4
