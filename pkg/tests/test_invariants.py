from __future__ import annotations

import pytest

from metacyclic.group import MetacyclicGroup
from metacyclic.invariants import (
    MCInv,
    construct_group,
    derive_rek,
    isomorphic,
    m_prime_of,
    mcinv,
    minimal_factorization,
    pi_sets,
    rek_of,
    sylow_mcinv_consistency,
    sylow_presentation,
    t_subgroup,
    tuple_from_parts,
    valid_tuples,
    validate_tuple,
)
from metacyclic.numth import cyclic_subgroup, trivial_subgroup


def test_mcinv_golden_tuples() -> None:
    cases = {
        (3, 2, 0, 2): (3, 2, 3, 3, 2),      # S3
        (4, 2, 2, 3): (4, 2, 2, 4, 3),      # Q8
        (4, 2, 0, 3): (4, 2, 4, 4, 3),      # D8
        (8, 2, 0, 5): (4, 4, 2, 4, 3),      # modular group of order 16
        (9, 3, 0, 4): (9, 3, 3, 3, 1),
        (6, 2, 0, 5): (6, 2, 6, 6, 5),      # D12
        (12, 2, 6, 5): (12, 2, 6, 12, 5),
    }
    for key, (m, n, s, m_prime, delta_gen) in cases.items():
        inv, _ = mcinv(MetacyclicGroup(*key))
        assert inv == tuple_from_parts(m, n, s, m_prime, delta_gen), key


def test_mcinv_derived_invariants() -> None:
    _, der = mcinv(MetacyclicGroup(3, 2, 0, 2))
    assert (der.r, der.eps, der.k) == (1, 1, 2)
    assert der.pi == (2,) and der.pi_prime == (3,)
    _, der = mcinv(MetacyclicGroup(4, 2, 2, 3))
    assert (der.r, der.eps, der.k) == (4, -1, 1)
    assert der.pi == (2,) and der.pi_prime == ()
    _, der = mcinv(MetacyclicGroup(12, 2, 6, 5))
    assert (der.r, der.eps, der.k) == (4, 1, 2)
    assert der.R.elements == (1, 2)  # restriction to the 3-part


def test_derive_rek_spot_values() -> None:
    assert derive_rek(8, cyclic_subgroup(7, 8)) == (8, -1, 1)
    assert derive_rek(8, cyclic_subgroup(3, 8)) == (4, -1, 1)
    assert derive_rek(12, cyclic_subgroup(5, 12)) == (4, 1, 2)
    assert derive_rek(15, cyclic_subgroup(2, 15)) == (1, 1, 4)
    assert derive_rek(9, trivial_subgroup(9)) == (9, 1, 1)


def test_rek_of_agrees_with_subgroup_action() -> None:
    G = MetacyclicGroup(12, 2, 6, 5)
    A = G.cyclic_subgroup(G.gen_a)
    assert rek_of(G, A) == derive_rek(12, t_subgroup(G, A))


def test_t_subgroup_requires_normal_cyclic() -> None:
    G = MetacyclicGroup(4, 2, 0, 3)  # D8
    refl = G.cyclic_subgroup(G.gen_b)
    with pytest.raises(ValueError):
        t_subgroup(G, refl)  # not normal


def test_minimal_factorization_shapes() -> None:
    A, B = minimal_factorization(MetacyclicGroup(3, 2, 0, 2))
    assert (A.order, B.order) == (3, 2)
    assert A.is_normal and A.is_cyclic and B.is_cyclic
    # the modular group of order 16 admits a smaller kernel than <a>
    A, B = minimal_factorization(MetacyclicGroup(8, 2, 0, 5))
    assert A.order == 4 and A.is_normal
    assert {G_el for G_el in A} | {G_el for G_el in B}  # nonempty factors


def test_pi_sets() -> None:
    assert pi_sets(MetacyclicGroup(3, 2, 0, 2)) == ((2,), (3,))
    assert pi_sets(MetacyclicGroup(4, 2, 2, 3)) == ((2,), ())
    assert pi_sets(MetacyclicGroup(9, 3, 0, 4)) == ((3,), ())


def test_isomorphic_matches_brute_force_on_spot_pairs() -> None:
    Q8 = MetacyclicGroup(4, 2, 2, 3)
    D8 = MetacyclicGroup(4, 2, 0, 3)
    assert not isomorphic(Q8, D8)
    # same group through two presentations
    M16a = MetacyclicGroup(8, 2, 0, 5)
    M16b = construct_group(mcinv(M16a)[0])
    assert isomorphic(M16a, M16b)
    assert M16a.brute_force_isomorphic(M16b)


def test_validate_tuple_accepts_canonical_values() -> None:
    for key in ((4, 2, 4, 4, 3), (4, 2, 2, 4, 3), (3, 2, 3, 3, 2)):
        inv = tuple_from_parts(*key)
        ok, reasons = validate_tuple(inv.m, inv.n, inv.s, inv.delta)
        assert ok and reasons == ()


def test_validate_tuple_rejects_with_named_reason() -> None:
    ok, reasons = validate_tuple(8, 2, 8, cyclic_subgroup(3, 4))
    assert not ok
    assert any("s_2" in r for r in reasons)


def test_validate_tuple_raises_on_malformed_input() -> None:
    with pytest.raises(ValueError):
        validate_tuple(4, 2, 0, cyclic_subgroup(3, 4))  # s must be a positive divisor
    with pytest.raises(ValueError):
        validate_tuple(4, 2, 4, cyclic_subgroup(2, 5))  # modulus does not divide m


def test_mcinv_is_a_fixed_point_on_valid_tuples() -> None:
    for inv in valid_tuples(48):
        G = construct_group(inv)
        again, _ = mcinv(G)
        assert again == inv


def test_valid_tuples_counts_and_sorting() -> None:
    tuples_32 = valid_tuples(32)
    assert len(tuples_32) == 88
    assert len(valid_tuples(64)) == 223
    keys = [inv.sort_key() for inv in tuples_32]
    assert keys == sorted(keys)
    # nested bounds nest as prefixes of the same ordering
    assert set(valid_tuples(16)) <= set(tuples_32)


def test_construct_group_is_deterministic() -> None:
    inv = tuple_from_parts(12, 2, 6, 12, 5)
    assert construct_group(inv).key == construct_group(inv).key
    G = construct_group(inv)
    assert mcinv(G)[0] == inv


def test_m_prime_of_matches_published_tuples() -> None:
    # S3: r = 1, k = 2 acting on the full odd part
    assert m_prime_of(3, 2, 3, 1, 1, 2) == 3
    # Q8: everything sits in the 2-part
    assert m_prime_of(4, 2, 2, 4, -1, 1) == 4


def test_sylow_presentation_orders() -> None:
    G = MetacyclicGroup(12, 2, 6, 5)
    S2 = sylow_presentation(G, 2)
    assert S2.order == 8
    S3 = sylow_presentation(G, 3)
    assert S3.order == 3


def test_sylow_consistency_all_pass_on_samples() -> None:
    samples = [
        MetacyclicGroup(3, 2, 0, 2),
        MetacyclicGroup(4, 2, 2, 3),
        MetacyclicGroup(8, 2, 0, 5),
        MetacyclicGroup(12, 2, 6, 5),
        MetacyclicGroup(12, 4, 6, 5),
    ]
    for G in samples:
        _, der = mcinv(G)
        for p in der.pi:
            for entry in sylow_mcinv_consistency(G, p):
                assert entry["status"] == "pass", (G, p, entry)


def test_sylow_consistency_rejects_p_outside_pi() -> None:
    G = MetacyclicGroup(3, 2, 0, 2)
    with pytest.raises(ValueError):
        sylow_mcinv_consistency(G, 3)


def test_sylow_consistency_mixed_sign_families() -> None:
    """Groups whose local 2-tuple inverts while the global sign differs.

    The smallest members sit at order 160; both shapes must pass the
    corrected comparison clauses.
    """
    # eps = 1 against local e = -1: n_2 = k_2 may exceed 2
    G = construct_group(tuple_from_parts(160, 4, 10, 160, 17))
    report = {e["check"]: e["status"] for e in sylow_mcinv_consistency(G, 2)}
    assert report["4b: eps = 1 shape"] == "pass"
    # r_2 = m_2 = 2^(rho+1): global action restricts to <-1> mod m_2
    H = construct_group(tuple_from_parts(40, 4, 20, 40, 7))
    report = {e["check"]: e["status"] for e in sylow_mcinv_consistency(H, 2)}
    assert report["2: r_p matches rho when the orders match"] == "pass"
    assert all(v == "pass" for v in report.values())


def test_mcinv_tuple_json_and_ordering() -> None:
    inv = tuple_from_parts(4, 2, 2, 4, 3)
    assert inv.to_json() == {"m": 4, "n": 2, "s": 2, "m_prime": 4, "delta_gen": 3}
    assert inv.order == 8
    assert isinstance(inv, MCInv)
