"""Classification of finite metacyclic groups by numerical invariants.

Every finite metacyclic group G has a minimal metacyclic factorization
G = AB: both factors cyclic, A normal, and the triple (|A|, r(A), [G:B])
lexicographically least over all such factorizations.  The classifying
tuple is (m, n, s, delta) with m = |A|, n = [G:A], s = [G:B], and delta
the conjugation action of G on A restricted to a canonical modulus m'
dividing m.  Tuple equality decides isomorphism.  This module computes
the tuple from any presentation, validates candidate tuples by pure
arithmetic, and rebuilds a canonical presentation from a valid tuple.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .group import MetacyclicGroup, Subgroup
from .numth import (
    UnitSubgroup,
    cyclic_subgroup,
    cyclic_subgroups,
    divisors,
    from_generators,
    lcm,
    p_part,
    part,
    prime_factors,
    primes_of,
    restrict,
    trivial_subgroup,
    units,
    vp,
)


@dataclass(frozen=True)
class MCInv:
    """Classifying tuple (m, n, s, delta).

    s is stored in divisor-of-m normal form (s = m encodes b^n = 1) and
    delta is a cyclic subgroup of the units mod m' for some m' | m.
    """

    m: int
    n: int
    s: int
    delta: UnitSubgroup

    @property
    def m_prime(self) -> int:
        return self.delta.modulus

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def delta_gen(self) -> int:
        return 1 if self.delta.is_trivial else self.delta.canonical_generator()

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (self.order, self.m, self.n, self.s, self.delta_gen)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "s": self.s,
                "m_prime": self.m_prime, "delta_gen": self.delta_gen}


def tuple_from_parts(m: int, n: int, s: int, m_prime: int, delta_gen: int) -> MCInv:
    return MCInv(m, n, s, cyclic_subgroup(delta_gen, m_prime))


@dataclass(frozen=True)
class DerivedInv:
    """Quantities read off a classifying tuple.

    r: greatest divisor of m on which the action restricts to the
       identity (odd part) or to a subgroup of {+-1} (2-part);
    eps: -1 exactly when the 2-part of that restriction is nontrivial;
    k: order of the action restricted to the primes of m outside r;
    pi / pi_prime: partition of the primes of |G|, with pi_prime the
       primes of m not dividing r;
    R: action of G on the pi'-part of the derived subgroup, a unit
       subgroup mod the pi'-part of m.
    """

    r: int
    eps: int
    k: int
    m_prime: int
    pi: tuple[int, ...]
    pi_prime: tuple[int, ...]
    R: UnitSubgroup


# -- action subgroups -------------------------------------------------------


def _dlog(G: MetacyclicGroup, g, target, order: int) -> int:
    x = G.identity
    for e in range(order):
        if x == target:
            return e
        x = G.mul(x, g)
    raise ValueError("target does not lie in the cyclic group generated by g")


def t_subgroup(G: MetacyclicGroup, A: Subgroup) -> UnitSubgroup:
    """Conjugation action of G on a normal cyclic subgroup A.

    Returned as the subgroup of units mod |A| generated by the exponents
    through which the two ambient generators act on a generator of A.
    """
    if not A.is_cyclic:
        raise ValueError("A must be cyclic")
    if not A.is_normal:
        raise ValueError("A must be normal")
    if A.order == 1:
        return trivial_subgroup(1)
    g = A.generator
    exps = [_dlog(G, g, G.conj(g, c), A.order) for c in (G.gen_a, G.gen_b)]
    return from_generators(A.order, exps)


@lru_cache(maxsize=None)
def derive_rek(m: int, T: UnitSubgroup) -> tuple[int, int, int]:
    """(r, eps, k) attached to an action subgroup T mod a divisor of m.

    Restrictions of T are only observable modulo divisors of its own
    modulus; the search for r is capped there.  The cap never truncates
    a tuple coming from a group, because r always divides the canonical
    modulus m'.
    """
    cap = T.modulus
    r = 1
    for p, e in prime_factors(m):
        good = 1
        for j in range(1, min(e, vp(cap, p)) + 1):
            q = p ** j
            res = restrict(T, q)
            if p == 2:
                if any(x != 1 and x != q - 1 for x in res.elements):
                    break
            elif not res.is_trivial:
                break
            good = q
        if p == 2:
            # Levels 2 and 4 pass for any action, so a truncated modulus
            # must not report a smaller 2-part than a full one ever could.
            good = max(good, min(p_part(m, 2), 4))
        r *= good
    r2 = p_part(r, 2)
    q2 = math.gcd(r2, cap)
    eps = -1 if q2 > 1 and not restrict(T, q2).is_trivial else 1
    m_out = part(m, primes_of(m) - primes_of(r))
    k = restrict(T, math.gcd(m_out, cap)).order
    return r, eps, k


def rek_of(G: MetacyclicGroup, A: Subgroup) -> tuple[int, int, int]:
    """(r, eps, k) of the action of G on a normal cyclic subgroup A."""
    return derive_rek(A.order, t_subgroup(G, A))


def m_prime_of(m: int, n: int, s: int, r: int, eps: int, k: int) -> int:
    """Canonical modulus m' | m on which the action invariant is recorded.

    The part of m away from the primes of r survives whole.  At a prime
    p of r the exponent is cut to min(m_p, k_p r_p, max(r_p, s_p,
    r_p s_p k_p / n_p)), except that for eps = -1 the 2-part collapses to
    one of r_2, m_2/2 or m_2.
    """
    out = part(m, primes_of(m) - primes_of(r))
    for p in sorted(primes_of(r)):
        a_m, a_r, a_s = vp(m, p), vp(r, p), vp(s, p)
        a_n, a_k = vp(n, p), vp(k, p)
        if p != 2 or eps == 1:
            out *= p ** min(a_m, a_k + a_r, max(a_r, a_s, a_r + a_s + a_k - a_n))
        else:
            m2, r2, s2, n2, k2 = 2 ** a_m, 2 ** a_r, 2 ** a_s, 2 ** a_n, 2 ** a_k
            if k2 <= 2 or m2 <= 2 * r2:
                out *= r2
            elif 4 <= k2 < n2 and 4 * r2 <= m2 and (
                    s2 == n2 * r2 or (2 * s2 == m2 and m2 < n2 * r2)):
                out *= m2 // 2
            else:
                out *= m2
    return out


# -- minimal factorization and the classifying tuple ------------------------


@lru_cache(maxsize=None)
def _minimal_pairs(G: MetacyclicGroup):
    """((m, r, s), pairs) over all factorizations achieving the minimum."""
    order = G.order
    cyclics = G.cyclic_subgroups()
    ranked = []
    for A in cyclics:
        if A.is_normal:
            ranked.append((A.order, rek_of(G, A)[0], A))
    ranked.sort(key=lambda t: (t[0], t[1], t[2].sorted_elems))
    best_key = None
    pairs: list[tuple[Subgroup, Subgroup]] = []
    for oa, ra, A in ranked:
        if best_key is not None and (oa, ra) > best_key[:2]:
            break
        n = order // oa
        for B in cyclics:
            inter = len(A.elems & B.elems)
            if B.order != n * inter:
                continue
            key = (oa, ra, oa // inter)
            if best_key is None or key < best_key:
                best_key, pairs = key, [(A, B)]
            elif key == best_key:
                pairs.append((A, B))
    assert best_key is not None, "every metacyclic presentation factorizes"
    return best_key, tuple(pairs)


def minimal_factorization(G: MetacyclicGroup) -> tuple[Subgroup, Subgroup]:
    """A factorization G = AB achieving the lexicographic minimum of
    (|A|, r(A), [G:B]); ties are broken by the smallest element lists."""
    _, pairs = _minimal_pairs(G)
    return min(pairs, key=lambda AB: (AB[0].sorted_elems, AB[1].sorted_elems))


def pi_sets(G: MetacyclicGroup) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(pi, pi'): pi collects the primes with a normal Hall complement."""
    ps = sorted(primes_of(G.order))
    pi = tuple(p for p in ps
               if G.hall_subgroup(tuple(q for q in ps if q != p)).is_normal)
    return pi, tuple(p for p in ps if p not in pi)


def _derived_part(G: MetacyclicGroup, primes) -> Subgroup:
    d = G.derived_subgroup()
    return G.cyclic_subgroup(G.element_part(d.generator, primes))


@lru_cache(maxsize=None)
def mcinv(G: MetacyclicGroup) -> tuple[MCInv, DerivedInv]:
    """Classifying tuple of G together with the derived quantities.

    All minimizing factorizations must produce the same delta; asserted
    rather than trusted.
    """
    (m, _, s), pairs = _minimal_pairs(G)
    n = G.order // m
    seen = set()
    for A, _B in pairs:
        T = t_subgroup(G, A)
        r, eps, k = derive_rek(m, T)
        mp = m_prime_of(m, n, s, r, eps, k)
        seen.add((restrict(T, mp), r, eps, k, mp))
    assert len(seen) == 1, "minimal factorizations disagree on the invariant"
    delta, r, eps, k, mp = seen.pop()
    pi_prime = tuple(sorted(primes_of(m) - primes_of(r)))
    pi = tuple(sorted(primes_of(G.order) - set(pi_prime)))
    R = t_subgroup(G, _derived_part(G, pi_prime))
    assert R.modulus == part(m, pi_prime)
    return MCInv(m, n, s, delta), DerivedInv(r, eps, k, mp, pi, pi_prime, R)


def isomorphic(G: MetacyclicGroup, H: MetacyclicGroup) -> bool:
    """Tuple equality decides isomorphism."""
    return mcinv(G)[0] == mcinv(H)[0]


# -- realizability and construction -----------------------------------------


def validate_tuple(m: int, n: int, s: int,
                   delta: UnitSubgroup) -> tuple[bool, tuple[str, ...]]:
    """Arithmetic test for whether (m, n, s, delta) classifies a group.

    Returns (ok, reasons) with one reason per failed clause.  s must be
    given in divisor-of-m normal form.  A non-cyclic delta, or a delta
    modulus not dividing m, is malformed input rather than an invalid
    tuple and raises ValueError.
    """
    if m < 1 or n < 1 or s < 1:
        raise ValueError("m, n and s must be positive")
    if not delta.is_cyclic:
        raise ValueError("delta must be cyclic")
    mp = delta.modulus
    if m % mp:
        raise ValueError("the modulus of delta must divide m")
    r, eps, k = derive_rek(m, delta)
    pi_r = primes_of(r)
    pi_prime = primes_of(m) - pi_r
    reasons = []
    if m % s:
        reasons.append("(a) s does not divide m")
    if n % delta.order:
        reasons.append("(a) |delta| does not divide n")
    if not part(m, pi_prime) == part(s, pi_prime) == part(mp, pi_prime):
        reasons.append("(a) m, s, m' disagree at the primes outside r")
    if part(mp, pi_r) != part(m_prime_of(m, n, s, r, eps, k), pi_r):
        reasons.append("(b) modulus of delta violates the m' formula at a prime of r")
    if eps == -1:
        m2, r2, s2 = p_part(m, 2), p_part(r, 2), p_part(s, 2)
        n2, k2 = p_part(n, 2), p_part(k, 2)
        if m2 // r2 > n2:
            reasons.append("(c) m_2 / r_2 exceeds n_2")
        if m2 > 2 * s2:
            reasons.append("(c) m_2 exceeds 2 s_2")
        if s2 == n2 * r2:
            reasons.append("(c) s_2 equals n_2 r_2")
        if n % 4 == 0 and m % 8 == 0 and k2 < n2 and r2 > s2:
            reasons.append("(c) r_2 exceeds s_2 although 4 | n, 8 | m and k_2 < n_2")
    for p in sorted(pi_r):
        if p == 2 and eps == -1:
            continue
        m_p, r_p, s_p = p_part(m, p), p_part(r, p), p_part(s, p)
        n_p, k_p = p_part(n, p), p_part(k, p)
        if m_p // r_p > s_p or s_p > n_p:
            reasons.append(f"(d) s_{p} outside the range [m_{p}/r_{p}, n_{p}]")
        if r_p > s_p and n_p >= s_p * k_p:
            reasons.append(f"(d) r_{p} > s_{p} but n_{p} >= s_{p} k_{p}")
    return not reasons, tuple(reasons)


def construct_group(inv: MCInv) -> MetacyclicGroup:
    """Canonical presentation realizing a valid classifying tuple.

    Scans the units mod m in ascending order for an action exponent
    whose cyclic group restricts to delta on m' and to the prescribed
    local action at every prime of r, and which satisfies the two
    presentation compatibility congruences.  Taking the first hit makes
    the output deterministic.
    """
    ok, reasons = validate_tuple(inv.m, inv.n, inv.s, inv.delta)
    if not ok:
        raise ValueError("tuple is not realizable: " + "; ".join(reasons))
    m, n = inv.m, inv.n
    s_res = inv.s % m
    r, eps, _ = derive_rek(m, inv.delta)
    local = {}
    for p in sorted(primes_of(r)):
        m_p = p_part(m, p)
        e = eps if p == 2 else 1
        local[m_p] = cyclic_subgroup((e + p_part(r, p)) % m_p, m_p)
    for x in units(m):
        if pow(x, n, m) != 1 % m:
            continue
        if (s_res * (x - 1)) % m:
            continue
        gen = cyclic_subgroup(x, m)
        if restrict(gen, inv.m_prime) != inv.delta:
            continue
        if any(restrict(gen, q) != sub for q, sub in local.items()):
            continue
        return MetacyclicGroup(m, n, s_res, x)
    raise AssertionError("validated tuple admits no action exponent")


@lru_cache(maxsize=None)
def valid_tuples(max_order: int) -> tuple[MCInv, ...]:
    """All classifying tuples with m n <= max_order, canonically sorted."""
    out = []
    for order in range(1, max_order + 1):
        for m in divisors(order):
            n = order // m
            for mp in divisors(m):
                for delta in cyclic_subgroups(mp):
                    for s in divisors(m):
                        ok, _ = validate_tuple(m, n, s, delta)
                        if ok:
                            out.append(MCInv(m, n, s, delta))
    return tuple(sorted(out, key=MCInv.sort_key))


# -- local structure ---------------------------------------------------------


def sylow_presentation(G: MetacyclicGroup, p: int) -> MetacyclicGroup:
    """The Sylow p-subgroup of G as a standalone group.

    <a_p, b_p> is a Sylow p-subgroup whenever p lies in pi; the local
    relations are read off by discrete logarithms inside <a_p>.  The
    classifying tuple of the result is computed downstream from the
    subgroup's own minimal factorization, so nothing depends on the
    ambient factorization being minimal.
    """
    m_p, n_p = p_part(G.m, p), p_part(G.n, p)
    ap = G.element_part(G.gen_a, (p,))
    bp = G.element_part(G.gen_b, (p,))
    s_loc = _dlog(G, ap, G.power(bp, n_p), m_p)
    t_loc = _dlog(G, ap, G.conj(ap, bp), m_p)
    return MetacyclicGroup(m_p, n_p, s_loc, t_loc)


def _exponent(G: MetacyclicGroup) -> int:
    return lcm(*(d for d, _ in G.order_profile()))


def sylow_mcinv_consistency(G: MetacyclicGroup, p: int) -> list[dict]:
    """Consistency report between the tuple of G and that of its Sylow
    p-subgroup, for p in pi.

    Each entry is {"check", "status", "lhs", "rhs"}; the checks are the
    parameter constraints (A)-(D) on the local tuple and the comparison
    clauses (1)-(4) tying it to the global one.  One printed form of the
    p-group constraint (D)(b) reverses two inequalities and is
    contradicted by the modular group of order 16; the corrected
    orientation (nu >= 2 and mu >= 3 force rho <= sigma) is used here.
    The printed mixed-sign clause (local e = -1, global eps = 1) also
    pins n_2 = 2, but only one branch of its case analysis forces that;
    the other branch realizes any n_2 = k_2 <= 2^(nu-1), smallest case
    of order 160, so check 4b keeps the provable part: mu = 2,
    sigma = 1, s_2 = 2, k_2 = n_2 <= 2^(nu-1) and r_2 = m_2 / 2.
    The stated equality r_p = p^rho under matching orders rests on the
    same k_2 < n_2 import and fails for e = -1 when k_2 = n_2: the
    global action can restrict to <-1> mod m_2 while the canonical
    local tuple re-dresses it as <-1 + 2^(mu-1)>, leaving
    r_2 = m_2 = 2^(rho+1) (again smallest at order 160), so check 2
    accepts that shape alongside the printed one.
    """
    inv, der = mcinv(G)
    if p not in der.pi:
        raise ValueError(f"{p} does not lie in pi for this group")
    S = sylow_presentation(G, p)
    sinv, sder = mcinv(S)
    mu, nu, sigma = vp(sinv.m, p), vp(sinv.n, p), vp(sinv.s, p)
    rho, e = vp(sder.r, p), sder.eps
    m_p, n_p, s_p = p_part(inv.m, p), p_part(inv.n, p), p_part(inv.s, p)
    r_p, k_p, eps = p_part(der.r, p), p_part(der.k, p), der.eps

    report: list[dict] = []

    def chk(name, ok, lhs, rhs):
        report.append({"check": name, "status": "pass" if ok else "fail",
                       "lhs": lhs, "rhs": rhs})

    local = {"mu": mu, "nu": nu, "sigma": sigma, "rho": rho, "e": e}
    chk("A: rho = 0 forces mu = 0", rho != 0 or mu == 0, local, "mu = 0")
    chk("B: p = 2, rho = 1 force mu = 1",
        not (p == 2 and rho == 1) or mu == 1, local, "mu = 1")
    chk("C: e = 1 bounds",
        e != 1 or (rho <= sigma <= mu <= rho + sigma and sigma <= nu),
        local, "rho <= sigma <= mu <= rho + sigma, sigma <= nu")
    chk("D(a): e = -1 bounds",
        e != -1 or (p == 2 and 2 <= rho <= mu and nu >= 1
                    and mu - 1 <= sigma <= mu <= rho + nu and sigma != rho + nu),
        local, "p = 2 <= rho <= mu, nu >= 1, mu-1 <= sigma <= mu <= rho+nu != sigma")
    chk("D(b): e = -1, nu >= 2, mu >= 3 force rho <= sigma",
        e != -1 or not (nu >= 2 and mu >= 3) or rho <= sigma,
        local, "rho <= sigma")

    glob = {"m_p": m_p, "n_p": n_p, "s_p": s_p, "r_p": r_p, "k_p": k_p, "eps": eps}
    chk("1: m_p n_p = p^(mu+nu)", m_p * n_p == p ** (mu + nu),
        m_p * n_p, p ** (mu + nu))
    chk("1: p^mu divides m_p", m_p % p ** mu == 0, m_p, p ** mu)
    chk("1: s_p = p^sigma", s_p == p ** sigma, s_p, p ** sigma)
    chk("2: p^mu = m_p iff p^nu = n_p",
        (p ** mu == m_p) == (p ** nu == n_p), glob, local)
    if p ** mu == m_p:
        chk("2: r_p matches rho when the orders match",
            r_p == p ** rho
            or (e == -1 and r_p == m_p == 2 ** (rho + 1) and k_p == n_p),
            r_p, p ** rho)
    if e == 1 or p != 2:
        if p == 2:
            chk("3a: p = 2, e = 1 force eps = 1", eps == 1, eps, 1)
        chk("3b: m_p / r_p = p^(mu-rho)", m_p // r_p == p ** (mu - rho),
            m_p // r_p, p ** (mu - rho))
        expo = _exponent(S)
        chk("3b: exponent = m_p n_p / s_p", expo == m_p * n_p // s_p,
            expo, m_p * n_p // s_p)
        chk("3b: exponent = p^(mu+nu-sigma)", expo == p ** (mu + nu - sigma),
            expo, p ** (mu + nu - sigma))
        if m_p != p ** mu:
            chk("3c: strict local order forces k_p > 1, mu > 0, rho = sigma, "
                "k_p s_p > n_p",
                k_p > 1 and mu != 0 and rho == sigma and k_p * s_p > n_p,
                glob, local)
    if e == -1 and p == 2:
        chk("4a: eps = -1 iff m_2 = 2^mu", (eps == -1) == (m_p == 2 ** mu),
            glob, local)
        if eps == 1:
            chk("4b: eps = 1 shape",
                mu == 2 and sigma == 1 and s_p == 2 and k_p == n_p
                and n_p <= 2 ** (nu - 1) and 2 * r_p == m_p,
                glob, local)
    return report
