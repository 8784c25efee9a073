"""Strong Shoda pairs and the rational Wedderburn decomposition.

Every simple component of the group algebra over the rationals of a
metacyclic group comes from a strong Shoda pair (L, K): L is the unique
largest subgroup containing a fixed maximal abelian A = <a, b^j0> whose
derived subgroup lands in K, and L/K must be cyclic.  The component is a
matrix ring over a cyclic algebra; we record it symbolically as a
:class:`SimpleComponent` and describe its center as a cyclotomic fixed
field, so equality of centers is exact Galois-correspondence arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .group import El, MetacyclicGroup, Subgroup
from .numth import (
    UnitSubgroup,
    cyclic_subgroup,
    divisors,
    from_generators,
    lcm,
    mult_order,
    phi,
    prime_factors,
    restrict,
    trivial_subgroup,
    unit_subgroup,
    units,
)


def canonical_conductor(d: int) -> int:
    """Smallest f with Q(zeta_f) = Q(zeta_d); kills the d = 2 mod 4 alias."""
    return d // 2 if d % 4 == 2 else d


# ---------------------------------------------------------------------------
# cyclotomic fixed fields


@dataclass(frozen=True, order=True)
class FixedField:
    """The subfield of Q(zeta_conductor) fixed by `fixer` <= U_conductor.

    Instances are kept canonical: the conductor is the smallest modulus
    realizing the field, so dataclass equality is field equality.
    """

    conductor: int
    fixer: UnitSubgroup

    @property
    def degree(self) -> int:
        return phi(self.conductor) // self.fixer.order

    def fixer_generators(self) -> tuple[int, ...]:
        if self.fixer.is_trivial:
            return (1,)
        if self.fixer.is_cyclic:
            return (self.fixer.canonical_generator(),)
        gens: list[int] = []
        have = from_generators(self.conductor, [])
        for x in self.fixer.elements:
            if x not in have.elements:
                gens.append(x)
                have = from_generators(self.conductor, gens)
                if have == self.fixer:
                    break
        return tuple(gens)

    def to_json(self) -> dict:
        gens = self.fixer_generators()
        return {
            "conductor": self.conductor,
            "fixer_gen": gens[0] if len(gens) == 1 else list(gens),
        }

    def __repr__(self) -> str:
        if self.conductor == 1:
            return "Q"
        if self.fixer.is_trivial:
            return f"Q(zeta_{self.conductor})"
        return f"Q(zeta_{self.conductor})^{self.fixer_generators()}"


@lru_cache(maxsize=None)
def fixed_field(d: int, T: UnitSubgroup) -> FixedField:
    """Canonical form of the fixed field of T <= U_d acting on Q(zeta_d).

    The conductor is the smallest divisor d0 of d such that the kernel of
    reduction U_d -> U_{d0} lies inside T; the fixer is the image of T in
    U_{d0}.  Minimality under divisibility makes the first hit in the
    ascending divisor scan the unique canonical conductor, and it is never
    2 mod 4 because that level reduces with trivial kernel.
    """
    if d < 1:
        raise ValueError("modulus must be positive")
    if T.modulus != d:
        raise ValueError(f"fixer has modulus {T.modulus}, expected {d}")
    fix = set(T.elements)
    for d0 in divisors(d):
        rem = 1 % d0
        if all(x % d0 != rem or x in fix for x in units(d)):
            fixer = restrict(T, d0)
            assert phi(d) // T.order == phi(d0) // fixer.order
            return FixedField(d0, fixer)
    raise AssertionError("d itself always qualifies")


RATIONALS = fixed_field(1, trivial_subgroup(1))


def cyclotomic_field(d: int) -> FixedField:
    return fixed_field(d, trivial_subgroup(d))


def galois_preimage(F: FixedField, modulus: int) -> UnitSubgroup:
    """Subgroup of U_modulus acting trivially on F inside Q(zeta_modulus)."""
    if modulus % F.conductor:
        raise ValueError("field does not embed: conductor must divide modulus")
    if modulus == 1:
        return trivial_subgroup(1)
    return unit_subgroup(
        modulus, [x for x in units(modulus) if x % F.conductor in F.fixer]
    )


def is_subfield(F: FixedField, E: FixedField) -> bool:
    """Whether F embeds in E, i.e. F is fixed by everything fixing E."""
    if E.conductor % F.conductor:
        return False
    pre = set(galois_preimage(F, E.conductor).elements)
    return all(x in pre for x in E.fixer.elements)


def intersect_cyclotomic(F: FixedField, c: int) -> FixedField:
    """The field F meet Q(zeta_c), canonicalized.

    Both live in Q(zeta_M) for M = lcm; the intersection is fixed by the
    join of the two Galois groups.
    """
    M = lcm(F.conductor, c)
    gens = list(galois_preimage(F, M).elements)
    gens += [x for x in units(M) if x % c == 1 % c]
    return fixed_field(M, from_generators(M, gens))


def roots_of_unity_order(F: FixedField) -> int:
    """Order of the torsion subgroup of F* (always even).

    Q(zeta_f) embeds in F exactly when the whole fixer reduces to 1 mod f,
    so the torsion order is 2 * e * 2^(a-1) with e the largest odd such
    divisor of the conductor and 2^a the largest such 2-power (a >= 1 read
    as 1 when the conductor is odd, since -1 is always present).
    """
    d0 = F.conductor

    def fixes(f: int) -> bool:
        rem = 1 % f
        return all(x % f == rem for x in F.fixer.elements)

    e = max(f for f in divisors(d0) if f % 2 and fixes(f))
    two = d0 & -d0
    a_part = max((f for f in divisors(two) if fixes(f)), default=1)
    return 2 * e * max(a_part // 2, 1)


# ---------------------------------------------------------------------------
# strong Shoda pairs


def _jgcd(G: MetacyclicGroup, K: Subgroup) -> int:
    g = G.n
    for _, j in K.elems:
        g = math.gcd(g, j)
    return g


def _pair_data(G: MetacyclicGroup, K: Subgroup) -> tuple[int, int]:
    """(i0, e0): index of K meet <a> in <a>, and the least d with
    <a, b^d> having derived subgroup inside K."""
    fixed = sum(1 for _, j in K.elems if j == 0)
    i0 = G.m // fixed
    return i0, mult_order(G.t, i0)


def _qualifies(G: MetacyclicGroup, K: Subgroup) -> Subgroup | None:
    """The partner L making (L, K) a strong Shoda pair, if any.

    L must contain A = <a, b^j0>, so L = <a, b^d> with d | j0; the derived
    subgroup condition forces e0 | d and maximality forces d = e0.  K lies
    in L iff e0 divides every b-exponent in K, and L/K (abelian, generated
    by the cosets of a and b^e0) is cyclic iff the lcm of their coset
    orders is the full index.
    """
    i0, e0 = _pair_data(G, K)
    if _jgcd(G, K) % e0:
        return None
    L = G.l_subgroup(e0)
    o2 = G.coset_order(G.power(G.gen_b, e0), K)
    if lcm(i0, o2) != L.order // K.order:
        return None
    return L


def _k_orbit(G: MetacyclicGroup, K: Subgroup) -> list[Subgroup]:
    gens = (G.gen_a, G.gen_b)
    seen = {K.elems: K}
    frontier = [K]
    while frontier:
        new = []
        for S in frontier:
            for g in gens:
                C = G.conjugate_subgroup(S, g)
                if C.elems not in seen:
                    seen[C.elems] = C
                    new.append(C)
        frontier = new
    return list(seen.values())


@lru_cache(maxsize=None)
def strong_shoda_pairs(G: MetacyclicGroup) -> tuple[tuple[Subgroup, Subgroup], ...]:
    """One strong Shoda pair (L, K) per conjugacy class of K.

    The fixed maximal abelian subgroup is A = <a, b^j0> with j0 the order
    of t mod m (the largest abelian <a, b^j>, j | n).  Each returned K is
    the representative of its conjugacy class with the smallest element
    list; conjugate candidates qualify or fail together, so deduplication
    by first hit in the sorted subgroup order is canonical.  Normality of
    K in L is asserted outright (it follows from L' <= K); cyclicity is
    checked during the search, and the remaining strong-pair axioms hold
    by the classification of metabelian group algebras, with
    :func:`idempotent_check` available as an independent verifier at
    small orders.
    """
    pairs: list[tuple[Subgroup, Subgroup]] = []
    seen: set[frozenset] = set()
    for K in G.subgroups():
        if K.elems in seen:
            continue
        L = _qualifies(G, K)
        if L is None:
            continue
        orbit = _k_orbit(G, K)
        seen.update(S.elems for S in orbit)
        assert all(G.conj(k, g) in K.elems for g in L.gens for k in K.elems)
        pairs.append((L, K))
    return tuple(pairs)


# ---------------------------------------------------------------------------
# exact idempotent verification (small orders)

_Vec = dict  # group element -> Fraction


def _alg_mul(G: MetacyclicGroup, f: _Vec, g: _Vec) -> _Vec:
    out: _Vec = {}
    for x, c in f.items():
        for y, d in g.items():
            z = G.mul(x, y)
            v = out.get(z, 0) + c * d
            if v:
                out[z] = v
            elif z in out:
                del out[z]
    return out

def _conj_vec(G: MetacyclicGroup, f: _Vec, g: El) -> _Vec:
    return {G.conj(x, g): c for x, c in f.items()}

def _hat(elems) -> _Vec:
    c = Fraction(1, len(elems))
    return {x: c for x in elems}


def _epsilon(G: MetacyclicGroup, L: Subgroup, K: Subgroup, u: El) -> _Vec:
    """eps(L, K) = prod over primes q | [L:K] of (K-hat - D_q-hat), where
    D_q/K is the unique subgroup of order q of the cyclic L/K; the empty
    product (L = K) is K-hat itself."""
    idx = L.order // K.order
    eps = _hat(K.sorted_elems)
    for q in {p for p, _ in prime_factors(idx)}:
        step = G.power(u, idx // q)
        d_elems = {G.mul(k, G.power(step, i)) for k in K.elems for i in range(q)}
        term = _hat(sorted(d_elems))
        diff = dict(_hat(K.sorted_elems))
        for x, c in term.items():
            v = diff.get(x, 0) - c
            if v:
                diff[x] = v
            elif x in diff:
                del diff[x]
        eps = _alg_mul(G, eps, diff)
    return eps


def _coset_generator(G: MetacyclicGroup, H: Subgroup, K: Subgroup) -> El:
    """Smallest element of H generating the cyclic quotient H/K."""
    idx = H.order // K.order
    for x in H:
        if G.coset_order(x, K) == idx:
            return x
    raise ValueError("quotient is not cyclic")


def idempotent_check(G: MetacyclicGroup, L: Subgroup, K: Subgroup) -> bool:
    """Exact rational verification that (L, K) behaves like a strong pair.

    Computes eps(L, K) and e(G, L, K) = sum of the distinct conjugates of
    eps, then checks: eps and e are idempotent, e is central, conjugates
    of eps from outside N_G(K) are orthogonal to eps, and the elements
    fixing e by left multiplication are exactly the core of K.  All
    arithmetic is exact (Fraction vectors indexed by group elements).
    """
    if G.order > 128:
        raise ValueError("exact idempotent arithmetic is capped at order 128")
    if not all(G.conj(k, g) in K.elems for g in L.gens for k in K.elems):
        return False
    u = _coset_generator(G, L, K)
    eps = _epsilon(G, L, K, u)
    if _alg_mul(G, eps, eps) != eps:
        return False

    N = G.normalizer(K)
    variants: dict[frozenset, _Vec] = {}
    outside: list[_Vec] = []
    for g in G.elements:
        v = _conj_vec(G, eps, g)
        key = frozenset(v.items())
        if key not in variants:
            variants[key] = v
            if g not in N.elems:
                outside.append(v)
    for v in outside:
        if _alg_mul(G, v, eps):
            return False

    e: _Vec = {}
    for v in variants.values():
        for x, c in v.items():
            w = e.get(x, 0) + c
            if w:
                e[x] = w
            elif x in e:
                del e[x]
    if _alg_mul(G, e, e) != e:
        return False
    if any(_conj_vec(G, e, g) != e for g in (G.gen_a, G.gen_b)):
        return False

    one = Fraction(1)
    fixers = {g for g in G.elements if _alg_mul(G, {g: one}, e) == e}
    return fixers == G.core(K).elems


# ---------------------------------------------------------------------------
# simple components


@dataclass(frozen=True)
class SimpleComponent:
    """Symbolic Wedderburn component: matrix_size x matrix_size matrices
    over the cyclic algebra (Q(zeta_conductor)/center, sigma_x, zeta^y)."""

    matrix_size: int
    conductor: int
    x: int
    y: int
    center: FixedField
    total_degree: int
    q_dimension: int

    @property
    def action_subgroup(self) -> UnitSubgroup:
        return cyclic_subgroup(self.x, self.conductor)

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (self.q_dimension, self.total_degree, self.conductor, self.x, self.y)

    def to_json(self) -> dict:
        return {
            "matrix_size": self.matrix_size,
            "conductor": self.conductor,
            "x": self.x,
            "y": self.y,
            "center": self.center.to_json(),
            "degree": self.total_degree,
            "dim": self.q_dimension,
        }


def _dlog_mod_subgroup(G: MetacyclicGroup, target: El, u: El, idx: int,
                       K: Subgroup) -> int:
    cur = G.identity
    for e in range(idx):
        if G.mul(target, G.inv(cur)) in K.elems:
            return e
        cur = G.mul(cur, u)
    raise AssertionError("target lies in <u>K by construction")


def component_of(G: MetacyclicGroup, L: Subgroup, K: Subgroup) -> SimpleComponent:
    """Descriptor of the simple algebra attached to a strong Shoda pair.

    With N = N_G(K), u a generator of L/K and w a generator of the cyclic
    N/L: x is the conjugation exponent u^w = u^x mod K, y the twist
    w^[N:L] = u^y mod K, and the center is the fixed field of <x> in
    Q(zeta_[L:K]).  K is first moved to the smallest member of its
    conjugacy class so conjugate inputs yield identical descriptors (the
    twist depends on the representative, everything else does not).
    """
    if _qualifies(G, K) != L:
        raise ValueError("(L, K) is not a strong Shoda pair of G")
    K = min(_k_orbit(G, K), key=lambda S: S.sorted_elems)
    N = G.normalizer(K)
    idx = L.order // K.order
    u = _coset_generator(G, L, K)
    w = _coset_generator(G, N, L)

    x = _dlog_mod_subgroup(G, G.conj(u, w), u, idx, K)
    y = _dlog_mod_subgroup(G, G.power(w, N.order // L.order), u, idx, K)
    action = cyclic_subgroup(x, idx)
    if idx > 1 and math.gcd(x, idx) != 1:
        raise AssertionError("conjugation must act by a unit")

    matrix_size = G.order // N.order
    total_degree = G.order // L.order
    assert total_degree == matrix_size * action.order
    center = fixed_field(idx, action)
    return SimpleComponent(
        matrix_size=matrix_size,
        conductor=idx,
        x=x,
        y=y,
        center=center,
        total_degree=total_degree,
        q_dimension=total_degree * total_degree * center.degree,
    )


@lru_cache(maxsize=None)
def decomposition(G: MetacyclicGroup) -> tuple[SimpleComponent, ...]:
    """All Wedderburn components of the rational group algebra of G,
    sorted by (dimension, degree, conductor, action, twist)."""
    comps = [component_of(G, L, K) for L, K in strong_shoda_pairs(G)]
    comps.sort(key=SimpleComponent.sort_key)
    total = sum(c.q_dimension for c in comps)
    assert total == G.order, f"components span {total} of {G.order} dimensions"
    return tuple(comps)


def perlis_walker(abelian_invariants) -> tuple[tuple[int, int], ...]:
    """Multiset {(d, multiplicity of Q(zeta_d))} for the rational algebra
    of the abelian group with the given cyclic factors.  The multiplicity
    is the number of elements of order d divided by phi(d); conductors are
    reported raw (d = 2 mod 4 is not folded down)."""
    factors = [int(f) for f in abelian_invariants]
    if any(f < 1 for f in factors):
        raise ValueError("cyclic factors must be positive")
    exponent = lcm(*factors) if factors else 1
    exact: dict[int, int] = {}
    for d in divisors(exponent):
        below = math.prod(math.gcd(d, f) for f in factors)
        exact[d] = below - sum(exact[e] for e in divisors(d) if e != d)
    out = []
    for d in divisors(exponent):
        if exact[d]:
            assert exact[d] % phi(d) == 0
            out.append((d, exact[d] // phi(d)))
    return tuple(out)


def commutative_conductors(comps) -> tuple[tuple[int, int], ...]:
    """Multiset {(canonical conductor, multiplicity)} of the degree-1 slice."""
    counts: dict[int, int] = {}
    for c in comps:
        if c.total_degree == 1:
            counts[c.center.conductor] = counts.get(c.center.conductor, 0) + 1
    return tuple(sorted(counts.items()))


def perlis_walker_conductors(abelian_invariants) -> tuple[tuple[int, int], ...]:
    """Perlis-Walker multiset with conductors canonicalized and merged."""
    counts: dict[int, int] = {}
    for d, mult in perlis_walker(abelian_invariants):
        f = canonical_conductor(d)
        counts[f] = counts.get(f, 0) + mult
    return tuple(sorted(counts.items()))


# ---------------------------------------------------------------------------
# comparison

DIFFERENT = "DIFFERENT"
EQUAL = "EQUAL"
UNKNOWN = "UNKNOWN"


def fingerprint(comps) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
    """Multiset of (total_degree, center) with the center flattened to
    hashable canonical data."""
    return tuple(
        sorted(
            (c.total_degree, c.center.conductor, c.center.fixer.elements)
            for c in comps
        )
    )


def compare_algebras(G: MetacyclicGroup, H: MetacyclicGroup) -> str:
    """Conservative three-way comparison of rational group algebras.

    DIFFERENT needs only the (degree, center) fingerprints to disagree.
    EQUAL demands a bijection matching matrix size, conductor, action
    subgroup, twist and center exactly.  Anything in between is UNKNOWN:
    the descriptors cannot separate, e.g., the quaternion algebra from
    2 x 2 matrices, and we do not guess Brauer classes.
    """
    a, b = decomposition(G), decomposition(H)
    if fingerprint(a) != fingerprint(b):
        return DIFFERENT

    def full_key(c: SimpleComponent):
        return (
            c.matrix_size,
            c.conductor,
            c.action_subgroup.elements,
            c.y,
            c.center.conductor,
            c.center.fixer.elements,
        )

    if sorted(map(full_key, a)) == sorted(map(full_key, b)):
        return EQUAL
    return UNKNOWN
