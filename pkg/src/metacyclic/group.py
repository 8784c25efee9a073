"""Finite metacyclic groups and their subgroups.

A group here is given by the presentation

    G = <a, b | a^m = 1, b^n = a^s, b a b^-1 = a^t>

with gcd(t, m) = 1, t^n = 1 mod m and s(t - 1) = 0 mod m, so |G| = m n.
Elements are pairs (i, j) standing for a^i b^j with 0 <= i < m, 0 <= j < n.
Products, inverses, powers and element orders all use closed forms, so a
single operation costs O(log) arithmetic.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import cached_property
from typing import Iterable

from .numth import crt_exponent, divisors, geom_sum_mod, part, primes_of

El = tuple[int, int]


class MetacyclicGroup:
    def __init__(self, m: int, n: int, s: int = 0, t: int = 1):
        if m < 1 or n < 1:
            raise ValueError("m and n must be positive")
        s %= m
        t = t % m if m > 1 else 1
        if math.gcd(t, m) != 1:
            raise ValueError(f"t = {t} is not a unit mod m = {m}")
        if pow(t, n, m) != 1 % m:
            raise ValueError(f"t^n must be 1 mod m, got t = {t}")
        if s * (t - 1) % m != 0:
            raise ValueError("need s(t - 1) = 0 mod m so that b^n is central")
        self.m = m
        self.n = n
        self.s = s
        self.t = t
        self._tpow = tuple(pow(t, j, m) for j in range(n))

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.m, self.n, self.s, self.t)

    @property
    def order(self) -> int:
        return self.m * self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, MetacyclicGroup) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"MetacyclicGroup(m={self.m}, n={self.n}, s={self.s}, t={self.t})"

    # -- elements ---------------------------------------------------------

    @property
    def identity(self) -> El:
        return (0, 0)

    @property
    def gen_a(self) -> El:
        return (1 % self.m, 0)

    @property
    def gen_b(self) -> El:
        # n = 1 collapses b to a^s, so reduce into the a-coordinate.
        return (0, 1) if self.n > 1 else (self.s, 0)

    @cached_property
    def elements(self) -> tuple[El, ...]:
        return tuple((i, j) for i in range(self.m) for j in range(self.n))

    def mul(self, x: El, y: El) -> El:
        i = (x[0] + y[0] * self._tpow[x[1]]) % self.m
        j = x[1] + y[1]
        if j >= self.n:
            j -= self.n
            i = (i + self.s) % self.m
        return (i, j)

    def inv(self, x: El) -> El:
        i, j = x
        if j == 0:
            return (-i % self.m, 0)
        # (a^i b^j)^-1 = a^-(i+s) t^(n-j) b^(n-j), using b^-n = a^-s central.
        return (-(i + self.s) * self._tpow[self.n - j] % self.m, self.n - j)

    def power(self, x: El, k: int) -> El:
        if k < 0:
            return self.power(self.inv(x), -k)
        i, j = x
        exp = i * geom_sum_mod(self._tpow[j], k, self.m) + self.s * (j * k // self.n)
        return (exp % self.m, j * k % self.n)

    def conj(self, g: El, h: El) -> El:
        """h^-1 g h."""
        return self.mul(self.mul(self.inv(h), g), h)

    def comm(self, g: El, h: El) -> El:
        """g^-1 h^-1 g h."""
        return self.mul(self.inv(self.mul(h, g)), self.mul(g, h))

    def element_order(self, x: El) -> int:
        d = self.n // math.gcd(x[1], self.n)
        c = self.power(x, d)[0]
        return d * self.m // math.gcd(c, self.m)

    def element_part(self, x: El, primes) -> El:
        """The component of x of order supported on the given primes."""
        return self.power(x, crt_exponent(self.element_order(x), primes))

    def coset_order(self, x: El, K: "Subgroup") -> int:
        """Least k >= 1 with x^k in K; always a divisor of the order of x."""
        for d in divisors(self.element_order(x)):
            if self.power(x, d) in K.elems:
                return d
        raise AssertionError("x^|x| = 1 lies in K")

    # -- subgroups --------------------------------------------------------

    def subgroup(self, elems: Iterable[El], gens=None) -> "Subgroup":
        return Subgroup(self, frozenset(elems), gens)

    def generated(self, gens: Iterable[El]) -> "Subgroup":
        gens = tuple(gens)
        elems = {self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return Subgroup(self, frozenset(elems), gens)

    def cyclic_subgroup(self, x: El) -> "Subgroup":
        return self.generated([x])

    def cyclic_subgroups(self) -> tuple["Subgroup", ...]:
        seen: dict[frozenset, Subgroup] = {}
        for x in self.elements:
            S = self.cyclic_subgroup(x)
            seen.setdefault(S.elems, S)
        return tuple(sorted(seen.values(), key=lambda S: (S.order, S.sorted_elems)))

    def subgroups(self) -> tuple["Subgroup", ...]:
        """All subgroups.  Every subgroup is <a^d, a^e b^f> for some d | m,
        f | n and 0 <= e < d, so closing those candidate pairs is exhaustive."""
        a, b = self.gen_a, self.gen_b
        seen: dict[frozenset, Subgroup] = {}
        for d in divisors(self.m):
            ad = self.power(a, d)
            S = self.generated([ad])
            seen.setdefault(S.elems, S)
            for f in divisors(self.n):
                if f == self.n:
                    continue
                bf = self.power(b, f)
                for e in range(d):
                    S = self.generated([ad, self.mul((e, 0), bf)])
                    seen.setdefault(S.elems, S)
        return tuple(sorted(seen.values(), key=lambda S: (S.order, S.sorted_elems)))

    def l_subgroup(self, d: int) -> "Subgroup":
        """<a, b^d>, which only depends on gcd(d, n)."""
        g = math.gcd(d, self.n)
        elems = frozenset((i, j) for i in range(self.m) for j in range(0, self.n, g))
        return Subgroup(self, elems, (self.gen_a, self.power(self.gen_b, d)))

    def conjugate_subgroup(self, S: "Subgroup", x: El) -> "Subgroup":
        return Subgroup(self, frozenset(self.conj(g, x) for g in S.elems),
                        tuple(self.conj(g, x) for g in S.gens))

    def normalizer(self, S: "Subgroup") -> "Subgroup":
        elems = [x for x in self.elements
                 if all(self.conj(g, x) in S.elems for g in S.gens)]
        return Subgroup(self, frozenset(elems))

    def core(self, S: "Subgroup") -> "Subgroup":
        """Largest normal subgroup of G inside S: the elements whose whole
        conjugacy class stays in S."""
        gens = (self.gen_a, self.gen_b)
        keep = []
        for x in S.elems:
            orbit = {x}
            frontier = [x]
            inside = True
            while frontier and inside:
                new = []
                for y in frontier:
                    for g in gens:
                        z = self.conj(y, g)
                        if z not in S.elems:
                            inside = False
                            break
                        if z not in orbit:
                            orbit.add(z)
                            new.append(z)
                    if not inside:
                        break
                frontier = new
            if inside:
                keep.append(x)
        return Subgroup(self, frozenset(keep))

    def centralizer(self, xs: Iterable[El]) -> "Subgroup":
        xs = tuple(xs)
        elems = [g for g in self.elements if all(self.conj(x, g) == x for x in xs)]
        return Subgroup(self, frozenset(elems))

    def center(self) -> "Subgroup":
        return self.centralizer((self.gen_a, self.gen_b))

    def derived_subgroup(self) -> "Subgroup":
        return self.cyclic_subgroup((math.gcd(self.t - 1, self.m) % self.m, 0))

    def hall_subgroup(self, primes) -> "Subgroup":
        gens = (self.element_part(self.gen_a, primes),
                self.element_part(self.gen_b, primes))
        S = self.generated(gens)
        assert S.order == part(self.order, primes)
        return S

    def sylow_subgroup(self, p: int) -> "Subgroup":
        return self.hall_subgroup((p,))

    # -- structure --------------------------------------------------------

    def conjugacy_classes(self) -> tuple[frozenset, ...]:
        gens = (self.gen_a, self.gen_b)
        remaining = set(self.elements)
        classes = []
        while remaining:
            x = min(remaining)
            orbit = {x}
            frontier = [x]
            while frontier:
                new = []
                for y in frontier:
                    for g in gens:
                        z = self.conj(y, g)
                        if z not in orbit:
                            orbit.add(z)
                            new.append(z)
                frontier = new
            classes.append(frozenset(orbit))
            remaining -= orbit
        return tuple(sorted(classes, key=lambda c: min(c)))

    def abelianization_invariants(self) -> tuple[int, ...]:
        """Invariant factors of G/[G,G], from the Smith form of the
        relation matrix [[gcd(t-1,m), 0], [-s, n]]."""
        g = math.gcd(self.t - 1, self.m)
        d1 = math.gcd(g, math.gcd(self.s, self.n))
        d2 = g * self.n // d1
        return tuple(d for d in (d1, d2) if d > 1)

    def order_profile(self) -> tuple[tuple[int, int], ...]:
        counts = Counter(self.element_order(x) for x in self.elements)
        return tuple(sorted(counts.items()))

    def brute_force_isomorphic(self, other: "MetacyclicGroup") -> bool:
        """Search for images of (a, b) in `other` satisfying the defining
        relations and generating it.  Ground truth for isomorphism tests."""
        if self.order != other.order:
            return False
        if self.order_profile() != other.order_profile():
            return False
        ord_a = self.m
        ord_b = self.element_order(self.gen_b)
        alphas = [x for x in other.elements if other.element_order(x) == ord_a]
        betas = [x for x in other.elements if other.element_order(x) == ord_b]
        for alpha in alphas:
            at = other.power(alpha, self.t)
            as_ = other.power(alpha, self.s)
            for beta in betas:
                if other.power(beta, self.n) != as_:
                    continue
                if other.mul(beta, alpha) != other.mul(at, beta):
                    continue
                if other.generated([alpha, beta]).order == other.order:
                    return True
        return False


class Subgroup:
    """A subgroup, stored by its element set plus a generating tuple."""

    def __init__(self, group: MetacyclicGroup, elems: frozenset, gens=None):
        self.group = group
        self.elems = frozenset(elems)
        self.gens = tuple(gens) if gens is not None else tuple(sorted(self.elems))

    @property
    def order(self) -> int:
        return len(self.elems)

    @property
    def index(self) -> int:
        return self.group.order // len(self.elems)

    @cached_property
    def sorted_elems(self) -> tuple[El, ...]:
        return tuple(sorted(self.elems))

    @cached_property
    def generator(self) -> El | None:
        """Smallest element of full order, None when the subgroup is not cyclic."""
        k = self.order
        for x in self.sorted_elems:
            if self.group.element_order(x) == k:
                return x
        return None

    @property
    def is_cyclic(self) -> bool:
        return self.generator is not None

    @cached_property
    def is_normal(self) -> bool:
        G = self.group
        return all(G.conj(g, c) in self.elems
                   for g in self.gens for c in (G.gen_a, G.gen_b))

    @cached_property
    def is_abelian(self) -> bool:
        G = self.group
        return all(G.mul(x, y) == G.mul(y, x) for x in self.gens for y in self.gens)

    def __contains__(self, x: El) -> bool:
        return x in self.elems

    def __le__(self, other: "Subgroup") -> bool:
        return self.elems <= other.elems

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and self.group.key == other.group.key
                and self.elems == other.elems)

    def __hash__(self) -> int:
        return hash((self.group.key, self.elems))

    def __iter__(self):
        return iter(self.sorted_elems)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, gens={self.gens})"


def cocyclic_triples(g_ord: int, h_ord: int, p: int) -> list[tuple[int, int, int]]:
    """Parameters (i, y, x) of the subgroups K of <g> x <h> with cyclic
    quotient, for a p-group with |g| = g_ord >= h_ord = |h|.

    i = 1: K = <g h^x, h^y> with y | |h| and 1 <= x <= y.
    i = 2: K = <g^x h, g^y> with y | |g|, p | x, p | y, x <= y and y | |h| x.
    The index [L : K] is y in both cases, and distinct parameters give
    distinct subgroups.
    """
    if g_ord < h_ord:
        raise ValueError("need |g| >= |h|")
    out = []
    for y in divisors(h_ord):
        out.extend((1, y, x) for x in range(1, y + 1))
    for y in divisors(g_ord):
        if y % p:
            continue
        out.extend((2, y, x) for x in range(p, y + 1, p) if (h_ord * x) % y == 0)
    return out


def cocyclic_subgroup_from_triple(G: MetacyclicGroup, g: El, h: El,
                                  triple: tuple[int, int, int]) -> Subgroup:
    i, y, x = triple
    if i == 1:
        return G.generated([G.mul(g, G.power(h, x)), G.power(h, y)])
    return G.generated([G.mul(G.power(g, x), h), G.power(g, y)])


def _product_subgroup(G: MetacyclicGroup, S1: Subgroup, S2: Subgroup) -> Subgroup:
    """Product of two subgroups that centralize each other."""
    elems = {G.mul(x, y) for x in S1.elems for y in S2.elems}
    return Subgroup(G, frozenset(elems), S1.gens + S2.gens)


def cocyclic_subgroups_of_product(G: MetacyclicGroup, g: El, h: El) -> list[Subgroup]:
    """Subgroups with cyclic quotient of the abelian group <g> x <h>.

    The intersection <g> meet <h> must be trivial.  Works prime by prime
    through the triple parametrization, then multiplies the local pieces
    back together.
    """
    A = G.generated([g, h])
    assert G.element_order(g) * G.element_order(h) == A.order
    result = [Subgroup(G, frozenset([G.identity]), (G.identity,))]
    for p in sorted(primes_of(A.order)):
        gp = G.element_part(g, (p,))
        hp = G.element_part(h, (p,))
        if G.element_order(gp) < G.element_order(hp):
            gp, hp = hp, gp
        local = [cocyclic_subgroup_from_triple(G, gp, hp, tr)
                 for tr in cocyclic_triples(G.element_order(gp),
                                            G.element_order(hp), p)]
        result = [_product_subgroup(G, S, K) for S in result for K in local]
    return result
