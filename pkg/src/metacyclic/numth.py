"""Exact elementary number theory and subgroups of the units modulo n.

Everything here is plain integer arithmetic; factorisations use trial
division, which is ample for the group orders this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[tuple[int, int], ...]:
    """Factor n >= 1 into sorted (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def primes_of(n: int) -> frozenset[int]:
    return frozenset(p for p, _ in prime_factors(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Sorted positive divisors of n."""
    out = [1]
    for p, e in prime_factors(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return tuple(sorted(out))


def vp(n: int, p: int) -> int:
    """Exponent of the prime p in n (n != 0)."""
    if n == 0:
        raise ValueError("vp(0, p) is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def p_part(n: int, p: int) -> int:
    return p ** vp(n, p)


def part(n: int, primes) -> int:
    """Largest divisor of n supported on the given prime set."""
    out = 1
    ps = set(primes)
    for p, e in prime_factors(n):
        if p in ps:
            out *= p**e
    return out


def coprime_part(n: int, primes) -> int:
    """Largest divisor of n coprime to every prime in the set."""
    return n // part(n, primes)


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    out = 1
    for p, e in prime_factors(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def mult_order(x: int, n: int) -> int:
    """Least k >= 1 with x^k = 1 mod n; order 1 when n == 1."""
    if n == 1:
        return 1
    x %= n
    if math.gcd(x, n) != 1:
        raise ValueError(f"{x} is not a unit mod {n}")
    # The order divides phi(n); walk the divisors in increasing order.
    for d in divisors(phi(n)):
        if pow(x, d, n) == 1:
            return d
    raise AssertionError("order must divide phi(n)")


def geom_sum(x: int, n: int) -> int:
    """1 + x + ... + x^(n-1), with the x = 1 case handled exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if x == 1:
        return n
    return (x**n - 1) // (x - 1)


def geom_sum_mod(x: int, n: int, mod: int) -> int:
    """geom_sum(x, n) reduced mod `mod`, without big intermediates."""
    if mod == 1:
        return 0
    if n == 0:
        return 0
    half = geom_sum_mod(x, n // 2, mod)
    total = half * (1 + pow(x, n // 2, mod)) % mod
    if n % 2:
        total = (total + pow(x, n - 1, mod)) % mod
    return total


def power_valuations(r: int, m: int, p: int) -> tuple[int, int, int]:
    """Closed forms for v_p(r^m - 1), v_p(1 + r + ... + r^(m-1)) and the
    multiplicative order of r mod p^m.

    Requires r > 1, m >= 1 and r = 1 mod p.
    """
    if r <= 1 or m < 1:
        raise ValueError("need r > 1 and m >= 1")
    d = vp(r - 1, p)
    if d < 1:
        raise ValueError("need r = 1 mod p")
    if p != 2 or d >= 2:
        v1 = d + vp(m, p)
        v2 = vp(m, p)
        order = p ** max(0, m - d)
    else:
        e = vp(r + 1, 2)
        if m % 2 == 0:
            v1 = e + vp(m, 2)
            v2 = v1 - 1
        else:
            v1 = 1
            v2 = 0
        order = 1 if m <= 1 else 2 ** max(1, m - e)
    return v1, v2, order


@lru_cache(maxsize=None)
def units(n: int) -> tuple[int, ...]:
    """Residues of the unit group mod n; (0,) for the degenerate modulus 1."""
    if n == 1:
        return (0,)
    return tuple(x for x in range(1, n) if math.gcd(x, n) == 1)


@dataclass(frozen=True, order=True)
class UnitSubgroup:
    """A subgroup of the units mod `modulus`, stored as a sorted residue tuple.

    `generator` is the smallest residue generating the subgroup, or None when
    the subgroup is not cyclic.  Modulus 1 is the trivial group, by convention
    stored as the single residue 0.
    """

    modulus: int
    elements: tuple[int, ...]
    generator: int | None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_cyclic(self) -> bool:
        return self.generator is not None

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __contains__(self, x: int) -> bool:
        return x % self.modulus in self.elements if self.modulus > 1 else True

    def canonical_generator(self) -> int:
        if self.generator is None:
            raise ValueError("subgroup is not cyclic")
        return self.generator


@lru_cache(maxsize=None)
def _canonical(modulus: int, elements: tuple[int, ...]) -> UnitSubgroup:
    if modulus == 1:
        return UnitSubgroup(1, (0,), 0)
    k = len(elements)
    gen = None
    for x in elements:
        if mult_order(x, modulus) == k:
            gen = x
            break
    return UnitSubgroup(modulus, elements, gen)


def unit_subgroup(modulus: int, elements) -> UnitSubgroup:
    """Wrap an already multiplicatively closed residue set."""
    if modulus == 1:
        return _canonical(1, (0,))
    elems = sorted({x % modulus for x in elements} | {1})
    for x in elems:
        if math.gcd(x, modulus) != 1:
            raise ValueError(f"{x} is not a unit mod {modulus}")
    sub = tuple(elems)
    closed = {(a * b) % modulus for a in sub for b in sub}
    if closed != set(sub):
        raise ValueError("element set is not multiplicatively closed")
    return _canonical(modulus, sub)


def from_generators(modulus: int, gens) -> UnitSubgroup:
    """Subgroup of the units mod `modulus` generated by the given residues."""
    if modulus == 1:
        return _canonical(1, (0,))
    elems = {1}
    frontier = [1]
    gs = [g % modulus for g in gens]
    for g in gs:
        if math.gcd(g, modulus) != 1:
            raise ValueError(f"{g} is not a unit mod {modulus}")
    while frontier:
        new = []
        for x in frontier:
            for g in gs:
                y = (x * g) % modulus
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return _canonical(modulus, tuple(sorted(elems)))


def trivial_subgroup(modulus: int) -> UnitSubgroup:
    return from_generators(modulus, [])


def full_unit_group(modulus: int) -> UnitSubgroup:
    if modulus == 1:
        return _canonical(1, (0,))
    return _canonical(modulus, units(modulus))


def cyclic_subgroup(t: int, modulus: int) -> UnitSubgroup:
    """The cyclic subgroup generated by t mod `modulus`."""
    return from_generators(modulus, [t])


def restrict(sub: UnitSubgroup, q: int) -> UnitSubgroup:
    """Image of the subgroup under reduction mod q (q must divide the modulus)."""
    if q < 1 or sub.modulus % q != 0:
        raise ValueError(f"{q} does not divide the modulus {sub.modulus}")
    if q == 1:
        return _canonical(1, (0,))
    if sub.modulus == 1:
        raise ValueError("cannot restrict the modulus-1 group to a larger modulus")
    return _canonical(q, tuple(sorted({x % q for x in sub.elements})))


@lru_cache(maxsize=None)
def cyclic_subgroups(modulus: int) -> tuple[UnitSubgroup, ...]:
    """All cyclic subgroups of the units mod `modulus`, sorted."""
    return tuple(sorted({cyclic_subgroup(t, modulus) for t in units(modulus)}))


def cyclic_subgroups_mod2k(d: int) -> tuple[UnitSubgroup, ...]:
    """All cyclic subgroups of the units mod a power of two.

    For 4 | d these are exactly the subgroups generated by 1 + r and -1 + r
    for divisors r of d with 4 | r; there are 2(log2(d) - 1) of them.
    """
    if d < 1 or d & (d - 1):
        raise ValueError("modulus must be a power of two")
    if d <= 2:
        return (trivial_subgroup(d),)
    found = set()
    for r in divisors(d):
        if r % 4 == 0:
            found.add(cyclic_subgroup((1 + r) % d, d))
            found.add(cyclic_subgroup((-1 + r) % d, d))
    return tuple(sorted(found))


def crt_exponent(order: int, primes) -> int:
    """Exponent e with e = 1 mod the `primes`-part of `order` and e = 0 mod
    the complementary part.  Raising a group element of that order to e
    extracts its `primes`-part."""
    a = part(order, primes)
    b = order // a
    if a == 1:
        return 0
    if b == 1:
        return 1
    # e = b * (b^{-1} mod a)
    return b * pow(b, -1, a)


def lcm(*values: int) -> int:
    return reduce(math.lcm, values, 1)
