"""Integer-side number theory: primality, budgeted factoring, orders, CRT.

Everything operates on plain Python ints. Factoring is budgeted so callers
can bound work on large inputs: trial division runs below a fixed bound,
then Brent-cycle Pollard rho consumes the remaining budget, counted in
f-evaluations. A Factorization records what was proven and whether the
job finished; order computations refuse incomplete factorizations rather
than silently returning multiples.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

DEFAULT_BUDGET = 1 << 26  # rho f-evaluations per factor() call
TRIAL_DIVISION_BOUND = 10 ** 6

# Below 2^64 these witnesses decide primality deterministically.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 1 << 64
_MR_ROUNDS = 64


class InvalidModulus(ValueError):
    pass


class IncompleteFactorization(ValueError):
    pass


class NotAUnit(ValueError):
    pass


class DNotPrime(ValueError):
    pass


class NotCoprime(ValueError):
    pass


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus for exp >= 0, modulus >= 1."""
    if modulus < 1:
        raise InvalidModulus(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, modulus)


def _mr_round(n: int, a: int, d: int, s: int) -> bool:
    # one Miller-Rabin round; True means "probably prime for this witness"
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rng: random.Random | None = None) -> bool:
    """Miller-Rabin primality test.

    Deterministic witness set below 2^64; above that, 64 rounds with
    witnesses drawn from ``rng`` (a seeded default keeps results
    reproducible when no source is supplied).
    """
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_mr_round(n, a, d, s) for a in _MR_WITNESSES)
    if rng is None:
        rng = random.Random(n & 0xFFFFFFFFFFFFFFFF)
    for _ in range(_MR_ROUNDS):
        a = rng.randrange(2, n - 1)
        if not _mr_round(n, a, d, s):
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Partial or complete factorization of ``n``.

    factors maps proven primes to multiplicities; cofactor is the
    unfactored remainder (1 when the factorization is complete).
    """

    n: int
    factors: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def primes(self) -> list[int]:
        return sorted(self.factors)

    def check(self) -> bool:
        prod = self.cofactor
        for p, e in self.factors.items():
            prod *= p ** e
        return prod == self.n


@lru_cache(maxsize=None)
def _small_primes() -> tuple[int, ...]:
    bound = TRIAL_DIVISION_BOUND
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(bound) if sieve[i])


def _rho_brent(n: int, budget: int) -> tuple[int | None, int]:
    """Find one nontrivial factor of odd composite n, or give up.

    Brent's cycle variant with gcd batched over 128 accumulated
    differences. Returns (factor_or_None, f_evaluations_used).
    """
    used = 0
    c = 1
    while used < budget:
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1 and used < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            used += r
            k = 0
            while k < r and g == 1 and used < budget:
                ys = y
                steps = min(128, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                used += steps
                g = math.gcd(q, n)
                k += steps
        if g == n:
            # batch collapsed; replay single steps from the saved point
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                used += 1
                g = math.gcd(x - ys, n)
        if 1 < g < n:
            return g, used
        c += 1  # cycle found only trivial gcd, retry with a new constant
    return None, used


@lru_cache(maxsize=512)
def factor(n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Factor n >= 1 within a work budget.

    Trial division below 10^6 first, then budgeted Brent rho on what
    remains. Composite leftovers end up multiplied into ``cofactor``.
    """
    if n < 1:
        raise ValueError("factor() wants n >= 1")
    found: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    cofactor = 1
    remaining = budget
    while stack:
        m = stack.pop()
        if m < TRIAL_DIVISION_BOUND ** 2 or is_prime(m):
            # below the trial bound squared anything surviving is prime
            found[m] = found.get(m, 0) + 1
            continue
        f, used = _rho_brent(m, remaining)
        remaining -= used
        if f is None:
            cofactor *= m
            continue
        stack.append(f)
        stack.append(m // f)
    return Factorization(n, found, cofactor)


def mult_order(g: int, modulus: int, fact: Factorization) -> int:
    """Multiplicative order of g mod modulus.

    ``fact`` must be a complete factorization of some multiple of the
    order (typically the group order).
    """
    if not fact.complete:
        raise IncompleteFactorization(
            f"need a complete factorization, cofactor {fact.cofactor} remains"
        )
    g %= modulus
    if math.gcd(g, modulus) != 1:
        raise NotAUnit(f"{g} is not a unit mod {modulus}")
    order = fact.n
    if pow(g, order, modulus) != 1:
        raise ValueError("claimed group order does not annihilate g")
    for p in fact.factors:
        while order % p == 0 and pow(g, order // p, modulus) == 1:
            order //= p
    return order


def is_primitive_mod(q: int, d: int) -> bool:
    """Is q a generator of (Z/dZ)* for prime d?"""
    if not is_prime(d):
        raise DNotPrime(f"d must be prime, got {d}")
    r = q % d
    if r == 0:
        raise NotAUnit(f"{q} is divisible by {d}")
    return mult_order(r, d, factor(d - 1)) == d - 1


def integer_crt(residues: list[int], moduli: list[int]) -> int:
    """Chinese remainder lift for pairwise coprime moduli."""
    if len(residues) != len(moduli) or not moduli:
        raise ValueError("residues and moduli must be equal-length, nonempty")
    x = residues[0] % moduli[0]
    m = moduli[0]
    for r, mi in zip(residues[1:], moduli[1:]):
        if mi < 1:
            raise ValueError("moduli must be >= 1")
        if math.gcd(m, mi) != 1:
            raise NotCoprime(f"moduli are not pairwise coprime (gcd with {mi} > 1)")
        t = (r - x) * pow(m, -1, mi) % mi
        x += m * t
        m *= mi
    return x % m
