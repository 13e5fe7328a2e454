"""
Integer and multiplicative-group infrastructure
Factorization, unit-group structure mod q, discrete logarithms, prime sieve
"""

import logging
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Dict, List, Tuple

import numpy as np

from config import Limits
from numtheory.errors import DomainError, ResourceLimitError

logger = logging.getLogger(__name__)

# Deterministic Miller-Rabin witnesses, valid below 3.3e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test"""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p

    # Write n-1 as 2^r · d
    r, d = 0, n - 1
    while d % 2 == 0:
        r += 1
        d //= 2

    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Pollard's rho with Brent cycle detection; n is odd composite"""
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs"""
    n: int
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.pairs]

    def prime_powers(self) -> List[int]:
        return [p**k for p, k in self.pairs]

    def value(self) -> int:
        return reduce(lambda acc, pk: acc * pk[0] ** pk[1], self.pairs, 1)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """
    Factor n by trial division up to 10^3, then Miller-Rabin + Pollard rho
    """
    if n < 2:
        raise DomainError(f"factorize requires n >= 2, got {n}")
    if n > Limits.MAX_FACTOR:
        raise ResourceLimitError(f"factorize supports n <= 2^63 - 1, got {n}")

    counts: Dict[int, int] = {}
    rest = n
    d = 2
    while d <= Limits.TRIAL_DIVISION_BOUND and d * d <= rest:
        while rest % d == 0:
            counts[d] = counts.get(d, 0) + 1
            rest //= d
        d += 1 if d == 2 else 2

    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        divisor = _pollard_rho(m)
        stack.extend((divisor, m // divisor))

    return Factorization(n=n, pairs=tuple(sorted(counts.items())))


def divisors(n: int) -> List[int]:
    """All positive divisors of n in ascending order"""
    if n == 1:
        return [1]
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def euler_phi(q: int) -> int:
    """Order of the unit group (Z/qZ)*"""
    if q < 1:
        raise DomainError(f"euler_phi requires q >= 1, got {q}")
    if q == 1:
        return 1
    phi = 1
    for p, k in factorize(q):
        phi *= (p - 1) * p ** (k - 1)
    return phi


@lru_cache(maxsize=1024)
def primitive_root(pk: int) -> int:
    """Least primitive root of an odd prime power p^k"""
    p, k = factorize(pk).pairs[0]
    if p == 2:
        raise DomainError("(Z/2^kZ)* is not cyclic for k >= 3; use the {-1, 5} structure")
    cofactors = [(p - 1) // r for r in factorize(p - 1).primes]
    g = next(g for g in range(2, p + 1) if all(pow(g, c, p) != 1 for c in cofactors))
    if k > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _power_table(g: int, order: int, modulus: int) -> np.ndarray:
    """g^0, g^1, ..., g^(order-1) mod modulus, in blocks of sqrt(order) steps"""
    block = max(1, math.isqrt(order))
    head = np.empty(block, dtype=np.int64)
    acc = 1
    for j in range(block):
        head[j] = acc
        acc = acc * g % modulus
    stride = acc
    rows = -(-order // block)
    out = np.empty(rows * block, dtype=np.int64)
    factor = 1
    for i in range(rows):
        out[i * block:(i + 1) * block] = head * factor % modulus
        factor = factor * stride % modulus
    return out[:order]


@dataclass
class _Component:
    """One cyclic factor of (Z/qZ)*: generator mod q, its order, local log table"""
    prime: int
    prime_power: int
    generator: int
    order: int
    local_log: np.ndarray = field(repr=False)


def _odd_components(p: int, k: int) -> List[Tuple[int, int, np.ndarray]]:
    pk = p**k
    g = primitive_root(pk)
    order = (p - 1) * p ** (k - 1)
    table = np.full(pk, -1, dtype=np.int64)
    table[_power_table(g, order, pk)] = np.arange(order, dtype=np.int64)
    return [(g, order, table)]


def _two_components(k: int) -> List[Tuple[int, int, np.ndarray]]:
    m = 2**k
    if k == 1:
        return []
    if k == 2:
        table = np.full(4, -1, dtype=np.int64)
        table[1], table[3] = 0, 1
        return [(3, 2, table)]

    order5 = 2 ** (k - 2)
    powers = _power_table(5, order5, m)
    sign_log = np.full(m, -1, dtype=np.int64)
    five_log = np.full(m, -1, dtype=np.int64)
    exps = np.arange(order5, dtype=np.int64)
    sign_log[powers] = 0
    five_log[powers] = exps
    negated = (m - powers) % m
    sign_log[negated] = 1
    five_log[negated] = exps
    return [(m - 1, 2, sign_log), (5, order5, five_log)]


def _crt_lift(local: int, pk: int, q: int) -> int:
    """The residue mod q that is `local` mod pk and 1 mod q/pk"""
    rest = q // pk
    if rest == 1:
        return local % q
    return (local * rest * pow(rest, -1, pk) + pk * pow(pk, -1, rest)) % q


class UnitGroup:
    """
    CRT decomposition of (Z/qZ)* into cyclic components with a discrete-log table
    """

    def __init__(self, q: int):
        if q < 1:
            raise DomainError(f"unit_group requires q >= 1, got {q}")
        if q > Limits.MAX_MODULUS:
            raise ResourceLimitError(f"unit group tables are limited to q <= {Limits.MAX_MODULUS}, got {q}")

        self.q = q
        self.components: List[_Component] = []
        if q > 2:
            for p, k in factorize(q):
                pk = p**k
                parts = _two_components(k) if p == 2 else _odd_components(p, k)
                for local_gen, order, table in parts:
                    self.components.append(
                        _Component(p, pk, _crt_lift(local_gen, pk, q), order, table)
                    )

        self.generators = tuple(c.generator for c in self.components)
        self.orders = tuple(c.order for c in self.components)
        self.phi = math.prod(self.orders)
        self.exponent = math.lcm(*self.orders) if self.orders else 1
        self.unit_mask = np.gcd(np.arange(q, dtype=np.int64), q) == 1
        self.log_table = self._build_log_table()
        logger.debug("unit group mod %d: generators=%s orders=%s", q, self.generators, self.orders)

    def _build_log_table(self) -> np.ndarray:
        """Row n holds the exponent vector of n, or -1 entries when gcd(n, q) > 1"""
        residues = np.arange(self.q, dtype=np.int64)
        table = np.zeros((self.q, len(self.components)), dtype=np.int64)
        for i, comp in enumerate(self.components):
            table[:, i] = comp.local_log[residues % comp.prime_power]
        table[~self.unit_mask] = -1
        return table

    @property
    def rank(self) -> int:
        return len(self.components)

    def is_unit(self, n: int) -> bool:
        return math.gcd(n, self.q) == 1

    def log(self, n: int) -> Tuple[int, ...]:
        """Exponent vector of the unit n"""
        if not self.is_unit(n):
            raise DomainError(f"{n} is not a unit mod {self.q}")
        return tuple(int(e) for e in self.log_table[n % self.q])

    def element(self, exps) -> int:
        """Reconstruct prod g_i^e_i mod q"""
        value = 1 % self.q
        for g, e in zip(self.generators, exps):
            value = value * pow(g, int(e), self.q) % self.q
        return value if self.q > 1 else 0

    def units(self) -> np.ndarray:
        return np.flatnonzero(self.unit_mask)


@lru_cache(maxsize=64)
def unit_group(q: int) -> UnitGroup:
    return UnitGroup(q)


@dataclass(frozen=True)
class PrimeList:
    """Ascending primes up to a bound"""
    bound: float
    primes: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes.tolist())

    def __getitem__(self, item):
        return self.primes[item]

    def tolist(self) -> List[int]:
        return self.primes.tolist()


@lru_cache(maxsize=32)
def _sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime_mask = np.ones(limit + 1, dtype=bool)
    is_prime_mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime_mask[p]:
            is_prime_mask[p * p::p] = False
    primes = np.flatnonzero(is_prime_mask).astype(np.int64)
    primes.flags.writeable = False
    return primes


def primes_up_to(y: float) -> PrimeList:
    """Eratosthenes sieve; bounds below 2 give an empty list"""
    if y > Limits.MAX_SIEVE:
        raise ResourceLimitError(f"sieve limited to y <= {Limits.MAX_SIEVE}, got {y}")
    limit = int(math.floor(y))
    return PrimeList(bound=y, primes=_sieve(max(limit, 1)))


def primes_between(y1: float, y2: float) -> np.ndarray:
    """Primes p with y1 < p <= y2"""
    primes = primes_up_to(y2).primes
    return primes[primes > y1]
