"""
Dirichlet characters mod q and other completely multiplicative functions
Characters are exponent vectors over the CRT generators of (Z/qZ)*; values stay
exact rational angles until they are converted to complex doubles for summation.
"""

import itertools
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from numtheory.arithmetic import UnitGroup, primes_up_to, unit_group
from numtheory.errors import DomainError

logger = logging.getLogger(__name__)

EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class RationalAngle:
    """The unit complex number e(a/b) = exp(2πi a/b), with 0 <= a < b and gcd(a, b) = 1"""
    numerator: int
    denominator: int

    @classmethod
    def of(cls, a: int, b: int = 1) -> "RationalAngle":
        if b < 1:
            raise DomainError(f"angle denominator must be >= 1, got {b}")
        frac = Fraction(a % b, b)
        return cls(frac.numerator, frac.denominator)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __mul__(self, other: "RationalAngle") -> "RationalAngle":
        total = self.fraction + other.fraction
        return RationalAngle.of(total.numerator, total.denominator)

    def __pow__(self, k: int) -> "RationalAngle":
        return RationalAngle.of(self.numerator * k, self.denominator)

    def conjugate(self) -> "RationalAngle":
        return RationalAngle.of(-self.numerator, self.denominator)

    def to_complex(self) -> complex:
        return complex(unit_roots(self.denominator)[self.numerator])


@lru_cache(maxsize=256)
def unit_roots(denominator: int) -> np.ndarray:
    """
    e(k/denominator) for k = 0..denominator-1.
    Quarter turns are exact and roots[-k] is the bitwise conjugate of roots[k].
    """
    k = np.arange(denominator)
    roots = np.empty(denominator, dtype=complex)
    half = k[: denominator // 2 + 1]
    roots[half] = np.exp(2j * np.pi * half / denominator)
    mirrored = k[1: (denominator + 1) // 2]
    roots[denominator - mirrored] = np.conj(roots[mirrored])
    exact = {0: 1.0, 1: 1j, 2: -1.0, 3: -1j}
    quarter = (4 * k) % denominator == 0
    roots[quarter] = [exact[int(4 * j // denominator)] for j in k[quarter]]
    roots.flags.writeable = False
    return roots


class MultiplicativeFunction(ABC):
    """
    Completely multiplicative f with f(1) = 1 and |f(n)| <= 1
    """

    @property
    @abstractmethod
    def label(self) -> str:
        """Short text id used in reports"""

    @abstractmethod
    def prime_values(self, primes: np.ndarray) -> np.ndarray:
        """f(p) for each prime in the array"""

    def values_at(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns, dtype=np.int64)
        if ns.size == 0:
            return np.zeros(0, dtype=complex)
        return self.values_upto(int(ns.max()))[ns]

    def value(self, n: int) -> complex:
        return complex(self.values_at(np.array([n]))[0])

    def values_upto(self, y: int) -> np.ndarray:
        """Array v with v[n] = f(n) for 1 <= n <= y and v[0] = 0"""
        cache: Dict[int, np.ndarray] = self.__dict__.setdefault("_values_cache", {})
        for bound, vals in cache.items():
            if bound >= y:
                return vals[:y + 1]

        vals = np.ones(y + 1, dtype=complex)
        vals[0] = 0
        primes = primes_up_to(y).primes
        for p, fp in zip(primes.tolist(), self.prime_values(primes).tolist()):
            pk = p
            while pk <= y:
                vals[pk::pk] *= fp
                pk *= p
        vals.flags.writeable = False
        cache.clear()
        cache[y] = vals
        return vals

    def __call__(self, n: int) -> complex:
        return self.value(n)


class ConstantOne(MultiplicativeFunction):
    """The constant function 1"""

    @property
    def label(self) -> str:
        return "1"

    def prime_values(self, primes: np.ndarray) -> np.ndarray:
        return np.ones(len(primes), dtype=complex)

    def values_upto(self, y: int) -> np.ndarray:
        vals = np.ones(y + 1, dtype=complex)
        vals[0] = 0
        return vals


class RandomUnimodular(MultiplicativeFunction):
    """
    Random completely multiplicative function: each prime gets an independent
    uniform point on the unit circle, drawn from a stream keyed by the prime's rank
    """

    BLOCK = 4096

    def __init__(self, seed: int):
        self.seed = int(seed)

    @property
    def label(self) -> str:
        return f"rand:{self.seed}"

    @lru_cache(maxsize=1024)
    def _block(self, index: int) -> np.ndarray:
        rng = np.random.default_rng([self.seed, index])
        return rng.random(self.BLOCK)

    def prime_angles(self, primes: np.ndarray) -> np.ndarray:
        primes = np.asarray(primes, dtype=np.int64)
        if primes.size == 0:
            return np.zeros(0)
        table = primes_up_to(int(primes.max())).primes
        ranks = np.searchsorted(table, primes)
        if np.any(table[np.minimum(ranks, len(table) - 1)] != primes):
            raise DomainError("prime_angles called with a non-prime argument")
        blocks = {b: self._block(b) for b in np.unique(ranks // self.BLOCK).tolist()}
        return np.array([blocks[r // self.BLOCK][r % self.BLOCK] for r in ranks.tolist()])

    def prime_values(self, primes: np.ndarray) -> np.ndarray:
        return np.exp(2j * np.pi * self.prime_angles(primes))

    def __eq__(self, other):
        return isinstance(other, RandomUnimodular) and other.seed == self.seed

    def __hash__(self):
        return hash(("rand", self.seed))


def _local_conductor(prime_power: int, prime: int, orders: Sequence[int], exps: Sequence[int]) -> int:
    """Conductor contribution of one prime-power component"""
    local_orders = [d // math.gcd(c, d) for c, d in zip(exps, orders)]
    if prime != 2:
        (o,) = local_orders
        if o == 1:
            return 1
        v = 0
        while o % prime == 0:
            o //= prime
            v += 1
        return prime ** (1 + v)

    if not local_orders:
        return 1
    if len(local_orders) == 1:
        return 4 if local_orders[0] > 1 else 1
    sign_order, five_order = local_orders
    if five_order == 1:
        return 4 if sign_order > 1 else 1
    return 4 * five_order


class Character(MultiplicativeFunction):
    """
    Dirichlet character mod q given by exponents c_i on the generators g_i:
    χ(∏ g_i^{e_i}) = e(Σ c_i e_i / d_i)
    """

    def __init__(self, group: UnitGroup, exps: Sequence[int]):
        if len(exps) != group.rank:
            raise DomainError(f"expected {group.rank} exponents mod {group.q}, got {len(exps)}")
        exps = tuple(int(c) % d for c, d in zip(exps, group.orders))
        self.group = group
        self.q = group.q
        self.exps = exps

        # Metadata is fixed at construction
        self.order = math.lcm(*(d // math.gcd(c, d) for c, d in zip(exps, group.orders))) if exps else 1
        self.parity = self._compute_parity()
        self.conductor = self._compute_conductor()

    def _compute_parity(self) -> str:
        if self.q <= 2:
            return EVEN
        minus_one = self.group.log(self.q - 1)
        L = self.group.exponent
        angle = sum(c * e * (L // d) for c, e, d in zip(self.exps, minus_one, self.group.orders)) % L
        return EVEN if angle == 0 else ODD

    def _compute_conductor(self) -> int:
        conductor = 1
        by_prime: Dict[Tuple[int, int], List[int]] = {}
        for i, comp in enumerate(self.group.components):
            by_prime.setdefault((comp.prime, comp.prime_power), []).append(i)
        for (prime, pk), idx in by_prime.items():
            conductor *= _local_conductor(
                pk, prime, [self.group.orders[i] for i in idx], [self.exps[i] for i in idx]
            )
        return conductor

    @property
    def label(self) -> str:
        return f"{self.q}:{'.'.join(map(str, self.exps))}"

    @property
    def is_principal(self) -> bool:
        return self.order == 1

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.q

    @property
    def is_even(self) -> bool:
        return self.parity == EVEN

    @property
    def is_odd(self) -> bool:
        return self.parity == ODD

    @cached_property
    def _weights(self) -> np.ndarray:
        L = self.group.exponent
        return np.array([c * (L // d) for c, d in zip(self.exps, self.group.orders)], dtype=np.int64)

    def angle_table(self) -> np.ndarray:
        """Exact numerators a(n) with χ(n) = e(a(n)/L), L the group exponent; -1 off units"""
        return self._angles

    @cached_property
    def _angles(self) -> np.ndarray:
        L = self.group.exponent
        if self.group.rank:
            angles = (self.group.log_table @ self._weights) % L
        else:
            angles = np.zeros(self.q, dtype=np.int64)
        angles[~self.group.unit_mask] = -1
        angles.flags.writeable = False
        return angles

    @cached_property
    def _period_values(self) -> np.ndarray:
        """χ(n) for n = 0..q-1 as complex doubles"""
        angles = self._angles
        vals = np.where(angles >= 0, unit_roots(self.group.exponent)[np.maximum(angles, 0)], 0)
        vals = vals.astype(complex)
        vals.flags.writeable = False
        return vals

    def evaluate(self, n: int) -> Optional[RationalAngle]:
        """χ(n) as an exact angle, or None when gcd(n, q) > 1"""
        a = int(self._angles[n % self.q])
        if a < 0:
            return None
        return RationalAngle.of(a, self.group.exponent)

    def values(self, ns) -> np.ndarray:
        ns = np.asarray(ns, dtype=np.int64)
        return self._period_values[ns % self.q]

    def values_at(self, ns) -> np.ndarray:
        return self.values(ns)

    def prime_values(self, primes: np.ndarray) -> np.ndarray:
        return self.values(primes)

    def values_upto(self, y: int) -> np.ndarray:
        vals = self.values(np.arange(y + 1))
        vals[0] = 0
        return vals

    def conj(self) -> "Character":
        return Character(self.group, [-c for c in self.exps])

    def __mul__(self, other: "Character") -> "Character":
        if other.q != self.q:
            raise DomainError("characters must share a modulus to be multiplied")
        return Character(self.group, [a + b for a, b in zip(self.exps, other.exps)])

    def __pow__(self, k: int) -> "Character":
        return Character(self.group, [c * k for c in self.exps])

    def __eq__(self, other):
        return isinstance(other, Character) and (self.q, self.exps) == (other.q, other.exps)

    def __hash__(self):
        return hash((self.q, self.exps))

    def __repr__(self):
        return f"Character({self.label}, order={self.order}, {self.parity}, conductor={self.conductor})"

    def is_induced_from(self, f: int) -> bool:
        """χ is induced by a character mod f: χ(n) = 1 on units n ≡ 1 mod f"""
        if self.q % f:
            return False
        residues = np.arange(self.q)
        mask = self.group.unit_mask & (residues % f == 1 % f)
        return bool(np.all(self._angles[mask] == 0))

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.q, self.exps)


# Module-level operations

def character(q: int, exps: Sequence[int]) -> Character:
    return Character(unit_group(q), exps)


def evaluate(chi: Character, n: int) -> Optional[RationalAngle]:
    return chi.evaluate(n)


def order(chi: Character) -> int:
    return chi.order


def parity(chi: Character) -> str:
    return chi.parity


def conductor(chi: Character) -> int:
    return chi.conductor


def _exponent_vectors(group: UnitGroup) -> Iterator[Tuple[int, ...]]:
    return itertools.product(*(range(d) for d in group.orders))


def enumerate_characters(q: int) -> List[Character]:
    """All φ(q) characters mod q, principal first"""
    if q < 1:
        raise DomainError(f"modulus must be >= 1, got {q}")
    group = unit_group(q)
    return [Character(group, exps) for exps in _exponent_vectors(group)]


def character_by_index(q: int, index: int) -> Character:
    group = unit_group(q)
    if not 0 <= index < group.phi:
        raise DomainError(f"character index must lie in [0, {group.phi}), got {index}")
    exps = next(itertools.islice(_exponent_vectors(group), index, None))
    return Character(group, exps)


def characters_of_order(q: int, g: int) -> List[Character]:
    """Primitive characters mod q of order exactly g"""
    if g < 1:
        raise DomainError(f"order must be >= 1, got {g}")
    group = unit_group(q)
    if group.exponent % g:
        return []
    found = []
    for exps in _exponent_vectors(group):
        k = math.lcm(*(d // math.gcd(c, d) for c, d in zip(exps, group.orders))) if exps else 1
        if k != g:
            continue
        chi = Character(group, exps)
        if chi.is_primitive:
            found.append(chi)
    return found


def primitive_characters(q: int) -> List[Character]:
    return [chi for chi in enumerate_characters(q) if chi.is_primitive]


@lru_cache(maxsize=16)
def odd_primitive_pool(m_max: int) -> Tuple[Character, ...]:
    """Primitive odd characters of conductor m <= m_max, ordered by (m, exponents)"""
    pool = []
    for m in range(3, m_max + 1):
        pool.extend(chi for chi in primitive_characters(m) if chi.is_odd)
    logger.debug("odd primitive pool up to %d: %d characters", m_max, len(pool))
    return tuple(pool)
