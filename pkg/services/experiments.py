"""
Experiment module for the character-sum lab
Family scans over odd-order characters and quadratic characters, with ψ selection
by pretentious distance and the full set of normalizations per character
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from config import Scan
from numtheory.arithmetic import is_prime, primes_between
from numtheory.characters import Character, character, characters_of_order, odd_primitive_pool
from numtheory.charsums import max_character_sum
from numtheory.errors import DomainError
from numtheory.polya import theorem1_ratio
from numtheory.pretense import distance_squared
from utils.parallel import ordered_map

logger = logging.getLogger(__name__)


def delta(g: int) -> float:
    """δ_g = 1 - (g/π) sin(π/g) for odd g >= 3"""
    if g < 3 or g % 2 == 0:
        raise DomainError(f"δ_g is defined for odd g >= 3, got {g}")
    return 1.0 - (g / math.pi) * math.sin(math.pi / g)


@dataclass(frozen=True)
class ScanRecord:
    """
    One character of a family scan. Every field follows from (q, char_exps, psi_modulus, psi_exps).
    """
    q: int
    char_exps: Tuple[int, ...]
    order: int
    parity: str
    conductor: int
    M: float
    psi_modulus: Optional[int] = None
    psi_exps: Optional[Tuple[int, ...]] = None
    dist_sq: Optional[float] = None
    t1_lhs: Optional[float] = None
    t1_rhs0: Optional[float] = None
    t1_ratio: Optional[float] = None
    epsilon: float = field(default=Scan.EPSILON, compare=False)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.q, self.char_exps)

    @property
    def M_over_sqrtq(self) -> float:
        return self.M / math.sqrt(self.q)

    @property
    def loglog_q(self) -> float:
        return math.log(math.log(self.q))

    @property
    def paley_norm(self) -> float:
        """M/(√q log log q)"""
        return self.M / (math.sqrt(self.q) * self.loglog_q)

    def growth_normalization(self, eps: float = 0.0) -> Optional[float]:
        """M/(√q (log log q)^{1-δ_g-ε}); only odd orders g >= 3 have a δ_g"""
        if self.order < 3 or self.order % 2 == 0:
            return None
        return self.M / (math.sqrt(self.q) * self.loglog_q ** (1.0 - delta(self.order) - eps))

    @property
    def gs_norm(self) -> Optional[float]:
        return self.growth_normalization(0.0)

    @property
    def gs_eps_norm(self) -> Optional[float]:
        return self.growth_normalization(self.epsilon)

    def to_dict(self) -> Dict[str, object]:
        """Fields in output column order, plus the ε normalization"""
        return {
            "q": self.q,
            "char_exps": list(self.char_exps),
            "order": self.order,
            "parity": self.parity,
            "conductor": self.conductor,
            "M": self.M,
            "M_over_sqrtq": self.M_over_sqrtq,
            "psi_modulus": self.psi_modulus,
            "psi_exps": None if self.psi_exps is None else list(self.psi_exps),
            "dist_sq": self.dist_sq,
            "t1_lhs": self.t1_lhs,
            "t1_rhs0": self.t1_rhs0,
            "t1_ratio": self.t1_ratio,
            "paley_norm": self.paley_norm,
            "gs_norm": self.gs_norm,
            "gs_eps_norm": self.gs_eps_norm,
        }


def nearest_odd_character(chi: Character, psi_conductor_max: int) -> Tuple[Character, float]:
    """
    Primitive odd ψ of conductor <= psi_conductor_max minimizing D(χ,ψ;log q)²;
    ties go to the smallest (m, exponents)
    """
    pool = odd_primitive_pool(psi_conductor_max)
    if not pool:
        raise DomainError(f"no primitive odd characters of conductor <= {psi_conductor_max}")
    y = math.log(chi.q)
    best, best_sq = pool[0], distance_squared(chi, pool[0], y).squared
    for psi in pool[1:]:
        d = distance_squared(chi, psi, y).squared
        if d < best_sq:
            best, best_sq = psi, d
    return best, best_sq


def build_record(chi: Character, psi: Optional[Character] = None, epsilon: float = Scan.EPSILON) -> ScanRecord:
    """Measure χ; with ψ given and χ even, also both sides of the lower bound"""
    M = max_character_sum(chi)
    extra = {}
    if psi is not None:
        bound = theorem1_ratio(chi, psi)
        extra = dict(
            psi_modulus=psi.q, psi_exps=psi.exps, dist_sq=bound.dist_sq,
            t1_lhs=bound.lhs, t1_rhs0=bound.rhs0, t1_ratio=bound.ratio,
        )
    return ScanRecord(
        q=chi.q, char_exps=chi.exps, order=chi.order, parity=chi.parity,
        conductor=chi.conductor, M=M, epsilon=epsilon, **extra,
    )


def recompute_record(q: int, char_exps: Sequence[int], psi_modulus: Optional[int] = None,
                     psi_exps: Optional[Sequence[int]] = None, epsilon: float = Scan.EPSILON) -> ScanRecord:
    """Rebuild a record from its identifying fields alone"""
    chi = character(q, char_exps)
    psi = character(psi_modulus, psi_exps) if psi_modulus is not None else None
    return build_record(chi, psi, epsilon)


def _scan_modulus(task: Tuple[int, int, int, float]) -> List[ScanRecord]:
    g, q, psi_max, epsilon = task
    records = []
    for chi in characters_of_order(q, g):
        psi, _ = nearest_odd_character(chi, psi_max)
        records.append(build_record(chi, psi, epsilon))
    return records


def odd_order_moduli(g: int, q_min: int, q_max: int) -> List[int]:
    """Primes q in [q_min, q_max] with q ≡ 1 mod g"""
    return [int(q) for q in primes_between(q_min - 1, q_max) if q % g == 1]


def scan_odd_order(g: int, q_min: int = Scan.Q_MIN, q_max: int = Scan.Q_MAX,
                   psi_conductor_max: int = Scan.PSI_CONDUCTOR_MAX,
                   threads: Optional[int] = None, epsilon: float = Scan.EPSILON) -> List[ScanRecord]:
    """One record per primitive order-g character mod each prime q ≡ 1 mod g in range"""
    delta(g)
    moduli = odd_order_moduli(g, q_min, q_max)
    logger.info("odd-order scan g=%d over %d moduli in [%d, %d]", g, len(moduli), q_min, q_max)
    batches = ordered_map(_scan_modulus, [(g, q, psi_conductor_max, epsilon) for q in moduli], threads)
    records = [r for batch in batches for r in batch]
    return sorted(records, key=lambda r: r.sort_key)


def quadratic_character(q: int) -> Character:
    """The Legendre symbol mod an odd prime q"""
    if q < 3 or not is_prime(q):
        raise DomainError(f"quadratic_character needs an odd prime, got {q}")
    return character(q, ((q - 1) // 2,))


def _paley_modulus(task: Tuple[int, int, float]) -> ScanRecord:
    q, psi_max, epsilon = task
    chi = quadratic_character(q)
    psi = nearest_odd_character(chi, psi_max)[0] if chi.is_even else None
    return build_record(chi, psi, epsilon)


def paley_scan(q_max: int = Scan.PALEY_Q_MAX, psi_conductor_max: int = Scan.PSI_CONDUCTOR_MAX,
               threads: Optional[int] = None, epsilon: float = Scan.EPSILON) -> List[ScanRecord]:
    """Quadratic character records for every prime 5 <= q <= q_max; lower-bound fields for even ones"""
    moduli = [int(q) for q in primes_between(Scan.PALEY_Q_MIN - 1, q_max)]
    logger.info("paley scan over %d primes up to %d", len(moduli), q_max)
    records = ordered_map(_paley_modulus, [(q, psi_conductor_max, epsilon) for q in moduli], threads)
    return sorted(records, key=lambda r: r.sort_key)


def paley_running_max(records: Sequence[ScanRecord]) -> List[Tuple[int, float]]:
    """
    (q, max of M/(√q log log q) over records with modulus <= q), in q order.
    Moduli below 5 are skipped: log log q is near 0 there.
    """
    running, best = [], -math.inf
    for record in sorted(records, key=lambda r: r.sort_key):
        if record.q < Scan.PALEY_Q_MIN:
            continue
        best = max(best, record.paley_norm)
        running.append((record.q, best))
    return running
