"""
Configuration file for the character-sum lab
Contains all constants, scales, tolerances, and configuration management
"""

import copy
import json
import logging
import os
from typing import Any, Dict, Tuple

logger = logging.getLogger(__name__)


# Size guards
class Limits:
    """Upper bounds on table and sieve sizes"""
    MAX_MODULUS = 10**7
    MAX_FACTOR = 2**63 - 1
    MAX_SIEVE = 10**8
    TRIAL_DIVISION_BOUND = 10**3


# Numerical tolerances
class Tolerances:
    """Tolerances used by checks and by the verification suites"""
    PERIOD_SUM = 1e-9
    ORTHOGONALITY = 1e-9
    GAUSS_RELATIVE = 1e-6
    TWIST_PER_TERM = 1e-9
    CONVOLUTION = 1e-8
    FEJER_FORMULAS = 1e-10
    FEJER_NEGATIVE = 1e-12
    COEFFICIENT_BOUND = 1e-12
    INEQUALITY_SLACK = 1e-12
    REFINE_RELATIVE = 1e-6
    FEJER_SIN_CUTOFF = 1e-6
    TREND_SLOPE = 0.1


# Maximization settings
class Grid:
    """θ-grid oversampling for trigonometric maximization"""
    OVERSAMPLING = 8
    REFINE_MAX_STEPS = 200


# Experiment defaults
class Scan:
    """Defaults for family scans"""
    ORDER = 3
    Q_MIN = 7
    Q_MAX = 10**4
    PSI_CONDUCTOR_MAX = 25
    PALEY_Q_MIN = 5
    PALEY_Q_MAX = 10**5
    EPSILON = 0.05
    POLYA_FULL_SWEEP_MAX = 2000
    POLYA_SAMPLE_POINTS = 64
    THEOREM1_TREND_Q_MIN = 100


# Verification suite scales
class Suites:
    """Scales at which each suite runs"""
    SEED = 42
    GAUSS_Q_MAX = 500
    ORTHOGONALITY_Q_MAX = 200
    POLYA_PRIMES = (101, 211, 401, 809, 1601)
    FEJER_N_MAX = 200
    FEJER_RANDOM_THETAS = 10**4
    LEMMA21_RANDOM_FUNCTIONS = 100
    LEMMA21_CHARACTER_Q_MAX = 50
    LEMMA21_CUTOFFS = (10**2, 10**3, 10**4)
    LEMMA22_BOUNDS = (50, 100, 200, 400)
    LEMMA22_SEEDS = 50
    THEOREM1_Q_MAX = 10**4
    PALEY_Q_MAX = 10**5
    PALEY_REFERENCE_Q = 10**3
    TWIST_CASES = 50
    TWIST_CHI_Q_MAX = 101
    TWIST_PSI_M_MAX = 23
    CONVOLUTION_CASES = 20
    GAUSS_IDENTITY_M_MAX = 100
    TRIANGLE_TRIPLES = 10**3
    TRIANGLE_CUTOFFS = (10**2, 10**3, 10**4)


# Output settings
class Output:
    """Result file settings"""
    SIGNIFICANT_DIGITS = 12
    CSV_COLUMNS = (
        "q", "char_exps", "order", "parity", "conductor", "M", "M_over_sqrtq",
        "psi_modulus", "psi_exps", "dist_sq", "t1_lhs", "t1_rhs0", "t1_ratio",
        "paley_norm", "gs_norm",
    )


# Performance settings
class Performance:
    """Worker pool settings"""
    THREADS = 1
    CHUNK_SIZE = 8


class Config:
    """
    Main configuration class with persistence support
    """

    CONFIG_FILE = os.environ.get("CHARLAB_CONFIG", "charlab_config.json")

    # Default configuration
    DEFAULT_CONFIG = {
        "scan": {
            "order": Scan.ORDER,
            "q_min": Scan.Q_MIN,
            "q_max": Scan.Q_MAX,
            "psi_conductor_max": Scan.PSI_CONDUCTOR_MAX,
            "paley_q_max": Scan.PALEY_Q_MAX,
            "epsilon": Scan.EPSILON,
        },
        "suites": {
            "seed": Suites.SEED,
            "trend_tolerance": Tolerances.TREND_SLOPE,
        },
        "grid": {
            "oversampling": Grid.OVERSAMPLING,
            "refine_tolerance": Tolerances.REFINE_RELATIVE,
        },
        "performance": {
            "threads": Performance.THREADS,
            "chunk_size": Performance.CHUNK_SIZE,
        },
        "output": {
            "format": "csv",
            "significant_digits": Output.SIGNIFICANT_DIGITS,
        },
        "logging": {
            "level": "WARNING",
        },
    }

    def __init__(self, config_file: str = None):
        if config_file is not None:
            self.CONFIG_FILE = config_file
        self.config = self.load_config()

    def load_config(self) -> Dict[str, Any]:
        """Load configuration from file or use defaults"""
        if os.path.exists(self.CONFIG_FILE):
            try:
                with open(self.CONFIG_FILE, 'r') as f:
                    loaded_config = json.load(f)
                    # Merge with defaults to handle missing keys
                    return self._merge_configs(self.DEFAULT_CONFIG, loaded_config)
            except (json.JSONDecodeError, IOError) as e:
                logger.warning("Could not load config file %s: %s; using defaults", self.CONFIG_FILE, e)
        return copy.deepcopy(self.DEFAULT_CONFIG)

    def save_config(self) -> bool:
        """Save current configuration to file"""
        try:
            with open(self.CONFIG_FILE, 'w') as f:
                json.dump(self.config, f, indent=4)
            return True
        except IOError as e:
            logger.error("Error saving config: %s", e)
            return False

    def _merge_configs(self, default: Dict, loaded: Dict) -> Dict:
        """Recursively merge loaded config with defaults"""
        merged = copy.deepcopy(default)
        for key, value in loaded.items():
            if key in merged and isinstance(merged[key], dict) and isinstance(value, dict):
                merged[key] = self._merge_configs(merged[key], value)
            else:
                merged[key] = value
        return merged

    def get(self, key_path: str, default=None):
        """Get configuration value using dot notation (e.g., 'scan.q_max')"""
        keys = key_path.split('.')
        value = self.config
        try:
            for key in keys:
                value = value[key]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key_path: str, value: Any, persist: bool = False) -> bool:
        """Set configuration value using dot notation; optionally write it back"""
        keys = key_path.split('.')
        node = self.config
        for key in keys[:-1]:
            node = node.setdefault(key, {})
        node[keys[-1]] = value
        return self.save_config() if persist else True

    # Convenience accessors for common settings
    @property
    def scan_range(self) -> Tuple[int, int]:
        """Default modulus range for odd-order scans"""
        return (self.get('scan.q_min'), self.get('scan.q_max'))

    @property
    def seed(self) -> int:
        return int(self.get('suites.seed', Suites.SEED))

    @property
    def threads(self) -> int:
        """Worker count; 0 asks for one worker per CPU"""
        return max(0, int(self.get('performance.threads', Performance.THREADS)))

    @property
    def chunk_size(self) -> int:
        return max(1, int(self.get('performance.chunk_size', Performance.CHUNK_SIZE)))

    @property
    def oversampling(self) -> int:
        return max(1, int(self.get('grid.oversampling', Grid.OVERSAMPLING)))

    @property
    def refine_tolerance(self) -> float:
        return float(self.get('grid.refine_tolerance', Tolerances.REFINE_RELATIVE))

    @property
    def trend_tolerance(self) -> float:
        return float(self.get('suites.trend_tolerance', Tolerances.TREND_SLOPE))


# Global config instance
config_instance = Config()
