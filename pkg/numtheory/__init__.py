from .errors import CharLabError, DomainError, ResourceLimitError, UsageError
from .arithmetic import factorize, euler_phi, is_prime, unit_group, primes_up_to, UnitGroup
from .characters import (
    Character, ConstantOne, RandomUnimodular, MultiplicativeFunction,
    character, enumerate_characters, characters_of_order, primitive_characters,
)
from .charsums import partial_sums, max_character_sum, gauss_sum, theta_sum, max_theta_sum
from .pretense import distance, distance_squared
from .polya import polya_error, even_polya_max, twist_identity_check, theorem1_ratio
