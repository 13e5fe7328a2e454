"""
Exception hierarchy for the character-sum lab
"""


class CharLabError(Exception):
    """Base class for all lab errors"""


class DomainError(CharLabError, ValueError):
    """An argument lies outside the domain where the quantity is defined"""


class ResourceLimitError(CharLabError):
    """A table or sieve would exceed the configured size guard"""


class UsageError(CharLabError):
    """Invalid command-line or suite usage"""
