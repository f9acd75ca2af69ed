"""Deterministic integer factorisation in time N^(1/5 + o(1)).

Typical use::

    >>> from detfactor import factorise
    >>> str(factorise(8051))
    '83 * 97'
"""

from detfactor.factorizer import Factorisation, SearchParams, derive_params, factor_semiprime_or_prime, factorise
from detfactor.outcomes import Factor, Factors, LargeOrderElement, NoFactorsFound, Prime
from detfactor.search import SearchLimitExceeded, find_collisions, main_search
from detfactor.smallfactor import smallest_prime_divisor, trial_division

__all__ = [
    "Factor",
    "Factorisation",
    "Factors",
    "LargeOrderElement",
    "NoFactorsFound",
    "Prime",
    "SearchLimitExceeded",
    "SearchParams",
    "derive_params",
    "factor_semiprime_or_prime",
    "factorise",
    "find_collisions",
    "main_search",
    "smallest_prime_divisor",
    "trial_division",
]
__version__ = "0.1.0"
