"""Sums-of-squares lengths and Pythagoras elements in global fields.

Local lengths at finite places are bounded by 4 (the u-invariant of the
completions); the global length of a sum of squares is the maximum of the
local lengths over all places, which is realized over the dyadic places
and the places dividing the element, with a floor of 2 for nonsquares.

Every returned value carries a certificate trail: the list of inspected
places with their local lengths, mirroring the early-exit control flow
(return 4 as soon as a dyadic place yields 4, return 3 as soon as an odd
place yields 3).
"""

from dataclasses import dataclass, field
from math import inf as INFINITY

from .dyadic import (
    DyadicCompletion,
    dyadic_completion,
    is_local_square_dyadic,
    minus_one_minus_one_dyadic,
    sum_of_two_squares_dyadic,
)
from .errors import SearchBoundExceeded, ZeroElement
from .funfield import (
    FFElem,
    FunctionField,
    is_local_square_ff,
    is_square_global_ff,
    places_dividing,
    residue_is_square_ff,
    valuation_ff,
)
from .gf import FqElem, monic_irreducibles
from .intfun import primes_from
from .numferrors = None  # placeholder removed below
