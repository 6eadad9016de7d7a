"""Exact binomial coefficients.

Everything here works on Python ints, so there is no overflow at any size.
The ``k > n`` case returns 0 instead of raising, which is what the
``epsilon = -1`` terms of a Macaulay expansion need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def binom(n: int, k: int) -> int:
    """Return ``C(n, k)`` exactly; 0 when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError(f"binom needs n >= 0 and k >= 0, got n={n}, k={k}")
    return math.comb(n, k)


def binom_shifted(e: int, i: int, k: int) -> int:
    """Value at ``k`` of the degree-``e`` polynomial term ``C(e + k, e)``.

    ``i`` is the position of the term inside its expansion; it only has to be
    a valid position (>= 1), the value does not depend on it.  ``e = -1`` is
    the vanishing term.  A negative top index also evaluates to 0.
    """
    if e < -1:
        raise ValueError(f"top offset must be >= -1, got {e}")
    if i < 1:
        raise ValueError(f"lower index must be >= 1, got {i}")
    if e == -1 or e + k < 0:
        return 0
    return math.comb(e + k, e)


@dataclass(frozen=True)
class BinomialTerm:
    """One term ``C(i + eps, i)`` of an expansion."""

    top_offset: int
    lower_index: int

    def __post_init__(self) -> None:
        if self.top_offset < -1:
            raise ValueError(f"top_offset must be >= -1, got {self.top_offset}")
        if self.lower_index < 1:
            raise ValueError(f"lower_index must be >= 1, got {self.lower_index}")

    @property
    def value(self) -> int:
        return binom(self.lower_index + self.top_offset, self.lower_index)

    def raised(self) -> "BinomialTerm":
        """The term one degree up: ``C(i + 1 + eps, i + 1)``."""
        return BinomialTerm(self.top_offset, self.lower_index + 1)
