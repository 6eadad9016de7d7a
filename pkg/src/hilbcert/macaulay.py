"""Macaulay expansions, the growth bound ``c^<d>`` and O-sequence tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .binomial import BinomialTerm, binom


@dataclass(frozen=True)
class MacaulayExpansion:
    """``c = sum_{i=1}^{d} C(i + eps_i, i)`` with ``eps_d >= ... >= eps_1 >= -1``.

    ``epsilons`` is stored top-down, ``(eps_d, eps_{d-1}, ..., eps_1)``.
    """

    base: int
    epsilons: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 1:
            raise ValueError(f"base must be >= 1, got {self.base}")
        if len(self.epsilons) != self.base:
            raise ValueError(
                f"expected {self.base} epsilons, got {len(self.epsilons)}"
            )
        if any(e < -1 for e in self.epsilons):
            raise ValueError(f"epsilons must be >= -1: {self.epsilons}")
        if any(a < b for a, b in zip(self.epsilons, self.epsilons[1:])):
            raise ValueError(f"epsilons must be non-increasing: {self.epsilons}")

    def eps(self, i: int) -> int:
        """``eps_i`` for ``1 <= i <= base``."""
        return self.epsilons[self.base - i]

    def terms(self) -> list[BinomialTerm]:
        return [BinomialTerm(self.eps(i), i) for i in range(self.base, 0, -1)]

    @property
    def value(self) -> int:
        return sum(t.value for t in self.terms())

    @property
    def leading(self) -> int:
        return self.epsilons[0]

    def grown(self) -> "MacaulayExpansion":
        """Expansion of ``c^<d>`` in base ``d + 1`` (every term raised, new eps_1 = -1)."""
        return MacaulayExpansion(self.base + 1, self.epsilons + (-1,))


def _largest_eps(c: int, i: int) -> int:
    # largest e >= -1 with C(i + e, i) <= c; gallop then bisect, c can be huge
    if c <= i:  # C(i + 1, i) = i + 1 > c
        return 0 if c else -1
    lo, step = 0, 1
    while binom(i + lo + step, i) <= c:
        lo += step
        step *= 2
    hi = lo + step  # C(i + hi, i) > c
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(i + mid, i) <= c:
            lo = mid
        else:
            hi = mid
    return lo


def _epsilons(c: int, d: int) -> list[int]:
    eps = []
    rest = c
    for i in range(d, 0, -1):
        if rest == 0:
            eps.extend([-1] * i)
            break
        e = rest - 1 if i == 1 else _largest_eps(rest, i)  # C(1 + e, 1) = 1 + e
        eps.append(e)
        rest -= binom(i + e, i)
    return eps


def macaulay_expansion(c: int, d: int) -> MacaulayExpansion:
    """Greedy expansion of ``c`` in base ``d``.

    >>> macaulay_expansion(5, 2).epsilons
    (1, 1)
    """
    if d < 1:
        raise ValueError(f"base d must be >= 1, got {d}")
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    return MacaulayExpansion(d, tuple(_epsilons(c, d)))


def growth_bound(c: int, d: int) -> int:
    """Macaulay's bound ``c^<d>`` on the next Hilbert function value."""
    if d < 1:
        raise ValueError(f"base d must be >= 1, got {d}")
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    total = 0
    for i, e in zip(range(d, 0, -1), _epsilons(c, d)):
        if e < 0:
            break
        total += binom(i + e + 1, i + 1)
    return total


@dataclass(frozen=True)
class OSequenceCheck:
    ok: bool
    violation: int | None = None  # index j of the first entry with h(j) > h(j-1)^<j-1>

    def __bool__(self) -> bool:
        return self.ok


def is_o_sequence(h: Iterable[int]) -> OSequenceCheck:
    """Check ``h(k+1) <= h(k)^<k>`` for every ``k >= 1``.

    ``h(1)`` is unconstrained.  On failure, ``violation`` is the index of the
    first offending entry, i.e. ``k + 1`` for the least failing ``k``.
    """
    values: Sequence[int] = tuple(h)
    if not values:
        raise ValueError("h-vector must be nonempty")
    if values[0] != 1:
        raise ValueError(f"h(0) must be 1, got {values[0]}")
    if any(v < 0 for v in values):
        raise ValueError(f"h-vector entries must be nonnegative: {values}")
    for k in range(1, len(values) - 1):
        if values[k + 1] > growth_bound(values[k], k):
            return OSequenceCheck(False, k + 1)
    return OSequenceCheck(True)
