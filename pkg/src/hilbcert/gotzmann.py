"""Gotzmann persistence and the two exclusion rules built on it.

If the value in degree ``d + 1`` attains Macaulay's bound, the Hilbert
function keeps attaining it in every later degree.  Repeating the growth
map on an expansion just raises every term, so the degree-``k`` value is

    sum_i C(eps_i + (k - d + i), eps_i)

which is the closed form cross-checked against plain iteration below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binomial import binom, binom_shifted
from .macaulay import MacaulayExpansion, growth_bound, macaulay_expansion


@dataclass(frozen=True)
class ExpansionPolynomial:
    """Hilbert polynomial read off the degree-``d`` expansion of a persistent value."""

    expansion: MacaulayExpansion

    @property
    def base_degree(self) -> int:
        return self.expansion.base

    @property
    def terms(self) -> tuple[int, ...]:
        return self.expansion.epsilons

    @property
    def degree(self) -> int:
        """Degree as a polynomial in ``k``; -1 for the zero polynomial."""
        return self.expansion.leading

    def iterate(self, k: int) -> int:
        self._check_k(k)
        value = self.expansion.value
        for j in range(self.base_degree, k):
            value = growth_bound(value, j)
        return value

    def closed_form(self, k: int) -> int:
        self._check_k(k)
        d = self.base_degree
        return sum(
            binom_shifted(self.expansion.eps(i), i, k - d + i) for i in range(1, d + 1)
        )

    def coefficients(self) -> list[Fraction]:
        """Exact coefficients in ``k``, constant term first."""
        d = self.base_degree
        total = [Fraction(0)] * (max(self.degree, 0) + 1)
        for i in range(1, d + 1):
            e = self.expansion.eps(i)
            if e < 0:
                continue
            # C(k + (i - d) + e, e) = prod_{j=1}^{e} (k + i - d + j) / j
            poly = [Fraction(1)]
            for j in range(1, e + 1):
                shift = Fraction(i - d + j, j)
                step = Fraction(1, j)
                nxt = [Fraction(0)] * (len(poly) + 1)
                for p, coef in enumerate(poly):
                    nxt[p] += coef * shift
                    nxt[p + 1] += coef * step
                poly = nxt
            for p, coef in enumerate(poly):
                total[p] += coef
        while len(total) > 1 and total[-1] == 0:
            total.pop()
        return total

    def _check_k(self, k: int) -> None:
        if k < self.base_degree:
            raise ValueError(
                f"k must be >= base degree {self.base_degree}, got {k}"
            )


@dataclass(frozen=True)
class PersistenceVerdict:
    persists: bool
    bound: int
    dimension: int | None = None
    hilbert_polynomial: ExpansionPolynomial | None = None


def persistence_check(c_d: int, c_d1: int, d: int) -> PersistenceVerdict:
    """Decide whether the pair ``(h(d), h(d+1))`` attains Macaulay's bound."""
    exp = macaulay_expansion(c_d, d)
    bound = growth_bound(c_d, d)
    if c_d1 != bound:
        return PersistenceVerdict(False, bound)
    return PersistenceVerdict(True, bound, exp.leading, ExpansionPolynomial(exp))


def evaluate_persistent(pe: ExpansionPolynomial, k: int) -> int:
    """Degree-``k`` value of a persistent Hilbert function.

    Iteration of the growth map is the reference; the closed form must agree.
    """
    value = pe.iterate(k)
    closed = pe.closed_form(k)
    if value != closed:
        raise ArithmeticError(
            f"iterated value {value} != closed form {closed} at k={k} for {pe}"
        )
    return value


def min_hilbert_for_base_dim(m: int, d: int) -> int:
    """Lower bound ``h(d) >= h_{P^m}(d) = C(d + m, d)`` for an m-dimensional base locus."""
    if m < 0:
        raise ValueError(f"base locus dimension must be >= 0, got {m}")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return binom(d + m, d)


@dataclass(frozen=True)
class ZeroDimVerdict:
    """The ideal is that of a zero-dimensional scheme of the given length.

    A nonempty scheme means degree ``d + 1`` of the ideal has base points;
    only the empty scheme (length 0) leaves it base point free.
    """

    length: int
    degree: int

    @property
    def base_point_free_next(self) -> bool:
        return self.length == 0


def green_stabilization(c: int, d: int, next: int) -> ZeroDimVerdict | None:
    """``h(d) = c <= d`` and ``h(d+1) = c`` forces a zero-dimensional scheme of length c."""
    if c < 0 or next < 0:
        raise ValueError("Hilbert function values must be >= 0")
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if c <= d and next == c:
        return ZeroDimVerdict(length=c, degree=d)
    return None
