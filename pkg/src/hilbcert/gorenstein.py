"""Complete-intersection and Gorenstein h-vectors, plus degree-sequence checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .macaulay import growth_bound, is_o_sequence


@dataclass(frozen=True)
class HVector:
    values: tuple[int, ...]

    def __init__(self, values: Sequence[int]) -> None:
        values = tuple(int(v) for v in values)
        if not values or values[0] != 1:
            raise ValueError(f"h-vector must start with 1: {values}")
        if any(v < 0 for v in values):
            raise ValueError(f"h-vector entries must be nonnegative: {values}")
        object.__setattr__(self, "values", values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    def total(self) -> int:
        return sum(self.values)

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.values)) + ")"


@dataclass(frozen=True)
class Multidegree:
    """Generator degrees ``d_2 <= d_1 <= d_0 <= d_{-1}`` of a complete intersection."""

    degrees: tuple[int, ...]

    def __init__(self, degrees: Sequence[int]) -> None:
        degrees = tuple(int(x) for x in degrees)
        if not degrees or any(x < 1 for x in degrees):
            raise ValueError(f"multidegree entries must be >= 1: {degrees}")
        if any(a > b for a, b in zip(degrees, degrees[1:])):
            raise ValueError(f"multidegree must be nondecreasing: {degrees}")
        object.__setattr__(self, "degrees", degrees)

    def total(self) -> int:
        return sum(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.degrees)) + ")"


@dataclass(frozen=True)
class GorensteinConstraints:
    socle_degree: int
    max_a1: int
    max_total: int

    def __post_init__(self) -> None:
        if min(self.socle_degree, self.max_a1, self.max_total) < 1:
            raise ValueError(f"all constraint fields must be positive: {self}")


def ci_hvector(md: Sequence[int], n: int) -> HVector:
    """Coefficients of ``prod_i (1 + t + ... + t^(d_i - 1))``.

    Only the Artinian case (as many generators as variables) is supported.
    """
    degrees = tuple(md)
    if len(degrees) != n:
        raise ValueError(
            f"need exactly n={n} generator degrees for an Artinian quotient, got {len(degrees)}"
        )
    if any(x < 1 for x in degrees):
        raise ValueError(f"generator degrees must be >= 1: {degrees}")
    coeffs = [1]
    for di in degrees:
        nxt = [0] * (len(coeffs) + di - 1)
        for p, c in enumerate(coeffs):
            for q in range(di):
                nxt[p + q] += c
        coeffs = nxt
    return HVector(coeffs)


def _total(half: Sequence[int]) -> int:
    # full vector is half + mirror of half[:-1]
    return 2 * sum(half[:-1]) + half[-1]


def enumerate_candidate_hvectors(gc: GorensteinConstraints) -> list[HVector]:
    """Symmetric h-vectors, unimodal up to the middle, passing Macaulay on the rising half.

    Output is in lexicographic order.
    """
    s = gc.socle_degree
    if s < 2 or s % 2:
        raise ValueError(f"socle degree must be even and >= 2, got {s}")
    mid = s // 2
    found: list[HVector] = []

    def extend(half: list[int]) -> None:
        j = len(half)
        if j == mid + 1:
            full = half + half[-2::-1]
            assert is_o_sequence(half)
            found.append(HVector(full))
            return
        prev = half[-1]
        lo = 1 if j == 1 else prev
        hi = gc.max_a1 if j == 1 else growth_bound(prev, j - 1)
        for a in range(lo, hi + 1):
            cand = half + [a]
            # later entries are >= a, so padding with a is the cheapest completion
            if _total(cand + [a] * (mid + 1 - len(cand))) > gc.max_total:
                break
            extend(cand)

    extend([1])
    return found


@dataclass(frozen=True)
class LemdiVerdict:
    sum_ok: bool
    forces_ci: bool
    within_caps: bool
    degree_sum: int


def check_lemdi(d: int, md: Multidegree | Sequence[int]) -> LemdiVerdict:
    """Degree-sequence constraints: ``sum d_i >= 2d``, equality forces CI, ``d_{-1} <= d - 1``."""
    if d < 3:
        raise ValueError(f"hypersurface degree must be >= 3, got {d}")
    md = md if isinstance(md, Multidegree) else Multidegree(md)
    if len(md) != 4:
        raise ValueError(f"multidegree must have exactly 4 entries, got {md}")
    total = md.total()
    return LemdiVerdict(
        sum_ok=total >= 2 * d,
        forces_ci=total == 2 * d,
        within_caps=md.degrees[-1] <= d - 1,
        degree_sum=total,
    )


def min_nodes(h: HVector | Sequence[int]) -> int:
    """Lower bound on the node count: the total dimension of the quotient."""
    return sum(h)
