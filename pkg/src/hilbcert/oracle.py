"""Brute-force ground truth on monomial ideals.

Subspaces are restricted to monomial spans; for those, the codimension of
``V * S_1`` is a count of monomials and no field arithmetic is needed.  A
degree-``d + 1`` monomial lies outside ``V * S_1`` exactly when all of its
degree-``d`` divisors lie outside ``V``, i.e. in the complementary set ``U``
with ``|U| = codim V``.  Subsets ``U`` are encoded as bitmasks so a full
sweep is a handful of vectorised numpy passes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

from .binomial import binom
from .gotzmann import ExpansionPolynomial, evaluate_persistent
from .macaulay import growth_bound, macaulay_expansion

Monomial = tuple[int, ...]

# Exhaustive sweeps enumerate all 2**N subsets of the N degree-d monomials.
EXHAUSTIVE_CAP = 21
# Beyond the cap: every subset with codim <= TAIL or >= N - TAIL, every
# strongly stable span, and SAMPLES_PER_CODIM seeded random subsets per codim.
TAIL = 3
SAMPLES_PER_CODIM = 2000
DEFAULT_SEED = 20240917
_CHUNK = 1 << 20


@lru_cache(maxsize=None)
def monomials(n: int, k: int) -> tuple[Monomial, ...]:
    """Degree-``k`` exponent vectors in ``n`` variables, lex-largest first."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if n == 1:
        return ((k,),)
    out = []
    for a in range(k, -1, -1):
        out.extend((a,) + rest for rest in monomials(n - 1, k - a))
    return tuple(out)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Iterable[Monomial]) -> frozenset[Monomial]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=lambda m: (sum(m), m)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    generators: frozenset[Monomial] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError(f"num_vars must be >= 1, got {self.num_vars}")
        gens = [tuple(int(x) for x in g) for g in self.generators]
        for g in gens:
            if len(g) != self.num_vars or any(x < 0 for x in g):
                raise ValueError(f"bad exponent vector {g} for {self.num_vars} variables")
        object.__setattr__(self, "generators", _minimalize(gens))

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def sorted_generators(self) -> list[Monomial]:
        return sorted(self.generators, key=lambda m: (sum(m), tuple(-x for x in m)))


def standard_monomial_count(ideal: MonomialIdeal, k: int) -> int:
    """``dim (S/I)_k``: degree-``k`` monomials divisible by no generator."""
    if k < 0:
        return 0
    return sum(1 for m in monomials(ideal.num_vars, k) if not ideal.contains(m))


@dataclass(frozen=True)
class LexSegment:
    num_vars: int
    degree: int
    codim: int

    def __post_init__(self) -> None:
        if self.num_vars < 1 or self.degree < 0:
            raise ValueError(f"bad ring/degree: n={self.num_vars}, d={self.degree}")
        dim = binom(self.degree + self.num_vars - 1, self.degree)
        if not 0 <= self.codim <= dim:
            raise ValueError(
                f"codim must lie in [0, {dim}] for n={self.num_vars}, d={self.degree}; got {self.codim}"
            )

    @property
    def dim(self) -> int:
        return binom(self.degree + self.num_vars - 1, self.degree)


def lex_segment_span(ls: LexSegment) -> tuple[Monomial, ...]:
    """The ``dim - codim`` lex-largest degree-``d`` monomials (first variable most significant)."""
    return monomials(ls.num_vars, ls.degree)[: ls.dim - ls.codim]


def lex_ideal(ls: LexSegment) -> MonomialIdeal:
    return MonomialIdeal(ls.num_vars, frozenset(lex_segment_span(ls)))


def _divisor_masks(n: int, d: int) -> list[int]:
    """For each degree-(d+1) monomial, the bitmask of its degree-d divisors."""
    index = {m: i for i, m in enumerate(monomials(n, d))}
    masks = []
    for m in monomials(n, d + 1):
        mask = 0
        for j in range(n):
            if m[j]:
                q = list(m)
                q[j] -= 1
                mask |= 1 << index[tuple(q)]
        masks.append(mask)
    return masks


def _growth_counts(us: np.ndarray, masks: Sequence[int]) -> np.ndarray:
    cnt = np.zeros(us.shape, dtype=np.int64)
    for mk in masks:
        m = np.uint64(mk)
        cnt += (us & m) == m
    return cnt


def _mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _strongly_stable_complements(n: int, d: int) -> list[int]:
    """Masks ``U`` whose complement ``V`` is a strongly stable (Borel-fixed) span."""
    ms = monomials(n, d)
    index = {m: i for i, m in enumerate(ms)}
    # elementary Borel moves x_j -> x_{j-1} land on a lex-larger, earlier monomial
    ups = []
    for m in ms:
        u = []
        for j in range(1, n):
            if m[j]:
                q = list(m)
                q[j] -= 1
                q[j - 1] += 1
                u.append(index[tuple(q)])
        ups.append(u)
    full = (1 << len(ms)) - 1
    out: list[int] = []
    chosen = [False] * len(ms)

    def rec(i: int, vmask: int) -> None:
        if i == len(ms):
            out.append(full & ~vmask)
            return
        rec(i + 1, vmask)
        if all(chosen[u] for u in ups[i]):
            chosen[i] = True
            rec(i + 1, vmask | (1 << i))
            chosen[i] = False

    rec(0, 0)
    return out


def _milp_max_growth(n: int, d: int, c: int, masks: Sequence[int]) -> int:
    """Exact max of ``codim(V * S_1)`` over monomial spans of codim ``c``, as a 0/1 program.

    Variables: ``u_j`` (degree-d monomial j is outside V) and ``y_m``
    (degree-(d+1) monomial m is outside V*S_1); ``y_m <= u_j`` for each
    divisor j of m and ``sum u = c``.
    """
    N = len(monomials(n, d))
    M = len(masks)
    rows = []
    for m, mk in enumerate(masks):
        for j in range(N):
            if mk >> j & 1:
                row = np.zeros(N + M)
                row[N + m] = 1.0
                row[j] = -1.0
                rows.append(row)
    card = np.concatenate([np.ones(N), np.zeros(M)])
    constraints = [
        LinearConstraint(np.array(rows), -np.inf, 0.0),
        LinearConstraint(card[None, :], c, c),
    ]
    objective = -np.concatenate([np.zeros(N), np.ones(M)])
    res = milp(
        objective,
        constraints=constraints,
        integrality=np.ones(N + M),
        bounds=Bounds(0, 1),
        options={"mip_rel_gap": 0.0},
    )
    if not res.success:
        raise RuntimeError(f"MILP failed for n={n}, d={d}, c={c}: {res.message}")
    return int(round(-res.fun))


@dataclass
class MacaulayReport:
    num_vars: int
    degree: int
    mode: str
    seed: int | None
    subsets_tested: int
    bound: list[int]
    max_growth: list[int]
    attained: list[int]
    lex_growth: list[int]
    violations: list[tuple[int, int, int]]  # (codim, growth, U-mask)
    header: str = (
        "monomial-spanned subspaces only; codim growth of V*S_1 versus c^<d>"
    )

    @property
    def ok(self) -> bool:
        return not self.violations and self.lex_growth == self.bound

    def as_dict(self) -> dict:
        return {
            "header": self.header,
            "num_vars": self.num_vars,
            "degree": self.degree,
            "mode": self.mode,
            "seed": self.seed,
            "exhaustive_cap": EXHAUSTIVE_CAP,
            "subsets_tested": self.subsets_tested,
            "bound": self.bound,
            "max_growth": self.max_growth,
            "attained": self.attained,
            "lex_growth": self.lex_growth,
            "lex_attains_bound": self.lex_growth == self.bound,
            "violations": [list(v) for v in self.violations],
            "ok": self.ok,
        }


def verify_macaulay_bound(
    n: int,
    d: int,
    mode: str = "auto",
    seed: int | None = None,
    samples_per_codim: int = SAMPLES_PER_CODIM,
) -> MacaulayReport:
    """Check ``codim(V * S_1) <= codim(V)^<d>`` over monomial spans ``V``.

    ``mode`` is ``"exhaustive"`` (all ``2**N`` spans, needs ``N <= EXHAUSTIVE_CAP``),
    ``"sampled"`` (tails, strongly stable spans and seeded random spans),
    ``"milp"`` (exact maximum per codim from a 0/1 program; ``attained`` is
    left empty and ``subsets_tested`` counts programs solved) or ``"auto"``
    (exhaustive when within the cap, sampled otherwise).
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    N = len(monomials(n, d))
    if N > 64:
        raise ValueError(f"{N} degree-{d} monomials do not fit a 64-bit mask")
    if mode == "auto":
        mode = "exhaustive" if N <= EXHAUSTIVE_CAP else "sampled"
    if mode == "exhaustive" and N > EXHAUSTIVE_CAP:
        raise ValueError(
            f"exhaustive mode needs at most {EXHAUSTIVE_CAP} degree-{d} monomials, have {N}"
        )
    if mode not in ("exhaustive", "sampled", "milp"):
        raise ValueError(f"unknown mode {mode!r}")

    masks = _divisor_masks(n, d)
    bound = np.array([growth_bound(c, d) for c in range(N + 1)], dtype=np.int64)
    best = np.full(N + 1, -1, dtype=np.int64)
    attained = np.zeros(N + 1, dtype=np.int64)
    violations: list[tuple[int, int, int]] = []
    tested = 0

    def sweep(us: np.ndarray) -> None:
        nonlocal tested
        cnt = _growth_counts(us, masks)
        pop = np.bitwise_count(us).astype(np.int64)
        np.maximum.at(best, pop, cnt)
        hit = cnt == bound[pop]
        attained[:] += np.bincount(pop[hit], minlength=N + 1)
        bad = np.nonzero(cnt > bound[pop])[0]
        for i in bad[:100]:
            violations.append((int(pop[i]), int(cnt[i]), int(us[i])))
        tested += us.size

    if mode == "milp":
        for c in range(N + 1):
            best[c] = _milp_max_growth(n, d, c, masks)
            if best[c] > bound[c]:
                violations.append((c, int(best[c]), -1))
        tested = N + 1
        attained = np.zeros(0, dtype=np.int64)
    elif mode == "exhaustive":
        total = 1 << N
        for start in range(0, total, _CHUNK):
            sweep(np.arange(start, min(start + _CHUNK, total), dtype=np.uint64))
    else:
        seed = DEFAULT_SEED if seed is None else seed
        rng = np.random.default_rng(seed)
        family: set[int] = set()
        for c in itertools.chain(range(0, TAIL + 1), range(max(N - TAIL, TAIL + 1), N + 1)):
            family.update(_mask_of(s) for s in itertools.combinations(range(N), c))
        family.update(_strongly_stable_complements(n, d))
        sweep(np.array(sorted(family), dtype=np.uint64))
        weights = np.uint64(1) << np.arange(N, dtype=np.uint64)
        for c in range(TAIL + 1, N - TAIL):
            picks = np.argsort(rng.random((samples_per_codim, N)), axis=1)[:, :c]
            sweep(np.bitwise_or.reduce(weights[picks], axis=1))

    lex_growth = []
    for c in range(N + 1):
        ideal = lex_ideal(LexSegment(n, d, c))
        lex_growth.append(standard_monomial_count(ideal, d + 1))

    return MacaulayReport(
        num_vars=n,
        degree=d,
        mode=mode,
        seed=seed if mode == "sampled" else None,
        subsets_tested=tested,
        bound=bound.tolist(),
        max_growth=best.tolist(),
        attained=attained.tolist(),
        lex_growth=lex_growth,
        violations=sorted(violations),
    )


@dataclass
class GotzmannReport:
    num_vars: int
    degree: int
    codim: int
    horizon: int
    counts: list[int]
    predicted: list[int]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def stabilizes(self) -> bool:
        """True when the counts are constant (the ``c <= d`` zero-dimensional case)."""
        return len(set(self.counts)) == 1

    def as_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "degree": self.degree,
            "codim": self.codim,
            "horizon": self.horizon,
            "degrees": list(range(self.degree, self.degree + self.horizon + 1)),
            "counts": self.counts,
            "predicted": self.predicted,
            "stabilizes": self.stabilizes,
            "failures": self.failures,
            "ok": self.ok,
        }


def verify_gotzmann_on_lex(n: int, d: int, c: int, horizon: int) -> GotzmannReport:
    """Count standard monomials of the ideal generated by a lex segment in degrees ``d..d+horizon``.

    Checks ``h(k+1) = h(k)^<k>`` and agreement with the persistent Hilbert
    polynomial of the degree-``d`` expansion.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if not 0 <= horizon <= d + 8:
        raise ValueError(f"horizon must lie in [0, {d + 8}], got {horizon}")
    ideal = lex_ideal(LexSegment(n, d, c))
    pe = ExpansionPolynomial(macaulay_expansion(c, d))
    counts = [standard_monomial_count(ideal, k) for k in range(d, d + horizon + 1)]
    predicted = [evaluate_persistent(pe, k) for k in range(d, d + horizon + 1)]
    failures = []
    for j, k in enumerate(range(d, d + horizon)):
        if counts[j + 1] != growth_bound(counts[j], k):
            failures.append(
                f"h({k + 1})={counts[j + 1]} != h({k})^<{k}>={growth_bound(counts[j], k)}"
            )
    for j, k in enumerate(range(d, d + horizon + 1)):
        if counts[j] != predicted[j]:
            failures.append(f"h({k})={counts[j]} != persistent value {predicted[j]}")
    return GotzmannReport(n, d, c, horizon, counts, predicted, failures)
