"""Replay of the quintic case analysis as a checkable certificate.

Candidates are the Gorenstein h-vectors allowed by the numerical setup
(socle degree 6, ``a_1 <= 4``, total <= 24).  Rules run in a fixed order and
the first rule that applies to a candidate eliminates it.  Each candidate
carries the multidegrees still possible for its complete intersection; the
geometric links between ``a_1`` and those multidegrees enter only as AXIOM
steps, everything numeric is an ARITHMETIC step whose ``data`` suffices to
recheck it (see :mod:`hilbcert.checker`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from .gorenstein import (
    GorensteinConstraints,
    HVector,
    Multidegree,
    check_lemdi,
    ci_hvector,
    enumerate_candidate_hvectors,
    min_nodes,
)
from .gotzmann import green_stabilization, min_hilbert_for_base_dim
from .macaulay import growth_bound
from .records import write_records


class StepKind(str, Enum):
    ARITHMETIC = "ARITHMETIC"
    AXIOM = "AXIOM"


@dataclass(frozen=True)
class Citation:
    source: str
    statement: str


@dataclass
class ProofStep:
    id: str
    kind: StepKind
    claim: str
    data: dict[str, Any]
    citation: Citation | None = None
    eliminates: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        # ARITHMETIC steps are only emitted after their checks pass
        return self.kind is StepKind.ARITHMETIC

    def to_record(self) -> dict[str, Any]:
        return {
            "record": "step",
            "id": self.id,
            "kind": self.kind.value,
            "claim": self.claim,
            "citation": None
            if self.citation is None
            else {"source": self.citation.source, "statement": self.citation.statement},
            "data": self.data,
            "eliminates": [list(h) for h in self.eliminates],
            "verified": self.verified,
        }

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> "ProofStep":
        cit = rec.get("citation")
        return cls(
            id=rec["id"],
            kind=StepKind(rec["kind"]),
            claim=rec["claim"],
            data=rec["data"],
            citation=None if cit is None else Citation(cit["source"], cit["statement"]),
            eliminates=[tuple(h) for h in rec["eliminates"]],
        )


@dataclass(frozen=True)
class SurvivingCase:
    multidegree: Multidegree
    hvector: HVector
    min_nodes: int


@dataclass
class ProofCertificate:
    name: str
    target: str
    steps: list[ProofStep]
    surviving_cases: list[SurvivingCase]

    def axiom_count(self) -> int:
        return sum(s.kind is StepKind.AXIOM for s in self.steps)

    def step(self, step_id: str) -> ProofStep:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def eliminated_by(self) -> dict[tuple[int, ...], list[str]]:
        out: dict[tuple[int, ...], list[str]] = {}
        for s in self.steps:
            for h in s.eliminates:
                out.setdefault(tuple(h), []).append(s.id)
        return out

    def to_records(self) -> list[dict[str, Any]]:
        head = {
            "record": "certificate",
            "name": self.name,
            "target": self.target,
            "step_count": len(self.steps),
            "axiom_steps": self.axiom_count(),
            "arithmetic_steps": len(self.steps) - self.axiom_count(),
        }
        survivors = [
            {
                "record": "survivor",
                "multidegree": list(c.multidegree.degrees),
                "hvector": list(c.hvector.values),
                "min_nodes": c.min_nodes,
            }
            for c in self.surviving_cases
        ]
        return [head] + [s.to_record() for s in self.steps] + survivors

    def dumps(self) -> str:
        return write_records(self.to_records())

    @classmethod
    def from_records(cls, records: list[dict[str, Any]]) -> "ProofCertificate":
        head = next(r for r in records if r["record"] == "certificate")
        return cls(
            name=head["name"],
            target=head["target"],
            steps=[ProofStep.from_record(r) for r in records if r["record"] == "step"],
            surviving_cases=[
                SurvivingCase(Multidegree(r["multidegree"]), HVector(r["hvector"]), r["min_nodes"])
                for r in records
                if r["record"] == "survivor"
            ],
        )


class ReplayError(AssertionError):
    """An arithmetic claim failed while building a certificate."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ReplayError(message)


def _lemdi_scan(d: int, prefix: tuple[int, ...]) -> dict[str, Any]:
    """All nondecreasing completions of ``prefix`` to 4 entries with entries <= 2d."""
    upper = 2 * d
    free = 4 - len(prefix)
    rows, survivors = [], []
    for tail in itertools.combinations_with_replacement(range(prefix[-1], upper + 1), free):
        md = Multidegree(prefix + tail)
        v = check_lemdi(d, md)
        rows.append(
            {
                "multidegree": list(md.degrees),
                "degree_sum": v.degree_sum,
                "sum_ok": v.sum_ok,
                "within_caps": v.within_caps,
            }
        )
        if v.sum_ok and v.within_caps:
            survivors.append(list(md.degrees))
    return {
        "rule": "lemdi_scan",
        "d": d,
        "prefix": list(prefix),
        "upper": upper,
        "min_degree_sum": 2 * d,
        "max_last_degree": d - 1,
        "rows": rows,
        "survivors": survivors,
    }


def _min_completion(a1: int, a2_min: int, bound: int) -> dict[str, Any]:
    # cheapest symmetric unimodal vector with these leading values: a_3 = a_2
    h = HVector((1, a1, a2_min, a2_min, a2_min, a1, 1))
    terms = [2] + list(h.values[1:6])
    total = sum(terms)
    _require(total == h.total() and total > bound, f"{h} does not exceed {bound}")
    return {
        "rule": "min_completion",
        "region": {"a1": a1, "a2_min": a2_min},
        "hvector": list(h.values),
        "terms": terms,
        "sum": total,
        "bound": bound,
    }


class _Replay:
    """Mutable bookkeeping while the rules run."""

    def __init__(self, candidates: list[HVector]) -> None:
        self.live: dict[tuple[int, ...], list[Multidegree] | None] = {
            h.values: None for h in candidates
        }
        self.steps: list[ProofStep] = []

    def select(self, pred: Callable[[tuple[int, ...]], bool]) -> list[tuple[int, ...]]:
        return [h for h in self.live if pred(h)]

    def add(self, step: ProofStep, eliminate: list[tuple[int, ...]] = ()) -> ProofStep:
        for h in eliminate:
            del self.live[h]
        step.eliminates = list(eliminate)
        self.steps.append(step)
        return step


def replay_d5() -> ProofCertificate:
    """Replay the case analysis for quintic threefolds with at most 24 nodes."""
    d = 5
    n_vars = 4
    gc = GorensteinConstraints(socle_degree=2 * d - 4, max_a1=n_vars, max_total=2 * (d - 2) * (d - 1))
    candidates = enumerate_candidate_hvectors(gc)
    r = _Replay(candidates)

    r.add(
        ProofStep(
            "1",
            StepKind.ARITHMETIC,
            "Symmetric h-vectors of socle degree 6, unimodal up to the middle, with a_1 <= 4, "
            "total <= 24 and Macaulay-admissible rising half.",
            {
                "rule": "enumerate",
                "constraints": {
                    "socle_degree": gc.socle_degree,
                    "max_a1": gc.max_a1,
                    "max_total": gc.max_total,
                },
                "premises": [
                    "a_k = a_{6-k} (Gorenstein symmetry)",
                    "1 <= a_1 <= a_2 <= a_3 (unimodality, used as a filter)",
                ],
                "candidates": [list(h.values) for h in candidates],
                "count": len(candidates),
            },
        )
    )

    # a_1 = 1
    ones = r.select(lambda h: h[1] == 1)
    r.add(
        ProofStep(
            "2a",
            StepKind.AXIOM,
            "If a_1 = 1 then d_2 = d_1 = d_0 = 1.",
            {"applies_to": {"a1": 1}, "assumed_prefix": [1, 1, 1]},
            Citation(
                "geometry of the linear part",
                "With a_1 = 1 the linear forms in I cut out a single point of P^3, so the "
                "base locus is zero-dimensional already in degree 1.",
            ),
        )
    )
    scan = _lemdi_scan(d, (1, 1, 1))
    _require(not scan["survivors"], "a_1 = 1 admits a multidegree")
    scan["required_last"] = 2 * d - 3
    r.add(
        ProofStep(
            "2b",
            StepKind.ARITHMETIC,
            "With d_2 = d_1 = d_0 = 1, sum >= 10 needs d_{-1} >= 7, exceeding d - 1 = 4.",
            scan,
        ),
        ones,
    )

    # a_1 = 4, a_2 = 4
    fours = r.select(lambda h: h[1] == 4 and h[2] == 4)
    c, nxt = 4, 4
    if fours:
        _require(all(h[4] == c and h[5] == nxt for h in fours), "a_4 = a_5 = 4 expected")
    verdict = green_stabilization(c, 4, nxt)
    _require(verdict is not None and not verdict.base_point_free_next, "no zero-dim verdict")
    _require(growth_bound(c, 4) == c, "4^<4> != 4")
    r.add(
        ProofStep(
            "3a",
            StepKind.ARITHMETIC,
            "a_4 = a_5 = 4 with 4 <= 4: the growth bound 4^<4> = 4 is attained, so the ideal "
            "generated in degree <= 4 defines a zero-dimensional scheme of length 4 and its "
            "degree-5 part has base points (the degree-5 instance is implied and not rechecked).",
            {
                "rule": "green",
                "applies_to": {"a1": 4, "a2": 4},
                "c": c,
                "degree": 4,
                "next": nxt,
                "growth_bound": growth_bound(c, 4),
                "length": verdict.length,
                "base_point_free_next": verdict.base_point_free_next,
            },
        )
    )
    r.add(
        ProofStep(
            "3b",
            StepKind.AXIOM,
            "Contradiction: I_4 is base point free.",
            {"applies_to": {"a1": 4, "a2": 4}, "assumed": "I_{d-1} = I_4 is base point free"},
            Citation(
                "construction of I from the node ideal",
                "The partial derivatives of F lie in the node ideal and a general hyperplane "
                "section is smooth, so I_{d-1} has no base points.",
            ),
        ),
        fours,
    )

    # a_1 = 4, a_2 >= 5 and a_1 = 3, a_2 >= 6
    for step_id, lead, a2_min in (("4", 4, 5), ("5", 3, 6)):
        data = _min_completion(lead, a2_min, gc.max_total)
        hit = r.select(lambda h: h[1] == lead and h[2] >= a2_min)
        r.add(
            ProofStep(
                step_id,
                StepKind.ARITHMETIC,
                f"a_1 = {lead}, a_2 >= {a2_min} gives total >= {data['sum']} > {gc.max_total}.",
                data,
            ),
            hit,
        )

    # a_1 = 2
    twos = r.select(lambda h: h[1] == 2)
    r.add(
        ProofStep(
            "6a",
            StepKind.AXIOM,
            "If a_1 = 2 then d_2 = d_1 = 1.",
            {"applies_to": {"a1": 2}, "assumed_prefix": [1, 1]},
            Citation(
                "geometry of the linear part",
                "With a_1 = 2 the linear forms in I cut out a line, so the base locus drops "
                "to dimension 1 in degree 1.",
            ),
        )
    )
    scan = _lemdi_scan(d, (1, 1))
    _require(scan["survivors"] == [[1, 1, 4, 4]], "a_1 = 2 should force (1,1,4,4)")
    for h in twos:
        r.live[h] = [Multidegree(m) for m in scan["survivors"]]
    r.add(ProofStep("6b", StepKind.ARITHMETIC, "d_0 = d_{-1} = 4 and the degree sum is 10.", scan))

    # a_1 = 3
    threes = r.select(lambda h: h[1] == 3)
    r.add(
        ProofStep(
            "7a",
            StepKind.AXIOM,
            "If a_1 = 3 (and so a_2 < 6) then d_2 = 1 and d_1 = 2.",
            {"applies_to": {"a1": 3}, "assumed_prefix": [1, 2]},
            Citation(
                "geometry of the linear and quadratic parts",
                "With a_1 = 3 the linear forms cut out a plane; a_2 < 6 puts a conic into I_2, "
                "so the base locus is a curve from degree 2 on.",
            ),
        )
    )
    scan = _lemdi_scan(d, (1, 2))
    _require(scan["survivors"] == [[1, 2, 3, 4], [1, 2, 4, 4]], "a_1 = 3 narrowing failed")
    for h in threes:
        r.live[h] = [Multidegree(m) for m in scan["survivors"]]
    r.add(
        ProofStep(
            "7b",
            StepKind.ARITHMETIC,
            "d_0 + d_{-1} >= 7 with d_0 <= d_{-1} <= 4 leaves d_{-1} = 4 and d_0 in {3, 4}.",
            scan,
        )
    )

    for h in threes:
        r.live[h] = [m for m in r.live[h] if m.degrees != (1, 2, 4, 4)]
    r.add(
        ProofStep(
            "8",
            StepKind.AXIOM,
            "If a_1 = 3 then d_0 = 3: the multidegree (1,2,4,4) is impossible.",
            {"applies_to": {"a1": 3}, "removes_multidegree": [1, 2, 4, 4]},
            Citation(
                "syzygy argument",
                "For (1,2,4,4) the ideal would be a colon of the complete intersection by a "
                "linear form h; the syzygies of x_0, F, G force h to divide the quadric, which "
                "then lies in I. Not machine-checked here.",
            ),
        )
    )

    # forced complete intersections
    cases, drop, survivors = [], [], []
    for h, opts in list(r.live.items()):
        _require(opts is not None and len(opts) == 1, f"{h} has no unique multidegree")
        md = opts[0]
        v = check_lemdi(d, md)
        _require(v.forces_ci and v.within_caps, f"{md} does not force a complete intersection")
        ci = ci_hvector(md.degrees, n_vars)
        if ci.values != h:
            drop.append(h)
        else:
            survivors.append((md, ci))
    for md in sorted({opts[0].degrees for opts in r.live.values()}):
        ci = ci_hvector(md, n_vars)
        cases.append(
            {
                "multidegree": list(md),
                "degree_sum": sum(md),
                "twice_d": 2 * d,
                "ci_hvector": list(ci.values),
                "a1": ci[1],
            }
        )
    r.add(
        ProofStep(
            "9",
            StepKind.ARITHMETIC,
            "Degree sum 10 = 2d forces I = I_CI, so the h-vector must equal that of the "
            "complete intersection; all other candidates with the same a_1 drop out.",
            {"rule": "ci_forcing", "d": d, "num_vars": n_vars, "cases": cases},
        ),
        drop,
    )

    surviving = [SurvivingCase(md, ci, min_nodes(ci)) for md, ci in sorted(survivors, key=lambda s: s[1].values)]
    r.add(
        ProofStep(
            "10",
            StepKind.ARITHMETIC,
            "Node lower bounds: the quotient dimensions are 16 and 24.",
            {
                "rule": "node_count",
                "cases": [
                    {"hvector": list(s.hvector.values), "total": s.min_nodes} for s in surviving
                ],
            },
        )
    )
    _require(not set(r.live) - {s.hvector.values for s in surviving}, "unresolved candidates")
    return ProofCertificate(
        name="d5",
        target="The Artinian Gorenstein ideal of a non-factorial nodal quintic with at most 24 "
        "nodes is a complete intersection of multidegree (1,1,4,4) or (1,2,3,4).",
        steps=r.steps,
        surviving_cases=surviving,
    )


def replay_plane_case() -> ProofCertificate:
    """Replay the dimension count showing the (1,1,4,4) case puts a plane in X."""
    md = (1, 1, 4, 4)
    ci = ci_hvector(md, 4)
    bound = 24
    steps = [
        ProofStep(
            "p1",
            StepKind.AXIOM,
            "The base locus B of J_3 has dimension at least 2.",
            {"assumed": "dim B >= 2"},
            Citation(
                "general hyperplane section",
                "B meets a general hyperplane H in a set containing the base locus of I_3, "
                "which is a line; since H is general, dim B >= 2.",
            ),
        )
    ]
    base = min_hilbert_for_base_dim(3, 3)
    _require(base == 20, "h_{P^3}(3) != 20")
    steps.append(
        ProofStep(
            "p2",
            StepKind.ARITHMETIC,
            "If dim B >= 3 then h_B(3) >= h_{P^3}(3) = 20.",
            {"rule": "base_dim_bound", "m": 3, "d": 3, "value": base},
        )
    )
    tail = list(ci.values[4:7])
    terms = [base] + tail
    _require(tail == [3, 2, 1] and sum(terms) == 26 > bound, "plane-case sum failed")
    steps.append(
        ProofStep(
            "p3",
            StepKind.ARITHMETIC,
            "20 + 3 + 2 + 1 = 26 > 24, so dim B = 2.",
            {
                "rule": "tail_sum",
                "multidegree": list(md),
                "num_vars": 4,
                "positions": [4, 5, 6],
                "tail": tail,
                "terms": terms,
                "sum": sum(terms),
                "bound": bound,
            },
        )
    )
    steps.append(
        ProofStep(
            "p4",
            StepKind.AXIOM,
            "The line in B meet H lies in X_H, hence X contains a plane.",
            {"assumed": "line in B cap H is contained in X cap H"},
            Citation(
                "Noether-Lefschetz theory",
                "A general hyperplane section of X has Picard group generated by the "
                "hyperplane class, which forces the line in B cap H into X_H.",
            ),
        )
    )
    return ProofCertificate(
        name="plane-case",
        target="A (1,1,4,4) ideal forces a plane in X with at least 16 nodes.",
        steps=steps,
        surviving_cases=[SurvivingCase(Multidegree(md), ci, min_nodes(ci))],
    )
