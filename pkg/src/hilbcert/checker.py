"""Independent re-verification of certificate records.

Works on the serialized records only and shares no arithmetic with the
rest of the package: binomials come from a private Pascal triangle,
expansions from a private greedy loop, CI h-vectors from counting exponent
boxes, and the candidate list from a plain grid scan.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

_pascal: list[list[int]] = [[1]]


def _c(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    while len(_pascal) <= n:
        prev = _pascal[-1]
        _pascal.append([1] + [prev[j - 1] + prev[j] for j in range(1, len(prev))] + [1])
    return _pascal[n][k]


def _grow(c: int, d: int) -> int:
    total, rest = 0, c
    for i in range(d, 0, -1):
        top = i - 1  # C(i-1, i) = 0
        while _c(top + 1, i) <= rest:
            top += 1
        rest -= _c(top, i)
        total += _c(top + 1, i + 1)
    return total


def _admissible(h: list[int]) -> bool:
    return all(h[k + 1] <= _grow(h[k], k) for k in range(1, len(h) - 1))


def _ci_box(md: list[int], n: int) -> list[int]:
    if len(md) != n:
        raise ValueError("non-Artinian multidegree")
    counts = [0] * (sum(x - 1 for x in md) + 1)
    for e in itertools.product(*(range(x) for x in md)):
        counts[sum(e)] += 1
    return counts


def _check_enumerate(data: dict[str, Any]) -> str | None:
    gc = data["constraints"]
    s, max_a1, max_total = gc["socle_degree"], gc["max_a1"], gc["max_total"]
    mid = s // 2
    found = []
    for half in itertools.product(range(1, max_total + 1), repeat=mid):
        if half[0] > max_a1 or any(a > b for a, b in zip(half, half[1:])):
            continue
        full = [1, *half, *half[-2::-1], 1]
        if sum(full) <= max_total and _admissible([1, *half]):
            found.append(full)
    found.sort()
    if found != data["candidates"] or data["count"] != len(found):
        return f"grid scan found {len(found)} candidates, record lists {data['count']}"
    return None


def _check_lemdi_scan(data: dict[str, Any]) -> str | None:
    d, prefix, upper = data["d"], data["prefix"], data["upper"]
    rows, survivors = [], []
    for tail in itertools.product(range(1, upper + 1), repeat=4 - len(prefix)):
        md = prefix + list(tail)
        if any(a > b for a, b in zip(md, md[1:])):
            continue
        total = sum(md)
        row = {
            "multidegree": md,
            "degree_sum": total,
            "sum_ok": total >= 2 * d,
            "within_caps": md[-1] <= d - 1,
        }
        rows.append(row)
        if row["sum_ok"] and row["within_caps"]:
            survivors.append(md)
    if rows != data["rows"]:
        return "scan rows differ"
    if survivors != data["survivors"]:
        return f"survivors {survivors} != {data['survivors']}"
    if "required_last" in data and data["required_last"] != 2 * d - sum(prefix):
        return "required_last wrong"
    return None


def _check_green(data: dict[str, Any]) -> str | None:
    c, d, nxt = data["c"], data["degree"], data["next"]
    if not (c <= d and nxt == c):
        return "hypotheses c <= d and next == c fail"
    if _grow(c, d) != c or data["growth_bound"] != c:
        return "c^<d> != c"
    if data["length"] != c or data["base_point_free_next"] != (c == 0):
        return "verdict fields inconsistent"
    return None


def _check_min_completion(data: dict[str, Any]) -> str | None:
    h, reg = data["hvector"], data["region"]
    a1, a2 = reg["a1"], reg["a2_min"]
    if h != [1, a1, a2, a2, a2, a1, 1]:
        return "not the minimal completion of the region"
    if data["terms"] != [2] + h[1:6] or sum(data["terms"]) != data["sum"]:
        return "sum wrong"
    if not data["sum"] > data["bound"]:
        return "sum does not exceed bound"
    return None


def _check_ci_forcing(data: dict[str, Any]) -> str | None:
    for case in data["cases"]:
        md = case["multidegree"]
        twice_d = 2 * data["d"]
        if sum(md) != case["degree_sum"] or case["degree_sum"] != twice_d or case["twice_d"] != twice_d:
            return f"{md}: degree sum is not 2d"
        if md[-1] > data["d"] - 1:
            return f"{md}: last degree above d - 1"
        ci = _ci_box(md, data["num_vars"])
        if ci != case["ci_hvector"] or ci[1] != case["a1"]:
            return f"{md}: CI h-vector {ci} != {case['ci_hvector']}"
    return None


def _check_node_count(data: dict[str, Any]) -> str | None:
    for case in data["cases"]:
        if sum(case["hvector"]) != case["total"]:
            return f"{case['hvector']} sums to {sum(case['hvector'])}"
    return None


def _check_base_dim_bound(data: dict[str, Any]) -> str | None:
    if _c(data["d"] + data["m"], data["d"]) != data["value"]:
        return "C(d+m, d) mismatch"
    return None


def _check_tail_sum(data: dict[str, Any]) -> str | None:
    ci = _ci_box(data["multidegree"], data["num_vars"])
    if [ci[p] for p in data["positions"]] != data["tail"]:
        return "tail values are not read off the CI h-vector"
    if data["terms"][1:] != data["tail"] or sum(data["terms"]) != data["sum"]:
        return "sum wrong"
    if not data["sum"] > data["bound"]:
        return "sum does not exceed bound"
    return None


_RULES = {
    "enumerate": _check_enumerate,
    "lemdi_scan": _check_lemdi_scan,
    "green": _check_green,
    "min_completion": _check_min_completion,
    "ci_forcing": _check_ci_forcing,
    "node_count": _check_node_count,
    "base_dim_bound": _check_base_dim_bound,
    "tail_sum": _check_tail_sum,
}


@dataclass
class CheckReport:
    checked: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_certificate(records: list[dict[str, Any]]) -> CheckReport:
    """Recheck every ARITHMETIC step and the elimination bookkeeping."""
    report = CheckReport()
    steps = [r for r in records if r["record"] == "step"]
    survivors = [r for r in records if r["record"] == "survivor"]
    for st in steps:
        if st["kind"] == "AXIOM":
            if not st.get("citation"):
                report.failures.append(f"{st['id']}: AXIOM without citation")
            continue
        rule = st["data"].get("rule")
        fn = _RULES.get(rule)
        if fn is None:
            report.failures.append(f"{st['id']}: unknown rule {rule!r}")
            continue
        err = fn(st["data"])
        if err:
            report.failures.append(f"{st['id']}: {err}")
        else:
            report.checked.append(st["id"])

    enum = [st for st in steps if st["kind"] == "ARITHMETIC" and st["data"].get("rule") == "enumerate"]
    if enum:
        cands = [tuple(h) for h in enum[0]["data"]["candidates"]]
        gone = [tuple(h) for st in steps for h in st["eliminates"]]
        kept = [tuple(s["hvector"]) for s in survivors]
        if len(gone) != len(set(gone)):
            report.failures.append("a candidate is eliminated twice")
        if set(gone) & set(kept):
            report.failures.append("a survivor is also eliminated")
        if sorted(gone + kept) != sorted(cands):
            report.failures.append("eliminated + survivors do not partition the candidates")
        forcing = {
            tuple(c["ci_hvector"]): c["multidegree"]
            for st in steps
            if st["data"].get("rule") == "ci_forcing"
            for c in st["data"]["cases"]
        }
        for s in survivors:
            if forcing.get(tuple(s["hvector"])) != s["multidegree"]:
                report.failures.append(f"survivor {s['hvector']} not backed by ci_forcing")
            if sum(s["hvector"]) != s["min_nodes"]:
                report.failures.append(f"survivor {s['hvector']} node count wrong")
    return report
