"""Command-line interface.

Default output is the line-record format of :mod:`hilbcert.records`
(envelope first, then result records); ``--pretty`` prints tables instead.
Exit status: 0 on success, 1 when a verification verdict is negative,
2 on invalid input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any

from . import checker, gorenstein, gotzmann, macaulay, oracle, replay
from .records import RecordError, envelope, read_records, write_records

SUBCOMMANDS = {
    "expand": "Macaulay expansion of C in base D",
    "grow": "Macaulay growth bound C^<D> (Macaulay's theorem)",
    "osequence": "O-sequence test h(k+1) <= h(k)^<k> (Macaulay's theorem)",
    "persist": "Gotzmann persistence test for h(D)=C_D, h(D+1)=C_D1",
    "hilb": "value at K of the persistent Hilbert function from C in base D (Gotzmann)",
    "ci-hvec": "h-vector of a complete intersection with the given degrees",
    "enum-gorenstein": "symmetric unimodal Gorenstein h-vector candidates",
    "lemdi": "degree-sequence test: sum >= 2D, equality forces CI, last degree <= D-1",
    "replay": "replay a case-analysis certificate (d5 | plane-case)",
    "oracle": "brute-force monomial checks of Macaulay (macaulay) or Gotzmann (gotzmann)",
    "check": "independently recheck a certificate file written by replay",
}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hilbcert",
        description="Exact Hilbert-function combinatorics and replayable certificates.",
        epilog="subcommands:\n"
        + "\n".join(f"  {k:<16} {v}" for k, v in SUBCOMMANDS.items()),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--pretty", action="store_true", help="human-readable tables")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=SUBCOMMANDS[name], description=SUBCOMMANDS[name])

    s = add("expand")
    s.add_argument("c", type=int)
    s.add_argument("d", type=int)
    s = add("grow")
    s.add_argument("c", type=int)
    s.add_argument("d", type=int)
    s = add("osequence")
    s.add_argument("h", type=int, nargs="+")
    s = add("persist")
    s.add_argument("c_d", type=int)
    s.add_argument("c_d1", type=int)
    s.add_argument("d", type=int)
    s = add("hilb")
    s.add_argument("c", type=int)
    s.add_argument("d", type=int)
    s.add_argument("k", type=int)
    s = add("ci-hvec")
    s.add_argument("degrees", type=int, nargs="+")
    s.add_argument("--vars", type=int, default=None, help="number of variables (default: len(degrees))")
    s = add("enum-gorenstein")
    s.add_argument("socle", type=int)
    s.add_argument("max_a1", type=int)
    s.add_argument("max_total", type=int)
    s = add("lemdi")
    s.add_argument("d", type=int)
    s.add_argument("degrees", type=int, nargs=4)
    s = add("replay")
    s.add_argument("case", choices=["d5", "plane-case"])
    s = add("oracle")
    s.add_argument("kind", choices=["macaulay", "gotzmann"])
    s.add_argument("--vars", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--codim", type=int, default=None, help="gotzmann only")
    s.add_argument("--horizon", type=int, default=5, help="gotzmann only")
    s.add_argument(
        "--mode", choices=["auto", "exhaustive", "sampled", "milp"], default="auto", help="macaulay only"
    )
    s.add_argument("--seed", type=int, default=None, help="macaulay sampled mode")
    s.add_argument("--samples", type=int, default=oracle.SAMPLES_PER_CODIM, help="samples per codim")
    s = add("check")
    s.add_argument("path", type=Path)
    return p


def _expansion_payload(exp: macaulay.MacaulayExpansion) -> dict[str, Any]:
    return {
        "base": exp.base,
        "epsilons": list(exp.epsilons),
        "terms": [
            {"i": t.lower_index, "eps": t.top_offset, "value": t.value} for t in exp.terms()
        ],
        "value": exp.value,
    }


def _fraction(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _dispatch(args: argparse.Namespace) -> tuple[dict[str, Any], list[dict[str, Any]], bool]:
    """Return (inputs, result records, verdict ok)."""
    cmd = args.command
    if cmd == "expand":
        exp = macaulay.macaulay_expansion(args.c, args.d)
        return {"c": args.c, "d": args.d}, [{"record": "result", **_expansion_payload(exp)}], True
    if cmd == "grow":
        value = macaulay.growth_bound(args.c, args.d)
        return {"c": args.c, "d": args.d}, [{"record": "result", "value": value}], True
    if cmd == "osequence":
        res = macaulay.is_o_sequence(args.h)
        return {"h": args.h}, [{"record": "result", "ok": res.ok, "violation": res.violation}], True
    if cmd == "persist":
        v = gotzmann.persistence_check(args.c_d, args.c_d1, args.d)
        payload: dict[str, Any] = {
            "record": "result",
            "persists": v.persists,
            "bound": v.bound,
            "dimension": v.dimension,
            "hilbert_polynomial": None,
        }
        if v.hilbert_polynomial is not None:
            hp = v.hilbert_polynomial
            payload["hilbert_polynomial"] = {
                "base_degree": hp.base_degree,
                "epsilons": list(hp.terms),
                "coefficients": [_fraction(q) for q in hp.coefficients()],
            }
        return {"c_d": args.c_d, "c_d1": args.c_d1, "d": args.d}, [payload], True
    if cmd == "hilb":
        pe = gotzmann.ExpansionPolynomial(macaulay.macaulay_expansion(args.c, args.d))
        value = gotzmann.evaluate_persistent(pe, args.k)
        return (
            {"c": args.c, "d": args.d, "k": args.k},
            [{"record": "result", "epsilons": list(pe.terms), "value": value}],
            True,
        )
    if cmd == "ci-hvec":
        n = len(args.degrees) if args.vars is None else args.vars
        h = gorenstein.ci_hvector(args.degrees, n)
        return (
            {"degrees": args.degrees, "vars": n},
            [{"record": "result", "hvector": list(h.values), "socle_degree": h.socle_degree, "total": h.total()}],
            True,
        )
    if cmd == "enum-gorenstein":
        gc = gorenstein.GorensteinConstraints(args.socle, args.max_a1, args.max_total)
        hs = gorenstein.enumerate_candidate_hvectors(gc)
        return (
            {"socle": args.socle, "max_a1": args.max_a1, "max_total": args.max_total},
            [{"record": "result", "count": len(hs), "hvectors": [list(h.values) for h in hs]}],
            True,
        )
    if cmd == "lemdi":
        v = gorenstein.check_lemdi(args.d, args.degrees)
        return (
            {"d": args.d, "degrees": args.degrees},
            [
                {
                    "record": "result",
                    "degree_sum": v.degree_sum,
                    "sum_ok": v.sum_ok,
                    "forces_ci": v.forces_ci,
                    "within_caps": v.within_caps,
                }
            ],
            True,
        )
    if cmd == "replay":
        cert = replay.replay_d5() if args.case == "d5" else replay.replay_plane_case()
        return {"case": args.case}, cert.to_records(), True
    if cmd == "oracle":
        if args.kind == "macaulay":
            rep = oracle.verify_macaulay_bound(
                args.vars, args.degree, mode=args.mode, seed=args.seed, samples_per_codim=args.samples
            )
            inputs = {"kind": "macaulay", "vars": args.vars, "degree": args.degree, "mode": args.mode,
                      "seed": args.seed, "samples": args.samples}
        else:
            if args.codim is None:
                raise ValueError("oracle gotzmann needs --codim")
            rep = oracle.verify_gotzmann_on_lex(args.vars, args.degree, args.codim, args.horizon)
            inputs = {"kind": "gotzmann", "vars": args.vars, "degree": args.degree,
                      "codim": args.codim, "horizon": args.horizon}
        return inputs, [{"record": "report", **rep.as_dict()}], rep.ok
    if cmd == "check":
        try:
            text = args.path.read_text()
        except OSError as exc:
            raise ValueError(f"cannot read {args.path}: {exc}") from exc
        rep = checker.check_certificate(read_records(text))
        return (
            {"path": str(args.path)},
            [{"record": "check", "checked": rep.checked, "failures": rep.failures, "ok": rep.ok}],
            rep.ok,
        )
    raise ValueError(f"unknown command {cmd!r}")


def _pretty(command: str, inputs: dict[str, Any], records: list[dict[str, Any]]) -> str:
    lines = [f"{command}  " + "  ".join(f"{k}={v}" for k, v in inputs.items())]
    for rec in records:
        kind = rec.get("record")
        if kind == "step":
            lines.append(f"  [{rec['id']:>3}] {rec['kind']:<10} {rec['claim']}")
            if rec["eliminates"]:
                lines.append("        eliminates " + " ".join(
                    "(" + ",".join(map(str, h)) + ")" for h in rec["eliminates"]))
            continue
        if kind == "survivor":
            lines.append(
                f"  survivor  multidegree {tuple(rec['multidegree'])}  h {tuple(rec['hvector'])}"
                f"  nodes >= {rec['min_nodes']}"
            )
            continue
        width = max((len(k) for k in rec), default=0)
        for k, v in rec.items():
            if k != "record":
                lines.append(f"  {k:<{width}}  {v}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        inputs, records, ok = _dispatch(args)
    except (ValueError, RecordError) as exc:
        print(f"hilbcert {args.command}: {exc}", file=sys.stderr)
        return 2
    if args.pretty:
        sys.stdout.write(_pretty(args.command, inputs, records))
    else:
        sys.stdout.write(write_records([envelope(args.command, inputs)] + records))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
