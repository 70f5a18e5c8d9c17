"""
Command line front end.

Exit codes: 0 success, 2 parse error, 3 degenerate input, 4 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Any

from . import curves_classical as cc
from . import curves_dual as cd
from .braid import BraidSyntaxError, BraidWord, parse_braid
from .garside import BudgetExceeded, GarsideNormalForm, Structure, blocks_of, normal_form, sliding_orbit
from .properties import CHECKS
from .reducibility import (
    NTKind,
    PunctureSet,
    curve_is_invariant,
    find_standard_invariant_curve,
    fixpoint_trace,
    invariant_curve_through_pair,
    nt_type,
    s_chain,
)

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE, EXIT_BUDGET = 0, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _kind(args) -> Structure:
    return Structure.CLASSICAL if args.classical else Structure.DUAL


def _braid(args) -> BraidWord:
    try:
        return parse_braid(args.braid, args.n)
    except (BraidSyntaxError, IndexError) as exc:
        raise _Fail(EXIT_PARSE, f"braid: {exc}") from exc


def _nf_json(nf: GarsideNormalForm) -> dict[str, Any]:
    if nf.structure is Structure.CLASSICAL:
        factors: list[Any] = [[v + 1 for v in f] for f in nf.factors]
    else:
        factors = [[list(p.vertices) for p in blocks_of(f)] for f in nf.factors]
    return {"structure": nf.structure.value, "infimum": nf.infimum, "factors": factors, "text": nf.render()}


def _set_text(I: PunctureSet | None) -> str:
    return "none" if I is None else f"I={I}"


def cmd_nf(args) -> tuple[str, dict]:
    nf = normal_form(_braid(args), _kind(args))
    return nf.render(), {"verdict": "ok", "normal_form": _nf_json(nf)}


def _classical_flags(w: cc.CurveWord) -> dict[str, bool]:
    return {"round": cc.is_round(w), "almost_round": cc.is_almost_round(w)}


def _dual_flags(w: cd.DualCurveWord) -> dict[str, bool]:
    return {"standard": cd.is_standard(w), "round": cd.is_round_dual(w)}


def _fmt_flags(flags: dict[str, bool]) -> str:
    return " ".join(f"{k}={'true' if v else 'false'}" for k, v in flags.items())


def cmd_act(args) -> tuple[str, dict]:
    if args.curve is None:
        raise _Fail(EXIT_PARSE, "act needs --curve")
    x = _braid(args)
    kind = _kind(args)
    try:
        if kind is Structure.CLASSICAL:
            w = cc.parse_curve(args.curve, args.n)
        else:
            w = cd.parse_dual_curve(args.curve, args.n)
    except (cc.DegenerateCurveError, cd.DualCurveError) as exc:
        code = EXIT_DEGENERATE if "degenerate" in str(exc) or isinstance(exc, cc.DegenerateCurveError) else EXIT_PARSE
        raise _Fail(code, f"curve: {exc}") from exc
    except ValueError as exc:
        raise _Fail(EXIT_PARSE, f"curve: {exc}") from exc
    nf = normal_form(x, kind)
    if kind is Structure.CLASSICAL:
        images = cc.prefix_images(w, nf)
        flags = [_classical_flags(v) for v in images]
    else:
        images = cd.prefix_images_dual(w, nf)
        flags = [_dual_flags(v) for v in images]
    lines = [f"nf {nf.render()}"]
    trace = []
    for m, (img, fl) in enumerate(zip(images, flags)):
        lines.append(f"prefix {m}: {img}  {_fmt_flags(fl)}")
        trace.append({"prefix_index": m, "word": str(img), "flags": fl})
    lines.append(f"image: {images[-1]}")
    return "\n".join(lines), {"verdict": "ok", "normal_form": _nf_json(nf), "image": str(images[-1]), "trace": trace}


def cmd_nt(args) -> tuple[str, dict]:
    x = _braid(args)
    v = nt_type(x, budget=args.max_steps, bfs=args.bfs)
    if v.kind is NTKind.REDUCIBLE:
        text = f"reducible {_set_text(v.invariant)} k={v.power}"
        witness = {"I": sorted(v.invariant.members), "k": v.power, "element": v.element.render()}
        return text, {"verdict": v.kind.value, "witness": witness}
    return v.kind.value, {"verdict": v.kind.value, "circuit_size": v.circuit_size}


def cmd_invariant_curve(args) -> tuple[str, dict]:
    x = _braid(args)
    if args.pair:
        try:
            a, b = (int(t) for t in args.pair.split(","))
        except ValueError as exc:
            raise _Fail(EXIT_PARSE, f"--pair expects a,b: {exc}") from exc
        if a == b or not (1 <= a <= args.n and 1 <= b <= args.n):
            raise _Fail(EXIT_DEGENERATE, "--pair needs two distinct punctures in range")
        I = invariant_curve_through_pair(x, a, b)
        if I is not None and not curve_is_invariant(I, x):
            I = None
    else:
        I = find_standard_invariant_curve(x)
    payload: dict[str, Any] = {"verdict": "found" if I is not None else "none"}
    if I is not None:
        payload["witness"] = {"I": sorted(I.members), "curve": str(cd.standard_curve(I.members, args.n))}
    return _set_text(I), payload


def _parse_set(text: str | None, n: int) -> PunctureSet:
    if not text:
        raise _Fail(EXIT_PARSE, "sset needs --set")
    try:
        I = PunctureSet.of(n, (int(t) for t in text.strip("{} ").split(",") if t.strip()))
    except ValueError as exc:
        raise _Fail(EXIT_PARSE, f"--set: {exc}") from exc
    if len(I) < 2 or len(I) > n - 1:
        raise _Fail(EXIT_DEGENERATE, f"puncture set {I} is degenerate for n={n}")
    return I


def cmd_sset(args) -> tuple[str, dict]:
    x = _braid(args)
    I = _parse_set(args.set, args.n)
    if args.fixpoint:
        a, b = sorted(I.members)[:2]
        trace = fixpoint_trace(x, a, b)
        return "\n".join(str(t) for t in trace), {"verdict": "ok", "trace": [sorted(t.members) for t in trace]}
    out = s_chain(I, x)
    return str(out), {"verdict": "ok", "set": sorted(out.members)}


def cmd_orbit(args) -> tuple[str, dict]:
    x = _braid(args)
    circuit, pre = sliding_orbit(x, max_steps=args.max_steps)
    lines = [f"preperiod={pre} period={len(circuit)}"] + [c.render() for c in circuit]
    return "\n".join(lines), {"verdict": "ok", "preperiod": pre, "circuit": [_nf_json(c) for c in circuit]}


def cmd_check(args) -> tuple[str, dict]:
    """Random spot check of one property with a seed; see the acceptance suite for the full runs."""
    rng = random.Random(args.seed)
    fn = CHECKS[args.property]
    report = fn(rng, args.trials)
    text = f"{args.property}: {report.summary()}"
    payload = {"verdict": "pass" if report.ok else "fail", "report": report.as_dict()}
    if not report.ok:
        raise _Fail(1, text)
    return text, payload


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, required=True, help="number of strands")
    g = common.add_mutually_exclusive_group()
    g.add_argument("--classical", action="store_true", help="classical Garside structure")
    g.add_argument("--dual", action="store_true", help="dual (band generator) structure; the default")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-steps", type=int, default=1000, help="sliding step budget")

    p = argparse.ArgumentParser(prog="braidcurves", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("braid", help="braid word, e.g. 's1 s2^-1 a(1,3) d^2'")
        sp.set_defaults(func=fn)
        return sp

    add("nf", cmd_nf, "left normal form")
    sp = add("act", cmd_act, "act on a curve, tracing every normal-form prefix")
    sp.add_argument("--curve", help="curve word, 'round:a-b' or 'std:{...}'")
    sp = add("nt", cmd_nt, "Nielsen-Thurston type")
    sp.add_argument("--bfs", action="store_true", help="search the atom-conjugation closure of sliding circuits")
    sp = add("invariant-curve", cmd_invariant_curve, "standard invariant curve search")
    sp.add_argument("--pair", help="restrict the search to the seed pair a,b")
    sp = add("sset", cmd_sset, "S-set of a puncture set along the dual normal form")
    sp.add_argument("--set", help="puncture set, e.g. 1,2")
    sp.add_argument("--fixpoint", action="store_true", help="print the seed-pair fixpoint iteration instead")
    add("orbit", cmd_orbit, "dual sliding circuit")

    ck = sub.add_parser("check", help="seeded random property check")
    ck.add_argument("property", choices=sorted(CHECKS))
    ck.add_argument("--seed", type=int, default=0)
    ck.add_argument("--trials", type=int, default=200)
    ck.add_argument("--json", action="store_true")
    ck.set_defaults(func=cmd_check, n=None)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    if args.n is not None and args.n < 2:
        print("error: -n must be at least 2", file=sys.stderr)
        return EXIT_DEGENERATE
    try:
        text, payload = args.func(args)
    except _Fail as exc:
        if getattr(args, "json", False):
            print(json.dumps({"verdict": "error", "error": str(exc), "exit_code": exc.code}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        if getattr(args, "json", False):
            print(json.dumps({"verdict": "inconclusive", "error": str(exc), "exit_code": EXIT_BUDGET}))
        else:
            print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(json.dumps(payload) if args.json else text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
