"""Command line interface.

Exit codes: 0 success, 2 validation error, 3 resource cap, 4 a cross-check
failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import ORACLES, analyze, toric_generators
from .caps import CrossCheckError, ResourceError, ValidationError, cap, get_caps
from .cyclic import TorusSpec, element_orders, reduce_orders
from .groebner import buchberger, hilbert_data
from .lattice_ideal import GradedBinomialSet, transfer
from .points_codes import code_params
from .semigroup import apery_set, ci_gluing, frobenius_bruteforce


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _oracle_list(text: str) -> list[str]:
    names = [x.strip() for x in text.split(",") if x.strip()]
    bad = [x for x in names if x not in ORACLES + ("all",)]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown oracle(s) {bad}; choose from {ORACLES}")
    return names


def _emit(data: dict, as_json: bool, render) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        print(render(data))


def _render_report(rep: dict) -> str:
    lines = [
        f"q = {rep['q']}, v = {rep['v']}",
        f"d = {rep['d']}   r = {rep['r']}   d' = {rep['dprime']}",
        f"complete intersection: {rep['is_ci']}",
        f"Frobenius number g(S'): {rep['frobenius']}",
        f"degree of S/I(X): {rep['degree']}",
        f"index of regularity: {rep['reg'] if rep['reg'] is not None else 'unknown'}",
    ]
    for label, key in (("P (deg t_i = d'_i)", "p_generators"), ("I(X)", "ix_generators")):
        lines.append(f"{label} generators:")
        for g in rep[key] or []:
            lines.append(f"  {g['binomial']}    [deg {g['degree']}]")
        if rep[key] is None:
            lines.append("  (not computed)")
    lines.append("checks:")
    for c in rep["oracle_checks"]:
        lines.append(f"  {c['status']:<8} {c['name']}: {c['detail']}")
    if "timings" in rep:
        lines.append("timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in rep["timings"].items()))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    spec = TorusSpec(args.q, args.v)
    report = analyze(spec, args.oracles)
    _emit(report.to_dict(timings=not args.no_timings), args.json, _render_report)
    return 4 if report.failed else 0


def cmd_frobenius(args) -> int:
    out = {"gens": args.gens, "frobenius": frobenius_bruteforce(args.gens),
           "apery": apery_set(args.gens)}
    _emit(out, args.json, lambda o: f"g({', '.join(map(str, o['gens']))}) = {o['frobenius']}")
    return 0


def cmd_ci(args) -> int:
    dec = ci_gluing(args.gens)
    out = {"gens": args.gens, "is_ci": dec.is_ci}
    if dec.is_ci:
        out["generators"] = [{"binomial": str(g), "degree": g.degree(args.gens)}
                             for g in dec.generators]
        out["frobenius"] = dec.frobenius
        out["tree"] = dec.tree.to_dict() if dec.tree else None

    def render(o):
        lines = [f"complete intersection: {o['is_ci']}"]
        for g in o.get("generators", []):
            lines.append(f"  {g['binomial']}    [deg {g['degree']}]")
        if o["is_ci"]:
            lines.append(f"Frobenius number: {o['frobenius']}")
        return "\n".join(lines)

    _emit(out, args.json, render)
    return 0


def cmd_hilbert(args) -> int:
    spec = TorusSpec(args.q, args.v)
    od = reduce_orders(element_orders(spec))
    _, p_gens, _ = toric_generators(od.dprime)
    if p_gens is None:
        raise ResourceError("gb_elements", cap("gb_elements"))
    ix = GradedBinomialSet.standard([transfer(g, od.d) for g in p_gens], spec.n)
    hd = hilbert_data(buchberger(ix))
    top = hd.reg + 1 if args.max_degree is None else args.max_degree
    out = {"q": spec.q, "v": list(spec.v), "reg": hd.reg, "degree": hd.degree,
           "hvector": list(hd.hvector), "values": [hd.value(k) for k in range(top + 1)]}
    _emit(out, args.json, lambda o: "\n".join(
        [f"reg = {o['reg']}, degree = {o['degree']}"]
        + [f"H({k}) = {x}" for k, x in enumerate(o["values"])]))
    return 0


def cmd_code(args) -> int:
    spec = TorusSpec(args.q, args.v)
    cp = code_params(spec, args.d, args.distance)
    out = {"q": spec.q, "v": list(spec.v), "d": cp.d, "length": cp.length,
           "dimension": cp.dimension, "min_distance": cp.min_distance}
    _emit(out, args.json, lambda o: (
        f"C_X({o['d']}): length {o['length']}, dimension {o['dimension']}"
        + (f", minimum distance {o['min_distance']}" if o["min_distance"] else "")))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tik", description=(
        "Vanishing ideals of degenerate tori over prime fields: generators, "
        "complete intersection test, degree, regularity, Frobenius number."))
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full analysis of one torus")
    a.add_argument("--q", type=int, required=True, help="prime field size")
    a.add_argument("--v", type=_int_list, required=True, help="exponents v_1,...,v_n")
    a.add_argument("--oracles", type=_oracle_list, default=["lattice"],
                   help=f"comma list from {','.join(ORACLES)} or 'all' (default: lattice)")
    a.add_argument("--no-timings", action="store_true", help="omit timings (byte-stable output)")
    a.set_defaults(func=cmd_analyze)

    f = sub.add_parser("frobenius", help="Frobenius number of a numerical semigroup")
    f.add_argument("--gens", type=_int_list, required=True)
    f.set_defaults(func=cmd_frobenius)

    c = sub.add_parser("ci", help="complete intersection test for a toric ideal")
    c.add_argument("--gens", type=_int_list, required=True)
    c.set_defaults(func=cmd_ci)

    h = sub.add_parser("hilbert", help="Hilbert function of S/I(X)")
    h.add_argument("--q", type=int, required=True)
    h.add_argument("--v", type=_int_list, required=True)
    h.add_argument("--max-degree", type=int)
    h.set_defaults(func=cmd_hilbert)

    k = sub.add_parser("code", help="parameters of the evaluation code C_X(d)")
    k.add_argument("--q", type=int, required=True)
    k.add_argument("--v", type=_int_list, required=True)
    k.add_argument("--d", type=int, required=True)
    k.add_argument("--distance", action="store_true", help="brute-force the minimum distance")
    k.set_defaults(func=cmd_code)

    for sp in (a, f, c, h, k):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        get_caps()  # reject a malformed TIK_CAPS before doing any work
        return args.func(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ResourceError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except CrossCheckError as e:
        print(f"cross-check failed: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
