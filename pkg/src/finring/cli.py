"""``ring`` command line: info, classify, inverse, transfer, verify, validate.

Exit codes: 0 success, 1 verification failure (or invalid ring for ``validate``),
2 malformed input or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .inverses import VARIANTS, classify, drazin, strongly_clean_decompositions
from .ring import DEFAULT_ORDER_CAP, Element, FiniteRing, RingError, parse_element, validate_ring
from .ringspec import build_ring, load_registry, load_table
from .structure import center, structure
from .transfer import (
    TransferFailure,
    TransferWitness,
    cline,
    jacobson_inverse,
    one_minus_clean_transfer,
    pseudo_one_minus_transfer,
    strongly_clean_transfer,
)
from .verifier import (
    DEFAULT_REGISTRY,
    PAIR_CAP,
    THEOREMS,
    WEAKENED,
    ConfigError,
    reports_json,
    run_theorem,
)


@dataclass
class CliConfig:
    order_cap: int = DEFAULT_ORDER_CAP
    exhaustive_cap: int = PAIR_CAP
    registry_path: str | None = None
    output_mode: str = "text"

    def __post_init__(self):
        if self.order_cap < 1 or self.exhaustive_cap < 1:
            raise ConfigError("caps must be positive")

    def registry(self) -> list[str]:
        if self.registry_path:
            return load_registry(self.registry_path)
        return list(DEFAULT_REGISTRY)


def _labels(ring: FiniteRing, idx) -> list[str]:
    return [ring.labels[i] for i in sorted(idx)]


def _emit(doc, as_json: bool, text_lines: list[str], out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def cmd_info(args, cfg: CliConfig) -> int:
    r = build_ring(args.ring, cap=cfg.order_cap)
    s = structure(r)
    sets = {
        "units": _labels(r, s.units),
        "idempotents": _labels(r, s.idempotents),
        "nilpotents": _labels(r, s.nilpotents),
        "jacobson": _labels(r, s.jacobson),
        "j_sharp": _labels(r, s.j_sharp),
        "qnil": _labels(r, s.qnil),
        "center": _labels(r, center(r)),
    }
    doc = {"ring": args.ring, "order": r.order, "zero": r.labels[r.zero], "one": r.labels[r.one],
           "sets": {k: {"size": len(v), "members": v} for k, v in sets.items()},
           "unit_inverses": {r.labels[u]: r.labels[v] for u, v in sorted(s.units.items())},
           "nilpotency_index": {r.labels[x]: m for x, m in sorted(s.nilpotents.items())}}
    lines = [f"ring: {args.ring}", f"order: {r.order}"]
    lines += [f"{k} ({len(v)}): {{{', '.join(v)}}}" for k, v in sets.items()]
    _emit(doc, args.json, lines)
    return 0


def _element(r: FiniteRing, text: str) -> Element:
    return parse_element(r, text)


def cmd_classify(args, cfg: CliConfig) -> int:
    r = build_ring(args.ring, cap=cfg.order_cap)
    a = _element(r, args.element)
    profile = classify(a).to_dict()
    doc = {"ring": args.ring, "element": str(a), "profile": profile}
    lines = [f"element {a} in {args.ring}"] + [f"  {k}: {'yes' if v else 'no'}" for k, v in profile.items()]
    _emit(doc, args.json, lines)
    return 0


def cmd_inverse(args, cfg: CliConfig) -> int:
    r = build_ring(args.ring, cap=cfg.order_cap)
    a = _element(r, args.element)
    res = drazin(a, args.variant)
    doc = {"ring": args.ring, "element": str(a), "variant": args.variant,
           "result": res.to_dict() if res else None}
    if res is None:
        lines = ["none"]
    else:
        lines = [f"inverse: {res.inverse}", f"index: {res.index}",
                 f"spectral_idempotent: {res.spectral_idempotent}"]
    _emit(doc, args.json, lines)
    return 0


def _clean_witnesses(a: Element, b: Element, one_minus: bool) -> list[TransferWitness]:
    one = a.ring.one_element
    source = one - a * b if one_minus else a * b
    push = one_minus_clean_transfer if one_minus else strongly_clean_transfer
    formula = "one-minus-clean" if one_minus else "clean"
    out = []
    for d in strongly_clean_decompositions(source):
        res = push(a, b, d)
        out.append(TransferWitness(formula, {"a": str(a), "b": str(b), **d.to_dict()},
                                   {"idempotent": str(res.idempotent), "unit": str(res.unit)}))
    return out


def cmd_transfer(args, cfg: CliConfig) -> int:
    r = build_ring(args.ring, cap=cfg.order_cap)
    a, b = _element(r, args.a), _element(r, args.b)
    inputs = {"a": str(a), "b": str(b)}
    if args.formula == "jacobson":
        x = jacobson_inverse(a, b)
        witnesses = [TransferWitness("jacobson", inputs, {"inverse_of_1_plus_ba": str(x) if x else None})]
    elif args.formula == "cline":
        variant = args.variant or "drazin"
        res = cline(a, b, variant)
        witnesses = [TransferWitness(f"cline-{variant}", inputs, res.to_dict() if res else {"result": None})]
    elif args.formula in ("clean", "one-minus-clean"):
        witnesses = _clean_witnesses(a, b, args.formula == "one-minus-clean")
    else:
        w = pseudo_one_minus_transfer(a, b)
        witnesses = [w] if w else [TransferWitness("pseudo-one-minus", inputs, {"result": None})]
    docs = [w.to_dict() for w in witnesses]
    lines = []
    for w in witnesses:
        lines.append(f"{w.formula_id}: " + ", ".join(f"{k}={v}" for k, v in w.inputs.items()))
        lines += [f"  {k}: {v}" for k, v in w.outputs.items()]
    if not witnesses:
        lines = ["none"]
    _emit(docs if len(docs) != 1 else docs[0], args.json, lines)
    return 0


def cmd_verify(args, cfg: CliConfig) -> int:
    rings = cfg.registry() if args.ring == "registry" else [args.ring]
    ids = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    mode = "sample" if args.sample is not None else "exhaustive"
    reports = []
    for spec in rings:
        for tid in ids:
            reports.append(run_theorem(tid, spec, mode=mode, sample=args.sample, seed=args.seed,
                                       force=args.force, pair_cap=cfg.exhaustive_cap))
    ok = all(r.passed for r in reports)
    if args.json is not None:
        text = reports_json(reports, timings=args.timings)
        if args.json == "-":
            sys.stdout.write(text)
        else:
            Path(args.json).write_text(text)
    if args.json != "-":
        for rep in reports:
            print(rep.summary())
            for f in rep.failures[:5]:
                print(f"    {f}")
        print(f"{sum(r.passed for r in reports)}/{len(reports)} reports passed")
    return 0 if ok else 1


def cmd_validate(args, cfg: CliConfig) -> int:
    if args.ring.startswith("table:"):
        r = load_table(args.ring[len("table:"):], cap=cfg.order_cap, validate=False)
    else:
        r = build_ring(args.ring, cap=cfg.order_cap)
    rep = validate_ring(r)
    doc = {"ring": args.ring, "order": r.order, "valid": rep.valid, "law": rep.law,
           "witness": list(rep.witness) if rep.witness else None}
    _emit(doc, args.json, [f"{args.ring}: {rep}"])
    return 0 if rep.valid else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ring", description="Finite ring generalized-inverse toolkit.")
    p.add_argument("--order-cap", type=int, default=None,
                   help="largest ring order to build (default 4096, env RING_ORDER_CAP)")
    p.add_argument("--exhaustive-cap", type=int, default=PAIR_CAP,
                   help="largest ring order for pair-quantified theorems")
    p.add_argument("--registry-file", default=None, help="file with one RingSpec per line")
    sub = p.add_subparsers(dest="command", required=True)

    def with_json(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON")
        return sp

    sp = with_json(sub.add_parser("info", help="structural sets of a ring"))
    sp.add_argument("--ring", required=True)
    sp.set_defaults(func=cmd_info)

    sp = with_json(sub.add_parser("classify", help="property profile of an element"))
    sp.add_argument("--ring", required=True)
    sp.add_argument("--element", required=True)
    sp.set_defaults(func=cmd_classify)

    sp = with_json(sub.add_parser("inverse", help="group / Drazin-type inverse of an element"))
    sp.add_argument("--variant", choices=VARIANTS, default="drazin")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--element", required=True)
    sp.set_defaults(func=cmd_inverse)

    sp = with_json(sub.add_parser("transfer", help="run a transfer formula"))
    sp.add_argument("--formula", required=True,
                    choices=["jacobson", "cline", "clean", "one-minus-clean", "pseudo-one-minus"])
    sp.add_argument("--ring", required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--variant", choices=["drazin", "pseudo", "generalized"])
    sp.set_defaults(func=cmd_transfer)

    sp = sub.add_parser("verify", help="check theorems exhaustively")
    sp.add_argument("--theorem", default="all")
    sp.add_argument("--ring", default="registry", help="RingSpec or 'registry'")
    sp.add_argument("--sample", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--force", action="store_true", help="ignore per-theorem order caps")
    sp.add_argument("--json", nargs="?", const="-", default=None, metavar="OUT",
                    help="write the JSON report to OUT (stdout if omitted)")
    sp.add_argument("--timings", action="store_true", help="include wall_time in JSON")
    sp.set_defaults(func=cmd_verify)

    sp = with_json(sub.add_parser("validate", help="check the ring axioms"))
    sp.add_argument("--ring", required=True)
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        order_cap = args.order_cap
        if order_cap is None:
            order_cap = int(os.environ.get("RING_ORDER_CAP", DEFAULT_ORDER_CAP))
        cfg = CliConfig(order_cap=order_cap, exhaustive_cap=args.exhaustive_cap,
                        registry_path=args.registry_file,
                        output_mode="json" if getattr(args, "json", None) else "text")
        if args.command == "verify" and args.theorem not in ("all", *THEOREMS, *WEAKENED):
            raise ConfigError(f"unknown theorem id {args.theorem!r}")
        return args.func(args, cfg)
    except (RingError, ConfigError, ValueError, OSError) as exc:
        print(f"ring: error: {exc}", file=sys.stderr)
        return 2
    except TransferFailure as exc:
        print(f"ring: transfer check failed: {exc} {exc.witness}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
