"""Command-line front end.  Every command prints one JSON document (or a text
table) with exact rationals; ``enum`` prints one record per line."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from . import __version__
from .embeddings import eps_min_dp, jet_obstruction, jv_equality_check, v_of
from .engine import EpsResult, IncidenceOracle, check_ample_necessary, eps_at_point
from .enumeration import ClassQuery, PHI, PSI, TailMode, enumerate_classes
from .errors import InconsistencyError, InputError
from .lattice import ClassVector, Pencil, Polarization, SurfaceSpec, parse_entries
from .ldp import SEVEN_TUPLES, a_r_table, build_configuration, discrepancies, eps_gen_ldp, pullback_anticanonical
from .weyl import crosscheck

TOOL = "seshadri"
SCHEMA = 1
LOG_LEVELS = {"off": logging.CRITICAL + 1, "info": logging.INFO, "debug": logging.DEBUG}


# ---------------------------------------------------------------- encoding

def rational(x) -> dict:
    x = Fraction(x)
    scaled = round(x * 10**12)  # exact, ties to even
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**12)
    return {"num": x.numerator, "den": x.denominator, "decimal": f"{sign}{whole}.{frac:012d}"}


def vector(v) -> dict | list | None:
    if v is None:
        return None
    if isinstance(v, ClassVector):
        return {"alpha": v.alpha, "beta": list(v.beta)}
    return [int(x) for x in v]


def encode_result(res: EpsResult) -> dict:
    return {
        "epsilon": rational(res.value),
        "case": res.case_tag,
        "witness": {"kind": res.witness.kind, "vector": vector(res.witness.vector)},
        "caps": res.caps,
        "terms": {k: rational(v) for k, v in res.terms.items()},
        "scale": rational(res.scale),
    }


# ---------------------------------------------------------------- input

def polarization_from_args(args) -> Polarization:
    if args.L is None:
        raise InputError("--L is required")
    entries = parse_entries(args.L)
    if args.surface == "p2":
        if args.n is not None:
            raise InputError("--n is only meaningful with --surface fn")
        r = len(entries) - 1
        if args.r is not None and args.r != r:
            raise InputError(f"--r {args.r} does not match {r} coefficients after a")
        if r >= 9 and not args.assert_pencil:
            raise InputError("an anticanonical pencil is not automatic for r >= 9; pass --assert-pencil")
        pencil = Pencil.ASSERTED if args.assert_pencil else None
        return Polarization(SurfaceSpec.p2(r, pencil), entries[0], tuple(entries[1:]))
    if args.n is None:
        raise InputError("--surface fn needs --n")
    if len(entries) < 2:
        raise InputError("--surface fn needs a,b[,c1,...]")
    r = len(entries) - 2
    if args.r is not None and args.r != r:
        raise InputError(f"--r {args.r} does not match {r} exceptional coefficients")
    if not args.assert_pencil:
        raise InputError("Hirzebruch inputs need --assert-pencil")
    return Polarization(SurfaceSpec.hirzebruch(args.n, r), entries[0], tuple(entries[1:]))


def echo_surface(args, L: Polarization) -> dict:
    doc = {"surface": args.surface, "r": L.r, "L": [rational(x) for x in L.entries()]}
    if args.surface == "fn":
        doc["n"] = args.n
    doc["pencil"] = L.surface.pencil.value
    return doc


def load_oracle(path: str | None) -> tuple[IncidenceOracle, dict | None]:
    if path is None:
        return IncidenceOracle(), None
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read oracle file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"oracle file is not valid JSON: {exc}") from exc
    return IncidenceOracle.from_dict(doc), doc


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


# ---------------------------------------------------------------- commands

def _eps(args, oracle_path):
    L = polarization_from_args(args)
    oracle, oracle_doc = load_oracle(oracle_path)
    if args.unsafe_cap and args.alpha_cap is None:
        raise InputError("--unsafe-cap needs --alpha-cap")
    res = eps_at_point(L, oracle, alpha_cap=args.alpha_cap, unsafe_cap=args.unsafe_cap,
                       workers=args.threads)
    echo = echo_surface(args, L)
    echo.update(oracle=oracle_doc, alpha_cap=args.alpha_cap, unsafe_cap=args.unsafe_cap)
    out = {"input": echo, **encode_result(res)}
    if args.unsafe_cap:
        out["watermark"] = "UNSAFE CAP: alpha cap below the certified bound, value not certified"
    return out


def cmd_eps_gen(args):
    return _eps(args, None)


def cmd_eps_point(args):
    return _eps(args, args.oracle)


def _dp_input(args) -> tuple[Polarization, dict]:
    L = polarization_from_args(args)
    return L, echo_surface(args, L)


def cmd_eps_min(args):
    L, echo = _dp_input(args)
    v = v_of(L)
    return {"input": echo, "epsilon_min": rational(eps_min_dp(L)), "v": rational(v.value),
            "witness": vector(v.witness), "caps": {"alpha_cap": 6}}


def cmd_vample(args):
    L, echo = _dp_input(args)
    v = v_of(L)
    return {
        "input": echo,
        "v": rational(v.value),
        "witness": vector(v.witness),
        "literal_v": None if v.literal_value is None else rational(v.literal_value),
        "literal_differs": v.literal_differs,
        "caps": {"alpha_cap": 6},
    }


def cmd_jet_check(args):
    L, echo = _dp_input(args)
    echo["k"] = args.k
    return {"input": echo, "epsilon_min": rational(eps_min_dp(L)),
            "not_k_jet_ample": jet_obstruction(L, args.k)}


def cmd_jv_check(args):
    L, echo = _dp_input(args)
    rep = jv_equality_check(L)
    return {"input": echo, "equal": rep.equal, "v": rational(rep.v),
            "epsilon_min": rational(rep.eps_min), "condition_b": rep.condition_b}


def cmd_check_ample(args):
    L = polarization_from_args(args)
    rep = check_ample_necessary(L, workers=args.threads)
    return {
        "input": echo_surface(args, L),
        "passed": rep.passed,
        "caps": {"alpha_cap": rep.cap},
        "violations": [{"kind": v["kind"], "vector": vector(v["vector"]), "value": rational(v["value"])}
                       for v in rep.violations],
    }


def cmd_weyl_check(args):
    rep = crosscheck(args.s, args.alpha_max, TailMode(args.tail))
    diffs = {name: {side: [vector(v) for v in vs] for side, vs in d.items()} for name, d in rep.diffs.items()}
    return {"input": {"s": args.s, "alpha_max": args.alpha_max, "tail": args.tail},
            "phi_equal": rep.phi_equal, "psi_equal": rep.psi_equal, "diffs": diffs}


def _ldp_one(k):
    cfg = build_configuration(k)
    res = eps_gen_ldp(k)
    return {
        "k": list(k),
        "curves": [vector(c) for c in cfg.curves],
        "intersection_matrix": [list(row) for row in cfg.intersection_matrix],
        "discrepancies": [rational(a) for a in discrepancies(cfg)],
        "polarization": [rational(x) for x in pullback_anticanonical(cfg).entries()],
        **encode_result(res),
    }


def cmd_ldp_verify(args):
    tuples = SEVEN_TUPLES if args.k == "all" else (int_list(args.k),)
    return {"input": {"k": args.k}, "results": [_ldp_one(k) for k in tuples]}


def cmd_ar_table(args):
    rs = range(1, 9) if args.r is None else [args.r]
    return {"input": {"r": args.r}, "table": [{"r": r, "epsilon": rational(a_r_table(r))} for r in rs]}


def cmd_enum(args):
    family = {"phi": PHI, "psi": PSI}[args.family]
    q = ClassQuery(args.s, *family, args.alpha_max, TailMode(args.tail))
    classes = enumerate_classes(q, workers=args.threads)
    header = {"schema": SCHEMA, "tool": TOOL, "version": __version__, "command": "enum",
              "input": {"s": args.s, "alpha_max": args.alpha_max, "family": args.family, "tail": args.tail},
              "count": len(classes)}
    if args.format == "text":
        return [f"# {args.family} s={args.s} alpha_max={args.alpha_max} tail={args.tail} count={len(classes)}"] + \
            [str(c) for c in classes]
    return [json.dumps(header)] + [json.dumps(vector(c)) for c in classes]


COMMANDS = {
    "eps-gen": cmd_eps_gen,
    "eps-point": cmd_eps_point,
    "eps-min": cmd_eps_min,
    "vample": cmd_vample,
    "jet-check": cmd_jet_check,
    "jv-check": cmd_jv_check,
    "enum": cmd_enum,
    "weyl-check": cmd_weyl_check,
    "ldp-verify": cmd_ldp_verify,
    "check-ample": cmd_check_ample,
    "ar-table": cmd_ar_table,
}


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for enumeration (output does not depend on it)")

    surface = argparse.ArgumentParser(add_help=False)
    surface.add_argument("--surface", choices=["p2", "fn"], default="p2")
    surface.add_argument("--n", type=int, help="Hirzebruch index (fn only)")
    surface.add_argument("--r", type=int, help="number of blown-up points (checked against --L)")
    surface.add_argument("--L", help="a,b1,...,br over P2 or a,b,c1,...,cr over F_n; rationals p/q allowed")
    surface.add_argument("--assert-pencil", action="store_true",
                         help="assert dim|-K| >= 1 where it is not automatic")

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--alpha-cap", type=int, help="raise the enumeration cap (never below the certified one)")
    caps.add_argument("--unsafe-cap", action="store_true", help="let --alpha-cap go below the certified cap")

    parser = argparse.ArgumentParser(prog=TOOL, description=__doc__)
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("eps-gen", parents=[common, surface, caps], help="Seshadri constant at a general point")
    p = sub.add_parser("eps-point", parents=[common, surface, caps], help="Seshadri constant at an oracle-described point")
    p.add_argument("--oracle", help="JSON file with in_Z, psi_witnesses, fixed_curves")
    sub.add_parser("eps-min", parents=[common, surface], help="minimal Seshadri constant on a del Pezzo surface")
    sub.add_parser("vample", parents=[common, surface], help="k-very ampleness order v(L)")
    p = sub.add_parser("jet-check", parents=[common, surface], help="epsilon-based k-jet ampleness obstruction")
    p.add_argument("--k", type=int, required=True)
    sub.add_parser("jv-check", parents=[common, surface], help="compare eps_min with v")
    sub.add_parser("check-ample", parents=[common, surface], help="necessary ampleness conditions")

    p = sub.add_parser("enum", parents=[common], help="list (-1)- or (-2)-classes")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--alpha-max", type=int, required=True)
    p.add_argument("--family", choices=["phi", "psi"], default="phi")
    p.add_argument("--tail", choices=[m.value for m in TailMode], default=TailMode.TAIL_GE_ONE.value)

    p = sub.add_parser("weyl-check", parents=[common], help="orbit versus Diophantine enumeration")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--alpha-max", type=int, required=True)
    p.add_argument("--tail", choices=[m.value for m in TailMode], default=TailMode.TAIL_GE_ONE.value)

    p = sub.add_parser("ldp-verify", parents=[common], help="log del Pezzo configurations")
    p.add_argument("--k", default="all", help="block lengths such as 3,2, or 'all'")

    p = sub.add_parser("ar-table", parents=[common], help="Seshadri constant of -K for 1..8 points")
    p.add_argument("--r", type=int)
    return parser


def _text(doc, prefix="") -> list[str]:
    if isinstance(doc, dict) and set(doc) >= {"num", "den", "decimal"}:
        value = str(doc["num"]) if doc["den"] == 1 else f"{doc['num']}/{doc['den']}"
        return [f"{prefix}: {value}"]
    if isinstance(doc, dict) and set(doc) == {"alpha", "beta"}:
        return [f"{prefix}: ({doc['alpha']};{','.join(map(str, doc['beta']))})"]
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            lines += _text(v, f"{prefix}.{k}" if prefix else k)
        return lines
    if isinstance(doc, list) and any(isinstance(x, (dict, list)) for x in doc):
        lines = []
        for i, v in enumerate(doc):
            lines += _text(v, f"{prefix}[{i}]")
        return lines
    return [f"{prefix}: {json.dumps(doc)}"]


def configure_logging() -> None:
    level = os.environ.get("SESHADRI_LOG", "off").strip().lower()
    if level not in LOG_LEVELS:
        raise InputError(f"SESHADRI_LOG must be one of {sorted(LOG_LEVELS)}, got {level!r}")
    logging.basicConfig(level=LOG_LEVELS[level], stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        configure_logging()
        if getattr(args, "threads", 1) < 1:
            raise InputError("--threads must be at least 1")
        out = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"inconsistent: {exc}", file=sys.stderr)
        return 3
    if isinstance(out, list):
        sys.stdout.write("\n".join(out) + "\n")
        return 0
    doc = {"schema": SCHEMA, "tool": TOOL, "version": __version__, "command": args.command, **out}
    if args.format == "text":
        sys.stdout.write("\n".join(_text(doc)) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0
