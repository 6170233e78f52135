"""
Command-line front end.

    staircase-cauchy corners --shape 2,4,4,4,5,5
    staircase-cauchy hb --shape 3,4,4 --d 2,3,1
    staircase-cauchy key --lambda 1,0,2 --n 3 --format tsv
    staircase-cauchy verify --shape 1,2,3 --identity all --max-degree 4 --json out.json

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import comb

from .arrays import ORIENTATIONS, DLPoset, enumerate_dl
from .cauchy import (DEFAULT_ORIENTATION, VerificationReport, vdk_char, verify, verify_agl,
                     verify_vdk)
from .compositions import Composition, Partition
from .polynomials import BigradedPolynomial, demazure_atom, key_polynomial, schur
from .serpentines import half_bubble_sort, is_admissible, iterated_chain, serpentines
from .shapes import StaircaseShape, parse_shape, staircase_corners, transpose

FORMATS = ("json", "tsv", "pretty")
IDENTITY_CHOICES = {"right": ["right"], "left": ["left"], "alt": ["alternating"],
                    "alternating": ["alternating"], "all": ["right", "left", "alternating"]}
ARRAY_WARNING = 10 ** 7


class UsageError(Exception):
    """Bad command-line input; reported with exit code 2."""


@dataclass
class CliConfig:
    command: str
    shape: StaircaseShape | None
    max_degree: int
    output: str | None
    fmt: str


def parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def estimated_arrays(s: StaircaseShape, max_degree: int) -> int:
    """Number of arrays on ``s`` of degree ``<= max_degree`` (the size of the lhs enumeration)."""
    cells = len(s.cells())
    return comb(cells + max_degree, max_degree)


def _poly_out(p: BigradedPolynomial, fmt: str):
    if fmt == "json":
        return p.to_list()
    if fmt == "tsv":
        return p.to_tsv()
    return str(p)


def _dump(payload, fmt: str) -> str:
    if isinstance(payload, str):
        return payload
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    if fmt == "tsv":
        return "\n".join("\t".join(str(v) for v in row) if isinstance(row, (list, tuple)) else str(row)
                         for row in payload) if isinstance(payload, list) else json.dumps(payload)
    return json.dumps(payload, indent=2, sort_keys=True)


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required for this command")
    return value


# -- subcommands: each returns (payload, exit_code) --------------------------------------------

def cmd_corners(args, cfg: CliConfig):
    sc = staircase_corners(cfg.shape)
    if cfg.fmt == "pretty":
        lines = []
        for i in range(1, cfg.shape.height + 1):
            row = []
            for j in range(1, cfg.shape.m + 1):
                row.append("X" if (i, j) in sc.corners else ("." if (i, j) in cfg.shape else " "))
            lines.append(" ".join(row).rstrip())
        return "\n".join(lines), 0
    return sc.to_dict(), 0


def cmd_transpose(args, cfg: CliConfig):
    t = transpose(cfg.shape)
    if cfg.fmt == "pretty":
        return ",".join(map(str, t.columns)), 0
    return {"shape": list(cfg.shape.columns), "transpose": list(t.columns)}, 0


def cmd_serpentines(args, cfg: CliConfig):
    lam = parse_ints(_require(args.lam, "--lambda"))
    d = _require(args.d_int, "--d")
    n = args.n if args.n is not None else len(lam)
    if n < len(lam):
        raise UsageError(f"--n {n} is shorter than lambda")
    result = [list(mu.padded(n)) for mu in serpentines(lam, d, n)]
    if cfg.fmt == "tsv":
        return "\n".join(",".join(map(str, mu)) for mu in result), 0
    return result, 0


def cmd_hb(args, cfg: CliConfig):
    d = parse_ints(_require(args.d, "--d"))
    if len(d) > cfg.shape.m:
        raise UsageError(f"d has {len(d)} entries but the shape has {cfg.shape.m} columns")
    if not is_admissible(d, cfg.shape):
        raise UsageError(f"{list(d)} is not admissible for shape {list(cfg.shape.columns)}")
    chain = [list(mu) for mu in iterated_chain(d, cfg.shape)]
    return {"d": list(Composition(d).padded(cfg.shape.m)), "chain": chain,
            "hb": list(half_bubble_sort(d, cfg.shape))}, 0


def cmd_dl(args, cfg: CliConfig):
    if args.lam is not None:
        lam = parse_ints(args.lam)
        poset = DLPoset(cfg.shape, sorted(lam, reverse=True), orientation=args.orientation)
        arrays = list(poset)
        out = []
        for a in arrays:
            entry = a.to_dict()
            entry.update(hor=list(a.hor), vrt=list(a.vrt),
                         below=[poset.index[b] for b in poset.down_set(a) if b != a])
            out.append(entry)
        return out, 0
    degree = _require(args.degree, "--degree or --lambda")
    out = []
    for a in enumerate_dl(cfg.shape, degree):
        entry = a.to_dict()
        entry.update(hor=list(a.hor), vrt=list(a.vrt))
        out.append(entry)
    return out, 0


def _lambda_and_n(args) -> tuple[tuple[int, ...], int]:
    lam = parse_ints(_require(args.lam, "--lambda"))
    n = args.n if args.n is not None else len(lam)
    if n < len(Composition(lam)):
        raise UsageError(f"--n {n} is shorter than lambda")
    return lam, n


def cmd_key(args, cfg: CliConfig):
    lam, n = _lambda_and_n(args)
    return _poly_out(key_polynomial(lam, n), cfg.fmt), 0


def cmd_atom(args, cfg: CliConfig):
    lam, n = _lambda_and_n(args)
    return _poly_out(demazure_atom(lam, n), cfg.fmt), 0


def cmd_schur(args, cfg: CliConfig):
    lam, n = _lambda_and_n(args)
    try:
        Partition(lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _poly_out(schur(lam, n), cfg.fmt), 0


def _report_payload(reports: list[VerificationReport], args, cfg: CliConfig):
    if not args.timing:
        for r in reports:
            r.wall_time = None
    code = 0 if all(r.ok for r in reports) else 1
    data = [r.to_dict() for r in reports]
    if cfg.output:
        with open(cfg.output, "w") as fh:
            json.dump(data if len(data) > 1 else data[0], fh, sort_keys=True, indent=2)
            fh.write("\n")
    if cfg.fmt == "json":
        return (data if len(data) > 1 else data[0]), code
    if cfg.fmt == "tsv":
        rows = ["identity\tshape\tdegree\texact\tterms_checked"]
        for r in reports:
            shape = ",".join(map(str, r.shape))
            rows.extend(f"{r.identity}\t{shape}\t{st.degree}\t{str(st.exact).lower()}\t{st.terms_checked}"
                        for st in r.statuses)
        return "\n".join(rows), code
    return "\n".join(r.summary() for r in reports), code


def _guard(s: StaircaseShape, max_degree: int) -> None:
    est = estimated_arrays(s, max_degree)
    if est > ARRAY_WARNING:
        print(f"warning: about {est:.2e} arrays to enumerate; this may take a long time",
              file=sys.stderr)


def cmd_vdk_char(args, cfg: CliConfig):
    if args.lam is not None:
        lam = sorted(parse_ints(args.lam), reverse=True)
        poset = DLPoset(cfg.shape, lam, orientation=args.orientation)
        out = []
        code = 0
        for a in poset:
            ch = vdk_char(a, poset)
            code |= not ch.match
            out.append({"array": a.to_dict(), "hor": list(a.hor), "vrt": list(a.vrt),
                        "character": _poly_out(ch.atom_form, "json" if cfg.fmt != "pretty" else "pretty"),
                        "match": ch.match})
        if cfg.fmt == "pretty":
            return "\n".join(f"vrt={e['vrt']} match={e['match']}: {e['character']}" for e in out), int(code)
        return out, int(code)
    _guard(cfg.shape, cfg.max_degree)
    return _report_payload([verify_vdk(cfg.shape, cfg.max_degree, args.orientation)], args, cfg)


def cmd_verify(args, cfg: CliConfig):
    _guard(cfg.shape, cfg.max_degree)
    reports = [verify(cfg.shape, cfg.max_degree, which, args.orientation)
               for which in IDENTITY_CHOICES[args.identity]]
    return _report_payload(reports, args, cfg)


def cmd_agl_check(args, cfg: CliConfig):
    try:
        report = verify_agl(args.n_agl, args.p, args.q, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report_payload([report], args, cfg)


COMMANDS = {
    "corners": (cmd_corners, True), "transpose": (cmd_transpose, True),
    "serpentines": (cmd_serpentines, False), "hb": (cmd_hb, True), "dl": (cmd_dl, True),
    "key": (cmd_key, False), "atom": (cmd_atom, False), "schur": (cmd_schur, False),
    "vdk-char": (cmd_vdk_char, True), "verify": (cmd_verify, True),
    "agl-check": (cmd_agl_check, False),
}
PRETTY_BY_DEFAULT = {"verify", "vdk-char", "agl-check"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default: pretty for checks, json otherwise)")
    common.add_argument("--json", dest="output", metavar="PATH",
                        help="also write the JSON report to PATH")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock times in reports (makes output non-reproducible)")

    parser = _Parser(prog="staircase-cauchy",
                     description="Cauchy identities for staircase matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def shaped(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--shape", required=True, help="column lengths, e.g. 2,4,4,4,5,5")
        return p

    shaped("corners", "staircase corners and their Hasse diagram")
    shaped("transpose", "transposed shape")

    p = sub.add_parser("serpentines", parents=[common], help="d-serpentines of a composition")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--d", dest="d_int", type=int, required=True)
    p.add_argument("--n", type=int)

    p = shaped("hb", "iterated serpentine chain and half-bubble-sort")
    p.add_argument("--d", required=True)

    p = shaped("dl", "DL-dense arrays of a degree, or the poset DL(lambda)")
    p.add_argument("--degree", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--orientation", choices=ORIENTATIONS, default="cherednik")

    for name, help_text in [("key", "key polynomial"), ("atom", "Demazure atom"),
                            ("schur", "Schur polynomial")]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--n", type=int)

    p = shaped("vdk-char", "generalized van der Kallen characters (atom form vs Mobius form)")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--orientation", choices=ORIENTATIONS, default=DEFAULT_ORIENTATION)

    p = shaped("verify", "verify the Cauchy identities degree by degree")
    p.add_argument("--identity", choices=sorted(IDENTITY_CHOICES), default="all")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--orientation", choices=ORIENTATIONS, default=DEFAULT_ORIENTATION)

    p = sub.add_parser("agl-check", parents=[common], help="AGL weights against half-bubble-sort")
    p.add_argument("--n", dest="n_agl", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--bound", type=int, default=3)
    return parser


def make_config(args) -> CliConfig:
    shape = None
    if getattr(args, "shape", None) is not None:
        try:
            shape = parse_shape(args.shape)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    max_degree = getattr(args, "max_degree", 3)
    if max_degree is not None and max_degree < 0:
        raise UsageError("--max-degree must be non-negative")
    fmt = args.format or ("pretty" if args.command in PRETTY_BY_DEFAULT else "json")
    return CliConfig(args.command, shape, max_degree, args.output, fmt)


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = make_config(args)
        handler, _ = COMMANDS[args.command]
        payload, code = handler(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_dump(payload, cfg.fmt))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
