"""Command-line interface: ``analyze``, ``verify`` and ``sweep``.

Exit codes: 0 success, 1 a verified claim failed, 2 usage error,
3 resource cap exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .circulant import CirculantSpec, all_specs, build_circulant, parse_connection_set
from .complex import default_max_faces, f_vector, h_vector, independence_complex, reduced_euler_characteristic
from .errors import ResourceLimitError, SpecError
from .homology import RATIONALS, FieldSpec, is_prime
from .invariants import DEFAULT_MAX_N_BETTI, algebraic_report, hilbert_data
from .theorems import CLAIM_IDS, Options, Status, euler_zero_search, verify_claim

EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4


def analyze_record(spec: CirculantSpec, field: FieldSpec = RATIONALS, want_betti: bool = False,
                   symmetry: bool = True, max_faces: int | None = None,
                   max_n_betti: int = DEFAULT_MAX_N_BETTI) -> dict:
    """All invariants of one instance as a JSON-ready dict with stable keys."""
    g = build_circulant(spec)
    cx = independence_complex(g, max_faces)
    f = f_vector(cx)
    hd = hilbert_data(f, spec.n)
    rec = {
        "n": spec.n,
        "S": list(spec.S),
        "edges": g.edge_count(),
        "f": list(f),
        "h": list(h_vector(f)),
        "euler": reduced_euler_characteristic(f),
        "krull_dim": cx.dim + 1,
        "ri": hd.ri,
        "k_poly": list(hd.k_poly),
    }
    if want_betti:
        rep = algebraic_report(cx, field, use_symmetry=symmetry, max_n=max_n_betti)
        rec.update({
            "field": str(field),
            "betti": rep.betti.as_records(),
            "pd": rep.projective_dimension,
            "depth": rep.depth,
            "reg": rep.regularity,
            "cm": rep.is_cohen_macaulay,
            "gorenstein": rep.is_gorenstein,
            "level": rep.is_level,
        })
        if rep.cm_type is not None:
            rec["cm_type"] = rep.cm_type
    return rec


def recheck_record(rec: dict, symmetry: bool = True) -> bool:
    """Recompute a stored record from its (n, S) and compare every key."""
    spec = CirculantSpec(rec["n"], tuple(rec["S"]))
    field = FieldSpec.parse(rec["field"]) if "field" in rec else RATIONALS
    return analyze_record(spec, field, "betti" in rec, symmetry) == rec


def read_records(path: str) -> list[dict]:
    with open(path) as fh:
        return [json.loads(line) for line in fh if line.strip()]


def dumps(rec: dict) -> str:
    return json.dumps(rec, separators=(",", ":"))


def _fmt_set(values) -> str:
    return "{" + ",".join(map(str, values)) + "}"


def format_analysis(rec: dict) -> str:
    lines = [
        f"C_{rec['n']}({_fmt_set(rec['S'])})",
        f"  edges            {rec['edges']}",
        f"  f-vector         {tuple(rec['f'])}",
        f"  h-vector         {tuple(rec['h'])}",
        f"  reduced euler    {rec['euler']}",
        f"  krull dimension  {rec['krull_dim']}",
        f"  K-polynomial     {rec['k_poly']}",
        f"  regularity index {rec['ri']}",
    ]
    if "betti" in rec:
        from .invariants import BettiTable
        table = BettiTable(FieldSpec.parse(rec["field"]), rec["n"],
                           {(b["i"], b["j"]): b["value"] for b in rec["betti"]})
        lines += [
            f"  field            {rec['field']}",
            "  betti table:",
            *("    " + row for row in table.format().splitlines()),
            f"  projective dim   {rec['pd']}",
            f"  depth            {rec['depth']}",
            f"  regularity       {rec['reg']}",
            f"  cohen-macaulay   {rec['cm']}",
            f"  gorenstein       {rec['gorenstein']}",
            f"  level            {rec['level']}",
        ]
        if "cm_type" in rec:
            lines.append(f"  cm type          {rec['cm_type']}")
    return "\n".join(lines)


# -- argument handling -------------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except SpecError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", type=_field, default=RATIONALS, help="q (default) or p:<prime>")
    p.add_argument("--symmetry", action=argparse.BooleanOptionalAction, default=True,
                   help="dihedral orbit reduction in Hochster sums")
    p.add_argument("--max-faces", type=int, default=None,
                   help="face-count cap (default: $CIRCULANT_MAX_FACES or 2^24)")
    p.add_argument("--max-n-betti", type=int, default=DEFAULT_MAX_N_BETTI)
    p.add_argument("--json", action="store_true", help="JSON Lines output (default when piped)")


def _add_range(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None, help="a single n")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--n-list", type=_int_list, default=None)
    p.add_argument("--prime-only", action="store_true")
    p.add_argument("--composite-only", action="store_true")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-sr",
        description="Invariants of Stanley-Reisner rings of independence complexes of circulant graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="all invariants of one C_n(S)")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--s", default="", help="connection set, e.g. 2,3 (empty string for S = ∅)")
    a.add_argument("--betti", action="store_true", help="also compute the Betti table and ring report")
    _add_common(a)

    v = sub.add_parser("verify", help="check one claim over a range of instances")
    v.add_argument("claim", choices=CLAIM_IDS)
    v.add_argument("--s", default=None, help="restrict to this single connection set")
    v.add_argument("--include-empty", action="store_true",
                   help="conj-euler: also report the degenerate S = ∅ instances")
    _add_range(v)
    _add_common(v)

    s = sub.add_parser("sweep", help="write one JSON record per (n, S)")
    _add_range(s)
    s.add_argument("--betti", action=argparse.BooleanOptionalAction, default=True)
    s.add_argument("-o", "--output", default="-")
    _add_common(s)
    return parser


def _n_values(args, parser) -> list[int]:
    if args.n_list is not None:
        ns = args.n_list
    elif args.n is not None:
        ns = [args.n]
    elif args.n_max is not None:
        ns = list(range(args.n_min, args.n_max + 1))
    else:
        parser.error("give --n, --n-max or --n-list")
    if any(n < 2 for n in ns):
        parser.error("every n must be >= 2")
    if args.prime_only and args.composite_only:
        parser.error("--prime-only and --composite-only are exclusive")
    if args.prime_only:
        ns = [n for n in ns if is_prime(n)]
    if args.composite_only:
        ns = [n for n in ns if not is_prime(n)]
    return sorted(set(ns))


def _options(args) -> Options:
    return Options(args.field, args.symmetry, args.max_faces, args.max_n_betti)


def _emit(out, rec: dict, as_json: bool, text: str) -> None:
    out.write((dumps(rec) if as_json else text) + "\n")


def cmd_analyze(args, parser, out) -> int:
    spec = CirculantSpec(args.n, parse_connection_set(args.s))
    rec = analyze_record(spec, args.field, args.betti, args.symmetry,
                         args.max_faces, args.max_n_betti)
    _emit(out, rec, args.json, format_analysis(rec))
    return EXIT_OK


def cmd_verify(args, parser, out) -> int:
    ns = _n_values(args, parser)
    s_filter = None
    if args.s is not None:
        wanted = tuple(sorted(set(parse_connection_set(args.s))))
        s_filter = lambda spec: spec.S == wanted  # noqa: E731
    options = _options(args)

    if args.claim == "conj-euler":
        found = euler_zero_search(ns, s_filter, args.include_empty, options)
        searched = sum(1 for n in ns for sp in all_specs(n)
                       if (s_filter is None or s_filter(sp)) and (sp.S or args.include_empty))
        for sp in found:
            rec = {"claim": "conj-euler", "n": sp.n, "S": list(sp.S), "euler": 0}
            _emit(out, rec, args.json, f"conj-euler  {sp}  euler=0")
        summary = {"summary": True, "claim": "conj-euler", "searched": searched, "findings": len(found)}
        _emit(out, summary, args.json, f"conj-euler: {len(found)} findings among {searched} instances")
        return EXIT_OK

    results = verify_claim(args.claim, ns, s_filter, options, workers=args.workers)
    counts = {st: 0 for st in Status}
    for r in results:
        counts[r.status] += 1
        text = f"{r.claim}  {r.spec}  {r.status.value}"
        if r.witness and r.status is not Status.HOLDS:
            text += f"  {json.dumps(r.witness)}"
        _emit(out, r.to_record(), args.json, text)
    summary = {"summary": True, "claim": args.claim,
               "holds": counts[Status.HOLDS], "fails": counts[Status.FAILS],
               "inapplicable": counts[Status.INAPPLICABLE]}
    _emit(out, summary, args.json,
          f"{args.claim}: {summary['holds']} hold, {summary['fails']} fail, "
          f"{summary['inapplicable']} inapplicable")
    return EXIT_FAILS if counts[Status.FAILS] else EXIT_OK


def _sweep_job(job):
    spec, args = job
    return analyze_record(spec, *args)


def sweep_records(ns: Iterable[int], field: FieldSpec = RATIONALS, want_betti: bool = True,
                  symmetry: bool = True, max_faces: int | None = None,
                  max_n_betti: int = DEFAULT_MAX_N_BETTI, workers: int = 1) -> list[dict]:
    """Records for every (n, S), in (n, S-bitmask) order regardless of worker count."""
    specs = [sp for n in sorted(set(ns)) for sp in all_specs(n)]
    jobs = [(sp, (field, want_betti, symmetry, max_faces, max_n_betti)) for sp in specs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_sweep_job, jobs))
    return [_sweep_job(j) for j in jobs]


def cmd_sweep(args, parser, out) -> int:
    ns = _n_values(args, parser)
    records = sweep_records(ns, args.field, args.betti, args.symmetry,
                            args.max_faces, args.max_n_betti, args.workers)
    payload = "".join(dumps(r) + "\n" for r in records)
    if args.output == "-":
        out.write(payload)
    else:
        with open(args.output, "w") as fh:
            fh.write(payload)
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.json and not (hasattr(out, "isatty") and out.isatty()):
        args.json = True
    try:
        if args.max_faces is None:
            args.max_faces = default_max_faces()
        if args.max_faces <= 0 or args.max_n_betti <= 0:
            parser.error("caps must be positive")
        return COMMANDS[args.command](args, parser, out)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
