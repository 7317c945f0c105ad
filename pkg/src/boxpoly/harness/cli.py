"""Command-line entry point: ``boxpoly <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from boxpoly import kernels
from boxpoly.asymptotics import (
    convergence_report,
    hstar_limit_check,
    hstar_limit_distance,
    limit_profile,
    scaling_identity_check,
)
from boxpoly.families import (
    allones_classify,
    alpha_vector,
    geometric_local_hstar_fast,
    geometric_non_idp_witness,
    GeometricFamily,
)
from boxpoly.invariants import (
    DEFAULT_CAP,
    CapExceeded,
    boundary_hstar,
    find_non_idp_witness,
    gcd_criterion,
    hstar,
    idp_certificate,
    interior_hstar,
    local_hstar,
    smallest_interior_dilate,
    stapledon_decompose,
)
from boxpoly.simplex import DegenerateRowError, SimplexError, parse_spec

from . import emit as emitter
from .experiments import (
    PERTURBATION_PAIRS,
    RunResult,
    SampleConfig,
    SweepConfig,
    perturbation_experiment,
    run_compute,
    sample_random,
    summarize,
    sweep_partitions,
)
from .parallel import mapper
from .records import build_record


def _row(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction(f) -> str:
    return f"{f.numerator}/{f.denominator}"


def _print_json(obj) -> None:
    print(json.dumps(obj))


def _idp_mode(args, default: str = "skip") -> str:
    return "exhaustive" if getattr(args, "exhaustive_idp", False) else default


def _write_entries(args, entries, meta=None, summary=None, append=False) -> None:
    fmt = args.format
    if args.out is None:
        emitter.emit(entries, fmt, sys.stdout, args.timings)
    elif append and fmt == "json":
        with open(args.out, "a", encoding="utf-8") as fh:
            emitter.write_jsonl(entries, fh, args.timings)
    else:
        emitter.emit(entries, fmt, args.out, args.timings)
    if args.out is not None and meta is not None:
        emitter.write_meta(args.out, meta, summary or {})


def _resume_skip(args) -> frozenset[str]:
    if getattr(args, "resume", False):
        if args.out is None or args.format != "json":
            raise SystemExit("--resume needs --out with --format json")
        return emitter.existing_specs(args.out)
    return frozenset()


def _finish_run(args, result: RunResult) -> int:
    skip_mode = getattr(args, "resume", False)
    _write_entries(args, result.entries, result.meta, result.summary.to_json(), append=skip_mode)
    print(json.dumps({"summary": result.summary.to_json()}), file=sys.stderr)
    return 0


# -- commands -----------------------------------------------------------------


def cmd_compute(args) -> int:
    entries = [run_compute(spec, _idp_mode(args), args.cap) for spec in args.spec]
    _write_entries(args, entries)
    return 0


def cmd_hstar(args) -> int:
    s = parse_spec(args.spec[0])
    try:
        gcd_ok = gcd_criterion(s)
    except DegenerateRowError:
        gcd_ok = None
    _print_json({
        "spec": s.spec(),
        "hstar": str(hstar(s)),
        "box": str(local_hstar(s)),
        "interior_hstar": str(interior_hstar(s)),
        "boundary_hstar": str(boundary_hstar(s)),
        "smallest_interior_dilate": smallest_interior_dilate(s),
        "gcd_criterion": gcd_ok,
    })
    return 0


def cmd_stapledon(args) -> int:
    s = parse_spec(args.spec[0])
    dec = stapledon_decompose(s)
    _print_json({
        "spec": s.spec(),
        "ell": dec.ell_min,
        "a": list(dec.a_poly.coeffs),
        "b": list(dec.b_poly.coeffs),
    })
    return 0


def cmd_idp_witness(args) -> int:
    s = parse_spec(args.spec[0])
    try:
        if args.exhaustive_idp:
            w = idp_certificate(s, args.cap)
        else:
            w = find_non_idp_witness(s, args.height, args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}; raise --cap", file=sys.stderr)
        return 2
    if w is None:
        scope = "IDP holds" if args.exhaustive_idp else f"no witness at height {args.height}"
        _print_json({"spec": s.spec(), "witness": None, "result": scope})
    else:
        _print_json({"spec": s.spec(), "witness": list(w.point), "height": w.height})
    return 0


def cmd_alpha(args) -> int:
    av = alpha_vector(args.a, args.n)
    out = {"a": args.a, "N": args.n, "alpha": list(av.entries), "q": av.q, "r": av.r, "gcd": av.b}
    if args.n >= 2:
        out["all_ones_class"] = allones_classify(args.a + 2, args.n).value
    _print_json(out)
    return 0


def cmd_geometric(args) -> int:
    fam = GeometricFamily(args.q, args.k)
    box = geometric_local_hstar_fast(args.q, args.k)
    out = {"q": args.q, "k": args.k, "spec": fam.simplex().spec(), "box": list(box.coeffs)}
    if args.verify:
        out["verified"] = local_hstar(fam.simplex()) == box
    if args.witness:
        out["non_idp_witness"] = list(geometric_non_idp_witness(args.q, args.k, args.cap).point)
    if args.out is not None:
        emitter.emit([build_record(fam.simplex())], args.format, args.out, args.timings)
    _print_json(out)
    return 0


def cmd_asymptotic_check(args) -> int:
    a = args.row
    rep = convergence_report(a, args.r, args.k_max, mapper(args.jobs))
    rows = []
    for row in rep.rows:
        rows.append({
            "k": row.k,
            "N": str(row.N),
            "tv": None if row.tv is None else _fraction(row.tv),
            "tv_decimal": None if row.tv is None else float(row.tv),
            "envelope": None if row.envelope is None else _fraction(row.envelope),
            "within_envelope": row.within_envelope,
            "strictly_unimodal": row.strictly_unimodal,
        })
    out = {
        "a": list(a),
        "M": rep.profile.M,
        "r": args.r,
        "scaling_identity": [scaling_identity_check(a, k) for k in range(1, min(args.k_max, 5) + 1)],
        "rows": rows,
        "empirical_threshold": rep.empirical_threshold,
    }
    if args.hstar_k is not None:
        out["hstar_equals_one_plus_box"] = hstar_limit_check(a, args.r, args.hstar_k)
        out["hstar_tv"] = _fraction(hstar_limit_distance(a, args.r, args.hstar_k))
    _print_json(out)
    return 0


def cmd_limit(args) -> int:
    p = limit_profile(args.row)
    _print_json({
        "a": list(p.a),
        "M": p.M,
        "limit_box": list(p.limit_box.coeffs),
        "limit_dist": [_fraction(x) for x in p.limit_dist],
    })
    return 0


def cmd_sweep(args) -> int:
    config = SweepConfig(
        n=args.n, N=args.volume, d=args.d, distinct=args.distinct,
        jobs=args.jobs, seed=args.seed, budget=args.budget,
        idp=_idp_mode(args), cap=args.cap,
    )
    return _finish_run(args, sweep_partitions(config, _resume_skip(args)))


def cmd_sample(args) -> int:
    config = SampleConfig(
        d=args.d, N=args.volume, count=args.count, seed=args.seed,
        jobs=args.jobs, idp=_idp_mode(args, "height2"), cap=args.cap,
    )
    return _finish_run(args, sample_random(config, _resume_skip(args)))


def cmd_perturb(args) -> int:
    pairs = PERTURBATION_PAIRS if args.all else [(args.d, args.k)]
    if not args.all and (args.d is None or args.k is None):
        raise SystemExit("perturb needs --d and --k, or --all")
    skip = _resume_skip(args)
    entries = []
    for i, (d, k) in enumerate(pairs):
        res = perturbation_experiment(d, k, args.seed + i, args.samples, jobs=args.jobs,
                                      idp=_idp_mode(args), cap=args.cap, skip=skip)
        entries.extend(res.entries)
    meta = {"command": "perturb", "rng": "numpy.random.PCG64", "seed": args.seed,
            "pairs": [list(p) for p in pairs], "samples": args.samples}
    return _finish_run(args, RunResult(entries, summarize(entries), meta))


def cmd_emit(args) -> int:
    entries = emitter.read_jsonl(args.input)
    _write_entries(args, entries)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxpoly",
        description="Local h*-polynomials of one-row Hermite normal form simplices.",
    )
    parser.add_argument("--version", action="store_true", help="print version and kernel backend")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--format", choices=emitter.FORMATS, default="json")
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="lattice point budget")
    common.add_argument("--exhaustive-idp", action="store_true",
                        help="run the full IDP check instead of the height-2 search")
    common.add_argument("--timings", action="store_true",
                        help="record wall times (output is then not byte-reproducible)")

    spec_opts = argparse.ArgumentParser(add_help=False)
    spec_opts.add_argument("--spec", action="append", required=True,
                           help='simplex as "a1,...,ak;N" (repeatable for compute)')

    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("compute", parents=[common, spec_opts], help="full record for specs")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("hstar", parents=[common, spec_opts], help="h*, interior and boundary parts")
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("stapledon", parents=[common, spec_opts], help="Stapledon decomposition")
    p.set_defaults(func=cmd_stapledon)

    p = sub.add_parser("idp-witness", parents=[common, spec_opts], help="search for a non-IDP point")
    p.add_argument("--height", type=int, default=2)
    p.set_defaults(func=cmd_idp_witness)

    p = sub.add_parser("alpha", parents=[common], help="alpha vector for the all-ones row")
    p.add_argument("--a", type=int, required=True, help="d - 2")
    p.add_argument("--n", type=int, required=True, help="volume N")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("geometric", parents=[common], help="geometric row (q^{k-1}, ..., 1; q^k)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="compare with enumeration")
    p.add_argument("--witness", action="store_true", help="certify the non-IDP point")
    p.set_defaults(func=cmd_geometric)

    p = sub.add_parser("asymptotic-check", parents=[common], help="convergence to the M+1 limit")
    p.add_argument("--a", dest="row", type=_row, required=True, help="row a1,...,ak")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--hstar-k", type=int, help="also check h* = 1 + B at this k")
    p.set_defaults(func=cmd_asymptotic_check)

    p = sub.add_parser("limit", parents=[common], help="limiting distribution at N = M + 1")
    p.add_argument("--a", dest="row", type=_row, required=True)
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("sweep-partitions", parents=[common], help="all partitions of n as rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", dest="volume", type=int, help="fixed volume (default: M + 1)")
    p.add_argument("--d", type=int, help="keep partitions with d - 1 parts")
    p.add_argument("--distinct", action="store_true", help="distinct parts only")
    p.add_argument("--budget", type=int, help="stop after this many partitions")
    p.add_argument("--resume", action="store_true", help="skip specs already in --out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sample-random", parents=[common], help="seeded uniform random rows")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", dest="volume", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--resume", action="store_true", help="skip specs already in --out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("perturb", parents=[common], help="perturbed constant rows at N = M + 1")
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--all", action="store_true", help="run every built-in (d, k) pair")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--resume", action="store_true", help="skip specs already in --out")
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("emit", parents=[common], help="convert a json-lines file")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.set_defaults(func=cmd_emit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        from boxpoly import __version__

        print(f"boxpoly {__version__} ({kernels.BACKEND} kernels)")
        return 0
    if args.command is None:
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except (SimplexError, DegenerateRowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
