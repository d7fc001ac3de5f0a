"""Command-line interface.

Subcommands:

* ``gen``     write a generated instance file and report its hull/maxima sizes
* ``hull``    compute an upper hull (or full hull with jarvis-q) of a file
* ``maxima``  compute the maxima set of a file
* ``verify``  cross-check every algorithm against reference implementations
* ``bench``   run a scaling experiment; emit CSV and optionally SVG

Exit codes: 0 success, 1 verification disagreement, 2 usage or input
error, 3 self-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import (
    ALGOS,
    DEFAULT_METRIC,
    DegenerateFit,
    emit_csv,
    emit_svg_scatter,
    fit_exponent,
    run_experiment,
)
from .hull import (
    classical_upper_hull,
    monotone_chain_upper,
    monotone_full_hull,
    quantum_jarvis_full,
    quantum_upper_hull,
)
from .instances import KINDS, GenSpec, Infeasible, generate
from .maxima import classical_maxima, quantum_maxima, scan_maxima
from .oracle import OracleError, load, read_points, write_points
from .qsim import ANALYTIC, CostLedger, MonteCarlo

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_SELFCHECK = 3


def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _load_file(path: str):
    """Read and validate an instance file, or None on any input error."""
    try:
        return load(read_points(path), require_distinct_x=True)
    except (OSError, ValueError) as exc:
        print(f"error: cannot load {path}: {exc}", file=sys.stderr)
        return None


def _sim_mode(args):
    # --seed doubles as the trace seed in mc mode, keeping every
    # command deterministic from its flags alone.
    return MonteCarlo(args.seed) if args.mode == "mc" else ANALYTIC


def cmd_gen(args) -> int:
    spec = GenSpec(kind=args.kind, n=args.n, h=args.h, k=args.k, seed=args.seed)
    try:
        o = generate(spec)
    except Infeasible as exc:
        return _fail_usage(str(exc))
    tags = ["gen", f"kind={spec.kind}", f"n={spec.n}"]
    if spec.h is not None:
        tags.append(f"h={spec.h}")
    if spec.k is not None:
        tags.append(f"k={spec.k}")
    tags.append(f"seed={spec.seed}")
    write_points(args.out, o.contents(), comments=[" ".join(tags)])
    uh = len(monotone_chain_upper(o.contents()))
    mx = len(scan_maxima(o.contents()))
    print(f"wrote {args.out}: n={o.n} upper_hull={uh} maxima={mx}")
    return EXIT_OK


def cmd_hull(args) -> int:
    o = _load_file(args.file)
    if o is None:
        return EXIT_USAGE
    mode = _sim_mode(args)
    ledger = CostLedger()
    if args.algo == "qcc":
        chain, ledger = quantum_upper_hull(o, mode)
        got = list(chain.points)
        want = list(monotone_chain_upper(o.contents()).points)
    elif args.algo == "classical-dc":
        got = list(classical_upper_hull(o).points)
        want = list(monotone_chain_upper(o.contents()).points)
    elif args.algo == "monotone":
        got = list(monotone_chain_upper([o.query(i) for i in range(o.n)]).points)
        want = list(monotone_chain_upper(o.contents()).points)
    else:  # jarvis-q
        if o.n < 3:
            return _fail_usage(f"jarvis-q needs n >= 3, file has n={o.n}")
        got, ledger = quantum_jarvis_full(o, mode)
        want = monotone_full_hull(o.contents())
    queries = o.classical_query_count
    if not args.no_selfcheck and got != want:
        print(f"self-check FAILED: {args.algo} disagrees with reference", file=sys.stderr)
        return EXIT_SELFCHECK
    for p in got:
        print(f"{p.x} {p.y}")
    if args.ledger:
        with open(args.ledger, "w", encoding="utf-8") as fh:
            json.dump(ledger.to_dict(queries), fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_maxima(args) -> int:
    o = _load_file(args.file)
    if o is None:
        return EXIT_USAGE
    ledger = CostLedger()
    if args.algo == "qcc":
        result, ledger = quantum_maxima(o, _sim_mode(args))
    else:
        result = classical_maxima(o)
    got = list(result.points)
    queries = o.classical_query_count
    want = list(scan_maxima(o.contents()).points)
    if not args.no_selfcheck and got != want:
        print(f"self-check FAILED: {args.algo} disagrees with reference", file=sys.stderr)
        return EXIT_SELFCHECK
    for p in got:
        print(f"{p.x} {p.y}")
    if args.ledger:
        with open(args.ledger, "w", encoding="utf-8") as fh:
            json.dump(ledger.to_dict(queries), fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    o = _load_file(args.file)
    if o is None:
        return EXIT_USAGE
    contents = o.contents()
    ref_upper = list(monotone_chain_upper(contents).points)
    ref_maxima = list(scan_maxima(contents).points)
    checks = []

    chain, _ = quantum_upper_hull(o)
    checks.append(("upper-hull qcc vs monotone", list(chain.points) == ref_upper))
    checks.append(
        ("upper-hull classical-dc vs monotone",
         list(classical_upper_hull(o).points) == ref_upper)
    )
    got_m, _ = quantum_maxima(o)
    checks.append(("maxima qcc vs scan", list(got_m.points) == ref_maxima))
    checks.append(
        ("maxima classical vs scan", list(classical_maxima(o).points) == ref_maxima)
    )
    if o.n >= 3:
        poly, _ = quantum_jarvis_full(o)
        checks.append(("full-hull jarvis-q vs monotone", poly == monotone_full_hull(contents)))
    else:
        print("SKIP full-hull jarvis-q (n < 3)")

    ok = True
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'} {name}")
        ok = ok and passed
    return EXIT_OK if ok else EXIT_DISAGREE


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def cmd_bench(args) -> int:
    try:
        n_list = _int_list(args.n)
        h_list = _int_list(args.h)
    except ValueError:
        return _fail_usage("--n/--h must be comma-separated integers")
    if not n_list:
        return _fail_usage("--n must name at least one size")
    algos = [a for a in args.algos.split(",") if a]
    bad = [a for a in algos if a not in ALGOS]
    if bad or not algos:
        return _fail_usage(f"unknown algorithms {bad!r}; choose from {', '.join(ALGOS)}")
    if args.family == "lowerbound":
        if not h_list:
            return _fail_usage("lowerbound family needs --h")
        grid = [GenSpec("lowerbound", n, h=h, seed=args.seed) for n in n_list for h in h_list]
    elif args.family == "polygon":
        grid = [GenSpec("polygon", n, k=args.k, seed=args.seed) for n in n_list]
    else:
        grid = [GenSpec(args.family, n, seed=args.seed) for n in n_list]
    try:
        records = run_experiment(grid, algos, reps=args.reps, mode=_sim_mode(args))
    except Infeasible as exc:
        return _fail_usage(str(exc))
    emit_csv(records, args.csv)
    x_field = "n" if len({r.n for r in records}) > 1 else "h_true"
    if args.svg:
        first = [r for r in records if r.algo == algos[0]]
        emit_svg_scatter(first, x_field, DEFAULT_METRIC[algos[0]], args.svg)
    for algo in algos:
        sub = [r for r in records if r.algo == algo]
        metric = DEFAULT_METRIC[algo]
        try:
            slope = f"{fit_exponent(sub, x_field, metric):.3f}"
        except DegenerateFit:
            slope = "n/a"
        print(f"family={args.family} algo={algo} x={x_field} y={metric} slope={slope}")
    wrong = [r for r in records if not r.correct]
    if wrong:
        print(
            f"self-check FAILED for {len(wrong)} of {len(records)} runs",
            file=sys.stderr,
        )
        return EXIT_SELFCHECK
    return EXIT_OK


def _add_run_flags(sub) -> None:
    sub.add_argument("--no-selfcheck", action="store_true",
                     help="skip the reference comparison")
    sub.add_argument("--ledger", metavar="PATH",
                     help="write the query-cost ledger as JSON")
    sub.add_argument("--mode", choices=("analytic", "mc"), default="analytic",
                     help="mc also simulates per-call quantum query traces")
    sub.add_argument("--seed", type=int, default=0,
                     help="trace seed for --mode mc")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcchull",
        description="Query-cost simulation of combine-and-conquer maxima and hull algorithms.",
    )
    sp = ap.add_subparsers(dest="cmd", required=True)

    g = sp.add_parser("gen", help="generate an instance file")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--h", type=int, default=None, help="hull size (lowerbound family)")
    g.add_argument("--k", type=int, default=None, help="vertex count (polygon family)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(fn=cmd_gen)

    hu = sp.add_parser("hull", help="compute a hull of an instance file")
    hu.add_argument("--in", dest="file", required=True, metavar="PATH")
    hu.add_argument("--algo", choices=("qcc", "classical-dc", "monotone", "jarvis-q"),
                    default="qcc")
    _add_run_flags(hu)
    hu.set_defaults(fn=cmd_hull)

    mx = sp.add_parser("maxima", help="compute the maxima set of an instance file")
    mx.add_argument("--in", dest="file", required=True, metavar="PATH")
    mx.add_argument("--algo", choices=("qcc", "classical"), default="qcc")
    _add_run_flags(mx)
    mx.set_defaults(fn=cmd_maxima)

    ve = sp.add_parser("verify", help="cross-check all algorithms on a file")
    ve.add_argument("--in", dest="file", required=True, metavar="PATH")
    ve.set_defaults(fn=cmd_verify)

    be = sp.add_parser("bench", help="run a scaling experiment")
    be.add_argument("--family", choices=KINDS, required=True)
    be.add_argument("--n-list", dest="n", required=True, help="comma-separated sizes")
    be.add_argument("--h-list", dest="h", default="16",
                    help="comma-separated hull sizes (lowerbound)")
    be.add_argument("--k", type=int, default=3, help="polygon vertex count")
    be.add_argument("--algos", default="qcc,classical-dc")
    be.add_argument("--reps", type=int, default=1)
    be.add_argument("--seed", type=int, default=0)
    be.add_argument("--csv", required=True)
    be.add_argument("--svg")
    be.add_argument("--mode", choices=("analytic", "mc"), default="analytic")
    be.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BrokenPipeError:
        # Downstream consumer (head, grep -m, ...) closed our stdout;
        # that is its prerogative, not an error of ours.
        sys.stderr.close()
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
