"""Command-line front end.

Subcommands::

    fockpol degree '{"kind":"thermal","n1":2,"n2":1}'
    fockpol sweep --family pats --n2 1 --M 2 --S 2 --eps-stop 10 --eps-step 0.25 -o out.csv
    fockpol verify --level full

Exit codes: 0 ok, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .descriptor import ParseError, evaluate, load_descriptor
from .exceptions import FockPolError
from .state import TruncationPolicy
from .sweep import HEADER, SweepConfig, epsilon_range, sweep_rows, write_csv
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tail-tol", type=float, default=1e-12,
                        help="per-mode truncated probability bound (default 1e-12)")
    common.add_argument("--n-max-cap", type=int, default=4096,
                        help="largest photon number stored per mode (default 4096)")
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="output format (degree: json, sweep: csv by default)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for the random spectra used by the oracle checks")
    return common


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(prog="fockpol",
                                     description="Quantum degrees of polarization "
                                                 "for Fock-diagonal two-mode states.")
    sub = parser.add_subparsers(dest="command", required=True)

    deg = sub.add_parser("degree", parents=[common],
                         help="all five degrees for one state descriptor")
    deg.add_argument("state", help="JSON descriptor, or '-' to read it from stdin")

    sw = sub.add_parser("sweep", parents=[common],
                        help="degrees along n1 = n2 + epsilon, written as CSV")
    sw.add_argument("--family", choices=("thermal", "pats"), required=True)
    sw.add_argument("--n2", type=float, required=True)
    sw.add_argument("--M", type=int, default=0, help="photons added to mode H (pats)")
    sw.add_argument("--S", type=int, default=0, help="photons added to mode V (pats)")
    sw.add_argument("--eps", type=str, default=None,
                    help="comma-separated epsilon grid (overrides --eps-stop/--eps-step)")
    sw.add_argument("--eps-stop", type=float, default=10.0)
    sw.add_argument("--eps-step", type=float, default=0.25)
    sw.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")

    ver = sub.add_parser("verify", parents=[common],
                         help="cross-check closed forms against brute-force oracles")
    ver.add_argument("--level", choices=("fast", "full"), default="fast")
    ver.add_argument("--tol-scale", type=float, default=1.0, help=argparse.SUPPRESS)
    return parser


def _policy(args):
    return TruncationPolicy(tail_tol=args.tail_tol, n_max_cap=args.n_max_cap)


def cmd_degree(args, out):
    text = sys.stdin.read() if args.state == "-" else args.state
    report = evaluate(load_descriptor(text), _policy(args))
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(HEADER[1:])
        writer.writerow(["" if v is None else format(v, ".17g") for v in report.values()])
    else:
        json.dump(report.as_dict(), out, indent=2)
        out.write("\n")
    return EXIT_OK


def cmd_sweep(args, out):
    if args.eps is not None:
        grid = tuple(float(x) for x in args.eps.split(",") if x.strip())
    else:
        grid = epsilon_range(args.eps_stop, args.eps_step)
    config = SweepConfig(args.family, args.n2, grid, args.M, args.S, args.output)
    rows = sweep_rows(config, _policy(args))
    if args.format == "json":
        payload = [dict(epsilon=eps, **rep.as_dict()) for eps, rep in rows]
        text = json.dumps(payload, indent=2) + "\n"
        if args.output == "-":
            out.write(text)
        else:
            with open(args.output, "w") as fh:
                fh.write(text)
        return EXIT_OK
    if args.output == "-":
        write_csv(rows, out)
    else:
        with open(args.output, "w", newline="") as fh:
            write_csv(rows, fh)
    return EXIT_OK


def cmd_verify(args, out):
    results = run_checks(args.level, tol_scale=args.tol_scale, seed=args.seed)
    for res in results:
        out.write(res.line() + "\n")
    ok = all(r.passed for r in results)
    out.write(("verification passed" if ok else "verification FAILED") + "\n")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"degree": cmd_degree, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (ParseError, FockPolError, ValueError) as exc:
        print(f"fockpol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fockpol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
