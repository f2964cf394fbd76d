"""Command line driver: ``spin9lab <suite> [options]``.

Exit status 0 when every check passes, 1 when a check fails, 2 on usage errors.
"""

import argparse
import logging
import os
import sys

from .report import DEFAULT_SEED, SUITES, failed, run_all, run_suite, to_json, to_text


def build_parser():
    p = argparse.ArgumentParser(prog="spin9lab", description="exact Spin(9) verification suites")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", metavar="FILE", help="write the JSON report here")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--timing", action="store_true",
                        help="record elapsed_ms in the JSON report (makes it run dependent)")
        return sp

    add("clifford", "Clifford relations and Spin(8) blocks")
    add("liealg", "so(16) splitting, Gamma table, S^1 x S^15 forms")
    add("spinorforms", "P_r spaces, decompositions, commutants").add_argument(
        "--deep", action="store_true", help="also the Lambda^2 x Delta_9 commutant")
    add("omega8", "the invariant 8-form").add_argument("--out", metavar="FILE",
                                                       help="write Omega^8 in form file format")
    add("identities", "delta and d identities, Psi equivariance")
    add("charclass", "Pontrjagin classes, divisibility, complete intersection")
    tw = add("twistor", "twistor integrability algebra")
    tw.add_argument("--draws", type=int, default=20)
    tw.add_argument("--deep", action="store_true", help="also the 163-dimension rank check")
    al = add("all", "every suite")
    al.add_argument("--draws", type=int, default=20)
    al.add_argument("--deep", action="store_true", help="include the long optional checks")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    for name, default in (("deep", False), ("draws", 20), ("out", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.draws < 1:
        print("spin9lab: --draws must be positive", file=sys.stderr)
        return 2
    if args.command == "all":
        report = run_all(args)
    else:
        report = run_suite(args.command, args)
    sys.stdout.write(to_text(report))
    if args.json:
        tmp = args.json + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(to_json(report))
        os.replace(tmp, args.json)
    return 1 if failed(report) else 0


if __name__ == "__main__":
    sys.exit(main())
