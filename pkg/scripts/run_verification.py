"""Run every verification suite and write a JSON report.

    python3 scripts/run_verification.py --n 6 --out verification.json
"""

import argparse
import json
import sys

from nsymkit.checks import SUITES, run_suite


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6, help="maximum degree")
    ap.add_argument("--suite", choices=SUITES, action="append", help="repeatable; default all")
    ap.add_argument("--out", help="JSON report path (default: stdout summary only)")
    args = ap.parse_args(argv)

    results = []
    for name in args.suite or SUITES:
        res = run_suite(name, args.n)
        results.append(res)
        refuted = sum(1 for l in res.lines if l.status == "misprint" and not l.passed)
        print(f"{name:9s} n<={res.n}  {'PASS' if res.passed else 'FAIL'}  "
              f"{len(res.lines)} checks, {refuted} misprints refuted, {res.seconds:.1f} s")
        for line in res.lines:
            if not line.passed and line.status != "misprint":
                print("   ", line.render())
    ok = all(r.passed for r in results)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"passed": ok, "suites": [r.to_json() for r in results]}, fh, indent=2)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
