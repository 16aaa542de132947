#!/usr/bin/env python3
"""Reproduce the embedded comparative-statics table and print deviations."""

import argparse

from openecon import baseline_instance, paper_suite, run_suite
from openecon.reference import ROW_KEYS, ROW_LABELS


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tol", type=float, default=2e-3,
                        help="reference tolerance (default 2e-3)")
    args = parser.parse_args()

    report = run_suite(baseline_instance(), paper_suite(args.tol))

    names = [r.name for r in report.results]
    width = max(len(ROW_LABELS[k]) for k in ROW_KEYS) + 2
    print("".ljust(width) + "".join(n.rjust(14) for n in names))
    for key in ROW_KEYS:
        cells = [f"{r.rows[key]:14.4f}" for r in report.results]
        print(ROW_LABELS[key].ljust(width) + "".join(cells))

    print()
    worst = max((dev, r.name, key)
                for r in report.results
                for key, dev in r.deviations.items())
    print(f"worst deviation: {worst[0]:.2e} ({worst[1]}, row "
          f"{ROW_LABELS[worst[2]]}); tolerance {args.tol:g}")
    for check in report.sign_checks:
        mark = "ok " if check.passed else "BAD"
        print(f"{mark} {check.name}")
    print("suite:", "PASS" if report.passed else "FAIL")


if __name__ == "__main__":
    main()
