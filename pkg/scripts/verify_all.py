"""Run every verification suite and write a JSON report.

Usage: python3 scripts/verify_all.py [report.json] [--threads N]

Exit status is 0 exactly when every suite passes.  Timings are left out of
the file so reruns produce identical bytes.
"""
import argparse
import json
import sys

from shifted_hecke.verify import VerifyConfig, run_suite


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("out", nargs="?", default="verify_report.json")
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()
    reports = run_suite("all", VerifyConfig(threads=args.threads))
    for r in reports:
        print(f"{r.suite:<11} {'PASS' if r.passed else 'FAIL'} ({r.runtime_s:.1f}s)")
    passed = all(r.passed for r in reports)
    with open(args.out, "w") as fh:
        json.dump({"passed": passed, "suites": [r.to_json(timings=False) for r in reports]}, fh,
                  indent=1, sort_keys=True)
    print(f"report written to {args.out}")
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
