"""Run the curated descent cases through the stratum criterion and the invariant oracle."""
import argparse
import json
import sys

from equideriv.descent import descends, invariant_oracle
from equideriv.suite import curated_descent_cases


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=None, help="oracle degree bound (default: per module)")
    ap.add_argument("--json", action="store_true", help="emit certificates as JSON")
    args = ap.parse_args(argv)

    rows, disagreements = [], 0
    for case in curated_descent_cases():
        cert = descends(case.module, case.mode)
        oracle = invariant_oracle(case.module, args.bound, case.mode)
        agree = cert.descends == oracle.consistent
        disagreements += not agree or cert.descends != case.expected
        rows.append({"case": case.name, "space": case.mode, "expected": case.expected,
                     "certificate": cert.as_dict(), "oracle": oracle.as_dict()["summary"]})
        if not args.json:
            print(f"{case.name:<45} {case.mode:<10} descends={str(cert.descends):<5} "
                  f"oracle: {oracle.as_dict()['summary']}")
    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
