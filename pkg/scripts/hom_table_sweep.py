"""Compare the Hom case table with the brute-force equivariant solver.

Prints one line per (group, number of variables) with the number of entries
checked and any mismatches, and exits non-zero if a mismatch is found.
"""
import argparse
import sys
import time

from equideriv.builtins import builtin_action, builtin_irreps
from equideriv.eqmod import hom_generators, hom_generators_bruteforce
from equideriv.group import BUILTIN_GROUP_NAMES, builtin_group


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="*", default=list(BUILTIN_GROUP_NAMES))
    ap.add_argument("--max-shift", type=int, default=3)
    ap.add_argument("--max-vars", type=int, default=3)
    args = ap.parse_args(argv)

    bad = 0
    t0 = time.perf_counter()
    for name in args.groups:
        G = builtin_group(name)
        irr = builtin_irreps(G)
        for nv in range(1, args.max_vars + 1):
            act = builtin_action(G, nv)
            count, mism = 0, []
            for i in range(args.max_shift + 1):
                for j in range(i + 1):
                    for V in irr:
                        for W in irr:
                            f = hom_generators(V, i, W, j, act).dimension
                            b = hom_generators_bruteforce(V, i, W, j, act)
                            count += 1
                            if f != b:
                                mism.append((V.label, i, W.label, j, f, b))
            bad += len(mism)
            print(f"{name:>8} nvars={nv} entries={count:5d} mismatches={len(mism)}")
            for m in mism[:5]:
                print("    ", m)
    print(f"total time {time.perf_counter() - t0:.2f}s, mismatches {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
