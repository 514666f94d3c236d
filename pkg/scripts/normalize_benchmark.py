"""Time normalize_module on seeded random raw modules."""
import argparse
import random
import statistics
import sys
import time
from dataclasses import asdict

from equideriv.eqmod import normalize_module
from equideriv.eqmod.modules import check_normal_form
from equideriv.sampling import ModuleSampleConfig, random_raw_module


def main(argv=None):
    defaults = ModuleSampleConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    for field, value in asdict(defaults).items():
        ap.add_argument("--" + field.replace("_", "-"), type=int, default=value)
    args = ap.parse_args(argv)
    cfg = ModuleSampleConfig(**{k: getattr(args, k) for k in asdict(defaults)})

    rng = random.Random(args.seed)
    times, ranks = [], []
    for _ in range(args.count):
        raw, _ = random_raw_module(rng, cfg)
        t0 = time.perf_counter()
        B, P = normalize_module(raw)
        times.append(time.perf_counter() - t0)
        check_normal_form(raw, B, P)
        ranks.append(raw.rank)
    print(f"config {cfg}")
    print(f"{args.count} modules, mean rank {statistics.mean(ranks):.2f}")
    print(f"normalize: total {sum(times):.3f}s, median {statistics.median(times) * 1e3:.2f}ms, "
          f"max {max(times) * 1e3:.2f}ms")
    return 0


if __name__ == "__main__":
    sys.exit(main())
