"""Run the near-domain check over presets and seeds, one process per (preset, seed).

    python3 scripts/near_domain_sweep.py --trials 2000 --seeds 0 1 2 --workers 4
"""
from __future__ import annotations

import argparse
import json
from concurrent.futures import ProcessPoolExecutor

from coxring.coxsys import load_system
from coxring.freeprod import near_domain_check

DEFAULT = ["A2", "A3", "B2", "B3", "H3", "I2(5)", "I2(6)", "I2(7)", "running-example", "universal3"]


def one(job):
    spec, seed, trials, max_len, bound = job
    rep = near_domain_check(load_system(spec), trials, max_len, bound, seed)
    return {"system": spec, "seed": seed, "trials": trials, "max_len": max_len,
            "coeff_bound": bound, "counterexamples": [c.__dict__ for c in rep.counterexamples]}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("systems", nargs="*", default=DEFAULT)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--coeff-bound", type=int, default=5)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)
    jobs = [(s, seed, args.trials, args.max_len, args.coeff_bound) for s in args.systems for seed in args.seeds]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(one, jobs))
    else:
        results = [one(j) for j in jobs]
    bad = 0
    for r in results:
        bad += len(r["counterexamples"])
        print(json.dumps(r))
    print(f"# {len(results)} runs, {bad} counterexample(s)")
    return 3 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
