"""Graded ranks of R and Rtilde by path length, and the image rank of the
real representation for crystallographic presets.

    python3 scripts/rank_growth.py --max-len 10 A3 B3 "I2(6)" running-example
"""
from __future__ import annotations

import argparse
from collections import Counter

from coxring.coxsys import load_system
from coxring.quotient import enumerate_basis
from coxring.realrep import image_rank, ngcm_crystallographic, rrm_float

DEFAULT = ["A3", "B3", "H3", "I2(6)", "I2(8)", "running-example", "universal3"]


def graded(M, ring: str, max_len: int) -> list[int]:
    counts = Counter(len(p) - 1 for p in enumerate_basis(M, ring, max_len))
    return [counts.get(k, 0) for k in range(max_len + 1)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("systems", nargs="*", default=DEFAULT)
    ap.add_argument("--max-len", type=int, default=8)
    args = ap.parse_args(argv)
    for spec in args.systems:
        M = load_system(spec)
        print(spec)
        for ring in ("R", "Rtilde"):
            print(f"  {ring:<7}" + " ".join(f"{c:>5}" for c in graded(M, ring, args.max_len)))
        try:
            A = ngcm_crystallographic(M)
        except ValueError:
            A = rrm_float(M)
        target = sum(len(c) ** 2 for c in M.components())
        print(f"  image rank {image_rank(A, M, min(args.max_len, 6))} / {target}"
              f" ({'exact' if A.exact else 'float'})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
