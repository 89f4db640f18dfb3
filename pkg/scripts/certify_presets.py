"""Certify the rewriting systems for R, Rtilde and Q on a list of presets.

    python3 scripts/certify_presets.py A3 B4 H3 "I2(12)" running-example
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from coxring.coxsys import load_system
from coxring.freeprod import q_system
from coxring.rewrite import rules_for, verify_overlaps

DEFAULT = ["A2", "A3", "A4", "B2", "B3", "B4", "H3", "I2(5)", "I2(6)", "I2(7)", "I2(12)",
           "running-example", "universal3"]


@dataclass
class Row:
    system: str
    ring: str
    rules: int
    overlaps: int
    residues: int
    seconds: float


def certify(spec: str) -> list[Row]:
    M = load_system(spec)
    rows = []
    for ring, sys in (("R", rules_for(M, "R")), ("Rtilde", rules_for(M, "Rtilde")), ("Q", q_system(M))):
        t0 = time.perf_counter()
        rep = verify_overlaps(sys)
        rows.append(Row(spec, ring, len(sys), len(rep.overlaps), len(rep.residues),
                        time.perf_counter() - t0))
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("systems", nargs="*", default=DEFAULT)
    args = ap.parse_args(argv)
    bad = 0
    print(f"{'system':<18}{'ring':<8}{'rules':>6}{'overlaps':>10}{'residues':>10}{'sec':>8}")
    for spec in args.systems:
        for r in certify(spec):
            bad += r.residues
            print(f"{r.system:<18}{r.ring:<8}{r.rules:>6}{r.overlaps:>10}{r.residues:>10}{r.seconds:>8.2f}")
    return 3 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
