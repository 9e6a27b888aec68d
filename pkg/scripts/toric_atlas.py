#!/usr/bin/env python3
"""Face-lattice atlas for a few small weight monoids: the quadrant, the
integers, the natural numbers, and a non-saturated numerical monoid."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tannaka_forge.jsonio import canonical_json, monoid_to_json
from tannaka_forge.toric import toric_structure_report, weight_monoid_from_generators

CASES = {
    "quadrant": [(1, 0), (0, 1)],
    "integers": [(1,), (-1,)],
    "naturals": [(1,)],
    "numerical_2_3": [(2,), (3,)],
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    atlas = {}
    for name, gens in sorted(CASES.items()):
        monoid = weight_monoid_from_generators(gens)
        atlas[name] = {
            "monoid": monoid_to_json(monoid),
            "structure": toric_structure_report(monoid, seed=args.seed),
        }
    report = {"schema": "tannaka-forge/1", "experiment": "toric-atlas", "cases": atlas}
    text = canonical_json(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
