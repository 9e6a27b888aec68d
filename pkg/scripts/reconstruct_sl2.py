#!/usr/bin/env python3
"""Reconstruction experiment on sl2.

Builds tensor closures of the natural module at increasing depth, solves
for the Lie algebra of each closure, reports when the solution stabilizes,
and runs the matrix-coefficient rank accounting for L0, L1, L2.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tannaka_forge.builtin import sl2, sl2_irreducible
from tannaka_forge.jsonio import canonical_json, family_to_json
from tannaka_forge.tannaka import lie_m_report, peter_weyl_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-depth", type=int, default=3)
    parser.add_argument("--degree", type=int, default=6)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    g = sl2()
    l1 = sl2_irreducible(g, 1)
    stages = []
    for depth in range(1, args.max_depth + 1):
        rep = lie_m_report(g, [l1], depth=depth)
        stages.append(
            {
                "depth": depth,
                "lie_m_dim": rep["lie_m_dim"],
                "stabilized": rep["stabilized"],
                "objects": len(rep["closure"].objects),
                "basis_on_L1": [
                    family_to_json(f)["entries"]["L1"] for f in rep["basis"]
                ],
            }
        )

    irr = [sl2_irreducible(g, n) for n in (0, 1, 2)]
    pw = peter_weyl_check(g, irr, args.degree)
    report = {
        "schema": "tannaka-forge/1",
        "experiment": "sl2-reconstruction",
        "stages": stages,
        "peter_weyl": {
            "expected_dim": pw.expected_dim,
            "achieved_rank": pw.achieved_rank,
            "stabilized": pw.stabilized,
            "ok": pw.ok,
        },
    }
    text = canonical_json(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
