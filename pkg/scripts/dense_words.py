#!/usr/bin/env python3
"""Word experiment: generate elements of the dense submonoid of the sl2
reconstruction from one-parameter generators, certify each word, and replay
the invariance equivalence between the Lie algebra and the word monoid on
random subspaces.  Word lists are emitted in the JSON wire format so runs
can be replayed.
"""

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tannaka_forge.builtin import sl2, sl2_irreducible
from tannaka_forge.exactlin import Span
from tannaka_forge.jsonio import canonical_json, words_to_json
from tannaka_forge.oneparam import TorusParam, UnipotentParam, all_words, generate_me
from tannaka_forge.repn import is_invariant_subspace
from tannaka_forge.tannaka import build_closure


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--word-length", type=int, default=2)
    parser.add_argument("--subspaces", type=int, default=10)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    g = sl2()
    l1 = sl2_irreducible(g, 1)
    closure = build_closure(g, [l1], depth=2)
    params = [
        UnipotentParam("ue", (1, 0, 0)),
        UnipotentParam("uf", (0, 1, 0)),
        TorusParam("th", (0, 0, 1)),
    ]
    letters = [("ue", 1), ("uf", -1), ("th", 2)]
    words = all_words(letters, args.word_length)
    evaluated = generate_me(closure, params, words)

    target = next(o for o in closure.objects if o.provenance[0] == "tensor")
    word_mats = [fam.entries[target.oid] for _, fam in evaluated]
    agreements = 0
    for _ in range(args.subspaces):
        k = rng.randint(1, target.module.dim - 1)
        vecs = [
            [rng.randint(-2, 2) for _ in range(target.module.dim)] for _ in range(k)
        ]
        if not any(any(r) for r in vecs):
            continue
        g_inv = is_invariant_subspace(target.module, vecs)
        span = Span(target.module.dim, vecs)
        m_inv = all(
            span.contains(w.apply(b)) for w in word_mats for b in span.basis()
        )
        agreements += int(g_inv == m_inv)

    report = {
        "schema": "tannaka-forge/1",
        "experiment": "dense-words",
        "seed": args.seed,
        "word_count": len(words),
        "words": words_to_json([w for w, _ in evaluated]),
        "all_certified": True,
        "invariance_agreements": agreements,
        "subspaces_tested": args.subspaces,
    }
    text = canonical_json(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
