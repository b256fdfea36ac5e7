#!/usr/bin/env python3
"""Generate the corpus of all isomorphism classes of order-8 graphs.

Every 8-vertex graph arises from some 7-vertex graph by adding one
vertex, so the candidates are the 1044 order-7 class representatives
extended by all 2^7 neighborhoods of a new vertex.  Candidates are
deduplicated by exhaustive lexicographic minimization of the packed
upper-triangle bitstring over all 8! vertex permutations (the same
canonical form the library uses up to order 7, evaluated through
vectorized bit-permutation tables).

The known class count, 12346, is asserted before anything is written.
Output is one graph6 line per class, ascending by canonical form.

Usage: python3 scripts/make_graph8_corpus.py [OUTPUT]
Default output: tests/data/graphs8.g6 (about 100 KiB; a few minutes).
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np

from nullacert.graphs import (
    _canonical_mask_array,
    enumerate_nonisomorphic,
    graph_to_mask,
    mask_to_graph,
    write_graph6,
)

EXPECTED_CLASSES = 12346


def order8_canonical_masks() -> np.ndarray:
    reps7 = list(enumerate_nonisomorphic(7))
    masks7 = np.array([graph_to_mask(g) for g in reps7], dtype=np.uint32)
    # Order-8 positions: the 21 old pairs keep their positions, the 7 new
    # pairs (i, 7) follow, so the old 21-bit mask shifts up by 7 and the
    # new vertex's neighborhood fills the low bits.
    candidates = (
        (masks7[:, None].astype(np.uint32) << np.uint32(7))
        | np.arange(128, dtype=np.uint32)[None, :]
    ).reshape(-1)
    canon = _canonical_mask_array(8, candidates)
    return np.unique(canon)


def main(argv: list[str]) -> int:
    out_path = Path(argv[1]) if len(argv) > 1 else Path("tests/data/graphs8.g6")
    t0 = time.time()
    reps = order8_canonical_masks()
    if reps.size != EXPECTED_CLASSES:
        print(
            f"ERROR: found {reps.size} classes, expected {EXPECTED_CLASSES}",
            file=sys.stderr,
        )
        return 1
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", encoding="ascii") as fh:
        for mask in reps:
            fh.write(write_graph6(mask_to_graph(8, int(mask))) + "\n")
    print(
        f"wrote {reps.size} graphs to {out_path} in {time.time() - t0:.0f}s",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
