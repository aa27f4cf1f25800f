#!/usr/bin/env python3
"""Generate the exhaustive corpus of connected graphs on 1..7 vertices.

One canonical edge-list file per isomorphism class is written to data/corpus/
(same directory layout the C++ tests expect). A graph on n vertices is encoded
as a bitmask over the n(n-1)/2 vertex pairs in lexicographic order; the
canonical form is the minimum mask over all vertex permutations.

Generation is by orderly extension: every connected graph on n vertices arises
from a connected graph on n-1 vertices (remove a non-cutvertex) plus a new
vertex joined to a nonempty neighbor subset. Class counts are asserted against
the known sequence 1, 1, 2, 6, 21, 112, 853 (OEIS A001349).

Run from the repository root:  python3 scripts/gen_small_graph_corpus.py
"""

import itertools
import os
import sys

import numpy as np

MAX_N = 7
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "corpus")


def pair_index(n):
    """Map (i, j) with i < j to its bit index, lexicographic order."""
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[(i, j)] = k
            k += 1
    return idx


def perm_tables(n):
    """For each permutation, where each edge bit moves to. Shape (n!, E)."""
    idx = pair_index(n)
    edges = sorted(idx, key=idx.get)
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append([idx[tuple(sorted((perm[i], perm[j])))] for (i, j) in edges])
    return np.array(tables, dtype=np.int64)


def canonical(masks, n, tables):
    """Canonical (minimum over permutations) form of each mask."""
    num_edges = n * (n - 1) // 2
    masks = np.asarray(sorted(set(int(m) for m in masks)), dtype=np.int64)
    bits = (masks[:, None] >> np.arange(num_edges)[None, :]) & 1  # (G, E)
    out = np.empty(len(masks), dtype=np.int64)
    chunk = max(1, 2_000_000 // max(1, tables.shape[0]))
    weights = np.int64(1) << tables  # (P, E): weight of source bit e under perm p
    for lo in range(0, len(masks), chunk):
        b = bits[lo:lo + chunk]  # (g, E)
        vals = b[:, None, :] * weights[None, :, :]  # (g, P, E)
        out[lo:lo + chunk] = vals.sum(axis=2).min(axis=1)
    return sorted(set(int(v) for v in out))


def extend(parents, n):
    """All connected graphs on n vertices from the canonical (n-1)-corpus."""
    idx = pair_index(n)
    parent_idx = pair_index(n - 1)
    remap = {bit: idx[pair] for pair, bit in parent_idx.items()}
    candidates = set()
    for mask in parents:
        base = 0
        for bit, target in remap.items():
            if mask >> bit & 1:
                base |= 1 << target
        for subset in range(1, 1 << (n - 1)):
            child = base
            for v in range(n - 1):
                if subset >> v & 1:
                    child |= 1 << idx[(v, n - 1)]
            candidates.add(child)
    return candidates


def edges_of(mask, n):
    idx = pair_index(n)
    return [(i, j) for (i, j), b in idx.items() if mask >> b & 1]


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    corpus = {1: [0]}
    for n in range(2, MAX_N + 1):
        tables = perm_tables(n)
        corpus[n] = canonical(extend(corpus[n - 1], n), n, tables)

    total = 0
    for n in range(1, MAX_N + 1):
        got = len(corpus[n])
        if got != EXPECTED_COUNTS[n]:
            sys.exit(f"n={n}: got {got} classes, expected {EXPECTED_COUNTS[n]}")
        for i, mask in enumerate(corpus[n]):
            path = os.path.join(OUT_DIR, f"c{n}_{i:03d}.el")
            with open(path, "w") as f:
                f.write(f"n {n}\n")
                for u, v in sorted(edges_of(mask, n)):
                    f.write(f"{u} {v}\n")
        total += got
        print(f"n={n}: {got} connected graphs")
    print(f"total: {total} files in {os.path.normpath(OUT_DIR)}")


if __name__ == "__main__":
    main()
