#!/usr/bin/env python3
"""Independent exhaustive check of small domination values.

Enumerates every vertex subset in ascending size and checks the membership
conditions straight from their definitions, with no shared code with the C++
solver. Exits nonzero if any value disagrees with the expected table.
"""

import itertools
import math
import sys

C5 = {0: [1, 4], 1: [0, 2], 2: [1, 3], 3: [2, 4], 4: [0, 3]}
K4 = {v: [u for u in range(4) if u != v] for v in range(4)}


def is_dominating(adj, x):
    return all(v in x or any(w in x for w in adj[v]) for v in adj)


def is_alpha_dominating(adj, x, alpha):
    return all(v in x or len([w for w in adj[v] if w in x]) >= math.ceil(alpha * len(adj[v]))
               for v in adj)


def is_alpha_rate_dominating(adj, x, alpha):
    return all(len([w for w in adj[v] + [v] if w in x]) >= math.ceil(alpha * len(adj[v]))
               for v in adj)


def is_k_tuple_dominating(adj, x, k):
    return all(len([w for w in adj[v] + [v] if w in x]) >= k for v in adj)


def minimum(adj, pred):
    n = len(adj)
    for size in range(n + 1):
        for x in itertools.combinations(range(n), size):
            if pred(adj, set(x)):
                return size
    raise AssertionError("no valid set found")


def main():
    checks = [
        ("gamma(C5)", minimum(C5, is_dominating), 2),
        ("gamma_alpha(C5, alpha=1)", minimum(C5, lambda a, x: is_alpha_dominating(a, x, 1)), 3),
        ("gamma_rate(C5, alpha=1/2)",
         minimum(C5, lambda a, x: is_alpha_rate_dominating(a, x, 0.5)), 2),
        ("gamma_alpha(K4, alpha=1)", minimum(K4, lambda a, x: is_alpha_dominating(a, x, 1)), 3),
        ("gamma_x2(K4)", minimum(K4, lambda a, x: is_k_tuple_dominating(a, x, 2)), 2),
    ]
    failures = 0
    for name, got, expected in checks:
        ok = got == expected
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name} = {got} (expected {expected})")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
