"""
How often does the closed form fail?
====================================

Sweep a grid of (n, b, c) and count the points where the two sides differ.
n = 0 always agrees (both sides are 1/C(b, c)).
"""

from collections import Counter

from hypverify import frisch_sweep, search_counterexamples, triple_grid

N_MAX, B_MAX = 6, 6
found = search_counterexamples(N_MAX, B_MAX)
total = Counter(t.n for t in triple_grid(N_MAX, B_MAX))
bad = Counter(cx.params.n for cx in found)

for n in sorted(total):
    print(f"n={n}: {bad[n]:3d} of {total[n]} triples fail")

# the constant terms already disagree for every n >= 1 here
assert all(cx.difference[0] != 0 for cx in found)

cases, failures = frisch_sweep(8, 8)
print(f"Frisch identity: {cases} cases, {len(failures)} failures")
