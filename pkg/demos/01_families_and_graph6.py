"""Build a few named graphs, round-trip them through graph6, and check that
relabelled copies land on the same canonical form."""

import random

from rainbow_ren import families as fam
from rainbow_ren.graph import canonical_form, enumerate_graphs
from rainbow_ren.graph6 import parse_graph6, write_graph6

for text in ["cycle:6", "wheel:5", "jahangir:2,4", "corona:complete:3/path:2", "mycielskian:cycle:5"]:
    g = fam.build(fam.parse_family(text))
    g6 = write_graph6(g)
    assert parse_graph6(g6) == g
    print(f"{text:28s} n={g.n:2d} m={g.m:2d} graph6={g6}")

# shuffling the labels changes graph6 but not the canonical form
g = fam.build(fam.parse_family("fan:5"))
perm = list(range(g.n))
random.Random(1).shuffle(perm)
h = g.relabel(perm)
print("\nfan:5 relabelled:", write_graph6(g), "->", write_graph6(h))
print("same canonical form:", canonical_form(g) == canonical_form(h))

print("\ngraphs up to isomorphism:")
for n in range(1, 7):
    total = sum(1 for _ in enumerate_graphs(n))
    conn = sum(1 for _ in enumerate_graphs(n, connected_only=True))
    print(f"  n={n}: {total:4d} total, {conn:4d} connected")
