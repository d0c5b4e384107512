"""Tabulate invariants over every connected graph of a given order and
look at the chromatic degree sequences that show up."""

from collections import Counter

from rainbow_ren.sequences import is_chromatically_graphic, survey, survey_summary

rows = survey(5, connected_only=True)
summary = survey_summary(rows)
print(f"{summary['rows']} connected graphs of order 5")
for entry in summary["joint"]:
    print("  ", entry)
print("J-colourable but chromatic degrees not constant:", summary["null_findings"])

by_ren = Counter(r.ren for r in rows)
print("ren distribution:", dict(sorted(by_ren.items())))

for seq in [(3, 3, 3, 2, 2), (2, 2, 2, 2, 2), (3, 2, 2)]:
    g = is_chromatically_graphic(seq, connected_only=True)
    print(seq, "->", "none" if g is None else f"realised, edges {g.edges()}")
