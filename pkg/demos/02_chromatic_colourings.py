"""Chromatic number, the canonical colouring that front-loads rainbow
vertices, and the profile computed from it."""

from rainbow_ren import families as fam
from rainbow_ren.chromatic import (
    all_chi_colourings, chi_minus_colouring, chromatic_number, chromatic_profile, r_chi_range,
)

for text in ["cycle:5", "path:5", "wheel:6", "corona:complete:2/complete:2", "mycielskian:cycle:5"]:
    g = fam.build(fam.parse_family(text))
    c = chi_minus_colouring(g)
    prof = chromatic_profile(g, c)
    print(f"{text}: chi={chromatic_number(g)}")
    print(f"  classes={c.classes} theta={c.theta}")
    print(f"  chromatic degrees={prof.chromatic_degrees} r_chi={prof.r_chi} "
          f"diameter={prof.chromatic_diameter}")

# every chi-colouring of C_5, and how many rainbow vertices each one has
g = fam.cycle_graph(5)
print("\nall 3-colourings of C5 (up to renaming):")
for c in all_chi_colourings(g):
    print(f"  {c.classes} theta={c.theta} r_chi={chromatic_profile(g, c).r_chi}")
print("range of r_chi over chi-colourings:", r_chi_range(g))
