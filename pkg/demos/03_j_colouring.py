"""J-colourings: proper colourings in which every internal vertex sees every
colour in its closed neighbourhood."""

from rainbow_ren import families as fam
from rainbow_ren.jcolor import internal_vertices, is_valid_witness, j_number, j_star_number

print(" n  J(C_n)  J(P_n)  J*(P_n)")
for n in range(3, 13):
    jc = j_number(fam.cycle_graph(n))
    jp = j_number(fam.path_graph(n))
    js = j_star_number(fam.path_graph(n))
    print(f"{n:2d}  {jc[0] if jc else '-':>6}  {jp[0]:>6}  {js[0]:>7}")

g = fam.build(fam.parse_family("wheel:9"))
k, witness = j_number(g)
print(f"\nwheel:9 has J={k}, colouring {witness.colouring.assignment}")
print("internal vertices:", internal_vertices(g))
print("independent check:", is_valid_witness(g, witness))
print("wheel:7 J-colourable?", j_number(fam.wheel_graph(7)) is not None)
