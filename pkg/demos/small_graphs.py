"""Exact parameters of a few small graphs, with the optimal sets."""

from geomon import quadruple
from geomon.formats import parse_edge_list
from geomon.graph import complete_graph, cycle_graph, path_graph, star_graph

for name, g in [("P5", path_graph(5)), ("C4", cycle_graph(4)), ("C5", cycle_graph(5)),
                ("C6", cycle_graph(6)), ("K4", complete_graph(4)), ("K1,3", star_graph(3))]:
    prof = quadruple(g)
    print(f"{name:5} g, eg, seg, meg = {prof.values}")

# a house: square with a roof.  The roof apex is simplicial and so forced.
house = parse_edge_list("""
a b
b c
c d
d a
a e
b e
""")
prof = quadruple(house)
print("house", prof.values)
for kind, cert in prof.certificates.items():
    print(f"  {kind.value:4}", [house.label(v) for v in cert.vertices])
