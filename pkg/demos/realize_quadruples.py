"""Build graphs for prescribed (g, eg, seg, meg) and check them with the solvers."""

from geomon import quadruple, realize
from geomon.constructions import feasibility
from geomon.formats import export_dot

for q in [(2, 2, 3, 4), (2, 3, 4, 5), (2, 3, 6, 8), (2, 4, 4, 4), (3, 3, 3, 3), (4, 5, 6, 7)]:
    g, plan = realize(q)
    got = quadruple(g).values
    print(f"{q} -> {plan.family.value:20} n={g.n:3} m={g.m:3} solved={got} ok={got == q}")

# two shapes can never occur
for q in [(2, 2, 2, 5), (2, 3, 3, 4)]:
    print(q, feasibility(q).reason)

# Graphviz source for the smallest a >= 3 instance; pipe into `dot -Tpng`
g, plan = realize((3, 3, 3, 3))
print(export_dot(g, plan))
