"""Positive roots of Dynkin graphs and the resulting class counts."""

import numpy as np

from radzero import AlgebraSpec, QuadraticForm, count_classes, dynkin_graph, positive_roots, tits_values

for name in ["A4", "D5", "E6", "E7", "E8"]:
    roots = positive_roots(dynkin_graph(name))
    print(f"{name}: {len(roots):3d} roots, largest coordinate {roots.max_coordinate()}")

# every root really has form value 1
g = dynkin_graph("E8")
xs = np.array(list(positive_roots(g)))
print("E8 form values:", set(tits_values(QuadraticForm.of(g), xs).tolist()))

# M_n(k[x]/(x^2)) has n+1 classes: one per rank
for n in range(1, 9):
    print(n, count_classes(AlgebraSpec.from_pattern([n], [[1]])))

# a larger Dynkin case; the count is an exact Python int
spec = AlgebraSpec.from_pattern([6, 6, 6], [[1, 1, 0], [0, 1, 1], [0, 0, 0]])
print("A5-shaped, blocks of 6:", count_classes(spec))
