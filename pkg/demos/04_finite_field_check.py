"""Count orbits by brute force over small fields and compare with the root count."""

from radzero import AlgebraSpec, FFInstance, count_classes, growth_probe, orbit_count_matrices, orbit_count_subspaces

specs = [
    AlgebraSpec.from_pattern([2], [[1]]),
    AlgebraSpec.from_pattern([1, 2], [[1, 1], [0, 0]]),
    AlgebraSpec.from_pattern([1, 1, 1], [[0, 1, 1], [0, 0, 1], [0, 0, 0]]),
]
for spec in specs:
    row = [count_classes(spec)]
    for q in (2, 3, 4):
        row.append(orbit_count_subspaces(FFInstance(spec, q)))
    row.append(orbit_count_matrices(FFInstance(spec, 2)))
    print(spec, "roots / GF(2) GF(3) GF(4) / matrices:", row)

# off Dynkin the orbit count grows with q
rep = growth_probe(AlgebraSpec.from_pattern([1, 1], [[1, 1], [1, 1]]), [2, 3, 4])
print("4-cycle orbits by q:", rep.counts, "increasing:", rep.strictly_increasing)
