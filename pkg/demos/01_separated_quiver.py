"""Build an algebra from block sizes and a pattern, then look at its separated quiver."""

from radzero import AlgebraSpec, a_vector, classify, dimension_vector, separated, separated_graph

# two blocks of size 2 and 3; block 1 talks to both, block 2 only to itself
spec = AlgebraSpec.from_pattern([2, 3], [[1, 1], [0, 1]])
print(spec)
print("a =", a_vector(spec))  # a_i = sum of r_j over the ones in row i

q = separated(spec)
print("vertices:", q.vertices)
print("arrows:  ", [(q.vertices[s], q.vertices[t]) for s, t in q.arrows])
print("d =", dimension_vector(spec))

# the underlying graph is a path on four vertices
print(classify(separated_graph(spec)).to_json())
print(q.to_dot())
