"""Independent reference values for the PageRank unit tests.

Plain dense iteration of the affine update (fixed step count), normalized to
sum 1 once at the end, written without reference to the C++ implementation.
Run with `python3` and paste the printed vectors into tests/test_pagerank.cpp.
"""
from fractions import Fraction


def iterate(adj, teleport, theta, steps=200):
    n = len(adj)
    x = [1.0 / n] * n
    for _ in range(steps):
        x = [(1 - theta) * teleport[i] + theta * sum(x[k] / len(adj[k]) for k in adj[i]) for i in range(n)]
    s = sum(x)
    return [v / s for v in x]


def show(name, v):
    print(name, ", ".join(f"{x:.17g}" for x in v))


path = [[1], [0, 2], [1]]
show("path_abc_theta05", iterate(path, [1 / 3] * 3, 0.5))
print("  closed form:", [str(Fraction(5, 18)), str(Fraction(4, 9)), str(Fraction(5, 18))])

tri = [[1, 2], [0, 2], [0, 1]]
w = [2, 1, 1]
show("triangle_w211_theta05", iterate(tri, [x / sum(w) for x in w], 0.5))

# Isolated C: unnormalized fixed point is A = B = 1/3, C = 1/6; sum 5/6.
edge_iso = [[1], [0], []]
show("edge_plus_isolated_theta05", iterate(edge_iso, [1 / 3] * 3, 0.5))
print("  closed form:", [str(Fraction(2, 5)), str(Fraction(2, 5)), str(Fraction(1, 5))])

star = [[1, 2, 3, 4], [0], [0], [0], [0]]
show("star4_theta085", iterate(star, [1 / 5] * 5, 0.85, steps=400))
