# %% [markdown]
# # Good lattice points, cells and the order ideal
#
# The polytope of a type table is cut out by `x >= 0` and one upper bound
# per non-empty set of coordinates. Its lattice points with all
# coordinates at least 1 are the good points.

# %%
from collections import Counter
from pathlib import Path

import numpy as np

from thedron import (
    basis_degree,
    canonical_form,
    cells,
    degree_gf,
    enumerate_bases,
    good_lattice_points,
    h_description,
    order_ideal,
    parse_presentation,
)

P = parse_presentation(Path(__file__).with_name("data").joinpath("golden.json").read_text())
Q, T = canonical_form(P)
H = h_description(T)
for I, u in H.bounds.items():
    print(f"sum of x_i over {sorted(I)} <= {u}")

pts = good_lattice_points(H)
print(len(pts), "good points; degree counts", sorted(Counter(map(sum, pts)).items()))

# %% [markdown]
# Each maximal valid type sequence labels one cell. Its generating function
# depends on which coordinates keep the origin (the zero pattern), and the
# cells together account for every good point.

# %%
total = np.zeros(T.n + 1, dtype=np.int64)
for c in cells(T):
    print(c.a, "EP", sorted(c.ep_set), "zero", sorted(c.zero_pattern), "gf", list(c.gf))
    total += c.gf
print("sum of cells :", total.tolist())
print("good points  :", list(degree_gf(pts, T.n)))

# %% [markdown]
# Every basis gets a degree, and subtracting the rank recovers its
# externally passive count.

# %%
for B in enumerate_bases(Q)[::6]:
    d = basis_degree(T, B)
    print(B, f"d = {d.base_part} + {d.relative_part} = {d.total}")

# %% [markdown]
# Shifting the good points down by one in every coordinate gives a
# monomial order ideal. It is pure, and its degree counts are the dual
# h-vector.

# %%
X = order_ideal(T)
print("degree sequence", X.degree_sequence, "pure", X.pure, "top degree", X.top_degree)
print("maximal monomials", X.maximal_monomials())
