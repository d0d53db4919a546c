# %% [markdown]
# # Spanning trees of the augmented bipartite graph
#
# Left vertices are the types and right vertices are `0..r`, where `0` is
# joined to every type. The left degree vectors of its spanning trees are
# exactly the maximal valid type sequences.

# %%
from thedron import (
    Presentation,
    augmented_graph,
    canonical_form,
    compatible,
    degree_vectors,
    enumerate_maximal_valid,
    infoconn_incompatible,
    spanning_trees,
)

Q, T = canonical_form(Presentation.from_lists(4, [[1, 2, 3], [2, 3, 4]]))
G = augmented_graph(T)
trees = list(spanning_trees(G))
left = sorted({degree_vectors(t)[0] for t in trees})
print(len(trees), "spanning trees")
print("left degree vectors  :", left)
print("maximal valid        :", enumerate_maximal_valid(T))

# %% [markdown]
# Two trees are compatible when the union digraph (first tree pointing
# right, second pointing left) has no directed cycle of length four or
# more. A simple degree test already forces incompatibility.

# %%
pairs = [(s, t) for s in trees for t in trees if s != t]
flagged = [(s, t) for s, t in pairs if infoconn_incompatible(s, t)]
print(len(pairs), "ordered pairs,", sum(compatible(s, t) for s, t in pairs), "compatible")
print(len(flagged), "flagged by the degree test; all incompatible:",
      not any(compatible(s, t) for s, t in flagged))
