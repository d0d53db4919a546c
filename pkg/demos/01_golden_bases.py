# %% [markdown]
# # Bases, activities and h-vectors of a small transversal matroid
#
# Two members over nine elements: elements 1, 2 sit only in the first
# member, 3, 4, 5 only in the second, and 6..9 in both.

# %%
from pathlib import Path

from thedron import (
    canonical_form,
    dual_h_vector,
    enumerate_bases,
    externally_passive_count,
    h_from_f,
    f_vector,
    h_vector_via_activity,
    parse_presentation,
    type_sequence,
)

P = parse_presentation(Path(__file__).with_name("data").joinpath("golden.json").read_text())
Q, T = canonical_form(P)
print("types", [sorted(I) for I in T.types], "multiplicities", T.multiplicities)

# %% [markdown]
# Every pair of elements is a basis unless both come from the same
# single-member class. That leaves C(9,2) - C(2,2) - C(3,2) = 32 bases.

# %%
bases = enumerate_bases(Q)
print(len(bases), "bases")
for B in bases[:8]:
    report = externally_passive_count(Q, B)
    print(B, type_sequence(T, B), "passive:", sorted(report.externally_passive), "ep =", report.ep)

# %% [markdown]
# Counting bases by ep gives the h-vector of the dual matroid. The primal
# h-vector, from internal activity, agrees with the f-vector transform of
# the independence complex.

# %%
print("dual h :", dual_h_vector(Q))
print("h      :", h_vector_via_activity(Q), "=", h_from_f(f_vector(Q)))
