# %% [markdown]
# # Checking every invariant on seeded random presentations
#
# Each element joins each member with probability 1/2, and draws without a
# transversal or with loops are resampled. The seed fixes the whole run.

# %%
import time

from thedron import random_presentations, tree_lemma_suite, verify_many

start = time.perf_counter()
instances = random_presentations(50, seed=7)
reports = verify_many(instances)
print(f"{len(instances)} instances in {time.perf_counter() - start:.2f}s")
for check in reports[0].checks:
    print(" ", "PASS" if check.passed else "FAIL", check.name)
print("all instances pass:", all(r.passed for r in reports))

# %% [markdown]
# A corrupted ep function is caught and reported with a counterexample.

# %%
from thedron import enumerate_bases, ep_of_basis, verify_main_theorem


def off_by_one(P, B):
    return ep_of_basis(P, B) + (tuple(B) == enumerate_bases(P)[0])


bad = verify_main_theorem(instances[0], ep_fn=off_by_one).first_failure()
print(bad.name, "->", bad.counterexample)

# %% [markdown]
# The tree suite samples random connected bipartite graphs and uniform
# spanning trees.

# %%
for check in tree_lemma_suite(300, seed=7):
    print("PASS" if check.passed else "FAIL", check.name)
