"""Which trees of fixed diameter have the largest Wiener index?

We scan all trees with n vertices and diameter d, keep every maximiser, and
look at how the winners are shaped.
"""

# %%
from __future__ import annotations

import numpy as np

from wienerkit import (FamilyFilter, decode, diametral_path_cover_check, enumerate_trees,
                       improve_tree, search, wiener_index)
from wienerkit.metrics import diameter

# %% [markdown]
# Distribution of W over all 11-vertex trees with diameter 6.

# %%
ws = np.array([wiener_index(t) for t in enumerate_trees(FamilyFilter(11, diameter=6))])
print(len(ws), "trees; W from", ws.min(), "to", ws.max())
vals, counts = np.unique(ws, return_counts=True)
print(dict(zip(vals.tolist(), counts.tolist())))

# %% [markdown]
# The maximum at each (n, d). Ties are kept, so the witness count matters.

# %%
for n in range(8, 13):
    row = []
    for d in range(2, n):
        rep = search(FamilyFilter(n, diameter=d), trees=True)
        row.append(f"{rep.max_wiener}({len(rep.witnesses)})")
    print(n, " ".join(row))

# %% [markdown]
# Every maximiser has all of its vertices within reach of a longest path
# through short pendant paths. Trees that fail this can be improved.

# %%
rep = search(FamilyFilter(12, diameter=7), trees=True)
print(all(diametral_path_cover_check(decode(w[0])).covered for w in rep.witnesses))

start = next(t for t in enumerate_trees(FamilyFilter(12, diameter=7))
             if not diametral_path_cover_check(t).covered)
better = improve_tree(start)
print("W", wiener_index(start), "->", wiener_index(better), "diameter kept:",
      diameter(start) == diameter(better))
