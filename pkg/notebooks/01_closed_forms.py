"""Closed forms against brute force.

Every named family carries a closed-form Wiener index. Here we build a few
members, compute W by BFS, and compare. The batched numpy routine then checks
a whole slab of star-trees in one call.
"""

# %%
from __future__ import annotations

import numpy as np

from wienerkit import build, closed_form_wiener, parse_spec, wiener_batch, wiener_index

# %% [markdown]
# A handful of specs, written the same way the CLI accepts them.

# %%
for text in ["path:n=12", "star:n=12", "cycle:n=11", "lollipop:n=12,g=5",
             "doublebroom:d=4,k=2,l=3", "T21:t=3", "G12:t=2"]:
    fs = parse_spec(text)
    g = build(fs)
    print(f"{text:<26} n={g.n:<3} W={wiener_index(g):<5} closed form={closed_form_wiener(fs)}")

# %% [markdown]
# Cycles: W(C_n) grows like n^3/8. The ratio settles quickly.

# %%
ns = np.arange(5, 41)
ws = np.array([closed_form_wiener(parse_spec(f"cycle:n={n}")) for n in ns])
print(np.round(ws / ns**3, 4)[-5:])

# %% [markdown]
# Batched BFS over all star-trees with 20 vertices. Each row of `adjs` is
# one graph as a list of int bitsets.

# %%
from wienerkit.families import FamilySpec, star_tree, wiener_star_tree  # noqa: E402

graphs = []
for c in ([1] * 19, [2] * 9 + [1], [3, 3, 4, 4, 5], [9, 10], [19]):
    fs = FamilySpec("startree", (("c", tuple(c)),))
    graphs.append((c, build(fs)))
adjs = [g.adj for _, g in graphs]
w, diam = wiener_batch(adjs, 20)
for (c, _), wi, di in zip(graphs, w, diam):
    print(f"spokes {c}: W={int(wi)} diameter={int(di)} formula={wiener_star_tree(tuple(c))}")
