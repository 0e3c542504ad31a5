"""Levi decompositions by solving linear splitting systems."""
# %%
import time

from leibniz import corpus
from leibniz.levi import levi_decomposition, reductive_check
from leibniz.randomgen import random_basis_change

# %% sl2 acting on its natural module, and sl2 beside L2ii
for name in ("sl2_k2", "sl2_plus_L2ii", "sl2_plus_k"):
    alg = corpus.algebra(name)
    t = time.perf_counter()
    lev = levi_decomposition(alg)
    ms = 1000 * (time.perf_counter() - t)
    print(f"{name}: S = {lev.semisimple_part}")
    print(f"{' ' * len(name)}  R = {lev.radical_part}  ({ms:.0f} ms)")
    print(f"{' ' * len(name)}  checks: {lev.verified}")
print()

# %% In a scrambled basis the Levi factor is no longer a coordinate subspace
alg, p = random_basis_change(corpus.algebra("sl2_plus_L2ii"), seed=7)
lev = levi_decomposition(alg)
print("scrambled S basis:")
for v in lev.semisimple_part.basis:
    print("  ", [str(x) for x in v])
print()

# %% Reductive check
for name in ("sl2_plus_k", "sl2_k2", "sl2_plus_L2ii"):
    rep = reductive_check(corpus.algebra(name))
    print(f"{name}: [L,Z^l]=0: {rep.hypothesis_left_center_annihilated}, "
          f"L/Z^l semisimple: {rep.hypothesis_quotient_semisimple}, reductive: {rep.reductive}")
