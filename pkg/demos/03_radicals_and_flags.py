"""Radical, nilradical, and triangularizing flags."""
# %%
from leibniz import corpus
from leibniz.algebra import lmat, rmat
from leibniz.errors import NotSplitOverField
from leibniz.radicals import (
    engel_flag,
    lie_flag,
    liezation_preimage_nilradical,
    nilradical,
    radical,
    radical_report,
)
from leibniz.structure import is_nilpotent_subspace

# %% Radicals across the corpus
for name, alg in corpus.algebras().items():
    print(f"{name:14s} dim={alg.dim}  R={radical(alg).dim}  N={nilradical(alg).dim}")
print()

# %% Lifting the nilradical of L/Ker(L) is not enough
# For L2ii the liezation is one-dimensional, so its nilradical is everything and
# the preimage is all of L, which is not nilpotent.  The nilradical of L is span{a}.
L2ii = corpus.algebra("L2ii")
pre = liezation_preimage_nilradical(L2ii)
print("preimage:", pre, " nilpotent:", is_nilpotent_subspace(L2ii, pre))
print("nilradical:", nilradical(L2ii))
rep = radical_report(L2ii)
for key, ok in rep.checks.items():
    print(f"  {key}: {ok}")
for w in rep.warnings:
    print("  warning:", w)
print()

# %% Engel flag: every l_x and r_x strictly upper triangular
heis3 = corpus.algebra("heis3")
flag = engel_flag(heis3)
print("heis3 adapted basis (columns):")
print(flag.adapted_basis())
for e, name in zip(heis3.basis(), heis3.basis_names):
    print(f"l_{name} in the flag basis:")
    print(flag.conjugate(lmat(heis3, e)))
    assert flag.conjugate(rmat(heis3, e)).is_upper_triangular(strict=True)
print()

# %% Lie flag over the rationals
print("L2ii flag:", [str(s) for s in lie_flag(L2ii).chain])
try:
    lie_flag(corpus.algebra("rot2"))
except NotSplitOverField as exc:
    print("rot2:", exc)
