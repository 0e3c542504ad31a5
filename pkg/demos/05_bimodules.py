"""Bimodules: axioms, the regular bimodule, and small faithful fixtures."""
# %%
from leibniz import corpus
from leibniz.reps import check_bimodule_axioms, is_faithful, joint_kernel, regular_bimodule, swapped
from leibniz.structure import left_center, right_center

# %% The regular bimodule is faithful exactly when Z^l and Z^r meet trivially
for name, alg in corpus.algebras().items():
    reg = regular_bimodule(alg)
    jk = joint_kernel(reg)
    assert jk == (left_center(alg) & right_center(alg))
    print(f"{name:14s} axioms ok: {check_bimodule_axioms(reg).ok}  faithful: {is_faithful(reg)}")
print()

# %% Swapping the two actions usually breaks the axioms
L2ii = corpus.algebra("L2ii")
bad = check_bimodule_axioms(swapped(regular_bimodule(L2ii)))
print("swapped regular bimodule of L2ii:", len(bad), "violations; first:", bad.first())
print()

# %% Shipped faithful fixtures of dimension at most dim L + 1
for name, af in corpus.bimodule_fixtures().items():
    b = af.bimodule
    print(f"{name:14s} dim L = {af.algebra.dim}, carrier dim = {b.carrier_dim}, "
          f"faithful: {is_faithful(b)}")
