"""A tour of the Leibniz algebras of dimension one and two.

Run with ``python3 demos/01_small_algebras.py``.
"""
# %% The canonical list
from leibniz.algebra import bracket, check_left_leibniz, check_right_leibniz, is_lie
from leibniz.classify import canonical_algebras, classify_dim_le2, fingerprint
from leibniz.randomgen import random_basis_change

for dim in (1, 2):
    for alg in canonical_algebras(dim):
        print(f"{alg.name:5s} {alg!r}")
print()

# %% Left versus right
# (ii) satisfies the left Leibniz identity but not the right one.  The right
# identity x(yz) = (xy)z - (xz)y fails at x = y = z = b.
L = canonical_algebras(2)[3]
a, b = L.basis()
print("left Leibniz:", check_left_leibniz(L).ok)
for v in check_right_leibniz(L):
    print("right Leibniz fails at", [L.basis_names[i] for i in v.indices], "residual", v.residual)
print("[b,[b,b]] =", bracket(L, b, bracket(L, b, b)))
print("is Lie:", is_lie(L))
print()

# %% Fingerprints separate the four classes
for alg in canonical_algebras(2):
    fp = fingerprint(alg)
    print(f"{alg.name:5s} ker={fp.ker_dim} Zl={fp.left_center_dim} Zr={fp.right_center_dim} "
          f"derived={list(fp.derived_dims)} central={list(fp.central_dims)} "
          f"R={fp.radical_dim} N={fp.nilradical_dim}")
print()

# %% Recognizing a disguised algebra
disguised, p = random_basis_change(L, seed=2024)
print("disguised:", disguised)
res = classify_dim_le2(disguised)
print("classified as", res.name)
print("isomorphism (columns are the images of a, b):")
print(res.isomorphism)
print("structure constants match:", disguised.change_basis(res.isomorphism).c == L.c)
