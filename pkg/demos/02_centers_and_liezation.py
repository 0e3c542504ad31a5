"""Ker(L), the two centers and the liezation L / Ker(L)."""
# %%
from leibniz import corpus
from leibniz.algebra import is_lie
from leibniz.structure import (
    ker_ideal,
    left_center,
    liezation,
    lower_central_series,
    right_center,
)

# %% Ker(L) is spanned by the squares [x, x]
for name in ("L2i", "L2ii", "cyc3", "heis3"):
    alg = corpus.algebra(name)
    print(f"{name:5s} Ker={ker_ideal(alg)}  Z^l={left_center(alg)}  Z^r={right_center(alg)}")
print()

# %% The two centers can differ in dimension
# cyc3 is generated by x with [x, x] = y and [x, y] = z.
cyc3 = corpus.algebra("cyc3")
print("cyc3:", cyc3)
print("dim Z^l =", left_center(cyc3).dim, " dim Z^r =", right_center(cyc3).dim)
print()

# %% In L2ii both centers are lines, but different lines
L2ii = corpus.algebra("L2ii")
print("Z^l(L2ii) =", left_center(L2ii), " Z^r(L2ii) =", right_center(L2ii))
print()

# %% [C^k, L] and [L, C^k] need not agree
# In L2ii the lower central series stabilizes at span{a}: [L, a] = span{a} but [a, L] = 0.
print("lower central series of L2ii:", lower_central_series(L2ii).dims)
print()

# %% Liezation
for name in ("L2i", "L2ii", "sl2_plus_L2ii"):
    q = liezation(corpus.algebra(name))
    print(f"{name}: L/Ker has dim {q.algebra.dim}, Lie: {is_lie(q.algebra)}; {q.algebra}")
