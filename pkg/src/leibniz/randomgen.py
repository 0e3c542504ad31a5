"""Deterministic pseudo-random rational data for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .exactla import Matrix


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_fraction(r: random.Random, bound: int = 5, max_den: int = 3) -> Fraction:
    return Fraction(r.randint(-bound, bound), r.randint(1, max_den))


def random_vector(r: random.Random, n: int, bound: int = 5, max_den: int = 3) -> tuple:
    return tuple(random_fraction(r, bound, max_den) for _ in range(n))


def random_invertible(r: random.Random, n: int, bound: int = 3) -> Matrix:
    """Random invertible n x n rational matrix (rejection sampling on the determinant)."""
    while True:
        m = Matrix.from_rows([random_vector(r, n, bound, 2) for _ in range(n)], n)
        if n == 0 or m.det() != 0:
            return m


def random_basis_change(alg, seed: int):
    """``alg`` rewritten in a random rational basis; returns (algebra, matrix)."""
    p = random_invertible(rng(seed), alg.dim)
    return alg.change_basis(p), p
