"""Shared construction utilities for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

from parcoh.field import FieldElement
from parcoh.lattice import GeneratorData, InducedAction, LatticeData
from parcoh.liealg import LieAlgebraData, algebra_from_matrix_basis
from parcoh.linalg import Quotient, Subspace, identity, mat_rank


def fe(d: int, *coeffs) -> FieldElement:
    return FieldElement(d, *coeffs)


def fmat(d: int, rows):
    return [[x if isinstance(x, FieldElement) else FieldElement(d, x) for x in row]
            for row in rows]


def random_rational(rng: random.Random, span: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def random_element(rng: random.Random, d: int, span: int = 5) -> FieldElement:
    return FieldElement(d, random_rational(rng, span), random_rational(rng, span),
                        random_rational(rng, span), random_rational(rng, span))


def random_real_element(rng: random.Random, d: int, span: int = 5) -> FieldElement:
    return FieldElement(d, random_rational(rng, span), random_rational(rng, span))


def random_invertible(rng: random.Random, d: int, n: int, rational_only=False):
    """Random invertible matrix over the field (small entries)."""
    while True:
        if rational_only:
            m = fmat(d, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        else:
            m = [[FieldElement(d, rng.randint(-2, 2), rng.randint(-1, 1))
                  for _ in range(n)] for _ in range(n)]
        if mat_rank([row[:] for row in m]) == n:
            return m


def random_unimodular(rng: random.Random, n: int, steps: int = 12):
    """Random integer matrix of determinant ±1 (products of elementary ops)."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if op == 0 and i != j:
            k = rng.randint(-2, 2)
            m[i] = [x + k * y for x, y in zip(m[i], m[j])]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-x for x in m[i]]
    return m


def synthetic_action(d: int, mats, names=None) -> InducedAction:
    """Wrap plain matrices as an induced action on a full/zero quotient."""
    m = len(mats[0]) if mats else 0
    Q = Quotient(Subspace.full(d, m), Subspace.zero(d, m))
    names = names or [f"g{i}" for i in range(len(mats))]
    return InducedAction(
        matrices=tuple(tuple(tuple(row) for row in M) for M in mats),
        names=tuple(names), quotient=Q, d=d)


def sl2_algebra(d: int = 2) -> LieAlgebraData:
    return LieAlgebraData.from_triples(
        d, 3, ["h", "e", "f"], [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])


def heisenberg_algebra(d: int = 1) -> LieAlgebraData:
    return LieAlgebraData.from_triples(d, 3, ["x", "y", "z"], [(0, 1, 2, 1)])


def example2_algebra(d: int = 2) -> LieAlgebraData:
    return LieAlgebraData.from_triples(
        d, 3, ["t", "x", "y"], [(0, 1, 1, 1), (0, 2, 2, -1)])


def sl2_semidirect_c2(d: int = 2) -> LieAlgebraData:
    """sl2 acting on its standard representation: basis h, e, f, v1, v2."""
    return LieAlgebraData.from_triples(
        d, 5, ["h", "e", "f", "v1", "v2"],
        [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1),
         (0, 3, 3, 1), (0, 4, 4, -1), (1, 4, 3, 1), (2, 3, 4, 1)])


def sl2_semidirect_heis(d: int = 2) -> LieAlgebraData:
    """sl2 acting on the Heisenberg algebra v1, v2, z with [v1, v2] = z."""
    return LieAlgebraData.from_triples(
        d, 6, ["h", "e", "f", "v1", "v2", "z"],
        [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1),
         (0, 3, 3, 1), (0, 4, 4, -1), (1, 4, 3, 1), (2, 3, 4, 1),
         (3, 4, 5, 1)])


def sl2_plus_sl2(d: int = 2) -> LieAlgebraData:
    return LieAlgebraData.from_triples(
        d, 6, None,
        [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1),
         (3, 4, 4, 2), (3, 5, 5, -2), (4, 5, 3, 1)])


def sl3_algebra(d: int = 2) -> LieAlgebraData:
    """sl3 from elementary 3x3 matrices (dimension 8, simple, rank 2)."""
    zero, one = FieldElement(d, 0), FieldElement(d, 1)

    def unit(i, j):
        m = [[zero] * 3 for _ in range(3)]
        m[i][j] = one
        return m

    def diag(a, b, c):
        m = [[zero] * 3 for _ in range(3)]
        m[0][0], m[1][1], m[2][2] = FieldElement(d, a), FieldElement(d, b), FieldElement(d, c)
        return m

    basis = [diag(1, -1, 0), diag(0, 1, -1),
             unit(0, 1), unit(0, 2), unit(1, 2),
             unit(1, 0), unit(2, 0), unit(2, 1)]
    return algebra_from_matrix_basis(d, basis)


def identity_generator_lattice(d: int, n: int, **kwargs) -> LatticeData:
    return LatticeData(generators=[GeneratorData("id", identity(d, n))], **kwargs)
