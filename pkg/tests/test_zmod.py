import random
from math import gcd

import pytest

from parcoh.errors import MalformedWord
from parcoh.zmod import (
    abelianization_rank,
    hermite_normal_form,
    int_det,
    int_mat_mul,
    integer_kernel_basis,
    smith_normal_form,
)
from helpers import random_unimodular


def minors_gcd_divisors(A, m, n):
    """Oracle: elementary divisors from gcds of k x k minors."""
    from itertools import combinations

    def minor(rows, cols):
        k = len(rows)
        if k == 0:
            return 1
        sub = [[A[r][c] for c in cols] for r in rows]
        return int_det(sub)

    out = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, abs(minor(rows, cols)))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def check_decomposition(A):
    snf = smith_normal_form(A)
    assert snf.reassemble() == A
    m, n = len(A), len(A[0])
    assert abs(int_det([list(r) for r in snf.U])) == 1
    assert abs(int_det([list(r) for r in snf.V])) == 1
    assert int_mat_mul([list(r) for r in snf.V], [list(r) for r in snf.Vinv]) == \
        [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    divs = snf.elementary_divisors()
    for a, b in zip(divs, divs[1:]):
        assert b % a == 0
    # off-diagonal zero
    for i in range(m):
        for j in range(n):
            if i != j:
                assert snf.D[i][j] == 0
    return snf


def test_smith_spec_examples():
    snf = check_decomposition([[1, 0], [0, 6]])
    assert snf.elementary_divisors() == [1, 6]
    snf = check_decomposition([[2, 4], [6, 8]])
    assert snf.elementary_divisors() == [2, 4]
    snf = check_decomposition([[0, 0, 0], [0, 0, 0]])
    assert snf.elementary_divisors() == []


def test_smith_matches_minor_gcd_oracle():
    rng = random.Random(77)
    for _ in range(200):
        A = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(3)]
        snf = check_decomposition(A)
        assert snf.elementary_divisors() == minors_gcd_divisors(A, 3, 4)


def test_smith_invariant_under_unimodular_transforms():
    rng = random.Random(13)
    for _ in range(30):
        A = [[rng.randint(-6, 6) for _ in range(3)] for _ in range(3)]
        L = random_unimodular(rng, 3)
        R = random_unimodular(rng, 3)
        B = int_mat_mul(int_mat_mul(L, A), R)
        assert smith_normal_form(A).elementary_divisors() == \
            smith_normal_form(B).elementary_divisors()


def test_integer_kernel_saturated():
    basis = integer_kernel_basis([[2, 4, 6]], 3)
    assert len(basis) == 2
    for v in basis:
        assert 2 * v[0] + 4 * v[1] + 6 * v[2] == 0
    # saturation: (1, -2, 1) and (−1, ... ) generate primitive vectors
    h = hermite_normal_form(basis)
    assert h[0][0] == 1 or h[0][1] == 1


def test_hermite_canonical():
    h1 = hermite_normal_form([[2, 4, 6], [4, 2, 8]])
    h2 = hermite_normal_form([[4, 2, 8], [6, 6, 14], [2, 4, 6]])
    assert h1 == h2
    for row, nxt in zip(h1, h1[1:]):
        assert next(i for i, x in enumerate(row) if x) < \
            next(i for i, x in enumerate(nxt) if x)


def test_abelianization_examples():
    assert abelianization_rank(2, []) == (2, [])
    assert abelianization_rank(2, [[1, 2, -1, -2]]) == (2, [])
    assert abelianization_rank(1, [[1, 1, 1]]) == (0, [3])
    # Heisenberg-style presentation
    assert abelianization_rank(3, [[1, 2, -1, -2, -3], [1, 3, -1, -3], [2, 3, -2, -3]]) == (2, [])
    with pytest.raises(MalformedWord):
        abelianization_rank(2, [[0]])
    with pytest.raises(MalformedWord):
        abelianization_rank(2, [[3]])
