"""Integer matrix normal forms and finitely generated abelian group ranks.

All arithmetic is on arbitrary-precision Python integers.  The Smith
routine keeps the full unimodular transforms so A == U @ D @ V exactly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedWord

IntMat = list[list[int]]


def int_identity(n: int) -> IntMat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_mat_mul(A: IntMat, B: IntMat) -> IntMat:
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    cols = len(B[0])
    return [[sum(row[k] * B[k][j] for k in range(len(B))) for j in range(cols)]
            for row in A]


def int_det(A: IntMat) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """A = U @ D @ V with U, V unimodular and D diagonal, d1 | d2 | …"""

    U: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    Vinv: tuple[tuple[int, ...], ...]

    def elementary_divisors(self) -> list[int]:
        out = []
        for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)):
            if self.D[i][i] != 0:
                out.append(self.D[i][i])
        return out

    def reassemble(self) -> IntMat:
        return int_mat_mul(int_mat_mul([list(r) for r in self.U],
                                       [list(r) for r in self.D]),
                           [list(r) for r in self.V])


def smith_normal_form(A: IntMat) -> SmithDecomposition:
    """Smith normal form with transforms, smallest-pivot strategy."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [row[:] for row in A]
    U = int_identity(m)
    V = int_identity(n)
    Vinv = int_identity(n)

    # Row op on D is D <- L D; compensate U <- U L^{-1}.  Column op is
    # D <- D R; compensate V <- R^{-1} V and Vinv <- Vinv R.
    def swap_rows(i, j):
        if i == j:
            return
        D[i], D[j] = D[j], D[i]
        for r in range(m):
            U[r][i], U[r][j] = U[r][j], U[r][i]

    def add_row(src, dst, k):          # row_dst += k * row_src
        if k == 0:
            return
        D[dst] = [x + k * y for x, y in zip(D[dst], D[src])]
        for r in range(m):
            U[r][src] -= k * U[r][dst]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        for r in range(m):
            U[r][i] = -U[r][i]

    def swap_cols(i, j):
        if i == j:
            return
        for r in range(m):
            D[r][i], D[r][j] = D[r][j], D[r][i]
        V[i], V[j] = V[j], V[i]
        for r in range(n):
            Vinv[r][i], Vinv[r][j] = Vinv[r][j], Vinv[r][i]

    def add_col(src, dst, k):          # col_dst += k * col_src
        if k == 0:
            return
        for r in range(m):
            D[r][dst] += k * D[r][src]
        V[src] = [x - k * y for x, y in zip(V[src], V[dst])]
        for r in range(n):
            Vinv[r][dst] += k * Vinv[r][src]

    def negate_col(i):
        for r in range(m):
            D[r][i] = -D[r][i]
        V[i] = [-x for x in V[i]]
        for r in range(n):
            Vinv[r][i] = -Vinv[r][i]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(D[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    for t in range(min(m, n)):
        while True:
            best = find_pivot(t)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(t, i, -q)
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(t, j, -q)
                    if D[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % D[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if D[t][t] < 0:
            negate_row(t)
        if t < min(m, n) and D[t][t] == 0:
            break
    return SmithDecomposition(
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in D),
        tuple(tuple(r) for r in V),
        tuple(tuple(r) for r in Vinv),
    )


def integer_kernel_basis(A: IntMat, ncols: int) -> list[list[int]]:
    """Basis of the saturated lattice {x in Z^ncols : A x = 0}."""
    if not A:
        return [row[:] for row in int_identity(ncols)]
    snf = smith_normal_form(A)
    rank = len(snf.elementary_divisors())
    vinv = [list(r) for r in snf.Vinv]
    basis = []
    for j in range(rank, ncols):
        basis.append([vinv[i][j] for i in range(ncols)])
    return basis


def hermite_normal_form(A: IntMat) -> list[list[int]]:
    """Canonical row-style Hermite form of the row lattice of A.

    Pivots positive and left-to-right, entries above each pivot reduced to
    [0, pivot); zero rows dropped.
    """
    rows = [row[:] for row in A if any(row)]
    if not rows:
        return []
    n = len(rows[0])
    h: list[list[int]] = []
    r = 0
    for c in range(n):
        idx = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                idx = i
                break
        if idx is None:
            continue
        rows[r], rows[idx] = rows[idx], rows[r]
        for i in range(r + 1, len(rows)):
            # Euclid on the leading column entries of rows r and i.
            while rows[i][c]:
                q = rows[r][c] // rows[i][c]
                rows[r] = [x - q * y for x, y in zip(rows[r], rows[i])]
                rows[r], rows[i] = rows[i], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        r += 1
        if r == len(rows):
            break
    rows = [row for row in rows[:r] if any(row)]
    # reduce entries above pivots
    pivots = []
    for row in rows:
        for c, v in enumerate(row):
            if v:
                pivots.append(c)
                break
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            pc = pivots[j]
            if rows[j][pc]:
                q = rows[i][pc] // rows[j][pc]
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[j])]
    return rows


def abelianization_rank(generator_count: int, relators) -> tuple[int, list[int]]:
    """Free rank and torsion of the abelianisation of a presentation.

    Relator words are integer sequences: symbol ±k means generator k
    (1-based) or its inverse.
    """
    if generator_count < 0:
        raise MalformedWord("negative generator count")
    rows = []
    for w, word in enumerate(relators):
        row = [0] * generator_count
        for sym in word:
            if not isinstance(sym, int) or sym == 0 or abs(sym) > generator_count:
                raise MalformedWord(f"relator {w}: symbol {sym!r} out of range")
            row[abs(sym) - 1] += 1 if sym > 0 else -1
        rows.append(row)
    if not rows:
        return generator_count, []
    snf = smith_normal_form(rows)
    divisors = snf.elementary_divisors()
    free_rank = generator_count - len(divisors)
    torsion = [dv for dv in divisors if dv > 1]
    return free_rank, torsion
