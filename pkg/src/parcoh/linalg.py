"""Exact linear algebra over the scalar field.

Matrices are lists of row lists of FieldElement; vectors act as columns
(M applied to v is mat_vec(M, v)).  Subspaces are canonical reduced row
echelon bases, so equal subspaces compare equal structurally.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import BadEigenvalueCertificate, Singular
from .field import FieldElement
from .poly import Poly, poly_gcd, real_roots_in_field

Vec = tuple[FieldElement, ...]
Mat = list[list[FieldElement]]


def zero_vec(d: int, n: int) -> Vec:
    z = FieldElement(d, 0)
    return tuple([z] * n)


def identity(d: int, n: int) -> Mat:
    z, o = FieldElement(d, 0), FieldElement(d, 1)
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def mat_from_rows(rows) -> Mat:
    return [list(r) for r in rows]


def mat_eq(A: Mat, B: Mat) -> bool:
    return len(A) == len(B) and all(tuple(ra) == tuple(rb) for ra, rb in zip(A, B))


def mat_vec(A: Mat, v) -> Vec:
    out = []
    for row in A:
        acc = None
        for aij, vj in zip(row, v):
            acc = aij * vj if acc is None else acc + aij * vj
        if acc is None:
            raise ValueError("mat_vec needs at least one column")
        out.append(acc)
    return tuple(out)


def mat_mul(A: Mat, B: Mat) -> Mat:
    ncols = len(B[0])
    nin = len(B)
    out = []
    for row in A:
        acc: list = [None] * ncols
        zero = None
        for k in range(nin):
            x = row[k]
            if x.is_zero():
                zero = x
                continue
            Bk = B[k]
            for j in range(ncols):
                y = Bk[j]
                if y.is_zero():
                    continue
                t = x * y
                acc[j] = t if acc[j] is None else acc[j] + t
        if zero is None:
            zero = row[0] * 0
        out.append([a if a is not None else zero for a in acc])
    return out

def mat_add(A: Mat, B: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: Mat, B: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Mat, s: FieldElement) -> Mat:
    return [[x * s for x in row] for row in A]


def transpose(A: Mat) -> Mat:
    return [list(col) for col in zip(*A)]


def trace(A: Mat) -> FieldElement:
    acc = A[0][0]
    for i in range(1, len(A)):
        acc = acc + A[i][i]
    return acc


def trace_product(A: Mat, B: Mat) -> FieldElement:
    """tr(A @ B) without forming the product."""
    n = len(A)
    acc = None
    for i in range(n):
        Ai = A[i]
        for j in range(n):
            x = Ai[j]
            if not x.is_zero():
                term = x * B[j][i]
                acc = term if acc is None else acc + term
    if acc is None:
        return A[0][0] * 0
    return acc


def rref(rows: list[list[FieldElement]]) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form (canonical) with pivot column list."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def mat_rank(A: Mat) -> int:
    return len(rref(A)[0])


def kernel_basis(A: Mat, d: int, ncols: int) -> list[Vec]:
    """Canonical basis of {x : A x = 0}."""
    if not A:
        rows = identity(d, ncols)
        return [tuple(r) for r in rows]
    red, pivots = rref(A)
    free_cols = [c for c in range(ncols) if c not in pivots]
    zero, one = FieldElement(d, 0), FieldElement(d, 1)
    basis = []
    for fc in free_cols:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve(A: Mat, b, d: int) -> Vec | None:
    """One solution of A x = b, or None if inconsistent."""
    if not A:
        return None
    ncols = len(A[0])
    aug = [list(row) + [bv] for row, bv in zip(A, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = FieldElement(d, 0)
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


def mat_inverse(A: Mat) -> Mat:
    n = len(A)
    d = A[0][0].d
    eye = identity(d, n)
    aug = [list(row) + eye[i] for i, row in enumerate(A)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise Singular("matrix is singular")
    return [row[n:] for row in red]


def charpoly(M: Mat) -> Poly:
    """Monic characteristic polynomial via the Faddeev–LeVerrier recursion."""
    n = len(M)
    d = M[0][0].d
    coeffs = [FieldElement(d, 0)] * (n + 1)
    coeffs[n] = FieldElement(d, 1)
    Mk = [row[:] for row in M]
    a = -trace(Mk)
    coeffs[n - 1] = a
    for k in range(2, n + 1):
        shift = mat_add(Mk, mat_scale(identity(d, n), a))
        Mk = mat_mul(M, shift)
        a = -trace(Mk) * Fraction(1, k)
        coeffs[n - k] = a
    return Poly(d, coeffs)


def matrix_min_poly(M: Mat) -> tuple[Poly, bool]:
    """Monic minimal polynomial and a semisimplicity flag.

    The polynomial is found as the least-degree monic linear dependence
    among I, M, M², …; semisimple iff gcd(m, m') is constant.
    """
    n = len(M)
    d = M[0][0].d
    powers: list[Mat] = [identity(d, n)]
    for _ in range(n):
        powers.append(mat_mul(powers[-1], M))
    vecs = [[entry for row in P for entry in row] for P in powers]
    for k in range(1, n + 1):
        # solve sum_{j<k} x_j vec_j = -vec_k
        cols = [[vecs[j][i] for j in range(k)] for i in range(n * n)]
        rhs = [-vecs[k][i] for i in range(n * n)]
        sol = solve(cols, rhs, d)
        if sol is not None:
            m = Poly(d, list(sol) + [FieldElement(d, 1)])
            g = poly_gcd(m, m.derivative())
            return m, (g.is_zero() or g.degree() == 0)
    raise AssertionError("Cayley-Hamilton violated; unreachable")


class Subspace:
    """A subspace of F^n in canonical reduced echelon form."""

    __slots__ = ("d", "n", "rows", "pivots")

    def __init__(self, d: int, n: int, rows, pivots):
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, d: int, n: int, vectors) -> Subspace:
        red, piv = rref([list(v) for v in vectors])
        return cls(d, n, red, piv)

    @classmethod
    def zero(cls, d: int, n: int) -> Subspace:
        return cls(d, n, [], [])

    @classmethod
    def full(cls, d: int, n: int) -> Subspace:
        return cls.from_vectors(d, n, identity(d, n))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_vectors(self) -> list[Vec]:
        return [tuple(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.n == other.n
                and self.d == other.d and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.d, self.n, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n})"

    def reduce(self, v) -> Vec:
        """Residual of v after eliminating this subspace's pivot coordinates."""
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            if not w[pc].is_zero():
                f = w[pc]
                w = [x - f * y for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v) -> bool:
        return all(x.is_zero() for x in self.reduce(v))

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(r) for r in other.rows)

    def coords(self, v) -> Vec:
        """Coordinates of v in the echelon basis; v must lie in the subspace."""
        c = tuple(v[pc] for pc in self.pivots)
        if not self.contains(v):
            raise ValueError("vector outside subspace")
        return c

    def lift(self, coords) -> Vec:
        z = zero_vec(self.d, self.n)
        out = list(z)
        for c, row in zip(coords, self.rows):
            out = [x + c * y for x, y in zip(out, row)]
        return tuple(out)

    def sum_with(self, other: Subspace) -> Subspace:
        return Subspace.from_vectors(self.d, self.n, list(self.rows) + list(other.rows))

    def annihilator_rows(self) -> list[Vec]:
        """Functionals w with w·v = 0 for every v in the subspace."""
        return kernel_basis([list(r) for r in self.rows], self.d, self.n)

    def intersect(self, other: Subspace) -> Subspace:
        rows = [list(r) for r in self.annihilator_rows() + other.annihilator_rows()]
        return Subspace.from_vectors(self.d, self.n, kernel_basis(rows, self.d, self.n))

    def image_under(self, M: Mat) -> Subspace:
        return Subspace.from_vectors(self.d, self.n, [mat_vec(M, r) for r in self.rows])

    def preimage_under(self, M: Mat) -> Subspace:
        ann = self.annihilator_rows()
        if not ann:
            return Subspace.full(self.d, self.n)
        comp = mat_mul([list(a) for a in ann], M)
        return Subspace.from_vectors(self.d, self.n, kernel_basis(comp, self.d, self.n))

    def restriction(self, M: Mat) -> Mat:
        """Matrix of M on this subspace's basis; requires M-invariance."""
        cols = [self.coords(mat_vec(M, r)) for r in self.rows]
        k = self.dim
        return [[cols[j][i] for j in range(k)] for i in range(k)]


def eigenspace(M: Mat, lam: FieldElement) -> Subspace:
    n = len(M)
    d = M[0][0].d
    shifted = mat_sub(M, mat_scale(identity(d, n), lam))
    return Subspace.from_vectors(d, n, kernel_basis(shifted, d, n))


def real_eigenspace_sum(M: Mat, supplied=None, *, d: int | None = None) -> Subspace:
    """Sum of eigenspaces of M over real eigenvalues in the field.

    With a supplied eigenvalue list the list is verified: every entry must
    annihilate the characteristic polynomial and the product of (x - λ)
    with multiplicity must reproduce it exactly.  Without one, discovery
    must certify completeness or raise ScalarFieldTooSmall.
    """
    n = len(M)
    if n == 0:
        if d is None:
            raise ValueError("empty matrix needs an explicit field parameter")
        return Subspace.zero(d, 0)
    d = M[0][0].d
    p = charpoly(M)
    if supplied is not None:
        if len(supplied) != n:
            raise BadEigenvalueCertificate(
                f"need {n} eigenvalues with multiplicity, got {len(supplied)}")
        for lam in supplied:
            if not p.eval(lam).is_zero():
                raise BadEigenvalueCertificate(f"{lam} is not an eigenvalue")
        if Poly.from_roots(d, supplied) != p:
            raise BadEigenvalueCertificate(
                "eigenvalue multiset does not factor the characteristic polynomial")
        reals = []
        for lam in supplied:
            if lam.is_real() and lam not in reals:
                reals.append(lam)
    else:
        reals = real_roots_in_field(p)
    out = Subspace.zero(d, n)
    for lam in reals:
        out = out.sum_with(eigenspace(M, lam))
    return out


class Quotient:
    """Quotient of a subspace by a contained subspace, with canonical basis.

    The representative basis consists of the echelon rows of the larger
    space whose pivots are not pivots of the smaller one.
    """

    __slots__ = ("sup", "sub", "basis", "_solver_cols")

    def __init__(self, sup: Subspace, sub: Subspace):
        if not sup.contains_subspace(sub):
            raise ValueError("quotient requires sub ⊆ sup")
        object.__setattr__(self, "sup", sup)
        object.__setattr__(self, "sub", sub)
        sub_pivots = set(sub.pivots)
        basis = [row for row, pc in zip(sup.rows, sup.pivots) if pc not in sub_pivots]
        object.__setattr__(self, "basis", tuple(basis))
        cols = [list(r) for r in sub.rows] + [list(b) for b in basis]
        # columns of the change-of-basis matrix, as rows for the solver
        object.__setattr__(self, "_solver_cols",
                           [[cols[j][i] for j in range(len(cols))] for i in range(sup.n)])

    def __setattr__(self, name, value):
        raise AttributeError("Quotient is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def project(self, v) -> Vec:
        """Coordinates of v + sub in the canonical quotient basis."""
        d = self.sup.d
        if self.dim == 0:
            if not self.sub.contains(v):
                raise ValueError("vector outside the quotient's total space")
            return ()
        sol = solve(self._solver_cols, list(v), d)
        if sol is None:
            raise ValueError("vector outside the quotient's total space")
        return tuple(sol[self.sub.dim:])

    def induced_matrix(self, M: Mat) -> Mat:
        """Matrix induced by M on the quotient (M must preserve sub and sup)."""
        cols = [self.project(mat_vec(M, b)) for b in self.basis]
        k = self.dim
        return [[cols[j][i] for j in range(k)] for i in range(k)]

    def lift(self, coords) -> Vec:
        out = list(zero_vec(self.sup.d, self.sup.n))
        for c, b in zip(coords, self.basis):
            out = [x + c * y for x, y in zip(out, b)]
        return tuple(out)
