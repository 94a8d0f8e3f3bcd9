"""Structure theory of finite-dimensional Lie algebras over the scalar field.

An algebra is given by structure constants: [e_i, e_j] = sum_k c_ijk e_k for
i < j, antisymmetry implied.  The routines here compute derived and lower
central series, the radical (Killing-orthogonal complement of the derived
algebra), the nilradical (trace-form radical of the associative hull of the
adjoint action of the radical), a semisimple complement, the decomposition
of that complement into simple ideals, and the characteristic ideals whose
quotient carries the lattice action analysed downstream.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    JacobiViolation,
    LiftFailure,
    NotSemisimple,
    ScalarFieldTooSmall,
)
from .field import FieldElement
from .linalg import (
    Mat,
    Quotient,
    Subspace,
    Vec,
    identity,
    kernel_basis,
    mat_mul,
    mat_rank,
    mat_sub,
    mat_vec,
    matrix_min_poly,
    rref,
    solve,
    trace_product,
    zero_vec,
)
from .poly import candidate_roots_in_field


class LieAlgebraData:
    """Structure constants of a Lie algebra on an n-dimensional space."""

    def __init__(self, d: int, dim: int, basis: list[str] | None = None,
                 brackets: dict[tuple[int, int], Vec] | None = None):
        self.d = d
        self.dim = dim
        self.basis = list(basis) if basis is not None else [f"e{k}" for k in range(dim)]
        if len(self.basis) != dim:
            raise ValueError("basis label count differs from dimension")
        self.table: dict[tuple[int, int], Vec] = {}
        if brackets:
            for (i, j), vec in brackets.items():
                if not (0 <= i < j < dim):
                    raise ValueError(f"bracket indices ({i}, {j}) must satisfy 0 <= i < j < dim")
                self.table[(i, j)] = tuple(vec)
        self._ad_cache: list[Mat] | None = None

    @classmethod
    def from_triples(cls, d: int, dim: int, basis, triples) -> LieAlgebraData:
        """Build from sparse (i, j, k, c) entries with i < j."""
        zero = zero_vec(d, dim)
        table: dict[tuple[int, int], list[FieldElement]] = {}
        for i, j, k, c in triples:
            if not (0 <= i < j < dim) or not (0 <= k < dim):
                raise ValueError(f"bad structure constant indices ({i}, {j}, {k})")
            vec = table.setdefault((i, j), list(zero))
            vec[k] = vec[k] + (c if isinstance(c, FieldElement) else FieldElement(d, c))
        return cls(d, dim, basis, {k: tuple(v) for k, v in table.items()})

    def zero(self) -> Vec:
        return zero_vec(self.d, self.dim)

    def bracket_basis(self, i: int, j: int) -> Vec:
        if i == j:
            return self.zero()
        if i < j:
            return self.table.get((i, j), self.zero())
        v = self.table.get((j, i))
        return self.zero() if v is None else tuple(-x for x in v)

    def bracket(self, u, v) -> Vec:
        out = list(self.zero())
        for i, ui in enumerate(u):
            if ui.is_zero():
                continue
            for j, vj in enumerate(v):
                if vj.is_zero() or i == j:
                    continue
                w = self.bracket_basis(i, j)
                coeff = ui * vj
                out = [x + coeff * y for x, y in zip(out, w)]
        return tuple(out)

    def ad_basis(self, i: int) -> Mat:
        if self._ad_cache is None:
            cache = []
            for a in range(self.dim):
                cols = [self.bracket_basis(a, b) for b in range(self.dim)]
                cache.append([[cols[b][r] for b in range(self.dim)] for r in range(self.dim)])
            self._ad_cache = cache
        return self._ad_cache[i]

    def ad(self, v) -> Mat:
        out = [[FieldElement(self.d, 0)] * self.dim for _ in range(self.dim)]
        for i, vi in enumerate(v):
            if vi.is_zero():
                continue
            m = self.ad_basis(i)
            out = [[x + vi * y for x, y in zip(ro, rm)] for ro, rm in zip(out, m)]
        return out

    def validate(self) -> None:
        """Check the Jacobi identity on all basis triples."""
        eye = [tuple(row) for row in identity(self.d, self.dim)]
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    t1 = self.bracket(self.bracket(eye[i], eye[j]), eye[k])
                    t2 = self.bracket(self.bracket(eye[j], eye[k]), eye[i])
                    t3 = self.bracket(self.bracket(eye[k], eye[i]), eye[j])
                    res = tuple(a + b + c for a, b, c in zip(t1, t2, t3))
                    if any(not x.is_zero() for x in res):
                        raise JacobiViolation(i, j, k, [str(x) for x in res])

    # -- span computations -------------------------------------------------

    def bracket_span(self, U: Subspace, V: Subspace) -> Subspace:
        vecs = [self.bracket(u, v) for u in U.rows for v in V.rows]
        return Subspace.from_vectors(self.d, self.dim, vecs)

    def is_ideal(self, U: Subspace) -> bool:
        return U.contains_subspace(self.bracket_span(Subspace.full(self.d, self.dim), U))

    def is_subalgebra(self, U: Subspace) -> bool:
        return U.contains_subspace(self.bracket_span(U, U))

    def killing_matrix(self) -> Mat:
        ads = [self.ad_basis(i) for i in range(self.dim)]
        out = [[None] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(i, self.dim):
                out[i][j] = out[j][i] = trace_product(ads[i], ads[j])
        return out


@dataclass(frozen=True)
class StructureReport:
    derived_series: tuple[Subspace, ...]
    lower_central_series: tuple[Subspace, ...]
    radical: Subspace
    nilradical: Subspace
    killing: tuple[tuple[FieldElement, ...], ...]
    solvable: bool
    nilpotent: bool
    semisimple: bool
    abelian: bool


def _series(L: LieAlgebraData, step) -> list[Subspace]:
    full = Subspace.full(L.d, L.dim)
    out = [full]
    while True:
        nxt = step(out[-1])
        if nxt == out[-1]:
            break
        out.append(nxt)
        if nxt.dim == 0:
            break
    return out


def structure_report(L: LieAlgebraData) -> StructureReport:
    full = Subspace.full(L.d, L.dim)
    derived = _series(L, lambda U: L.bracket_span(U, U))
    lower = _series(L, lambda U: L.bracket_span(full, U))
    gprime = derived[1] if len(derived) > 1 else full
    K = L.killing_matrix()

    # radical = Killing-orthogonal complement of the derived algebra
    if gprime.dim == 0:
        radical = full
    else:
        rows = [mat_vec(K, b) for b in gprime.rows]
        radical = Subspace.from_vectors(
            L.d, L.dim, kernel_basis([list(r) for r in rows], L.d, L.dim))

    nilradical = _nilradical(L, radical)
    solvable = radical.dim == L.dim
    nilpotent = lower[-1].dim == 0
    semisimple = radical.dim == 0
    abelian = gprime.dim == 0
    return StructureReport(
        derived_series=tuple(derived),
        lower_central_series=tuple(lower),
        radical=radical,
        nilradical=nilradical,
        killing=tuple(tuple(row) for row in K),
        solvable=solvable,
        nilpotent=nilpotent,
        semisimple=semisimple,
        abelian=abelian,
    )


def _restricted_ad(L: LieAlgebraData, U: Subspace, v) -> Mat:
    """Matrix of ad(v) on U in U's echelon basis; U must be ad(v)-stable."""
    cols = [U.coords(L.bracket(v, b)) for b in U.rows]
    k = U.dim
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _nilradical(L: LieAlgebraData, radical: Subspace) -> Subspace:
    """Largest nilpotent ideal, via the trace form of the adjoint hull.

    Inside the solvable radical r, an element is in the nilradical exactly
    when its adjoint action on r lies in the radical of the associative
    algebra generated by ad(r)|_r, and that radical is the null space of
    the trace form (characteristic zero).
    """
    if radical.dim == 0:
        return radical
    d = L.d
    k = radical.dim
    gens = [_restricted_ad(L, radical, b) for b in radical.rows]
    # span-closure of the generators under multiplication
    basis_mats: list[Mat] = []
    span_rows: list[list[FieldElement]] = []

    def try_add(m: Mat) -> bool:
        flat = [x for row in m for x in row]
        probe = rref(span_rows + [flat])[0]
        if len(probe) == len(span_rows):
            return False
        span_rows.clear()
        span_rows.extend(probe)
        basis_mats.append(m)
        return True

    work = [m for m in gens if try_add(m)]
    while work:
        m = work.pop()
        for b in list(basis_mats):
            for prod in (mat_mul(m, b), mat_mul(b, m)):
                if try_add(prod):
                    work.append(prod)
    if not basis_mats:
        return radical  # abelian radical: already nilpotent
    # x in n  <=>  tr(ad(x)|_r · B) = 0 for all B in the hull
    rows = []
    for B in basis_mats:
        row = [trace_product(g, B) for g in gens]
        rows.append(row)
    coord_kernel = kernel_basis(rows, d, k)
    vecs = [radical.lift(c) for c in coord_kernel]
    return Subspace.from_vectors(d, L.dim, vecs)


# -- quotient and subalgebra presentations -------------------------------------


def quotient_algebra(L: LieAlgebraData, ideal: Subspace) -> tuple[LieAlgebraData, Quotient]:
    """Structure constants induced on full/ideal, with the projection."""
    full = Subspace.full(L.d, L.dim)
    Q = Quotient(full, ideal)
    m = Q.dim
    triples = []
    for i in range(m):
        for j in range(i + 1, m):
            w = Q.project(L.bracket(Q.basis[i], Q.basis[j]))
            for k, c in enumerate(w):
                if not c.is_zero():
                    triples.append((i, j, k, c))
    labels = [f"q{k}" for k in range(m)]
    return LieAlgebraData.from_triples(L.d, m, labels, triples), Q


def subalgebra_table(L: LieAlgebraData, U: Subspace) -> LieAlgebraData:
    """Structure constants of a subalgebra in its echelon basis."""
    m = U.dim
    triples = []
    for i in range(m):
        for j in range(i + 1, m):
            w = U.coords(L.bracket(U.rows[i], U.rows[j]))
            for k, c in enumerate(w):
                if not c.is_zero():
                    triples.append((i, j, k, c))
    return LieAlgebraData.from_triples(L.d, m, [f"s{k}" for k in range(m)], triples)


# -- Levi complement ------------------------------------------------------------


def levi_subalgebra(L: LieAlgebraData, report: StructureReport | None = None) -> Subspace:
    """A semisimple complement s with s ⊕ r = g and [s, s] ⊆ s.

    The complement of the radical spanned by its echelon non-pivot
    coordinates is corrected through the derived series of the radical;
    each abelian step solves the linear cocycle system, which Whitehead's
    lemma makes consistent.
    """
    if report is None:
        report = structure_report(L)
    s = _levi_rec(L, report.radical)
    if not _levi_valid(L, s, report.radical):
        raise LiftFailure("computed complement fails the Levi postconditions")
    return s


def _levi_valid(L: LieAlgebraData, s: Subspace, radical: Subspace) -> bool:
    if s.dim + radical.dim != L.dim:
        return False
    if s.intersect(radical).dim != 0:
        return False
    if not L.is_subalgebra(s):
        return False
    if s.dim == 0:
        return True
    sub = subalgebra_table(L, s)
    return mat_rank(sub.killing_matrix()) == s.dim


def _levi_rec(L: LieAlgebraData, radical: Subspace) -> Subspace:
    d = L.d
    n = L.dim
    if radical.dim == 0:
        return Subspace.full(d, n)
    if radical.dim == n:
        return Subspace.zero(d, n)
    r_derived = L.bracket_span(radical, radical)
    if r_derived.dim == 0:
        return _levi_abelian_step(L, radical)
    # quotient by r' has abelian radical; lift its complement, then recurse
    # inside the preimage, whose radical is r'.
    Lq, Q = quotient_algebra(L, r_derived)
    rad_q = Subspace.from_vectors(d, Lq.dim, [Q.project(b) for b in radical.rows])
    s_q = _levi_rec(Lq, rad_q)
    pre_vecs = [Q.lift(row) for row in s_q.rows]
    h = Subspace.from_vectors(d, n, pre_vecs + list(r_derived.rows))
    Lh = subalgebra_table(L, h)
    rad_h = Subspace.from_vectors(d, h.dim, [h.coords(b) for b in r_derived.rows])
    s_h = _levi_rec(Lh, rad_h)
    return Subspace.from_vectors(d, n, [h.lift(row) for row in s_h.rows])


def _levi_abelian_step(L: LieAlgebraData, radical: Subspace) -> Subspace:
    """Correct a vector-space complement of an abelian radical to a subalgebra."""
    d = L.d
    n = L.dim
    zero, one = FieldElement(d, 0), FieldElement(d, 1)
    comp_cols = [c for c in range(n) if c not in radical.pivots]
    m = len(comp_cols)
    xs = []
    for c in comp_cols:
        v = [zero] * n
        v[c] = one
        xs.append(tuple(v))
    full = Subspace.full(d, n)
    Q = Quotient(full, radical)
    # quotient constants in the basis projected from xs
    proj = [Q.project(x) for x in xs]
    # proj should be a basis of the quotient; build change so that
    # quotient constants come out in the xs order
    pm = [[proj[j][i] for j in range(m)] for i in range(m)]
    from .linalg import mat_inverse
    pm_inv = mat_inverse(pm)

    def qconst(i: int, j: int) -> Vec:
        w = Q.project(L.bracket(xs[i], xs[j]))
        return mat_vec(pm_inv, w)

    k = radical.dim
    ads = [_restricted_ad(L, radical, x) for x in xs]
    # unknowns: a_0..a_{m-1} in r-coordinates (m*k scalars)
    nvars = m * k
    rows: list[list[FieldElement]] = []
    rhs: list[FieldElement] = []
    for i in range(m):
        for j in range(i + 1, m):
            cs = qconst(i, j)
            bracket_ij = L.bracket(xs[i], xs[j])
            mu = list(zero_vec(d, n))
            for t in range(m):
                mu = [x + cs[t] * y for x, y in zip(mu, xs[t])]
            rho = tuple(x - y for x, y in zip(bracket_ij, mu))
            if not radical.contains(rho):
                raise LiftFailure("complement residual escapes the radical")
            rho_r = radical.coords(rho)
            # ad(x_i) a_j - ad(x_j) a_i - sum_t c_t a_t = -rho
            for row_idx in range(k):
                row = [zero] * nvars
                for col in range(k):
                    row[j * k + col] = row[j * k + col] + ads[i][row_idx][col]
                    row[i * k + col] = row[i * k + col] - ads[j][row_idx][col]
                for t in range(m):
                    row[t * k + row_idx] = row[t * k + row_idx] - cs[t]
                rows.append(row)
                rhs.append(-rho_r[row_idx])
    if rows:
        sol = solve(rows, rhs, d)
        if sol is None:
            raise LiftFailure("cocycle correction system is inconsistent")
    else:
        sol = tuple()
    out = []
    for i in range(m):
        a = radical.lift(sol[i * k:(i + 1) * k]) if k else zero_vec(d, n)
        out.append(tuple(x + y for x, y in zip(xs[i], a)))
    return Subspace.from_vectors(d, n, out)


# -- simple ideal decomposition -------------------------------------------------


@dataclass(frozen=True)
class SimpleIdeal:
    subspace: Subspace
    dim: int


def _centroid_basis(T: LieAlgebraData) -> list[Mat]:
    """Basis of {X : X ad(e_i) = ad(e_i) X for all i} as matrices."""
    m = T.dim
    d = T.d
    rows: list[list[FieldElement]] = []
    zero = FieldElement(d, 0)
    for g in range(m):
        A = T.ad_basis(g)
        # X A - A X = 0: one linear row per (i, j) entry, unknowns X flattened
        for i in range(m):
            for j in range(m):
                row = [zero] * (m * m)
                for k in range(m):
                    row[i * m + k] = row[i * m + k] + A[k][j]
                    row[k * m + j] = row[k * m + j] - A[i][k]
                rows.append(row)
    basis = kernel_basis(rows, d, m * m)
    return [[list(v[i * m:(i + 1) * m]) for i in range(m)] for v in basis]


def simple_ideal_decomposition(L: LieAlgebraData, s: Subspace) -> tuple[list[SimpleIdeal], bool]:
    """Split a semisimple subalgebra into simple ideals.

    Components are separated by eigenspaces of centroid elements; a
    component whose centroid is one-dimensional is absolutely simple, so
    complex rank-one factors are exactly the components of dimension 3.
    """
    if s.dim == 0:
        return [], False
    table = subalgebra_table(L, s)
    if mat_rank(table.killing_matrix()) != s.dim:
        raise NotSemisimple("Killing form is degenerate on the given subalgebra")

    ideals: list[SimpleIdeal] = []
    work: list[Subspace] = [s]
    while work:
        U = work.pop()
        T = subalgebra_table(L, U)
        cent = _centroid_basis(T)
        if len(cent) == 1:
            ideals.append(SimpleIdeal(subspace=U, dim=U.dim))
            continue
        split = _centroid_split(T, cent)
        if split is None:
            raise ScalarFieldTooSmall(
                "cannot separate commuting factors over this field; "
                "present the algebra in a basis aligned with its ideals")
        for part_coords in split:
            vecs = [U.lift(c) for c in part_coords.rows]
            work.append(Subspace.from_vectors(L.d, L.dim, vecs))
    ideals.sort(key=lambda x: (x.dim, x.subspace.pivots))
    has_rank_one = any(x.dim == 3 for x in ideals)
    return ideals, has_rank_one


def _centroid_split(T: LieAlgebraData, cent: list[Mat]) -> list[Subspace] | None:
    d = T.d
    m = T.dim
    candidates = list(cent)
    for i in range(len(cent)):
        for j in range(i + 1, len(cent)):
            candidates.append([[x + y for x, y in zip(ra, rb)]
                               for ra, rb in zip(cent[i], cent[j])])
    for c in candidates:
        mp, _ = matrix_min_poly(c)
        if mp.degree() < 2:
            continue
        roots = candidate_roots_in_field(mp)
        if len(roots) < 2:
            continue
        spaces = []
        total = 0
        for lam in roots:
            shifted = mat_sub(c, [[lam if a == b else FieldElement(d, 0)
                                   for b in range(m)] for a in range(m)])
            ker = Subspace.from_vectors(d, m, kernel_basis(shifted, d, m))
            if ker.dim:
                spaces.append(ker)
                total += ker.dim
        if total == m and len(spaces) >= 2:
            return spaces
    return None


# -- characteristic ideals -------------------------------------------------------


@dataclass(frozen=True)
class CharacteristicIdeals:
    radical: Subspace
    nilradical: Subspace
    nilradical_derived: Subspace
    levi_bracket_radical: Subspace
    lower: Subspace          # a = [s, r] + n'
    upper: Subspace          # b = r' + a
    quotient: Quotient       # b / a with canonical basis


def characteristic_ideals(L: LieAlgebraData, report: StructureReport,
                          levi: Subspace) -> CharacteristicIdeals:
    r = report.radical
    n = report.nilradical
    nprime = L.bracket_span(n, n)
    sr = L.bracket_span(levi, r)
    lower = sr.sum_with(nprime)
    rprime = L.bracket_span(r, r)
    upper = rprime.sum_with(lower)
    for name, space in (("radical", r), ("nilradical", n),
                        ("nilradical_derived", nprime),
                        ("levi_bracket_radical", sr),
                        ("lower", lower), ("upper", upper)):
        if not L.is_ideal(space):
            raise LiftFailure(f"characteristic space {name} failed the ideal check")
    return CharacteristicIdeals(
        radical=r,
        nilradical=n,
        nilradical_derived=nprime,
        levi_bracket_radical=sr,
        lower=lower,
        upper=upper,
        quotient=Quotient(upper, lower),
    )


def algebra_from_matrix_basis(d: int, mats: list[Mat],
                              labels: list[str] | None = None) -> LieAlgebraData:
    """Structure constants of the span of independent matrices under the
    commutator bracket; raises if the span does not close."""
    n = len(mats)
    flats = [[x for row in M for x in row] for M in mats]
    if mat_rank([row[:] for row in flats]) != n:
        raise ValueError("matrix basis is linearly dependent")
    width = len(flats[0])
    cols = [[flats[j][i] for j in range(n)] for i in range(width)]
    triples = []
    for i in range(n):
        for j in range(i + 1, n):
            comm = mat_sub(mat_mul(mats[i], mats[j]), mat_mul(mats[j], mats[i]))
            flat = [x for row in comm for x in row]
            sol = solve(cols, flat, d)
            if sol is None:
                raise ValueError("matrices do not close under the commutator")
            for k, c in enumerate(sol):
                if not c.is_zero():
                    triples.append((i, j, k, c))
    return LieAlgebraData.from_triples(d, n, labels, triples)


# -- basis change -----------------------------------------------------------------


def conjugate_structure(L: LieAlgebraData, T: Mat) -> LieAlgebraData:
    """Structure constants in the new basis whose j-th vector is column j of T."""
    from .linalg import mat_inverse
    Tinv = mat_inverse(T)
    n = L.dim
    cols = [tuple(row[j] for row in T) for j in range(n)]
    triples = []
    for i in range(n):
        for j in range(i + 1, n):
            w = mat_vec(Tinv, L.bracket(cols[i], cols[j]))
            for k, c in enumerate(w):
                if not c.is_zero():
                    triples.append((i, j, k, c))
    return LieAlgebraData.from_triples(L.d, n, list(L.basis), triples)
