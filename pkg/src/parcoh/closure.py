"""Topological closures of finitely generated subgroups of C^k with field
coordinates, and the Albanese dimension they determine.

The closure of the integer span of vectors v_1..v_m in R^N (N = 2k, split
into real and imaginary coordinates) is computed by the dual-character
method: the closed dual D = {w : w·v_i in Z for all i} decomposes as
ker(A) plus a lattice of particular solutions over the integer points of
the column space of A, and the closure is the double annihilator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import MissingAbelianizationImages
from .field import FieldElement
from .linalg import Quotient, Subspace, Vec, identity, kernel_basis, solve
from .zmod import hermite_normal_form, integer_kernel_basis


@dataclass(frozen=True)
class ClosedSubgroupDescription:
    """Closure of a finitely generated subgroup of R^{2k}.

    identity_component: real subspace (field-rational echelon basis in the
    split coordinates); discrete_rank: rank of the discrete quotient part;
    complex_core: smallest complex subspace of C^k containing the identity
    component; discrete_generators: one lattice basis of the discrete part.
    """

    identity_component: Subspace
    discrete_rank: int
    complex_core: Subspace
    discrete_generators: tuple[Vec, ...]


def _realify(vec: Vec) -> Vec:
    """Split a complex vector over the field into (Re…, Im…) real coordinates."""
    re = [z.real_part() for z in vec]
    im = [z.imag_part() for z in vec]
    return tuple(re + im)


def _complexify(vec: Vec, d: int, k: int) -> Vec:
    i = FieldElement(d, 0, 0, 1)
    return tuple(vec[j] + i * vec[k + j] for j in range(k))


def _rational_rows(functional: Vec) -> list[list[Fraction]]:
    """Split one field-coefficient equation over Q-coordinates of integers.

    For integer unknowns x, (a + b√d)·x = 0 forces a·x = 0 and b·x = 0
    separately (d >= 2); for degenerate d the √d part is already folded.
    """
    row_a = [z.a for z in functional]
    row_b = [z.b for z in functional]
    out = []
    if any(row_a):
        out.append(list(row_a))
    if any(row_b):
        out.append(list(row_b))
    return out


def _integer_points_basis(space_rows: list[Vec], ncols: int, d: int) -> list[list[int]]:
    """Hermite-canonical basis of (span of rows) ∩ Z^ncols."""
    if space_rows:
        ann = kernel_basis([list(r) for r in space_rows], d, ncols)
    else:
        ann = [tuple(r) for r in identity(d, ncols)]
    rat_rows: list[list[Fraction]] = []
    for f in ann:
        rat_rows.extend(_rational_rows(f))
    int_rows: list[list[int]] = []
    for row in rat_rows:
        denom = lcm(*(f.denominator for f in row)) if row else 1
        int_rows.append([int(f * denom) for f in row])
    basis = integer_kernel_basis(int_rows, ncols)
    return hermite_normal_form(basis)


def subgroup_closure(vectors: list[Vec], k: int, d: int) -> ClosedSubgroupDescription:
    """Closure in R^{2k} of the integer span of complex field vectors."""
    N = 2 * k
    real_vecs = [_realify(v) for v in vectors if any(x for x in v)] if k else []
    if not real_vecs or N == 0:
        return ClosedSubgroupDescription(
            identity_component=Subspace.zero(d, N),
            discrete_rank=0,
            complex_core=Subspace.zero(d, k),
            discrete_generators=(),
        )
    m = len(real_vecs)
    A = [list(r) for r in real_vecs]

    # Integer points of the column space of A: a lattice T; every element of
    # the dual D maps to T under w -> A w.
    col_space = [tuple(col) for col in zip(*A)]
    t_basis = _integer_points_basis(col_space, m, d)

    # Particular dual solutions w_s with A w_s = t_s.
    w_rows: list[Vec] = []
    for t in t_basis:
        w = solve(A, [FieldElement(d, x) for x in t], d)
        assert w is not None, "integer point escaped the column space"
        w_rows.append(w)

    # The closure lives inside the real span of the inputs.
    v0 = Subspace.from_vectors(d, N, real_vecs)

    # Identity component: the part of v0 killed by every particular dual.
    if w_rows:
        comp = v0.intersect(
            Subspace.from_vectors(d, N, kernel_basis([list(w) for w in w_rows], d, N)))
    else:
        comp = v0
    assert comp.dim == v0.dim - len(w_rows), "duality rank mismatch"

    # Discrete generators: x_s in v0 with w_t · x_s = delta_ts.
    ann_v0 = v0.annihilator_rows()
    gens: list[Vec] = []
    for s in range(len(w_rows)):
        rows = [list(w) for w in w_rows] + [list(a) for a in ann_v0]
        rhs = [FieldElement(d, 1 if t == s else 0) for t in range(len(w_rows))]
        rhs += [FieldElement(d, 0)] * len(ann_v0)
        x = solve(rows, rhs, d)
        assert x is not None, "dual functionals not independent on the span"
        gens.append(x)

    core = Subspace.from_vectors(d, k, [_complexify(b, d, k) for b in comp.rows]) \
        if k else Subspace.zero(d, 0)
    return ClosedSubgroupDescription(
        identity_component=comp,
        discrete_rank=len(w_rows),
        complex_core=core,
        discrete_generators=tuple(gens),
    )


@dataclass(frozen=True)
class AlbaneseResult:
    albanese_dim: int
    lattice_rank: int
    flags: tuple[str, ...]


def albanese_dimension(images: list[Vec], k: int, d: int) -> AlbaneseResult:
    """Complex dimension of the largest torus quotient the images allow.

    Iteratively closes the integer span, divides out the complex span of
    the identity component, and stops when the image closure is discrete.
    A final discrete rank below twice the complex dimension cannot come
    from a genuine lattice and is flagged.
    """
    cur_images = [tuple(v) for v in images]
    cur_k = k
    for _ in range(k + 1):
        desc = subgroup_closure(cur_images, cur_k, d)
        if desc.identity_component.dim == 0:
            flags = []
            if desc.discrete_rank < 2 * cur_k:
                flags.append("LATTICE_RANK_DEFICIENT")
            return AlbaneseResult(albanese_dim=cur_k,
                                  lattice_rank=desc.discrete_rank,
                                  flags=tuple(flags))
        core = desc.complex_core
        full = Subspace.full(d, cur_k)
        Q = Quotient(full, core)
        cur_images = [Q.project(v) for v in cur_images]
        cur_k = Q.dim
    raise AssertionError("closure iteration failed to terminate")


def collect_images(generators) -> tuple[list[Vec], list[str]]:
    """Images present on the generator list, plus names of those missing."""
    imgs: list[Vec] = []
    missing: list[str] = []
    for g in generators:
        if g.abelianization_image is None:
            missing.append(g.name)
        else:
            imgs.append(tuple(g.abelianization_image))
    return imgs, missing


def require_images(generators) -> list[Vec]:
    imgs, missing = collect_images(generators)
    if missing:
        raise MissingAbelianizationImages(missing)
    return imgs
