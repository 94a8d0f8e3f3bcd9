"""Lattice data: finitely many generators acting by bracket automorphisms,
plus optional presentation and Betti inputs, and the action they induce on
characteristic quotients.

Whether the generated group really is a discrete cocompact lattice is an
analytic hypothesis this package cannot check; reports carry it as an
assumption.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAutomorphism, NotInvariant, Singular
from .field import FieldElement
from .liealg import LieAlgebraData
from .linalg import (
    Mat,
    Quotient,
    Subspace,
    identity,
    mat_inverse,
    mat_mul,
    mat_vec,
)


@dataclass
class GeneratorData:
    name: str
    ad: Mat
    abelianization_image: tuple[FieldElement, ...] | None = None
    eigenvalues: tuple[FieldElement, ...] | None = None


@dataclass
class Presentation:
    generator_count: int
    relators: list[list[int]]


@dataclass
class LatticeData:
    generators: list[GeneratorData]
    presentation: Presentation | None = None
    b1_semisimple_quotient: int | None = None
    linear_algebraic: bool = False
    b1_manifold_override: int | None = None


@dataclass(frozen=True)
class InducedAction:
    """Invertible matrices induced on a quotient, one per generator."""

    matrices: tuple[tuple[tuple[FieldElement, ...], ...], ...]
    names: tuple[str, ...]
    quotient: Quotient
    d: int

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def matrix_list(self) -> list[Mat]:
        return [[list(row) for row in m] for m in self.matrices]


def validate_automorphism(M: Mat, L: LieAlgebraData, name: str = "?") -> None:
    """Check invertibility and multiplicativity on all basis brackets."""
    n = L.dim
    if len(M) != n or any(len(row) != n for row in M):
        raise NotAutomorphism(name, -1, -1, "wrong shape")
    try:
        mat_inverse(M)
    except Singular:
        raise Singular(f"generator {name!r}: matrix is singular") from None
    eye = [tuple(row) for row in identity(L.d, n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = mat_vec(M, L.bracket_basis(i, j))
            rhs = L.bracket(mat_vec(M, eye[i]), mat_vec(M, eye[j]))
            res = tuple(x - y for x, y in zip(lhs, rhs))
            if any(not x.is_zero() for x in res):
                raise NotAutomorphism(name, i, j, [str(x) for x in res])


def validate_lattice(L: LieAlgebraData, lat: LatticeData) -> None:
    if not lat.generators:
        raise NotAutomorphism("<none>", -1, -1, "lattice needs at least one generator")
    for g in lat.generators:
        validate_automorphism(g.ad, L, g.name)


def induced_quotient_action(L: LieAlgebraData, sub: Subspace, sup: Subspace,
                            lat: LatticeData) -> InducedAction:
    """The action induced on sup/sub by each generator's automorphism.

    Every generator must preserve both ideals; failure contradicts
    automorphism validity and is reported as inconsistent input.
    """
    Q = Quotient(sup, sub)
    mats = []
    names = []
    for g in lat.generators:
        for space, tag in ((sub, "lower"), (sup, "upper")):
            if space.image_under(g.ad) != space:
                raise NotInvariant(g.name, tag)
        m = Q.induced_matrix(g.ad)
        if Q.dim:
            try:
                mat_inverse(m)
            except Singular:
                raise NotInvariant(g.name, "quotient (induced matrix singular)") from None
        mats.append(tuple(tuple(row) for row in m))
        names.append(g.name)
    return InducedAction(matrices=tuple(mats), names=tuple(names), quotient=Q, d=L.d)


def check_presentation_relations(lat: LatticeData) -> bool | None:
    """Verify relator words hold on the adjoint matrices.

    Only meaningful when the presentation's generator count matches the
    generator list; returns None when it does not (independent data).
    """
    if lat.presentation is None:
        return None
    if lat.presentation.generator_count != len(lat.generators):
        return None
    if not lat.generators:
        return None
    n = len(lat.generators[0].ad)
    d = lat.generators[0].ad[0][0].d
    eye = identity(d, n)
    mats = [g.ad for g in lat.generators]
    invs = [mat_inverse(m) for m in mats]
    for word in lat.presentation.relators:
        acc = eye
        for sym in word:
            m = mats[sym - 1] if sym > 0 else invs[-sym - 1]
            acc = mat_mul(acc, m)
        if any(any(not (x - y).is_zero() for x, y in zip(ra, rb))
               for ra, rb in zip(acc, eye)):
            return False
    return True
