"""Headline invariants: the totally real semisimple core of the lattice
action on the characteristic quotient, the first structure-sheaf cohomology
dimension, Betti numbers, the rigidity verdict, and special-case
cross-checks.

The cohomology dimension is
    h1 = dim(g/g') + b1(semisimple quotient) + dim(core),
exact when the ambient group is linear-algebraic and an upper bound
otherwise.  The middle term is forced to zero when the Levi part has no
rank-one simple factor or the algebra is solvable.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .closure import AlbaneseResult, albanese_dimension, collect_images
from .errors import (
    InputFormatError,
    MissingAbelianizationImages,
    MissingB1Input,
    NoB1Data,
    ScalarFieldTooSmall,
)
from .field import FieldElement
from .lattice import InducedAction, LatticeData, induced_quotient_action, validate_lattice
from .liealg import (
    CharacteristicIdeals,
    LieAlgebraData,
    StructureReport,
    characteristic_ideals,
    levi_subalgebra,
    simple_ideal_decomposition,
    structure_report,
)
from .linalg import (
    Mat,
    Subspace,
    identity,
    mat_eq,
    mat_inverse,
    mat_mul,
    matrix_min_poly,
    real_eigenspace_sum,
)
from .poly import sturm_real_root_count
from .zmod import abelianization_rank

DEFAULT_DEPTH = 4

CERT_COMMUTING = "CERTIFIED_COMMUTING"
CERT_TRIVIAL = "TRIVIAL"


def cert_checked(depth: int) -> str:
    return f"CHECKED_TO_DEPTH({depth})"


@dataclass(frozen=True)
class RealCoreResult:
    """The largest invariant subspace on which every checked group element
    acts semisimply with only real eigenvalues."""

    subspace: Subspace
    certification: str
    depth: int | None

    @property
    def dim(self) -> int:
        return self.subspace.dim


def _is_semisimple_real(M: Mat) -> bool:
    """Squarefree minimal polynomial with every root real (Sturm-certified)."""
    mp, semisimple = matrix_min_poly(M)
    if not semisimple:
        return False
    if not mp.is_real_coeffs():
        return False
    return sturm_real_root_count(mp) == mp.degree()


def _invariant_core(start: Subspace, mats: list[Mat]) -> Subspace:
    """Greatest subspace of start mapped onto itself by every matrix."""
    core = start
    while True:
        nxt = core
        for M in mats:
            nxt = nxt.intersect(nxt.image_under(M))
        if nxt == core:
            return core
        core = nxt


def semisimple_real_core(action: InducedAction, depth: int = DEFAULT_DEPTH,
                         certificates: dict[str, list[FieldElement]] | None = None
                         ) -> RealCoreResult:
    """Greatest fixed point of the real-eigenspace/invariance iteration.

    Certification is three-tier: commuting semisimple-real restrictions
    certify the condition for the whole group; otherwise all words up to
    the given length are verified, and any failing word is folded into the
    iteration so the returned subspace always passes its own checks.
    """
    if depth < 1:
        raise ValueError("depth must be a positive integer")
    m = action.dim
    d = action.d
    if m == 0:
        return RealCoreResult(Subspace.zero(d, 0), CERT_TRIVIAL, None)
    gens = action.matrix_list()
    invs = [mat_inverse(g) for g in gens]
    certs = certificates or {}
    extra: list[Mat] = []

    while True:
        target = Subspace.full(d, m)
        for g, name in zip(gens, action.names):
            supplied = certs.get(name)
            try:
                e = real_eigenspace_sum(g, supplied)
            except ScalarFieldTooSmall as exc:
                raise ScalarFieldTooSmall(
                    f"generator {name!r}: {exc}") from None
            target = target.intersect(e)
        for w in extra:
            target = target.intersect(real_eigenspace_sum(w))
        core = _invariant_core(target, gens + invs)
        if core.dim == 0:
            return RealCoreResult(core, CERT_TRIVIAL, None)
        restricted = [core.restriction(g) for g in gens]
        if all(_is_semisimple_real(r) for r in restricted) and \
                all(mat_eq(mat_mul(a, b), mat_mul(b, a))
                    for i, a in enumerate(restricted)
                    for b in restricted[i + 1:]):
            return RealCoreResult(core, CERT_COMMUTING, None)
        bad = _find_bad_word(gens, invs, core, depth)
        if bad is None:
            return RealCoreResult(core, cert_checked(depth), depth)
        extra.append(bad)


def _find_bad_word(gens: list[Mat], invs: list[Mat], core: Subspace,
                   depth: int) -> Mat | None:
    """A product of generators whose core restriction is not semisimple-real.

    Breadth-first over distinct restricted matrices up to word length
    `depth`; returns the word's full matrix for refining the iteration.
    """
    alphabet = [(core.restriction(M), M) for M in gens + invs]
    n = core.dim
    d = core.d
    eye_full = identity(d, core.n)
    eye_restricted = identity(d, n)
    frontier: list[tuple[Mat, Mat]] = [(eye_restricted, eye_full)]
    seen = {_mat_key(eye_restricted)}
    for length in range(1, depth + 1):
        nxt: list[tuple[Mat, Mat]] = []
        for rest, full in frontier:
            for arest, afull in alphabet:
                new_rest = mat_mul(rest, arest)
                key = _mat_key(new_rest)
                if key in seen:
                    continue
                seen.add(key)
                new_full = mat_mul(full, afull)
                if length >= 2 and not _is_semisimple_real(new_rest):
                    return new_full
                nxt.append((new_rest, new_full))
        frontier = nxt
    return None


def _mat_key(M: Mat) -> tuple:
    return tuple(tuple(row) for row in M)


# -- the dimension formula ------------------------------------------------------


@dataclass(frozen=True)
class SemisimpleB1:
    value: int
    source: str  # "AUTO_ZERO" | "USER"
    ignored_user_value: bool = False


def semisimple_quotient_b1(structure: StructureReport, has_rank_one: bool,
                           lat: LatticeData) -> SemisimpleB1:
    """First Betti number of the lattice's image in the semisimple quotient.

    Zero is forced when the algebra is solvable (trivial quotient) or no
    rank-one factor exists (the commutator subgroup then has finite index).
    Otherwise the value is a user assertion.
    """
    if structure.solvable or not has_rank_one:
        ignored = lat.b1_semisimple_quotient not in (None, 0)
        return SemisimpleB1(0, "AUTO_ZERO", ignored)
    if lat.b1_semisimple_quotient is None:
        raise MissingB1Input(
            "a rank-one simple factor is present: supply b1_semisimple_quotient")
    if lat.b1_semisimple_quotient < 0:
        raise MissingB1Input("b1_semisimple_quotient must be non-negative")
    return SemisimpleB1(lat.b1_semisimple_quotient, "USER")


def manifold_b1(lat: LatticeData) -> tuple[int, str]:
    """First Betti number of the quotient manifold.

    Free rank of the abelianised presentation when available, otherwise the
    user override.
    """
    if lat.presentation is not None:
        free_rank, _ = abelianization_rank(
            lat.presentation.generator_count, lat.presentation.relators)
        return free_rank, "PRESENTATION"
    if lat.b1_manifold_override is not None:
        if lat.b1_manifold_override < 0:
            raise NoB1Data("b1_manifold_override must be non-negative")
        return lat.b1_manifold_override, "USER"
    raise NoB1Data("supply a presentation or b1_manifold_override")


@dataclass(frozen=True)
class Crosscheck:
    name: str
    outcome: str  # "PASS" | "FAIL" | "SKIPPED"


@dataclass(frozen=True)
class InvariantReport:
    dim_g: int
    dim_g_mod_gprime: int
    dim_radical: int
    dim_nilradical: int
    has_rank_one_factor: bool
    b1_semisimple_quotient: SemisimpleB1
    dim_real_core: int
    real_core_certification: str
    h1: int
    h1_exactness: str  # "EXACT" | "UPPER_BOUND"
    h1_tangent: int
    b1_manifold: int
    b1_manifold_source: str
    rigid: bool | str  # True | False | "INCONSISTENT"
    deformable: bool
    albanese: AlbaneseResult | None
    crosschecks: tuple[Crosscheck, ...]
    assumptions: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "dim_g": self.dim_g,
            "dim_g_mod_gprime": self.dim_g_mod_gprime,
            "dim_radical": self.dim_radical,
            "dim_nilradical": self.dim_nilradical,
            "has_rank_one_factor": self.has_rank_one_factor,
            "b1_semisimple_quotient": {
                "value": self.b1_semisimple_quotient.value,
                "source": self.b1_semisimple_quotient.source,
            },
            "dim_real_core": self.dim_real_core,
            "real_core_certification": self.real_core_certification,
            "h1": {"value": self.h1, "exactness": self.h1_exactness},
            "h1_tangent": self.h1_tangent,
            "b1_manifold": {"value": self.b1_manifold,
                            "source": self.b1_manifold_source},
            "rigid": self.rigid,
            "deformable": self.deformable,
            "albanese": None if self.albanese is None else {
                "albanese_dim": self.albanese.albanese_dim,
                "lattice_rank": self.albanese.lattice_rank,
                "flags": list(self.albanese.flags),
            },
            "crosschecks": [{"name": c.name, "outcome": c.outcome}
                            for c in self.crosschecks],
            "assumptions": list(self.assumptions),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        d = self.to_dict()
        lines.append(f"dim g                     : {d['dim_g']}")
        lines.append(f"dim g/g'                  : {d['dim_g_mod_gprime']}")
        lines.append(f"dim radical               : {d['dim_radical']}")
        lines.append(f"dim nilradical            : {d['dim_nilradical']}")
        lines.append(f"rank-one factor           : {d['has_rank_one_factor']}")
        lines.append(f"b1(semisimple quotient)   : {self.b1_semisimple_quotient.value}"
                     f" [{self.b1_semisimple_quotient.source}]")
        lines.append(f"dim real core             : {self.dim_real_core}"
                     f" [{self.real_core_certification}]")
        lines.append(f"h1 (structure sheaf)      : {self.h1} [{self.h1_exactness}]")
        lines.append(f"h1 (tangent sheaf)        : {self.h1_tangent}")
        lines.append(f"b1 (manifold)             : {self.b1_manifold}"
                     f" [{self.b1_manifold_source}]")
        lines.append(f"rigid                     : {self.rigid}")
        lines.append(f"deformable                : {self.deformable}")
        if self.albanese is not None:
            flags = ",".join(self.albanese.flags) or "-"
            lines.append(f"albanese dim              : {self.albanese.albanese_dim}"
                         f" (lattice rank {self.albanese.lattice_rank}, flags {flags})")
        for c in self.crosschecks:
            lines.append(f"crosscheck {c.name:<23}: {c.outcome}")
        for a in self.assumptions:
            lines.append(f"assumption: {a}")
        return "\n".join(lines) + "\n"


@dataclass
class PipelineResult:
    """Everything the analysis computed, report plus intermediates."""

    report: InvariantReport
    structure: StructureReport
    levi: Subspace
    ideals: CharacteristicIdeals
    action: InducedAction
    core: RealCoreResult


def analyze(L: LieAlgebraData, lat: LatticeData, depth: int = DEFAULT_DEPTH,
            require_b1: bool = True) -> PipelineResult:
    """Run the full pipeline: validate, structure, complement, ideals,
    induced action, real core, dimension formula, Betti numbers, verdicts,
    cross-checks, and (when images are present) the Albanese dimension."""
    L.validate()
    validate_lattice(L, lat)
    structure = structure_report(L)
    levi = levi_subalgebra(L, structure)
    if levi.dim:
        _, has_rank_one = simple_ideal_decomposition(L, levi)
    else:
        has_rank_one = False
    ideals = characteristic_ideals(L, structure, levi)
    action = induced_quotient_action(L, ideals.lower, ideals.upper, lat)
    certs = {g.name: list(g.eigenvalues) for g in lat.generators
             if g.eigenvalues is not None}
    core = semisimple_real_core(action, depth, certs)

    b1_ss = semisimple_quotient_b1(structure, has_rank_one, lat)
    gprime = structure.derived_series[1] if len(structure.derived_series) > 1 \
        else Subspace.full(L.d, L.dim)
    dim_g_mod_gprime = L.dim - gprime.dim
    h1 = dim_g_mod_gprime + b1_ss.value + core.dim
    exactness = "EXACT" if lat.linear_algebraic else "UPPER_BOUND"

    assumptions = [
        "LATTICE_HYPOTHESES_UNVERIFIED: discreteness and cocompactness of "
        "the generated group are user assertions",
    ]
    imgs, missing_imgs = collect_images(lat.generators)
    if imgs:
        assumptions.append(
            "ABELIANIZATION_IMAGES_UNVERIFIED: images are independent input, "
            "not derived from the automorphism matrices")
    if lat.presentation is not None and \
            lat.presentation.generator_count != len(lat.generators):
        assumptions.append(
            "PRESENTATION_INDEPENDENT: relator data is not tied to the "
            "automorphism generator list")
    if b1_ss.source == "USER":
        assumptions.append(
            "SEMISIMPLE_B1_USER_ASSERTED: the quotient Betti number is not "
            "derivable from the supplied data")
    if b1_ss.ignored_user_value:
        assumptions.append(
            "B1_SEMISIMPLE_INPUT_IGNORED: structure forces the quotient "
            "Betti number to zero; the supplied value was discarded")

    b1_val: int | None = None
    b1_src = ""
    if require_b1:
        b1_val, b1_src = manifold_b1(lat)
    else:
        try:
            b1_val, b1_src = manifold_b1(lat)
        except NoB1Data:
            pass

    rigid: bool | str
    deformable = False
    if b1_val is None:
        rigid = (h1 == 0)
        deformable = not rigid
        b1_report, b1_src = -1, "UNAVAILABLE"
    else:
        b1_report = b1_val
        if exactness == "EXACT":
            consistent = (h1 == 0) == (b1_val == 0)
        else:
            consistent = not (h1 == 0 and b1_val != 0)
        if not consistent:
            rigid = "INCONSISTENT"
        else:
            rigid = (b1_val == 0)
            deformable = b1_val > 0

    h1_tangent = L.dim * h1

    crosschecks = []
    if structure.nilpotent:
        outcome = "PASS" if h1 == dim_g_mod_gprime else "FAIL"
    else:
        outcome = "SKIPPED"
    crosschecks.append(Crosscheck("nilpotent_reduction", outcome))
    if structure.radical == structure.nilradical and not has_rank_one \
            and not structure.semisimple:
        outcome = "PASS" if h1 == dim_g_mod_gprime else "FAIL"
    else:
        outcome = "SKIPPED"
    crosschecks.append(Crosscheck("nilpotent_radical_reduction", outcome))
    if structure.semisimple and b1_val is not None:
        outcome = "PASS" if h1 == b1_val else "FAIL"
    else:
        outcome = "SKIPPED"
    crosschecks.append(Crosscheck("semisimple_betti_match", outcome))

    albanese: AlbaneseResult | None = None
    if imgs and not missing_imgs:
        expected_len = dim_g_mod_gprime
        for g, img in zip(lat.generators, imgs):
            if len(img) != expected_len:
                raise InputFormatError(
                    f"abelianization image of {g.name!r} has length "
                    f"{len(img)}, expected dim(g/g') = {expected_len}")
        albanese = albanese_dimension(imgs, dim_g_mod_gprime, L.d)
        assumptions.append(
            "IMAGE_COMPLETENESS_UNVERIFIED: the albanese computation sees "
            "only the supplied generator images")
    elif missing_imgs and imgs:
        raise MissingAbelianizationImages(missing_imgs)

    report = InvariantReport(
        dim_g=L.dim,
        dim_g_mod_gprime=dim_g_mod_gprime,
        dim_radical=structure.radical.dim,
        dim_nilradical=structure.nilradical.dim,
        has_rank_one_factor=has_rank_one,
        b1_semisimple_quotient=b1_ss,
        dim_real_core=core.dim,
        real_core_certification=core.certification,
        h1=h1,
        h1_exactness=exactness,
        h1_tangent=h1_tangent,
        b1_manifold=b1_report,
        b1_manifold_source=b1_src,
        rigid=rigid,
        deformable=deformable,
        albanese=albanese,
        crosschecks=tuple(crosschecks),
        assumptions=tuple(assumptions),
    )
    return PipelineResult(report=report, structure=structure, levi=levi,
                          ideals=ideals, action=action, core=core)


def h1_dimension(L: LieAlgebraData, lat: LatticeData,
                 depth: int = DEFAULT_DEPTH) -> tuple[int, str]:
    """The dimension formula value and its exactness tag."""
    result = analyze(L, lat, depth, require_b1=False)
    return result.report.h1, result.report.h1_exactness
