"""Constructors for complete analysis inputs: reference manifolds and the
unit-action solvmanifold family.

`unit_solvmanifold(p)` builds the three-dimensional solvable quotient whose
lattice is the order Z[√p, i] extended by a norm-one fundamental unit; with
`with_i=True` the unit i is added, giving a two-to-one covering pair whose
cohomology dimensions drop from 3 to 1.
"""
from __future__ import annotations

from math import isqrt

from .errors import BadParams, PerfectSquareInput
from .field import FieldDescriptor, FieldElement
from .inputs import AnalysisInput, AnalysisOptions
from .lattice import GeneratorData, LatticeData, Presentation
from .liealg import LieAlgebraData
from .linalg import identity

EXAMPLE_KINDS = ("unit_solvmanifold", "iwasawa", "torus", "sl2_times_c")


def pell_fundamental(p: int) -> tuple[int, int]:
    """Minimal positive (x, y) with x² - p·y² = 1, via continued fractions."""
    if p < 2 or isqrt(p) ** 2 == p:
        raise PerfectSquareInput(f"p must be a non-square integer >= 2, got {p}")
    a0 = isqrt(p)
    m, den, a = 0, 1, a0
    h_prev, h_cur = 1, a0
    k_prev, k_cur = 0, 1
    while h_cur * h_cur - p * k_cur * k_cur != 1:
        m = den * a - m
        den = (p - m * m) // den
        a = (a0 + m) // den
        h_prev, h_cur = h_cur, a * h_cur + h_prev
        k_prev, k_cur = k_cur, a * k_cur + k_prev
    return h_cur, k_cur


def _exp_word(gen_indices: list[int], exponents: list[int]) -> list[int]:
    word: list[int] = []
    for g, e in zip(gen_indices, exponents):
        word.extend([g] * e if e >= 0 else [-g] * (-e))
    return word


def _inverse_word(word: list[int]) -> list[int]:
    return [-s for s in reversed(word)]


def _commutator(a: int, b: int) -> list[int]:
    return [a, b, -a, -b]


def _conjugation_relator(u: int, t: int, image_word: list[int]) -> list[int]:
    # u t u^{-1} (image)^{-1}
    return [u, t, -u] + _inverse_word(image_word)


def unit_solvmanifold(p: int, with_i: bool) -> AnalysisInput:
    """Solvable G = C ⋉ C² with [t,x] = x, [t,y] = -y, lattice from the
    order Z[√p, i] and the fundamental norm-one unit (plus i if asked)."""
    x0, y0 = pell_fundamental(p)
    fd = FieldDescriptor(p)
    d = p
    alg = LieAlgebraData.from_triples(
        d, 3, ["t", "x", "y"], [(0, 1, 1, 1), (0, 2, 2, -1)])
    zero, one = FieldElement(d, 0), FieldElement(d, 1)
    alpha = FieldElement(d, x0, y0)
    alpha_conj = FieldElement(d, x0, -y0)
    i_unit = FieldElement(d, 0, 0, 1)

    def diag(u, v, w):
        return [[u, zero, zero], [zero, v, zero], [zero, zero, w]]

    def translation(omega: FieldElement):
        s1 = omega
        s2 = omega.conj_sqrt().conj_complex()
        return [[one, zero, zero], [-s1, one, zero], [s2, zero, one]]

    basis_omegas = [FieldElement(d, 1), FieldElement(d, 0, 1),
                    FieldElement(d, 0, 0, 1), FieldElement(d, 0, 0, 0, 1)]
    gens = [
        GeneratorData("unit", diag(one, alpha, alpha_conj),
                      abelianization_image=(one,)),
        GeneratorData("loop", identity(d, 3),
                      abelianization_image=(i_unit,)),
    ]
    for name, omega in zip(("t1", "tr", "ti", "tir"), basis_omegas):
        gens.append(GeneratorData(name, translation(omega),
                                  abelianization_image=(zero,)))
    if with_i:
        gens.append(GeneratorData("iunit", diag(one, i_unit, -i_unit),
                                  abelianization_image=(i_unit / 4,)))

    # presentation: unit=1, loop=2, translations=3..6, iunit=7
    t_idx = [3, 4, 5, 6]
    relators: list[list[int]] = []
    for a in range(4):
        for b in range(a + 1, 4):
            relators.append(_commutator(t_idx[a], t_idx[b]))
    central = [1] + t_idx + ([7] if with_i else [])
    for g in central:
        relators.append(_commutator(2, g))
    # multiplication by alpha on the order basis {1, √p, i, i√p}
    m_alpha = [[x0, p * y0, 0, 0],
               [y0, x0, 0, 0],
               [0, 0, x0, p * y0],
               [0, 0, y0, x0]]
    for j in range(4):
        col = [m_alpha[i][j] for i in range(4)]
        relators.append(_conjugation_relator(1, t_idx[j], _exp_word(t_idx, col)))
    if with_i:
        m_i = [[0, 0, -1, 0],
               [0, 0, 0, -1],
               [1, 0, 0, 0],
               [0, 1, 0, 0]]
        for j in range(4):
            col = [m_i[i][j] for i in range(4)]
            relators.append(_conjugation_relator(7, t_idx[j], _exp_word(t_idx, col)))
        relators.append([7, 7, 7, 7, -2])
        relators.append(_commutator(7, 1))
    pres = Presentation(generator_count=7 if with_i else 6, relators=relators)

    lat = LatticeData(generators=gens, presentation=pres,
                      b1_semisimple_quotient=None, linear_algebraic=True,
                      b1_manifold_override=None)
    return AnalysisInput(field=fd, algebra=alg, lattice=lat,
                         options=AnalysisOptions())


def iwasawa() -> AnalysisInput:
    """Nilpotent fixture: [x,y] = z with Gaussian translation generators."""
    fd = FieldDescriptor(1)
    d = 1
    alg = LieAlgebraData.from_triples(d, 3, ["x", "y", "z"], [(0, 1, 2, 1)])
    zero, one = FieldElement(d, 0), FieldElement(d, 1)
    iu = FieldElement(d, 0, 0, 1)

    def x_translation(omega):
        # Ad(exp(omega * x)): y -> y + omega z
        m = identity(d, 3)
        m[2][1] = omega
        return m

    def y_translation(omega):
        # Ad(exp(omega * y)): x -> x - omega z
        m = identity(d, 3)
        m[2][0] = -omega
        return m

    gens = [
        GeneratorData("ax", x_translation(one), abelianization_image=(one, zero)),
        GeneratorData("aix", x_translation(iu), abelianization_image=(iu, zero)),
        GeneratorData("by", y_translation(one), abelianization_image=(zero, one)),
        GeneratorData("biy", y_translation(iu), abelianization_image=(zero, iu)),
        GeneratorData("cz", identity(d, 3), abelianization_image=(zero, zero)),
        GeneratorData("ciz", identity(d, 3), abelianization_image=(zero, zero)),
    ]
    pres = Presentation(generator_count=3,
                        relators=[[1, 2, -1, -2, -3], [1, 3, -1, -3], [2, 3, -2, -3]])
    lat = LatticeData(generators=gens, presentation=pres,
                      b1_semisimple_quotient=None, linear_algebraic=True,
                      b1_manifold_override=None)
    return AnalysisInput(field=fd, algebra=alg, lattice=lat,
                         options=AnalysisOptions())


def torus(n: int) -> AnalysisInput:
    if n < 1:
        raise BadParams(f"torus dimension must be >= 1, got {n}")
    fd = FieldDescriptor(1)
    d = 1
    alg = LieAlgebraData.from_triples(d, n, None, [])
    zero, one = FieldElement(d, 0), FieldElement(d, 1)
    iu = FieldElement(d, 0, 0, 1)
    gens = []
    for j in range(n):
        e = [zero] * n
        e[j] = one
        gens.append(GeneratorData(f"e{j}", identity(d, n),
                                  abelianization_image=tuple(e)))
        ie = [zero] * n
        ie[j] = iu
        gens.append(GeneratorData(f"ie{j}", identity(d, n),
                                  abelianization_image=tuple(ie)))
    relators = [_commutator(a + 1, b + 1)
                for a in range(2 * n) for b in range(a + 1, 2 * n)]
    pres = Presentation(generator_count=2 * n, relators=relators)
    lat = LatticeData(generators=gens, presentation=pres,
                      b1_semisimple_quotient=None, linear_algebraic=True,
                      b1_manifold_override=None)
    return AnalysisInput(field=fd, algebra=alg, lattice=lat,
                         options=AnalysisOptions())


def sl2_times_c(rank_lambda_ab: int) -> AnalysisInput:
    """Rank-one product skeleton: sl2 ⊕ C with user-asserted quotient Betti.

    The hyperbolic-lattice automorphisms are not materialised (their action
    on the characteristic quotient is empty); the analysis consumes the
    asserted quotient Betti number, the Betti override, and the dense
    abelianization images {1, i, √2}.
    """
    if rank_lambda_ab < 1:
        raise BadParams(f"rank parameter must be >= 1, got {rank_lambda_ab}")
    fd = FieldDescriptor(2)
    d = 2
    alg = LieAlgebraData.from_triples(
        d, 4, ["h", "e", "f", "c"],
        [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
    one = FieldElement(d, 1)
    iu = FieldElement(d, 0, 0, 1)
    r2 = FieldElement(d, 0, 1)
    gens = [
        GeneratorData("tc1", identity(d, 4), abelianization_image=(one,)),
        GeneratorData("tci", identity(d, 4), abelianization_image=(iu,)),
        GeneratorData("tcr", identity(d, 4), abelianization_image=(r2,)),
    ]
    lat = LatticeData(generators=gens, presentation=None,
                      b1_semisimple_quotient=rank_lambda_ab,
                      linear_algebraic=True,
                      b1_manifold_override=rank_lambda_ab + 2)
    return AnalysisInput(field=fd, algebra=alg, lattice=lat,
                         options=AnalysisOptions())


def build_example(kind: str, **params) -> AnalysisInput:
    """Dispatch on the example kind; see EXAMPLE_KINDS."""
    if kind == "unit_solvmanifold":
        p = params.get("p")
        if not isinstance(p, int):
            raise BadParams("unit_solvmanifold needs integer parameter p")
        return unit_solvmanifold(p, bool(params.get("with_i", False)))
    if kind == "iwasawa":
        return iwasawa()
    if kind == "torus":
        n = params.get("n")
        if not isinstance(n, int):
            raise BadParams("torus needs integer parameter n")
        return torus(n)
    if kind == "sl2_times_c":
        r = params.get("rank")
        if not isinstance(r, int):
            raise BadParams("sl2_times_c needs integer parameter rank")
        return sl2_times_c(r)
    raise BadParams(f"unknown example kind {kind!r}; choose from {EXAMPLE_KINDS}")
