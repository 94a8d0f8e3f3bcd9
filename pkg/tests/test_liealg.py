import random

import pytest

from parcoh.errors import JacobiViolation, NotSemisimple
from parcoh.liealg import (
    LieAlgebraData,
    algebra_from_matrix_basis,
    characteristic_ideals,
    conjugate_structure,
    levi_subalgebra,
    quotient_algebra,
    simple_ideal_decomposition,
    structure_report,
    subalgebra_table,
)
from parcoh.linalg import Subspace, mat_rank
from helpers import (
    example2_algebra,
    fe,
    heisenberg_algebra,
    random_invertible,
    sl2_algebra,
    sl2_plus_sl2,
    sl2_semidirect_c2,
    sl2_semidirect_heis,
    sl3_algebra,
)


def test_validate_accepts_standard_algebras():
    LieAlgebraData.from_triples(2, 3, None, []).validate()      # abelian C³
    heisenberg_algebra().validate()
    sl2_algebra().validate()
    example2_algebra().validate()
    sl3_algebra().validate()


def test_validate_rejects_jacobi_violation():
    # [x,y] = z, [x,z] = y, [y,z] = x + y violates Jacobi
    bad = LieAlgebraData.from_triples(
        2, 3, None, [(0, 1, 2, 1), (0, 2, 1, 1), (1, 2, 0, 1), (1, 2, 1, 1)])
    with pytest.raises(JacobiViolation) as err:
        bad.validate()
    assert err.value.triple == (0, 1, 2)


def test_structure_report_sl2():
    rep = structure_report(sl2_algebra())
    assert rep.semisimple and not rep.solvable and not rep.nilpotent
    assert rep.radical.dim == 0 and rep.nilradical.dim == 0
    assert mat_rank([list(r) for r in rep.killing]) == 3


def test_structure_report_heisenberg():
    rep = structure_report(heisenberg_algebra())
    assert rep.nilpotent and rep.solvable and not rep.abelian
    assert rep.radical.dim == 3 and rep.nilradical.dim == 3
    assert rep.derived_series[1].dim == 1       # centre
    assert rep.lower_central_series[-1].dim == 0


def test_structure_report_unit_solvable_algebra():
    L = example2_algebra()
    rep = structure_report(L)
    assert rep.solvable and not rep.nilpotent
    assert rep.radical.dim == 3
    assert rep.nilradical.dim == 2
    gp = rep.derived_series[1]
    assert gp.dim == 2
    # nilradical = span(x, y) = derived algebra here
    assert rep.nilradical == gp


def test_radical_postconditions():
    for L in (sl2_semidirect_c2(), sl2_semidirect_heis(), example2_algebra()):
        rep = structure_report(L)
        r = rep.radical
        assert L.is_ideal(r)
        # solvable: derived series of the radical terminates
        cur = r
        for _ in range(L.dim + 1):
            nxt = L.bracket_span(cur, cur)
            if nxt.dim == 0:
                break
            assert nxt.dim < cur.dim
            cur = nxt
        else:
            pytest.fail("radical not solvable")
        # quotient by the radical is semisimple
        Lq, _ = quotient_algebra(L, r)
        if Lq.dim:
            assert mat_rank(Lq.killing_matrix()) == Lq.dim


def test_nilradical_postconditions():
    for L in (sl2_semidirect_c2(), sl2_semidirect_heis(), example2_algebra(),
              heisenberg_algebra()):
        rep = structure_report(L)
        n = rep.nilradical
        assert L.is_ideal(n)
        assert rep.radical.contains_subspace(n)
        # contains the derived algebra of the radical
        assert n.contains_subspace(L.bracket_span(rep.radical, rep.radical))
        # nilpotent: iterated bracketing with the full algebra dies out
        cur = n
        for _ in range(L.dim + 1):
            nxt = L.bracket_span(n, cur)
            if nxt.dim == 0:
                break
            cur = nxt
        else:
            pytest.fail("nilradical not nilpotent")


def test_levi_trivial_cases():
    assert levi_subalgebra(sl2_algebra()).dim == 3
    assert levi_subalgebra(example2_algebra()).dim == 0
    assert levi_subalgebra(heisenberg_algebra()).dim == 0


def _check_levi(L):
    rep = structure_report(L)
    s = levi_subalgebra(L, rep)
    assert s.dim == L.dim - rep.radical.dim
    assert s.intersect(rep.radical).dim == 0
    assert L.bracket_span(s, s) == s          # [s, s] = s for semisimple
    if s.dim:
        sub = subalgebra_table(L, s)
        assert mat_rank(sub.killing_matrix()) == s.dim
    return s


def test_levi_on_semidirect_products_with_random_bases():
    rng = random.Random(2024)
    bases = [sl2_semidirect_c2, sl2_semidirect_heis]
    for trial in range(20):
        L0 = bases[trial % 2]()
        T = random_invertible(rng, L0.d, L0.dim, rational_only=(trial % 3 == 0))
        L = conjugate_structure(L0, T)
        L.validate()
        _check_levi(L)


def test_simple_ideal_decomposition_examples():
    L = sl2_algebra()
    ideals, rank_one = simple_ideal_decomposition(L, levi_subalgebra(L))
    assert [x.dim for x in ideals] == [3] and rank_one

    L = sl2_plus_sl2()
    ideals, rank_one = simple_ideal_decomposition(L, levi_subalgebra(L))
    assert [x.dim for x in ideals] == [3, 3] and rank_one

    L = sl3_algebra()
    ideals, rank_one = simple_ideal_decomposition(L, levi_subalgebra(L))
    assert [x.dim for x in ideals] == [8] and not rank_one


def test_simple_ideal_decomposition_conjugated():
    rng = random.Random(5)
    for _ in range(5):
        L = conjugate_structure(sl2_plus_sl2(), random_invertible(rng, 2, 6, rational_only=True))
        ideals, rank_one = simple_ideal_decomposition(L, levi_subalgebra(L))
        assert sorted(x.dim for x in ideals) == [3, 3] and rank_one
    # quadratic-irrational conjugation still splits two factors
    L = conjugate_structure(sl2_plus_sl2(), random_invertible(rng, 2, 6))
    ideals, rank_one = simple_ideal_decomposition(L, levi_subalgebra(L))
    assert sorted(x.dim for x in ideals) == [3, 3] and rank_one


def test_simple_ideal_decomposition_rejects_non_semisimple():
    L = example2_algebra()
    with pytest.raises(NotSemisimple):
        simple_ideal_decomposition(L, Subspace.full(L.d, L.dim))


def test_characteristic_ideals_heisenberg():
    L = heisenberg_algebra()
    rep = structure_report(L)
    ch = characteristic_ideals(L, rep, levi_subalgebra(L, rep))
    assert ch.nilradical_derived.dim == 1          # the centre
    assert ch.levi_bracket_radical.dim == 0
    assert ch.lower.dim == 1 and ch.upper.dim == 1
    assert ch.quotient.dim == 0


def test_characteristic_ideals_unit_algebra():
    L = example2_algebra()
    rep = structure_report(L)
    ch = characteristic_ideals(L, rep, levi_subalgebra(L, rep))
    assert ch.lower.dim == 0
    assert ch.upper.dim == 2
    assert ch.quotient.dim == 2


def test_characteristic_ideals_abelian():
    L = LieAlgebraData.from_triples(2, 3, None, [])
    rep = structure_report(L)
    ch = characteristic_ideals(L, rep, levi_subalgebra(L, rep))
    assert ch.lower.dim == 0 and ch.upper.dim == 0 and ch.quotient.dim == 0


def test_dimensions_invariant_under_basis_change():
    rng = random.Random(31)
    for L0 in (example2_algebra(), sl2_semidirect_c2(), heisenberg_algebra()):
        rep0 = structure_report(L0)
        s0 = levi_subalgebra(L0, rep0)
        ch0 = characteristic_ideals(L0, rep0, s0)
        for _ in range(5):
            T = random_invertible(rng, L0.d, L0.dim)
            L = conjugate_structure(L0, T)
            rep = structure_report(L)
            assert [u.dim for u in rep.derived_series] == [u.dim for u in rep0.derived_series]
            assert [u.dim for u in rep.lower_central_series] == \
                [u.dim for u in rep0.lower_central_series]
            assert rep.radical.dim == rep0.radical.dim
            assert rep.nilradical.dim == rep0.nilradical.dim
            s = levi_subalgebra(L, rep)
            assert s.dim == s0.dim
            ch = characteristic_ideals(L, rep, s)
            assert (ch.lower.dim, ch.upper.dim, ch.quotient.dim) == \
                (ch0.lower.dim, ch0.upper.dim, ch0.quotient.dim)


def test_algebra_from_matrix_basis_rejects_dependent():
    one = fe(2, 1)
    zero = fe(2, 0)
    m = [[one, zero], [zero, one]]
    with pytest.raises(ValueError):
        algebra_from_matrix_basis(2, [m, m])
