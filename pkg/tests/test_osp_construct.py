# tests/test_osp_construct.py
from __future__ import annotations

from fractions import Fraction

import pytest

from superal.algebra.graded_core import GradedDim, SuperMatrix
from superal.algebra.osp_construct import (
    WeylElement,
    ad_is_nilpotent,
    cartan_element,
    cube_vanishes,
    invariant_form_check,
    membership_check,
    osp_basis,
    random_odd_element,
    space_form_matrix,
    weyl_alignment,
    weyl_commutator,
    weyl_product,
    weyl_realization,
    weyl_span_matches,
    weyl_twisted_bracket,
)
from superal.core.errors import DimensionError, WeylDegreeError

pytestmark = pytest.mark.offline


def test_weyl_canonical_commutator():
    p, q = WeylElement.p(1, 0), WeylElement.q(1, 0)
    # [q, p]_L = -1 with q p = p q - 1
    assert weyl_commutator(q, p).as_dict() == {(): -1}
    assert weyl_commutator(p, q).as_dict() == {(): 1}


def test_weyl_degree_gate():
    pp = WeylElement.monomial(1, (0, 0))
    with pytest.raises(WeylDegreeError):
        weyl_product(pp, WeylElement.p(1, 0))
    # inside a bracket the cubic terms cancel
    assert weyl_twisted_bracket(pp, WeylElement.q(1, 0)).degree == 1


def test_odd_generator_acts_on_the_unit_by_doubling():
    p = WeylElement.p(1, 0)
    assert weyl_twisted_bracket(p, WeylElement.one(1)).as_dict() == {(0,): 2}


def test_pq_bracket_with_p():
    pq, p = WeylElement.monomial(1, (0, 1)), WeylElement.p(1, 0)
    assert weyl_commutator(pq, p).as_dict() == {(0,): -1}


@pytest.mark.parametrize("n,even,odd", [(1, 3, 2), (2, 10, 4), (3, 21, 6)])
def test_osp_dimensions(n, even, odd):
    alg = osp_basis(n)
    assert (alg.dim_even, alg.dim_odd) == (even, odd)
    assert alg.dim.size == 2 * n + 1
    assert all(membership_check(b, n) for b in alg.basis)


def test_weyl_realization_shape():
    alg = weyl_realization(1)
    assert len(alg) == 5
    assert alg.dim.size == 3
    assert (alg.dim_even, alg.dim_odd) == (3, 2)


def test_gram_matrix_is_nonsingular(osp2):
    from superal.algebra.graded_core import rank_over_q

    assert rank_over_q([list(r) for r in osp2.gram]) == len(osp2)


def test_membership_rejects_identity_and_bad_shapes():
    assert not membership_check(SuperMatrix.identity(GradedDim(1, 2)), 1)
    with pytest.raises(DimensionError):
        membership_check(SuperMatrix.identity(GradedDim(1, 4)), 1)


@pytest.mark.parametrize("n", [1, 2])
def test_weyl_and_form_realizations_agree(n):
    assert weyl_span_matches(n)
    alignment = weyl_alignment(n)
    assert alignment.nu == Fraction(-1, 2)
    for m in weyl_realization(n).basis:
        assert membership_check(alignment.apply(m), n)


@pytest.mark.parametrize("n", [1, 2])
def test_space_form_is_invariant(n):
    assert invariant_form_check(n)
    f = space_form_matrix(n)
    assert f[0][0] == -2


def test_cartan_elements_are_members(rng):
    for n in (1, 2, 3):
        for _ in range(20):
            alpha = [Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))) for _ in range(n)]
            h = cartan_element(alpha)
            assert membership_check(h, n)
            assert h.entries[0][0] == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_odd_elements_cube_to_zero(n, rng):
    alg = osp_basis(n)
    for _ in range(100):
        x = alg.element(random_odd_element(alg, rng), "odd")
        assert cube_vanishes(x)


@pytest.mark.parametrize("n", [1, 2])
def test_odd_elements_act_nilpotently(n, rng):
    alg = osp_basis(n)
    for _ in range(25):
        assert ad_is_nilpotent(alg, random_odd_element(alg, rng))


def test_even_cartan_element_is_not_ad_nilpotent(osp2):
    # the first basis element is the Cartan generator diag(0, 1, -1)
    assert not ad_is_nilpotent(osp2, {0: 1})
