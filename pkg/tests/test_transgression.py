# tests/test_transgression.py
from __future__ import annotations

from fractions import Fraction

import pytest

from superal.cohomology.forms import MultilinearForm, dot, dual_form, random_form, wedge
from superal.cohomology.transgression import (
    bracket_form_pullback,
    degree_operator_R,
    degree_operator_via_derivations,
    differential_d,
    differential_d_via_lie,
    homotopy_defect,
    random_unimodular_basis,
    s_map,
    supertrace_invariant_form,
    transgress,
    transgress_via_tau,
    transgression_matches,
)
from superal.core.errors import ArityError, DimensionError, ParityError, VarianceError

pytestmark = pytest.mark.offline


def _parity(rng):
    return int(rng.integers(0, 2))


# --- d -------------------------------------------------------------------------

@pytest.mark.parametrize("alg_name", ["gl12", "osp2"])
def test_d_squares_to_zero(alg_name, request, rng):
    alg = request.getfixturevalue(alg_name)
    for arity in (0, 1, 2):
        for _ in range(3):
            f = random_form(alg, arity, "skew", rng, parity=_parity(rng), density=0.4)
            assert differential_d(differential_d(f)).is_zero()


@pytest.mark.parametrize("alg_name", ["gl12", "osp2"])
def test_d_agrees_with_lie_derivative_formula(alg_name, request, rng):
    alg = request.getfixturevalue(alg_name)
    for arity in (1, 2):
        for _ in range(3):
            f = random_form(alg, arity, "skew", rng, parity=_parity(rng), density=0.4)
            assert differential_d(f) == differential_d_via_lie(f)


def test_d_of_one_form_is_minus_phi_of_bracket(gl12):
    for i in (0, 2, 5, 7):
        phi = dual_form(gl12, i)
        dphi = differential_d(phi)
        for a in range(len(gl12)):
            for b in range(len(gl12)):
                assert dphi.evaluate((a, b)) == bracket_form_pullback(gl12, phi, a, b)


def test_cartan_homotopy_formula(osp2, rng):
    for _ in range(5):
        f = random_form(osp2, 2, "skew", rng, parity=_parity(rng), density=0.5)
        x = int(rng.integers(0, len(osp2)))
        assert homotopy_defect(x, f).is_zero()


def test_supertrace_skew_invariant_is_closed(gl12):
    assert differential_d(supertrace_invariant_form(gl12, 3, "Lambda")).is_zero()


def test_d_needs_skew_forms(gl12, rng):
    with pytest.raises(VarianceError):
        differential_d(random_form(gl12, 2, "sym", rng))


# --- s and R ---------------------------------------------------------------------

def test_s_is_d_on_one_forms(osp2, rng):
    for _ in range(5):
        phi = random_form(osp2, 1, "sym", rng, parity=_parity(rng))
        assert s_map(phi) == differential_d(phi.with_variance("skew"))


def test_s_is_multiplicative(osp2, rng):
    for _ in range(5):
        p = random_form(osp2, 1, "sym", rng, parity=_parity(rng))
        q = random_form(osp2, 1, "sym", rng, parity=_parity(rng))
        assert s_map(dot(p, q)) == wedge(s_map(p), s_map(q))


def test_degree_operator_two_ways(gl12, rng):
    for arity in (1, 2, 3):
        f = random_form(gl12, arity, "sym", rng, parity=_parity(rng), density=0.2)
        assert degree_operator_via_derivations(f) == degree_operator_R(f)
        assert degree_operator_R(f) == f.scale(arity)


def test_s_kills_invariant_quadratic_form(osp2):
    assert s_map(supertrace_invariant_form(osp2, 2, "P")).is_zero()


def test_s_needs_supersymmetric_forms(gl12, rng):
    with pytest.raises(VarianceError):
        s_map(random_form(gl12, 2, "skew", rng))


# --- t ---------------------------------------------------------------------------

@pytest.mark.parametrize("alg_name,k", [("gl12", 1), ("gl12", 2), ("osp2", 2), ("osp2", 3)])
def test_transgression_of_supertrace_invariants(alg_name, k, request):
    assert transgression_matches(request.getfixturevalue(alg_name), k)


def test_transgression_of_the_supertrace(gl12):
    p1 = supertrace_invariant_form(gl12, 1, "P")
    assert not p1.is_zero()
    assert transgress(p1) == supertrace_invariant_form(gl12, 1, "Lambda")


def test_d_of_t_is_s_of_R(osp2, rng):
    for arity in (1, 2):
        for _ in range(3):
            p = random_form(osp2, arity, "sym", rng, parity=_parity(rng), density=0.5)
            assert differential_d(transgress(p)) == s_map(degree_operator_R(p))


def test_t_product_rule_for_even_factor(osp2, rng):
    for _ in range(4):
        p = random_form(osp2, 1, "sym", rng, parity=0)
        q = random_form(osp2, 1, "sym", rng, parity=_parity(rng))
        lhs = transgress(dot(p, q))
        rhs = wedge(transgress(p), s_map(q)) + wedge(s_map(p), transgress(q))
        assert lhs == rhs


def test_t_kills_products_of_invariants(osp2):
    p2 = supertrace_invariant_form(osp2, 2, "P")
    assert not transgress(p2).is_zero()
    assert transgress(dot(p2, p2)).is_zero()


def test_t_does_not_depend_on_the_basis(gl12, osp2, rng):
    cases = [supertrace_invariant_form(gl12, 2, "P"), random_form(osp2, 2, "sym", rng, parity=1, density=0.6)]
    for p in cases:
        alg = p.algebra
        m = len(alg)
        expected = transgress(p)
        assert transgress_via_tau(p, list(range(m))) == expected
        assert transgress_via_tau(p, [{i: 2} for i in range(m)]) == expected
        for _ in range(2):
            assert transgress_via_tau(p, random_unimodular_basis(alg, rng)) == expected


def test_unimodular_basis_is_homogeneous(gl12, rng):
    basis = random_unimodular_basis(gl12, rng)
    assert len(basis) == len(gl12)
    for v in basis:
        assert len({gl12.parities[i] for i in v}) == 1


def test_transgression_errors(osp2):
    p2 = supertrace_invariant_form(osp2, 2, "P")
    with pytest.raises(ArityError):
        transgress(MultilinearForm.constant(osp2, 1, "sym"))
    with pytest.raises(VarianceError):
        transgress(supertrace_invariant_form(osp2, 3, "Lambda"))
    with pytest.raises(DimensionError):
        transgress_via_tau(p2, [0, 1, 2])
    with pytest.raises(DimensionError):
        transgress_via_tau(p2, [0, 0, 2, 3, 4])
    with pytest.raises(ParityError):
        transgress_via_tau(p2, [{0: 1, 3: 1}, 1, 2, 3, 4])


def test_bracket_pullback_needs_a_one_form(osp2):
    with pytest.raises(ArityError):
        bracket_form_pullback(osp2, MultilinearForm.constant(osp2, Fraction(1)), 0, 1)
