# tests/test_forms.py
from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from superal.algebra.graded_core import gl_index
from superal.cohomology.forms import (
    MultilinearForm,
    antisymmetrize,
    canonical_key,
    canonical_keys,
    contraction_iota,
    coordinate_form,
    derivation_D,
    dot,
    dot_all,
    dual_form,
    lie_action,
    omega_sign,
    random_form,
    render_form_text,
    super_tensor,
    symmetrize,
    tensor,
    wedge,
    wedge_all,
)
from superal.cohomology.transgression import is_invariant, supertrace_invariant_form
from superal.core.errors import ArityError, ParityError, VarianceError
from superal.identities.superpoly import perm_sign, super_sign

pytestmark = pytest.mark.offline


def _random_perm(rng, k):
    return tuple(int(x) for x in rng.permutation(k))


def test_canonical_keys_and_forbidden_repeats(gl12):
    par = gl12.parities  # 5 even, then 4 odd
    assert canonical_key(par, (5, 5), "skew") == ((5, 5), 1)
    assert canonical_key(par, (0, 0), "skew") is None
    assert canonical_key(par, (5, 5), "sym") is None
    assert canonical_key(par, (6, 5), "skew") == ((5, 6), 1)
    assert canonical_key(par, (1, 0), "skew") == ((0, 1), -1)
    assert canonical_key(par, (1, 0), "sym") == ((0, 1), 1)
    assert sum(1 for _ in canonical_keys(par, 2, "skew")) == 10 + 5 * 4 + 10


def test_non_canonical_keys_are_rejected(gl12):
    with pytest.raises(VarianceError):
        MultilinearForm(gl12, 2, "skew", {(1, 0): 1})
    with pytest.raises(ArityError):
        MultilinearForm(gl12, 2, "skew", {(0,): 1})


def test_skew_evaluation_follows_the_wedge_action(gl12, rng):
    for _ in range(30):
        f = random_form(gl12, 3, "skew", rng, parity=int(rng.integers(0, 2)), density=0.3)
        key = tuple(int(x) for x in rng.integers(0, len(gl12), size=3))
        s = _random_perm(rng, 3)
        par = [gl12.parities[b] for b in key]
        moved = tuple(key[i] for i in s)
        assert f.evaluate(moved) == perm_sign(s) * super_sign(s, par) * f.evaluate(key)


def test_sym_evaluation_follows_the_dot_action(gl12, rng):
    for _ in range(30):
        f = random_form(gl12, 3, "sym", rng, parity=int(rng.integers(0, 2)), density=0.3)
        key = tuple(int(x) for x in rng.integers(0, len(gl12), size=3))
        s = _random_perm(rng, 3)
        par = [gl12.parities[b] for b in key]
        moved = tuple(key[i] for i in s)
        assert f.evaluate(moved) == super_sign(s, par) * f.evaluate(key)


def test_homogeneous_parts(gl12):
    mixed = dual_form(gl12, 0) + dual_form(gl12, 5)
    assert mixed.z2 is None
    with pytest.raises(ParityError):
        mixed.f
    assert [p.z2 for p in mixed.homogeneous_parts()] == [0, 1]
    assert dual_form(gl12, 5).f == 1


def test_coordinate_forms_on_gl(gl12):
    m = coordinate_form(1, 2, 0, 2)
    assert m.evaluate((gl_index(1, 2, 0, 2),)) == 1
    assert m.evaluate((gl_index(1, 2, 2, 0),)) == 0
    assert m.z2 == 1


def test_wedge_and_dot_match_full_symmetrization(gl12, rng):
    for _ in range(10):
        a = random_form(gl12, 1, "skew", rng, parity=int(rng.integers(0, 2)))
        b = random_form(gl12, 2, "skew", rng, parity=int(rng.integers(0, 2)), density=0.3)
        assert wedge(a, b) == antisymmetrize(super_tensor(a, b)).scale(Fraction(1, factorial(1) * factorial(2)))
        c = random_form(gl12, 1, "sym", rng, parity=int(rng.integers(0, 2)))
        d = random_form(gl12, 2, "sym", rng, parity=int(rng.integers(0, 2)), density=0.3)
        assert dot(c, d) == symmetrize(super_tensor(c, d)).scale(Fraction(1, 2))


@pytest.mark.parametrize("indices", [(0, 1), (5, 6), (0, 5, 6), (5, 5, 6), (1, 2, 7)])
def test_products_of_one_forms_carry_the_omega_sign(gl12, indices):
    phis = [dual_form(gl12, i) for i in indices]
    chain = phis[0]
    for phi in phis[1:]:
        chain = tensor(chain, phi)
    sign = omega_sign([gl12.parities[i] for i in indices])
    assert wedge_all(phis, gl12) == antisymmetrize(chain).scale(sign)
    assert dot_all([p.with_variance("sym") for p in phis], gl12) == symmetrize(chain).scale(sign)


def test_super_commutativity(gl12, rng):
    for _ in range(10):
        a = random_form(gl12, 1, "skew", rng, parity=int(rng.integers(0, 2)))
        b = random_form(gl12, 2, "skew", rng, parity=int(rng.integers(0, 2)), density=0.3)
        sign = -1 if (1 * 2 + a.f * b.f) % 2 else 1
        assert wedge(a, b) == wedge(b, a).scale(sign)
        c = random_form(gl12, 1, "sym", rng, parity=int(rng.integers(0, 2)))
        d = random_form(gl12, 2, "sym", rng, parity=int(rng.integers(0, 2)), density=0.3)
        assert dot(c, d) == dot(d, c).scale(-1 if c.f * d.f else 1)


def test_odd_one_form_squares_to_nonzero_wedge(gl12):
    phi = dual_form(gl12, 5)
    omega = dual_form(gl12, 0)
    assert not wedge(phi, phi).is_zero()
    assert wedge(omega, omega).is_zero()


def test_wedge_splits_mixed_degrees(gl12):
    mixed = dual_form(gl12, 0) + dual_form(gl12, 5)
    phi = dual_form(gl12, 6)
    assert wedge(mixed, phi) == wedge(dual_form(gl12, 0), phi) + wedge(dual_form(gl12, 5), phi)


def test_products_check_variance(gl12, rng):
    sym2 = random_form(gl12, 2, "sym", rng)
    with pytest.raises(VarianceError):
        wedge(sym2, dual_form(gl12, 0))
    with pytest.raises(VarianceError):
        contraction_iota(0, sym2)
    with pytest.raises(ArityError):
        dual_form(gl12, 0) + random_form(gl12, 2, "skew", rng)


def test_insertion_sign(gl12):
    phi = dual_form(gl12, 5, "sym")
    # D_Y phi = (-1)^{1*1} phi(Y)
    assert derivation_D(5, phi).evaluate(()) == -1
    omega = dual_form(gl12, 0, "sym")
    assert derivation_D(0, omega).evaluate(()) == 1


def test_evaluate_vectors_is_multilinear(gl12, rng):
    f = random_form(gl12, 2, "skew", rng)
    u = {0: Fraction(2), 1: Fraction(-1)}
    v = {3: Fraction(1)}
    expected = 2 * f.evaluate((0, 3)) - f.evaluate((1, 3))
    assert f.evaluate_vectors([u, v]) == expected


def test_supertrace_invariants_are_invariant(gl12):
    assert is_invariant(supertrace_invariant_form(gl12, 2, "P"), "s")
    assert is_invariant(supertrace_invariant_form(gl12, 3, "Lambda"), "a")
    assert not is_invariant(dual_form(gl12, 0), "a")


def test_lie_action_checks_flavor(gl12, rng):
    with pytest.raises(VarianceError):
        lie_action(0, random_form(gl12, 2, "sym", rng), "a")
    with pytest.raises(ValueError):
        lie_action(0, dual_form(gl12, 0), "x")


def test_render_form_text(gl12):
    text = render_form_text(dual_form(gl12, 5).scale(Fraction(1, 2)))
    assert text.startswith("form on gl(1,2): arity=1")
    assert "(5) : 1/2" in text
