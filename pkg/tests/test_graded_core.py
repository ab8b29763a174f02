# tests/test_graded_core.py
from __future__ import annotations

from fractions import Fraction

import pytest

from superal.algebra.graded_core import (
    GradedDim,
    ModInt,
    SuperAlgebra,
    SuperMatrix,
    adjoint_matrix,
    algebra_to_dict,
    bilinear_B,
    gl_basis,
    gl_index,
    inverse_over_q,
    nullspace_over_q,
    rank_over_q,
    reduce_scalar,
    render_algebra_text,
    superbracket,
    supertrace,
    supertranspose,
    supertranspose_automorphism_check,
)
from superal.core.errors import DimensionError, ModulusMismatchError, NotInSpanError, ParityError

pytestmark = pytest.mark.offline

D11 = GradedDim(1, 1)


def test_graded_dim_parities():
    d = GradedDim(1, 2)
    assert d.size == 3
    assert [d.parity(i) for i in range(3)] == [0, 1, 1]


def test_parity_is_inferred_from_blocks():
    assert SuperMatrix.elementary(D11, 0, 0).parity == "even"
    assert SuperMatrix.elementary(D11, 0, 1).parity == "odd"
    mixed = SuperMatrix.from_rows(D11, [[1, 1], [0, 0]])
    assert mixed.parity == "mixed"
    with pytest.raises(ParityError):
        mixed.z2
    even, odd = mixed.homogeneous_parts()
    assert even.parity == "even" and odd.parity == "odd"


def test_declared_parity_must_match_blocks():
    with pytest.raises(ParityError):
        SuperMatrix.from_rows(D11, [[0, 1], [0, 0]], "even")


def test_shape_is_checked():
    with pytest.raises(DimensionError):
        SuperMatrix.from_rows(D11, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_supertrace_of_identity():
    assert supertrace(SuperMatrix.identity(GradedDim(1, 2))) == -1


def test_odd_bracket_is_anticommutator():
    e01 = SuperMatrix.elementary(D11, 0, 1)
    e10 = SuperMatrix.elementary(D11, 1, 0)
    assert superbracket(e01, e10).flat() == SuperMatrix.identity(D11).flat()
    assert superbracket(e01, e10).parity == "even"


def test_supertrace_vanishes_on_brackets(rng):
    from superal.algebra.graded_core import random_homogeneous

    dim = GradedDim(2, 2)
    for _ in range(20):
        x = random_homogeneous(dim, int(rng.integers(0, 2)), rng)
        y = random_homogeneous(dim, int(rng.integers(0, 2)), rng)
        assert supertrace(superbracket(x, y)) == 0


def test_bilinear_form_is_supersymmetric_on_odd_pairs():
    e01 = SuperMatrix.elementary(D11, 0, 1)
    e10 = SuperMatrix.elementary(D11, 1, 0)
    assert bilinear_B(e01, e10) == 1
    assert bilinear_B(e10, e01) == -1


def test_supertranspose_convention():
    e01 = SuperMatrix.elementary(D11, 0, 1)
    assert supertranspose(e01).flat() == (0, 0, -1, 0)


def test_minus_supertranspose_is_an_automorphism(rng):
    assert supertranspose_automorphism_check(1, 2, rng, samples=30)
    assert supertranspose_automorphism_check(2, 1, rng, samples=30)


def test_reduction_mod_p_commutes_with_the_superbracket(rng):
    from superal.algebra.graded_core import random_homogeneous

    prime = 10007
    dim = GradedDim(2, 2)
    for _ in range(20):
        x = random_homogeneous(dim, int(rng.integers(0, 2)), rng, 50)
        y = random_homogeneous(dim, int(rng.integers(0, 2)), rng, 50)
        assert superbracket(x, y).reduce_mod(prime).flat() == superbracket(x.reduce_mod(prime), y.reduce_mod(prime)).flat()


def test_supertranspose_has_order_four(rng):
    from superal.algebra.graded_core import random_homogeneous

    dim = GradedDim(2, 3)
    x = random_homogeneous(dim, 1, rng)
    once = supertranspose(x)
    assert once.flat() != x.flat()
    assert supertranspose(supertranspose(once)).flat() != x.flat()
    assert supertranspose(supertranspose(supertranspose(once))).flat() == x.flat()


def test_supertrace_of_rank_one_operators(rng):
    dim = GradedDim(2, 3)
    n = dim.size
    for z in (0, 1):
        for w in (0, 1):
            vec = [int(rng.integers(-3, 4)) if dim.parity(i) == z else 0 for i in range(n)]
            cov = [int(rng.integers(-3, 4)) if dim.parity(i) == w else 0 for i in range(n)]
            op = SuperMatrix.from_rows(dim, [[vec[i] * cov[j] for j in range(n)] for i in range(n)])
            pairing = sum(a * b for a, b in zip(cov, vec))
            assert supertrace(op) == (-1) ** (z * w) * pairing


def test_bilinear_form_supersymmetry_on_random_pairs(rng):
    from superal.algebra.graded_core import random_homogeneous

    dim = GradedDim(1, 2)
    for _ in range(100):
        a, b = int(rng.integers(0, 2)), int(rng.integers(0, 2))
        x = random_homogeneous(dim, a, rng)
        y = random_homogeneous(dim, b, rng)
        assert bilinear_B(y, x) == (-1) ** (a * b) * bilinear_B(x, y)


def test_modint_arithmetic():
    a = ModInt(3, 7)
    assert a + 5 == 1
    assert a * 5 == 1
    assert a / 3 == 1
    assert -a == 4
    assert a ** 6 == 1
    assert reduce_scalar(Fraction(1, 2), 7) == 4
    with pytest.raises(ModulusMismatchError):
        a + ModInt(1, 11)


def test_exact_linear_algebra():
    assert rank_over_q([[1, 2], [2, 4]]) == 1
    (v,) = nullspace_over_q([[1, 2], [2, 4]])
    assert v[0] + 2 * v[1] == 0
    inv = inverse_over_q([[2, 1], [1, 1]])
    assert inv == ((1, -1), (-1, 2))
    with pytest.raises(DimensionError):
        inverse_over_q([[1, 2], [2, 4]])


def test_gl_basis_shape():
    g = gl_basis(1, 1)
    assert len(g) == 4
    assert (g.dim_even, g.dim_odd) == (2, 2)
    assert gl_index(1, 1, 0, 1) == 2
    assert gl_index(1, 1, 1, 0) == 3
    g12 = gl_basis(1, 2)
    assert (g12.dim_even, g12.dim_odd) == (5, 4)


def test_structure_constants_of_gl11():
    g = gl_basis(1, 1)
    # [E01, E10] = E00 + E11
    assert g.bracket_coords(2, 3) == {0: 1, 1: 1}
    assert g.bracket_coords(0, 0) == {}


def test_adjoint_matrix_columns():
    g = gl_basis(1, 1)
    ad = adjoint_matrix(g, {2: 1})
    # column 3 holds the coordinates of [E01, E10]
    assert [ad[i][3] for i in range(4)] == [1, 1, 0, 0]


def test_algebra_checks_order_independence_and_closure():
    e00 = SuperMatrix.elementary(D11, 0, 0)
    e01 = SuperMatrix.elementary(D11, 0, 1)
    e10 = SuperMatrix.elementary(D11, 1, 0)
    with pytest.raises(ParityError):
        SuperAlgebra("odd-first", D11, (e01, e00))
    with pytest.raises(DimensionError):
        SuperAlgebra("dependent", D11, (e00, e00))
    with pytest.raises(NotInSpanError):
        SuperAlgebra("open", D11, (e01, e10))


def test_coordinates_reject_non_members(osp2):
    with pytest.raises(NotInSpanError):
        osp2.coordinates(SuperMatrix.identity(osp2.dim))
    b = osp2.basis[3]
    assert osp2.coordinates(b) == tuple(Fraction(int(k == 3)) for k in range(len(osp2)))


def test_basis_export(osp2):
    data = algebra_to_dict(osp2)
    assert data["dimension"] == "5"
    assert data["parities"] == ["0", "0", "0", "1", "1"]
    assert "osp(1,2)" in render_algebra_text(osp2)
