# superal/cohomology/transgression.py
"""
Cohomology operators on forms: the Chevalley-Eilenberg differential, the
algebra map s (phi -> d phi), the degree operator R and the transgression
t : P(g) -> A(g), together with the supertrace invariants P_k and Lambda_k
tabulated as forms.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

from superal.algebra.graded_core import SuperAlgebra, inverse_over_q, rank_over_q
from superal.cohomology.forms import (
    Key,
    MultilinearForm,
    VectorLike,
    _bracket_sources,
    as_vector,
    canonical_key,
    contraction_iota,
    derivation_D,
    dot,
    dual_form,
    lie_action,
    linear_form,
    sum_forms,
    wedge,
)
from superal.core.errors import ArityError, DimensionError, VarianceError
from superal.identities.superpoly import ArgTuple, invariant_Lambda, invariant_P
from superal.utils.logging_setup import get_logger

log = get_logger("superal.cohomology")


# ---------------------------------------------------------------------------
# Differential
# ---------------------------------------------------------------------------

def differential_d(form: MultilinearForm) -> MultilinearForm:
    """
    dF(X_1..X_n+1) = sum_{i<j} (-1)^{i+j} (-1)^{x_i(x_1+..+x_i-1)} (-1)^{x_j(x_1+..^x_i..+x_j-1)}
                     F([X_i, X_j], X_1, .., ^X_i, .., ^X_j, .., X_n+1)
    """
    if not form.compatible("skew"):
        raise VarianceError("d acts on skew supersymmetric forms")
    alg = form.algebra
    par = alg.parities
    form = form.with_variance("skew")
    sources = _bracket_sources(alg)
    candidates = set()
    for key in form.coefficients:
        for m, c in enumerate(key):
            rest = key[:m] + key[m + 1:]
            for a, b in sources.get(c, ()):
                cand = tuple(sorted(rest + (a, b)))
                if canonical_key(par, cand, "skew") is not None:
                    candidates.add(cand)
    out: Dict[Key, Fraction] = {}
    for key in candidates:
        total = Fraction(0)
        n1 = len(key)
        for i in range(n1):
            pre_i = sum(par[key[t]] for t in range(i))
            s_i = -1 if (par[key[i]] * pre_i) % 2 else 1
            for j in range(i + 1, n1):
                pre_j = sum(par[key[t]] for t in range(j) if t != i)
                sign = s_i * (-1 if (i + j) % 2 else 1) * (-1 if (par[key[j]] * pre_j) % 2 else 1)
                rest = tuple(key[t] for t in range(n1) if t != i and t != j)
                for c, coef in alg.bracket_coords(key[i], key[j]).items():
                    v = form.evaluate((c,) + rest)
                    if v:
                        total += sign * coef * v
        out[key] = total
    return MultilinearForm(alg, form.arity + 1, "skew", out)


def differential_d_via_lie(form: MultilinearForm) -> MultilinearForm:
    """d = 1/2 sum_i phi~_i ^ L^a_{X_i}, with phi~_i(X) = (-1)^{x_i x} phi_i(X)."""
    alg = form.algebra
    form = form.with_variance("skew") if form.arity <= 1 else form
    terms = []
    for i, x in enumerate(alg.parities):
        lifted = lie_action(i, form, "a")
        if lifted.is_zero():
            continue
        terms.append(wedge(dual_form(alg, i).scale(-1 if x else 1), lifted))
    return sum_forms(terms, alg, form.arity + 1, "skew").scale(Fraction(1, 2))


def homotopy_defect(x: VectorLike, form: MultilinearForm) -> MultilinearForm:
    """L^a_X F - (iota_X d F + d iota_X F); zero for every X and skew F of positive arity."""
    lhs = lie_action(x, form, "a")
    rhs = contraction_iota(x, differential_d(form))
    if form.arity > 0:
        rhs = rhs + differential_d(contraction_iota(x, form))
    return lhs - rhs


# ---------------------------------------------------------------------------
# s, R and the transgression
# ---------------------------------------------------------------------------

class _MonomialCache:
    """Prefix products phi_k1 . .. . phi_km and d phi_k1 ^ .. ^ d phi_km."""

    def __init__(self, alg: SuperAlgebra) -> None:
        self.alg = alg
        self.sym: Dict[Key, MultilinearForm] = {(): MultilinearForm.constant(alg, 1, "sym")}
        self.skew: Dict[Key, MultilinearForm] = {(): MultilinearForm.constant(alg, 1, "skew")}
        self.dphi: Dict[int, MultilinearForm] = {}

    def monomial(self, key: Key) -> MultilinearForm:
        if key not in self.sym:
            self.sym[key] = dot(self.monomial(key[:-1]), dual_form(self.alg, key[-1], "sym"))
        return self.sym[key]

    def image(self, key: Key) -> MultilinearForm:
        if key not in self.skew:
            b = key[-1]
            if b not in self.dphi:
                self.dphi[b] = differential_d(dual_form(self.alg, b))
            self.skew[key] = wedge(self.image(key[:-1]), self.dphi[b])
        return self.skew[key]


def _require_sym(form: MultilinearForm, what: str) -> MultilinearForm:
    if not form.compatible("sym"):
        raise VarianceError(f"{what} acts on supersymmetric forms, got {form.variance}")
    return form.with_variance("sym")


def s_map(form: MultilinearForm, cache: Optional[_MonomialCache] = None) -> MultilinearForm:
    """
    The algebra homomorphism P(g) -> A(g) with s(phi) = d phi on 1-forms.
    Writes P = sum_K c_K phi_k1 . .. . phi_km on canonical keys K, where
    c_K = P(b_K) / M_K(b_K), and maps each monomial to d phi_k1 ^ .. ^ d phi_km.
    """
    form = _require_sym(form, "s")
    alg = form.algebra
    cache = cache or _MonomialCache(alg)
    terms = []
    for key, value in form.items():
        norm = cache.monomial(key).evaluate(key)
        terms.append(cache.image(key).scale(value / norm))
    return sum_forms(terms, alg, 2 * form.arity, "skew")


def degree_operator_R(form: MultilinearForm) -> MultilinearForm:
    """R(P) = deg(P) P on a homogeneous-degree polynomial."""
    form = _require_sym(form, "R")
    return form.scale(form.arity)


def degree_operator_via_derivations(form: MultilinearForm) -> MultilinearForm:
    """R = sum_even Omega_i . D_{X_i} - sum_odd phi_j . D_{Y_j}."""
    form = _require_sym(form, "R")
    alg = form.algebra
    if form.arity == 0:
        return MultilinearForm.zero(alg, 0, "sym")
    terms = []
    for i, x in enumerate(alg.parities):
        inner = derivation_D(i, form)
        if inner.is_zero():
            continue
        terms.append(dot(dual_form(alg, i, "sym").scale(-1 if x else 1), inner))
    return sum_forms(terms, alg, form.arity, "sym")


def _transgress_with(form: MultilinearForm, frame: Sequence[Tuple[VectorLike, MultilinearForm, int]]) -> MultilinearForm:
    form = _require_sym(form, "t")
    if form.arity == 0:
        raise ArityError("transgression is defined on forms of positive degree")
    alg = form.algebra
    cache = _MonomialCache(alg)
    terms = []
    for vec, dual, parity in frame:
        inner = derivation_D(vec, form)
        if inner.is_zero():
            continue
        terms.append(wedge(dual.scale(-1 if parity else 1), s_map(inner, cache)))
    out = sum_forms(terms, alg, 2 * form.arity - 1, "skew")
    log.debug("t: arity %d -> %d, %d keys", form.arity, out.arity, len(out))
    return out


def transgress(form: MultilinearForm) -> MultilinearForm:
    """t(P) = sum_even Omega_i ^ s(D_{X_i} P) - sum_odd phi_j ^ s(D_{Y_j} P)."""
    alg = form.algebra
    frame = [(i, dual_form(alg, i), x) for i, x in enumerate(alg.parities)]
    return _transgress_with(form, frame)


def transgress_via_tau(form: MultilinearForm, basis: Sequence[VectorLike]) -> MultilinearForm:
    """
    The same map computed in another homogeneous basis Z_1..Z_m with its dual
    basis psi_i(Z_j) = delta_ij; the result does not depend on the choice.
    """
    alg = form.algebra
    m = len(alg)
    if len(basis) != m:
        raise DimensionError(f"{alg.name} needs {m} basis vectors, got {len(basis)}")
    vecs: List[Dict[int, Fraction]] = []
    parities: List[int] = []
    for v in basis:
        coords, parity = as_vector(alg, v)
        vecs.append(coords)
        parities.append(parity)
    columns = [[vecs[j].get(i, Fraction(0)) for j in range(m)] for i in range(m)]
    if rank_over_q(columns) != m:
        raise DimensionError("the vectors do not form a basis")
    inverse = inverse_over_q(columns)
    frame = []
    for j in range(m):
        dual = linear_form(alg, {k: inverse[j][k] for k in range(m) if inverse[j][k] != 0})
        frame.append((vecs[j], dual, parities[j]))
    return _transgress_with(form, frame)


def random_unimodular_basis(alg: SuperAlgebra, rng: Any, radius: int = 2) -> List[Dict[int, Fraction]]:
    """
    Unit-triangular integer change of basis inside each parity block, then a
    shuffle of each block; the result stays homogeneous and spans the algebra.
    """
    out: List[Dict[int, Fraction]] = []
    for block in (list(alg.even_indices), list(alg.odd_indices)):
        vecs = []
        for pos, i in enumerate(block):
            v = {i: Fraction(1)}
            for j in block[pos + 1:]:
                c = int(rng.integers(-radius, radius + 1))
                if c:
                    v[j] = Fraction(c)
            vecs.append(v)
        order = rng.permutation(len(vecs)) if vecs else []
        out.extend(vecs[int(k)] for k in order)
    return out


# ---------------------------------------------------------------------------
# Invariance and the supertrace invariants
# ---------------------------------------------------------------------------

def is_invariant(form: MultilinearForm, flavor: Literal["s", "a"] = "s") -> bool:
    """L_X F = 0 for every basis element X."""
    return all(lie_action(i, form, flavor).is_zero() for i in range(len(form.algebra)))


def supertrace_invariant_form(alg: SuperAlgebra, k: int, kind: Literal["P", "Lambda"]) -> MultilinearForm:
    """P_k (supersymmetric) or Lambda_k (skew) tabulated on canonical basis keys."""
    if k < 1:
        raise ArityError(f"k must be >= 1, got {k}")
    if kind == "P":
        return MultilinearForm.from_function(alg, k, "sym", lambda key: invariant_P(ArgTuple.from_indices(alg, key)))
    if kind == "Lambda":
        return MultilinearForm.from_function(alg, k, "skew", lambda key: invariant_Lambda(ArgTuple.from_indices(alg, key)))
    raise ValueError(f"unknown invariant {kind!r}")


def transgression_matches(alg: SuperAlgebra, k: int) -> bool:
    """t(P_k) = (-1)^{k-1} k Lambda_{2k-1}."""
    lhs = transgress(supertrace_invariant_form(alg, k, "P"))
    rhs = supertrace_invariant_form(alg, 2 * k - 1, "Lambda").scale((-1) ** (k - 1) * k)
    return lhs == rhs


def bracket_form_pullback(alg: SuperAlgebra, form: MultilinearForm, x: VectorLike, y: VectorLike) -> Fraction:
    """-phi([X, Y]) for a 1-form phi; equals d phi(X, Y)."""
    if form.arity != 1:
        raise ArityError("expected a 1-form")
    u, _ = as_vector(alg, x)
    v, _ = as_vector(alg, y)
    br = alg.bracket_vectors(u, v)
    return -sum((c * form.evaluate((i,)) for i, c in br.items()), Fraction(0))
