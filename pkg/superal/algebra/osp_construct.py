# superal/algebra/osp_construct.py
"""
osp(1,2n) built two ways.

* ``osp_basis``: integer solutions of X^st G + G X = 0 in gl(1,2n), where
  G = (1) + [[0, I], [-I, 0]].
* ``weyl_realization``: the twisted adjoint action of the Weyl algebra
  elements of degree 1 and 2 on V = C.1 + span{p_i, q_i}.

Odd coordinates of V are ordered (p_1..p_n, q_1..q_n) in both.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from superal.algebra.graded_core import (
    GradedDim,
    SuperAlgebra,
    SuperMatrix,
    nullspace_over_q,
    supertranspose,
)
from superal.core.errors import AlignmentError, DimensionError, ParityError, WeylDegreeError
from superal.utils.logging_setup import get_logger

log = get_logger("superal.algebra")

Monomial = Tuple[int, ...]


def _space(n: int) -> GradedDim:
    if n < 1:
        raise DimensionError(f"osp(1,2n) needs n >= 1, got {n}")
    return GradedDim(1, 2 * n)


# ---------------------------------------------------------------------------
# Weyl algebra, degree <= 2
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    """
    Element of the Weyl algebra A_n as a table of normal-ordered monomials.

    Generators are numbered 0..2n-1: g < n is p_g, g >= n is q_{g-n}.
    A monomial is a sorted tuple of generator numbers, so every p precedes
    every q; () is the constant 1.
    """
    n: int
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    @classmethod
    def from_dict(cls, n: int, table: Mapping[Monomial, Any]) -> "WeylElement":
        clean = {tuple(sorted(k)): Fraction(v) for k, v in table.items()}
        return cls(n, tuple(sorted((k, v) for k, v in clean.items() if v != 0)))

    @classmethod
    def one(cls, n: int) -> "WeylElement":
        return cls.from_dict(n, {(): 1})

    @classmethod
    def p(cls, n: int, i: int) -> "WeylElement":
        return cls.from_dict(n, {(i,): 1})

    @classmethod
    def q(cls, n: int, i: int) -> "WeylElement":
        return cls.from_dict(n, {(n + i,): 1})

    @classmethod
    def monomial(cls, n: int, key: Iterable[int]) -> "WeylElement":
        return cls.from_dict(n, {tuple(key): 1})

    def as_dict(self) -> Dict[Monomial, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(k) for k, _ in self.terms), default=0)

    @property
    def parity(self) -> int:
        ps = {len(k) % 2 for k, _ in self.terms}
        if len(ps) > 1:
            raise ParityError("Weyl element mixes even and odd degrees")
        return ps.pop() if ps else 0

    def _combine(self, other: "WeylElement", sign: int) -> "WeylElement":
        if other.n != self.n:
            raise DimensionError("Weyl elements over different n")
        acc = self.as_dict()
        for k, v in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + sign * v
        return WeylElement.from_dict(self.n, acc)

    def __add__(self, other: "WeylElement") -> "WeylElement":
        return self._combine(other, 1)

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self._combine(other, -1)

    def scale(self, c: Any) -> "WeylElement":
        return WeylElement.from_dict(self.n, {k: c * v for k, v in self.terms})

    def label(self) -> str:
        names = [f"p{g + 1}" if g < self.n else f"q{g - self.n + 1}" for g in range(2 * self.n)]
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.terms:
            mono = "*".join(names[g] for g in k) or "1"
            parts.append(f"{v}*{mono}" if v != 1 else mono)
        return " + ".join(parts)


@lru_cache(maxsize=4096)
def _normal_order(n: int, word: Tuple[int, ...]) -> Tuple[Tuple[Monomial, int], ...]:
    """Normal-ordered expansion of a word in the generators, using q_i p_i = p_i q_i - 1."""
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        if a > b:
            swapped = word[:pos] + (b, a) + word[pos + 2:]
            out: Dict[Monomial, int] = dict(_normal_order(n, swapped))
            if a == b + n:
                for k, v in _normal_order(n, word[:pos] + word[pos + 2:]):
                    out[k] = out.get(k, 0) - v
            return tuple((k, v) for k, v in out.items() if v != 0)
    return ((word, 1),)


def weyl_product(u: WeylElement, v: WeylElement, *, in_bracket: bool = False) -> WeylElement:
    """
    Associative product, reduced to normal order. Outside a bracket the result
    must stay within degree 2.
    """
    if u.n != v.n:
        raise DimensionError("Weyl elements over different n")
    acc: Dict[Monomial, Fraction] = {}
    for ku, cu in u.terms:
        for kv, cv in v.terms:
            for k, c in _normal_order(u.n, ku + kv):
                acc[k] = acc.get(k, Fraction(0)) + cu * cv * c
    out = WeylElement.from_dict(u.n, acc)
    if not in_bracket and out.degree > 2:
        raise WeylDegreeError(f"product has degree {out.degree} > 2")
    return out


def weyl_commutator(u: WeylElement, v: WeylElement) -> WeylElement:
    """Ordinary commutator uv - vu, the Lie bracket [u, v]_L."""
    out = weyl_product(u, v, in_bracket=True) - weyl_product(v, u, in_bracket=True)
    if out.degree > 2:
        raise WeylDegreeError(f"bracket has degree {out.degree} > 2")
    return out


def weyl_twisted_bracket(a: WeylElement, b: WeylElement) -> WeylElement:
    """ad'A(B) = AB - (-1)^{a(b+1)} BA."""
    sign = -1 if (a.parity * (b.parity + 1)) % 2 else 1
    out = weyl_product(a, b, in_bracket=True) - weyl_product(b, a, in_bracket=True).scale(sign)
    if out.degree > 2:
        raise WeylDegreeError(f"twisted bracket has degree {out.degree} > 2")
    return out


def weyl_space_basis(n: int) -> List[WeylElement]:
    """V = (1, p_1..p_n, q_1..q_n)."""
    return [WeylElement.one(n)] + [WeylElement.monomial(n, (g,)) for g in range(2 * n)]


def weyl_h_basis(n: int) -> List[WeylElement]:
    """h: p_ip_j (i<=j), q_iq_j (i<=j), p_iq_j, then p_1..p_n, q_1..q_n."""
    pp = [WeylElement.monomial(n, (i, j)) for i in range(n) for j in range(i, n)]
    qq = [WeylElement.monomial(n, (n + i, n + j)) for i in range(n) for j in range(i, n)]
    pq = [WeylElement.monomial(n, (i, n + j)) for i in range(n) for j in range(n)]
    odd = [WeylElement.monomial(n, (g,)) for g in range(2 * n)]
    return pp + qq + pq + odd


def _space_coordinates(n: int, w: WeylElement) -> List[Fraction]:
    if w.degree > 1:
        raise AlignmentError(f"ad' image {w.label()} leaves V")
    vec = [Fraction(0)] * (2 * n + 1)
    for k, c in w.terms:
        vec[0 if not k else 1 + k[0]] += c
    return vec


def twisted_action_matrix(a: WeylElement) -> SuperMatrix:
    """Matrix of ad'A on V; column j is the image of the j-th basis vector."""
    n = a.n
    cols = [_space_coordinates(n, weyl_twisted_bracket(a, v)) for v in weyl_space_basis(n)]
    rows = [[cols[j][i] for j in range(2 * n + 1)] for i in range(2 * n + 1)]
    return SuperMatrix.from_rows(_space(n), rows, "even" if a.parity == 0 else "odd")


@lru_cache(maxsize=None)
def weyl_realization(n: int) -> SuperAlgebra:
    dim = _space(n)
    basis = tuple(twisted_action_matrix(a) for a in weyl_h_basis(n))
    alg = SuperAlgebra(f"weyl(1,{2 * n})", dim, basis)
    log.info("built %s: dim %d (%d|%d)", alg.name, len(alg), alg.dim_even, alg.dim_odd)
    return alg


# ---------------------------------------------------------------------------
# Form realization
# ---------------------------------------------------------------------------

def symplectic_form(n: int) -> SuperMatrix:
    """G = (1) + [[0, I_n], [-I_n, 0]]."""
    size = 2 * n + 1
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = 1
    for i in range(n):
        rows[1 + i][1 + n + i] = 1
        rows[1 + n + i][1 + i] = -1
    return SuperMatrix.from_rows(_space(n), rows, "even")


def _membership_defect(x: SuperMatrix, g: SuperMatrix) -> SuperMatrix:
    return (supertranspose(x) @ g) + (g @ x)


def membership_check(x: SuperMatrix, n: int) -> bool:
    """True iff X^st G + G X = 0."""
    if x.dim != _space(n):
        raise DimensionError(f"expected a {2 * n + 1}x{2 * n + 1} matrix, got {x.dim.size}x{x.dim.size}")
    return _membership_defect(x, symplectic_form(n)).is_zero()


def _osp_matrices(n: int) -> Tuple[List[List[List[int]]], List[List[List[int]]]]:
    size = 2 * n + 1

    def blank() -> List[List[int]]:
        return [[0] * size for _ in range(size)]

    p_ = lambda i: 1 + i  # noqa: E731
    q_ = lambda i: 1 + n + i  # noqa: E731

    even: List[List[List[int]]] = []
    for i in range(n):
        m = blank()
        m[p_(i)][p_(i)] = 1
        m[q_(i)][q_(i)] = -1
        even.append(m)
    for i, j in product(range(n), repeat=2):
        if i != j:
            m = blank()
            m[p_(i)][p_(j)] = 1
            m[q_(j)][q_(i)] = -1
            even.append(m)
    for i in range(n):
        for j in range(i, n):
            m = blank()
            m[p_(i)][q_(j)] = 1
            m[p_(j)][q_(i)] = 1
            even.append(m)
    for i in range(n):
        for j in range(i, n):
            m = blank()
            m[q_(i)][p_(j)] = 1
            m[q_(j)][p_(i)] = 1
            even.append(m)

    # odd: column c = e_k, row b = -c^T J
    odd: List[List[List[int]]] = []
    for k in range(n):
        m = blank()
        m[p_(k)][0] = 1
        m[0][q_(k)] = -1
        odd.append(m)
    for k in range(n):
        m = blank()
        m[q_(k)][0] = 1
        m[0][p_(k)] = 1
        odd.append(m)
    return even, odd


def _solution_dimension(n: int) -> int:
    """Dimension of {X : X^st G + G X = 0} in gl(1,2n), by exact nullspace."""
    dim = _space(n)
    size = dim.size
    g = symplectic_form(n)
    columns = []
    for i, j in product(range(size), repeat=2):
        e = SuperMatrix.elementary(dim, i, j)
        columns.append(_membership_defect(e, g).flat())
    system = [list(r) for r in zip(*columns)]
    return len(nullspace_over_q(system))


@lru_cache(maxsize=None)
def osp_basis(n: int) -> SuperAlgebra:
    dim = _space(n)
    even, odd = _osp_matrices(n)
    basis = tuple(SuperMatrix.from_rows(dim, m, "even") for m in even) + tuple(
        SuperMatrix.from_rows(dim, m, "odd") for m in odd
    )
    g = symplectic_form(n)
    bad = [k for k, b in enumerate(basis) if not _membership_defect(b, g).is_zero()]
    if bad:
        raise AlignmentError(f"osp(1,{2 * n}) basis elements {bad} violate X^st G + G X = 0")
    expected = _solution_dimension(n)
    if expected != len(basis):
        raise AlignmentError(f"osp(1,{2 * n}): solution space has dimension {expected}, basis has {len(basis)}")
    alg = SuperAlgebra(f"osp(1,{2 * n})", dim, basis, form_matrix=g)
    log.info("built %s: dim %d (%d|%d)", alg.name, len(alg), alg.dim_even, alg.dim_odd)
    return alg


# ---------------------------------------------------------------------------
# Cartan elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CartanElement:
    alpha: Tuple[Fraction, ...]

    @classmethod
    def of(cls, alpha: Sequence[Any]) -> "CartanElement":
        if not alpha:
            raise DimensionError("Cartan element needs n >= 1 coordinates")
        return cls(tuple(Fraction(a) for a in alpha))

    @property
    def n(self) -> int:
        return len(self.alpha)

    def matrix(self) -> SuperMatrix:
        n = self.n
        diag = [Fraction(0)] + list(self.alpha) + [-a for a in self.alpha]
        rows = [[diag[i] if i == j else 0 for j in range(2 * n + 1)] for i in range(2 * n + 1)]
        return SuperMatrix.from_rows(_space(n), rows, "even")


def cartan_element(alpha: Sequence[Any]) -> SuperMatrix:
    """H(alpha) = diag(0, alpha_1..alpha_n, -alpha_1..-alpha_n)."""
    return CartanElement.of(alpha).matrix()


# ---------------------------------------------------------------------------
# Cross-checks between the two realizations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylAlignment:
    """T = diag(1, I, nu I) with T G T = G_W, G_W the normalized ad'-invariant form."""
    n: int
    nu: Fraction
    invariant_form: SuperMatrix
    transform: SuperMatrix
    inverse: SuperMatrix

    def apply(self, m: SuperMatrix) -> SuperMatrix:
        out = self.transform @ m @ self.inverse
        return SuperMatrix(out.dim, out.entries, m.parity)


def _invariant_forms(alg: SuperAlgebra) -> List[Tuple[Fraction, ...]]:
    """All G with M^st G + G M = 0 for every basis M, flattened row-major."""
    size = alg.dim.size
    rows: List[List[Fraction]] = []
    for m in alg.basis:
        st = supertranspose(m).entries
        e = m.entries
        for i, j in product(range(size), repeat=2):
            row = [Fraction(0)] * (size * size)
            for k in range(size):
                row[k * size + j] += st[i][k]
                row[i * size + k] += e[k][j]
            rows.append(row)
    return nullspace_over_q(rows)


@lru_cache(maxsize=None)
def weyl_alignment(n: int) -> WeylAlignment:
    weyl = weyl_realization(n)
    forms = _invariant_forms(weyl)
    if len(forms) != 1:
        raise AlignmentError(f"expected a unique invariant form on V, found {len(forms)}")
    size = 2 * n + 1
    flat = forms[0]
    if flat[0] == 0:
        raise AlignmentError("invariant form vanishes on the even line")
    flat = tuple(x / flat[0] for x in flat)
    nu = flat[1 * size + 1 + n]
    g = symplectic_form(n)
    expected = [g.entries[i][j] * (1 if i == 0 and j == 0 else nu) for i in range(size) for j in range(size)]
    if nu == 0 or list(flat) != expected:
        raise AlignmentError("invariant form of the Weyl realization is not (1) + nu J")
    dim = _space(n)
    diag = [Fraction(1)] + [Fraction(1)] * n + [nu] * n
    t = SuperMatrix.from_rows(dim, [[diag[i] if i == j else 0 for j in range(size)] for i in range(size)], "even")
    t_inv = SuperMatrix.from_rows(dim, [[1 / diag[i] if i == j else 0 for j in range(size)] for i in range(size)], "even")
    form = SuperMatrix.from_rows(dim, [flat[i * size:(i + 1) * size] for i in range(size)], "even")
    alignment = WeylAlignment(n, nu, form, t, t_inv)

    osp = osp_basis(n)
    for k, m in enumerate(weyl.basis):
        aligned = alignment.apply(m)
        if not membership_check(aligned, n) or not osp.contains(aligned):
            raise AlignmentError(f"aligned Weyl basis element {k} is not in {osp.name}")
    log.debug("weyl alignment n=%d: nu=%s", n, nu)
    return alignment


def weyl_span_matches(n: int) -> bool:
    """The aligned Weyl realization spans exactly osp_basis(n)."""
    try:
        alignment = weyl_alignment(n)
    except AlignmentError:
        return False
    weyl, osp = weyl_realization(n), osp_basis(n)
    return len(weyl) == len(osp) and all(osp.contains(alignment.apply(m)) for m in weyl.basis)


def space_form_matrix(n: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """F on V: F(1,1) = -2, F(u,v) = [u,v]_L on odd vectors."""
    basis = weyl_space_basis(n)
    size = 2 * n + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    rows[0][0] = Fraction(-2)
    for i in range(1, size):
        for j in range(1, size):
            c = weyl_commutator(basis[i], basis[j])
            rows[i][j] = c.as_dict().get((), Fraction(0))
    return tuple(tuple(r) for r in rows)


def invariant_form_check(n: int) -> bool:
    """F(ad'A x, y) + (-1)^{a x} F(x, ad'A y) = 0 for basis A of h and x, y of V."""
    f = space_form_matrix(n)
    size = 2 * n + 1
    par = [0] + [1] * (2 * n)

    def form(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return sum((u[i] * f[i][j] * v[j] for i in range(size) for j in range(size)), Fraction(0))

    for a, m in zip(weyl_h_basis(n), weyl_realization(n).basis):
        cols = [[m.entries[i][j] for i in range(size)] for j in range(size)]
        for x, y in product(range(size), repeat=2):
            ex = [Fraction(int(i == x)) for i in range(size)]
            ey = [Fraction(int(i == y)) for i in range(size)]
            sign = -1 if (a.parity * par[x]) % 2 else 1
            if form(cols[x], ey) + sign * form(ex, cols[y]) != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Nilpotency statements
# ---------------------------------------------------------------------------

def cube_vanishes(x: SuperMatrix) -> bool:
    return (x @ x @ x).is_zero()


def ad_is_nilpotent(alg: SuperAlgebra, coords: Mapping[int, Any], exponent: Optional[int] = None) -> bool:
    """(ad X)^e = 0 with e = dim g unless given."""
    ad = alg.adjoint_matrix(coords)
    m = len(ad)
    e = exponent if exponent is not None else m
    power = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    for _ in range(e):
        power = [[sum((power[i][k] * ad[k][j] for k in range(m)), Fraction(0)) for j in range(m)] for i in range(m)]
        if all(x == 0 for r in power for x in r):
            return True
    return all(x == 0 for r in power for x in r)


def random_odd_element(alg: SuperAlgebra, rng: Any, radius: int = 3) -> Dict[int, Fraction]:
    """Random rational combination of the odd basis elements, as coordinates."""
    out: Dict[int, Fraction] = {}
    for k in alg.odd_indices:
        num = int(rng.integers(-radius, radius + 1))
        den = int(rng.integers(1, radius + 1))
        out[k] = Fraction(num, den)
    return out
