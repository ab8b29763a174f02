# superal/cohomology/forms.py
"""
Multilinear forms on a SuperAlgebra, stored as canonical coefficient tables.

A form of variance "skew" satisfies F(X_s) = sgn(s) eps(s; X) F(X) and is kept
on keys with strictly increasing even indices followed by non-decreasing odd
ones; "sym" drops sgn(s) and swaps the roles (non-decreasing even, strictly
increasing odd). "none" keeps a full table. Basis indices are ordered even
first, so a canonical key is just a sorted tuple without forbidden repeats.

The Z2 degree f of a homogeneous form is fixed by its support: a key K can
only carry a nonzero coefficient when x_K + f is even.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Any, Callable, Dict, Iterable, Iterator, List, Literal, Mapping, Optional, Sequence, Tuple, Union

from superal.algebra.graded_core import SuperAlgebra, SuperMatrix, format_scalar, gl_basis, gl_index
from superal.core.errors import ArityError, DimensionError, ParityError, VarianceError
from superal.identities.superpoly import perm_sign, super_sign

Variance = Literal["sym", "skew", "none"]
Key = Tuple[int, ...]
Vector = Mapping[int, Fraction]
VectorLike = Union[int, Mapping[int, Any], SuperMatrix]


# ---------------------------------------------------------------------------
# Canonical keys
# ---------------------------------------------------------------------------

def _repeat_allowed(parity: int, variance: Variance) -> bool:
    if variance == "skew":
        return parity == 1
    if variance == "sym":
        return parity == 0
    return True


def canonical_key(parities: Sequence[int], key: Sequence[int], variance: Variance) -> Optional[Tuple[Key, int]]:
    """
    (canonical key, sign) with F(key) = sign * F(canonical key), or None when
    the key repeats an index the variance forbids (the value is then 0).
    """
    key = tuple(key)
    if variance == "none":
        return key, 1
    order = sorted(range(len(key)), key=key.__getitem__)
    canon = tuple(key[i] for i in order)
    for a, b in zip(canon, canon[1:]):
        if a == b and not _repeat_allowed(parities[a], variance):
            return None
    # key[i] = canon[perm[i]]
    perm = [0] * len(key)
    for j, i in enumerate(order):
        perm[i] = j
    par = [parities[b] for b in canon]
    sign = super_sign(perm, par)
    if variance == "skew":
        sign *= perm_sign(perm)
    return canon, sign


def canonical_keys(parities: Sequence[int], k: int, variance: Variance) -> Iterator[Key]:
    """All canonical keys of length k in lexicographic order."""
    n = len(parities)

    def rec(start: int, prefix: Key) -> Iterator[Key]:
        if len(prefix) == k:
            yield prefix
            return
        for b in range(start, n):
            step = 0 if _repeat_allowed(parities[b], variance) else 1
            yield from rec(b + step, prefix + (b,))

    if variance == "none":
        yield from product(range(n), repeat=k)
        return
    yield from rec(0, ())


# ---------------------------------------------------------------------------
# Forms
# ---------------------------------------------------------------------------

class MultilinearForm:
    """Immutable k-linear form on ``algebra`` with exact coefficients."""

    __slots__ = ("algebra", "arity", "variance", "_table")

    def __init__(self, algebra: SuperAlgebra, arity: int, variance: Variance, coefficients: Mapping[Sequence[int], Any]) -> None:
        if arity < 0:
            raise ArityError("negative arity")
        if variance not in ("sym", "skew", "none"):
            raise VarianceError(f"unknown variance {variance!r}")
        table: Dict[Key, Fraction] = {}
        for key, c in coefficients.items():
            key = tuple(key)
            if len(key) != arity:
                raise ArityError(f"key {key} in a form of arity {arity}")
            c = Fraction(c)
            if c == 0:
                continue
            if variance != "none":
                canon = canonical_key(algebra.parities, key, variance)
                if canon is None or canon[0] != key:
                    raise VarianceError(f"key {key} is not canonical for {variance} forms")
            table[key] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "variance", variance)
        object.__setattr__(self, "_table", table)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("MultilinearForm is immutable")

    # --- construction -----------------------------------------------------
    @classmethod
    def zero(cls, algebra: SuperAlgebra, arity: int, variance: Variance = "skew") -> "MultilinearForm":
        return cls(algebra, arity, variance, {})

    @classmethod
    def constant(cls, algebra: SuperAlgebra, c: Any, variance: Variance = "skew") -> "MultilinearForm":
        return cls(algebra, 0, variance, {(): c})

    @classmethod
    def from_function(
        cls, algebra: SuperAlgebra, arity: int, variance: Variance, fn: Callable[[Key], Any]
    ) -> "MultilinearForm":
        """Tabulate fn on every canonical key."""
        return cls(algebra, arity, variance, {k: fn(k) for k in canonical_keys(algebra.parities, arity, variance)})

    # --- inspection -------------------------------------------------------
    @property
    def coefficients(self) -> Dict[Key, Fraction]:
        return dict(self._table)

    def items(self) -> Iterable[Tuple[Key, Fraction]]:
        return self._table.items()

    def __len__(self) -> int:
        return len(self._table)

    def is_zero(self) -> bool:
        return not self._table

    @property
    def z2(self) -> Optional[int]:
        """Z2 degree f, 0 for the zero form, None when the support mixes degrees."""
        par = self.algebra.parities
        degrees = {sum(par[b] for b in k) % 2 for k in self._table}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    @property
    def f(self) -> int:
        f = self.z2
        if f is None:
            raise ParityError("form is not homogeneous; split it with homogeneous_parts()")
        return f

    def homogeneous_parts(self) -> List["MultilinearForm"]:
        par = self.algebra.parities
        parts: Dict[int, Dict[Key, Fraction]] = {}
        for k, c in self._table.items():
            parts.setdefault(sum(par[b] for b in k) % 2, {})[k] = c
        return [MultilinearForm(self.algebra, self.arity, self.variance, t) for _, t in sorted(parts.items())]

    def compatible(self, variance: Variance) -> bool:
        return self.arity <= 1 or self.variance == variance

    def with_variance(self, variance: Variance) -> "MultilinearForm":
        """Relabel a form of arity <= 1, where every variance coincides."""
        if self.variance == variance:
            return self
        if self.arity > 1:
            raise VarianceError(f"cannot relabel a {self.variance} {self.arity}-form as {variance}")
        return MultilinearForm(self.algebra, self.arity, variance, self._table)

    # --- evaluation -------------------------------------------------------
    def evaluate(self, indices: Sequence[int]) -> Fraction:
        """Value at a tuple of basis elements."""
        if len(indices) != self.arity:
            raise ArityError(f"{self.arity}-form evaluated on {len(indices)} arguments")
        canon = canonical_key(self.algebra.parities, indices, self.variance)
        if canon is None:
            return Fraction(0)
        key, sign = canon
        c = self._table.get(key)
        return sign * c if c is not None else Fraction(0)

    def evaluate_vectors(self, vectors: Sequence[VectorLike]) -> Fraction:
        """Value at homogeneous elements given as coordinates, basis indices or matrices."""
        vecs = [as_vector(self.algebra, v)[0] for v in vectors]
        if len(vecs) != self.arity:
            raise ArityError(f"{self.arity}-form evaluated on {len(vecs)} arguments")
        total = Fraction(0)

        def rec(pos: int, coef: Fraction, prefix: Key) -> None:
            nonlocal total
            if pos == len(vecs):
                total += coef * self.evaluate(prefix)
                return
            for b, c in vecs[pos].items():
                rec(pos + 1, coef * c, prefix + (b,))

        rec(0, Fraction(1), ())
        return total

    def expand(self) -> Dict[Key, Fraction]:
        """Full table over all (not only canonical) basis tuples."""
        if self.variance == "none":
            return dict(self._table)
        out: Dict[Key, Fraction] = {}
        for key in self._table:
            for perm in set(permutations(key)):
                v = self.evaluate(perm)
                if v != 0:
                    out[perm] = v
        return out

    # --- linear structure -------------------------------------------------
    def _check(self, other: "MultilinearForm") -> Variance:
        if other.algebra is not self.algebra:
            raise DimensionError("forms live on different algebras")
        if other.arity != self.arity:
            raise ArityError(f"cannot add forms of arity {self.arity} and {other.arity}")
        if self.arity <= 1:
            return self.variance
        if other.variance != self.variance:
            raise VarianceError(f"cannot add {self.variance} and {other.variance} forms")
        return self.variance

    def __add__(self, other: "MultilinearForm") -> "MultilinearForm":
        variance = self._check(other)
        acc = dict(self._table)
        for k, c in other._table.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return MultilinearForm(self.algebra, self.arity, variance, acc)

    def __sub__(self, other: "MultilinearForm") -> "MultilinearForm":
        return self + other.scale(-1)

    def __neg__(self) -> "MultilinearForm":
        return self.scale(-1)

    def scale(self, c: Any) -> "MultilinearForm":
        c = Fraction(c)
        return MultilinearForm(self.algebra, self.arity, self.variance, {k: c * v for k, v in self._table.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearForm):
            return NotImplemented
        if other.algebra is not self.algebra or other.arity != self.arity:
            return False
        if self.arity > 1 and self.variance != other.variance:
            return False
        return self._table == other._table

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MultilinearForm({self.algebra.name}, arity={self.arity}, {self.variance}, {len(self._table)} keys)"


def sum_forms(forms: Iterable[MultilinearForm], algebra: SuperAlgebra, arity: int, variance: Variance) -> MultilinearForm:
    acc: Dict[Key, Fraction] = {}
    for f in forms:
        if f.algebra is not algebra or f.arity != arity:
            raise ArityError("summands do not match")
        for k, c in f.items():
            acc[k] = acc.get(k, Fraction(0)) + c
    return MultilinearForm(algebra, arity, variance, acc)


# ---------------------------------------------------------------------------
# Vectors and 1-forms
# ---------------------------------------------------------------------------

def as_vector(alg: SuperAlgebra, x: VectorLike) -> Tuple[Dict[int, Fraction], int]:
    """(coordinates, parity) of a homogeneous element."""
    if isinstance(x, int):
        if not 0 <= x < len(alg):
            raise DimensionError(f"basis index {x} out of range")
        return {x: Fraction(1)}, alg.parities[x]
    if isinstance(x, SuperMatrix):
        coords = {k: c for k, c in enumerate(alg.coordinates(x)) if c != 0}
    else:
        coords = {int(k): Fraction(c) for k, c in x.items() if c != 0}
    return coords, alg.vector_parity(coords)


def dual_form(alg: SuperAlgebra, i: int, variance: Variance = "skew") -> MultilinearForm:
    """phi_i with phi_i(b_j) = delta_ij; its Z2 degree is the parity of b_i."""
    return MultilinearForm(alg, 1, variance, {(i,): 1})


def coordinate_form(p: int, q: int, i: int, j: int, variance: Variance = "skew") -> MultilinearForm:
    """M_ij on gl(p,q): M_ij(E_kl) = delta_ik delta_jl."""
    return dual_form(gl_basis(p, q), gl_index(p, q, i, j), variance)


def linear_form(alg: SuperAlgebra, coefficients: Mapping[int, Any], variance: Variance = "skew") -> MultilinearForm:
    return MultilinearForm(alg, 1, variance, {(i,): c for i, c in coefficients.items()})


# ---------------------------------------------------------------------------
# Tensor products, (anti)symmetrization
# ---------------------------------------------------------------------------

def _split_parts(fn: Callable[..., MultilinearForm]) -> Callable[..., MultilinearForm]:
    """Apply a degree-sensitive binary operation on homogeneous parts and add the results."""

    def wrapper(a: MultilinearForm, b: MultilinearForm) -> MultilinearForm:
        if a.z2 is not None and b.z2 is not None:
            return fn(a, b)
        results = [fn(x, y) for x in a.homogeneous_parts() for y in b.homogeneous_parts()]
        if not results:
            return fn(MultilinearForm.zero(a.algebra, a.arity, a.variance), MultilinearForm.zero(b.algebra, b.arity, b.variance))
        out = results[0]
        for r in results[1:]:
            out = out + r
        return out

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def tensor(a: MultilinearForm, b: MultilinearForm) -> MultilinearForm:
    """(F (x) G)(X_1..X_p+q) = F(X_1..X_p) G(X_p+1..X_p+q)."""
    if a.algebra is not b.algebra:
        raise DimensionError("forms live on different algebras")
    ea, eb = a.expand(), b.expand()
    return MultilinearForm(a.algebra, a.arity + b.arity, "none", {ka + kb: ca * cb for ka, ca in ea.items() for kb, cb in eb.items()})


@_split_parts
def super_tensor(a: MultilinearForm, b: MultilinearForm) -> MultilinearForm:
    """(F [x] G)(X) = (-1)^{g(x_1+..+x_p)} F(X_1..X_p) G(X_p+1..)."""
    if a.algebra is not b.algebra:
        raise DimensionError("forms live on different algebras")
    par = a.algebra.parities
    g = b.f
    out: Dict[Key, Fraction] = {}
    for ka, ca in a.expand().items():
        sign = -1 if g and sum(par[i] for i in ka) % 2 else 1
        for kb, cb in b.expand().items():
            out[ka + kb] = sign * ca * cb
    return MultilinearForm(a.algebra, a.arity + b.arity, "none", out)


def _symmetrize(form: MultilinearForm, variance: Variance) -> MultilinearForm:
    par = form.algebra.parities
    k = form.arity
    support = {tuple(sorted(key)) for key in form.expand()}
    out: Dict[Key, Fraction] = {}
    for key in support:
        if canonical_key(par, key, variance) is None:
            continue
        kp = [par[b] for b in key]
        total = Fraction(0)
        for perm in permutations(range(k)):
            sign = super_sign(perm, kp)
            if variance == "skew":
                sign *= perm_sign(perm)
            total += sign * form.evaluate(tuple(key[i] for i in perm))
        out[key] = total
    return MultilinearForm(form.algebra, k, variance, out)


def symmetrize(form: MultilinearForm) -> MultilinearForm:
    """S(F) = sum_s s.F with (s.F)(X) = eps(s; X) F(X_s)."""
    return _symmetrize(form, "sym")


def antisymmetrize(form: MultilinearForm) -> MultilinearForm:
    """A(F) = sum_s sgn(s) eps(s; X) F(X_s)."""
    return _symmetrize(form, "skew")


def omega_sign(parities: Sequence[int]) -> int:
    """(-1)^{Omega(phi, phi)}: one factor -1 per pair i < j of odd entries."""
    odd = sum(1 for x in parities if x)
    return -1 if (odd * (odd - 1) // 2) % 2 else 1


# ---------------------------------------------------------------------------
# Products by shuffles
# ---------------------------------------------------------------------------

def _shuffle_product(a: MultilinearForm, b: MultilinearForm, variance: Variance) -> MultilinearForm:
    if a.algebra is not b.algebra:
        raise DimensionError("forms live on different algebras")
    for f in (a, b):
        if not f.compatible(variance):
            raise VarianceError(f"{'wedge' if variance == 'skew' else 'dot'} needs {variance} forms, got {f.variance}")
    alg = a.algebra
    par = alg.parities
    p, q = a.arity, b.arity
    n = p + q
    g = b.f
    candidates = set()
    for ka in a._table:
        for kb in b._table:
            key = tuple(sorted(ka + kb))
            if canonical_key(par, key, variance) is not None:
                candidates.add(key)
    out: Dict[Key, Fraction] = {}
    for key in candidates:
        kp = [par[x] for x in key]
        total = Fraction(0)
        for left in combinations(range(n), p):
            right = tuple(i for i in range(n) if i not in left)
            perm = left + right
            ka = tuple(key[i] for i in left)
            va = a._table.get(ka)
            if va is None:
                continue
            vb = b._table.get(tuple(key[i] for i in right))
            if vb is None:
                continue
            sign = super_sign(perm, kp)
            if variance == "skew":
                sign *= perm_sign(perm)
            if g and sum(par[x] for x in ka) % 2:
                sign = -sign
            total += sign * va * vb
        out[key] = total
    return MultilinearForm(alg, n, variance, out)


@_split_parts
def wedge(a: MultilinearForm, b: MultilinearForm) -> MultilinearForm:
    """F ^ G = A(F [x] G) / (p! q!), summed over (p,q)-shuffles."""
    return _shuffle_product(a, b, "skew")


@_split_parts
def dot(a: MultilinearForm, b: MultilinearForm) -> MultilinearForm:
    """F . G = S(F [x] G) / (p! q!), summed over (p,q)-shuffles."""
    return _shuffle_product(a, b, "sym")


def wedge_all(forms: Sequence[MultilinearForm], algebra: SuperAlgebra) -> MultilinearForm:
    out = MultilinearForm.constant(algebra, 1, "skew")
    for f in forms:
        out = wedge(out, f)
    return out


def dot_all(forms: Sequence[MultilinearForm], algebra: SuperAlgebra) -> MultilinearForm:
    out = MultilinearForm.constant(algebra, 1, "sym")
    for f in forms:
        out = dot(out, f)
    return out


# ---------------------------------------------------------------------------
# Derivations
# ---------------------------------------------------------------------------

def _insert_first(form: MultilinearForm, x: VectorLike) -> MultilinearForm:
    if form.arity == 0:
        raise ArityError("cannot insert an argument into a constant")
    alg = form.algebra
    vec, xp = as_vector(alg, x)
    out_variance = form.variance
    parts = form.homogeneous_parts() or [form]
    acc: Dict[Key, Fraction] = {}
    for part in parts:
        sign = -1 if (xp * part.f) % 2 else 1
        candidates = set()
        for key in part._table:
            for m, b in enumerate(key):
                if b in vec:
                    candidates.add(key[:m] + key[m + 1:])
        for rest in candidates:
            total = sum((c * part.evaluate((b,) + rest) for b, c in vec.items()), Fraction(0))
            acc[rest] = acc.get(rest, Fraction(0)) + sign * total
    return MultilinearForm(alg, form.arity - 1, out_variance, acc)


def derivation_D(x: VectorLike, form: MultilinearForm) -> MultilinearForm:
    """D_X F(X_1..X_p-1) = (-1)^{xf} F(X, X_1..X_p-1) on supersymmetric forms."""
    if not form.compatible("sym"):
        raise VarianceError("D_X acts on supersymmetric forms")
    return _insert_first(form, x)


def contraction_iota(x: VectorLike, form: MultilinearForm) -> MultilinearForm:
    """iota_X F(X_1..X_p-1) = (-1)^{xf} F(X, X_1..X_p-1) on skew forms."""
    if not form.compatible("skew"):
        raise VarianceError("iota_X acts on skew supersymmetric forms")
    return _insert_first(form, x)


@lru_cache(maxsize=None)
def _bracket_sources(alg: SuperAlgebra) -> Dict[int, Tuple[Tuple[int, int], ...]]:
    """c -> all (a, b) with a nonzero b_c-component in [b_a, b_b]."""
    out: Dict[int, List[Tuple[int, int]]] = {}
    m = len(alg)
    for a in range(m):
        for b in range(m):
            for c in alg.bracket_coords(a, b):
                out.setdefault(c, []).append((a, b))
    return {c: tuple(v) for c, v in out.items()}


def lie_action(x: VectorLike, form: MultilinearForm, flavor: Literal["s", "a"]) -> MultilinearForm:
    """
    L_X F(X_1..X_n) = -(-1)^{xf} sum_j (-1)^{x(x_1+..+x_j-1)} F(X_1, .., [X, X_j], .., X_n);
    flavor "s" on supersymmetric forms, "a" on skew ones.
    """
    if flavor not in ("s", "a"):
        raise ValueError(f"unknown flavor {flavor!r}")
    variance: Variance = "sym" if flavor == "s" else "skew"
    if not form.compatible(variance):
        raise VarianceError(f"L^{flavor} needs a {variance} form, got {form.variance}")
    alg = form.algebra
    vec, xp = as_vector(alg, x)
    par = alg.parities
    if form.arity == 0:
        return MultilinearForm.zero(alg, 0, form.variance)
    sources = _bracket_sources(alg)
    acc: Dict[Key, Fraction] = {}
    for part in form.homogeneous_parts():
        outer = -1 if (xp * part.f) % 2 else 1
        outer = -outer
        candidates = set()
        for key in part._table:
            for m, c in enumerate(key):
                for a, b in sources.get(c, ()):
                    if a in vec:
                        cand = tuple(sorted(key[:m] + (b,) + key[m + 1:]))
                        if canonical_key(par, cand, form.variance) is not None:
                            candidates.add(cand)
        for key in candidates:
            total = Fraction(0)
            prefix = 0
            for j, b in enumerate(key):
                sign = -1 if (xp * prefix) % 2 else 1
                image = alg.bracket_vectors(vec, {b: Fraction(1)})
                for c, coef in image.items():
                    total += sign * coef * part.evaluate(key[:j] + (c,) + key[j + 1:])
                prefix += par[b]
            if total != 0:
                acc[key] = acc.get(key, Fraction(0)) + outer * total
    return MultilinearForm(alg, form.arity, form.variance, acc)


# ---------------------------------------------------------------------------
# Random forms and dumps
# ---------------------------------------------------------------------------

def random_form(
    alg: SuperAlgebra, arity: int, variance: Variance, rng: Any, parity: int = 0, radius: int = 3, density: float = 0.5
) -> MultilinearForm:
    """Random homogeneous form of Z2 degree ``parity`` with small integer coefficients."""
    par = alg.parities
    table: Dict[Key, int] = {}
    for key in canonical_keys(par, arity, variance):
        if (sum(par[b] for b in key) + parity) % 2:
            continue
        if rng.random() < density:
            table[key] = int(rng.integers(-radius, radius + 1))
    return MultilinearForm(alg, arity, variance, table)


def render_form_text(form: MultilinearForm) -> str:
    z2 = form.z2
    head = f"form on {form.algebra.name}: arity={form.arity} variance={form.variance} z2={'mixed' if z2 is None else z2} keys={len(form)}"
    lines = [head]
    for key in sorted(form._table):
        lines.append(f"  ({' '.join(map(str, key))}) : {format_scalar(form._table[key])}")
    return "\n".join(lines) + "\n"
