# superal/algebra/graded_core.py
"""
Exact scalars, Z2-graded matrices, and concrete matrix Lie superalgebras.

Matrices act on V = V0 + V1 with the even coordinates first: indices
0..p-1 are even, p..p+q-1 are odd. A block matrix [[A, B], [C, D]] is
even when B = C = 0 and odd when A = D = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Literal, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp

from superal.core.errors import DimensionError, ModulusMismatchError, NotInSpanError, ParityError
from superal.utils.logging_setup import get_logger

log = get_logger("superal.algebra")

__all__ = [
    "ModInt",
    "Scalar",
    "GradedDim",
    "SuperMatrix",
    "SuperAlgebra",
    "to_scalar",
    "reduce_scalar",
    "format_scalar",
    "supertrace",
    "superbracket",
    "twisted_bracket",
    "bilinear_B",
    "supertranspose",
    "gl_basis",
    "gl_index",
    "adjoint_matrix",
    "random_homogeneous",
    "supertranspose_automorphism_check",
    "algebra_to_dict",
    "render_algebra_text",
]

Parity = Literal["even", "odd", "mixed"]


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False, slots=True)
class ModInt:
    """Element of the prime field Z/pZ, p > 2."""
    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus <= 2:
            raise ValueError(f"prime modulus must exceed 2, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other: Any) -> "ModInt":
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(f"cannot mix Z/{self.modulus} and Z/{other.modulus}")
            return other
        if isinstance(other, (int, Fraction)):
            return reduce_scalar(other, self.modulus)
        return NotImplemented

    def __add__(self, other: Any) -> "ModInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.residue + o.residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "ModInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.residue - o.residue, self.modulus)

    def __rsub__(self, other: Any) -> "ModInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o.residue - self.residue, self.modulus)

    def __mul__(self, other: Any) -> "ModInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.residue * o.residue, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "ModInt":
        return ModInt(-self.residue, self.modulus)

    def __truediv__(self, other: Any) -> "ModInt":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.residue == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return ModInt(self.residue * pow(o.residue, -1, self.modulus), self.modulus)

    def __pow__(self, k: int) -> "ModInt":
        return ModInt(pow(self.residue, k, self.modulus), self.modulus)

    def __eq__(self, other: Any) -> bool:
        try:
            o = self._coerce(other)
        except (ModulusMismatchError, ValueError):
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.residue == o.residue

    def __hash__(self) -> int:
        return hash((self.residue, self.modulus))

    def __bool__(self) -> bool:
        return self.residue != 0

    def __repr__(self) -> str:
        return f"ModInt({self.residue}, {self.modulus})"

    def __str__(self) -> str:
        return str(self.residue)


Scalar = Union[Fraction, ModInt]


def to_scalar(x: Union[int, Fraction, str, ModInt]) -> Scalar:
    if isinstance(x, ModInt):
        return x
    return Fraction(x)


def reduce_scalar(x: Union[int, Fraction, ModInt], modulus: int) -> ModInt:
    """Image of an exact rational in Z/pZ; the denominator must be a unit."""
    if isinstance(x, ModInt):
        if x.modulus != modulus:
            raise ModulusMismatchError(f"cannot reduce Z/{x.modulus} value mod {modulus}")
        return x
    q = Fraction(x)
    if q.denominator % modulus == 0:
        raise ZeroDivisionError(f"denominator {q.denominator} vanishes mod {modulus}")
    return ModInt(q.numerator * pow(q.denominator, -1, modulus), modulus)


def format_scalar(x: Any) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


# ---------------------------------------------------------------------------
# Graded dimension and matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedDim:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise DimensionError(f"invalid graded dimension ({self.p}|{self.q})")

    @property
    def size(self) -> int:
        return self.p + self.q

    def parity(self, i: int) -> int:
        return 0 if i < self.p else 1


Rows = Tuple[Tuple[Any, ...], ...]


def _matmul(a: Rows, b: Rows) -> Rows:
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _block_parity(dim: GradedDim, rows: Rows) -> Parity:
    diag = off = False
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x != 0:
                if dim.parity(i) == dim.parity(j):
                    diag = True
                else:
                    off = True
    if diag and off:
        return "mixed"
    return "odd" if off else "even"


@dataclass(frozen=True)
class SuperMatrix:
    """Square matrix on a Z2-graded space, block order even-first."""
    dim: GradedDim
    entries: Rows
    parity: Parity = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        n = self.dim.size
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise DimensionError(f"expected a {n}x{n} matrix for graded dimension ({self.dim.p}|{self.dim.q})")
        actual = _block_parity(self.dim, self.entries)
        if self.parity is None:
            object.__setattr__(self, "parity", actual)
        elif self.parity not in ("even", "odd", "mixed"):
            raise ParityError(f"unknown parity {self.parity!r}")
        elif self.parity != "mixed" and actual not in (self.parity,) and not self.is_zero():
            raise ParityError(f"matrix declared {self.parity} has {actual} block structure")

    # --- construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, dim: GradedDim, rows: Iterable[Iterable[Any]], parity: Optional[Parity] = None) -> "SuperMatrix":
        entries = tuple(tuple(x if isinstance(x, ModInt) else Fraction(x) for x in row) for row in rows)
        return cls(dim, entries, parity)  # type: ignore[arg-type]

    @classmethod
    def zero(cls, dim: GradedDim, parity: Parity = "even") -> "SuperMatrix":
        n = dim.size
        return cls(dim, tuple((Fraction(0),) * n for _ in range(n)), parity)

    @classmethod
    def identity(cls, dim: GradedDim) -> "SuperMatrix":
        n = dim.size
        return cls(dim, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), "even")

    @classmethod
    def elementary(cls, dim: GradedDim, i: int, j: int) -> "SuperMatrix":
        n = dim.size
        rows = [[0] * n for _ in range(n)]
        rows[i][j] = 1
        return cls.from_rows(dim, rows, "even" if dim.parity(i) == dim.parity(j) else "odd")

    # --- structure --------------------------------------------------------
    @property
    def z2(self) -> int:
        if self.parity == "mixed":
            raise ParityError("operation requires a homogeneous matrix")
        return 0 if self.parity == "even" else 1

    @property
    def homogeneous(self) -> bool:
        return self.parity != "mixed"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def blocks(self) -> Tuple[Rows, Rows, Rows, Rows]:
        p = self.dim.p
        e = self.entries
        a = tuple(row[:p] for row in e[:p])
        b = tuple(row[p:] for row in e[:p])
        c = tuple(row[:p] for row in e[p:])
        d = tuple(row[p:] for row in e[p:])
        return a, b, c, d

    def homogeneous_parts(self) -> Tuple["SuperMatrix", "SuperMatrix"]:
        """Split into (even part, odd part)."""
        dim = self.dim
        zero = Fraction(0)
        ev = tuple(tuple(x if dim.parity(i) == dim.parity(j) else zero for j, x in enumerate(r)) for i, r in enumerate(self.entries))
        od = tuple(tuple(zero if dim.parity(i) == dim.parity(j) else x for j, x in enumerate(r)) for i, r in enumerate(self.entries))
        return SuperMatrix(dim, ev, "even"), SuperMatrix(dim, od, "odd")

    # --- arithmetic -------------------------------------------------------
    def _check(self, other: "SuperMatrix") -> None:
        if self.dim != other.dim:
            raise DimensionError(f"graded dimensions differ: {self.dim} vs {other.dim}")

    def _sum_parity(self, other: "SuperMatrix") -> Optional[Parity]:
        return self.parity if self.parity == other.parity else None

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check(other)
        rows = tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return SuperMatrix(self.dim, rows, self._sum_parity(other))  # type: ignore[arg-type]

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check(other)
        rows = tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return SuperMatrix(self.dim, rows, self._sum_parity(other))  # type: ignore[arg-type]

    def __neg__(self) -> "SuperMatrix":
        return SuperMatrix(self.dim, tuple(tuple(-x for x in r) for r in self.entries), self.parity)

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._check(other)
        parity: Optional[Parity] = None
        if self.homogeneous and other.homogeneous:
            parity = "even" if (self.z2 + other.z2) % 2 == 0 else "odd"
        return SuperMatrix(self.dim, _matmul(self.entries, other.entries), parity)  # type: ignore[arg-type]

    def scale(self, c: Any) -> "SuperMatrix":
        return SuperMatrix(self.dim, tuple(tuple(c * x for x in r) for r in self.entries), self.parity)

    def power(self, k: int) -> "SuperMatrix":
        if k < 0:
            raise ValueError("negative matrix power")
        out = SuperMatrix.identity(self.dim)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self) -> "SuperMatrix":
        return SuperMatrix(self.dim, tuple(zip(*self.entries)), self.parity)

    def reduce_mod(self, modulus: int) -> "SuperMatrix":
        rows = tuple(tuple(reduce_scalar(x, modulus) for x in r) for r in self.entries)
        return SuperMatrix(self.dim, rows, self.parity)

    def flat(self) -> Tuple[Any, ...]:
        return tuple(x for r in self.entries for x in r)

    def to_int_rows(self) -> Optional[Tuple[Tuple[int, ...], ...]]:
        """Integer entries as plain ints, or None when some entry is not integral."""
        out = []
        for r in self.entries:
            row = []
            for x in r:
                if isinstance(x, ModInt) or Fraction(x).denominator != 1:
                    return None
                row.append(int(x))
            out.append(tuple(row))
        return tuple(out)

    def to_strings(self) -> List[List[str]]:
        return [[format_scalar(x) for x in r] for r in self.entries]

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{s:>6}" for s in row) for row in self.to_strings())


# ---------------------------------------------------------------------------
# Supertrace, brackets, bilinear form, supertranspose
# ---------------------------------------------------------------------------

def supertrace(x: SuperMatrix) -> Scalar:
    p = x.dim.p
    e = x.entries
    even = sum((e[i][i] for i in range(p)), Fraction(0))
    odd = sum((e[i][i] for i in range(p, x.dim.size)), Fraction(0))
    return even - odd


def superbracket(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """[X, Y] = XY - (-1)^{xy} YX for homogeneous X, Y."""
    sign = -1 if x.z2 * y.z2 else 1
    out = (x @ y) - (y @ x).scale(sign)
    return SuperMatrix(out.dim, out.entries, "even" if (x.z2 + y.z2) % 2 == 0 else "odd")


def twisted_bracket(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """ad'A(B) = AB - (-1)^{a(b+1)} BA."""
    sign = -1 if (a.z2 * (b.z2 + 1)) % 2 else 1
    out = (a @ b) - (b @ a).scale(sign)
    return SuperMatrix(out.dim, out.entries, "even" if (a.z2 + b.z2) % 2 == 0 else "odd")


def bilinear_B(x: SuperMatrix, y: SuperMatrix) -> Scalar:
    return supertrace(x @ y)


def supertranspose(x: SuperMatrix) -> SuperMatrix:
    """[[A, B], [C, D]] -> [[A^T, C^T], [-B^T, D^T]]."""
    dim = x.dim
    e = x.entries
    n = dim.size
    rows = tuple(
        tuple(-e[j][i] if (dim.parity(i) == 1 and dim.parity(j) == 0) else e[j][i] for j in range(n))
        for i in range(n)
    )
    return SuperMatrix(dim, rows, x.parity)


# ---------------------------------------------------------------------------
# Exact linear algebra helpers (sympy over QQ)
# ---------------------------------------------------------------------------

def _to_fraction(r: Any) -> Fraction:
    r = sp.Rational(r)
    return Fraction(int(r.p), int(r.q))


def _sympy_matrix(rows: Sequence[Sequence[Any]]) -> sp.Matrix:
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sp.Rational(x) for x in r] for r in rows])


def rank_over_q(rows: Sequence[Sequence[Any]]) -> int:
    if not rows:
        return 0
    return _sympy_matrix(rows).rank()


def nullspace_over_q(rows: Sequence[Sequence[Any]]) -> List[Tuple[Fraction, ...]]:
    """Basis of the right kernel of a rational matrix."""
    return [tuple(_to_fraction(x) for x in v) for v in _sympy_matrix(rows).nullspace()]


def inverse_over_q(rows: Sequence[Sequence[Any]]) -> Tuple[Tuple[Fraction, ...], ...]:
    m = _sympy_matrix(rows)
    if m.rows != m.cols or m.rank() < m.rows:
        raise DimensionError("matrix is not invertible over Q")
    inv = m.inv()
    return tuple(tuple(_to_fraction(inv[i, j]) for j in range(inv.cols)) for i in range(inv.rows))


# ---------------------------------------------------------------------------
# Concrete Lie superalgebras
# ---------------------------------------------------------------------------

Coords = Dict[int, Fraction]


@dataclass(frozen=True, eq=False)
class SuperAlgebra:
    """
    A matrix Lie superalgebra given by an ordered homogeneous basis,
    even elements first. Construction checks linear independence and closure
    under the superbracket and tabulates exact structure constants.
    """
    name: str
    dim: GradedDim
    basis: Tuple[SuperMatrix, ...]
    form_matrix: Optional[SuperMatrix] = None
    parities: Tuple[int, ...] = field(init=False)
    gram: Tuple[Tuple[Fraction, ...], ...] = field(init=False)
    _pivots: Tuple[int, ...] = field(init=False, repr=False)
    _pivot_inverse: Tuple[Tuple[Fraction, ...], ...] = field(init=False, repr=False)
    _structure: Dict[Tuple[int, int], Coords] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.basis:
            raise DimensionError("empty basis")
        for b in self.basis:
            if b.dim != self.dim:
                raise DimensionError(f"basis element of dimension {b.dim} in algebra on {self.dim}")
            if not b.homogeneous:
                raise ParityError("basis elements must be homogeneous")
        parities = tuple(b.z2 for b in self.basis)
        if list(parities) != sorted(parities):
            raise ParityError("even basis elements must precede odd ones")
        object.__setattr__(self, "parities", parities)

        m = len(self.basis)
        columns = [b.flat() for b in self.basis]
        mat = _sympy_matrix([list(r) for r in zip(*columns)])  # N^2 x m
        if mat.rank() != m:
            raise DimensionError(f"{self.name}: basis is linearly dependent")
        _, pivots = mat.T.rref()
        sub = [[columns[k][r] for k in range(m)] for r in pivots]
        object.__setattr__(self, "_pivots", tuple(pivots))
        object.__setattr__(self, "_pivot_inverse", inverse_over_q(sub))

        structure: Dict[Tuple[int, int], Coords] = {}
        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                try:
                    c = self.coordinates(superbracket(bi, bj))
                except NotInSpanError as e:
                    raise NotInSpanError(f"{self.name}: [b{i}, b{j}] leaves the span") from e
                structure[(i, j)] = {k: v for k, v in enumerate(c) if v != 0}
        object.__setattr__(self, "_structure", structure)
        object.__setattr__(self, "gram", tuple(tuple(bilinear_B(x, y) for y in self.basis) for x in self.basis))
        log.debug("built %s: dim %d (%d|%d)", self.name, m, self.dim_even, self.dim_odd)

    # --- shape ------------------------------------------------------------
    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dim_even(self) -> int:
        return self.parities.count(0)

    @property
    def dim_odd(self) -> int:
        return self.parities.count(1)

    @property
    def even_indices(self) -> range:
        return range(self.dim_even)

    @property
    def odd_indices(self) -> range:
        return range(self.dim_even, len(self.basis))

    # --- coordinates ------------------------------------------------------
    def coordinates(self, x: SuperMatrix) -> Tuple[Fraction, ...]:
        flat = x.flat()
        rhs = [Fraction(flat[r]) for r in self._pivots]
        coords = tuple(sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in self._pivot_inverse)
        if tuple(Fraction(v) for v in self.element(coords).flat()) != tuple(Fraction(v) for v in flat):
            raise NotInSpanError(f"matrix is not in {self.name}")
        return coords

    def contains(self, x: SuperMatrix) -> bool:
        try:
            self.coordinates(x)
        except NotInSpanError:
            return False
        return True

    def element(self, coords: Union[Sequence[Any], Mapping[int, Any]], parity: Optional[Parity] = None) -> SuperMatrix:
        items = coords.items() if isinstance(coords, Mapping) else enumerate(coords)
        n = self.dim.size
        acc = [[Fraction(0)] * n for _ in range(n)]
        for k, c in items:
            if c == 0:
                continue
            for i, row in enumerate(self.basis[k].entries):
                for j, x in enumerate(row):
                    if x:
                        acc[i][j] += c * x
        return SuperMatrix.from_rows(self.dim, acc, parity)

    def vector_parity(self, v: Mapping[int, Any]) -> int:
        ps = {self.parities[k] for k, c in v.items() if c != 0}
        if len(ps) > 1:
            raise ParityError("vector is not homogeneous")
        return ps.pop() if ps else 0

    # --- bracket ----------------------------------------------------------
    def bracket_coords(self, i: int, j: int) -> Coords:
        return self._structure[(i, j)]

    def bracket_vectors(self, u: Mapping[int, Any], v: Mapping[int, Any]) -> Coords:
        out: Coords = {}
        for i, a in u.items():
            if a == 0:
                continue
            for j, b in v.items():
                if b == 0:
                    continue
                for k, c in self._structure[(i, j)].items():
                    out[k] = out.get(k, Fraction(0)) + a * b * c
        return {k: c for k, c in out.items() if c != 0}

    def adjoint_matrix(self, x: Mapping[int, Any]) -> Tuple[Tuple[Fraction, ...], ...]:
        """Matrix of ad X in basis coordinates (column j = coordinates of [X, b_j])."""
        m = len(self.basis)
        cols = [self.bracket_vectors(x, {j: Fraction(1)}) for j in range(m)]
        return tuple(tuple(cols[j].get(i, Fraction(0)) for j in range(m)) for i in range(m))

    def structure_constants(self) -> List[Tuple[int, int, int, Fraction]]:
        return [(i, j, k, c) for (i, j), v in sorted(self._structure.items()) for k, c in sorted(v.items())]

    def random_element(self, rng: Any, parity: int, radius: int = 3) -> SuperMatrix:
        """Random integer combination of the basis elements of the given parity."""
        idx = self.even_indices if parity == 0 else self.odd_indices
        coords = {k: Fraction(int(rng.integers(-radius, radius + 1))) for k in idx}
        return self.element(coords, "even" if parity == 0 else "odd")


@lru_cache(maxsize=None)
def gl_basis(p: int, q: int) -> SuperAlgebra:
    """gl(p,q) with the elementary matrices E_ij, even ones first."""
    dim = GradedDim(p, q)
    n = dim.size
    pairs = [(i, j) for i in range(n) for j in range(n)]
    even = [SuperMatrix.elementary(dim, i, j) for i, j in pairs if dim.parity(i) == dim.parity(j)]
    odd = [SuperMatrix.elementary(dim, i, j) for i, j in pairs if dim.parity(i) != dim.parity(j)]
    return SuperAlgebra(f"gl({p},{q})", dim, tuple(even + odd))


def gl_index(p: int, q: int, i: int, j: int) -> int:
    """Position of E_ij in gl_basis(p, q)."""
    dim = GradedDim(p, q)
    n = dim.size
    pairs = [(a, b) for a in range(n) for b in range(n)]
    ordered = [t for t in pairs if dim.parity(t[0]) == dim.parity(t[1])] + [t for t in pairs if dim.parity(t[0]) != dim.parity(t[1])]
    return ordered.index((i, j))


# ---------------------------------------------------------------------------
# Basis export
# ---------------------------------------------------------------------------

def algebra_to_dict(alg: SuperAlgebra) -> Dict[str, Any]:
    return {
        "name": alg.name,
        "p": str(alg.dim.p),
        "q": str(alg.dim.q),
        "dimension": str(len(alg)),
        "parities": [str(x) for x in alg.parities],
        "basis": [b.to_strings() for b in alg.basis],
        "structure_constants": [[str(i), str(j), str(k), format_scalar(c)] for i, j, k, c in alg.structure_constants()],
    }


def render_algebra_text(alg: SuperAlgebra) -> str:
    lines = [f"{alg.name}  dim={len(alg)} ({alg.dim_even}|{alg.dim_odd})  space=({alg.dim.p}|{alg.dim.q})"]
    for k, b in enumerate(alg.basis):
        lines.append(f"b{k} [{'odd' if alg.parities[k] else 'even'}]")
        lines.extend("  " + " ".join(f"{s:>4}" for s in row) for row in b.to_strings())
    lines.append("structure constants [b_i, b_j] = sum c * b_k:")
    lines.extend(f"  {i} {j} -> {k}: {format_scalar(c)}" for i, j, k, c in alg.structure_constants())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Helpers shared by the checks
# ---------------------------------------------------------------------------

def adjoint_matrix(alg: SuperAlgebra, x: Union[SuperMatrix, Mapping[int, Any]]) -> Tuple[Tuple[Fraction, ...], ...]:
    coords = x if isinstance(x, Mapping) else dict(enumerate(alg.coordinates(x)))
    return alg.adjoint_matrix(coords)


def random_homogeneous(dim: GradedDim, parity: int, rng: Any, radius: int = 3) -> SuperMatrix:
    """Random integer matrix supported on the even (parity 0) or odd blocks."""
    n = dim.size
    rows = [
        [int(rng.integers(-radius, radius + 1)) if (dim.parity(i) + dim.parity(j)) % 2 == parity else 0 for j in range(n)]
        for i in range(n)
    ]
    return SuperMatrix.from_rows(dim, rows, "even" if parity == 0 else "odd")


def supertranspose_automorphism_check(p: int, q: int, rng: Any, samples: int = 50, radius: int = 3) -> bool:
    """X -> -X^st preserves the superbracket of gl(p,q) on random homogeneous pairs."""
    dim = GradedDim(p, q)
    for _ in range(samples):
        x = random_homogeneous(dim, int(rng.integers(0, 2)), rng, radius)
        y = random_homogeneous(dim, int(rng.integers(0, 2)), rng, radius)
        lhs = -supertranspose(superbracket(x, y))
        rhs = superbracket(-supertranspose(x), -supertranspose(y))
        if lhs.flat() != rhs.flat():
            return False
    return True
