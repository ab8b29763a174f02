# superal/identities/superpoly.py
"""
Standard super polynomials and the identities they satisfy.

For X_1..X_k homogeneous with parities x_1..x_k:

    P_k(X) = sum_s eps(s; X) X_s(1)...X_s(k)
    A_k(X) = sum_s sgn(s) eps(s; X) X_s(1)...X_s(k)

where eps(s; X) is the Koszul sign of the rearrangement. Permutations are
0-based tuples; ``compose(s, t)[i] == s[t[i]]``.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice, permutations
from math import comb, factorial
from typing import Any, Callable, Dict, Iterable, Iterator, List, Literal, Optional, Sequence, Tuple

import numpy as np

from superal.algebra.graded_core import (
    GradedDim,
    SuperAlgebra,
    SuperMatrix,
    bilinear_B,
    format_scalar,
    gl_basis,
    superbracket,
    supertrace,
)
from superal.algebra.osp_construct import osp_basis
from superal.core.config import settings
from superal.core.errors import ArityError, BoundViolationError, DimensionError, ParityError
from superal.core.schemas import VerificationReport, Witness
from superal.identities import kernel
from superal.utils.logging_setup import get_logger

log = get_logger("superal.identities")

ParityWord = Tuple[int, ...]
Permutation = Tuple[int, ...]
CanonicalTupleIndex = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Signs
# ---------------------------------------------------------------------------

def perm_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def super_sign(perm: Sequence[int], parities: Sequence[int]) -> int:
    """(-1)^K with K = #{i<j : perm[i] > perm[j], X_perm[i] and X_perm[j] odd}."""
    if len(perm) != len(parities):
        raise ArityError(f"permutation of length {len(perm)} against {len(parities)} parities")
    k = 0
    for i in range(len(perm)):
        if not parities[perm[i]]:
            continue
        for j in range(i + 1, len(perm)):
            if parities[perm[j]] and perm[i] > perm[j]:
                k += 1
    return -1 if k % 2 else 1


def compose(s: Sequence[int], t: Sequence[int]) -> Permutation:
    return tuple(s[t[i]] for i in range(len(t)))


def permute_parities(perm: Sequence[int], parities: Sequence[int]) -> ParityWord:
    """Parity word of (X_perm(1), ..., X_perm(k))."""
    return tuple(parities[perm[m]] for m in range(len(perm)))


# ---------------------------------------------------------------------------
# Argument tuples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArgTuple:
    matrices: Tuple[SuperMatrix, ...]

    def __post_init__(self) -> None:
        if not self.matrices:
            raise ArityError("argument tuple is empty")
        dims = {m.dim for m in self.matrices}
        if len(dims) > 1:
            raise DimensionError("argument matrices act on different spaces")
        for m in self.matrices:
            if not m.homogeneous:
                raise ParityError("arguments must be homogeneous")

    @classmethod
    def of(cls, *mats: SuperMatrix) -> "ArgTuple":
        if len(mats) == 1 and not isinstance(mats[0], SuperMatrix):
            mats = tuple(mats[0])  # type: ignore[assignment]
        return cls(tuple(mats))

    @classmethod
    def from_indices(cls, alg: SuperAlgebra, key: Sequence[int]) -> "ArgTuple":
        return cls(tuple(alg.basis[i] for i in key))

    @property
    def parities(self) -> ParityWord:
        return tuple(m.z2 for m in self.matrices)

    @property
    def dim(self) -> GradedDim:
        return self.matrices[0].dim

    def __len__(self) -> int:
        return len(self.matrices)

    def permuted(self, perm: Sequence[int]) -> "ArgTuple":
        return ArgTuple(tuple(self.matrices[i] for i in perm))

    def rows(self) -> List[Tuple[Tuple[Any, ...], ...]]:
        return [m.entries for m in self.matrices]


def _wrap(dim: GradedDim, rows: Any, parities: Sequence[int]) -> SuperMatrix:
    parity = "even" if sum(parities) % 2 == 0 else "odd"
    out = SuperMatrix.from_rows(dim, rows, None)
    if out.parity == "mixed":
        return out
    return SuperMatrix(dim, out.entries, parity)  # type: ignore[arg-type]


def _product(mats: Sequence[SuperMatrix]) -> SuperMatrix:
    out = mats[0]
    for m in mats[1:]:
        out = out @ m
    return out


# ---------------------------------------------------------------------------
# Evaluators
# ---------------------------------------------------------------------------

def _naive(args: ArgTuple, alternating: bool) -> SuperMatrix:
    par = args.parities
    k = len(args)
    n = args.dim.size
    acc = [[Fraction(0)] * n for _ in range(n)]
    for perm in permutations(range(k)):
        sign = super_sign(perm, par) * (perm_sign(perm) if alternating else 1)
        prod = _product([args.matrices[i] for i in perm]).entries
        for i in range(n):
            for j in range(n):
                acc[i][j] += sign * prod[i][j]
    return _wrap(args.dim, acc, par)


def standard_A_naive(args: ArgTuple) -> SuperMatrix:
    """Full k!-term sum defining A_k."""
    return _naive(args, alternating=True)


def standard_P_naive(args: ArgTuple) -> SuperMatrix:
    return _naive(args, alternating=False)


def standard_A_dp(args: ArgTuple) -> SuperMatrix:
    """A_k via the peel-leftmost recursion over subsets of positions."""
    rows = kernel.subset_dp(args.rows(), args.parities, alternating=True)
    return _wrap(args.dim, rows, args.parities)


def standard_P_dp(args: ArgTuple) -> SuperMatrix:
    rows = kernel.subset_dp(args.rows(), args.parities, alternating=False)
    return _wrap(args.dim, rows, args.parities)


def invariant_P(args: ArgTuple) -> Fraction:
    return supertrace(standard_P_dp(args))


def invariant_Lambda(args: ArgTuple) -> Fraction:
    return supertrace(standard_A_dp(args))


def classical_standard(mats: Sequence[SuperMatrix]) -> SuperMatrix:
    """Classical I_k = sum_s sgn(s) X_s(1)...X_s(k), gradings ignored."""
    if not mats:
        raise ArityError("empty tuple")
    rows = kernel.subset_dp([m.entries for m in mats], [0] * len(mats), alternating=True)
    return SuperMatrix.from_rows(mats[0].dim, rows)


# ---------------------------------------------------------------------------
# Proposition checks: trace identities and bracket expansions
# ---------------------------------------------------------------------------

def _bracket_word(args: ArgTuple, perm: Sequence[int], single: Optional[int]) -> SuperMatrix:
    """[X_p0, X_p1] ... X_p(single) ... [..]: brackets on consecutive pairs, one bare factor at ``single``."""
    mats = [args.matrices[i] for i in perm]
    factors: List[SuperMatrix] = []
    i = 0
    while i < len(mats):
        if single is not None and i == single:
            factors.append(mats[i])
            i += 1
        else:
            factors.append(superbracket(mats[i], mats[i + 1]))
            i += 2
    return _product(factors)


def bracket_expansion(args: ArgTuple, single: Optional[int] = None) -> SuperMatrix:
    """sum_s sgn(s) eps(s; X) of the bracket word; ``single`` is the position of the bare factor."""
    par = args.parities
    k = len(args)
    n = args.dim.size
    acc = [[Fraction(0)] * n for _ in range(n)]
    for perm in permutations(range(k)):
        sign = perm_sign(perm) * super_sign(perm, par)
        word = _bracket_word(args, perm, single).entries
        for i in range(n):
            for j in range(n):
                acc[i][j] += sign * word[i][j]
    return SuperMatrix.from_rows(args.dim, acc)


def prop41_check(which: Literal["a", "b", "c"], args: ArgTuple) -> bool:
    """
    (a) odd length 2k+1: P_{2k+1} = (2k+1) B(P_2k(X_1..X_2k) | X_2k+1), the same for
        Lambda with A, and Lambda_2k(X_1..X_2k) = 0;
    (b) even length 2k: bracket expansion = 2^k A_2k;
    (c) odd length 2k+1: for every position of the bare factor, bracket expansion = 2^k A_2k+1.
    """
    k = len(args)
    if which == "a":
        if k % 2 == 0:
            raise ArityError("identity (a) needs an odd number of arguments")
        head = ArgTuple(args.matrices[:-1])
        last = args.matrices[-1]
        ok_p = invariant_P(args) == k * bilinear_B(standard_P_dp(head), last)
        ok_l = invariant_Lambda(args) == k * bilinear_B(standard_A_dp(head), last)
        ok_even = k == 1 or invariant_Lambda(head) == 0
        return ok_p and ok_l and ok_even
    if which == "b":
        if k % 2:
            raise ArityError("identity (b) needs an even number of arguments")
        rhs = standard_A_dp(args).scale(2 ** (k // 2))
        return bracket_expansion(args).flat() == rhs.flat()
    if which == "c":
        if k % 2 == 0:
            raise ArityError("identity (c) needs an odd number of arguments")
        rhs = standard_A_dp(args).scale(2 ** (k // 2)).flat()
        return all(bracket_expansion(args, single=2 * j).flat() == rhs for j in range(k // 2 + 1))
    raise ValueError(f"unknown identity {which!r}")


# ---------------------------------------------------------------------------
# Counterexample in gl(p,q)
# ---------------------------------------------------------------------------

def counterexample_gl(p: int, q: int, k: int) -> Tuple[SuperMatrix, SuperMatrix]:
    """Odd X = E_{1,p+1} + E_{p+1,1} with A_k(X,...,X) = k! X^k != 0."""
    if p * q == 0:
        raise DimensionError(f"gl({p},{q}) has no odd part")
    if k < 1:
        raise ArityError("k >= 1 required")
    dim = GradedDim(p, q)
    n = dim.size
    rows = [[0] * n for _ in range(n)]
    rows[0][p] = 1
    rows[p][0] = 1
    x = SuperMatrix.from_rows(dim, rows, "odd")
    return x, standard_A_dp(ArgTuple((x,) * k))


# ---------------------------------------------------------------------------
# Canonical tuples
# ---------------------------------------------------------------------------

def _canonical(parities: Sequence[int], k: int, start: int, prefix: Tuple[int, ...]) -> Iterator[CanonicalTupleIndex]:
    if len(prefix) == k:
        yield prefix
        return
    for b in range(start, len(parities)):
        nxt = b + 1 if parities[b] == 0 else b
        yield from _canonical(parities, k, nxt, prefix + (b,))


def enumerate_canonical_tuples(algebra: SuperAlgebra, k: int) -> Iterator[CanonicalTupleIndex]:
    """Strictly increasing even indices, then non-decreasing odd ones, in lexicographic order."""
    if k < 0:
        raise ArityError("negative length")
    return _canonical(algebra.parities, k, 0, ())


def canonical_tuple_count(dim_even: int, dim_odd: int, k: int) -> int:
    total = 0
    for k0 in range(0, min(k, dim_even) + 1):
        k1 = k - k0
        if dim_odd == 0:
            odd = 1 if k1 == 0 else 0
        else:
            odd = comb(k1 + dim_odd - 1, dim_odd - 1)
        total += comb(dim_even, k0) * odd
    return total


# ---------------------------------------------------------------------------
# Main verification
# ---------------------------------------------------------------------------

def coefficient_bound(n: int, k: int, max_entry: int = 1) -> int:
    """|entries of A_k| on basis tuples <= k! (2n+1)^{k-1} m^k."""
    return factorial(k) * (2 * n + 1) ** (k - 1) * max_entry ** k


def _max_entry(alg: SuperAlgebra) -> Optional[int]:
    m = 0
    for b in alg.basis:
        rows = b.to_int_rows()
        if rows is None:
            return None
        m = max([m] + [abs(x) for r in rows for x in r])
    return m


def _chunks(it: Iterable[Any], size: int) -> Iterator[List[Any]]:
    it = iter(it)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def _witness(key: Sequence[int], rows: Any, note: Optional[str] = None) -> Witness:
    return Witness(indices=list(key), value=[[format_scalar(x) for x in r] for r in rows], note=note)


def _run_chunks(
    fn: Callable[[Any], kernel.ChunkResult],
    tasks: Iterable[Any],
    jobs: int,
    initializer: Optional[Callable[..., None]] = None,
    initargs: Tuple[Any, ...] = (),
    progress: Optional[Callable[..., None]] = None,
) -> Tuple[int, int, List[Tuple[kernel.Key, Any]]]:
    checked = nonzero = 0
    witnesses: List[Tuple[kernel.Key, Any]] = []

    def merge(result: kernel.ChunkResult) -> None:
        nonlocal checked, nonzero
        index, c, z, w = result
        checked += c
        nonzero += z
        witnesses.extend(w)
        log.debug("chunk %d: %d checked, %d nonzero", index, c, z)
        if progress:
            progress("chunk", {"index": index, "checked": checked, "nonzero": nonzero})

    if jobs <= 1:
        if initializer is not None:
            initializer(*initargs)
        for task in tasks:
            merge(fn(task))
    else:
        with ProcessPoolExecutor(max_workers=jobs, initializer=initializer, initargs=initargs) as pool:
            # map yields in submission order, so merging is schedule independent
            for result in pool.map(fn, tasks):
                merge(result)
    return checked, nonzero, witnesses


def _random_tuple(alg: SuperAlgebra, k: int, rng: np.random.Generator, radius: int) -> Tuple[List[Any], List[int]]:
    parities = [int(rng.integers(0, 2)) for _ in range(k)]
    if alg.dim_odd == 0:
        parities = [0] * k
    mats = [(lambda m: m.to_int_rows() or m.entries)(alg.random_element(rng, x, radius)) for x in parities]
    return mats, parities


def _random_exact_samples(
    alg: SuperAlgebra, k: int, samples: int, seed: int, radius: int, jobs: int, chunk_size: int,
    max_witnesses: int, progress: Optional[Callable[..., None]],
) -> Tuple[int, int, List[Tuple[kernel.Key, Any]]]:
    rng = np.random.default_rng(seed)
    drawn = []
    for s in range(samples):
        mats, parities = _random_tuple(alg, k, rng, radius)
        drawn.append((s, mats, parities))
    tasks = [(i, block, max_witnesses) for i, block in enumerate(_chunks(drawn, max(1, chunk_size // 64)))]
    return _run_chunks(kernel.check_samples, tasks, jobs, progress=progress)


def verify_al(
    n: int,
    mode: Literal["exact", "modular", "random"] = "exact",
    samples: int = 100,
    seed: int = 0,
    *,
    jobs: Optional[int] = None,
    prime: Optional[int] = None,
    strict_bound: bool = False,
    spot_checks: int = 0,
    chunk_size: Optional[int] = None,
    max_witnesses: Optional[int] = None,
    algebra: Optional[SuperAlgebra] = None,
    progress: Optional[Callable[..., None]] = None,
) -> VerificationReport:
    """
    Check A_{4n+2} = 0 on osp(1,2n).

    exact/modular enumerate every canonical (4n+2)-tuple of basis indices;
    random evaluates ``samples`` tuples of random integer combinations exactly.
    A nonzero value is returned as a witness, never raised.
    """
    if n < 1:
        raise DimensionError(f"n must be >= 1, got {n}")
    if mode not in ("exact", "modular", "random"):
        raise ValueError(f"unknown mode {mode!r}")
    alg = algebra if algebra is not None else osp_basis(n)
    k = 4 * n + 2
    jobs = settings.AL_JOBS if jobs is None else jobs
    chunk_size = chunk_size or settings.AL_CHUNK_SIZE
    max_witnesses = settings.AL_MAX_WITNESSES if max_witnesses is None else max_witnesses
    prime = prime or settings.AL_PRIME
    radius = settings.AL_RANDOM_RANGE
    t0 = time.perf_counter()

    params: Dict[str, str] = {"n": str(n), "k": str(k), "algebra": alg.name, "dimension": str(len(alg))}
    checks: Dict[str, bool] = {}
    primes: List[int] = []
    bound: Optional[int] = None
    notes: List[str] = []

    if mode == "random":
        log.info("verify_al n=%d random: %d samples, seed %d", n, samples, seed)
        checked, nonzero, raw = _random_exact_samples(alg, k, samples, seed, radius, jobs, chunk_size, max_witnesses, progress)
        witnesses = [_witness(key, rows, note="sample") for key, rows in raw]
        params["samples"] = str(samples)
        params["radius"] = str(radius)
        report_seed: Optional[int] = seed
    else:
        m = _max_entry(alg)
        modulus: Optional[int] = None
        if mode == "modular":
            bound = coefficient_bound(n, k, m) if m is not None else None
            if bound is None or prime <= bound:
                msg = f"prime {prime} does not exceed the coefficient bound {bound} for n={n}, k={k}"
                if strict_bound:
                    raise BoundViolationError(msg)
                log.warning("%s; falling back to exact arithmetic", msg)
                notes.append("fallback-exact")
                mode = "exact"
            else:
                modulus = prime
                primes.append(prime)
        expected = canonical_tuple_count(alg.dim_even, alg.dim_odd, k)
        log.info("verify_al n=%d %s: %d canonical tuples, jobs=%d", n, mode, expected, jobs)
        if modulus is not None:
            mats = [tuple(tuple(x.residue for x in r) for r in b.reduce_mod(modulus).entries) for b in alg.basis]
        else:
            mats = [b.to_int_rows() or b.entries for b in alg.basis]
        initargs = (mats, alg.parities, modulus, settings.AL_CACHE_SIZE)
        tasks = (
            (i, block, max_witnesses)
            for i, block in enumerate(_chunks(enumerate_canonical_tuples(alg, k), chunk_size))
        )
        checked, nonzero, raw = _run_chunks(kernel.check_chunk, tasks, jobs, kernel.init_worker, initargs, progress)
        witnesses = [_witness(key, rows, note="residues mod prime" if modulus else None) for key, rows in raw]
        checks["tuple_count"] = checked == expected
        params["expected_tuples"] = str(expected)
        report_seed = None
        if spot_checks:
            sc, sz, sraw = _random_exact_samples(alg, k, spot_checks, seed, radius, jobs, chunk_size, max_witnesses, progress)
            checks["random_spot_checks"] = sz == 0
            params["spot_checks"] = str(sc)
            witnesses += [_witness(key, rows, note="spot-check sample") for key, rows in sraw]
            report_seed = seed

    params["nonzero"] = str(nonzero)
    if notes:
        params["notes"] = ",".join(notes)
    report = VerificationReport(
        claim=f"A_{k} = 0 on {alg.name}",
        mode=mode,
        parameters=params,
        tuples_checked=checked,
        primes=primes,
        coefficient_bound=bound,
        seed=report_seed,
        checks=checks,
        elapsed_s=round(time.perf_counter() - t0, 3),
    ).with_failures(witnesses[:max_witnesses])
    if nonzero and report.status == "verified":
        report = report.model_copy(update={"status": "falsified"})
    log.info("verify_al n=%d: %s (%d checked, %d nonzero)", n, report.status, checked, nonzero)
    return report


# ---------------------------------------------------------------------------
# Sharpness and the classical theorem
# ---------------------------------------------------------------------------

def _search(alg: SuperAlgebra, keys: Iterable[CanonicalTupleIndex]) -> Optional[Tuple[ArgTuple, SuperMatrix]]:
    mats = [b.to_int_rows() or b.entries for b in alg.basis]
    kern = kernel.StandardKernel(mats, alg.parities, None, settings.AL_CACHE_SIZE)
    for key in keys:
        value = kern.evaluate(key)
        if not kernel.is_zero_rows(value):
            args = ArgTuple.from_indices(alg, key)
            return args, SuperMatrix.from_rows(alg.dim, value)
    return None


def _generic_search(alg: SuperAlgebra, k: int, seed: int, trials: int) -> Optional[Tuple[ArgTuple, SuperMatrix]]:
    """Dense random elements for every parity word 0^(k-j) 1^j; a nonzero multilinear map shows up generically."""
    rng = np.random.default_rng(seed)
    for odd in range(k + 1):
        word = (0,) * (k - odd) + (1,) * odd
        for _ in range(trials):
            args = ArgTuple(tuple(alg.random_element(rng, x, 3) for x in word))
            value = standard_A_dp(args)
            if not value.is_zero():
                return args, value
    return None


def sharpness_witness(
    n: int,
    which: Literal["A_4n_mixed", "A_4n_plus_1", "A_4n_plus_2"],
    *,
    seed: int = 0,
    trials: int = 2,
) -> Optional[Tuple[ArgTuple, SuperMatrix]]:
    """
    A nonzero value of A_4n on g0^{4n-1} x g1, of A_{4n+1} on g^{4n+1}, or of
    A_{4n+2} (expected none).

    n = 1 searches canonical basis tuples in lexicographic order and returns
    the first hit; None then means the search was exhaustive. A_{4n+1} is only
    claimed for n in (1, 2); for n = 2 the basis search is replaced by dense
    seeded random elements, ``trials`` per parity word.
    """
    alg = osp_basis(n)
    if which == "A_4n_plus_1" and n not in (1, 2):
        raise DimensionError(f"A_(4n+1) does not vanish only for n in (1, 2); got n={n}")
    if which == "A_4n_plus_1" and n == 2:
        found = _generic_search(alg, 4 * n + 1, seed, trials)
        log.info("sharpness %s n=%d: %s", which, n, "nonzero value found" if found else "no nonzero value in random search")
        return found
    if which == "A_4n_mixed":
        k = 4 * n
        keys = (t for t in enumerate_canonical_tuples(alg, k) if sum(alg.parities[i] for i in t) == 1)
    elif which == "A_4n_plus_1":
        keys = enumerate_canonical_tuples(alg, 4 * n + 1)
    elif which == "A_4n_plus_2":
        keys = enumerate_canonical_tuples(alg, 4 * n + 2)
    else:
        raise ValueError(f"unknown sharpness claim {which!r}")
    found = _search(alg, keys)
    if found is None:
        log.info("sharpness %s n=%d: exhaustive search found no nonzero tuple", which, n)
    else:
        log.info("sharpness %s n=%d: witness %s", which, n, [alg.basis.index(m) for m in found[0].matrices])
    return found


def classical_check(n: int) -> Dict[str, bool]:
    """On gl(n,0): I_2n vanishes on every canonical basis tuple and I_{2n-1} does not."""
    alg = gl_basis(n, 0)
    vanishes = all(classical_standard(ArgTuple.from_indices(alg, t).matrices).is_zero() for t in enumerate_canonical_tuples(alg, 2 * n))
    sharp = any(
        not classical_standard(ArgTuple.from_indices(alg, t).matrices).is_zero()
        for t in enumerate_canonical_tuples(alg, 2 * n - 1)
    )
    return {f"I_{2 * n}_vanishes": vanishes, f"I_{2 * n - 1}_nonzero": sharp}
