# superal/identities/kernel.py
"""
Hot loop of the verifier: standard super polynomials on plain nested tuples.

Entries are Python ints (exact or reduced mod p) or Fractions; no SuperMatrix
wrapping happens here, and everything module-level is picklable so the same
functions run in-process and inside ProcessPoolExecutor workers.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

Rows = Tuple[Tuple[Any, ...], ...]
Key = Tuple[int, ...]
# (chunk index, tuples checked, nonzero count, first witnesses)
ChunkResult = Tuple[int, int, int, List[Tuple[Key, Rows]]]


def identity_rows(size: int) -> Rows:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def zero_rows(size: int) -> Rows:
    return tuple((0,) * size for _ in range(size))


def mat_mul(a: Rows, b: Rows, modulus: Optional[int] = None) -> Rows:
    cols = tuple(zip(*b))
    if modulus is None:
        return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in a)
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) % modulus for c in cols) for r in a)


def mat_axpy(acc: Rows, sign: int, m: Rows, modulus: Optional[int] = None) -> Rows:
    """acc + sign * m."""
    if modulus is None:
        if sign > 0:
            return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(acc, m))
        return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(acc, m))
    if sign > 0:
        return tuple(tuple((x + y) % modulus for x, y in zip(r, s)) for r, s in zip(acc, m))
    return tuple(tuple((x - y) % modulus for x, y in zip(r, s)) for r, s in zip(acc, m))


def is_zero_rows(m: Rows) -> bool:
    return all(x == 0 for r in m for x in r)


def subset_dp(
    mats: Sequence[Rows],
    parities: Sequence[int],
    *,
    alternating: bool = True,
    modulus: Optional[int] = None,
) -> Rows:
    """
    A_k (alternating) or P_k of one ordered tuple.

    value[S] is the polynomial on the sub-tuple of positions in S, obtained by
    peeling the leftmost factor: X_j * value[S - j] with sign
    (-1)^{rank of j in S} (alternating only) times (-1)^{x_j * (parities before j in S)}.
    Masks are visited in increasing order, so every S - j is ready.
    """
    k = len(mats)
    if k == 0:
        raise ValueError("empty tuple")
    size = len(mats[0])
    values: Dict[int, Rows] = {0: identity_rows(size)}
    for mask in range(1, 1 << k):
        acc = zero_rows(size)
        rank = 0
        prefix = 0
        for pos in range(k):
            if not (mask >> pos) & 1:
                continue
            sign = -1 if (alternating and rank % 2) else 1
            if parities[pos] and prefix:
                sign = -sign
            acc = mat_axpy(acc, sign, mat_mul(mats[pos], values[mask ^ (1 << pos)], modulus), modulus)
            rank += 1
            prefix ^= parities[pos]
        values[mask] = acc
    return values[(1 << k) - 1]


def subset_dp_cost(k: int) -> int:
    """Matrix products performed by subset_dp on a k-tuple."""
    from math import comb

    return sum(comb(k, m) * m for m in range(1, k + 1))


class StandardKernel:
    """
    A_k on canonical basis-index keys with a memo shared across keys.

    A canonical key lists basis indices with strictly increasing even indices
    followed by non-decreasing odd ones; deleting an entry keeps it canonical,
    so the peel-leftmost recursion stays inside the memo's key space.
    """

    def __init__(
        self,
        matrices: Sequence[Rows],
        parities: Sequence[int],
        modulus: Optional[int] = None,
        cache_size: int = 1 << 17,
    ) -> None:
        if len(matrices) != len(parities):
            raise ValueError("one parity per basis matrix")
        self.modulus = modulus
        self.parities = tuple(parities)
        if modulus is None:
            self.matrices = tuple(tuple(tuple(r) for r in m) for m in matrices)
        else:
            self.matrices = tuple(tuple(tuple(int(x) % modulus for x in r) for r in m) for m in matrices)
        self.size = len(self.matrices[0])
        self._identity = identity_rows(self.size)
        self.evaluate = lru_cache(maxsize=cache_size)(self._evaluate)

    def _evaluate(self, key: Key) -> Rows:
        if not key:
            return self._identity
        p = self.modulus
        acc = zero_rows(self.size)
        prefix = 0
        prev_b, prev_prod = -1, None
        for j, b in enumerate(key):
            sign = -1 if j % 2 else 1
            x = self.parities[b]
            if x and prefix:
                sign = -sign
            if b == prev_b:
                prod = prev_prod  # repeated odd index: same factor, same remainder
            else:
                prod = mat_mul(self.matrices[b], self.evaluate(key[:j] + key[j + 1:]), p)
            acc = mat_axpy(acc, sign, prod, p)
            prefix ^= x
            prev_b, prev_prod = b, prod
        return acc

    def cache_info(self) -> Any:
        return self.evaluate.cache_info()


# ---------------------------------------------------------------------------
# Worker entry points
# ---------------------------------------------------------------------------

_KERNEL: Optional[StandardKernel] = None


def init_worker(matrices: Sequence[Rows], parities: Sequence[int], modulus: Optional[int], cache_size: int) -> None:
    global _KERNEL
    _KERNEL = StandardKernel(matrices, parities, modulus, cache_size)


def check_chunk(task: Tuple[int, Sequence[Key], int]) -> ChunkResult:
    index, keys, max_witnesses = task
    if _KERNEL is None:
        raise RuntimeError("worker kernel not initialized")
    nonzero = 0
    witnesses: List[Tuple[Key, Rows]] = []
    for key in keys:
        value = _KERNEL.evaluate(tuple(key))
        if not is_zero_rows(value):
            nonzero += 1
            if len(witnesses) < max_witnesses:
                witnesses.append((tuple(key), value))
    return index, len(keys), nonzero, witnesses


def check_samples(task: Tuple[int, Sequence[Tuple[int, Sequence[Rows], Sequence[int]]], int]) -> ChunkResult:
    """Random-mode chunk: each sample carries its own matrices and parity word."""
    index, samples, max_witnesses = task
    nonzero = 0
    witnesses: List[Tuple[Key, Rows]] = []
    for sample_no, mats, parities in samples:
        value = subset_dp(mats, parities)
        if not is_zero_rows(value):
            nonzero += 1
            if len(witnesses) < max_witnesses:
                witnesses.append(((sample_no,), value))
    return index, len(samples), nonzero, witnesses
