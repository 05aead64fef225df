"""Binary delta-matroids: principal minors of symmetric GF(2) matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import GuardError, HypothesisError, LabelError
from .setsys import MAX_ENUMERATION, SetSystem, SubsetLike, iter_bits, is_delta_matroid, twist


@dataclass(frozen=True)
class SymMatGF2:
    """Symmetric matrix over GF(2); ``rows[i]`` is a bitmask of row ``i``."""

    labels: tuple[str, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "rows", tuple(self.rows))
        n = len(self.labels)
        if len(self.rows) != n:
            raise ValueError(f"{len(self.rows)} rows for {n} labels")
        if len(set(self.labels)) != n:
            raise LabelError("duplicate matrix labels")
        full = (1 << n) - 1
        for i, r in enumerate(self.rows):
            if r < 0 or r & ~full:
                raise ValueError(f"row {i} has bits outside the {n} columns")
        for i in range(n):
            for j in range(i + 1, n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")

    @property
    def n(self) -> int:
        return len(self.labels)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "SymMatGF2":
        n = len(rows)
        if labels is None:
            labels = [str(i + 1) for i in range(n)]
        masks = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            m = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is {v!r}; entries must be 0 or 1")
                m |= v << j
            masks.append(m)
        return cls(tuple(labels), tuple(masks))

    def mask(self, subset: SubsetLike) -> int:
        return SetSystem(self.labels, ()).mask(subset)


def gf2_rank(vectors: Sequence[int]) -> int:
    """Rank over GF(2) of a list of bitmask row vectors."""
    rows = [v for v in vectors if v]
    rank = 0
    while rows:
        # pivot on the lowest set column of the first remaining row
        pivot = rows.pop(0)
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def principal_nonsingular(C: SymMatGF2, A: SubsetLike) -> bool:
    """Whether the principal submatrix ``C[A]`` is invertible; ``C[{}]`` counts as invertible."""
    a = C.mask(A)
    return _nonsingular(C.rows, a)


def _nonsingular(rows: Sequence[int], a: int, bits: Sequence[int] | None = None) -> bool:
    # C[A] is invertible iff its rows are independent; insert them into an xor basis keyed by top bit
    basis = {}
    for i in iter_bits(a) if bits is None else bits:
        r = rows[i] & a
        while r:
            top = r.bit_length()
            b = basis.get(top)
            if b is None:
                basis[top] = r
                break
            r ^= b
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _subset_bits(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(iter_bits(a)) for a in range(1 << n))


def feasibility_table(C: SymMatGF2) -> np.ndarray:
    """Boolean array of length ``2**n``: entry ``A`` says whether ``C[A]`` is non-singular."""
    n = C.n
    if n > MAX_ENUMERATION:
        raise GuardError(f"matrix dimension {n} exceeds the enumeration guard {MAX_ENUMERATION}")
    rows = C.rows
    if n <= 12:
        bits = _subset_bits(n)
        it = (_nonsingular(rows, a, bits[a]) for a in range(1 << n))
    else:
        it = (_nonsingular(rows, a) for a in range(1 << n))
    return np.fromiter(it, dtype=bool, count=1 << n)


def delta_matroid_of_matrix(C: SymMatGF2) -> SetSystem:
    """``D(C)``: feasible sets are the index sets of non-singular principal submatrices."""
    table = feasibility_table(C)
    return SetSystem(C.labels, tuple(int(a) for a in np.flatnonzero(table)))


def reconstruct_matrix(D: SetSystem) -> SymMatGF2:
    """The unique candidate ``C`` with ``D = D(C)``, read off feasible sets of size at most two."""
    if not D.is_normal:
        raise HypothesisError("matrix reconstruction needs a normal set system (empty set feasible)")
    small = {x for x in D.feasible if x.bit_count() <= 2}
    n = D.n
    single = [(1 << v) in small for v in range(n)]
    rows = [0] * n
    for v in range(n):
        if single[v]:
            rows[v] |= 1 << v
        for u in range(v + 1, n):
            pair = ((1 << u) | (1 << v)) in small
            both = single[u] and single[v]
            if (both and not pair) or (pair and not both):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return SymMatGF2(D.labels, tuple(rows))


def is_binary(D: SetSystem, assume_delta_matroid: bool = False) -> bool:
    """Decide binaryness by normalising with a minimum feasible set and rebuilding the matrix."""
    if D.n > MAX_ENUMERATION:
        raise GuardError(f"binaryness test needs n <= {MAX_ENUMERATION}, got {D.n}")
    if not assume_delta_matroid and not is_delta_matroid(D):
        raise HypothesisError("is_binary requires a delta-matroid")
    r = min(x.bit_count() for x in D.feasible)
    f0 = next(x for x in D.feasible if x.bit_count() == r)
    normal = twist(D, f0)
    C = reconstruct_matrix(normal)
    table = feasibility_table(C)
    if int(table.sum()) != len(normal.feasible):
        return False
    return bool(table[list(normal.feasible)].all())


def normal_matrix(D: SetSystem) -> tuple[int, SymMatGF2] | None:
    """``(F, C)`` with ``D * F = D(C)`` when ``D`` is binary, else None."""
    if not is_binary(D):
        return None
    r = min(x.bit_count() for x in D.feasible)
    f0 = next(x for x in D.feasible if x.bit_count() == r)
    return f0, reconstruct_matrix(twist(D, f0))


def matrix_from_index(n: int, index: int, labels: Sequence[str] | None = None) -> SymMatGF2:
    """The ``index``-th symmetric ``n x n`` matrix; upper-triangle entries are the bits of ``index``."""
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i, n):
            if index >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if labels is None:
        labels = [str(i + 1) for i in range(n)]
    return SymMatGF2(tuple(labels), tuple(rows))
