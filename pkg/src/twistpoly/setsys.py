"""Set systems and the delta-matroid core.

Subsets of a ground set of ``n`` labelled elements are encoded as ``n``-bit
integers: bit ``i`` is set when the element at position ``i`` belongs to the
subset.  A :class:`SetSystem` stores its feasible sets as a strictly increasing
tuple of such masks, so two set systems are mathematically equal exactly when
their dataclasses compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np

from .errors import GuardError, ImproperError, LabelError

MAX_ELEMENTS = 32
MAX_ENUMERATION = 24

Element = Union[str, int]
SubsetLike = Union[int, Iterable[str]]


def popcount(x: int) -> int:
    return x.bit_count()


def iter_bits(mask: int):
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SetSystem:
    """A ground set of labelled elements with a collection of feasible subsets."""

    labels: tuple[str, ...]
    feasible: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) > MAX_ELEMENTS:
            raise GuardError(f"ground set has {len(labels)} elements; the limit is {MAX_ELEMENTS}")
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise LabelError(f"element labels must be non-empty strings, got {lab!r}")
        if len(set(labels)) != len(labels):
            dup = sorted({lab for lab in labels if labels.count(lab) > 1})
            raise LabelError(f"duplicate element label(s): {', '.join(dup)}")
        feasible = tuple(self.feasible)
        object.__setattr__(self, "feasible", feasible)
        full = (1 << len(labels)) - 1
        prev = -1
        for x in feasible:
            if not isinstance(x, int) or x < 0 or x & ~full:
                raise LabelError(f"feasible mask {x!r} has bits outside the ground set")
            if x <= prev:
                raise ValueError("feasible masks must be strictly increasing; use SetSystem.from_masks")
            prev = x

    @classmethod
    def from_masks(cls, labels: Sequence[str], masks: Iterable[int]) -> "SetSystem":
        """Build the canonical set system from arbitrary (unsorted, repeated) masks."""
        return cls(tuple(labels), tuple(sorted(set(masks))))

    @classmethod
    def _trusted(cls, labels: tuple[str, ...], feasible: tuple[int, ...]) -> "SetSystem":
        # skip validation for results derived from an already valid system
        obj = object.__new__(cls)
        object.__setattr__(obj, "labels", labels)
        object.__setattr__(obj, "feasible", feasible)
        return obj

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    @property
    def is_proper(self) -> bool:
        return bool(self.feasible)

    @property
    def is_normal(self) -> bool:
        return bool(self.feasible) and self.feasible[0] == 0

    def index(self, e: Element) -> int:
        """Position of element ``e``, given by label or by integer index."""
        if isinstance(e, bool):
            raise LabelError(f"unknown element {e!r}")
        if isinstance(e, int):
            if 0 <= e < self.n:
                return e
            raise LabelError(f"element index {e} out of range for {self.n} elements")
        try:
            return self.labels.index(e)
        except ValueError:
            raise LabelError(f"unknown element {e!r}") from None

    def mask(self, subset: SubsetLike) -> int:
        """Convert a mask or an iterable of labels to a validated mask."""
        if isinstance(subset, bool):
            raise LabelError(f"invalid subset {subset!r}")
        if isinstance(subset, int):
            if subset < 0 or subset & ~self.full:
                raise LabelError(f"subset mask {subset:#x} has bits outside the ground set")
            return subset
        if isinstance(subset, str):
            subset = [subset]
        m = 0
        for lab in subset:
            if not isinstance(lab, str):
                raise LabelError(f"subset members must be labels, got {lab!r}")
            m |= 1 << self.index(lab)
        return m

    def names(self, mask: int) -> list[str]:
        """Labels of the elements in ``mask``, in ground-set order."""
        return [self.labels[i] for i in iter_bits(mask)]

    def feasible_sets(self) -> list[frozenset[str]]:
        return [frozenset(self.names(x)) for x in self.feasible]

    def __contains__(self, subset) -> bool:
        return self.mask(subset) in set(self.feasible)

    def __repr__(self) -> str:
        sets = ", ".join("{" + ",".join(self.names(x)) + "}" for x in self.feasible)
        return f"SetSystem(ground=[{','.join(self.labels)}], feasible=[{sets}])"


class WidthProfile(NamedTuple):
    r_min: int
    r_max: int
    width: int


class TypePair(NamedTuple):
    primal: str
    dual: str

    def __str__(self) -> str:
        return self.primal + self.dual


@dataclass(frozen=True)
class ElementFlags:
    coloop: bool
    loop: bool
    ribbon_loop: bool
    # None unless ribbon_loop
    orientable_ribbon_loop: bool | None


# (shift of r_min, shift of r_max) under a single-element twist, keyed by type.
TYPE_SHIFTS: dict[str, tuple[int, int]] = {
    "pp": (-1, +1),
    "uu": (+1, -1),
    "pu": (-1, -1),
    "up": (+1, +1),
    "tp": (0, +1),
    "tu": (0, -1),
    "pt": (-1, 0),
    "ut": (+1, 0),
    "tt": (0, 0),
}


def type_width_change(t: TypePair | str) -> int:
    dmin, dmax = TYPE_SHIFTS[str(t)]
    return dmax - dmin


def make_set_system(labels: Sequence[str], feasible: Iterable[Iterable[str]]) -> SetSystem:
    """Build a set system from element labels and label-sets of feasible sets.

    >>> make_set_system(["1", "2"], [[], ["1", "2"], ["2", "1"]])
    SetSystem(ground=[1,2], feasible=[{}, {1,2}])
    """
    labels = tuple(labels)
    if len(labels) > MAX_ELEMENTS:
        raise GuardError(f"ground set has {len(labels)} elements; the limit is {MAX_ELEMENTS}")
    if len(set(labels)) != len(labels):
        dup = sorted({lab for lab in labels if labels.count(lab) > 1})
        raise LabelError(f"duplicate element label(s): {', '.join(dup)}")
    pos = {lab: i for i, lab in enumerate(labels)}
    masks = []
    for k, members in enumerate(feasible):
        if isinstance(members, str):
            raise LabelError(f"feasible set #{k} must be a list of labels, got a string")
        m = 0
        for lab in members:
            if lab not in pos:
                raise LabelError(f"feasible set #{k} mentions unknown element {lab!r}")
            m |= 1 << pos[lab]
        masks.append(m)
    return SetSystem.from_masks(labels, masks)


def _require_proper(D: SetSystem) -> None:
    if not D.feasible:
        raise ImproperError("operation requires a proper set system (no feasible sets given)")


def twist(D: SetSystem, A: SubsetLike) -> SetSystem:
    """The twist ``D * A``: every feasible set ``X`` is replaced by ``A ^ X``."""
    a = D.mask(A)
    if a == 0:
        return D
    return SetSystem._trusted(D.labels, tuple(sorted(a ^ x for x in D.feasible)))


def dual(D: SetSystem) -> SetSystem:
    return twist(D, D.full)


def _drop_bit(x: int, i: int) -> int:
    low = x & ((1 << i) - 1)
    return low | ((x >> (i + 1)) << i)


def delete_element(D: SetSystem, e: Element) -> SetSystem:
    _require_proper(D)
    i = D.index(e)
    bit = 1 << i
    labels = D.labels[:i] + D.labels[i + 1:]
    if all(x & bit for x in D.feasible):
        # coloop: remove e from every feasible set
        masks = [_drop_bit(x, i) for x in D.feasible]
    else:
        masks = [_drop_bit(x, i) for x in D.feasible if not x & bit]
    return SetSystem._trusted(labels, tuple(sorted(set(masks))))


def delete(D: SetSystem, A: SubsetLike) -> SetSystem:
    """``D - A``, deleting the elements of ``A`` one at a time in ground-set order."""
    _require_proper(D)
    for lab in D.names(D.mask(A)):
        D = delete_element(D, lab)
    return D


def _exchange_table(feasible: Sequence[int], n: int) -> dict[int, list[int]]:
    """For every feasible X and element u, the mask of v with X ^ {u, v} feasible."""
    if n <= 16:
        present = bytearray(1 << n)
        for x in feasible:
            present[x] = 1
        member = present.__getitem__
    else:
        member = set(feasible).__contains__
    bits = [1 << v for v in range(n)]
    table = {}
    for x in feasible:
        row = []
        for u in range(n):
            xu = x ^ bits[u]
            good = 0
            for v in range(n):
                if member(xu if v == u else xu ^ bits[v]):
                    good |= bits[v]
            row.append(good)
        table[x] = row
    return table


# beyond this many feasible sets the numpy axiom check beats the pure-Python loop
_VECTORISE_AT = 12


def _is_delta_matroid_numpy(feasible: Sequence[int], n: int) -> bool:
    F = np.asarray(feasible, dtype=np.int64)
    k = len(F)
    bits = np.int64(1) << np.arange(n, dtype=np.int64)
    # cand[x, u, v] = X ^ {u, v}; the diagonal u == v is X ^ {u}
    xu = F[:, None] ^ bits[None, :]
    cand = xu[:, :, None] ^ np.where(np.eye(n, dtype=bool), 0, bits[None, :])[None, :, :]
    pos = np.clip(np.searchsorted(F, cand), 0, k - 1)
    member = F[pos] == cand
    good = (member * bits[None, None, :]).sum(axis=2)  # (k, n)
    chunk = max(1, (1 << 22) // max(k, 1))
    for start in range(0, k, chunk):
        d = F[start:start + chunk, None] ^ F[None, :]
        g = good[start:start + chunk]
        for u in range(n):
            has_u = (d >> u) & 1
            if np.any(has_u & ((g[:, u][:, None] & d) == 0)):
                return False
    return True


def is_delta_matroid(D: SetSystem) -> bool:
    """Brute-force check of the Symmetric Exchange Axiom over all pairs of feasible sets."""
    if not D.feasible:
        return False
    if len(D.feasible) > _VECTORISE_AT and D.n > 0:
        return _is_delta_matroid_numpy(D.feasible, D.n)
    table = _exchange_table(D.feasible, D.n)
    for x in D.feasible:
        row = table[x]
        for y in D.feasible:
            d = rest = x ^ y
            while rest:
                low = rest & -rest
                if not row[low.bit_length() - 1] & d:
                    return False
                rest ^= low
    return True


def find_exchange_violation(D: SetSystem):
    """First ``(X, Y, u)`` witnessing failure of the exchange axiom, or None."""
    _require_proper(D)
    table = _exchange_table(D.feasible, D.n)
    for x in D.feasible:
        for y in D.feasible:
            d = x ^ y
            for u in iter_bits(d):
                if not table[x][u] & d:
                    return x, y, u
    return None


def is_even(D: SetSystem) -> bool:
    _require_proper(D)
    parity = D.feasible[0].bit_count() & 1
    return all(x.bit_count() & 1 == parity for x in D.feasible)


def width_profile(D: SetSystem) -> WidthProfile:
    _require_proper(D)
    sizes = [x.bit_count() for x in D.feasible]
    lo, hi = min(sizes), max(sizes)
    return WidthProfile(lo, hi, hi - lo)


def width(D: SetSystem) -> int:
    return width_profile(D).width


def _of_size(feasible: Iterable[int], k: int) -> list[int]:
    return [x for x in feasible if x.bit_count() == k]


def strata(D: SetSystem, anchor: str, i: int) -> list[int]:
    """Feasible sets of size ``r_min + i`` (anchor ``"min"``) or ``r_max - i`` (``"max"``)."""
    prof = width_profile(D)
    if not 0 <= i <= prof.width:
        raise ValueError(f"stratum offset {i} outside 0..{prof.width}")
    if anchor == "min":
        return _of_size(D.feasible, prof.r_min + i)
    if anchor == "max":
        return _of_size(D.feasible, prof.r_max - i)
    raise ValueError(f"anchor must be 'min' or 'max', got {anchor!r}")


def _primal_type(feasible: Sequence[int], bit: int) -> str:
    r = min(x.bit_count() for x in feasible)
    if any(x & bit for x in feasible if x.bit_count() == r):
        return "p"
    if any(x & bit for x in feasible if x.bit_count() == r + 1):
        return "t"
    return "u"


def _dual_type(feasible: Sequence[int], bit: int) -> str:
    r = max(x.bit_count() for x in feasible)
    if any(not x & bit for x in feasible if x.bit_count() == r):
        return "p"
    if any(not x & bit for x in feasible if x.bit_count() == r - 1):
        return "t"
    return "u"


def primal_type(D: SetSystem, e: Element) -> str:
    _require_proper(D)
    return _primal_type(D.feasible, 1 << D.index(e))


def element_type(D: SetSystem, e: Element, cross_check: bool = False) -> TypePair:
    """Type of ``e``: its primal type and its primal type in the dual ``D * E``.

    The dual component is read off the top two strata directly.  With
    ``cross_check`` the dual is also materialised and both routes compared.
    """
    _require_proper(D)
    bit = 1 << D.index(e)
    t = TypePair(_primal_type(D.feasible, bit), _dual_type(D.feasible, bit))
    if cross_check:
        via_dual = _primal_type(dual(D).feasible, bit)
        if via_dual != t.dual:
            raise AssertionError(f"dual type routes disagree for {e!r}: {t.dual} vs {via_dual}")
    return t


def element_types(D: SetSystem) -> dict[str, TypePair]:
    return {lab: element_type(D, lab) for lab in D.labels}


def element_flags(D: SetSystem, e: Element) -> ElementFlags:
    _require_proper(D)
    bit = 1 << D.index(e)
    coloop = all(x & bit for x in D.feasible)
    loop = not any(x & bit for x in D.feasible)
    r = min(x.bit_count() for x in D.feasible)
    ribbon_loop = not any(x & bit for x in D.feasible if x.bit_count() == r)
    orientable = None
    if ribbon_loop:
        twisted = [x ^ bit for x in D.feasible]
        r2 = min(x.bit_count() for x in twisted)
        orientable = any(x & bit for x in twisted if x.bit_count() == r2)
    return ElementFlags(coloop, loop, ribbon_loop, orientable)


@lru_cache(maxsize=None)
def _popcounts(n: int) -> np.ndarray:
    table = np.zeros(1 << n, dtype=np.int16)
    for i in range(n):
        table[1 << i:2 << i] = table[:1 << i] + 1
    return table


def _distance_transform(present: np.ndarray, n: int) -> np.ndarray:
    """Hamming distance from every mask to the nearest mask flagged in ``present``."""
    dist = np.where(present, 0, n + 1).astype(np.int8)
    for i in range(n):
        view = dist.reshape(-1, 2, 1 << i)
        lo = view[:, 0, :].copy()
        hi = view[:, 1, :]
        np.minimum(lo, hi + 1, out=view[:, 0, :])
        np.minimum(hi, lo + 1, out=hi)
    return dist


def twist_width_table(D: SetSystem) -> np.ndarray:
    """Array ``w`` of length ``2**n`` with ``w[A] = width(twist(D, A))``.

    ``r_min(D*A)`` is the Hamming distance from ``A`` to the feasible sets and
    ``r_max(D*A)`` is ``n`` minus the distance to their complements, so both
    tables come from a separable distance transform on the hypercube.
    """
    _require_proper(D)
    n = D.n
    if n > MAX_ENUMERATION:
        raise GuardError(f"twist enumeration needs n <= {MAX_ENUMERATION}, got {n}")
    F = np.fromiter(D.feasible, dtype=np.int64, count=len(D.feasible))
    if len(F) << n <= 1 << 16:
        # small case: read |A ^ X| for every pair straight from a popcount table
        sizes = _popcounts(n)[np.arange(1 << n)[:, None] ^ F[None, :]]
        return (sizes.max(axis=1) - sizes.min(axis=1)).astype(np.int16)
    present = np.zeros(1 << n, dtype=bool)
    present[F] = True
    r_min = _distance_transform(present, n)
    comp = np.zeros(1 << n, dtype=bool)
    comp[F ^ D.full] = True
    r_max = n - _distance_transform(comp, n).astype(np.int16)
    return (r_max - r_min).astype(np.int16)


@dataclass(frozen=True)
class TwistWidthData:
    width_set: frozenset[int]
    w_M: int


def twist_width_data(D: SetSystem) -> TwistWidthData:
    widths = np.unique(twist_width_table(D))
    ws = frozenset(int(w) for w in widths)
    return TwistWidthData(ws, max(ws))
