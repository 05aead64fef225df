"""Twist polynomials and their even/odd/interpolating classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import HypothesisError
from .gf2 import is_binary
from .setsys import SetSystem, is_delta_matroid, twist_width_data, twist_width_table

EVEN = "even_polynomial"
ODD = "odd_polynomial"
MIXED = "mixed"


@dataclass(frozen=True)
class WidthPolynomial:
    """Sparse polynomial with non-negative integer coefficients, keyed by degree."""

    coefficients: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for d, c in self.coefficients.items():
            d, c = int(d), int(c)
            if d < 0 or c < 0:
                raise ValueError(f"negative degree or coefficient: {d}: {c}")
            if c:
                clean[d] = c
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    def __eq__(self, other):
        if not isinstance(other, WidthPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    def __getitem__(self, degree: int) -> int:
        return self.coefficients.get(degree, 0)

    @property
    def support(self) -> list[int]:
        return list(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, z):
        return sum(c * z**d for d, c in self.coefficients.items())

    def even_part(self) -> "WidthPolynomial":
        return WidthPolynomial({d: c for d, c in self.coefficients.items() if d % 2 == 0})

    def odd_part(self) -> "WidthPolynomial":
        return WidthPolynomial({d: c for d, c in self.coefficients.items() if d % 2 == 1})

    def merge(self, other: "WidthPolynomial") -> "WidthPolynomial":
        out = dict(self.coefficients)
        for d, c in other.coefficients.items():
            out[d] = out.get(d, 0) + c
        return WidthPolynomial(out)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for d, c in self.coefficients.items():
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(terms)


@dataclass(frozen=True)
class PolyReport:
    category: str
    gaps: tuple[tuple[int, int], ...]
    even_part_interpolating: bool | None
    odd_part_interpolating: bool | None
    theorem5_conclusion: bool


def twist_polynomial(D: SetSystem) -> WidthPolynomial:
    """Sum over all ``A`` of ``z ** width(D * A)``."""
    counts = np.bincount(twist_width_table(D))
    return WidthPolynomial({d: int(c) for d, c in enumerate(counts) if c})


def gaps(p: WidthPolynomial) -> list[tuple[int, int]]:
    """Maximal runs of zero coefficients strictly inside the support, as ``(start, length)``.

    >>> gaps(WidthPolynomial({0: 1, 4: 1}))
    [(1, 3)]
    """
    if p.is_zero:
        raise ValueError("gaps of the zero polynomial are undefined")
    sup = p.support
    return [(a + 1, b - a - 1) for a, b in zip(sup, sup[1:]) if b - a > 1]


def is_interpolating(p: WidthPolynomial) -> bool:
    return not p.is_zero and not gaps(p)


def _part_interpolating(part: WidthPolynomial) -> bool | None:
    # p_e(z^2) / p_o(z^2) are read as polynomials in z^2, so only steps of 2 count as adjacent
    if part.is_zero:
        return None
    sup = part.support
    return all(b - a == 2 for a, b in zip(sup, sup[1:]))


def classify(p: WidthPolynomial) -> PolyReport:
    if p.is_zero:
        raise ValueError("cannot classify the zero polynomial")
    even = _part_interpolating(p.even_part())
    odd = _part_interpolating(p.odd_part())
    if odd is None:
        category = EVEN
    elif even is None:
        category = ODD
    else:
        category = MIXED
    conclusion = category != MIXED or (even is True and odd is True)
    return PolyReport(category, tuple(gaps(p)), even, odd, conclusion)


def _require_binary_delta_matroid(D: SetSystem) -> None:
    if not is_delta_matroid(D):
        raise HypothesisError("theorem checks require a delta-matroid")
    if not is_binary(D, assume_delta_matroid=True):
        raise HypothesisError("theorem checks require a binary delta-matroid")


def consecutive_widths_hold(width_set, w_max: int) -> bool:
    """If widths k and k+1 both occur, every m in k+2..w_max occurs too."""
    ws = set(width_set)
    for k in ws:
        if k + 1 in ws and any(m not in ws for m in range(k + 2, w_max + 1)):
            return False
    return True


def check_theorem3(D: SetSystem, verify_hypotheses: bool = True) -> bool:
    if verify_hypotheses:
        _require_binary_delta_matroid(D)
    data = twist_width_data(D)
    return consecutive_widths_hold(data.width_set, data.w_M)


def check_theorem5(D: SetSystem, verify_hypotheses: bool = True) -> PolyReport:
    if verify_hypotheses:
        _require_binary_delta_matroid(D)
    return classify(twist_polynomial(D))
