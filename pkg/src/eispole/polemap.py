"""Pole polynomial assembly and pole-table reporting.

An irreducible V_l sitting in level j contributes the factor
(j*s - 1 - l/2), i.e. a zero at (l+2)/(2j) > 0, to the pole polynomial,
and the factor (j*s + l/2) with zero -l/(2j) <= 0 to the companion
numerator.  Coincident zeros from distinct (j, l) pairs merge into a
single higher-order pole (the G2 double pole at 1/2 is the smallest
example).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .sl2decomp import SL2Decomposition


@dataclass(frozen=True)
class PolePolynomial:
    zeros: tuple[tuple[Fraction, int], ...]  # (location, order), descending
    provenance: tuple[tuple[Fraction, tuple[tuple[int, int], ...]], ...] = field(
        default=(), compare=False
    )

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.zeros)

    @property
    def total_order(self) -> int:
        return sum(order for _, order in self.zeros)


def pole_polynomial(dec: Mapping[int, SL2Decomposition]) -> PolePolynomial:
    zeros: Counter = Counter()
    prov: dict[Fraction, list[tuple[int, int]]] = {}
    for j, d in dec.items():
        for l, m in d.mults:
            s0 = Fraction(l + 2, 2 * j)
            zeros[s0] += m
            prov.setdefault(s0, []).extend([(j, l)] * m)
    ordered = sorted(zeros, reverse=True)
    return PolePolynomial(
        zeros=tuple((s0, zeros[s0]) for s0 in ordered),
        provenance=tuple((s0, tuple(prov[s0])) for s0 in ordered),
    )


def numerator_zeros(dec: Mapping[int, SL2Decomposition]) -> Counter:
    """Multiset of zeros -l/(2j) of the companion numerator; all <= 0."""
    out: Counter = Counter()
    for j, d in dec.items():
        for l, m in d.mults:
            out[Fraction(-l, 2 * j)] += m
    return out


def pole_table(
    pp: PolePolynomial, rescale: Fraction = Fraction(1)
) -> list[tuple[Fraction, int]]:
    """Descending (location/rescale, order) list; orders are unchanged."""
    if rescale <= 0:
        raise ValueError(f"rescale must be positive, got {rescale}")
    return [(s0 / rescale, order) for s0, order in pp.zeros]


def format_pole_entry(location: Fraction, order: int) -> str:
    if order == 1:
        return str(location)
    return f"({location}; {order})"


def format_pole_table(entries: list[tuple[Fraction, int]]) -> str:
    return ", ".join(format_pole_entry(s0, m) for s0, m in entries)


def poles_to_json(pp: PolePolynomial) -> dict:
    return {
        "poles": [{"s": str(s0), "order": m} for s0, m in pp.zeros]
    }


def _latex_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return rf"\frac{{{x.numerator}}}{{{x.denominator}}}"


def format_pole_table_latex(entries: list[tuple[Fraction, int]]) -> str:
    parts = []
    for s0, m in entries:
        if m == 1:
            parts.append(_latex_rational(s0))
        else:
            parts.append(rf"({_latex_rational(s0)}; {m})")
    return "$s = " + ", ".join(parts) + "$"
