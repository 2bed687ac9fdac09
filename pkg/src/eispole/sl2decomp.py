"""Decomposition of integer weight multisets into irreducible sl2 pieces.

Multiplicity stripping: the (l+1)-dimensional irreducible has weights
l, l-2, ..., -l, so m_l = count(l) - count(l+2).  A valid weight multiset
is symmetric under negation and of uniform parity; anything else signals
a bug upstream and is rejected, never silently corrected.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable


class NotARepresentationError(ValueError):
    """The multiset is not the weight multiset of an sl2 representation."""


@dataclass(frozen=True)
class SL2Decomposition:
    """Map l -> multiplicity of the (l+1)-dimensional irreducible."""

    mults: tuple[tuple[int, int], ...]  # (l, m) pairs, descending l

    def as_dict(self) -> dict[int, int]:
        return dict(self.mults)

    @property
    def dimension(self) -> int:
        return sum((l + 1) * m for l, m in self.mults)

    def weights(self) -> Counter:
        out: Counter = Counter()
        for l, m in self.mults:
            for k in range(-l, l + 1, 2):
                out[k] += m
        return out

    def to_json(self) -> dict:
        return {"sl2": [{"l": l, "mult": m} for l, m in self.mults]}


def decompose(weights: Iterable[int]) -> SL2Decomposition:
    counts = Counter(weights)
    for k, c in counts.items():
        if counts[-k] != c:
            raise NotARepresentationError(
                f"asymmetric multiset: count({k})={c}, "
                f"count({-k})={counts[-k]}"
            )
    if len({k % 2 for k in counts}) > 1:
        raise NotARepresentationError("mixed-parity weight multiset")
    mults = []
    for l in sorted(counts, reverse=True):
        if l < 0:
            break
        m = counts[l] - counts[l + 2]
        if m < 0:
            raise NotARepresentationError(
                f"negative multiplicity at l={l}: "
                f"count({l})={counts[l]} < count({l + 2})={counts[l + 2]}"
            )
        if m > 0:
            mults.append((l, m))
    return SL2Decomposition(mults=tuple(mults))
