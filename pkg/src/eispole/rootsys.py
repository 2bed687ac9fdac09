"""Finite root systems built from Cartan data.

Roots and coroots are integer coefficient vectors over the simple
(co)root bases.  The pairing convention throughout the package is

    C[i][j] = <alpha_i, alpha_j^vee>

so that the simple reflection s_j acts on root coordinates by
v -> v - <v, alpha_j^vee> e_j, a pure integer operation, and pairing a
weight (fundamental-weight coordinates) with a coroot is a dot product.
Node numbering follows Bourbaki: for G2 node 1 is the short simple root,
for F4 nodes 1,2 are long and 3,4 short, for E6/E7/E8 node 2 hangs off
node 4 of the chain 1-3-4-5-6(-7)(-8).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

Vector = tuple[int, ...]

ADMISSIBLE_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "F": 4, "G": 2}

DEFAULT_MAX_RANK = 8


class ConfigurationError(ValueError):
    """Inadmissible root-system family/rank combination."""


class InternalConsistencyError(RuntimeError):
    """A structural identity that must hold by construction failed."""


@dataclass(frozen=True, order=True)
class RootSystemKind:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family == "E":
            if self.rank not in (6, 7, 8):
                raise ConfigurationError(f"E{self.rank} is not a root system")
        elif self.family in ADMISSIBLE_MIN_RANK:
            lo = ADMISSIBLE_MIN_RANK[self.family]
            hi = 4 if self.family == "F" else (2 if self.family == "G" else None)
            if self.rank < lo or (hi is not None and self.rank > hi):
                raise ConfigurationError(
                    f"{self.family}{self.rank} is not a root system"
                )
        else:
            raise ConfigurationError(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, label: str) -> "RootSystemKind":
        label = label.strip()
        if len(label) < 2 or not label[1:].isdigit():
            raise ConfigurationError(f"cannot parse type label {label!r}")
        return cls(label[0].upper(), int(label[1:]))


def cartan_matrix(kind: RootSystemKind) -> tuple[Vector, ...]:
    """Pairing matrix C[i][j] = <alpha_i, alpha_j^vee> (0-indexed)."""
    n = kind.rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        C[i][j] = cij
        C[j][i] = cji

    fam = kind.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            bond(n - 2, n - 1, -2, -1)
        if fam == "C" and n >= 2:
            bond(n - 2, n - 1, -1, -2)
    elif fam == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif fam == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)  # nodes 1,2 long; 3,4 short
        bond(2, 3)
    elif fam == "G":
        bond(0, 1, -1, -3)  # node 1 short, node 2 long
    return tuple(tuple(row) for row in C)


_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_WEYL_ORDERS = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2**n * factorial(n),
    "C": lambda n: 2**n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def positive_root_count(kind: RootSystemKind) -> int:
    return _COUNTS[kind.family](kind.rank)


def weyl_order(kind: RootSystemKind) -> int:
    return _WEYL_ORDERS[kind.family](kind.rank)


@dataclass(frozen=True)
class Weight:
    """Rational vector in the fundamental-weight basis."""

    coords: tuple[Fraction, ...]

    def pair(self, coroot: Vector) -> Fraction:
        return sum(
            (c * d for c, d in zip(self.coords, coroot)), start=Fraction(0)
        )


@dataclass(frozen=True)
class RootSystem:
    kind: RootSystemKind
    pairing: tuple[Vector, ...]
    positive_roots: tuple[tuple[Vector, Vector], ...]

    @property
    def rank(self) -> int:
        return self.kind.rank

    def height(self, root: Vector) -> int:
        return sum(root)

    def heights(self) -> tuple[int, ...]:
        return tuple(sum(r) for r, _ in self.positive_roots)

    def pair_root_coroot(self, root: Vector, coroot: Vector) -> int:
        """<v, d^vee> for a root-lattice vector v and a coroot d."""
        C = self.pairing
        return sum(
            root[i] * sum(C[i][k] * coroot[k] for k in range(self.rank))
            for i in range(self.rank)
        )

    def coroot_of(self, root: Vector) -> Vector:
        for r, c in self.positive_roots:
            if r == root:
                return c
        raise KeyError(f"{root} is not a positive root of {self.kind}")

    def simple_reflection_on_root(self, j: int, v: Vector) -> Vector:
        """s_j acting on root coordinates (0-indexed node j)."""
        C = self.pairing
        pv = sum(v[i] * C[i][j] for i in range(self.rank))
        return tuple(x - pv if i == j else x for i, x in enumerate(v))


def _closure(C: tuple[Vector, ...]) -> dict[Vector, Vector]:
    """Simultaneous reflection closure over (root, coroot) pairs."""
    n = len(C)
    unit = lambda i: tuple(1 if k == i else 0 for k in range(n))
    pairs: dict[Vector, Vector] = {unit(i): unit(i) for i in range(n)}
    frontier = list(pairs.items())
    while frontier:
        new: list[tuple[Vector, Vector]] = []
        for v, d in frontier:
            for j in range(n):
                pv = sum(v[i] * C[i][j] for i in range(n))
                nv = tuple(x - pv if i == j else x for i, x in enumerate(v))
                if min(nv) < 0 or nv in pairs:
                    continue
                pd = sum(d[i] * C[j][i] for i in range(n))
                nd = tuple(x - pd if i == j else x for i, x in enumerate(d))
                pairs[nv] = nd
                new.append((nv, nd))
        frontier = new
    return pairs


def build_root_system(
    kind: RootSystemKind, *, max_rank: int = DEFAULT_MAX_RANK
) -> RootSystem:
    """Generate the full positive system with paired coroots."""
    if kind.rank > max_rank:
        raise ConfigurationError(
            f"rank {kind.rank} exceeds the configured cap {max_rank}"
        )
    C = cartan_matrix(kind)
    pairs = _closure(C)
    ordered = sorted(pairs.items(), key=lambda rc: (sum(rc[0]), rc[0]))
    rs = RootSystem(kind=kind, pairing=C, positive_roots=tuple(ordered))
    if len(rs.positive_roots) != positive_root_count(kind):
        raise InternalConsistencyError(
            f"{kind}: closure produced {len(rs.positive_roots)} positive "
            f"roots, expected {positive_root_count(kind)}"
        )
    return rs


DUAL_FAMILY = {"A": "A", "B": "C", "C": "B", "D": "D", "E": "E", "F": "F", "G": "G"}


def dual(rs: RootSystem) -> tuple[RootSystem, tuple[int, ...]]:
    """Root system of the transposed pairing matrix.

    Returns the Bourbaki-standard dual system together with the node
    permutation identifying it: entry i (0-indexed) is the node of the
    dual system corresponding to node i of ``rs``.
    """
    kind = rs.kind
    n = kind.rank
    dual_kind = RootSystemKind(DUAL_FAMILY[kind.family], n)
    if kind.family == "F":
        relabel = tuple(n - 1 - i for i in range(n))
    elif kind.family == "G":
        relabel = (1, 0)
    else:
        relabel = tuple(range(n))
    dual_rs = build_root_system(dual_kind, max_rank=n)
    Ct = cartan_matrix(kind)
    D = cartan_matrix(dual_kind)
    for i in range(n):
        for j in range(n):
            if Ct[j][i] != D[relabel[i]][relabel[j]]:
                raise InternalConsistencyError(
                    f"dual relabel of {kind} does not transpose the pairing"
                )
    return dual_rs, relabel


def rho(rs: RootSystem) -> Weight:
    """rho_B = sum of fundamental weights: the all-ones weight."""
    return Weight(tuple(Fraction(1) for _ in range(rs.rank)))


def kostant_multisets(
    rs: RootSystem,
) -> tuple[Counter, Counter, Counter]:
    """Kostant's multiset identity for <rho, alpha^vee>.

    lhs = {<rho, a^vee> + 1 : a positive}, rhs_roots the same without the
    +1 over non-simple roots, residual = lhs minus rhs_roots.  For a valid
    root system the residual has exactly ``rank`` entries, all >= 2 (the
    degrees of the Weyl group).
    """
    lhs: Counter = Counter()
    rhs: Counter = Counter()
    for root, coroot in rs.positive_roots:
        h = sum(coroot)
        lhs[h + 1] += 1
        if sum(root) > 1:  # non-simple
            rhs[h] += 1
    if rhs - lhs:
        raise InternalConsistencyError(
            f"{rs.kind}: non-simple pairings are not contained in the "
            "shifted multiset"
        )
    residual = lhs - rhs
    return lhs, rhs, residual


def iter_kinds(max_rank: int = DEFAULT_MAX_RANK) -> Iterator[RootSystemKind]:
    """All admissible kinds up to the given rank, in a stable order."""
    for n in range(1, max_rank + 1):
        yield RootSystemKind("A", n)
    for n in range(2, max_rank + 1):
        yield RootSystemKind("B", n)
        yield RootSystemKind("C", n)
    for n in range(3, max_rank + 1):
        yield RootSystemKind("D", n)
    for n in (6, 7, 8):
        if n <= max_rank:
            yield RootSystemKind("E", n)
    if max_rank >= 4:
        yield RootSystemKind("F", 4)
    if max_rank >= 2:
        yield RootSystemKind("G", 2)
