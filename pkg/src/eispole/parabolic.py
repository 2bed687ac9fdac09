"""Maximal standard parabolic data and the dual-nilradical grading.

Removing one simple node beta splits the positive system into Levi roots
(beta-coefficient 0) and nilradical roots.  On the dual side the
nilradical coroots are graded by their beta^vee-coefficient j, and each
level carries integer eigenvalues <2 rho_levi, gamma^vee> for the
neutral element of the principal sl2 of the dual Levi.  The level is
read off the coroot, never the root: the two differ for B/C/F/G.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootsys import RootSystem, Vector


@dataclass(frozen=True)
class ParabolicData:
    rs: RootSystem
    node: int  # 1-based index of the removed simple root beta
    theta: frozenset[int]  # remaining simple nodes (1-based)
    levi_positive: tuple[tuple[Vector, Vector], ...]
    nilradical: tuple[tuple[Vector, Vector], ...]
    two_rho_levi: Vector  # sum of Levi positive roots, root-lattice vector


@dataclass(frozen=True)
class GradedEigenvalues:
    """Map j -> sorted multiset of integer eigenvalues on level j."""

    levels: tuple[tuple[int, tuple[int, ...]], ...]

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.levels)

    def to_json(self) -> dict:
        return {"levels": {str(j): list(vals) for j, vals in self.levels}}


def parabolic_data(rs: RootSystem, node: int) -> ParabolicData:
    if not 1 <= node <= rs.rank:
        raise ValueError(f"node {node} out of range 1..{rs.rank}")
    i = node - 1
    levi = tuple(p for p in rs.positive_roots if p[0][i] == 0)
    nil = tuple(p for p in rs.positive_roots if p[0][i] >= 1)
    two_rho = tuple(
        sum(root[k] for root, _ in levi) for k in range(rs.rank)
    )
    theta = frozenset(k + 1 for k in range(rs.rank) if k != i)
    return ParabolicData(
        rs=rs,
        node=node,
        theta=theta,
        levi_positive=levi,
        nilradical=nil,
        two_rho_levi=two_rho,
    )


def coroot_level(pd: ParabolicData, coroot: Vector) -> int:
    """beta^vee-coefficient of a nilradical coroot."""
    if coroot not in {c for _, c in pd.nilradical}:
        raise ValueError(f"{coroot} is not a nilradical coroot")
    return coroot[pd.node - 1]


def eigenvalue(pd: ParabolicData, coroot: Vector) -> int:
    """<2 rho_levi, gamma^vee>, always an integer."""
    return pd.rs.pair_root_coroot(pd.two_rho_levi, coroot)


def graded_eigenvalues(pd: ParabolicData) -> GradedEigenvalues:
    buckets: dict[int, list[int]] = {}
    for _, coroot in pd.nilradical:
        j = coroot[pd.node - 1]
        buckets.setdefault(j, []).append(eigenvalue(pd, coroot))
    levels = tuple(
        (j, tuple(sorted(buckets[j]))) for j in sorted(buckets)
    )
    return GradedEigenvalues(levels=levels)


def affine_form(pd: ParabolicData, coroot: Vector) -> tuple[Fraction, int]:
    """<rho_levi + s*fundweight, gamma^vee> as the pair (a, j) in a + j*s."""
    a = Fraction(eigenvalue(pd, coroot), 2)
    j = coroot[pd.node - 1]
    return a, j
