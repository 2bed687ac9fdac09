"""Desk-scale Weyl group engine.

Elements are stored by their action on root coordinates: a tuple of
columns, column i being the image of the simple root alpha_i.  Right
multiplication by a simple reflection is a cheap column update, so BFS
closure reaches W(E6) (51840 elements) in seconds.  The zeta factors of
the constant-term coefficients are never evaluated; only their affine
arguments in s along the residue line matter, and those are tracked as
exact (a, j) pairs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .parabolic import ParabolicData, affine_form
from .residue_oracle import AffineForm
from .rootsys import RootSystem, Vector, weyl_order

Columns = tuple[Vector, ...]


class WeylSizeError(RuntimeError):
    """|W| exceeds the requested cap."""


@dataclass(frozen=True)
class WeylElement:
    columns: Columns  # column i = image of alpha_i in root coordinates
    length: int

    def apply(self, v: Vector) -> Vector:
        n = len(v)
        return tuple(
            sum(v[i] * self.columns[i][k] for i in range(n)) for k in range(n)
        )


def _identity_columns(n: int) -> Columns:
    return tuple(
        tuple(1 if k == i else 0 for k in range(n)) for i in range(n)
    )


def _right_multiply(cols: Columns, j: int, C) -> Columns:
    # (w s_j)(alpha_i) = w(alpha_i) - C[i][j] * w(alpha_j)
    n = len(cols)
    colj = cols[j]
    out = []
    for i in range(n):
        cij = C[i][j]
        if cij == 0 and i != j:
            out.append(cols[i])
        else:
            out.append(tuple(x - cij * y for x, y in zip(cols[i], colj)))
    return tuple(out)


def generate_weyl(rs: RootSystem, cap: int) -> dict[Columns, WeylElement]:
    """BFS closure under right multiplication by simple reflections."""
    order = weyl_order(rs.kind)
    if order > cap:
        raise WeylSizeError(
            f"|W({rs.kind})| = {order} exceeds the cap {cap}"
        )
    n = rs.rank
    C = rs.pairing
    ident = _identity_columns(n)
    elements: dict[Columns, WeylElement] = {
        ident: WeylElement(columns=ident, length=0)
    }
    frontier = [ident]
    length = 0
    while frontier:
        length += 1
        new = []
        for cols in frontier:
            for j in range(n):
                nxt = _right_multiply(cols, j, C)
                if nxt not in elements:
                    elements[nxt] = WeylElement(columns=nxt, length=length)
                    new.append(nxt)
        frontier = new
    return elements


def inversion_set(w: WeylElement, rs: RootSystem) -> set[Vector]:
    """Positive roots sent negative by w."""
    return {
        root for root, _ in rs.positive_roots if max(w.apply(root)) <= 0
    }


def multiply(w1: WeylElement, w2: WeylElement, rs: RootSystem) -> WeylElement:
    """w1 * w2 (apply w2 first); length recomputed from the inversion set."""
    n = len(w1.columns)
    cols = tuple(w1.apply(w2.columns[i]) for i in range(n))
    w = WeylElement(columns=cols, length=0)
    return WeylElement(columns=cols, length=len(inversion_set(w, rs)))


def inverse(w: WeylElement) -> WeylElement:
    """Matrix inverse; Weyl matrices are integral with integral inverse."""
    n = len(w.columns)
    aug = [
        [Fraction(w.columns[i][k]) for k in range(n)]
        + [Fraction(1 if k == i else 0) for k in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    cols = tuple(
        tuple(int(aug[i][n + k]) for k in range(n)) for i in range(n)
    )
    return WeylElement(columns=cols, length=w.length)


def cocycle_check(
    w1: WeylElement, w2: WeylElement, rs: RootSystem
) -> bool | None:
    """Inv(w1 w2) = Inv(w2) + w2^{-1} Inv(w1) for length-additive pairs.

    Returns None (skipped) when the lengths do not add.
    """
    prod = multiply(w1, w2, rs)
    if prod.length != w1.length + w2.length:
        return None
    w2inv = inverse(w2)
    lhs = Counter(inversion_set(prod, rs))
    rhs = Counter(inversion_set(w2, rs))
    for root in inversion_set(w1, rs):
        rhs[w2inv.apply(root)] += 1
    return lhs == rhs


def residue_admissible(w: WeylElement, pd: ParabolicData) -> bool:
    """True iff w sends every Levi simple root negative."""
    for node in pd.theta:
        image = w.columns[node - 1]
        if max(image) > 0:
            return False
    return True


def cancellation_check(w: WeylElement, pd: ParabolicData) -> dict:
    """Critical-strip safety of the surviving zeta denominators.

    Restricted to the residue line, the inverted coroots of w give the
    numerator arguments N = {a + j*s} and denominator arguments
    D = {a + 1 + j*s}.  One constant 1 per inverted Levi simple root is
    consumed by the residue itself; after cancelling identical forms,
    every surviving denominator argument must have constant term >= 1,
    keeping it clear of the critical strip for Re(s) >= 0.
    """
    if not residue_admissible(w, pd):
        raise ValueError("w is not residue-admissible for this parabolic")
    rs = pd.rs
    inv = inversion_set(w, rs)
    num: Counter = Counter()
    den: Counter = Counter()
    for root in inv:
        a, j = affine_form(pd, rs.coroot_of(root))
        num[AffineForm(a, j)] += 1
        den[AffineForm(a + 1, j)] += 1
    one = AffineForm(Fraction(1), 0)
    for node in pd.theta:
        unit = tuple(1 if k == node - 1 else 0 for k in range(rs.rank))
        if unit in inv:
            num[one] -= 1
    cancelled = num & den
    surviving_den = list((den - cancelled).elements())
    ok = all(f.a >= 1 for f in surviving_den)
    return {"ok": ok, "surviving_denominators": sorted(surviving_den)}
