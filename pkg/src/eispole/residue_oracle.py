"""Independent verification of the pole polynomial via the residue function.

The rational function

    F(s) = prod_{all positive coroots} <rho_levi + s*w, a^vee>
           / prod_{same minus simple Levi coroots} (<rho_levi + s*w, a^vee> - 1)

is built as exact multisets of affine forms a + j*s and reduced by
cancelling factors with identical zero locus (constants only against
equal constants).  The reduced denominator zeros must reproduce the pole
polynomial and the reduced numerator zeros the companion numerator -- a
second, structurally different route to the same answer, used to vet the
golden tables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction

from .parabolic import ParabolicData, affine_form, graded_eigenvalues
from .polemap import numerator_zeros, pole_polynomial
from .sl2decomp import decompose


class DegenerateConfigurationError(RuntimeError):
    """A constant factor of F(s) vanished; indicates a grading bug."""


@dataclass(frozen=True, order=True)
class AffineForm:
    """The linear form a + j*s with rational a and slope j >= 0."""

    a: Fraction
    j: int

    @property
    def is_constant(self) -> bool:
        return self.j == 0

    def zero(self) -> Fraction:
        if self.j == 0:
            raise ValueError(f"constant form {self} has no zero")
        return Fraction(-self.a, self.j)

    def __str__(self) -> str:
        if self.j == 0:
            return str(self.a)
        js = "s" if self.j == 1 else f"{self.j}s"
        if self.a == 0:
            return js
        sign = "+" if self.a > 0 else "-"
        return f"{js} {sign} {abs(self.a)}"


@dataclass(frozen=True)
class FactorLists:
    numerator: tuple[AffineForm, ...]
    denominator: tuple[AffineForm, ...]
    leading_constant_sign_ok: bool = True


def raw_residue_function(pd: ParabolicData) -> FactorLists:
    """F(s) before cancellation: one numerator factor per positive coroot,
    one denominator factor (shifted by -1) per non-simple-Levi coroot."""
    num: list[AffineForm] = []
    den: list[AffineForm] = []
    simple_levi = {
        coroot
        for root, coroot in pd.levi_positive
        if sum(root) == 1
    }
    for _, coroot in pd.rs.positive_roots:
        a, j = affine_form(pd, coroot)
        num.append(AffineForm(a, j))
        if coroot not in simple_levi:
            den.append(AffineForm(a - 1, j))
    return FactorLists(numerator=tuple(num), denominator=tuple(den))


def _locus_key(f: AffineForm):
    # Nonconstant forms compare by their zero regardless of slope;
    # constants only against the identical value.
    if f.is_constant:
        return ("const", f.a)
    return ("zero", f.zero())


def reduce(fl: FactorLists) -> FactorLists:
    num = Counter(fl.numerator)
    den = Counter(fl.denominator)
    num_by_key: dict = {}
    for f, c in num.items():
        num_by_key.setdefault(_locus_key(f), []).extend([f] * c)
    den_by_key: dict = {}
    for f, c in den.items():
        den_by_key.setdefault(_locus_key(f), []).extend([f] * c)
    sign = 1
    for key in set(num_by_key) & set(den_by_key):
        nf, df = num_by_key[key], den_by_key[key]
        for _ in range(min(len(nf), len(df))):
            nf.pop()
            df.pop()
    surviving_num = tuple(sorted(f for fs in num_by_key.values() for f in fs))
    surviving_den = tuple(sorted(f for fs in den_by_key.values() for f in fs))
    for f in surviving_num + surviving_den:
        if f.is_constant:
            if f.a == 0:
                raise DegenerateConfigurationError(
                    "zero constant factor survived reduction"
                )
            if f.a < 0:
                sign = -sign
    return FactorLists(
        numerator=surviving_num,
        denominator=surviving_den,
        leading_constant_sign_ok=(sign > 0),
    )


def _root_multiset(forms: tuple[AffineForm, ...]) -> Counter:
    return Counter(f.zero() for f in forms if not f.is_constant)


def cross_check(pd: ParabolicData) -> dict:
    """Run both pipelines and compare zero multisets.

    Returns a report rather than asserting: on a golden-table mismatch
    the report is what adjudicates between a bad table entry and a bug.
    """
    ge = graded_eigenvalues(pd)
    dec = {j: decompose(vals) for j, vals in ge.levels}
    pp = pole_polynomial(dec)
    nz = numerator_zeros(dec)

    reduced = reduce(raw_residue_function(pd))
    den_roots = _root_multiset(reduced.denominator)
    num_roots = _root_multiset(reduced.numerator)

    match = den_roots == Counter(dict(pp.zeros)) and num_roots == nz
    return {
        "match": match,
        "denominator": sorted(den_roots.elements(), reverse=True),
        "p_zeros": sorted(Counter(dict(pp.zeros)).elements(), reverse=True),
        "numerator": sorted(num_roots.elements(), reverse=True),
        "numerator_zeros": sorted(nz.elements(), reverse=True),
        "leading_constant_sign_ok": reduced.leading_constant_sign_ok,
    }


def report_to_json(report: dict) -> dict:
    return {
        "oracle": {
            "match": report["match"],
            "denominator": [str(x) for x in report["denominator"]],
            "p_zeros": [str(x) for x in report["p_zeros"]],
        }
    }
