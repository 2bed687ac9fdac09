"""Residue-function oracle tests: construction, reduction, cross-check."""

from collections import Counter
from fractions import Fraction

import pytest

from eispole.parabolic import parabolic_data
from eispole.residue_oracle import (
    AffineForm,
    DegenerateConfigurationError,
    FactorLists,
    cross_check,
    raw_residue_function,
    reduce,
    report_to_json,
)
from eispole.rootsys import RootSystemKind, build_root_system, positive_root_count


def _pd(label, node):
    return parabolic_data(build_root_system(RootSystemKind.parse(label)), node)


def test_affine_form_basics():
    f = AffineForm(Fraction(3, 2), 2)
    assert not f.is_constant
    assert f.zero() == Fraction(-3, 4)
    assert str(f) == "2s + 3/2"
    assert AffineForm(Fraction(1), 0).is_constant


def test_raw_factor_counts():
    # One numerator factor per positive coroot; denominator omits the
    # Levi simple coroots.
    pd = _pd("B3", 2)
    fl = raw_residue_function(pd)
    total = positive_root_count(pd.rs.kind)
    assert len(fl.numerator) == total
    assert len(fl.denominator) == total - len(pd.theta)


def test_a2_reduces_to_known_ratio():
    # Non-constant part of the reduced function is (s + 1/2)/(s - 3/2).
    fl = reduce(raw_residue_function(_pd("A2", 1)))
    num = [f for f in fl.numerator if not f.is_constant]
    den = [f for f in fl.denominator if not f.is_constant]
    assert num == [AffineForm(Fraction(1, 2), 1)]
    assert den == [AffineForm(Fraction(-3, 2), 1)]
    assert fl.leading_constant_sign_ok


def test_reduction_separates_zero_loci():
    # After reduction every numerator zero is <= 0 and every denominator
    # zero is > 0: nothing pole-relevant was cancelled away.
    for label, node in [("B4", 2), ("C3", 3), ("D4", 1), ("F4", 3), ("G2", 2)]:
        fl = reduce(raw_residue_function(_pd(label, node)))
        assert all(f.zero() <= 0 for f in fl.numerator if not f.is_constant)
        assert all(f.zero() > 0 for f in fl.denominator if not f.is_constant)


def test_zero_constant_factor_is_degenerate():
    bad = FactorLists(
        numerator=(AffineForm(Fraction(0), 0),),
        denominator=(),
    )
    with pytest.raises(DegenerateConfigurationError):
        reduce(bad)


def test_cross_check_spot_cases():
    for label, node in [
        ("G2", 1),
        ("G2", 2),
        ("B3", 1),
        ("C4", 4),
        ("D5", 3),
        ("F4", 2),
        ("E6", 4),
    ]:
        report = cross_check(_pd(label, node))
        assert report["match"], (label, node, report)
        assert report["leading_constant_sign_ok"]
        # The two routes must agree as multisets, not just sets.
        assert Counter(report["denominator"]) == Counter(report["p_zeros"])
        assert Counter(report["numerator"]) == Counter(report["numerator_zeros"])


def test_report_json_is_stringified():
    js = report_to_json(cross_check(_pd("G2", 2)))
    assert js["oracle"]["match"] is True
    assert js["oracle"]["denominator"] == ["3/2", "1/2", "1/2"]
