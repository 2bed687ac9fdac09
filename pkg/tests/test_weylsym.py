"""Weyl group enumeration, inversion sets, cocycle, and cancellation."""

import pytest

from eispole.parabolic import parabolic_data
from eispole.rootsys import RootSystemKind, build_root_system, weyl_order
from eispole.weylsym import (
    WeylSizeError,
    cancellation_check,
    cocycle_check,
    generate_weyl,
    inverse,
    inversion_set,
    multiply,
    residue_admissible,
)


def _rs(label):
    return build_root_system(RootSystemKind.parse(label))


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"])
def test_bfs_order_matches_formula(label):
    rs = _rs(label)
    table = generate_weyl(rs, 51840)
    assert len(table) == weyl_order(rs.kind)


def test_size_cap_enforced():
    rs = _rs("F4")
    with pytest.raises(WeylSizeError) as exc:
        generate_weyl(rs, 100)
    assert "1152" in str(exc.value)


def test_length_equals_inversion_count_small():
    for label in ["A2", "B2", "G2", "A3"]:
        rs = _rs(label)
        for w in generate_weyl(rs, 51840).values():
            assert w.length == len(inversion_set(w, rs))


def test_longest_element_inverts_everything():
    rs = _rs("B3")
    table = generate_weyl(rs, 51840)
    w0 = max(table.values(), key=lambda w: w.length)
    assert w0.length == len(rs.positive_roots) == 9
    assert inversion_set(w0, rs) == {root for root, _ in rs.positive_roots}


def test_inverse_and_multiply():
    rs = _rs("B3")
    table = generate_weyl(rs, 51840)
    ident = min(table.values(), key=lambda w: w.length)
    for w in list(table.values())[::7]:
        winv = inverse(w)
        assert multiply(w, winv, rs).columns == ident.columns
        assert winv.length == w.length  # l(w) = l(w^{-1})


def test_cocycle_identity_g2():
    rs = _rs("G2")
    table = generate_weyl(rs, 51840)
    simples = [w for w in table.values() if w.length == 1]
    checked = 0
    for w in table.values():
        for s in simples:
            result = cocycle_check(w, s, rs)
            if result is not None:
                checked += 1
                assert result
    assert checked > 0


def test_residue_admissibility():
    rs = _rs("A2")
    pd = parabolic_data(rs, 1)
    table = generate_weyl(rs, 51840)
    ident = min(table.values(), key=lambda w: w.length)
    w0 = max(table.values(), key=lambda w: w.length)
    assert not residue_admissible(ident, pd)
    assert residue_admissible(w0, pd)
    with pytest.raises(ValueError):
        cancellation_check(ident, pd)


def test_cancellation_holds_for_admissible_elements():
    for label in ["A3", "B3", "C3", "G2"]:
        rs = _rs(label)
        table = generate_weyl(rs, 51840)
        for node in range(1, rs.kind.rank + 1):
            pd = parabolic_data(rs, node)
            admissible = [w for w in table.values() if residue_admissible(w, pd)]
            assert admissible, (label, node)
            for w in admissible:
                report = cancellation_check(w, pd)
                assert report["ok"], (label, node, report)
