"""Weight-multiset decomposition tests, including property-based ones."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eispole.sl2decomp import NotARepresentationError, SL2Decomposition, decompose


def test_single_trivial():
    d = decompose([0])
    assert d.as_dict() == {0: 1}
    assert d.dimension == 1


def test_known_multisets():
    assert decompose([-2, 0, 0, 2]).as_dict() == {2: 1, 0: 1}
    assert decompose([-1, 1, -1, 1]).as_dict() == {1: 2}
    assert decompose([-3, -1, 1, 3]).as_dict() == {3: 1}
    assert decompose([-4, -2, -2, 0, 0, 0, 2, 2, 4]).as_dict() == {4: 1, 2: 1, 0: 1}


def test_mults_sorted_descending():
    d = decompose([-2, 0, 0, 2])
    assert d.mults == ((2, 1), (0, 1))


def test_rejects_asymmetric():
    with pytest.raises(NotARepresentationError):
        decompose([0, 2])
    with pytest.raises(NotARepresentationError):
        decompose([-2, 2, 2])


def test_rejects_mixed_parity():
    with pytest.raises(NotARepresentationError):
        decompose([-1, 0, 1])


def test_rejects_non_unimodal():
    # Symmetric and pure-parity, but count(0) < count(2).
    with pytest.raises(NotARepresentationError):
        decompose([-2, -2, 0, 2, 2])


def test_empty_is_zero_representation():
    d = decompose([])
    assert d.mults == ()
    assert d.dimension == 0


def test_weights_roundtrip_explicit():
    d = decompose([-3, -1, -1, 1, 1, 3])
    assert d.weights() == Counter([-3, -1, -1, 1, 1, 3])


@settings(max_examples=200, deadline=None)
@given(
    st.dictionaries(
        st.integers(min_value=0, max_value=12),
        st.integers(min_value=1, max_value=4),
        min_size=1,
        max_size=5,
    ),
    st.booleans(),
)
def test_roundtrip_random_decompositions(mult_map, odd):
    # Build a genuine direct sum, flatten to weights, and recover it.
    mults = {2 * l + (1 if odd else 0): m for l, m in mult_map.items()}
    weights = []
    for l, m in mults.items():
        weights.extend([k] * m for k in range(-l, l + 1, 2))
    flat = [w for ws in weights for w in ws]
    d = decompose(flat)
    assert d.as_dict() == mults
    assert d.weights() == Counter(flat)
    assert d.dimension == len(flat)


def test_to_json_shape():
    js = decompose([-2, 0, 0, 2]).to_json()
    assert js == {"sl2": [{"l": 2, "mult": 1}, {"l": 0, "mult": 1}]}
