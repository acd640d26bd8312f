import pytest
from hypothesis import given
from hypothesis import strategies as st

from abwt.orders import ALT, LEX, OrderSpec, as_word
from abwt.output import TransformOutput
from abwt.reference import bwt_k_naive
from abwt.transform import bwt_k, invert, lf_mode
from conftest import primitive


def test_modes():
    assert lf_mode(LEX) == "bwt"
    assert lf_mode(ALT) == "abwt"
    assert lf_mode(OrderSpec.parse("id:rev:id:rev")) is None
    assert lf_mode(OrderSpec.parse("id:cab")) is None


def test_goldens():
    assert bwt_k(b"acaabr", LEX) == TransformOutput(b"caraab", 2)
    assert bwt_k(b"acaabr", ALT) == TransformOutput(b"racaab", 0)
    assert bwt_k(b"banana", ALT).last_column == b"bnnaaa"
    assert bwt_k(as_word("banana$"), ALT).last_column == as_word("abnn$aa")
    assert bwt_k(as_word("ananab$"), ALT).last_column == as_word("b$nnaaa")
    assert str(bwt_k(b"banana", ALT)) == "(bnnaaa, 3)"


def test_errors():
    with pytest.raises(ValueError):
        bwt_k(b"", ALT)
    with pytest.raises(ValueError):
        bwt_k(b"a\x00b\x00", ALT)


@given(primitive(b"abc", 1, 40), st.sampled_from(["id", "id:rev", "id:cab", "id:rev:bca"]), st.booleans())
def test_dispatch_matches_oracle(w, spec, terminate):
    spec = OrderSpec.parse(spec)
    if terminate:
        w = w + b"\x00"
    out = bwt_k(w, spec)
    assert out == bwt_k_naive(w, spec)
    assert invert(out, spec) == w
    assert invert(out, spec, naive=True) == w
