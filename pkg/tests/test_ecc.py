import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from energy_codes import CodeParams, SEccCodec, WEccCodec, is_member, syndrome, vt_correct
from energy_codes.bitseq import SUBBLOCK, WINDOW, bits
from energy_codes.ecc import straddle_violations, tightened_profile
from energy_codes.errors import InfeasibleParameters, Undecodable
from energy_codes.vt import VtTag, tag_width


def test_tag_width():
    assert [tag_width(L) for L in (1, 2, 4, 8, 12, 16)] == [1, 2, 3, 4, 5, 5]


def test_syndrome_values():
    assert syndrome(bits("1010"), 4).value == 4
    assert syndrome(bits("1111"), 4).value == 10 % 8
    with pytest.raises(ValueError):
        syndrome(bits("11111"), 4)


def test_tag_from_bits_range():
    assert VtTag.from_bits(bits("10011"), 12).value == 19
    with pytest.raises(Undecodable):
        VtTag.from_bits(bits("11001"), 12)


@given(st.lists(st.integers(0, 1), min_size=1, max_size=24).map(tuple), st.data())
def test_vt_single_flip_property(x, data):
    L = data.draw(st.integers(len(x), 32))
    p = data.draw(st.integers(1, len(x)))
    y = x[: p - 1] + (1 - x[p - 1],) + x[p:]
    assert vt_correct(y, syndrome(x, L)) == x
    assert vt_correct(x, syndrome(x, L)) == x


def test_vt_inconsistent_bit_raises():
    # difference d=1 asks for a 1 -> 0 repair at position 1, but that bit is already 1
    x = bits("100")
    with pytest.raises(Undecodable):
        vt_correct(x, VtTag((syndrome(x, 3).value + 1) % 6, 3))


def test_straddle_check():
    assert straddle_violations(16, 1, 15, 2, 14, 5) == []
    bad = straddle_violations(16, 1, 15, 1, 15, 5)
    assert any("j=1" in line for line in bad)
    assert straddle_violations(8, 1, 7, 2, 6, 5)


def test_tightened_profile():
    assert tightened_profile(F(1, 4), F(3, 4)) == (F(3, 8), F(5, 8))


def test_secc_layout_and_redundancy():
    codec = SEccCodec(CodeParams.from_profile(24, 24, F(1, 4), F(3, 4)))
    assert (codec.t, codec.inner_len, codec.payload_length) == (6, 12, 8)
    y = codec.encode((1, 0) * 4)
    tag, mate = y[12:18], y[18:]
    assert mate == tuple(1 - b for b in tag)
    assert syndrome(y[:12], 24).bits == tag


def test_secc_multi_block():
    codec = SEccCodec(CodeParams.from_profile(66, 22, F(1, 3), F(2, 3)))
    rng = random.Random(3)
    for _ in range(200):
        x = tuple(rng.getrandbits(1) for _ in range(codec.payload_length))
        y = list(codec.encode(x))
        assert is_member(y, 22, codec.params.a, codec.params.b, SUBBLOCK)
        flips = [i * 22 + rng.randrange(22) for i in range(3)]
        for p in flips:
            y[p] ^= 1
        report = codec.decode_report(tuple(y))
        assert report.payload == x and report.corrections == 3


WECC = WEccCodec(CodeParams(32, 16, 1, 15), inner=(2, 14))


def test_wecc_accounting():
    assert WECC.t == 5 and WECC.block_length == 26
    assert WECC.codeword_length == 52 and WECC.redundancy == 21
    assert WECC.margin_ok is False


def test_wecc_clean_and_corrected_reports():
    x = tuple(random.Random(0).getrandbits(1) for _ in range(31))
    y = WECC.encode(x)
    assert WECC.decode_report(y) == (x, (), ())
    z = list(y)
    z[3] ^= 1
    z[26 + 18] ^= 1  # inside the second tag
    report = WECC.decode_report(tuple(z))
    assert report.payload == x
    assert report.corrected == (4,) and report.tag_errors == (2,)


def test_wecc_infeasible_default_band():
    with pytest.raises(InfeasibleParameters):
        WEccCodec(CodeParams(32, 16, 1, 15))
    with pytest.raises(InfeasibleParameters) as exc:
        WEccCodec(CodeParams(32, 16, 1, 15), inner=(1, 15))
    assert exc.value.check == "straddle"


@given(st.integers(0, 2**31 - 1), st.integers(0, 25), st.integers(0, 25))
def test_wecc_property(v, p, q):
    x = tuple((v >> j) & 1 for j in range(31))
    y = WECC.encode(x)
    assert is_member(y, 16, 1, 15, WINDOW)
    z = list(y)
    z[p] ^= 1
    z[26 + q] ^= 1
    assert WECC.decode(tuple(z)) == x
