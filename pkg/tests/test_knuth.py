from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, strategies as st

from energy_codes import CodeParams, PolarityCodec, SCodec, SPrimeCodec, measure_rate
from energy_codes.bitseq import bits, to_str
from energy_codes.errors import InfeasibleParameters, NoIndexFound, UnknownSuffix
from energy_codes.knuth import BalancedSuffixTable, Walk, find_walk_index, walk_for


def test_walk_indices():
    assert Walk(3, 10).indices == (0, 3, 6, 9, 10)
    assert Walk(5, 10).indices == (0, 5, 10)
    assert Walk(4, 0).indices == (0,)


def test_walk_step_is_capped_by_integer_target():
    # (5/8 - 3/8) * 6 = 1.5 -> step 1; targets [3, 3] span one integer
    assert walk_for(F(3, 8), F(5, 8), 6).step == 1
    assert walk_for(F(1, 4), F(3, 4), 12).step == 6
    with pytest.raises(InfeasibleParameters):
        walk_for(F(1, 3), F(2, 3), 2)


def test_find_walk_index_smallest():
    walk = walk_for(F(1, 4), F(3, 4), 8)
    assert find_walk_index(bits("01010101"), walk, 2, 6) == 0
    assert find_walk_index(bits("00000000"), walk, 2, 6) == 4
    with pytest.raises(NoIndexFound):
        find_walk_index(bits("00000000"), Walk(8, 8), 2, 6)


def test_balanced_table_order():
    table = BalancedSuffixTable(Walk(2, 4), 4)
    assert [to_str(table.encode(t)) for t in (0, 2, 4)] == ["0011", "0101", "0110"]
    assert table.decode(bits("0101")) == 2
    with pytest.raises(UnknownSuffix):
        table.decode(bits("1100"))
    assert all(sum(w) == 2 for w in table.words)


def test_rbal_search_beats_naive_width():
    # the rank width alone would be 2 bits, but only C(2,1)=2 balanced words exist
    codec = SCodec(CodeParams.from_profile(14, 14, F(1, 4), F(3, 4)))
    assert codec.r_bal == 4
    assert comb(codec.r_bal, codec.r_bal // 2) >= len(codec.walk)


def test_s_rate_with_two_bit_suffix():
    codec = SCodec(CodeParams.from_profile(28, 14, F(0), F(1)))
    assert codec.r_bal == 2
    assert measure_rate(codec, samples=8).rate == "24/28"


def test_s_prime_suffix_self_describing():
    codec = SPrimeCodec(CodeParams.from_profile(16, 16, F(1, 4), F(3, 4)))
    assert codec.r == codec.r_formula == 2
    y = codec.encode(bits("0" * codec.payload_length))
    suffix = y[codec.data_len :]
    assert suffix[: codec.r] == tuple(1 - b for b in suffix[codec.r :])
    bad = y[: codec.data_len] + (1, 1, 1, 1)
    with pytest.raises(UnknownSuffix):
        codec.decode(bad)


def test_odd_subblock_rejected():
    with pytest.raises(InfeasibleParameters) as exc:
        SCodec(CodeParams.from_profile(15, 15, F(1, 4), F(3, 4)))
    assert exc.value.check == "even-length"


def test_polarity_example():
    codec = PolarityCodec(CodeParams(21, 7, 3, 7))
    y = codec.encode(bits("110000011001111100"))
    assert to_str(y) == "001111101100101111000"
    assert measure_rate(codec, samples=8).rate == "18/21"
    with pytest.raises(InfeasibleParameters):
        PolarityCodec(CodeParams(8, 8, 4, 8))


CODECS = [
    SCodec(CodeParams.from_profile(36, 12, F(1, 3), F(2, 3))),
    SPrimeCodec(CodeParams.from_profile(36, 12, F(1, 4), F(3, 4))),
    PolarityCodec(CodeParams(30, 10, 4, 10)),
]


@pytest.mark.parametrize("codec", CODECS, ids=["s", "s-prime", "polarity"])
@given(data=st.data())
def test_roundtrip_property(codec, data):
    x = tuple(data.draw(st.lists(st.integers(0, 1), min_size=codec.payload_length, max_size=codec.payload_length)))
    y = codec.encode(x)
    ell, a, b = codec.params.ell, codec.params.a, codec.params.b
    for i in range(0, len(y), ell):
        assert a <= sum(y[i : i + ell]) <= b
    assert codec.decode(y) == x


def test_wrong_lengths_rejected():
    codec = CODECS[0]
    with pytest.raises(ValueError):
        codec.encode((0,) * (codec.payload_length + 1))
    with pytest.raises(ValueError):
        codec.decode((0,) * 5)
