"""Encoders, decoders and exact counting for energy-constrained binary codes."""

from .bitseq import CodeParams, bits, check_membership, is_member, to_str
from .ecc import SEccCodec, WEccCodec
from .errors import (
    BudgetExceeded,
    CodeError,
    InfeasibleParameters,
    MalformedCodeword,
    NoIndexFound,
    Undecodable,
    UnknownSuffix,
)
from .knuth import PolarityCodec, SCodec, SPrimeCodec, find_walk_index, walk_for
from .oracle import count_secc, count_swcc, enumerate_class, measure_rate, verify_halfspace_bound
from .schemes import SCHEMES, make_codec
from .srt import WCodec
from .vt import syndrome, vt_correct

__version__ = "0.1.0"
