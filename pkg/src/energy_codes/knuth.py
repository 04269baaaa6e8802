"""Subblock encoders built on Knuth-style prefix flipping.

Three codecs live here:

* :class:`SCodec`: flip a prefix chosen from a sparse walk and append a
  balanced suffix looked up in a table.
* :class:`SPrimeCodec`: same walk, but the suffix is ``G + ~G`` where ``G`` is
  the binary rank of the flip index, so no table is needed.
* :class:`PolarityCodec`: complement a subblock that is too light and record
  that in one flag bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Tuple

from .bitseq import (
    BitSeq,
    CodeParams,
    HALF,
    SUBBLOCK,
    bits_to_int,
    complement,
    flip_prefix,
    int_to_bits,
)
from .errors import InfeasibleParameters, NoIndexFound, UnknownSuffix


@dataclass(frozen=True)
class Walk:
    """Candidate flip lengths ``{0, length} | {i*step : 0 < i*step < length}``."""

    step: int
    length: int
    indices: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.step < 1 or self.length < 0:
            raise ValueError("walk needs step >= 1 and length >= 0")
        idx = sorted({0, self.length, *range(self.step, self.length, self.step)})
        object.__setattr__(self, "indices", tuple(idx))

    def __len__(self):
        return len(self.indices)

    def rank(self, t: int) -> int:
        return self.indices.index(t)


def weight_target(p1: Fraction, p2: Fraction, length: int) -> Tuple[int, int]:
    """Integer weight interval [ceil(p1*length), floor(p2*length)]."""
    return math.ceil(p1 * length), math.floor(p2 * length)


def walk_for(p1: Fraction, p2: Fraction, length: int) -> Walk:
    """Walk whose step cannot jump over the integer target interval."""
    lo, hi = weight_target(p1, p2, length)
    step = min(math.floor((p2 - p1) * length), hi - lo + 1)
    if step < 1:
        raise InfeasibleParameters("walk-step", f"step {step} < 1 at length {length}")
    return Walk(step, length)


def find_walk_index(x: BitSeq, walk: Walk, lo: int, hi: int) -> int:
    """Smallest walk index ``t`` with ``weight(flip_prefix(x, t))`` in [lo, hi]."""
    if len(x) != walk.length:
        raise ValueError(f"walk built for length {walk.length}, got {len(x)}")
    w = sum(x)
    done = 0
    for t in walk.indices:
        # flipping bits done+1..t changes the weight by (#zeros - #ones) there
        seg = x[done:t]
        w += len(seg) - 2 * sum(seg)
        done = t
        if lo <= w <= hi:
            return t
    raise NoIndexFound(f"no walk index puts weight in [{lo}, {hi}]")


@dataclass(frozen=True)
class BalancedSuffixTable:
    """Bijection between walk indices and balanced words of length ``width``."""

    walk: Walk
    width: int
    words: Tuple[BitSeq, ...] = field(init=False, repr=False)
    _lookup: Dict[BitSeq, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        half = self.width // 2
        if self.width % 2 or math.comb(self.width, half) < len(self.walk):
            raise InfeasibleParameters(
                "suffix-table", f"{len(self.walk)} indices need more than C({self.width},{half})"
            )
        words = []
        for ones in combinations(range(self.width), half):
            word = [0] * self.width
            for j in ones:
                word[j] = 1
            words.append(tuple(word))
        # combinations() walks positions of ones in lex order; sort to get word order
        words = sorted(words)[: len(self.walk)]
        object.__setattr__(self, "words", tuple(words))
        object.__setattr__(self, "_lookup", {w: t for w, t in zip(words, self.walk.indices)})

    def encode(self, t: int) -> BitSeq:
        return self.words[self.walk.rank(t)]

    def decode(self, suffix: BitSeq) -> int:
        try:
            return self._lookup[tuple(suffix)]
        except KeyError:
            raise UnknownSuffix(f"suffix {suffix} is not in the table") from None


def _profile(params: CodeParams) -> Tuple[Fraction, Fraction]:
    p1, p2 = params.profile
    if not 0 <= p1 < HALF < p2 <= 1:
        raise InfeasibleParameters("profile", f"need p1 < 1/2 < p2, got {p1}, {p2}")
    return p1, p2


class _FlipCodec:
    """Shared per-subblock plumbing for the walk-based codecs."""

    params: CodeParams
    m: int
    data_len: int  # payload bits per subblock
    walk: Walk
    lo: int
    hi: int

    @property
    def payload_length(self) -> int:
        return self.m * self.data_len

    @property
    def codeword_length(self) -> int:
        return self.m * self.params.ell

    @property
    def redundancy(self) -> int:
        return self.codeword_length - self.payload_length

    @property
    def block_length(self) -> int:
        return self.params.ell

    @property
    def constraint(self):
        return SUBBLOCK, self.params.ell, self.params.a, self.params.b

    def _suffix(self, t: int) -> BitSeq:
        raise NotImplementedError

    def _index(self, suffix: BitSeq) -> int:
        raise NotImplementedError

    def encode_block(self, z: BitSeq) -> BitSeq:
        t = find_walk_index(z, self.walk, self.lo, self.hi)
        return flip_prefix(z, t) + self._suffix(t)

    def decode_block(self, y: BitSeq) -> BitSeq:
        d = self.data_len
        return flip_prefix(tuple(y[:d]), self._index(tuple(y[d:])))

    def encode(self, x: BitSeq) -> BitSeq:
        x = tuple(x)
        if len(x) != self.payload_length:
            raise ValueError(f"payload must have {self.payload_length} bits, got {len(x)}")
        d = self.data_len
        out = ()
        for i in range(self.m):
            out += self.encode_block(x[i * d : (i + 1) * d])
        return out

    def decode(self, y: BitSeq) -> BitSeq:
        y = tuple(y)
        if len(y) != self.codeword_length:
            raise ValueError(f"codeword must have {self.codeword_length} bits, got {len(y)}")
        ell = self.params.ell
        out = ()
        for i in range(self.m):
            out += self.decode_block(y[i * ell : (i + 1) * ell])
        return out


class SCodec(_FlipCodec):
    """Prefix flip + table-driven balanced suffix of ``r_bal`` bits per subblock.

    ``r_bal`` is the smallest even width whose balanced words can label every
    index of the walk over the remaining ``ell - r_bal`` payload bits.
    """

    def __init__(self, params: CodeParams):
        self.params = params
        self.m = params.require_subblocks()
        ell = params.ell
        p1, p2 = _profile(params)
        if ell % 2:
            raise InfeasibleParameters("even-length", f"ell={ell} must be even")
        r = 2
        while True:
            data_len = ell - r
            if data_len < 2:
                raise InfeasibleParameters("suffix-width", f"no balanced suffix fits in ell={ell}")
            walk = walk_for(p1, p2, data_len)
            if math.comb(r, r // 2) >= len(walk):
                break
            r += 2
        self.r_bal = r
        self.data_len = data_len
        self.walk = walk
        self.lo, self.hi = weight_target(p1, p2, data_len)
        self.table = BalancedSuffixTable(walk, r)

    def _suffix(self, t):
        return self.table.encode(t)

    def _index(self, suffix):
        return self.table.decode(suffix)


class SPrimeCodec(_FlipCodec):
    """Prefix flip + self-describing suffix ``G + ~G`` (``2r`` bits per subblock).

    ``r`` starts at ceil(log2(floor(1/(p2-p1)) + 1)) and grows only if the walk
    over ``ell - 2r`` bits has more than ``2**r`` indices.
    """

    def __init__(self, params: CodeParams):
        self.params = params
        self.m = params.require_subblocks()
        ell = params.ell
        p1, p2 = _profile(params)
        if ell % 2:
            raise InfeasibleParameters("even-length", f"ell={ell} must be even")
        r = max(1, math.ceil(math.log2(math.floor(1 / (p2 - p1)) + 1)))
        self.r_formula = r
        while True:
            data_len = ell - 2 * r
            if data_len < 2:
                raise InfeasibleParameters("suffix-width", f"no rank suffix fits in ell={ell}")
            walk = walk_for(p1, p2, data_len)
            if len(walk) <= 1 << r:
                break
            r += 1
        self.r = r
        self.data_len = data_len
        self.walk = walk
        self.lo, self.hi = weight_target(p1, p2, data_len)

    def _suffix(self, t):
        gamma = int_to_bits(self.walk.rank(t), self.r)
        return gamma + complement(gamma)

    def _index(self, suffix):
        gamma, rest = suffix[: self.r], suffix[self.r :]
        if rest != complement(gamma):
            raise UnknownSuffix("suffix halves are not complementary")
        rank = bits_to_int(gamma)
        if rank >= len(self.walk):
            raise UnknownSuffix(f"rank {rank} exceeds walk size {len(self.walk)}")
        return self.walk.indices[rank]


class PolarityCodec:
    """One flag bit per subblock: complement light subblocks of ``ell - 1`` bits."""

    def __init__(self, params: CodeParams):
        self.params = params
        self.m = params.require_subblocks()
        if not 2 * params.a < params.ell:
            raise InfeasibleParameters("polarity-bound", f"need a < ell/2, got a={params.a}")
        self.data_len = params.ell - 1

    payload_length = property(lambda self: self.m * self.data_len)
    codeword_length = property(lambda self: self.m * self.params.ell)
    redundancy = property(lambda self: self.m)
    block_length = property(lambda self: self.params.ell)

    @property
    def constraint(self):
        return SUBBLOCK, self.params.ell, self.params.a, self.params.b

    def encode(self, x: BitSeq) -> BitSeq:
        x = tuple(x)
        if len(x) != self.payload_length:
            raise ValueError(f"payload must have {self.payload_length} bits, got {len(x)}")
        d, a = self.data_len, self.params.a
        out = ()
        for i in range(self.m):
            z = x[i * d : (i + 1) * d]
            out += complement(z) + (1,) if sum(z) < a else z + (0,)
        return out

    def decode(self, y: BitSeq) -> BitSeq:
        y = tuple(y)
        if len(y) != self.codeword_length:
            raise ValueError(f"codeword must have {self.codeword_length} bits, got {len(y)}")
        ell = self.params.ell
        out = ()
        for i in range(self.m):
            block = y[i * ell : (i + 1) * ell]
            out += complement(block[:-1]) if block[-1] else block[:-1]
        return out
