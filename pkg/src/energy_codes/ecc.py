"""Single-substitution-per-block error correction on top of the S and W codecs.

Both wrappers append a VT syndrome tag of ``t = ceil(log2(2 * ell))`` bits plus
its complement, so a flip inside the tag breaks the complement check and a
flip in the data shows up as a syndrome mismatch.

* S^ECC lays the tag out as ``p + ~p`` at the end of each subblock.
* W^ECC interleaves it as ``p1 ~p1 p2 ~p2 ...`` after every ``ell`` bits so that
  every prefix and suffix of the tag is nearly balanced; windows that straddle
  data and tag then stay inside the outer band, provided the Encoder W output
  uses a narrower inner band.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from .bitseq import (
    HALF,
    SUBBLOCK,
    WINDOW,
    BitSeq,
    CodeParams,
    complement,
    deinterleave,
    interleave,
)
from .errors import InfeasibleParameters
from .knuth import SCodec
from .srt import WCodec
from .vt import VtTag, syndrome, tag_width, vt_correct


class DecodeReport(NamedTuple):
    payload: BitSeq
    corrected: Tuple[int, ...] = ()  # 1-indexed codeword positions repaired
    tag_errors: Tuple[int, ...] = ()  # 1-indexed blocks whose tag was hit

    @property
    def corrections(self) -> int:
        return len(self.corrected) + len(self.tag_errors)


def _repair(z: BitSeq, tag: BitSeq, mate: BitSeq, base: int):
    """Return (clean data, data position fixed or None, tag_hit)."""
    if mate != complement(tag):
        return z, None, True
    fixed = vt_correct(z, VtTag.from_bits(tag, base))
    if fixed == z:
        return z, None, False
    pos = next(j for j in range(len(z)) if fixed[j] != z[j]) + 1
    return fixed, pos, False


class SEccCodec:
    """Encoder S on ``ell - 2t`` bit subblocks, then ``syndrome | ~syndrome``."""

    def __init__(self, params: CodeParams):
        self.params = params
        self.m = params.require_subblocks()
        ell = params.ell
        self.t = tag_width(ell)
        self.inner_len = ell - 2 * self.t
        p1, p2 = params.profile
        if self.inner_len < 2:
            raise InfeasibleParameters("payload-length", f"ell - 2t = {self.inner_len}")
        lo, hi = math.ceil(p1 * self.inner_len), math.floor(p2 * self.inner_len)
        try:
            inner = CodeParams(self.m * self.inner_len, self.inner_len, lo, hi, p1, p2)
        except ValueError as exc:
            raise InfeasibleParameters("inner-profile", str(exc)) from None
        self.inner = SCodec(inner)
        self.data_len = self.inner.data_len

    payload_length = property(lambda self: self.m * self.data_len)
    codeword_length = property(lambda self: self.m * self.params.ell)
    redundancy = property(lambda self: self.codeword_length - self.payload_length)
    block_length = property(lambda self: self.params.ell)

    @property
    def constraint(self):
        return SUBBLOCK, self.params.ell, self.params.a, self.params.b

    def encode(self, x: BitSeq) -> BitSeq:
        x = tuple(x)
        if len(x) != self.payload_length:
            raise ValueError(f"payload must have {self.payload_length} bits, got {len(x)}")
        d, out = self.data_len, ()
        for i in range(self.m):
            z = self.inner.encode_block(x[i * d : (i + 1) * d])
            p = syndrome(z, self.params.ell).bits
            out += z + p + complement(p)
        return out

    def decode_report(self, y: BitSeq) -> DecodeReport:
        y = tuple(y)
        if len(y) != self.codeword_length:
            raise ValueError(f"codeword must have {self.codeword_length} bits, got {len(y)}")
        ell, k, t = self.params.ell, self.inner_len, self.t
        payload, fixed_at, tag_hits = (), [], []
        for i in range(self.m):
            block = y[i * ell : (i + 1) * ell]
            z, pos, hit = _repair(block[:k], block[k : k + t], block[k + t :], ell)
            if hit:
                tag_hits.append(i + 1)
            if pos is not None:
                fixed_at.append(i * ell + pos)
            payload += self.inner.decode_block(z)
        return DecodeReport(payload, tuple(fixed_at), tuple(tag_hits))

    def decode(self, y: BitSeq) -> BitSeq:
        return self.decode_report(y).payload


def straddle_violations(ell: int, lo: int, hi: int, inner_lo: int, inner_hi: int, t: int) -> List[str]:
    """Worst-case weights of windows that overlap an interleaved ``2t`` bit tag.

    The data around each tag comes from an Encoder W output whose windows all
    weigh within [inner_lo, inner_hi]; any prefix or suffix of length ``j`` of
    the tag weighs floor(j/2) or ceil(j/2). Returns a description of every
    window shape whose extreme weight leaves [lo, hi]; empty means safe.
    """
    bad = []
    if not lo <= inner_lo <= inner_hi <= hi:
        bad.append(f"inner band [{inner_lo}, {inner_hi}] not inside [{lo}, {hi}]")
    if ell < 2 * t:
        bad.append(f"tag of {2 * t} bits longer than window {ell}")
        return bad
    for j in range(1, 2 * t + 1):
        # ell - j data bits next to j tag bits (same bound on either side)
        least = max(0, inner_lo - j) + j // 2
        most = min(inner_hi, ell - j) + (j + 1) // 2
        if least < lo or most > hi:
            bad.append(f"edge overlap j={j}: weights [{least}, {most}]")
    least = max(0, inner_lo - 2 * t) + t
    most = min(inner_hi, ell - 2 * t) + t
    if least < lo or most > hi:
        bad.append(f"full tag inside window: weights [{least}, {most}]")
    return bad


def tightened_profile(p1: Fraction, p2: Fraction) -> Tuple[Fraction, Fraction]:
    return (p1 + HALF) / 2, (p2 + HALF) / 2


class WEccCodec:
    """Encoder W under an inner band, then an interleaved VT tag per ``ell`` bits.

    ``inner`` defaults to the tightened profile ((p1 + 1/2)/2, (p2 + 1/2)/2).
    Any inner band is accepted as long as :func:`straddle_violations` finds no
    unsafe window shape; ``margin_ok`` records whether the simpler margin
    condition ell * (1/2 - p1) >= 2t + 1 (and its mirror) also holds.
    """

    def __init__(self, params: CodeParams, inner: Optional[Tuple[int, int]] = None):
        self.params = params
        self.m = params.require_subblocks()
        n, ell = params.n, params.ell
        self.t = t = tag_width(ell)
        p1, p2 = params.profile
        self.margin_ok = ell * (HALF - p1) >= 2 * t + 1 and ell * (p2 - HALF) >= 2 * t + 1
        try:
            if inner is None:
                q1, q2 = tightened_profile(p1, p2)
                inner_params = CodeParams.from_profile(n, ell, q1, q2)
            else:
                inner_params = CodeParams(n, ell, *inner)
        except ValueError as exc:
            raise InfeasibleParameters("inner-band", str(exc)) from None
        self.inner_band = inner_params.a, inner_params.b
        bad = straddle_violations(ell, params.a, params.b, *self.inner_band, t)
        if bad:
            raise InfeasibleParameters("straddle", "; ".join(bad))
        self.inner = WCodec(inner_params)

    payload_length = property(lambda self: self.params.n - 1)
    codeword_length = property(lambda self: self.params.n + 2 * self.m * self.t)
    redundancy = property(lambda self: 1 + 2 * self.m * self.t)
    block_length = property(lambda self: self.params.ell + 2 * self.t)

    @property
    def constraint(self):
        return WINDOW, self.params.ell, self.params.a, self.params.b

    def encode(self, x: BitSeq) -> BitSeq:
        y = self.inner.encode(x)
        ell, out = self.params.ell, ()
        for i in range(self.m):
            block = y[i * ell : (i + 1) * ell]
            p = syndrome(block, ell).bits
            out += block + interleave(p, complement(p))
        return out

    def decode_report(self, c: BitSeq) -> DecodeReport:
        c = tuple(c)
        if len(c) != self.codeword_length:
            raise ValueError(f"codeword must have {self.codeword_length} bits, got {len(c)}")
        ell, size = self.params.ell, self.block_length
        data, fixed_at, tag_hits = (), [], []
        for i in range(self.m):
            block = c[i * size : (i + 1) * size]
            tag, mate = deinterleave(block[ell:])
            z, pos, hit = _repair(block[:ell], tag, mate, ell)
            if hit:
                tag_hits.append(i + 1)
            if pos is not None:
                fixed_at.append(i * size + pos)
            data += z
        return DecodeReport(self.inner.decode(data), tuple(fixed_at), tuple(tag_hits))

    def decode(self, c: BitSeq) -> BitSeq:
        return self.decode_report(c).payload
