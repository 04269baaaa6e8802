"""Sequence replacement: one-redundant-bit encoder for W(n, ell, [lo, hi]).

The encoder prepends 0, then repeatedly cuts the leftmost forbidden window out
of the word and prepends an ``ell - 1`` bit header ``11 | position | label``,
where ``label`` indexes the window among all forbidden windows (the window
codec). When the word has shrunk to ``ell + 1`` bits and is still bad, it is
swapped for ``10 | tail`` with ``tail`` drawn from a weight-bounded set (the
tail codec). Finally the last window is repeated to restore length ``n``.
"""

from __future__ import annotations

import math
from functools import lru_cache
from math import comb
from typing import List, Optional

from .bitseq import WINDOW, BitSeq, CodeParams, bits_to_int, first_forbidden, int_to_bits
from .errors import InfeasibleParameters, MalformedCodeword
from .ranking import LexRanker, band_completions, band_ranker


def count_forbidden(ell: int, lo: int, hi: int) -> int:
    """Number of length-``ell`` words whose weight is outside [lo, hi]."""
    return sum(comb(ell, w) for w in range(ell + 1) if not lo <= w <= hi)


class WindowCodec:
    """Bijection between forbidden windows and ``label_width``-bit labels.

    Labels are lexicographic ranks among the forbidden words.
    """

    def __init__(self, ell: int, lo: int, hi: int, label_width: Optional[int] = None):
        self.ell, self.lo, self.hi = ell, lo, hi
        self.ranker = band_ranker(ell, lo, hi, inside=False)
        size = len(self.ranker)
        if label_width is None:
            label_width = max(1, (size - 1).bit_length())
        self.label_width = label_width
        if size > 1 << label_width:
            raise InfeasibleParameters(
                "forbidden-count", f"|F|={size} exceeds 2^{label_width}"
            )

    def __len__(self):
        return len(self.ranker)

    def is_forbidden(self, w: BitSeq) -> bool:
        return len(w) == self.ell and not self.lo <= sum(w) <= self.hi

    def rank(self, w: BitSeq) -> int:
        if not self.is_forbidden(w):
            raise ValueError("window is not forbidden")
        return self.ranker.rank(w)

    def unrank(self, label: int) -> BitSeq:
        return self.ranker.unrank(label)

    def encode(self, w: BitSeq) -> BitSeq:
        return int_to_bits(self.rank(w), self.label_width)

    def decode(self, label: BitSeq) -> BitSeq:
        return self.unrank(bits_to_int(label))


class TailCodec:
    """Injective map from ``G`` to weight-bounded words of length ``ell - 2``.

    ``G`` holds the ``ell + 1`` bit words whose first or last ``ell``-window is
    forbidden. A word is mapped by ranking it inside ``G`` and unranking that
    rank inside the target band.
    """

    def __init__(self, ell: int, lo: int, hi: int, target_lo: int, target_hi: int):
        self.ell, self.lo, self.hi = ell, lo, hi
        self.target_lo, self.target_hi = target_lo, target_hi
        self.source = LexRanker(ell + 1, self._g_completions)
        self.target = band_ranker(ell - 2, target_lo, target_hi)
        if len(self.source) > len(self.target):
            raise InfeasibleParameters(
                "tail-count", f"|G|={len(self.source)} exceeds target size {len(self.target)}"
            )
        if not (lo <= 1 + max(target_lo, 0) and 1 + min(target_hi, ell - 2) <= hi):
            raise InfeasibleParameters(
                "tail-weight", f"10+tail weights [{1 + target_lo}, {1 + target_hi}] leave [{lo}, {hi}]"
            )

    def _bad(self, w: int) -> bool:
        return not self.lo <= w <= self.hi

    def _g_completions(self, prefix) -> int:
        ell = self.ell
        j = len(prefix)
        if j == 0:
            return self._g_completions((0,)) + self._g_completions((1,))
        if j == ell + 1:
            inner = sum(prefix[1:ell])
            return int(self._bad(prefix[0] + inner) or self._bad(inner + prefix[ell]))
        return _g_count(ell - j, prefix[0], sum(prefix[1:]), self.lo, self.hi)

    def in_source(self, y: BitSeq) -> bool:
        return tuple(y) in self.source

    def encode(self, y: BitSeq) -> BitSeq:
        y = tuple(y)
        if y not in self.source:
            raise ValueError("word has no forbidden window")
        return self.target.unrank(self.source.rank(y))

    def decode(self, t: BitSeq) -> BitSeq:
        t = tuple(t)
        if t not in self.target:
            raise MalformedCodeword("tail word outside the target band")
        r = self.target.rank(t)
        if r >= len(self.source):
            raise MalformedCodeword("tail word outside the image")
        return self.source.unrank(r)


@lru_cache(maxsize=None)
def _g_count(remaining: int, first: int, inner: int, lo: int, hi: int) -> int:
    # remaining inner bits are free, plus the final bit
    total = 0
    for s in range(remaining + 1):
        w = inner + s
        head_bad = not lo <= first + w <= hi
        ways = 2 if head_bad else sum(not lo <= w + e <= hi for e in (0, 1))
        total += comb(remaining, s) * ways
    return total


class WCodec:
    """Encoder/decoder for W(n, ell, [a, b]) with exactly one redundant bit.

    Construction checks feasibility exactly: the label width
    ``k = ell - 3 - pos_width`` is positive, the window codec fits in ``k``
    bits, and the tail codec is injective with ``10 | tail`` inside the band.
    """

    def __init__(self, params: CodeParams):
        self.params = params
        n, ell = params.n, params.ell
        self.lo, self.hi = params.a, params.b
        if n < ell + 1:
            raise InfeasibleParameters("length", f"need n >= ell + 1, got n={n} ell={ell}")
        self.pos_width = n.bit_length()
        self.label_width = ell - 3 - self.pos_width
        if self.label_width < 1:
            raise InfeasibleParameters(
                "label-width", f"k = ell - 3 - {self.pos_width} = {self.label_width} < 1"
            )
        self.phi = WindowCodec(ell, self.lo, self.hi, self.label_width)
        p1, p2 = params.profile
        self.psi = TailCodec(
            ell, self.lo, self.hi, math.ceil(p1 * (ell - 2)), math.floor(p2 * (ell - 2))
        )

    payload_length = property(lambda self: self.params.n - 1)
    codeword_length = property(lambda self: self.params.n)
    redundancy = 1
    block_length = property(lambda self: self.params.ell)

    @property
    def constraint(self):
        return WINDOW, self.params.ell, self.lo, self.hi

    def _forbidden_at(self, y: BitSeq) -> Optional[int]:
        return first_forbidden(y, self.params.ell, self.lo, self.hi)

    def encode(self, x: BitSeq, trace: Optional[List] = None) -> BitSeq:
        x = tuple(x)
        n, ell = self.params.n, self.params.ell
        if len(x) != n - 1:
            raise ValueError(f"payload must have {n - 1} bits, got {len(x)}")
        y = (0,) + x
        while len(y) > ell + 1:
            i = self._forbidden_at(y)
            if i is None:
                break
            w = y[i - 1 : i - 1 + ell]
            header = (1, 1) + int_to_bits(i, self.pos_width) + self.phi.encode(w)
            y = header + y[: i - 1] + y[i - 1 + ell :]
            if trace is not None:
                trace.append(("regular", i, w))
        if len(y) == ell + 1 and self._forbidden_at(y) is not None:
            if trace is not None:
                trace.append(("special", y))
            y = (1, 0) + self.psi.encode(y)
        z = y[-ell:]
        c = y + z * ((n - len(y)) // ell + 1)
        return c[:n]

    def decode(self, c: BitSeq) -> BitSeq:
        c = tuple(c)
        n, ell, pw = self.params.n, self.params.ell, self.pos_width
        if len(c) != n:
            raise ValueError(f"codeword must have {n} bits, got {len(c)}")
        regular = 0
        first = True
        while c[0] != 0:
            if c[1] == 1:
                regular += 1
                if regular > n - ell - 1:
                    raise MalformedCodeword("too many replacement headers")
                header, c = c[: ell - 1], c[ell - 1 :]
                i = bits_to_int(header[2 : 2 + pw])
                label = bits_to_int(header[2 + pw :])
                if not 1 <= i <= len(c) + 1:
                    raise MalformedCodeword(f"header position {i} out of range")
                if label >= len(self.phi):
                    raise MalformedCodeword(f"header label {label} out of range")
                c = c[: i - 1] + self.phi.unrank(label) + c[i - 1 :]
            else:
                # the tail swap is always the encoder's last step
                if not first:
                    raise MalformedCodeword("tail marker after a replacement header")
                c = self.psi.decode(c[2:ell])
            first = False
        if len(c) < n:
            raise MalformedCodeword("decoded word is too short")
        return c[1:n]
