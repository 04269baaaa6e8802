"""Binary sequences, subblocks, windows and weight-constraint membership.

A ``BitSeq`` is a plain tuple of 0/1 ints. Every positional argument in this
module is 1-indexed: ``subblock(x, 1, ell)`` is the first subblock and
``window(x, i, ell)`` starts at bit ``x_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, NamedTuple, Optional, Tuple

BitSeq = Tuple[int, ...]

SUBBLOCK = "subblock"
WINDOW = "window"
HALF = Fraction(1, 2)


def bits(value: "str | Iterable[int]") -> BitSeq:
    """Build a BitSeq from a '0'/'1' string (spaces ignored) or an iterable."""
    if isinstance(value, str):
        value = value.replace(" ", "")
        if any(ch not in "01" for ch in value):
            raise ValueError(f"not a bitstring: {value!r}")
        return tuple(1 if ch == "1" else 0 for ch in value)
    out = tuple(int(b) for b in value)
    if any(b not in (0, 1) for b in out):
        raise ValueError("bits must be 0 or 1")
    return out


def to_str(x: BitSeq) -> str:
    return "".join("1" if b else "0" for b in x)


def weight(x: BitSeq) -> int:
    return sum(x)


def complement(x: BitSeq) -> BitSeq:
    return tuple(1 - b for b in x)


def int_to_bits(value: int, width: int) -> BitSeq:
    """Big-endian fixed-width binary representation."""
    if value < 0 or value >= 1 << width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return tuple((value >> (width - 1 - j)) & 1 for j in range(width))


def bits_to_int(x: BitSeq) -> int:
    v = 0
    for b in x:
        v = (v << 1) | b
    return v


def subblock(x: BitSeq, i: int, ell: int) -> BitSeq:
    if ell <= 0 or len(x) % ell:
        raise ValueError(f"length {len(x)} is not a multiple of {ell}")
    m = len(x) // ell
    if not 1 <= i <= m:
        raise IndexError(f"subblock {i} out of range 1..{m}")
    return x[(i - 1) * ell : i * ell]


def subblocks(x: BitSeq, ell: int) -> list:
    return [subblock(x, i, ell) for i in range(1, len(x) // ell + 1)] if x else []


def window(x: BitSeq, i: int, ell: int) -> BitSeq:
    if not 1 <= i <= len(x) - ell + 1:
        raise IndexError(f"window {i} out of range 1..{len(x) - ell + 1}")
    return x[i - 1 : i - 1 + ell]


def flip_prefix(x: BitSeq, t: int) -> BitSeq:
    """Complement the first ``t`` bits."""
    if not 0 <= t <= len(x):
        raise ValueError(f"flip length {t} out of range 0..{len(x)}")
    return tuple(1 - b for b in x[:t]) + tuple(x[t:])


def interleave(x: BitSeq, y: BitSeq) -> BitSeq:
    if len(x) != len(y):
        raise ValueError("interleave needs equal lengths")
    return tuple(b for pair in zip(x, y) for b in pair)


def deinterleave(z: BitSeq) -> Tuple[BitSeq, BitSeq]:
    if len(z) % 2:
        raise ValueError("deinterleave needs an even length")
    return tuple(z[0::2]), tuple(z[1::2])


def window_weights(x: BitSeq, ell: int) -> list:
    """Weights of windows 1..len(x)-ell+1, via prefix sums."""
    pre = [0, *accumulate(x)]
    return [pre[i + ell] - pre[i] for i in range(len(x) - ell + 1)]


def first_forbidden(x: BitSeq, ell: int, lo: int, hi: int, start: int = 1) -> Optional[int]:
    """Smallest window index >= start whose weight is outside [lo, hi]."""
    n = len(x)
    if n < ell:
        return None
    w = sum(x[start - 1 : start - 1 + ell])
    i = start
    while True:
        if w < lo or w > hi:
            return i
        if i + ell > n:
            return None
        w += x[i - 1 + ell] - x[i - 1]
        i += 1


@dataclass(frozen=True)
class CodeParams:
    """Constraint profile: length ``n``, subblock/window ``ell`` and band [a, b].

    ``p1``/``p2`` are the optional fractional bounds; when absent,
    :attr:`profile` falls back to ``a/ell`` and ``b/ell``.
    """

    n: int
    ell: int
    a: int
    b: int
    p1: Optional[Fraction] = None
    p2: Optional[Fraction] = None

    def __post_init__(self):
        if not 0 <= self.a < self.b <= self.ell <= self.n:
            raise ValueError(
                f"need 0 <= a < b <= ell <= n, got a={self.a} b={self.b} "
                f"ell={self.ell} n={self.n}"
            )
        if (self.p1 is None) != (self.p2 is None):
            raise ValueError("p1 and p2 must be given together")
        if self.p1 is not None:
            object.__setattr__(self, "p1", Fraction(self.p1))
            object.__setattr__(self, "p2", Fraction(self.p2))
            if not 0 <= self.p1 < HALF < self.p2 <= 1:
                raise ValueError(f"need 0 <= p1 < 1/2 < p2 <= 1, got {self.p1}, {self.p2}")
            if self.a > math.ceil(self.p1 * self.ell) or self.b < math.floor(self.p2 * self.ell):
                raise ValueError("band [a, b] must contain [p1*ell, p2*ell]")

    @classmethod
    def from_profile(cls, n: int, ell: int, p1, p2) -> "CodeParams":
        p1, p2 = Fraction(p1), Fraction(p2)
        return cls(n, ell, math.ceil(p1 * ell), math.floor(p2 * ell), p1, p2)

    @property
    def m(self) -> Optional[int]:
        return self.n // self.ell if self.n % self.ell == 0 else None

    @property
    def profile(self) -> Tuple[Fraction, Fraction]:
        if self.p1 is not None:
            return self.p1, self.p2
        return Fraction(self.a, self.ell), Fraction(self.b, self.ell)

    def require_subblocks(self) -> int:
        if self.m is None:
            raise ValueError(f"n={self.n} is not a multiple of ell={self.ell}")
        return self.m


class Membership(NamedTuple):
    ok: bool
    first_violation: Optional[int] = None
    weight: Optional[int] = None


def check_membership(x: BitSeq, params: CodeParams, mode: str = WINDOW) -> Membership:
    """Test ``x`` against S(n, ell, [a, b]) or W(n, ell, [a, b]).

    On failure the smallest violating subblock/window index is reported together
    with its weight.
    """
    ell, a, b = params.ell, params.a, params.b
    if mode == SUBBLOCK:
        if len(x) % ell:
            raise ValueError(f"length {len(x)} is not a multiple of {ell}")
        for i in range(len(x) // ell):
            w = sum(x[i * ell : (i + 1) * ell])
            if not a <= w <= b:
                return Membership(False, i + 1, w)
        return Membership(True)
    if mode != WINDOW:
        raise ValueError(f"unknown mode {mode!r}")
    for i, w in enumerate(window_weights(x, ell), start=1):
        if not a <= w <= b:
            return Membership(False, i, w)
    return Membership(True)


def is_member(x: BitSeq, ell: int, lo: int, hi: int, mode: str = WINDOW) -> bool:
    if mode == SUBBLOCK:
        if len(x) % ell:
            return False
        return all(lo <= sum(x[i : i + ell]) <= hi for i in range(0, len(x), ell))
    return all(lo <= w <= hi for w in window_weights(x, ell))
