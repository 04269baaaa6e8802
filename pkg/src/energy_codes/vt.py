"""Varshamov-Tenengolts syndromes and single-substitution correction."""

from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSeq, bits_to_int, int_to_bits
from .errors import Undecodable


def tag_width(base: int) -> int:
    """Bits needed for a syndrome modulo ``2 * base``: ceil(log2(2 * base))."""
    return (2 * base - 1).bit_length()


@dataclass(frozen=True)
class VtTag:
    value: int
    base: int

    def __post_init__(self):
        if not 0 <= self.value < 2 * self.base:
            raise ValueError(f"syndrome {self.value} outside Z_{2 * self.base}")

    @property
    def width(self) -> int:
        return tag_width(self.base)

    @property
    def bits(self) -> BitSeq:
        return int_to_bits(self.value, self.width)

    @classmethod
    def from_bits(cls, b: BitSeq, base: int) -> "VtTag":
        if len(b) != tag_width(base):
            raise ValueError(f"tag must have {tag_width(base)} bits")
        value = bits_to_int(b)
        if value >= 2 * base:
            raise Undecodable(f"tag value {value} outside Z_{2 * base}")
        return cls(value, base)


def syndrome(x: BitSeq, base: int) -> VtTag:
    """Sum of i * x_i over 1-indexed positions, reduced mod ``2 * base``."""
    if len(x) > base:
        raise ValueError(f"word of length {len(x)} longer than base {base}")
    return VtTag(sum(i for i, b in enumerate(x, start=1) if b) % (2 * base), base)


def vt_correct(y: BitSeq, expected: VtTag) -> BitSeq:
    """Undo at most one substitution so that the syndrome matches ``expected``.

    A 1 -> 0 error at position p lowers the syndrome by p, a 0 -> 1 error raises
    it by p. The bit found at the implied position must have the value the error
    would have left there; anything else raises :class:`Undecodable`.
    """
    y = tuple(y)
    L = expected.base
    d = (expected.value - syndrome(y, L).value) % (2 * L)
    if d == 0:
        return y
    n = len(y)
    if 1 <= d <= n and y[d - 1] == 0:
        p = d
    elif 2 * L - n <= d and y[2 * L - d - 1] == 1:
        p = 2 * L - d
    else:
        raise Undecodable(f"syndrome difference {d} matches no single substitution")
    return y[: p - 1] + (1 - y[p - 1],) + y[p:]
