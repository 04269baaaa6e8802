"""Lexicographic rank/unrank over sets of fixed-length binary words.

A set is described by a completion counter: ``completions(prefix)`` returns
how many members start with ``prefix``. Ranking then needs no materialized
table, only ``O(length)`` counter calls per word.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .bitseq import BitSeq


class LexRanker:
    def __init__(self, length: int, completions: Callable[[Sequence[int]], int]):
        self.length = length
        self.completions = completions
        self.size = completions(())

    def __len__(self):
        return self.size

    def __contains__(self, word) -> bool:
        return len(word) == self.length and self.completions(tuple(word)) == 1

    def rank(self, word: BitSeq) -> int:
        word = tuple(word)
        if word not in self:
            raise ValueError(f"{word} is not a member")
        r = 0
        for j, bit in enumerate(word):
            if bit:
                r += self.completions(word[:j] + (0,))
        return r

    def unrank(self, r: int) -> BitSeq:
        if not 0 <= r < self.size:
            raise ValueError(f"rank {r} out of range 0..{self.size - 1}")
        word = ()
        for _ in range(self.length):
            zero = self.completions(word + (0,))
            if r < zero:
                word += (0,)
            else:
                r -= zero
                word += (1,)
        return word


@lru_cache(maxsize=None)
def band_completions(remaining: int, w: int, lo: int, hi: int, inside: bool) -> int:
    """Ways to add ``remaining`` bits to weight ``w`` and land in (or outside) [lo, hi]."""
    total = 0
    for j in range(remaining + 1):
        if (lo <= w + j <= hi) == inside:
            total += comb(remaining, j)
    return total


def band_ranker(length: int, lo: int, hi: int, inside: bool = True) -> LexRanker:
    """Ranker over words whose weight lies inside (or outside) [lo, hi]."""

    def completions(prefix):
        return band_completions(length - len(prefix), sum(prefix), lo, hi, inside)

    return LexRanker(length, completions)
