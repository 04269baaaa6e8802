"""Exact counts, brute-force enumeration and bound checks for the code classes.

Nothing here shares code with the encoders: counts come from the product
formula (subblock classes) or a dynamic program over the last ``ell - 1`` bits
(window classes), and enumeration is a plain scan of all ``2**n`` words.
"""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Optional

import numpy as np

from .bitseq import HALF, SUBBLOCK, WINDOW, BitSeq, is_member
from .errors import BudgetExceeded

DEFAULT_BUDGET = 1 << 22
_CHUNK = 1 << 16


def _check_band(n: int, ell: int, a: int, b: int):
    if not 0 <= a <= b <= ell <= n:
        raise ValueError(f"need 0 <= a <= b <= ell <= n, got a={a} b={b} ell={ell} n={n}")


def count_secc(n: int, ell: int, a: int, b: int) -> int:
    """|S(n, ell, [a, b])| = (sum_{i=a..b} C(ell, i)) ** (n / ell)."""
    _check_band(n, ell, a, b)
    if n % ell:
        raise ValueError(f"n={n} is not a multiple of ell={ell}")
    return sum(comb(ell, i) for i in range(a, b + 1)) ** (n // ell)


def count_swcc(n: int, ell: int, a: int, b: int, max_states: int = DEFAULT_BUDGET) -> int:
    """|W(n, ell, [a, b])| by dynamic programming over the trailing ell-1 bits."""
    _check_band(n, ell, a, b)
    if ell == 1:
        return sum(1 for w in (0, 1) if a <= w <= b) ** n
    s = ell - 1
    size = 1 << s
    if size > max_states:
        raise BudgetExceeded(f"2^{s} states exceed the cap of {max_states}")
    dtype = np.int64 if n < 62 else object
    states = np.arange(size)
    pc = np.zeros(size, dtype=np.int64)
    for j in range(s):
        pc += (states >> j) & 1
    ok = [(a <= pc + h) & (pc + h <= b) for h in (0, 1)]
    # a window is the dropped oldest bit h followed by the new state
    counts = ok[0].astype(dtype) + ok[1].astype(dtype)
    pred = [(h << (s - 1)) | (states >> 1) for h in (0, 1)]
    zero = np.zeros(size, dtype=dtype)
    for _ in range(n - ell):
        counts = np.where(ok[0], counts[pred[0]], zero) + np.where(ok[1], counts[pred[1]], zero)
    return int(sum(int(c) for c in counts)) if dtype is object else int(counts.sum())


def _member_mask(words: np.ndarray, n: int, ell: int, a: int, b: int, mode: str) -> np.ndarray:
    shifts = np.arange(n - 1, -1, -1)
    bitmat = ((words[:, None] >> shifts) & 1).astype(np.int16)
    if mode == SUBBLOCK:
        w = bitmat.reshape(len(words), n // ell, ell).sum(axis=2)
    elif mode == WINDOW:
        pre = np.concatenate([np.zeros((len(words), 1), np.int16), bitmat.cumsum(axis=1)], axis=1)
        w = pre[:, ell:] - pre[:, :-ell]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return ((w >= a) & (w <= b)).all(axis=1)


def _scan(n, ell, a, b, mode, budget):
    _check_band(n, ell, a, b)
    if mode == SUBBLOCK and n % ell:
        raise ValueError(f"n={n} is not a multiple of ell={ell}")
    if n > 62 or 1 << n > budget:
        raise BudgetExceeded(f"2^{n} words exceed the budget of {budget}")
    for start in range(0, 1 << n, _CHUNK):
        words = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.int64)
        yield words, _member_mask(words, n, ell, a, b, mode)


def enumerate_class(
    n: int, ell: int, a: int, b: int, mode: str = WINDOW, budget: int = DEFAULT_BUDGET
) -> Iterator[BitSeq]:
    """Yield every member of S/W(n, ell, [a, b]) in lexicographic order."""
    for words, mask in _scan(n, ell, a, b, mode, budget):
        for v in words[mask]:
            v = int(v)
            yield tuple((v >> (n - 1 - j)) & 1 for j in range(n))


def count_by_enumeration(
    n: int, ell: int, a: int, b: int, mode: str = WINDOW, budget: int = DEFAULT_BUDGET
) -> int:
    return sum(int(mask.sum()) for _, mask in _scan(n, ell, a, b, mode, budget))


@dataclass
class BoundReport:
    n: int
    ell: int
    a: int
    b: int
    threshold: int
    swcc_count: int
    swcc_holds: bool
    secc_count: Optional[int]
    secc_holds: Optional[bool]
    c: Optional[str]
    required_ell: Optional[float]
    sufficient_condition: bool

    @property
    def holds(self) -> bool:
        return self.swcc_holds and self.secc_holds is not False

    def as_dict(self) -> dict:
        d = asdict(self)
        d["holds"] = self.holds
        return d


def verify_halfspace_bound(n: int, ell: int, a: int, b: int) -> BoundReport:
    """Check |W| (and |S| when ell divides n) against 2^(n-1) by exact counting.

    Also reports whether ell >= ln(n) / c^2 with c = min(1/2 - a/ell, b/ell - 1/2),
    the condition under which the bound is guaranteed; the counts are checked
    regardless of it.
    """
    threshold = 1 << (n - 1)
    swcc = count_swcc(n, ell, a, b)
    secc = count_secc(n, ell, a, b) if n % ell == 0 else None
    c = min(HALF - Fraction(a, ell), Fraction(b, ell) - HALF)
    if c > 0:
        required = math.log(n) / float(c) ** 2
        sufficient = required <= ell <= n
    else:
        required, sufficient = None, False
    return BoundReport(
        n, ell, a, b, threshold,
        swcc, swcc >= threshold,
        secc, None if secc is None else secc >= threshold,
        str(c) if c > 0 else None, required, sufficient,
    )


@dataclass
class RateReport:
    payload_length: int
    codeword_length: int
    redundancy: int
    rate: str
    rate_value: float
    class_count: Optional[int]
    capacity_bound: Optional[float]
    samples: int
    failures: int

    def as_dict(self) -> dict:
        return asdict(self)


def measure_rate(codec, samples: int = 64, seed: int = 0) -> RateReport:
    """Rate (n - r)/n of ``codec`` next to log2(|class|)/n for its constraint.

    ``samples`` random payloads are pushed through encode/decode; a failure is
    a wrong length, a constraint violation or a round-trip mismatch.
    """
    k, n = codec.payload_length, codec.codeword_length
    mode, ell, lo, hi = codec.constraint
    try:
        count = count_secc(n, ell, lo, hi) if mode == SUBBLOCK else count_swcc(n, ell, lo, hi)
    except BudgetExceeded:
        count = None
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        x = tuple(rng.getrandbits(1) for _ in range(k))
        y = codec.encode(x)
        if len(y) != n or not is_member(y, ell, lo, hi, mode) or codec.decode(y) != x:
            failures += 1
    rate = Fraction(k, n)
    return RateReport(
        k, n, n - k, f"{k}/{n}", float(rate), count,
        math.log2(count) / n if count else None, samples, failures,
    )
