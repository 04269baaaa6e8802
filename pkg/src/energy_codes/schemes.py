"""Name -> codec lookup shared by the CLI and the tests."""

from __future__ import annotations

from typing import Optional, Tuple

from .bitseq import CodeParams
from .ecc import SEccCodec, WEccCodec
from .knuth import PolarityCodec, SCodec, SPrimeCodec
from .srt import WCodec

SCHEMES = {
    "s": SCodec,
    "s-prime": SPrimeCodec,
    "polarity": PolarityCodec,
    "w": WCodec,
    "s-ecc": SEccCodec,
    "w-ecc": WEccCodec,
}


def make_codec(scheme: str, params: CodeParams, inner: Optional[Tuple[int, int]] = None):
    try:
        cls = SCHEMES[scheme]
    except KeyError:
        raise ValueError(f"unknown scheme {scheme!r}; pick one of {', '.join(SCHEMES)}") from None
    if inner is not None:
        if cls is not WEccCodec:
            raise ValueError("an inner band only applies to w-ecc")
        return cls(params, inner)
    return cls(params)
