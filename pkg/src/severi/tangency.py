"""Tangency sequences and the state bookkeeping of the recursion.

A tangency sequence stores, at index k-1, the number of tangency
conditions of order k against the fixed line.  Canonical form has no
trailing zeros; equality is structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

TangencySeq = tuple[int, ...]


class InvalidState(ValueError):
    """Raised when (d, delta, alpha, beta) violates the state invariants."""


def canonical(parts: Iterable[int]) -> TangencySeq:
    """Trim trailing zeros; reject negative entries.

    >>> canonical([2, 0, 1, 0, 0])
    (2, 0, 1)
    """
    out = list(parts)
    for p in out:
        if p < 0:
            raise ValueError("tangency multiplicities must be nonnegative")
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def weight(s: TangencySeq) -> int:
    """I(s) = sum of k.s_k over orders k."""
    return sum((i + 1) * v for i, v in enumerate(s))


def size(s: TangencySeq) -> int:
    """|s| = total number of conditions."""
    return sum(s)


def seq_binomial(s: TangencySeq, t: TangencySeq) -> int:
    """Product of C(s_k, t_k); zero when t exceeds s in any order."""
    out = 1
    for i, tv in enumerate(t):
        sv = s[i] if i < len(s) else 0
        if tv > sv:
            return 0
        out *= math.comb(sv, tv)
    return out


def seq_weighted_power(s: TangencySeq) -> int:
    """I^s = product of k^(s_k)."""
    out = 1
    for i, v in enumerate(s):
        if v:
            out *= (i + 1) ** v
    return out


def seq_to_text(s: TangencySeq) -> str:
    """Comma-separated parts; the empty sequence is the empty string."""
    return ",".join(str(v) for v in s)


def seq_from_text(text: str) -> TangencySeq:
    if text == "":
        return ()
    try:
        return canonical(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad tangency text {text!r}: {exc}") from None


@dataclass(frozen=True)
class ChState:
    """A recursion state (d, delta, alpha, beta), canonicalized on build."""

    d: int
    delta: int
    alpha: TangencySeq
    beta: TangencySeq

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", canonical(self.alpha))
        object.__setattr__(self, "beta", canonical(self.beta))
        if self.d < 1:
            raise InvalidState(f"degree must be positive, got {self.d}")
        if self.delta < 0:
            raise InvalidState(f"node count must be nonnegative, got {self.delta}")
        wa, wb = weight(self.alpha), weight(self.beta)
        if wa + wb != self.d:
            raise InvalidState(
                f"weight(alpha) + weight(beta) = {wa}+{wb} != d = {self.d}"
            )

    @property
    def key(self) -> tuple[int, int, TangencySeq, TangencySeq]:
        return (self.d, self.delta, self.alpha, self.beta)


def point_count(st: ChState) -> int:
    """Number of point conditions the counted curves pass through.

    Family dimension d(d+3)/2, one condition per node, k per assigned
    order-k tangency, k-1 per unassigned one; with I(alpha)+I(beta) = d
    this is d(d+3)/2 - delta - d + |beta|.
    """
    d = st.d
    return d * (d + 3) // 2 - st.delta - d + size(st.beta)
