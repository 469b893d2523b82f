"""Sign vectors over {-, 0, +} and conformality."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError

_SYMBOL = {1: "+", -1: "-", 0: "0"}


@dataclass(frozen=True)
class SignVector:
    """Sign vector stored as bitmasks of its positive and negative coordinates."""

    pos: int
    neg: int
    dim: int

    def __post_init__(self):
        if self.pos & self.neg:
            raise ValueError("a coordinate cannot be both positive and negative")
        if (self.pos | self.neg) >> self.dim:
            raise ValueError("sign bits beyond the dimension")

    @classmethod
    def from_string(cls, text: str) -> "SignVector":
        pos = neg = 0
        for i, ch in enumerate(text):
            if ch == "+":
                pos |= 1 << i
            elif ch == "-":
                neg |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid sign character {ch!r}")
        return cls(pos, neg, len(text))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.dim:
            raise IndexError(i)
        return 1 if self.pos >> i & 1 else -1 if self.neg >> i & 1 else 0

    def __len__(self) -> int:
        return self.dim

    def __str__(self) -> str:
        return "".join(_SYMBOL[self[i]] for i in range(self.dim))

    def __le__(self, other: "SignVector") -> bool:
        return sign_leq(self, other)

    @property
    def support(self) -> int:
        return self.pos | self.neg


def sign_of(v: Sequence) -> SignVector:
    pos = neg = 0
    for i, a in enumerate(v):
        if a > 0:
            pos |= 1 << i
        elif a < 0:
            neg |= 1 << i
    return SignVector(pos, neg, len(v))


def sign_leq(X: SignVector, Y: SignVector) -> bool:
    """Component-wise order with 0 below both - and +."""
    if X.dim != Y.dim:
        raise DimensionError(f"sign vectors of dimension {X.dim} and {Y.dim}")
    return X.pos & ~Y.pos == 0 and X.neg & ~Y.neg == 0


def conforms(x: Sequence, y: Sequence) -> bool:
    if len(x) != len(y):
        raise DimensionError(f"length mismatch: {len(x)} vs {len(y)}")
    return sign_leq(sign_of(x), sign_of(y))


def orthant_contains(X: SignVector, v: Sequence) -> bool:
    """Membership in the closed orthant {v : sign(v) <= X}."""
    if X.dim != len(v):
        raise DimensionError(f"orthant of dimension {X.dim}, vector of length {len(v)}")
    return sign_leq(sign_of(v), X)
