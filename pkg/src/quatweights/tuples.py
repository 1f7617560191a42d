"""Cyclically indexed bit and sign tuples.

All combinatorial parameters in this package are f-tuples indexed by Z/fZ:
``t[i]`` is read modulo f, so ``t[-1]`` is the last entry and ``t[f]`` wraps
back to the first. Both types subclass ``tuple``: equality, hashing and
lexicographic sorting behave like plain tuples.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class BitTuple(tuple):
    """An f-tuple over {0, 1} with cyclic indexing."""

    def __new__(cls, bits):
        entries = tuple(int(b) for b in bits)
        if len(entries) < 1:
            raise ValueError("bit tuple must have length >= 1")
        if any(b not in (0, 1) for b in entries):
            raise ValueError(f"bit tuple entries must be 0 or 1, got {entries}")
        return super().__new__(cls, entries)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return tuple(self)[i]
        return tuple.__getitem__(self, i % len(self))


class SignTuple(tuple):
    """An f-tuple over {-1, 0, 1} with cyclic indexing."""

    def __new__(cls, signs):
        entries = tuple(int(s) for s in signs)
        if len(entries) < 1:
            raise ValueError("sign tuple must have length >= 1")
        if any(s not in (-1, 0, 1) for s in entries):
            raise ValueError(f"sign tuple entries must be -1, 0 or 1, got {entries}")
        return super().__new__(cls, entries)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return tuple(self)[i]
        return tuple.__getitem__(self, i % len(self))


def leq(v: BitTuple, w: BitTuple) -> bool:
    """Pointwise-implication partial order: every 1-bit of v is a 1-bit of w."""
    if len(v) != len(w):
        raise ValueError("cannot compare tuples of different length")
    return all(b <= c for b, c in zip(v, w))


def ell(v: BitTuple) -> int:
    """Number of 1-bits."""
    return sum(v)


def u0_transform(u: BitTuple) -> BitTuple:
    """Flip the last bit: (u_0, ..., u_{f-1}) -> (u_0, ..., 1 - u_{f-1})."""
    u = BitTuple(u)
    return BitTuple(u[:-1] + (1 - u[-1],))


@lru_cache(maxsize=None)
def all_bit_tuples(f: int) -> tuple[BitTuple, ...]:
    """All 2^f bit tuples of length f, lexicographically ordered."""
    return tuple(BitTuple(bits) for bits in itertools.product((0, 1), repeat=f))


@lru_cache(maxsize=None)
def all_sign_tuples(f: int) -> tuple[SignTuple, ...]:
    """All 3^f sign tuples of length f, lexicographically ordered."""
    return tuple(SignTuple(s) for s in itertools.product((-1, 0, 1), repeat=f))


def tuples_below(v_max: BitTuple) -> tuple[BitTuple, ...]:
    """All bit tuples <= v_max in the pointwise order, lexicographically."""
    v_max = BitTuple(v_max)
    return tuple(v for v in all_bit_tuples(len(v_max)) if leq(v, v_max))
