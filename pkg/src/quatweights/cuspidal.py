"""Characters of the quadratic extension and reduced cuspidal types.

A character of l^×, l the quadratic extension of the field with q = p^f
elements, is tracked purely as an exponent e mod q²-1 of a fixed generator
embedding; no field element is ever materialized. A character is *type I*
when it does not factor through the norm to k^×, equivalently when q+1 does
not divide e. Every type-I exponent has a unique normal form

    e ≡ (q+1)·b + 1 + c   (mod q²-1),   0 <= b <= q-2,  0 <= c <= q-1,

and the base-p digits of c drive all the combinatorics (``CharQuad``).

The irreducible constituents of the reduced cuspidal type attached to a
type-I character are indexed by the admissible bit tuples u⃗ (``p_theta``):
u⃗ is admissible unless some digit hits a forbidden boundary value (0 or
p-1, depending on the local window of u⃗). For admissible u⃗ the factor is

    s_i = p - 2 + u0_{i-1} - c_i   if u_i = 1,      c_i - u0_{i-1}  if u_i = 0,
    t_i = c_i + (1 - u_{i-1})      if u_i = 1,      0               if u_i = 0,

twisted by b + u_0·u_{f-1} + (1-u_0)(1-u_{f-1}), where u⃗0 is u⃗ with its
last bit flipped. The admissibility conditions are exactly the guards
keeping every s_i inside [0, p-1].
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DigitRangeError, InadmissibleTupleError, NotTypeOneError
from .gl2 import GL2Weight, is_prime, normalize_weight
from .tuples import BitTuple, all_bit_tuples, u0_transform


def is_type_one(e: int, q: int) -> bool:
    """True iff the character of exponent e does not factor through the norm."""
    return (e % (q * q - 1)) % (q + 1) != 0


@dataclass(frozen=True)
class CharQuad:
    """A type-I character in (b, c) normal form with the base-p digits of c."""

    p: int
    f: int
    e: int
    b: int
    c: int
    c_digits: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ValueError("f must be >= 1")
        q = self.q
        if not 0 <= self.e < q * q - 1:
            raise ValueError(f"exponent {self.e} not reduced mod {q * q - 1}")
        if not is_type_one(self.e, q):
            raise NotTypeOneError(f"exponent {self.e} is divisible by q+1 = {q + 1}")
        if not 0 <= self.b <= q - 2:
            raise ValueError(f"b = {self.b} outside [0, {q - 2}]")
        if not 0 <= self.c <= q - 1:
            raise ValueError(f"c = {self.c} outside [0, {q - 1}]")
        if ((q + 1) * self.b + 1 + self.c - self.e) % (q * q - 1) != 0:
            raise ValueError("(b, c) does not represent e")
        digits = tuple(int(d) for d in self.c_digits)
        if len(digits) != self.f or sum(d * self.p**i for i, d in enumerate(digits)) != self.c:
            raise ValueError("c_digits are not the base-p digits of c")
        if any(not 0 <= d <= self.p - 1 for d in digits):
            raise DigitRangeError(f"digit outside [0, {self.p - 1}] in {digits}")
        object.__setattr__(self, "c_digits", digits)

    @property
    def q(self) -> int:
        return self.p**self.f

    @classmethod
    def from_exponent(cls, p: int, f: int, e: int) -> "CharQuad":
        return bc_decompose(e, p, f)

    @classmethod
    def from_bc(cls, p: int, f: int, b: int, c: int) -> "CharQuad":
        q = p**f
        e = ((q + 1) * b + 1 + c) % (q * q - 1)
        digits, rem = [], c
        for _ in range(f):
            digits.append(rem % p)
            rem //= p
        return cls(p, f, e, b, c, tuple(digits))


def bc_decompose(e: int, p: int, f: int) -> CharQuad:
    """The unique (b, c) in range with (q+1)·b + 1 + c ≡ e mod q²-1.

    c is pinned mod q+1 by c ≡ e - 1, and the range [0, q-1] contains every
    residue mod q+1 except q itself — which is hit exactly when q+1 divides
    e, i.e. for the non-type-I characters this rejects.
    """
    q = p**f
    e = e % (q * q - 1)
    c = (e - 1) % (q + 1)
    if c == q:
        raise NotTypeOneError(f"exponent {e} is divisible by q+1 = {q + 1}")
    b = ((e - 1 - c) // (q + 1)) % (q - 1)
    return CharQuad.from_bc(p, f, b, c)


def p_theta(psi: CharQuad) -> tuple[BitTuple, ...]:
    """Admissible bit tuples of psi, lexicographically ordered.

    u⃗ is rejected iff some index j has u_j = 1, u0_{j-1} = 0 and c_j = p-1,
    or u_j = 0, u0_{j-1} = 1 and c_j = 0.
    """
    p, digits = psi.p, psi.c_digits
    out = []
    for u in all_bit_tuples(psi.f):
        u0 = u0_transform(u)
        for j in range(psi.f):
            if u[j] == 1 and u0[j - 1] == 0 and digits[j] == p - 1:
                break
            if u[j] == 0 and u0[j - 1] == 1 and digits[j] == 0:
                break
        else:
            out.append(u)
    return tuple(out)


def jh_factor(psi: CharQuad, u: BitTuple) -> GL2Weight:
    """The irreducible constituent of the reduced type indexed by admissible u⃗."""
    u = BitTuple(u)
    if len(u) != psi.f:
        raise ValueError("u length must equal f")
    if u not in p_theta(psi):
        raise InadmissibleTupleError(f"{tuple(u)} is not admissible for this character")
    p, f = psi.p, psi.f
    u0 = u0_transform(u)
    s, t = [], []
    for i in range(f):
        ci = psi.c_digits[i]
        if u[i] == 1:
            si = p - 2 + u0[i - 1] - ci
            ti = ci + (1 - u[i - 1])
        else:
            si = ci - u0[i - 1]
            ti = 0
        if not 0 <= si <= p - 1:
            raise DigitRangeError(f"factor digit {si} outside [0, {p - 1}]")
        s.append(si)
        t.append(ti)
    base = normalize_weight(t, s, p, f)
    shift = psi.b + u[0] * u[-1] + (1 - u[0]) * (1 - u[-1])
    return GL2Weight(p, f, base.r, (base.a + shift) % (psi.q - 1))


def jh_set(psi: CharQuad) -> frozenset[GL2Weight]:
    """All irreducible constituents of the reduced type of psi (multiplicity-free)."""
    return frozenset(jh_factor(psi, u) for u in p_theta(psi))
