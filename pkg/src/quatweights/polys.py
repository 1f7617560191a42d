"""Exact symbolic arithmetic in the space ⊕_i Z[x]·x_i ⊕ Z[x].

Every expression this package manipulates is of the form

    a_0(x)·x_0 + a_1(x)·x_1 + ... + a_{f-1}(x)·x_{f-1} + c(x)

with integer-coefficient polynomials a_i, c: degree one in each slot
variable x_i, unbounded degree in x. The weight formulas never leave this
space, and staying inside it keeps a handful of operations trivial and
exact: addition, scaling, multiplication by powers of x, substitution
x^f ↦ 1 (``s_reduce``), checked division by two, and integer evaluation.

Conventions:

- coefficient polynomials are dense tuples ``(c_0, c_1, ...)`` in x with
  trailing zeros stripped, so structural equality of two values is exactly
  equality of normal forms — this is the equality every identity check in
  the package relies on;
- coefficients are Python ints, hence exact at any magnitude;
- values are immutable; all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import OddCoefficientError

Coeffs = tuple[int, ...]


def _trim(coeffs) -> Coeffs:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(int(c) for c in cs)


def _padd(a: Coeffs, b: Coeffs, scale: int = 1) -> Coeffs:
    out = list(a) + [0] * (len(b) - len(a))
    for k, c in enumerate(b):
        out[k] += scale * c
    return _trim(out)


def _pshift(a: Coeffs, k: int) -> Coeffs:
    if not a:
        return ()
    return (0,) * k + a


def _pfold(a: Coeffs, f: int) -> Coeffs:
    """Substitute x^f ↦ 1, i.e. fold exponents modulo f."""
    out = [0] * f
    for k, c in enumerate(a):
        out[k % f] += c
    return _trim(out)


def _peval(a: Coeffs, x0: int) -> int:
    val = 0
    for c in reversed(a):
        val = val * x0 + c
    return val


def _pstr(a: Coeffs) -> str:
    terms = []
    for k, c in enumerate(a):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            head = {1: "", -1: "-"}.get(c, str(c) + "*")
            terms.append(f"{head}x" if k == 1 else f"{head}x^{k}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@dataclass(frozen=True)
class RestrictedPoly:
    """An element of ⊕_i Z[x]·x_i ⊕ Z[x] with f slot variables."""

    f: int
    linear: tuple[Coeffs, ...]
    constant: Coeffs

    def __post_init__(self):
        if self.f < 1:
            raise ValueError("arity f must be >= 1")
        if len(self.linear) != self.f:
            raise ValueError(f"expected {self.f} linear slots, got {len(self.linear)}")
        object.__setattr__(self, "linear", tuple(_trim(a) for a in self.linear))
        object.__setattr__(self, "constant", _trim(self.constant))

    @classmethod
    def zero(cls, f: int) -> "RestrictedPoly":
        return cls(f, ((),) * f, ())

    @property
    def is_zero(self) -> bool:
        return self.constant == () and all(a == () for a in self.linear)

    def _coerce(self, other) -> "RestrictedPoly":
        if isinstance(other, RestrictedPoly):
            return other
        if isinstance(other, int):
            return RestrictedPoly(self.f, ((),) * self.f, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return combine(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return combine(self, other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return combine(other, self, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scale):
        if not isinstance(scale, int):
            return NotImplemented
        return RestrictedPoly(
            self.f,
            tuple(tuple(scale * c for c in a) for a in self.linear),
            tuple(scale * c for c in self.constant),
        )

    __rmul__ = __mul__

    def _all_coeffs(self) -> Iterator[int]:
        for a in self.linear:
            yield from a
        yield from self.constant

    def __str__(self):
        parts = []
        for i, a in enumerate(self.linear):
            if a == ():
                continue
            if a == (1,):
                parts.append(f"x_{i}")
            elif a == (-1,):
                parts.append(f"-x_{i}")
            elif len(a) == 1:
                parts.append(f"{a[0]}*x_{i}")
            else:
                parts.append(f"({_pstr(a)})*x_{i}")
        if self.constant:
            parts.append(_pstr(self.constant))
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def xpow(k: int, f: int) -> RestrictedPoly:
    """The monomial x^k as a RestrictedPoly of arity f."""
    if k < 0:
        raise ValueError("exponent must be >= 0")
    return RestrictedPoly(f, ((),) * f, (0,) * k + (1,))


def xi(i: int, f: int) -> RestrictedPoly:
    """The slot variable x_i as a RestrictedPoly of arity f."""
    if not 0 <= i < f:
        raise ValueError(f"slot index {i} out of range for arity {f}")
    linear = [()] * f
    linear[i] = (1,)
    return RestrictedPoly(f, tuple(linear), ())


def combine(a: RestrictedPoly, b: RestrictedPoly, scale: int = 1) -> RestrictedPoly:
    """Return a + scale·b, normalized."""
    if a.f != b.f:
        raise ValueError(f"arity mismatch: {a.f} != {b.f}")
    linear = tuple(_padd(pa, pb, scale) for pa, pb in zip(a.linear, b.linear))
    return RestrictedPoly(a.f, linear, _padd(a.constant, b.constant, scale))


def xshift(z: RestrictedPoly, k: int) -> RestrictedPoly:
    """Multiply by x^k (the space is a Z[x]-module)."""
    if k < 0:
        raise ValueError("shift must be >= 0")
    return RestrictedPoly(z.f, tuple(_pshift(a, k) for a in z.linear), _pshift(z.constant, k))


def s_reduce(z: RestrictedPoly) -> RestrictedPoly:
    """Substitute x^f ↦ 1 in every coefficient polynomial.

    The result is the unique representative congruent to z modulo x^f − 1
    with all x-degrees below f. Implemented as exponent folding mod f per
    slot; a long-division reference lives in the test suite.
    """
    return RestrictedPoly(
        z.f, tuple(_pfold(a, z.f) for a in z.linear), _pfold(z.constant, z.f)
    )


def linear_part(z: RestrictedPoly) -> RestrictedPoly:
    """The Σ a_i(x)·x_i part of z."""
    return RestrictedPoly(z.f, z.linear, ())


def constant_part(z: RestrictedPoly) -> RestrictedPoly:
    """The slot-free Z[x] part of z."""
    return RestrictedPoly(z.f, ((),) * z.f, z.constant)


def coeff_c(z: RestrictedPoly, i: int) -> int:
    """Coefficient of x^i in the constant part."""
    if i < 0:
        raise ValueError("coefficient index must be >= 0")
    return z.constant[i] if i < len(z.constant) else 0


def halve_checked(z: RestrictedPoly) -> RestrictedPoly:
    """Return z/2, requiring every coefficient to be even.

    An odd coefficient means an integrality lemma was violated, which can
    only happen through a bug or non-generic misuse; it is never a normal
    outcome.
    """
    for c in z._all_coeffs():
        if c % 2 != 0:
            raise OddCoefficientError(f"odd coefficient {c} in {z}")
    return RestrictedPoly(
        z.f,
        tuple(tuple(c // 2 for c in a) for a in z.linear),
        tuple(c // 2 for c in z.constant),
    )


def evaluate(z: RestrictedPoly, r: Sequence[int], p: int) -> int:
    """Exact integer substitution x_i ↦ r_i, x ↦ p."""
    if len(r) != z.f:
        raise ValueError(f"expected {z.f} slot values, got {len(r)}")
    total = _peval(z.constant, p)
    for a, ri in zip(z.linear, r):
        total += _peval(a, p) * ri
    return total
