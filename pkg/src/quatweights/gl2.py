"""GL2(k)-weights and generic two-dimensional mod-p Galois parameters.

An irreducible mod-p representation of GL2(k), k the field with q = p^f
elements, is written canonically as symmetric-power digits (r_0, ..., r_{f-1})
with 0 <= r_i <= p-1 together with a determinant-twist exponent a mod q-1;
distinct (r⃗, a) are distinct irreducibles (``GL2Weight``).

A Galois parameter (``RhoBar``) is given by its kind (reducible-split,
reducible-nonsplit, or irreducible), its inertia digits r⃗, an optional
stratum bound v_rho for the nonsplit kind, and an overall twist exponent.
Genericity is validated eagerly: for reducible kinds all digits lie in
[0, p-3] and are neither all 0 nor all p-3; for the irreducible kind
1 <= r_0 <= p-2 and 0 <= r_i <= p-3 for i > 0. Everything downstream
assumes these bounds.

The weight set attached to a generic parameter is indexed by bit tuples v⃗.
Entry i of the defining tuple λ_v⃗ depends only on the adjacent bits
(v_{i-1}, v_i):

    reducible family          (0,0) ↦ x_i        (0,1) ↦ x - 2 - x_i
                              (1,0) ↦ x_i + 1    (1,1) ↦ x - 3 - x_i

    irreducible family, i = 0 only:
                              (0,0) ↦ x_0        (0,1) ↦ x - 2 - x_0
                              (1,0) ↦ x_0 - 1    (1,1) ↦ x - 1 - x_0

(λ_v⃗ is the unique tuple satisfying the cyclic adjacency constraints; the
constraint checker survives as a test-side oracle.) The twist exponent of
the weight is the half-sum polynomial e(λ_v⃗) computed by ``e_lambda``, with
``e_lambda_via_s`` as a redundant second route through the x^f ↦ 1 reduction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import DigitRangeError, NonGenericError, StratumViolationError
from .polys import RestrictedPoly, evaluate, halve_checked, s_reduce, xi, xpow, xshift
from .tuples import BitTuple, all_bit_tuples, leq, tuples_below


class Family(enum.Enum):
    """Which λ-table family applies: reducible or irreducible parameters."""

    REDUCIBLE = "reducible"
    IRREDUCIBLE = "irreducible"


class Kind(enum.Enum):
    REDUCIBLE_SPLIT = "reducible-split"
    REDUCIBLE_NONSPLIT = "reducible-nonsplit"
    IRREDUCIBLE = "irreducible"

    @property
    def family(self) -> Family:
        if self is Kind.IRREDUCIBLE:
            return Family.IRREDUCIBLE
        return Family.REDUCIBLE

    @property
    def is_reducible(self) -> bool:
        return self is not Kind.IRREDUCIBLE


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# Entry builders keyed by (v_{i-1}, v_i).
_REDUCIBLE_ENTRY = {
    (0, 0): lambda i, f: xi(i, f),
    (0, 1): lambda i, f: xpow(1, f) - 2 - xi(i, f),
    (1, 0): lambda i, f: xi(i, f) + 1,
    (1, 1): lambda i, f: xpow(1, f) - 3 - xi(i, f),
}

_IRREDUCIBLE_ENTRY_0 = {
    (0, 0): lambda i, f: xi(0, f),
    (0, 1): lambda i, f: xpow(1, f) - 2 - xi(0, f),
    (1, 0): lambda i, f: xi(0, f) - 1,
    (1, 1): lambda i, f: xpow(1, f) - 1 - xi(0, f),
}


@lru_cache(maxsize=None)
def lambda_tuple(v: BitTuple, family: Family) -> tuple[RestrictedPoly, ...]:
    """The weight-defining tuple λ_v⃗; entry i depends on (v_{i-1}, v_i)."""
    v = BitTuple(v)
    f = len(v)
    entries = []
    for i in range(f):
        key = (v[i - 1], v[i])
        if family is Family.IRREDUCIBLE and i == 0:
            entries.append(_IRREDUCIBLE_ENTRY_0[key](i, f))
        else:
            entries.append(_REDUCIBLE_ENTRY[key](i, f))
    return tuple(entries)


def _half_sum_argument(v: BitTuple, family: Family) -> RestrictedPoly:
    """Σ_i x^i (x_i - λ_{v,i})."""
    f = len(v)
    lam = lambda_tuple(v, family)
    total = RestrictedPoly.zero(f)
    for i in range(f):
        total = total + xshift(xi(i, f) - lam[i], i)
    return total


@lru_cache(maxsize=None)
def e_lambda(v: BitTuple, family: Family) -> RestrictedPoly:
    """Twist polynomial e(λ_v⃗).

    ½ Σ x^i (x_i - λ_i) when v_{f-1} = 0, else ½ (x^f - 1 + Σ x^i (x_i - λ_i));
    the halving is checked and never fails for table-built tuples.
    """
    v = BitTuple(v)
    total = _half_sum_argument(v, family)
    if v[-1] == 1:
        total = total + (xpow(len(v), len(v)) - 1)
    return halve_checked(total)


@lru_cache(maxsize=None)
def e_lambda_via_s(v: BitTuple, family: Family) -> RestrictedPoly:
    """Redundant route to e(λ_v⃗): ½ S(Σ x^i (x_i - λ_i)) with S the x^f ↦ 1 fold."""
    v = BitTuple(v)
    return halve_checked(s_reduce(_half_sum_argument(v, family)))


@dataclass(frozen=True)
class GL2Weight:
    """Canonical irreducible GL2(k)-representation: digits r⃗ and twist a mod q-1."""

    p: int
    f: int
    r: tuple[int, ...]
    a: int

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(d) for d in self.r))
        if len(self.r) != self.f:
            raise ValueError(f"expected {self.f} digits, got {len(self.r)}")
        for d in self.r:
            if not 0 <= d <= self.p - 1:
                raise DigitRangeError(f"digit {d} outside [0, {self.p - 1}]")
        q = self.p**self.f
        if not 0 <= self.a < q - 1:
            raise ValueError(f"twist exponent {self.a} not reduced mod {q - 1}")

    @property
    def key(self) -> tuple:
        return (self.r, self.a)


def normalize_weight(t: Sequence[int], s: Sequence[int], p: int, f: int) -> GL2Weight:
    """Convert twist-digit form (t⃗, s⃗) to the canonical (r⃗, a) form.

    The digits s_j must already lie in [0, p-1]; the t_j may be any integers
    and collapse to a = Σ p^j t_j mod q-1.
    """
    if len(t) != f or len(s) != f:
        raise ValueError(f"expected {f} digits in t and s")
    q = p**f
    a = sum(int(tj) * p**j for j, tj in enumerate(t)) % (q - 1)
    return GL2Weight(p, f, tuple(s), a)


@dataclass(frozen=True)
class RhoBar:
    """Generic two-dimensional mod-p Galois parameter.

    ``twist`` is the exponent of the overall character twist relative to the
    normalization in which all closed-form weight formulas are stated; it
    shifts every GL2 weight's a by ``twist`` mod q-1 and every quaternionic
    exponent by (q+1)·twist mod q²-1.
    """

    p: int
    f: int
    kind: Kind
    r: tuple[int, ...]
    v_rho: BitTuple | None = None
    twist: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.f < 1:
            raise ValueError("f must be >= 1")
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "r", tuple(int(d) for d in self.r))
        if len(self.r) != self.f:
            raise ValueError(f"expected {self.f} digits, got {len(self.r)}")
        object.__setattr__(self, "twist", self.twist % (self.q - 1))
        self._check_genericity()
        if self.kind is Kind.REDUCIBLE_NONSPLIT:
            if self.v_rho is None:
                raise ValueError("v_rho required for the reducible-nonsplit kind")
            object.__setattr__(self, "v_rho", BitTuple(self.v_rho))
            if len(self.v_rho) != self.f:
                raise ValueError("v_rho length must equal f")
            if all(b == 1 for b in self.v_rho):
                # all strata retained would mean the extension splits
                raise ValueError("v_rho = all-ones contradicts nonsplitness")
        elif self.v_rho is not None:
            raise ValueError(f"v_rho only applies to the nonsplit kind, not {self.kind.value}")

    def _check_genericity(self):
        p, r = self.p, self.r
        if self.kind.is_reducible:
            for d in r:
                if not 0 <= d <= p - 3:
                    raise NonGenericError(f"digit {d} outside [0, {p - 3}]")
            if all(d == 0 for d in r):
                raise NonGenericError("all digits 0 is non-generic")
            if all(d == p - 3 for d in r):
                raise NonGenericError(f"all digits {p - 3} is non-generic")
        else:
            if not 1 <= r[0] <= p - 2:
                raise NonGenericError(f"leading digit {r[0]} outside [1, {p - 2}]")
            for d in r[1:]:
                if not 0 <= d <= p - 3:
                    raise NonGenericError(f"digit {d} outside [0, {p - 3}]")

    @property
    def q(self) -> int:
        return self.p**self.f

    def semisimplification(self) -> "RhoBar":
        if self.kind is Kind.REDUCIBLE_NONSPLIT:
            return RhoBar(self.p, self.f, Kind.REDUCIBLE_SPLIT, self.r, twist=self.twist)
        return self


def sigma_v(rho: RhoBar, v: BitTuple) -> GL2Weight:
    """The GL2 weight indexed by v⃗: λ_v⃗ evaluated at (r⃗, p), twisted by e(λ_v⃗)."""
    v = BitTuple(v)
    if len(v) != rho.f:
        raise ValueError("v length must equal f")
    if rho.kind is Kind.REDUCIBLE_NONSPLIT and not leq(v, rho.v_rho):
        raise StratumViolationError(f"{tuple(v)} is not below v_rho = {tuple(rho.v_rho)}")
    family = rho.kind.family
    lam = lambda_tuple(v, family)
    digits = tuple(evaluate(entry, rho.r, rho.p) for entry in lam)
    for d in digits:
        if not 0 <= d <= rho.p - 1:
            raise DigitRangeError(f"weight digit {d} outside [0, {rho.p - 1}]")
    a = (evaluate(e_lambda(v, family), rho.r, rho.p) + rho.twist) % (rho.q - 1)
    return GL2Weight(rho.p, rho.f, digits, a)


def w_gl2(rho: RhoBar) -> Mapping[BitTuple, GL2Weight]:
    """The full GL2 weight set of a generic parameter, keyed by v⃗.

    Split and irreducible kinds run over all 2^f tuples; the nonsplit kind
    keeps exactly the tuples below its v_rho bound.
    """
    if rho.kind is Kind.REDUCIBLE_NONSPLIT:
        domain = tuples_below(rho.v_rho)
    else:
        domain = all_bit_tuples(rho.f)
    return {v: sigma_v(rho, v) for v in domain}
