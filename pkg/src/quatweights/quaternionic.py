"""Quaternionic weight sets via the (w⃗, d⃗) parameterization.

Matching an irreducible constituent of a reduced cuspidal type against a
GL2 weight indexed by v⃗ pins the character down uniquely: for each pair of
bit tuples (u⃗, v⃗) there is one candidate character ψ_{u⃗,v⃗}, with symbolic
digit polynomials

    c_{u,v,i} = x - 2 + u0_{i-1} - λ_{v,i}   if u_i = 1,
                u0_{i-1} + λ_{v,i}           if u_i = 0,

twist polynomials t_{u,v,i} (= c_{u,v,i} + 1 - u_{i-1} when u_i = 1, else 0),
and the twist-balancing polynomial

    b_{u,v} = ½ S(Σ x^i (x_i - λ_{v,i}))
              - S(u_0·u_{f-1} + (1-u_0)(1-u_{f-1}) + Σ x^i t_{u,v,i}),

where S substitutes x^f ↦ 1. The full exponent polynomial

    Ψ_{u,v} = 1 + Σ x^i c_{u,v,i} + (1 + x^f) · b_{u,v}

evaluated at (r_0, ..., r_{f-1}, p) gives the character exponent mod q²-1.

Two structure results make the weight set explicit, and both are asserted
at runtime whenever Ψ is analyzed:

- the slot part of Ψ_{u,v} is exactly Σ x^{i + w_i f} · x_i with
  w_i ≡ u_i + v_i (mod 2);
- the slot-free part is Σ_{i<f} d_i (x^i - x^{i+f}) with d_i ∈ {-1, 0, 1}
  read off a fixed table in the local window (u_{i-1}, u_i, v_{i-1}, v_i).

Hence every weight is ψ_{w⃗,d⃗} with exponent Σ q^{w_i} p^i r_i
+ (1-q) Σ d_i p^i, subject to family-dependent relations between w⃗ and d⃗
(``wd_relations``), and ``enumerate_wd`` walks the sign tuples d⃗ and solves
for w⃗ directly. For reducible parameters the set is additionally stratified
by v⃗ (``stratum``), and a nonsplit parameter keeps exactly the strata below
its v_rho bound.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .cuspidal import CharQuad, p_theta
from .errors import (
    ConsistencyError,
    DigitRangeError,
    InadmissibleTupleError,
    RelationViolationError,
    ShapeViolationError,
    StratumViolationError,
)
from .gl2 import Family, Kind, RhoBar, e_lambda_via_s, lambda_tuple
from .polys import (
    RestrictedPoly,
    coeff_c,
    evaluate,
    s_reduce,
    xpow,
    xshift,
)
from .tuples import (
    BitTuple,
    SignTuple,
    all_bit_tuples,
    all_sign_tuples,
    leq,
    tuples_below,
    u0_transform,
)

# d_i tables, keyed ((v_{i-1}, v_i), (u_{i-1}, u_i)). Entries are treated as
# claims: every use is checked against the symbolic slot-free part of Ψ.
_D_INNER = {
    ((0, 0), (0, 0)): 0, ((0, 0), (0, 1)): -1, ((0, 0), (1, 0)): 1, ((0, 0), (1, 1)): 0,
    ((0, 1), (0, 0)): -1, ((0, 1), (0, 1)): 0, ((0, 1), (1, 0)): 0, ((0, 1), (1, 1)): 1,
    ((1, 0), (0, 0)): 1, ((1, 0), (0, 1)): -1, ((1, 0), (1, 0)): 1, ((1, 0), (1, 1)): -1,
    ((1, 1), (0, 0)): -1, ((1, 1), (0, 1)): 1, ((1, 1), (1, 0)): -1, ((1, 1), (1, 1)): 1,
}

_D_WRAP_REDUCIBLE = {
    ((0, 0), (0, 0)): 1, ((0, 0), (0, 1)): 0, ((0, 0), (1, 0)): 0, ((0, 0), (1, 1)): -1,
    ((0, 1), (0, 0)): 0, ((0, 1), (0, 1)): 1, ((0, 1), (1, 0)): -1, ((0, 1), (1, 1)): 0,
    ((1, 0), (0, 0)): 1, ((1, 0), (0, 1)): -1, ((1, 0), (1, 0)): 1, ((1, 0), (1, 1)): -1,
    ((1, 1), (0, 0)): -1, ((1, 1), (0, 1)): 1, ((1, 1), (1, 0)): -1, ((1, 1), (1, 1)): 1,
}

_D_WRAP_IRREDUCIBLE = {
    ((0, 0), (0, 0)): 1, ((0, 0), (0, 1)): 0, ((0, 0), (1, 0)): 0, ((0, 0), (1, 1)): -1,
    ((0, 1), (0, 0)): 0, ((0, 1), (0, 1)): 1, ((0, 1), (1, 0)): -1, ((0, 1), (1, 1)): 0,
    ((1, 0), (0, 0)): 0, ((1, 0), (0, 1)): 0, ((1, 0), (1, 0)): 0, ((1, 0), (1, 1)): 0,
    ((1, 1), (0, 0)): 0, ((1, 1), (0, 1)): 0, ((1, 1), (1, 0)): 0, ((1, 1), (1, 1)): 0,
}


def _table_d(u: BitTuple, v: BitTuple, family: Family, i: int) -> int:
    key = ((v[i - 1], v[i]), (u[i - 1], u[i]))
    if i > 0:
        return _D_INNER[key]
    if family is Family.REDUCIBLE:
        return _D_WRAP_REDUCIBLE[key]
    return _D_WRAP_IRREDUCIBLE[key]


@lru_cache(maxsize=None)
def c_uv(u: BitTuple, v: BitTuple, family: Family) -> tuple[RestrictedPoly, ...]:
    """Symbolic digit polynomials c_{u,v,i}."""
    u, v = BitTuple(u), BitTuple(v)
    f = len(u)
    lam = lambda_tuple(v, family)
    u0 = u0_transform(u)
    x = xpow(1, f)
    out = []
    for i in range(f):
        if u[i] == 1:
            out.append(x - 2 + u0[i - 1] - lam[i])
        else:
            out.append(lam[i] + u0[i - 1])
    return tuple(out)


@lru_cache(maxsize=None)
def t_uv(u: BitTuple, v: BitTuple, family: Family) -> tuple[RestrictedPoly, ...]:
    """Symbolic twist-digit polynomials t_{u,v,i}; zero wherever u_i = 0."""
    u, v = BitTuple(u), BitTuple(v)
    f = len(u)
    cs = c_uv(u, v, family)
    zero = RestrictedPoly.zero(f)
    return tuple(
        cs[i] + (1 - u[i - 1]) if u[i] == 1 else zero for i in range(f)
    )


@lru_cache(maxsize=None)
def b_uv(u: BitTuple, v: BitTuple, family: Family) -> RestrictedPoly:
    """Twist-balancing polynomial b_{u,v}, x-degree below f."""
    u, v = BitTuple(u), BitTuple(v)
    f = len(u)
    wrap = u[0] * u[-1] + (1 - u[0]) * (1 - u[-1])
    acc = RestrictedPoly.zero(f) + wrap
    for i, ti in enumerate(t_uv(u, v, family)):
        acc = acc + xshift(ti, i)
    return e_lambda_via_s(v, family) - s_reduce(acc)


@lru_cache(maxsize=None)
def psi_exponent_symbolic(u: BitTuple, v: BitTuple, family: Family) -> RestrictedPoly:
    """The exponent polynomial Ψ_{u,v} = 1 + Σ x^i c_{u,v,i} + (1 + x^f)·b_{u,v}.

    Left unreduced: x-degrees run up to 2f-1, which is what the (w⃗, d⃗)
    extraction reads off.
    """
    u, v = BitTuple(u), BitTuple(v)
    f = len(u)
    acc = RestrictedPoly.zero(f) + 1
    for i, ci in enumerate(c_uv(u, v, family)):
        acc = acc + xshift(ci, i)
    b = b_uv(u, v, family)
    return acc + b + xshift(b, f)


@lru_cache(maxsize=None)
def _uv_analysis(u: BitTuple, v: BitTuple, family: Family) -> tuple[BitTuple, SignTuple]:
    """Extract (w⃗, d⃗) from Ψ_{u,v}, verifying both proved shapes and the d table."""
    u, v = BitTuple(u), BitTuple(v)
    f = len(u)
    sym = psi_exponent_symbolic(u, v, family)

    w = BitTuple((u[i] + v[i]) % 2 for i in range(f))
    for i in range(f):
        expected = (0,) * (i + w[i] * f) + (1,)
        if sym.linear[i] != expected:
            raise ShapeViolationError(
                f"slot {i} of Psi has coefficient {sym.linear[i]}, expected x^{i + w[i] * f}"
            )

    if len(sym.constant) > 2 * f:
        raise ShapeViolationError(f"slot-free part of Psi has degree >= 2f: {sym.constant}")
    d = []
    for i in range(f):
        di = coeff_c(sym, i)
        if coeff_c(sym, i + f) != -di:
            raise ShapeViolationError(
                f"coefficients at x^{i} and x^{i + f} do not cancel: "
                f"{di}, {coeff_c(sym, i + f)}"
            )
        if di not in (-1, 0, 1):
            raise ShapeViolationError(f"coefficient {di} at x^{i} outside {{-1, 0, 1}}")
        if di != _table_d(u, v, family, i):
            raise ShapeViolationError(
                f"table value {_table_d(u, v, family, i)} at index {i} "
                f"disagrees with symbolic value {di}"
            )
        d.append(di)
    return w, SignTuple(d)


def w_of(u: BitTuple, v: BitTuple, family: Family) -> BitTuple:
    """w_i = (u_i + v_i) mod 2, checked against the slot part of Ψ_{u,v}."""
    return _uv_analysis(BitTuple(u), BitTuple(v), family)[0]


def d_of(u: BitTuple, v: BitTuple, family: Family) -> SignTuple:
    """The sign tuple of Ψ_{u,v}, read from the d table and checked symbolically."""
    return _uv_analysis(BitTuple(u), BitTuple(v), family)[1]


def wd_relations(w: BitTuple, d: SignTuple, family: Family) -> bool:
    """Whether (w⃗, d⃗) satisfies the admissibility relations of the family.

    Everywhere: d_i = -1 forces w_i = 1 and d_i = 1 forces w_i = 0. A zero
    d_i at i > 0 forces w_i = w_{i-1}. At the wrap, the reducible family
    forces w_0 ≠ w_{f-1} when d_0 = 0, while the irreducible family forces
    w_{f-1} = w_0 whenever d_0 ≠ 0 (and is silent when d_0 = 0).
    """
    w, d = BitTuple(w), SignTuple(d)
    f = len(w)
    if len(d) != f:
        raise ValueError("w and d lengths differ")
    for i in range(f):
        if d[i] == -1 and w[i] != 1:
            return False
        if d[i] == 1 and w[i] != 0:
            return False
    for i in range(1, f):
        if d[i] == 0 and w[i] != w[i - 1]:
            return False
    if family is Family.REDUCIBLE:
        if d[0] == 0 and w[0] == w[-1]:
            return False
    else:
        if d[0] != 0 and w[0] != w[-1]:
            return False
    return True


def solve_w(d: SignTuple, family: Family) -> tuple[BitTuple, ...]:
    """All w⃗ compatible with d⃗, by direct propagation.

    Nonzero entries force their own bit; zero entries copy their predecessor
    (flipping across the wrap in the reducible family). The reducible family
    yields exactly one solution for d⃗ ≠ 0 and none for d⃗ = 0; the
    irreducible family yields 0, 1 or 2.
    """
    d = SignTuple(d)
    f = len(d)
    if family is Family.REDUCIBLE:
        if all(s == 0 for s in d):
            return ()
        start = next(i for i in range(f) if d[i] != 0)
        w = [0] * f
        w[start] = 1 if d[start] == -1 else 0
        for k in range(1, f):
            i = (start + k) % f
            if d[i] != 0:
                w[i] = 1 if d[i] == -1 else 0
            elif i == 0:
                w[0] = 1 - w[-1]
            else:
                w[i] = w[i - 1]
        return (BitTuple(w),)

    seeds = (0, 1) if d[0] == 0 else ((1,) if d[0] == -1 else (0,))
    solutions = []
    for w0 in seeds:
        w = [w0] * f
        for i in range(1, f):
            w[i] = (1 if d[i] == -1 else 0) if d[i] != 0 else w[i - 1]
        if d[0] != 0 and w[-1] != w[0]:
            continue
        solutions.append(BitTuple(w))
    return tuple(solutions)


def psi_uv(rho: RhoBar, u: BitTuple, v: BitTuple) -> CharQuad:
    """The character matched by the pair (u⃗, v⃗), validated end to end."""
    u, v = BitTuple(u), BitTuple(v)
    if len(u) != rho.f or len(v) != rho.f:
        raise ValueError("u and v lengths must equal f")
    if rho.kind is Kind.REDUCIBLE_NONSPLIT and not leq(v, rho.v_rho):
        raise StratumViolationError(f"{tuple(v)} is not below v_rho = {tuple(rho.v_rho)}")
    family = rho.kind.family
    digits = tuple(evaluate(ci, rho.r, rho.p) for ci in c_uv(u, v, family))
    for dgt in digits:
        if not 0 <= dgt <= rho.p - 1:
            raise DigitRangeError(f"character digit {dgt} outside [0, {rho.p - 1}]")
    q = rho.q
    sym = psi_exponent_symbolic(u, v, family)
    e = (evaluate(sym, rho.r, rho.p) + (q + 1) * rho.twist) % (q * q - 1)
    psi = CharQuad.from_exponent(rho.p, rho.f, e)
    if psi.c_digits != digits:
        raise DigitRangeError(
            f"digits of decomposed exponent {psi.c_digits} differ from {digits}"
        )
    if u not in p_theta(psi):
        raise InadmissibleTupleError(f"{tuple(u)} is not admissible for its own character")
    return psi


def psi_from_wd(rho: RhoBar, w: BitTuple, d: SignTuple) -> CharQuad:
    """The character of exponent Σ q^{w_i} p^i r_i + (1-q) Σ d_i p^i (+ twist)."""
    w, d = BitTuple(w), SignTuple(d)
    if len(w) != rho.f or len(d) != rho.f:
        raise ValueError("w and d lengths must equal f")
    if not wd_relations(w, d, rho.kind.family):
        raise RelationViolationError(f"(w, d) = ({tuple(w)}, {tuple(d)}) violates the relations")
    p, q = rho.p, rho.q
    e = sum(q ** w[i] * p**i * rho.r[i] for i in range(rho.f))
    e += (1 - q) * sum(d[i] * p**i for i in range(rho.f))
    e += (q + 1) * rho.twist
    return CharQuad.from_exponent(p, rho.f, e % (q * q - 1))


def u_set(v: BitTuple) -> tuple[BitTuple, ...]:
    """The u⃗ whose pair (u⃗, v⃗) lands in the stratum of v⃗ (may be empty).

    Each 1-bit v_{i-1} constrains the parity of u_{i-1} - u_i; the wrap
    constraint at i = 0 carries an extra flip. All 1s admits no solution;
    otherwise there are 2^(f - #1-bits).
    """
    v = BitTuple(v)
    f = len(v)
    out = []
    for u in all_bit_tuples(f):
        for i in range(f):
            if v[i - 1] == 1:
                extra = 1 if i == 0 else 0
                if (u[i - 1] - u[i]) % 2 != (v[i - 1] - v[i] + extra) % 2:
                    break
        else:
            out.append(u)
    return tuple(out)


@dataclass(frozen=True)
class WeightCertificate:
    """One quaternionic weight with full provenance.

    ``witnesses`` collects every (u⃗, v⃗) pair producing this character;
    ``stratum_v`` is the unique v⃗ whose stratum contains it (None for
    irreducible parameters, which have no stratification).
    """

    psi: CharQuad
    w: BitTuple
    d: SignTuple
    stratum_v: BitTuple | None
    witnesses: frozenset

    @property
    def exponent(self) -> int:
        return self.psi.e


def _witness_map(rho: RhoBar, vs) -> dict[int, frozenset]:
    """Group all pairs (u⃗, v⃗), v⃗ in vs, by the exponent of their character."""
    groups = defaultdict(set)
    for v in vs:
        for u in all_bit_tuples(rho.f):
            groups[psi_uv(rho, u, v).e].add((u, v))
    return {e: frozenset(pairs) for e, pairs in groups.items()}


def _stratum_of(witnesses) -> BitTuple:
    hits = sorted({v for (u, v) in witnesses if u in u_set(v)})
    if len(hits) != 1:
        raise ConsistencyError(f"expected exactly one stratum witness, got {hits}")
    return BitTuple(hits[0])


def _certificates(rho: RhoBar, witness_map, reducible_strata: bool):
    family = rho.kind.family
    certs = []
    for d in all_sign_tuples(rho.f):
        for w in solve_w(d, family):
            psi = psi_from_wd(rho, w, d)
            witnesses = witness_map.get(psi.e)
            if not witnesses:
                raise ConsistencyError(f"no (u, v) witness for exponent {psi.e}")
            stratum_v = _stratum_of(witnesses) if reducible_strata else None
            certs.append(WeightCertificate(psi, w, d, stratum_v, witnesses))
    if len({c.exponent for c in certs}) != len(certs):
        raise ConsistencyError("distinct (w, d) pairs produced equal characters")
    if {c.exponent for c in certs} != set(witness_map):
        raise ConsistencyError("(w, d) enumeration and (u, v) enumeration disagree")
    return tuple(sorted(certs, key=lambda c: c.exponent))


def stratum(rho_ss: RhoBar, v: BitTuple) -> tuple[CharQuad, ...]:
    """The stratum of v⃗: characters matched through u⃗ in ``u_set(v)`` only."""
    if rho_ss.kind is not Kind.REDUCIBLE_SPLIT:
        raise ValueError("strata are computed on the reducible-split parameter")
    v = BitTuple(v)
    psis = {psi_uv(rho_ss, u, v) for u in u_set(v)}
    return tuple(sorted(psis, key=lambda psi: psi.e))


def w_d_v(rho_ss: RhoBar, v: BitTuple) -> tuple[CharQuad, ...]:
    """Characters matched through any u⃗ at the fixed v⃗ (the unstratified set)."""
    if rho_ss.kind is not Kind.REDUCIBLE_SPLIT:
        raise ValueError("strata are computed on the reducible-split parameter")
    v = BitTuple(v)
    psis = {psi_uv(rho_ss, u, v) for u in all_bit_tuples(rho_ss.f)}
    return tuple(sorted(psis, key=lambda psi: psi.e))


def enumerate_wd(rho: RhoBar) -> tuple[WeightCertificate, ...]:
    """The full quaternionic weight set of rho, sorted by exponent.

    Split: one weight per nonzero sign tuple d⃗. Irreducible: 0, 1 or 2 per
    sign tuple. Nonsplit: the strata of the semisimplification below v_rho,
    cross-checked against the direct union over v⃗ <= v_rho.
    """
    if rho.kind is Kind.REDUCIBLE_NONSPLIT:
        return _enumerate_nonsplit(rho)
    witness_map = _witness_map(rho, all_bit_tuples(rho.f))
    return _certificates(rho, witness_map, reducible_strata=rho.kind.is_reducible)


def _enumerate_nonsplit(rho: RhoBar) -> tuple[WeightCertificate, ...]:
    ss = rho.semisimplification()
    kept = tuples_below(rho.v_rho)
    witness_map = _witness_map(ss, kept)

    certs = []
    seen = set()
    for v in kept:
        for u in u_set(v):
            psi = psi_uv(ss, u, v)
            if psi.e in seen:
                raise ConsistencyError(f"strata overlap at exponent {psi.e}")
            seen.add(psi.e)
            w, d = _uv_analysis(u, v, Family.REDUCIBLE)
            certs.append(WeightCertificate(psi, w, d, v, witness_map[psi.e]))
    # strata route must reproduce the direct union over v <= v_rho
    if seen != set(witness_map):
        raise ConsistencyError("stratified union differs from the direct union")
    return tuple(sorted(certs, key=lambda c: c.exponent))


def validate_certificate(rho: RhoBar, cert: WeightCertificate) -> tuple[str, ...]:
    """Re-derive every claim a certificate makes; returns human-readable problems."""
    problems = []
    family = rho.kind.family
    try:
        expected = psi_from_wd(rho, cert.w, cert.d)
        if expected != cert.psi:
            problems.append(f"exponent {cert.psi.e} != (w, d) formula value {expected.e}")
    except RelationViolationError:
        problems.append(f"(w, d) = ({tuple(cert.w)}, {tuple(cert.d)}) violates the relations")
    if not cert.witnesses:
        problems.append(f"exponent {cert.psi.e} has no (u, v) witness")
    for u, v in sorted(cert.witnesses):
        if BitTuple((u[i] + v[i]) % 2 for i in range(rho.f)) != cert.w:
            problems.append(f"witness {tuple(u)}, {tuple(v)} breaks the w parity")
        if d_of(u, v, family) != cert.d:
            problems.append(f"witness {tuple(u)}, {tuple(v)} has a different sign tuple")
        if psi_uv(rho, u, v) != cert.psi:
            problems.append(f"witness {tuple(u)}, {tuple(v)} does not produce exponent {cert.psi.e}")
        if u not in p_theta(cert.psi):
            problems.append(f"witness {tuple(u)} is inadmissible for exponent {cert.psi.e}")
    if rho.kind.is_reducible:
        if cert.stratum_v is None:
            problems.append("reducible certificate lacks a stratum index")
        else:
            in_stratum = {v for (u, v) in cert.witnesses if u in u_set(v)}
            if in_stratum != {cert.stratum_v}:
                problems.append(
                    f"stratum index {tuple(cert.stratum_v)} not the unique stratum witness"
                )
            if rho.kind is Kind.REDUCIBLE_NONSPLIT and not leq(cert.stratum_v, rho.v_rho):
                problems.append(f"stratum index {tuple(cert.stratum_v)} above v_rho")
    elif cert.stratum_v is not None:
        problems.append("irreducible certificate carries a stratum index")
    return tuple(problems)
