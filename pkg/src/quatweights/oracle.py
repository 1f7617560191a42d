"""Brute-force computation of the weight set, and the cross-check harness.

The defining criterion is intersection-based: a type-I character belongs to
the weight set of a generic parameter iff the irreducible constituents of
its reduced cuspidal type meet the parameter's GL2 weight set. The oracle
enumerates all q(q-1) type-I characters of a given (p, f) and applies that
criterion literally — none of the (w⃗, d⃗) machinery is involved, so
agreement with ``enumerate_wd`` is a genuine two-route check.

For speed the enumeration is materialized once per (p, f) as an inverted
index mapping each GL2 weight to the exponents of the characters whose
reduced type contains it; a weight-set lookup is then a union of index
rows. The index is an exact reformulation (the same constituents are
computed for the same characters), and the test suite pins it against a
direct per-character scan. Index construction can be partitioned across
worker processes; partial results merge by sorting, so the outcome is
identical for every worker count.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from itertools import product

from .cuspidal import CharQuad, jh_set
from .errors import MismatchError, NonGenericError
from .gl2 import Kind, RhoBar, w_gl2
from .quaternionic import WeightCertificate, enumerate_wd, validate_certificate
from .tuples import BitTuple, all_bit_tuples, ell

_KIND_ORDER = (Kind.REDUCIBLE_SPLIT, Kind.REDUCIBLE_NONSPLIT, Kind.IRREDUCIBLE)

_INDEX_CACHE: dict[tuple[int, int], dict[tuple, tuple[int, ...]]] = {}


def enumerate_type_one(p: int, f: int) -> tuple[CharQuad, ...]:
    """All q(q-1) type-I characters, lexicographically ordered by (b, c)."""
    q = p**f
    return tuple(CharQuad.from_bc(p, f, b, c) for b in range(q - 1) for c in range(q))


def _index_pairs(args: tuple[int, int, int, int]) -> list[tuple[tuple, int]]:
    """(weight key, exponent) pairs for the characters with b in [b_lo, b_hi)."""
    p, f, b_lo, b_hi = args
    q = p**f
    pairs = []
    for b in range(b_lo, b_hi):
        for c in range(q):
            psi = CharQuad.from_bc(p, f, b, c)
            for wt in jh_set(psi):
                pairs.append((wt.key, psi.e))
    return pairs


def build_jh_index(p: int, f: int, jobs: int = 1) -> dict[tuple, tuple[int, ...]]:
    """Map each GL2 weight key (r⃗, a) to the sorted exponents containing it."""
    cache_key = (p, f)
    cached = _INDEX_CACHE.get(cache_key)
    if cached is not None:
        return cached
    q = p**f
    if jobs > 1 and q - 1 >= jobs:
        bounds = [((q - 1) * k // jobs, (q - 1) * (k + 1) // jobs) for k in range(jobs)]
        with multiprocessing.Pool(jobs) as pool:
            chunks = pool.map(_index_pairs, [(p, f, lo, hi) for lo, hi in bounds])
        pairs = [pair for chunk in chunks for pair in chunk]
    else:
        pairs = _index_pairs((p, f, 0, q - 1))
    grouped: dict[tuple, list[int]] = {}
    for key, e in pairs:
        grouped.setdefault(key, []).append(e)
    index = {key: tuple(sorted(es)) for key, es in grouped.items()}
    _INDEX_CACHE[cache_key] = index
    return index


def w_d_oracle(rho: RhoBar, jobs: int = 1) -> tuple[CharQuad, ...]:
    """Brute-force weight set: characters whose reduced type meets w_gl2(rho)."""
    index = build_jh_index(rho.p, rho.f, jobs)
    exponents: set[int] = set()
    for wt in w_gl2(rho).values():
        exponents.update(index.get(wt.key, ()))
    return tuple(CharQuad.from_exponent(rho.p, rho.f, e) for e in sorted(exponents))


def expected_count(rho: RhoBar) -> int | None:
    """Closed-form cardinality where one is stated: split 3^f - 1, nonsplit 3^d 2^(f-d)."""
    if rho.kind is Kind.REDUCIBLE_SPLIT:
        return 3**rho.f - 1
    if rho.kind is Kind.REDUCIBLE_NONSPLIT:
        d = ell(rho.v_rho)
        return 3**d * 2 ** (rho.f - d)
    return None


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one closed-form vs brute-force comparison."""

    p: int
    f: int
    kind: Kind
    r: tuple[int, ...]
    v_rho: BitTuple | None
    twist: int
    theorem_exponents: tuple[int, ...]
    oracle_exponents: tuple[int, ...]
    only_theorem: tuple[int, ...]
    only_oracle: tuple[int, ...]
    expected_count: int | None
    certificate_problems: tuple[str, ...]
    certificates: tuple[WeightCertificate, ...] = field(repr=False)

    @property
    def match(self) -> bool:
        return not self.only_theorem and not self.only_oracle

    @property
    def count_ok(self) -> bool:
        return self.expected_count is None or len(self.theorem_exponents) == self.expected_count

    @property
    def ok(self) -> bool:
        return self.match and self.count_ok and not self.certificate_problems

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "kind": self.kind.value,
            "r": list(self.r),
            "v_rho": list(self.v_rho) if self.v_rho is not None else None,
            "twist": self.twist,
            "match": self.match,
            "count": len(self.theorem_exponents),
            "expected_count": self.expected_count,
            "count_ok": self.count_ok,
            "theorem_exponents": list(self.theorem_exponents),
            "oracle_exponents": list(self.oracle_exponents),
            "only_theorem": list(self.only_theorem),
            "only_oracle": list(self.only_oracle),
            "certificate_problems": list(self.certificate_problems),
        }


def cross_check(rho: RhoBar, jobs: int = 1) -> CheckReport:
    """Compare the two routes weight by weight; raise MismatchError unless clean.

    Beyond set equality this validates every certificate's witnesses and the
    closed-form cardinality where one applies.
    """
    certificates = enumerate_wd(rho)
    theorem = tuple(c.exponent for c in certificates)
    oracle = tuple(psi.e for psi in w_d_oracle(rho, jobs))
    problems = []
    for cert in certificates:
        for issue in validate_certificate(rho, cert):
            problems.append(f"exponent {cert.exponent}: {issue}")
    report = CheckReport(
        p=rho.p,
        f=rho.f,
        kind=rho.kind,
        r=rho.r,
        v_rho=rho.v_rho,
        twist=rho.twist,
        theorem_exponents=theorem,
        oracle_exponents=oracle,
        only_theorem=tuple(sorted(set(theorem) - set(oracle))),
        only_oracle=tuple(sorted(set(oracle) - set(theorem))),
        expected_count=expected_count(rho),
        certificate_problems=tuple(problems),
        certificates=certificates,
    )
    if not report.ok:
        raise MismatchError(report)
    return report


def generic_r_tuples(p: int, f: int, kind: Kind) -> tuple[tuple[int, ...], ...]:
    """All generic digit tuples for (p, f, kind), lexicographically ordered."""
    kind = Kind(kind)
    if kind.is_reducible:
        top = p - 3
        if top < 0:
            return ()
        return tuple(
            r
            for r in product(range(top + 1), repeat=f)
            if any(d != 0 for d in r) and any(d != top for d in r)
        )
    return tuple(
        (r0,) + tail
        for r0 in range(1, p - 1)
        for tail in product(range(p - 2), repeat=f - 1)
    )


def _rho_variants(p: int, f: int, kind: Kind, twists) -> list[RhoBar]:
    rhos = []
    for r in generic_r_tuples(p, f, kind):
        if kind is Kind.REDUCIBLE_NONSPLIT:
            for v_rho in all_bit_tuples(f):
                if all(b == 1 for b in v_rho):
                    continue
                for twist in twists:
                    rhos.append(RhoBar(p, f, kind, r, v_rho=v_rho, twist=twist))
        else:
            for twist in twists:
                rhos.append(RhoBar(p, f, kind, r, twist=twist))
    return rhos


@dataclass(frozen=True)
class SweepEntry:
    p: int
    f: int
    kind: Kind
    checks: int
    passed: bool
    elapsed_seconds: float

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "p": self.p,
            "f": self.f,
            "kind": self.kind.value,
            "checks": self.checks,
            "passed": self.passed,
        }
        if include_timing:
            out["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return out


@dataclass(frozen=True)
class SweepReport:
    entries: tuple[SweepEntry, ...]

    @property
    def total_checks(self) -> int:
        return sum(entry.checks for entry in self.entries)

    @property
    def all_passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def elapsed_seconds(self) -> float:
        return sum(entry.elapsed_seconds for entry in self.entries)

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "configurations": [e.to_dict(include_timing) for e in self.entries],
            "total_checks": self.total_checks,
            "all_passed": self.all_passed,
        }
        if include_timing:
            out["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return out


def sweep(p_list, f_list, kinds=None, twists=(0, 1), jobs: int = 1) -> SweepReport:
    """Cross-check every generic parameter in the requested ranges.

    Runs over all generic digit tuples, every admissible v_rho for the
    nonsplit kind, and every twist in ``twists``. Each requested (p, f, kind)
    must admit at least one generic parameter. The first mismatch aborts the
    sweep with full configuration context; a returned report is all-pass.
    """
    kinds = _KIND_ORDER if kinds is None else tuple(Kind(k) for k in kinds)
    entries = []
    for p in sorted(set(p_list)):
        for f in sorted(set(f_list)):
            for kind in (k for k in _KIND_ORDER if k in kinds):
                rhos = _rho_variants(p, f, kind, twists)
                if not rhos:
                    raise NonGenericError(
                        f"no generic parameters exist for p={p}, f={f}, kind={kind.value}"
                    )
                started = time.perf_counter()
                for rho in rhos:
                    try:
                        cross_check(rho, jobs=jobs)
                    except MismatchError as exc:
                        context = (
                            f"p={rho.p} f={rho.f} kind={rho.kind.value} r={rho.r} "
                            f"v_rho={tuple(rho.v_rho) if rho.v_rho else None} twist={rho.twist}"
                        )
                        raise MismatchError(exc.report, context=context) from None
                entries.append(
                    SweepEntry(p, f, kind, len(rhos), True, time.perf_counter() - started)
                )
    return SweepReport(tuple(entries))
