#!/usr/bin/env python3
"""How the semisimple weight set splits into strata, and what a nonsplit
parameter keeps.

For a reducible split parameter the 3^f - 1 weights partition into strata
indexed by bit tuples v: the stratum of v has 2^(f - ones(v)) weights, the
all-ones stratum is empty, and a stratum is recovered from the unstratified
per-v sets by removing everything attached to a strictly smaller v. A
nonsplit parameter with bound v_rho keeps exactly the strata below v_rho,
for 3^d 2^(f-d) weights in total, d the number of ones in v_rho.
"""

from quatweights import (
    BitTuple,
    Kind,
    RhoBar,
    all_bit_tuples,
    ell,
    enumerate_wd,
    leq,
    stratum,
    w_d_v,
)

rho = RhoBar(p=5, f=2, kind=Kind.REDUCIBLE_SPLIT, r=(1, 2))
weights = enumerate_wd(rho)
print(f"split parameter p={rho.p}, f={rho.f}, r={rho.r}: {len(weights)} weights (3^2 - 1)")

print("\nstrata (disjoint, union = whole set):")
for v in all_bit_tuples(2):
    exponents = [psi.e for psi in stratum(rho, v)]
    print(f"  v={tuple(v)} (ones={ell(v)}): {exponents}")

print("\nunstratified per-v sets (always 2^f elements, overlapping):")
for v in all_bit_tuples(2):
    print(f"  v={tuple(v)}: {[psi.e for psi in w_d_v(rho, v)]}")

print("\ncomplement formula: stratum(v) = per-v set minus everything below:")
for v in all_bit_tuples(2):
    below = set()
    for v2 in all_bit_tuples(2):
        if leq(v2, v) and v2 != v:
            below |= {psi.e for psi in w_d_v(rho, v2)}
    derived = sorted({psi.e for psi in w_d_v(rho, v)} - below)
    print(f"  v={tuple(v)}: {derived}")

v_rho = BitTuple((0, 1))
nonsplit = RhoBar(p=5, f=2, kind=Kind.REDUCIBLE_NONSPLIT, r=(1, 2), v_rho=v_rho)
kept = enumerate_wd(nonsplit)
print(f"\nnonsplit with v_rho={tuple(v_rho)} keeps strata (0,0) and (0,1): "
      f"{len(kept)} weights (3^1 * 2^1)")
for cert in kept:
    print(f"  exponent {cert.exponent}: stratum v={tuple(cert.stratum_v)}")
