#!/usr/bin/env python3
"""A complete tour of the smallest interesting instance: p = 5, f = 1.

The parameter is reducible split with inertia digit r = (1). We print its
GL2 weight set, take one candidate character apart, then compute the
quaternionic weight set twice (closed form and brute force) and let the
cross-check harness compare them.
"""

from quatweights import (
    BitTuple,
    Kind,
    RhoBar,
    bc_decompose,
    cross_check,
    enumerate_type_one,
    enumerate_wd,
    jh_factor,
    p_theta,
    w_d_oracle,
    w_gl2,
)

rho = RhoBar(p=5, f=1, kind=Kind.REDUCIBLE_SPLIT, r=(1,))
print(f"parameter: p={rho.p}, f={rho.f}, kind={rho.kind.value}, r={rho.r}, q={rho.q}")

print("\nGL2 weight set, one weight per bit tuple v:")
for v, weight in w_gl2(rho).items():
    print(f"  v={tuple(v)}  ->  digits {weight.r}, determinant exponent {weight.a}")

# Characters of the quadratic extension are exponents mod q^2 - 1 = 24.
# Take the one with exponent 9 and decompose it.
psi = bc_decompose(9, p=5, f=1)
print(f"\ncharacter exponent {psi.e}: b={psi.b}, c={psi.c}, digits {psi.c_digits}")
print("admissible tuples and the constituents of its reduced cuspidal type:")
for u in p_theta(psi):
    weight = jh_factor(psi, u)
    print(f"  u={tuple(u)}  ->  digits {weight.r}, determinant exponent {weight.a}")
print("both constituents land in the GL2 weight set, so exponent 9 qualifies.")

print(f"\nall {len(enumerate_type_one(5, 1))} type-I characters exist for q=5;")
print("brute force keeps those whose constituents meet the GL2 weight set:")
print(f"  oracle result: {[psi.e for psi in w_d_oracle(rho)]}")

print("\nclosed form: one weight per nonzero sign tuple d, with w solved from d:")
for cert in enumerate_wd(rho):
    print(
        f"  exponent {cert.exponent}: w={tuple(cert.w)}, d={tuple(cert.d)}, "
        f"stratum v={tuple(cert.stratum_v)}, witnesses (u, v)="
        f"{sorted((tuple(u), tuple(v)) for u, v in cert.witnesses)}"
    )

report = cross_check(rho)
print(f"\ncross-check: match={report.match}, count={len(report.theorem_exponents)}"
      f" (closed-form prediction: {report.expected_count})")

# The nonsplit parameter with stratum bound v_rho = (0) keeps the same set
# here, because both weights live in the bottom stratum.
nonsplit = RhoBar(p=5, f=1, kind=Kind.REDUCIBLE_NONSPLIT, r=(1,), v_rho=BitTuple((0,)))
print(f"nonsplit, v_rho=(0): {[c.exponent for c in enumerate_wd(nonsplit)]}")
