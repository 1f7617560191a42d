#!/usr/bin/env python3
"""The exact symbolic layer underneath the closed form.

Everything is computed in the space of expressions a_0(x)·x_0 + ... + c(x)
with integer coefficients: the weight-defining tuples, the twist polynomial
e(λ) (with a redundant second route through the x^f ↦ 1 reduction), and the
exponent polynomial Ψ of each matching pair (u, v). Reading the slot part
of Ψ gives the bit tuple w, reading the slot-free part gives the sign
tuple d, and evaluating at (r, p) gives a character exponent — the closed
form of the weight set, discovered coefficient by coefficient.
"""

from quatweights import (
    BitTuple,
    Family,
    Kind,
    RhoBar,
    all_bit_tuples,
    d_of,
    e_lambda,
    e_lambda_via_s,
    evaluate,
    lambda_tuple,
    psi_exponent_symbolic,
    psi_from_wd,
    psi_uv,
    w_of,
)

f = 2
family = Family.REDUCIBLE

print("weight-defining tuples and their twist polynomials, f = 2, reducible:")
for v in all_bit_tuples(f):
    lam = lambda_tuple(v, family)
    e = e_lambda(v, family)
    assert e == e_lambda_via_s(v, family)  # two routes, one polynomial
    print(f"  v={tuple(v)}: lambda = ({', '.join(str(p) for p in lam)});  e = {e}")

u, v = BitTuple((0, 1)), BitTuple((0, 0))
sym = psi_exponent_symbolic(u, v, family)
print(f"\nexponent polynomial for u={tuple(u)}, v={tuple(v)}:")
print(f"  Psi = {sym}")
print(f"  slot part encodes w = {tuple(w_of(u, v, family))} via x^(i + w_i f)")
print(f"  slot-free part encodes d = {tuple(d_of(u, v, family))} via x^i - x^(i+f)")

rho = RhoBar(p=5, f=2, kind=Kind.REDUCIBLE_SPLIT, r=(1, 2))
psi = psi_uv(rho, u, v)
print(f"\nevaluated at r={rho.r}, p={rho.p}: exponent {evaluate(sym, rho.r, rho.p)}"
      f" = {psi.e} mod {rho.q**2 - 1}")

direct = psi_from_wd(rho, w_of(u, v, family), d_of(u, v, family))
print(f"the (w, d) formula gives the same character: {direct.e}")
print(f"its normal form: b={direct.b}, c={direct.c}, digits {direct.c_digits}")
