import pytest

from quatweights import (
    BitTuple,
    DigitRangeError,
    Family,
    GL2Weight,
    Kind,
    NonGenericError,
    RestrictedPoly,
    RhoBar,
    StratumViolationError,
    all_bit_tuples,
    e_lambda,
    e_lambda_via_s,
    generic_r_tuples,
    lambda_tuple,
    normalize_weight,
    sigma_v,
    w_gl2,
    xi,
    xpow,
)
from oracles import irreducible_tuples_by_constraints, reducible_tuples_by_constraints

FAMILIES = (Family.REDUCIBLE, Family.IRREDUCIBLE)


class TestLambdaTuple:
    def test_identity_tuple(self):
        assert lambda_tuple(BitTuple((0, 0)), Family.REDUCIBLE) == (xi(0, 2), xi(1, 2))

    def test_mixed_reducible_tuple(self):
        x = xpow(1, 2)
        assert lambda_tuple(BitTuple((0, 1)), Family.REDUCIBLE) == (
            xi(0, 2) + 1,
            x - 2 - xi(1, 2),
        )

    def test_irreducible_arity_one(self):
        assert lambda_tuple(BitTuple((1,)), Family.IRREDUCIBLE) == (xpow(1, 1) - 1 - xi(0, 1),)

    @pytest.mark.parametrize("f", range(1, 7))
    @pytest.mark.parametrize("family", FAMILIES)
    def test_matches_constraint_filter(self, f, family):
        # the table must reproduce exactly the constraint-satisfying tuples,
        # one per v, recomputed here by exhaustive filtering
        if family is Family.REDUCIBLE:
            by_constraints = reducible_tuples_by_constraints(f)
        else:
            by_constraints = irreducible_tuples_by_constraints(f)
        assert len(by_constraints) == 2**f
        for v in all_bit_tuples(f):
            assert lambda_tuple(v, family) == by_constraints[tuple(v)]


class TestELambda:
    def test_zero_for_identity(self):
        for f in range(1, 5):
            v = BitTuple((0,) * f)
            assert e_lambda(v, Family.REDUCIBLE) == RestrictedPoly.zero(f)

    def test_reducible_arity_one(self):
        assert e_lambda(BitTuple((1,)), Family.REDUCIBLE) == xi(0, 1) + 1

    def test_irreducible_arity_one(self):
        assert e_lambda(BitTuple((1,)), Family.IRREDUCIBLE) == xi(0, 1)

    @pytest.mark.parametrize("f", range(1, 7))
    @pytest.mark.parametrize("family", FAMILIES)
    def test_agrees_with_reduction_route(self, f, family):
        for v in all_bit_tuples(f):
            assert e_lambda(v, family) == e_lambda_via_s(v, family)


class TestNormalizeWeight:
    def test_two_slot_example(self):
        assert normalize_weight((1, 0), (2, 3), 5, 2) == GL2Weight(5, 2, (2, 3), 1)

    def test_zero_twists(self):
        assert normalize_weight((0, 0), (1, 2), 5, 2) == GL2Weight(5, 2, (1, 2), 0)

    def test_twist_wraps_modulo_q_minus_one(self):
        assert normalize_weight((4,), (1,), 5, 1) == GL2Weight(5, 1, (1,), 0)

    def test_digit_out_of_range(self):
        with pytest.raises(DigitRangeError):
            normalize_weight((0,), (5,), 5, 1)


class TestRhoBar:
    def test_reducible_genericity(self):
        RhoBar(5, 2, Kind.REDUCIBLE_SPLIT, (0, 1))
        with pytest.raises(NonGenericError):
            RhoBar(5, 2, Kind.REDUCIBLE_SPLIT, (0, 0))
        with pytest.raises(NonGenericError):
            RhoBar(5, 2, Kind.REDUCIBLE_SPLIT, (2, 2))
        with pytest.raises(NonGenericError):
            RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (3,))

    def test_no_generic_reducible_parameter_for_p3(self):
        assert generic_r_tuples(3, 1, Kind.REDUCIBLE_SPLIT) == ()
        with pytest.raises(NonGenericError):
            RhoBar(3, 1, Kind.REDUCIBLE_SPLIT, (0,))

    def test_irreducible_genericity(self):
        RhoBar(5, 2, Kind.IRREDUCIBLE, (3, 0))
        with pytest.raises(NonGenericError):
            RhoBar(5, 2, Kind.IRREDUCIBLE, (0, 1))
        with pytest.raises(NonGenericError):
            RhoBar(5, 2, Kind.IRREDUCIBLE, (1, 3))
        RhoBar(3, 2, Kind.IRREDUCIBLE, (1, 0))

    def test_v_rho_discipline(self):
        with pytest.raises(ValueError):
            RhoBar(5, 1, Kind.REDUCIBLE_NONSPLIT, (1,))
        with pytest.raises(ValueError):
            RhoBar(5, 2, Kind.REDUCIBLE_NONSPLIT, (1, 1), v_rho=BitTuple((1, 1)))
        with pytest.raises(ValueError):
            RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (1,), v_rho=BitTuple((0,)))
        RhoBar(5, 2, Kind.REDUCIBLE_NONSPLIT, (1, 1), v_rho=BitTuple((1, 0)))

    def test_twist_normalized(self):
        rho = RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (1,), twist=5)
        assert rho.twist == 1

    def test_prime_required(self):
        with pytest.raises(ValueError):
            RhoBar(9, 1, Kind.REDUCIBLE_SPLIT, (1,))

    def test_semisimplification(self):
        rho = RhoBar(5, 2, Kind.REDUCIBLE_NONSPLIT, (1, 1), v_rho=BitTuple((0, 1)), twist=3)
        ss = rho.semisimplification()
        assert ss.kind is Kind.REDUCIBLE_SPLIT
        assert ss.r == rho.r and ss.twist == rho.twist and ss.v_rho is None
        irr = RhoBar(5, 1, Kind.IRREDUCIBLE, (2,))
        assert irr.semisimplification() is irr


class TestSigmaV:
    def test_split_identity_stratum(self):
        rho = RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (1,))
        assert sigma_v(rho, BitTuple((0,))) == GL2Weight(5, 1, (1,), 0)

    def test_split_flipped_stratum(self):
        rho = RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (1,))
        assert sigma_v(rho, BitTuple((1,))) == GL2Weight(5, 1, (1,), 2)

    def test_irreducible_identity_stratum(self):
        rho = RhoBar(5, 1, Kind.IRREDUCIBLE, (2,))
        assert sigma_v(rho, BitTuple((0,))) == GL2Weight(5, 1, (2,), 0)

    def test_stratum_bound_enforced(self):
        rho = RhoBar(5, 2, Kind.REDUCIBLE_NONSPLIT, (1, 1), v_rho=BitTuple((0, 1)))
        with pytest.raises(StratumViolationError):
            sigma_v(rho, BitTuple((1, 0)))

    def test_twist_shifts_exponent(self):
        plain = RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (1,))
        twisted = RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (1,), twist=1)
        for v in all_bit_tuples(1):
            assert sigma_v(twisted, v).a == (sigma_v(plain, v).a + 1) % 4


def _small_sweep_rhos():
    for p, f in ((5, 1), (5, 2), (7, 1)):
        for kind in Kind:
            for r in generic_r_tuples(p, f, kind):
                if kind is Kind.REDUCIBLE_NONSPLIT:
                    for v_rho in all_bit_tuples(f):
                        if all(b == 1 for b in v_rho):
                            continue
                        yield RhoBar(p, f, kind, r, v_rho=v_rho)
                else:
                    yield RhoBar(p, f, kind, r)


class TestWGl2:
    def test_split_domain_is_everything(self):
        rho = RhoBar(5, 2, Kind.REDUCIBLE_SPLIT, (1, 2))
        assert set(w_gl2(rho)) == set(all_bit_tuples(2))

    def test_worked_weight_set(self):
        rho = RhoBar(5, 1, Kind.REDUCIBLE_SPLIT, (1,))
        assert w_gl2(rho) == {
            BitTuple((0,)): GL2Weight(5, 1, (1,), 0),
            BitTuple((1,)): GL2Weight(5, 1, (1,), 2),
        }

    def test_nonsplit_domain_below_bound(self):
        rho = RhoBar(5, 1, Kind.REDUCIBLE_NONSPLIT, (1,), v_rho=BitTuple((0,)))
        assert list(w_gl2(rho)) == [BitTuple((0,))]

    def test_digits_in_range_and_injective_across_small_sweep(self):
        for rho in _small_sweep_rhos():
            weights = w_gl2(rho)
            assert len(set(weights.values())) == len(weights)
            for wt in weights.values():
                assert all(0 <= d <= rho.p - 1 for d in wt.r)
