import pytest

from quatweights import BitTuple, SignTuple, all_bit_tuples, all_sign_tuples, ell, leq, u0_transform


class TestBitTuple:
    def test_validation(self):
        with pytest.raises(ValueError):
            BitTuple(())
        with pytest.raises(ValueError):
            BitTuple((0, 2))

    def test_cyclic_indexing(self):
        v = BitTuple((0, 1, 1))
        assert v[-1] == v[2] == 1
        assert v[3] == v[0] == 0
        assert v[-4] == v[2]

    def test_behaves_like_tuple(self):
        assert BitTuple((0, 1)) == (0, 1)
        assert sorted([BitTuple((1, 0)), BitTuple((0, 1))]) == [(0, 1), (1, 0)]
        assert hash(BitTuple((1,))) == hash((1,))


class TestSignTuple:
    def test_validation(self):
        with pytest.raises(ValueError):
            SignTuple((2,))
        assert SignTuple((-1, 0, 1)) == (-1, 0, 1)

    def test_cyclic_indexing(self):
        d = SignTuple((-1, 0))
        assert d[-1] == 0 and d[2] == -1


class TestOrder:
    def test_leq_examples(self):
        assert leq(BitTuple((0, 1)), BitTuple((1, 1)))
        assert not leq(BitTuple((1, 0)), BitTuple((0, 1)))
        assert leq(BitTuple((0, 0)), BitTuple((0, 0)))

    def test_leq_length_mismatch(self):
        with pytest.raises(ValueError):
            leq(BitTuple((0,)), BitTuple((0, 1)))

    def test_ell(self):
        assert ell(BitTuple((1, 0, 1))) == 2
        assert ell(BitTuple((0,))) == 0


class TestU0Transform:
    @pytest.mark.parametrize(
        "u, expected",
        [((1,), (0,)), ((0, 1), (0, 0)), ((1, 0, 0), (1, 0, 1))],
    )
    def test_flips_last_bit(self, u, expected):
        assert u0_transform(BitTuple(u)) == expected

    def test_involution(self):
        for u in all_bit_tuples(3):
            assert u0_transform(u0_transform(u)) == u


class TestEnumeration:
    def test_counts_and_order(self):
        assert len(all_bit_tuples(3)) == 8
        assert all_bit_tuples(2)[0] == (0, 0)
        assert all_bit_tuples(2)[-1] == (1, 1)
        assert len(all_sign_tuples(2)) == 9
        assert all_sign_tuples(1) == ((-1,), (0,), (1,))
