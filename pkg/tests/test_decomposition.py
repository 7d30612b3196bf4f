from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from necklacemap import polys
from necklacemap.decomposition import (
    crt_combine,
    crt_split,
    cyclotomic_cosets,
    factor_xn_minus_1,
    orbit_canonical,
    shift,
)
from necklacemap.errors import NotCoprimeError
from necklacemap.fields import build_field


class TestCosets:
    def test_three_five(self):
        cosets = cyclotomic_cosets(3, 5)
        assert [c.members for c in cosets] == [(0,), (1, 2)]
        assert [c.rep for c in cosets] == [0, 1]

    def test_single_class(self):
        cosets = cyclotomic_cosets(1, 9)
        assert len(cosets) == 1 and cosets[0].members == (0,)

    def test_seven_two(self):
        cosets = cyclotomic_cosets(7, 2)
        assert [c.members for c in cosets] == [(0,), (1, 2, 4), (3, 5, 6)]

    def test_orbit_is_multiplication_order(self):
        zero, big, small = cyclotomic_cosets(9, 2)
        assert big.orbit == (1, 2, 4, 8, 7, 5)
        assert big.members == tuple(sorted(big.orbit))
        assert small.members == (3, 6)

    def test_rejects_common_factor(self):
        with pytest.raises(NotCoprimeError):
            cyclotomic_cosets(6, 2)

    @pytest.mark.parametrize("n,qi", [(3, 5), (7, 2), (9, 2), (5, 4), (12, 5), (15, 2)])
    def test_partition(self, n, qi):
        cosets = cyclotomic_cosets(n, qi)
        seen = [m for c in cosets for m in c.members]
        assert sorted(seen) == list(range(n))
        assert sum(c.size for c in cosets) == n
        for c in cosets:
            assert c.rep == min(c.members)
            assert all(m * qi % n in c.members for m in c.members)


class TestFactorXnMinus1:
    def test_n3_f2(self):
        f2 = build_field(2, 1)
        assert factor_xn_minus_1(3, f2) == [(1, 1), (1, 1, 1)]

    def test_n3_f5(self):
        f5 = build_field(5, 1)
        assert factor_xn_minus_1(3, f5) == [(4, 1), (1, 1, 1)]

    def test_n1(self):
        f7 = build_field(7, 1)
        assert factor_xn_minus_1(1, f7) == [(6, 1)]

    def test_rejects_common_factor(self):
        with pytest.raises(NotCoprimeError):
            factor_xn_minus_1(4, build_field(2, 1))

    @pytest.mark.parametrize(
        "n,p,t",
        [
            (3, 2, 1),
            (5, 2, 2),
            (7, 3, 1),
            (9, 2, 1),
            (15, 2, 1),
            (8, 3, 2),
            (21, 2, 1),
            (11, 3, 1),
            (64, 3, 1),
            (63, 2, 1),
        ],
    )
    def test_product_and_degrees(self, n, p, t):
        field = build_field(p, t)
        cosets = cyclotomic_cosets(n, field.order)
        factors = factor_xn_minus_1(n, field, cosets)
        assert [polys.degree(f) for f in factors] == [c.size for c in cosets]
        prod = (field.one,)
        for f in factors:
            assert f[-1] == field.one
            prod = polys.mul(field, prod, f)
        xn1 = [field.zero] * (n + 1)
        xn1[0] = field.neg(field.one)
        xn1[n] = field.one
        assert prod == polys.trim(field, xn1)


class TestCrt:
    def test_worked_split(self, tables_for):
        t = tables_for(3, 10)
        residues = crt_split(t, (1, 1, 1))
        assert residues == (((3,), (0, 0)), ((1,), (0, 0)))

    def test_zero_and_one(self, tables_for):
        t = tables_for(3, 10)
        zeros = crt_split(t, (0, 0, 0))
        assert all(r == q.field.zero for grp, blk in zip(zeros, t.blocks) for r, q in zip(grp, blk.quotients))
        ones = crt_split(t, (1, 0, 0))
        assert all(r == q.field.one for grp, blk in zip(ones, t.blocks) for r, q in zip(grp, blk.quotients))

    def test_combine_inverts_worked_split(self, tables_for):
        t = tables_for(3, 10)
        assert crt_combine(t, crt_split(t, (1, 1, 1))) == (1, 1, 1)

    @pytest.mark.parametrize("n,q", [(3, 10), (5, 6), (4, 3)])
    def test_round_trip_exhaustive(self, tables_for, n, q):
        t = tables_for(n, q)
        for word in product(range(q), repeat=n):
            assert crt_combine(t, crt_split(t, word)) == word

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_round_trip_sampled_tower(self, tables_for, data):
        # q = 12 exercises a t > 1 factor (4 = 2**2) beside a prime one
        t = tables_for(5, 12)
        word = tuple(data.draw(st.integers(0, 11)) for _ in range(5))
        assert crt_combine(t, crt_split(t, word)) == word

    def test_split_of_shift_scales_by_x_class(self, tables_for):
        t = tables_for(3, 10)
        for word in [(1, 2, 3), (9, 0, 4), (7, 7, 1), (0, 0, 5)]:
            base = crt_split(t, word)
            for k in range(3):
                shifted = crt_split(t, shift(word, k))
                for grp_s, grp_b, blk in zip(shifted, base, t.blocks):
                    for r_s, r_b, qc in zip(grp_s, grp_b, blk.quotients):
                        scale = qc.field.pow(qc.x_class, k)
                        assert r_s == qc.field.mul(scale, r_b)

    def test_word_validation(self, tables_for):
        t = tables_for(3, 10)
        with pytest.raises(ValueError):
            crt_split(t, (1, 1))
        with pytest.raises(ValueError):
            crt_split(t, (1, 1, 10))


class TestShift:
    def test_basic(self):
        assert shift((1, 0, 0), 1) == (0, 1, 0)

    def test_rotation_invariant_word(self):
        for k in range(3):
            assert shift((1, 1, 1), k) == (1, 1, 1)

    def test_group_law(self):
        w = (0, 1, 2, 3, 4)
        for a in range(5):
            for b in range(5):
                assert shift(shift(w, a), b) == shift(w, (a + b) % 5)


class TestOrbitCanonical:
    @pytest.mark.parametrize(
        "word,expected",
        [((0, 1, 0), (0, 0, 1)), ((1, 1, 1), (1, 1, 1)), ((2, 0, 1), (0, 1, 2))],
    )
    def test_examples(self, word, expected):
        assert orbit_canonical(word) == expected

    def test_is_minimum_of_all_rotations(self):
        word = (3, 1, 4, 1, 5)
        rotations = [shift(word, k) for k in range(5)]
        assert orbit_canonical(word) == min(rotations)
        for r in rotations:
            assert orbit_canonical(r) == orbit_canonical(word)
