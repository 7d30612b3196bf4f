import math

import pytest

from necklacemap import polys
from necklacemap.errors import NotPrimeError, OrderMismatchError, ZeroElementError
from necklacemap.fields import (
    ExtensionField,
    PrimeField,
    QuotientFieldCtx,
    baby_table,
    build_field,
    discrete_log,
    element_order,
    extend_field,
    find_primitive,
)


def small_prime_powers(limit):
    out = []
    for p in range(2, limit + 1):
        if any(p % d == 0 for d in range(2, p)):
            continue
        t = 1
        while p**t <= limit:
            out.append((p, t))
            t += 1
    return out


class TestBuildField:
    def test_prime_field_is_plain_residues(self):
        f = build_field(5, 1)
        assert isinstance(f, PrimeField)
        assert f.order == 5 and f.one == 1

    def test_gf4_modulus(self):
        f = build_field(2, 2)
        assert f.modulus == (1, 1, 1)

    def test_gf9_modulus(self):
        f = build_field(3, 2)
        assert f.modulus == (1, 0, 1)

    def test_rejects_composite(self):
        with pytest.raises(NotPrimeError):
            build_field(6, 1)

    def test_modulus_reverified_independently(self):
        # no root in the base field, and no common factor with x**(p**d) - x
        for p, t in [(2, 3), (3, 2), (5, 2), (2, 6)]:
            f = build_field(p, t)
            base = f.base
            assert all(polys.eval_at(base, f.modulus, a) != base.zero for a in range(p))
            for d in range(1, t):
                frob = polys.pow_mod(base, polys.x(base), p**d, f.modulus)
                diff = polys.sub(base, frob, polys.x(base))
                assert polys.gcd(base, diff, f.modulus) == (base.one,)


class TestArithmetic:
    def test_inv_in_f5(self):
        assert PrimeField(5).inv(3) == 2

    def test_gf4_square_of_root(self):
        f = build_field(2, 2)
        x = (0, 1)
        assert f.mul(x, x) == (1, 1)

    @pytest.mark.parametrize("p,t", [(2, 1), (5, 1), (2, 2), (3, 2), (2, 4)])
    def test_lagrange(self, p, t):
        f = build_field(p, t)
        for i in range(1, f.order):
            a = f.from_index(i)
            assert f.pow(a, f.order - 1) == f.one

    def test_inv_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            PrimeField(7).inv(0)
        f = build_field(2, 2)
        with pytest.raises(ZeroDivisionError):
            f.inv(f.zero)

    def test_inverse_exhaustive_small_orders(self):
        for p, t in small_prime_powers(256):
            f = build_field(p, t)
            for i in range(1, f.order):
                a = f.from_index(i)
                assert f.mul(a, f.inv(a)) == f.one

    def test_index_round_trip(self):
        f = build_field(3, 3)
        for i in range(f.order):
            assert f.to_index(f.from_index(i)) == i

    def test_tower_field(self):
        # degree-2 extension of GF(4): 16 elements, arithmetic closes
        base = build_field(2, 2)
        f = extend_field(base, 2)
        assert f.order == 16
        a = f.from_index(7)
        b = f.from_index(11)
        assert f.mul(a, f.inv(a)) == f.one
        assert f.sub(f.add(a, b), b) == a


class TestOrders:
    def test_order_of_one(self):
        assert element_order(PrimeField(5), 1) == 1

    def test_order_of_two_mod_five(self):
        assert element_order(PrimeField(5), 2) == 4

    def test_order_of_root_in_gf4(self):
        f = build_field(2, 2)
        assert element_order(f, (0, 1)) == 3

    def test_zero_rejected(self):
        with pytest.raises(ZeroElementError):
            element_order(PrimeField(5), 0)

    @pytest.mark.parametrize("p,t,expected", [(2, 1, 1), (5, 1, 2), (7, 1, 3)])
    def test_find_primitive(self, p, t, expected):
        assert find_primitive(build_field(p, t)) == expected

    def test_primitive_in_extension(self):
        f = build_field(2, 4)
        g = find_primitive(f)
        assert element_order(f, g) == 15


class TestDiscreteLog:
    def test_brute_force_path(self):
        f = PrimeField(101)
        g = find_primitive(f)
        for k in range(0, 100, 7):
            assert discrete_log(f, g, f.pow(g, k), 100) == k

    def test_bsgs_path(self):
        f = build_field(2, 11)  # order 2047 exceeds the brute-force cutoff
        g = find_primitive(f)
        babies = baby_table(f, g, 2047)
        for k in [0, 1, 2, 100, 1023, 2046]:
            assert discrete_log(f, g, f.pow(g, k), 2047, babies) == k

    def test_zero_rejected(self):
        f = PrimeField(5)
        with pytest.raises(ZeroElementError):
            discrete_log(f, 2, 0, 4)


class TestQuotientCtx:
    def test_trivial_unit_group(self):
        # F2 modulo x+1: one-element unit group, generator is 1
        q = QuotientFieldCtx(PrimeField(2), (1, 1), n=3, rep=0)
        assert q.group_order == 1
        assert q.generator == q.field.one
        assert q.x_exponent == 1

    def test_rep_zero_gets_smallest_primitive(self):
        # F5 modulo x-1: class of x is 1, exponent is the full group order
        q = QuotientFieldCtx(PrimeField(5), (4, 1), n=3, rep=0)
        assert q.x_exponent == 4
        assert q.x_class == q.field.one
        assert q.generator == (2,)

    def test_constrained_generator_degree_two(self):
        # F5 modulo x^2+x+1 at rep 1: generator g with g^8 = class of x
        q = QuotientFieldCtx(PrimeField(5), (1, 1, 1), n=3, rep=1)
        assert q.group_order == 24
        assert q.x_exponent == 8
        assert element_order(q.field, q.generator) == 24
        assert q.field.pow(q.generator, 8) == q.x_class

    def test_order_mismatch_guard(self):
        # x+1 over F5 puts -1 in place of x, order 2, but rep=0 demands order 1
        with pytest.raises(OrderMismatchError):
            QuotientFieldCtx(PrimeField(5), (1, 1), n=3, rep=0)

    def test_generator_constraint_across_reps(self):
        # all quotients of x^5 - 1 over F4
        base = build_field(2, 2)
        from necklacemap.decomposition import cyclotomic_cosets, factor_xn_minus_1

        cosets = cyclotomic_cosets(5, 4)
        for coset, poly in zip(cosets, factor_xn_minus_1(5, base, cosets)):
            q = QuotientFieldCtx(base, poly, n=5, rep=coset.rep)
            assert element_order(q.field, q.generator) == q.group_order
            assert q.field.pow(q.generator, q.x_exponent) == q.x_class
            assert element_order(q.field, q.x_class) == 5 // math.gcd(5, coset.rep)


def test_extension_requires_monic():
    with pytest.raises(ValueError):
        ExtensionField(PrimeField(5), (1, 2))
    with pytest.raises(ValueError):
        ExtensionField(PrimeField(5), (1, 0, 1))  # reducible over F5
