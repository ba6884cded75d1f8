"""Polynomial families: frozen small members and their interrelations."""

import pytest

from degenpoly.algebra import (
    LambdaPoly,
    XPoly,
    deg_falling_factorial,
    falling_factorial,
    lambda_shifted_falling,
    specialize,
)
from degenpoly.families import (
    bell_number_classical,
    build_family,
    deg_bell,
    gaenari,
    jindalrae,
    newtype_bell,
)
from degenpoly.triangles import stirling1_deg, stirling2_deg

N = 8


def lp(*coeffs):
    return LambdaPoly.from_coeffs(coeffs)


def xp(*coeffs):
    return XPoly(coeffs)


@pytest.fixture(scope="module")
def bell():
    return deg_bell(N)


@pytest.fixture(scope="module")
def jind():
    return jindalrae(N)


@pytest.fixture(scope="module")
def gaen():
    return gaenari(N)


class TestDegBell:
    def test_first_members(self, bell):
        assert bell.poly(0) == XPoly.one()
        assert bell.poly(1) == XPoly.var()
        assert bell.poly(2) == xp(0, lp(1, -2), 1)

    def test_number_at_two(self, bell):
        assert bell.poly(2).eval_x(1) == lp(2, -2)

    def test_classical_bell_numbers_at_lambda_zero(self, bell):
        for n in range(N + 1):
            assert specialize(bell.poly(n), 0, 1) == bell_number_classical(n)

    def test_classical_bell_polynomials_at_lambda_zero(self, bell):
        from degenpoly.oracles import partition_oracle

        for n in range(N + 1):
            coeffs = [partition_oracle(n, k) for k in range(n + 1)]
            assert specialize(bell.poly(n), 0) == LambdaPoly.from_coeffs(coeffs)


class TestNewTypeBell:
    def test_second_member(self):
        fam = newtype_bell(4)
        assert fam.poly(2) == xp(0, lp(1, -1), 1)

    def test_lambda_zero_is_classical_bell_polynomial(self):
        # B_n(x) = sum over k of S_2(n,k) x^k, built from the partition oracle
        from degenpoly.oracles import partition_oracle

        fam = newtype_bell(6)
        for n in range(7):
            coeffs = [partition_oracle(n, k) for k in range(n + 1)]
            assert specialize(fam.poly(n), 0) == LambdaPoly.from_coeffs(coeffs)


class TestJindalrae:
    def test_first_members(self, jind):
        assert jind.poly(0) == XPoly.one()
        assert jind.poly(1) == XPoly.var()
        assert jind.poly(2) == xp(0, lp(2, -3), 1)

    def test_thm10_instance(self, jind, bell):
        s2 = stirling2_deg(N)
        for n in range(N + 1):
            acc = XPoly.zero()
            for m in range(n + 1):
                acc = acc + bell.poly(m) * s2.entry(n, m)
            assert acc == jind.poly(n)

    def test_thm9_instance(self, jind, bell):
        s1 = stirling1_deg(N)
        for n in range(N + 1):
            acc = XPoly.zero()
            for m in range(n + 1):
                acc = acc + jind.poly(m) * s1.entry(n, m)
            assert acc == bell.poly(n)


class TestGaenari:
    def test_first_members(self, gaen):
        assert gaen.poly(0) == XPoly.one()
        assert gaen.poly(1) == XPoly.var()
        assert gaen.poly(2) == xp(0, lp(-2, 1), 1)

    def test_numbers_are_shifted_falling(self, gaen):
        for n in range(1, N + 1):
            assert gaen.poly(n).eval_x(1) == lambda_shifted_falling(n)

    def test_thm12_instance(self, gaen):
        s2 = stirling2_deg(N)
        for n in range(N + 1):
            acc = XPoly.zero()
            for m in range(n + 1):
                acc = acc + gaen.poly(m) * s2.entry(n, m)
            assert acc == falling_factorial(n)

    def test_shifted_log_binomial_expansion_generates_the_family(self, gaen):
        # (1 + log_λ(1+t))^x expanded as sum of (x)_l log_λ(1+t)^l / l!
        from degenpoly.series import Series, deg_log, scaled_power

        lg = deg_log(N)
        acc = Series.zero(XPoly, N)
        for l in range(N + 1):
            acc = acc + scaled_power(lg, l).lift().scale(falling_factorial(l))
        for n in range(N + 1):
            assert acc.egf_coeff(n) == gaen.poly(n)


class TestStructure:
    @pytest.mark.parametrize("kind", ["degbell", "newbell", "jindalrae", "gaenari"])
    def test_monic_of_exact_degree(self, kind):
        fam = build_family(kind, 6)
        for n in range(7):
            p = fam.poly(n)
            assert p.degree == n
            assert p.coeff(n) == LambdaPoly.one()

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            build_family("nope", 3)

    def test_poly_out_of_range(self, bell):
        with pytest.raises(IndexError):
            bell.poly(N + 1)

    def test_dual_expansions_of_deformed_falling(self, jind, gaen):
        from degenpoly.triangles import jstirling1, jstirling2

        j1 = jstirling1(N)
        j2 = jstirling2(N)
        for n in range(N + 1):
            left = XPoly.zero()
            right = XPoly.zero()
            for m in range(n + 1):
                left = left + gaen.poly(m) * j2.entry(n, m)
                right = right + jind.poly(m) * j1.entry(n, m)
            assert left == deg_falling_factorial(n)
            assert right == deg_falling_factorial(n)
