import unittest

import mpmath
from mpmath import mpf
from pydantic import ValidationError

from voldet.volumes.numerics import (
    GUARD_DIGITS, PrecisionContext, binet_estimate, compute_constants, fibonacci, lobachevsky, lobachevsky_at,
)


class TestConstants(unittest.TestCase):

    def test_published_roundings(self):
        ctx = compute_constants(32)
        self.assertEqual(ctx.working_digits, 32)
        # published values are truncated to 6 decimals
        self.assertTrue(ctx.fmt(ctx.gamma).startswith('1.425299'))
        self.assertTrue(ctx.fmt(ctx.v_tet).startswith('1.014941'))
        self.assertAlmostEqual(float(ctx.v_tet), 1.0149416064096536, places=14)
        self.assertLess(abs(float(ctx.xi) - 5.029546), 1e-5)
        self.assertAlmostEqual(float(ctx.phi), 1.618033988749895, places=14)

    def test_gamma_root_residual(self):
        for digits in (10, 32, 60):
            ctx = compute_constants(digits)
            with mpmath.workdps(digits + GUARD_DIGITS):
                r = 1 / ctx.gamma
                self.assertLess(abs(r ** 3 * (r + 1) ** 2 - 1), mpf(10) ** (2 - digits))

    def test_precision_agreement(self):
        low = compute_constants(32)
        high = compute_constants(60)
        with mpmath.workdps(70):
            self.assertLess(abs(low.v_tet - high.v_tet), mpf(10) ** -31)
            self.assertLess(abs(low.gamma - high.gamma), mpf(10) ** -31)
            self.assertLess(abs(low.xi - high.xi), mpf(10) ** -30)

    def test_xi_definition(self):
        ctx = compute_constants(40)
        with ctx.workdps():
            self.assertLess(abs(ctx.xi - mpmath.exp(5 * ctx.v_tet / mpmath.pi)), mpf(10) ** -38)

    def test_minimum_digits(self):
        with self.assertRaises(ValueError):
            compute_constants(9)
        with self.assertRaises(ValueError):
            lobachevsky_at(1, 5)

    def test_context(self):
        ctx = compute_constants(20)
        self.assertIs(ctx, compute_constants(20))
        self.assertEqual(ctx.guard_margin, mpf(10) ** -15)
        self.assertTrue(ctx.fmt(ctx.gamma).startswith('1.425299'))

        info = ctx.describe()
        self.assertEqual(info['working_digits'], 20)
        self.assertEqual(set(info), {'working_digits', 'gamma', 'v_tet', 'xi', 'phi', 'provenance'})
        self.assertIn('gamma', info['provenance'])

        with self.assertRaises(ValidationError):
            PrecisionContext(working_digits=5, gamma=ctx.gamma, v_tet=ctx.v_tet, xi=ctx.xi, phi=ctx.phi,
                             provenance={})


class TestLobachevsky(unittest.TestCase):

    def test_known_values(self):
        with mpmath.workdps(40):
            pi = +mpmath.pi
            self.assertLess(abs(lobachevsky_at(pi / 3, 30) - mpf('0.33831386880322')), mpf('1e-14'))
            self.assertLess(abs(lobachevsky_at(pi / 4, 30) - mpmath.catalan / 2), mpf(10) ** -29)
            self.assertEqual(lobachevsky_at(0, 30), 0)

    def test_identities(self):
        with mpmath.workdps(50):
            pi = +mpmath.pi
            l3 = lobachevsky_at(pi / 3, 40)
            l6 = lobachevsky_at(pi / 6, 40)
            self.assertLess(abs(l6 - 3 * l3 / 2), mpf(10) ** -38)
            # odd and pi-periodic
            self.assertLess(abs(lobachevsky_at(-pi / 3, 40) + l3), mpf(10) ** -38)
            self.assertLess(abs(lobachevsky_at(pi / 3 + pi, 40) - l3), mpf(10) ** -38)
            self.assertLess(abs(lobachevsky_at(pi, 40)), mpf(10) ** -38)

    def test_duplication(self):
        with mpmath.workdps(50):
            pi = +mpmath.pi
            for theta in (mpf('0.3'), mpf('1.1'), mpf('2.0'), mpf('-0.7')):
                lhs = lobachevsky_at(2 * theta, 40)
                rhs = 2 * lobachevsky_at(theta, 40) + 2 * lobachevsky_at(theta + pi / 2, 40)
                self.assertLess(abs(lhs - rhs), mpf(10) ** -38, theta)

    def test_context_wrapper(self):
        ctx = compute_constants(30)
        with ctx.workdps():
            self.assertLess(abs(3 * lobachevsky(mpmath.pi / 3, ctx) - ctx.v_tet), mpf(10) ** -29)


class TestFibonacci(unittest.TestCase):

    def test_exact(self):
        self.assertEqual([fibonacci(n) for n in range(1, 13)], [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144])
        with self.assertRaises(ValueError):
            fibonacci(0)

    def test_binet(self):
        ctx = compute_constants(40)
        for n in (1, 2, 12, 20, 60):
            with ctx.workdps():
                self.assertLess(abs(binet_estimate(n, ctx) - fibonacci(n)), mpf(10) ** -25, n)
        with self.assertRaises(ValueError):
            binet_estimate(0, ctx)

    def test_large_index(self):
        ctx = compute_constants(50)
        self.assertEqual(fibonacci(90), 2880067194370816120)
        with ctx.workdps():
            self.assertLess(abs(binet_estimate(90, ctx) - fibonacci(90)), mpf('0.5'))
