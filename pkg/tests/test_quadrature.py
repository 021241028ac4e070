"""Weighted quadrature rules against the closed Gamma-form integrals."""

import random
from fractions import Fraction

import numpy as np
import pytest

from dunkldirac.deformed import DeformedContext
from dunkldirac.dunkl import DunklContext
from dunkldirac.measure import (
    inner_product_exact,
    radial_integral,
    sphere_moment,
)
from dunkldirac.params import DeformParams
from dunkldirac.poly import RadialExpr
from dunkldirac.quadrature import (
    circle_rule,
    evaluate,
    integrate_expr,
    paired_classes,
    radial_rule,
    sphere_rule,
    vector_mul_values,
    weighted_grid,
)
from dunkldirac.reflection import symmetric, z2_power

from conftest import random_expr


# -- radial rule ----------------------------------------------------------

def test_radial_rule_reproduces_gamma_integrals():
    for a, lam, exponent in [(2, 2, 3), (2, 1, Fraction(5, 2)),
                             (Fraction(1, 2), 2, 1), (4, 1, Fraction(7, 3))]:
        r, W = radial_rule(a, lam, exponent, 40)
        for extra in (0, 2, 4):
            got = np.sum(W * r ** float(Fraction(a) * extra / 2) * 1.0
                         * r ** 0.0)
            # moment int r^{exponent + a*extra/2} e^{-lam r^a/a} dr, a power
            # of r^a times the base weight, inside the rule's exactness range
            lam_pow = {1: 4, 2: 2, 4: 1}[lam]
            exact = radial_integral(
                Fraction(exponent) + Fraction(a) * extra / 2 + 1, a,
                lam=lam).numeric()
            np.testing.assert_allclose(got, float(exact), rtol=1e-12)


def test_radial_rule_rejects_bad_exponents():
    with pytest.raises(ValueError):
        radial_rule(-1, 2, 0, 10)
    with pytest.raises(ValueError, match="divergent"):
        radial_rule(2, 2, -1, 10)


# -- sphere and circle rules -------------------------------------------------

def test_sphere_rule_m1_is_the_two_point_set():
    dirs, wts = sphere_rule(1, 8)
    assert dirs.shape == (2, 1)
    assert np.all(wts == 1.0)


def test_sphere_rule_total_mass():
    for m, expect in [(2, 2 * np.pi), (3, 4 * np.pi)]:
        dirs, wts = sphere_rule(m, 24)
        np.testing.assert_allclose(np.sum(wts), expect, rtol=1e-12)
        np.testing.assert_allclose(np.sum(dirs * dirs, axis=1), 1.0, rtol=1e-12)


def test_sphere_rule_moments_match_closed_form():
    for m in (2, 3):
        dirs, wts = sphere_rule(m, 24)
        for mono in [(2,) + (0,) * (m - 1), (2, 2) + (0,) * (m - 2)]:
            vals = np.ones(len(dirs))
            for i, e in enumerate(mono):
                vals = vals * dirs[:, i] ** e
            exact = float(sphere_moment(m, mono).numeric())
            np.testing.assert_allclose(np.sum(wts * vals), exact, rtol=1e-12)


def test_sphere_rule_rejects_high_dimension():
    with pytest.raises(ValueError):
        sphere_rule(4, 8)


def test_circle_rule_weighted_moments():
    """Gauss-Jacobi handles half-integer multiplicities exactly."""
    ks = [Fraction(1, 2), Fraction(3, 2)]
    dirs, wts = circle_rule(ks[0], ks[1], 12)
    for mono in [(0, 0), (2, 0), (2, 4), (6, 2)]:
        vals = dirs[:, 0] ** mono[0] * dirs[:, 1] ** mono[1]
        exact = float(sphere_moment(2, mono, ks).numeric())
        np.testing.assert_allclose(np.sum(wts * vals), exact, rtol=1e-12)
    # odd moments vanish by the four-fold mirroring
    odd = dirs[:, 0] ** 1 * dirs[:, 1] ** 2
    assert abs(np.sum(wts * odd)) < 1e-14


# -- grids and evaluation ------------------------------------------------------

def test_weighted_grid_total_mass_is_mehta_like():
    import mpmath
    setup = z2_power(2, [Fraction(1, 2), Fraction(3, 2)])
    pts, wts = weighted_grid(setup, 2, 1, n_r=40, n_ang=40)
    num = mpmath.quad(
        lambda x, y: mpmath.exp(-(x * x + y * y) / 2)
        * (2 * x * x) ** 0.5 * (2 * y * y) ** 1.5,
        [-8, 0, 8], [-8, 0, 8])
    np.testing.assert_allclose(np.sum(wts), float(num), rtol=1e-10)


def test_evaluate_matches_manual_numpy():
    f = (RadialExpr.monomial(2, (1, 2), Fraction(3), blade=0b1,
                             r_exp=Fraction(-1))
         + RadialExpr.monomial(2, (0, 0), Fraction(1, 2)))
    pts = np.array([[0.5, 1.0], [2.0, -1.0], [0.1, 0.3]])
    vals = evaluate(f, pts)
    r = np.sqrt(np.sum(pts * pts, axis=1))
    np.testing.assert_allclose(vals[:, 0], 0.5)
    np.testing.assert_allclose(
        vals[:, 1], 3.0 * pts[:, 0] * pts[:, 1] ** 2 / r)
    assert not np.any(vals[:, 2:])


def test_vector_mul_values_matches_symbolic_product():
    rng = random.Random(21)
    f = random_expr(rng, 2, 2)
    g = f.vector_mul_left(Fraction(-1))
    pts = np.array([[0.7, 0.4], [1.5, -0.6]])
    got = vector_mul_values(pts, evaluate(f, pts), r_shift=-1)
    np.testing.assert_allclose(got, evaluate(g, pts), rtol=1e-12)


# -- paired classes ---------------------------------------------------------------

def test_paired_classes_reassemble_the_expression():
    rng = random.Random(23)
    for m, half in [(2, Fraction(1)), (2, Fraction(1, 3)), (1, Fraction(2))]:
        f = RadialExpr(m)
        for _ in range(5):
            mono = tuple(rng.randrange(3) for _ in range(m))
            s = half * rng.randrange(-2, 5) - sum(mono) % 2 * 0  # keep on lattice
            f = f + RadialExpr.monomial(
                m, mono, Fraction(rng.randint(-5, 5)),
                blade=rng.randrange(1 << m), r_exp=s)
        total = RadialExpr.zero(m)
        for fold, part in paired_classes(f, half):
            total = total + part.mul_radial(fold)
        assert (total - f.line_canonical()).is_zero()


def test_paired_classes_fold_keeps_parts_analytic_in_v_squared():
    """Each part times r^{-fold} must be a series in v^2 = r^{2*half} after
    pairing antipodes: n_v + |mono| stays even within every class."""
    f = (RadialExpr.monomial(2, (1, 0), r_exp=Fraction(1, 2))
         + RadialExpr.monomial(2, (0, 0), r_exp=Fraction(3, 2))
         + RadialExpr.monomial(2, (1, 1)))
    for fold, part in paired_classes(f, Fraction(1, 2)):
        for (s, mono, _b), _c in part.terms.items():
            n_v = (Fraction(s)) / Fraction(1, 2)
            assert (n_v + sum(mono)) % 2 == 0


# -- full integration -----------------------------------------------------------

def test_integrate_expr_matches_exact_inner_products():
    dk = DunklContext(z2_power(2, [Fraction(1, 2), Fraction(3, 2)]))
    rng = random.Random(29)
    for a, b, c in [(2, 0, 0), (4, Fraction(1, 2), Fraction(-1, 2))]:
        ctx = DeformedContext(dk, DeformParams(a, b, c))
        f = random_expr(rng, 2, 2)
        g = random_expr(rng, 2, 2)
        exact = inner_product_exact(ctx, f, g)
        from dunkldirac.measure import weight_exponent
        prod = f.bar().mul_expr(g)
        got = integrate_expr(dk.setup, prod, a, 2,
                             extra=weight_exponent(ctx), n_r=40, n_ang=48)
        for blade in range(4):
            want = float(exact[blade].numeric()) if blade in exact else 0.0
            np.testing.assert_allclose(got[blade], want, rtol=1e-10,
                                       atol=1e-10)


def test_integrate_expr_handles_m3_and_m1():
    # m = 3 symmetric-group weight: pure Gaussian moment int r^2 e^{-r^2/2}
    setup = symmetric(3, Fraction(0))
    f = RadialExpr.monomial(3, (0, 0, 0), r_exp=2)
    got = integrate_expr(setup, f, 2, 1, n_r=30, n_ang=30)
    exact = float((radial_integral(5, 2, lam=1)
                   * sphere_moment(3, (0, 0, 0))).numeric())
    np.testing.assert_allclose(got[0], exact, rtol=1e-10)
    # m = 1 picks up the two-point sphere and the line fold: x^2 becomes
    # r^2, so the radial exponent is 2 + 2 gamma + (m - 1) = 3, i.e. Q = 4
    line = z2_power(1, [Fraction(1, 2)])
    f1 = RadialExpr.monomial(1, (2,))
    got1 = integrate_expr(line, f1, 2, 1, n_r=30, n_ang=2)
    exact1 = float((radial_integral(Fraction(4), 2, lam=1)
                    * sphere_moment(1, (0,), [Fraction(1, 2)])).numeric())
    np.testing.assert_allclose(got1[0], exact1, rtol=1e-10)
