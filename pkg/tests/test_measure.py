"""Weighted integrals in closed Gamma form, plus the numeric cross-checks."""

from fractions import Fraction

import mpmath
import pytest

from dunkldirac.deformed import DeformedContext
from dunkldirac.dunkl import DunklContext
from dunkldirac.fischer import monogenic_basis
from dunkldirac.laguerre import LaguerreTower
from dunkldirac.measure import (
    GammaComb,
    axis_multiplicities,
    inner_product_exact,
    mehta_constant,
    norm_constant,
    radial_integral,
    sphere_inner_exact,
    sphere_moment,
    weight_exponent,
)
from dunkldirac.params import DeformParams
from dunkldirac.poly import RadialExpr
from dunkldirac.reflection import dihedral, symmetric, z2_power


# -- GammaComb ring ------------------------------------------------------

def test_gamma_comb_reduces_arguments_to_the_unit_interval():
    # Gamma(7/2) = (5/2)(3/2)(1/2) Gamma(1/2)
    g = GammaComb.term(1, gnum=(Fraction(7, 2),))
    ((_a, _t, gnum, gden), coeff), = g.terms.items()
    assert gnum == (Fraction(1, 2),)
    assert coeff == Fraction(15, 8)


def test_gamma_comb_integer_gamma_folds_to_rational():
    # Gamma(5) = 24
    g = GammaComb.term(1, gnum=(Fraction(5),))
    assert g == GammaComb.rational(24)


def test_gamma_comb_numerator_pole_raises():
    with pytest.raises(ValueError, match="Gamma pole"):
        GammaComb.term(1, gnum=(Fraction(-2),))


def test_gamma_comb_denominator_pole_vanishes():
    g = GammaComb.term(1, gden=(Fraction(0),))
    assert g.is_zero()


def test_gamma_comb_ring_laws():
    x = GammaComb.term(2, gnum=(Fraction(1, 2),))
    y = GammaComb.term(1, gnum=(Fraction(1, 3),), gden=(Fraction(1, 2),))
    z = GammaComb.rational(Fraction(3, 4))
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x - x).is_zero()


def test_gamma_comb_cancels_matching_quotients():
    # Gamma(1/3)/Gamma(1/3) = 1
    g = GammaComb.term(5, gnum=(Fraction(1, 3),), gden=(Fraction(1, 3),))
    assert g == GammaComb.rational(5)


def test_gamma_comb_two_power_canonicalization():
    # 2^{3/2} and 2 * 2^{1/2} must merge
    x = GammaComb.term(1, two_pow=Fraction(3, 2))
    y = GammaComb.term(2, two_pow=Fraction(1, 2))
    assert x == y


def test_gamma_comb_numeric_value():
    g = GammaComb.term(1, gnum=(Fraction(1, 2),))
    assert abs(float(g.numeric()) - float(mpmath.sqrt(mpmath.pi))) < 1e-12


# -- radial integral -----------------------------------------------------

def test_radial_integral_against_quadrature():
    for Q, a in [(Fraction(3), Fraction(2)), (Fraction(5, 2), Fraction(2)),
                 (Fraction(4), Fraction(3)), (Fraction(7, 3), Fraction(1, 2))]:
        exact = radial_integral(Q, a)
        num = mpmath.quad(
            lambda r: r ** (float(Q) - 1) * mpmath.exp(-2 * r ** float(a) / float(a)),
            [0, mpmath.inf])
        assert abs(float(exact.numeric()) - float(num)) < 1e-10


def test_radial_integral_rejects_divergence():
    with pytest.raises(ValueError, match="divergent"):
        radial_integral(Fraction(0), 2)
    with pytest.raises(ValueError):
        radial_integral(Fraction(2), Fraction(-1))


def test_radial_integral_lam_scaling():
    # doubling lam multiplies the value by 2^{-Q/a}
    base = radial_integral(Fraction(3), 2, lam=2)
    scaled = radial_integral(Fraction(3), 2, lam=4)
    assert abs(float(scaled.numeric()) - float(base.numeric()) / 2 ** 1.5) < 1e-12


# -- sphere moments --------------------------------------------------------

def test_sphere_moment_odd_exponent_vanishes():
    assert sphere_moment(2, (1, 2)).is_zero()


def test_sphere_moment_total_mass_m2():
    # unweighted unit circle has measure 2 pi
    total = sphere_moment(2, (0, 0))
    assert abs(float(total.numeric()) - 2 * float(mpmath.pi)) < 1e-12


def test_sphere_moment_classical_values():
    # int_{S^1} xi_1^2 dsigma = pi; int_{S^2} xi_1^2 dsigma = 4 pi / 3
    assert abs(float(sphere_moment(2, (2, 0)).numeric()) - float(mpmath.pi)) < 1e-12
    expect = 4 * float(mpmath.pi) / 3
    assert abs(float(sphere_moment(3, (2, 0, 0)).numeric()) - expect) < 1e-12


def test_sphere_moment_weighted_against_quadrature():
    ks = [Fraction(1, 2), Fraction(3, 2)]
    mono = (2, 4)
    exact = float(sphere_moment(2, mono, ks).numeric())
    half_pi = mpmath.pi / 2
    num = mpmath.quad(
        lambda th: (mpmath.cos(th) ** 2 * mpmath.sin(th) ** 4
                    * (2 * mpmath.cos(th) ** 2) ** 0.5
                    * (2 * mpmath.sin(th) ** 2) ** 1.5),
        [k * half_pi for k in range(5)])  # split at the |.| kinks
    assert abs(exact - float(num)) < 1e-10


# -- axis multiplicities and the weight exponent ----------------------------

def test_axis_multiplicities():
    assert axis_multiplicities(z2_power(2, [1, 2])) == [1, 2]
    hyper = axis_multiplicities(dihedral(2, Fraction(1, 2), Fraction(3, 2)))
    assert hyper == [Fraction(1, 2), Fraction(3, 2)]
    assert axis_multiplicities(symmetric(3, 1)) is None


def test_weight_exponent_closes_the_radial_collapse():
    """e_h + 2 gamma + m = delta for every triple."""
    dk = DunklContext(z2_power(2, [Fraction(1, 2), Fraction(3, 2)]))
    for a, b, c in [(2, 0, 0), (4, Fraction(1, 2), 1),
                    (Fraction(2, 3), Fraction(-1, 4), 2)]:
        ctx = DeformedContext(dk, DeformParams(a, b, c))
        eh = weight_exponent(ctx)
        assert eh + 2 * dk.setup.gamma + dk.setup.m == ctx.delta


# -- inner products ----------------------------------------------------------

def make_ctx(a, b, c, ks=(Fraction(1, 2), Fraction(3, 2))):
    dk = DunklContext(z2_power(2, list(ks)))
    return DeformedContext(dk, DeformParams(a, b, c))


def test_inner_product_requires_axis_aligned_roots():
    dk = DunklContext(symmetric(3, 1))
    ctx = DeformedContext(dk, DeformParams(2, 0, 0))
    f = RadialExpr.monomial(3, (0, 0, 0))
    with pytest.raises(ValueError, match="axis-aligned"):
        inner_product_exact(ctx, f, f)
    with pytest.raises(ValueError, match="axis-aligned"):
        sphere_inner_exact(dk.setup, f, f)


def test_gaussian_mass_matches_mehta():
    """<1, 1> at (2, 0, 0) with lam = 2 doubles the damping: e^{-r^2}.

    Rescaling x -> x/sqrt(2) in the Mehta integral gives
    int e^{-r^2} w_k = 2^{-(mu+2gamma)/2} ... cross-check numerically instead.
    """
    ctx = make_ctx(2, 0, 0)
    one = RadialExpr.monomial(2, (0, 0))
    got = inner_product_exact(ctx, one, one)
    num = mpmath.quad(
        lambda x, y: mpmath.exp(-(x * x + y * y))
        * (2 * x * x) ** 0.5 * (2 * y * y) ** 1.5,
        [-6, 0, 6], [-6, 0, 6])
    assert set(got) == {0}
    assert abs(float(got[0].numeric()) - float(num)) < 1e-8


def test_mehta_constant_z2_value():
    setup = z2_power(2, [Fraction(1, 2), Fraction(3, 2)])
    exact = float(mehta_constant(setup).numeric())
    num = mpmath.quad(
        lambda x, y: mpmath.exp(-(x * x + y * y) / 2)
        * (2 * x * x) ** 0.5 * (2 * y * y) ** 1.5,
        [-8, 0, 8], [-8, 0, 8])
    assert abs(exact - float(num)) < 1e-8


def test_mehta_constant_rejects_off_axis_groups():
    with pytest.raises(ValueError):
        mehta_constant(symmetric(3, 1))


def test_norm_constant_matches_inner_product():
    """<psi_t e^{-u}, psi_t e^{-u}> splits as norm_constant times the sphere term."""
    ctx = make_ctx(Fraction(3, 2), Fraction(1, 4), Fraction(1, 2))
    ell = 1
    mg = monogenic_basis(ctx.dk, ell)[0]
    tower = LaguerreTower(ctx, ell, mg)
    sphere = sphere_inner_exact(ctx.dk.setup, mg, mg)
    for t in range(4):
        psi = tower.psi(t)
        got = inner_product_exact(ctx, psi, psi)
        nc = norm_constant(ctx, ell, t)
        for blade, comb in got.items():
            assert (comb - nc * sphere[blade]).is_zero()
        for blade in sphere:
            assert blade in got


def test_inner_product_of_distinct_rungs_vanishes():
    ctx = make_ctx(2, Fraction(1, 3), Fraction(1, 2))
    mg = monogenic_basis(ctx.dk, 1)[0]
    tower = LaguerreTower(ctx, 1, mg)
    got = inner_product_exact(ctx, tower.psi(0), tower.psi(2))
    assert not got  # all blades cancel


def test_inner_product_divergence_raises():
    # strongly negative b drives the radial exponent below zero
    ctx = make_ctx(2, -8, 0)
    one = RadialExpr.monomial(2, (0, 0))
    with pytest.raises(ValueError, match="divergent"):
        inner_product_exact(ctx, one, one)
