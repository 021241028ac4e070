"""The deformed Dirac family: components, superalgebra relations, factorization."""

import random
from fractions import Fraction

import pytest

from dunkldirac.deformed import (
    DeformedContext,
    factorization_solutions_generic,
    factorization_solutions_zero_k,
)
from dunkldirac.dunkl import DunklContext
from dunkldirac.params import DeformParams
from dunkldirac.poly import RadialExpr
from dunkldirac.reflection import symmetric, z2_power

from conftest import monomial_inputs, rand_fraction, random_expr


def make_ctx(a, b, c, m=2, ks=(Fraction(1, 2), Fraction(3, 2))):
    dk = DunklContext(z2_power(m, list(ks[:m])))
    return DeformedContext(dk, DeformParams(a, b, c))


# -- parameter triple ------------------------------------------------------

def test_params_reject_degenerate_values():
    with pytest.raises(ValueError):
        DeformParams(0, 1, 1)
    with pytest.raises(ValueError):
        DeformParams(2, 0, -1)


def test_commuting_constructor():
    p = DeformParams.commuting(Fraction(2, 3), Fraction(1, 5))
    assert p.c == 2 and p.is_commuting_choice()
    assert not DeformParams(2, 0, 1).is_commuting_choice()


def test_beta_and_l():
    p = DeformParams(4, Fraction(1, 2), 1)
    assert p.l == -1
    assert p.beta(0) == Fraction(-1, 4)
    assert p.beta(2) == Fraction(-5, 4)


# -- operator assembly -----------------------------------------------------

def test_dirac_is_the_sum_of_its_components():
    ctx = make_ctx(Fraction(2, 3), Fraction(1, 2), Fraction(-1, 3))
    f = random_expr(random.Random(4), 2, 2)
    total = RadialExpr.zero(2)
    for i in (1, 2):
        total = total + ctx.dirac_component(i, f).blade_mul_left(1 << (i - 1))
    assert ctx.dirac(f) == total


def test_x_a_squares_to_minus_r_a():
    ctx = make_ctx(Fraction(3, 2), 0, 0)
    f = random_expr(random.Random(5), 2, 2)
    assert ctx.x_a(ctx.x_a(f)) == -f.mul_radial(Fraction(3, 2))


def test_dirac_on_damped_is_the_gauge_shift():
    """Pulling D through e^{-lam r^a/a} costs exactly lam (1+c) x_a."""
    for a, b, c in [(2, 0, 0), (4, Fraction(1, 2), 1),
                    (Fraction(2, 3), Fraction(-1, 4), 2)]:
        ctx = make_ctx(a, b, c)
        f = random_expr(random.Random(6), 2, 2)
        for lam in (1, Fraction(1, 2)):
            expect = ctx.dirac(f) - ctx.x_a(f).scale(lam * (1 + ctx.par.c))
            assert ctx.dirac_on_damped(f, lam) == expect


def test_dirac_damped_matches_dirac_on_damped_at_lam_one():
    ctx = make_ctx(4, Fraction(1, 3), Fraction(1, 2))
    f = random_expr(random.Random(8), 2, 2)
    assert ctx.dirac_damped(f) == ctx.dirac_on_damped(f, 1)


# -- osp(1|2) relations ------------------------------------------------------

def test_osp_relations_hold_for_random_triples():
    rng = random.Random(20260816)
    for _ in range(3):
        a = rand_fraction(rng, Fraction(1, 4), 4)
        b = rand_fraction(rng, -2, 2)
        c = rand_fraction(rng, -2, 2)
        if a == 0 or c == -1:
            continue
        ctx = make_ctx(a, b, c)
        for f in monomial_inputs(2, 2):
            assert ctx.osp_relations_hold(f)


def test_osp_report_names_all_eight_relations():
    ctx = make_ctx(2, 0, 0)
    report = ctx.osp_relations_report(RadialExpr.monomial(2, (1, 0)))
    assert len(report) == 8
    assert "{x_a, D} = -2(1+c)(E + delta/2)" in report


def test_osp_relations_fail_for_a_wrong_delta():
    """The anticommutator pins delta; shifting it must leave a residue."""
    ctx = make_ctx(2, Fraction(1, 2), Fraction(1, 3))
    f = RadialExpr.monomial(2, (1, 0))
    anti = ctx.dirac(ctx.x_a(f)) + ctx.x_a(ctx.dirac(f))
    good = anti + (f.euler() + f.scale(ctx.delta / 2)).scale(2 * (1 + ctx.par.c))
    bad = anti + (f.euler() + f.scale(ctx.delta / 2 + 1)).scale(2 * (1 + ctx.par.c))
    assert good.is_zero()
    assert not bad.is_zero()


# -- commutativity of the components -----------------------------------------

def test_components_commute_exactly_on_the_commuting_line():
    f = RadialExpr.monomial(2, (1, 1), blade=0b1)
    for a in (Fraction(2), Fraction(4), Fraction(2, 3)):
        good = make_ctx(a, Fraction(1, 3), 2 / a - 1)
        assert good.commute_defect(1, 2, f).is_zero()
    off = make_ctx(4, Fraction(1, 3), Fraction(1))  # needs c = -1/2
    assert not off.commute_defect(1, 2, f).is_zero()


# -- second-order closed forms ------------------------------------------------

def test_component_sum_closed_form_matches_composition():
    rng = random.Random(11)
    for _ in range(3):
        a = rand_fraction(rng, Fraction(1, 2), 3)
        b = rand_fraction(rng, -1, 1)
        c = rand_fraction(rng, -2, 2)
        if a == 0 or c == -1:
            continue
        ctx = make_ctx(a, b, c)
        f = random_expr(rng, 2, 2)
        assert ctx.sum_components_squared(f) == ctx.sum_components_squared_closed(f)


def test_dirac_squared_closed_form_matches_composition():
    ctx = make_ctx(Fraction(3, 2), Fraction(1, 4), Fraction(1, 2))
    f = random_expr(random.Random(12), 2, 2)
    assert ctx.dirac_squared(f) == ctx.dirac_squared_closed(f)


# -- factorization classification ---------------------------------------------

def test_generic_solutions_factorize_at_nonzero_k():
    dk = DunklContext(z2_power(2, [Fraction(1, 2), Fraction(3, 2)]))
    for par in factorization_solutions_generic(dk.setup.mu):
        ctx = DeformedContext(dk, par)
        for f in monomial_inputs(2, 2):
            assert ctx.factorization_defect(f).is_zero()


def test_zero_k_solutions_factorize():
    for m in (2, 3):
        dk = DunklContext(z2_power(m, [Fraction(0)] * m))
        sols = factorization_solutions_zero_k(m)
        assert len(sols) == (2 if m == 2 else 4)
        for par in sols:
            ctx = DeformedContext(dk, par)
            for f in monomial_inputs(m, 2):
                assert ctx.factorization_defect(f).is_zero()


def test_perturbed_solution_fails_to_factorize():
    dk = DunklContext(z2_power(2, [Fraction(0), Fraction(0)]))
    for par in factorization_solutions_zero_k(2):
        bad = DeformParams(par.a, par.b + Fraction(1, 7), par.c)
        ctx = DeformedContext(dk, bad)
        assert any(not ctx.factorization_defect(f).is_zero()
                   for f in monomial_inputs(2, 2))


def test_generic_solution_set_is_exactly_two_triples():
    sols = factorization_solutions_generic(Fraction(5))
    assert sols == (DeformParams(2, 0, 0), DeformParams(-2, -3, -2))


# -- the commutator ansatz ------------------------------------------------------

def test_ansatz_reproduces_dirac_from_the_commutator():
    dk = DunklContext(symmetric(3, Fraction(1, 2)))
    for a in (Fraction(2), Fraction(4), Fraction(2, 3)):
        par = DeformParams.ansatz(a, dk.setup.mu)
        ctx = DeformedContext(dk, par)
        f = random_expr(random.Random(14), 3, 2)
        assert ctx.dirac_from_commutator(f) == ctx.dirac(f)


def test_ansatz_at_a_two_is_the_dunkl_dirac():
    par = DeformParams.ansatz(2, Fraction(4))
    assert (par.a, par.b, par.c) == (2, 0, 0)
