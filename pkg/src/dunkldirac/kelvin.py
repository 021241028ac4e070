"""Rescaling maps linking the deformed operator to the plain Dunkl picture.

Two term-wise substitutions P and Q turn radial powers r^s times a degree-d
polynomial into their images under the coordinate changes z = (a/2)^{1/a} x
r^{2/a - 1} and y' = (2/a)^{1/2} y r^{a/2 - 1}.  Their composition is the
constant (2/a)^{b/2}, and on the commuting line c = 2/a - 1 they conjugate
the Dunkl Dirac operator into the deformed one.  The Kelvin-type inversion
handles a = -2, the one negative exponent the family reaches.

All prefactors are powers of a/2; (2/a)^x is stored as (a/2)^{-x} so scalars
from both maps live in one exact ring.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .deformed import DeformedContext
from .dunkl import DunklContext
from .params import DeformParams
from .poly import RadialExpr
from .scalars import ExactScalar


def p_map(par: DeformParams, f: RadialExpr) -> RadialExpr:
    """P: r^s p_d -> (a/2)^{(s+d)/a} r^{b + 2s/a + (2/a - 1) d} p_d."""
    a, b = par.a, par.b
    out = RadialExpr(f.m)
    for (s, mono, blade), coeff in f.terms.items():
        d = sum(mono)
        new_s = b + 2 * s / a + (Fraction(2) / a - 1) * d
        factor = ExactScalar.power(a / 2, Fraction(s + d) / a)
        out.terms[(new_s, mono, blade)] = coeff * factor
    return RadialExpr(f.m, out.terms)


def q_map(par: DeformParams, f: RadialExpr) -> RadialExpr:
    """Q: r^s p_d -> (2/a)^{(s+d)/2} r^{-ab/2 + as/2 + (a/2 - 1) d} p_d."""
    a, b = par.a, par.b
    out = RadialExpr(f.m)
    for (s, mono, blade), coeff in f.terms.items():
        d = sum(mono)
        new_s = -a * b / 2 + a * s / 2 + (a / 2 - 1) * d
        factor = ExactScalar.power(a / 2, -Fraction(s + d) / 2)
        out.terms[(new_s, mono, blade)] = coeff * factor
    return RadialExpr(f.m, out.terms)


def pq_constant(par: DeformParams) -> ExactScalar:
    """QP = PQ = (2/a)^{b/2} times the identity."""
    return ExactScalar.power(par.a / 2, -par.b / 2)


def intertwined_component(dctx: DeformedContext, i: int, f: RadialExpr) -> RadialExpr:
    """(a/2)^{(b-1)/2} Q T_i P f, equal to the i-th deformed component.

    Holds exactly on the commuting line c = 2/a - 1 and nowhere else.
    """
    par = dctx.par
    if not par.is_commuting_choice():
        raise ValueError("intertwining needs c = 2/a - 1")
    pre = ExactScalar.power(par.a / 2, (par.b - 1) / 2)
    return q_map(par, dctx.dk.dunkl(i, p_map(par, f))).scale(pre)


def intertwined_dirac(dctx: DeformedContext, f: RadialExpr) -> RadialExpr:
    """(a/2)^{(b-1)/2} Q (Dunkl Dirac) P f on the commuting line."""
    par = dctx.par
    if not par.is_commuting_choice():
        raise ValueError("intertwining needs c = 2/a - 1")
    pre = ExactScalar.power(par.a / 2, (par.b - 1) / 2)
    return q_map(par, dctx.dk.dirac(p_map(par, f))).scale(pre)


def inversion(dk: DunklContext, f: RadialExpr) -> RadialExpr:
    """Kelvin inversion r^s p_d -> r^{2 - mu - s - 2d} p_d; an involution."""
    mu = dk.setup.mu
    out = RadialExpr(f.m)
    for (s, mono, blade), coeff in f.terms.items():
        out.terms[(2 - mu - s - 2 * sum(mono), mono, blade)] = coeff
    return RadialExpr(f.m, out.terms)


def inversion_params(mu) -> DeformParams:
    """The tuple (-2, 2 - mu, -2), conjugate to plain Dunkl Dirac by inversion."""
    return DeformParams(-2, 2 - Fraction(mu), -2)


def dirac_via_inversion(dk: DunklContext, f: RadialExpr) -> RadialExpr:
    """I (Dunkl Dirac) I f, equal to the deformed operator at inversion_params."""
    return inversion(dk, dk.dirac(inversion(dk, f)))


# -- pointwise coordinate maps for numerics ---------------------------------

def p_coordinate_map(par: DeformParams, pts: np.ndarray) -> np.ndarray:
    """z(x) = (a/2)^{1/a} x r^{2/a - 1}, so that (Pf)(x) = r^b f(z(x))."""
    a = float(par.a)
    r = np.sqrt(np.sum(pts * pts, axis=-1, keepdims=True))
    return (a / 2) ** (1 / a) * pts * r ** (2 / a - 1)


def q_coordinate_map(par: DeformParams, pts: np.ndarray) -> np.ndarray:
    """y'(y) = (2/a)^{1/2} y r^{a/2 - 1}, so that (Qg)(y) = r^{-ab/2} g(y'(y))."""
    a = float(par.a)
    r = np.sqrt(np.sum(pts * pts, axis=-1, keepdims=True))
    return (2 / a) ** 0.5 * pts * r ** (a / 2 - 1)


def p_jacobian_det(par: DeformParams, pts: np.ndarray) -> np.ndarray:
    """det(dz/dx) at each point: (a/2)^{m/a} (2/a) r^{(2/a - 1) m}."""
    a = float(par.a)
    m = pts.shape[-1]
    r = np.sqrt(np.sum(pts * pts, axis=-1))
    return (a / 2) ** (m / a) * (2 / a) * r ** ((2 / a - 1) * m)