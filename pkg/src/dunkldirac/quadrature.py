"""Gauss-type quadrature adapted to the damped radial measure.

The substitution u = lam r^a / a turns the radial factor into a generalized
Laguerre weight, so polynomials in r^a integrate exactly on a small rule.
Fractional powers of r are never evaluated blindly against a mismatched
weight: known exponents get folded into the rule, and integrands mixing
several residue classes mod a are split so each class meets a rule with the
right endpoint exponent.  Skipping that folding costs eight digits.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.special import roots_genlaguerre, roots_jacobi

from .clifford import blade_product
from .measure import axis_multiplicities
from .poly import RadialExpr
from .reflection import ReflectionSetup


def radial_rule(a, lam, exponent, n: int):
    """Nodes and weights with sum f(r_i) W_i ~ int_0^inf f(r) r^exponent e^{-lam r^a/a} dr.

    Exact (up to roundoff) whenever f is a polynomial in r^a of degree
    below 2n.  Requires a > 0 and exponent > -1.
    """
    a, lam, exponent = float(a), float(lam), float(exponent)
    if a <= 0:
        raise ValueError("radial rule needs a > 0")
    alpha = (exponent + 1) / a - 1
    if alpha <= -1:
        raise ValueError(f"divergent at origin: exponent {exponent} <= -1")
    u, w = roots_genlaguerre(n, alpha)
    r = (a * u / lam) ** (1 / a)
    W = (1 / a) * (a / lam) ** ((exponent + 1) / a) * w
    return r, W


def sphere_rule(m: int, n_ang: int):
    """Directions and weights for int_{S^{m-1}} f dsigma, m in {1, 2, 3}.

    m = 1 is the two-point set, m = 2 the trapezoid rule (exact through
    trigonometric degree n_ang - 1), m = 3 Gauss-Legendre in cos(theta)
    crossed with the trapezoid in phi.
    """
    if m == 1:
        return np.array([[1.0], [-1.0]]), np.array([1.0, 1.0])
    if m == 2:
        th = 2 * np.pi * np.arange(n_ang) / n_ang
        dirs = np.stack([np.cos(th), np.sin(th)], axis=1)
        return dirs, np.full(n_ang, 2 * np.pi / n_ang)
    if m == 3:
        t, wt = np.polynomial.legendre.leggauss(n_ang)
        ph = 2 * np.pi * np.arange(n_ang) / n_ang
        st = np.sqrt(1 - t**2)
        dirs = np.stack([
            np.outer(st, np.cos(ph)).ravel(),
            np.outer(st, np.sin(ph)).ravel(),
            np.repeat(t, n_ang),
        ], axis=1)
        return dirs, np.outer(wt, np.full(n_ang, 2 * np.pi / n_ang)).ravel()
    raise ValueError("sphere rule implemented for m <= 3")


def circle_rule(k1, k2, n: int):
    """Directions and weights for int_{S^1} f(xi) (2 xi_1^2)^{k1} (2 xi_2^2)^{k2} dsigma.

    Gauss-Jacobi in t = xi_1^2 on one quadrant, mirrored over all four sign
    choices, so the weight's kinks on the axes never meet the rule.  Exact
    for f polynomial of degree below about 4n; odd parts vanish by symmetry.
    """
    u, w = roots_jacobi(n, float(k2) - 0.5, float(k1) - 0.5)
    t = (1 + u) / 2
    x1, x2 = np.sqrt(t), np.sqrt(1 - t)
    signs = np.array([[1, 1], [-1, 1], [1, -1], [-1, -1]], dtype=float)
    dirs = signs[:, None, :] * np.stack([x1, x2], axis=1)[None, :, :]
    wts = np.broadcast_to(w / 2, (4, n))
    return dirs.reshape(-1, 2), wts.reshape(-1).copy()


def weighted_grid(setup: ReflectionSetup, a, lam, extra=0, n_r: int = 60,
                  n_ang: int = 80):
    """Points and weights with sum f(p_i) w_i ~ int f(x) r^extra w_k(x) e^{-lam r^a/a} dx.

    The reflection weight, the sphere measure r^{m-1}, and the folded extra
    exponent all live in the weights; f is evaluated bare.  On the circle
    with sign-flip weights the angular rule is the exact Jacobi one.
    """
    m = setup.m
    exponent = 2 * setup.gamma + (m - 1) + Fraction(extra)
    r, W = radial_rule(a, lam, exponent, n_r)
    ks = axis_multiplicities(setup) if m == 2 else None
    if ks is not None and any(ks):
        dirs, ws = circle_rule(ks[0], ks[1], n_ang)
    else:
        dirs, ws = sphere_rule(m, n_ang)
        ws = ws * setup.weight_numeric(dirs)
    pts = r[:, None, None] * dirs[None, :, :]
    wts = W[:, None] * ws[None, :]
    return pts.reshape(-1, m), wts.ravel()


def evaluate(expr: RadialExpr, pts: np.ndarray) -> np.ndarray:
    """Values of expr at each point, one column per blade: shape (N, 2^m)."""
    N = pts.shape[0]
    out = np.zeros((N, 1 << expr.m))
    r = np.sqrt(np.sum(pts * pts, axis=1))
    for (s, mono, blade), coeff in expr.terms.items():
        vals = np.full(N, float(coeff))
        if s:
            vals = vals * r ** float(s)
        for i, e in enumerate(mono):
            if e:
                vals = vals * pts[:, i] ** e
        out[:, blade] += vals
    return out


def vector_mul_values(pts: np.ndarray, vals: np.ndarray, r_shift=0) -> np.ndarray:
    """Pointwise left product (r^r_shift sum_i x_i e_i) * vals on blade columns."""
    nblades = vals.shape[1]
    out = np.zeros_like(vals)
    for blade in range(nblades):
        col = vals[:, blade]
        if not np.any(col):
            continue
        for i in range(pts.shape[1]):
            sign, res = blade_product(1 << i, blade)
            out[:, res] += sign * pts[:, i] * col
    if r_shift:
        r = np.sqrt(np.sum(pts * pts, axis=1))
        out = out * (r ** float(r_shift))[:, None]
    return out


def paired_classes(expr: RadialExpr, half) -> list:
    """Split expr for rules whose oscillation lives in v = r^half.

    Against a phase factor in v summed over antipodal direction pairs, a
    term v^n xi^mono survives with the even (cos) or odd (sin) part of the
    phase according to |mono|'s parity, and the paired sum is analytic in
    v^2 exactly when n + |mono| is even.  Terms are grouped by (n mod 2,
    parity) and each group is rebased so that what remains against its
    matched weight is analytic, restoring superalgebraic convergence.

    Returns (fold, part) pairs with expr = sum of r^fold * part.
    """
    half = Fraction(half)
    classes: dict = {}
    for (s, mono, blade), coeff in expr.line_canonical().terms.items():
        n_v = (Fraction(s) + sum(mono)) / half
        key = (n_v - 2 * (n_v // 2), sum(mono) % 2)
        classes.setdefault(key, []).append((n_v, (s, mono, blade), coeff))
    out = []
    for (_rho, parity), group in classes.items():
        fold = half * (min(nv for nv, _key, _c in group) + parity)
        part = RadialExpr(expr.m, {(s - fold, mono, blade): c
                                   for _nv, (s, mono, blade), c in group})
        out.append((fold, part))
    return out


def integrate_expr(setup: ReflectionSetup, expr: RadialExpr, a, lam, extra=0,
                   n_r: int = 60, n_ang: int = 80) -> np.ndarray:
    """int expr(x) r^extra w_k e^{-lam r^a/a} dx, one entry per blade.

    Terms are grouped by their total radial degree mod a, each group is
    rebased at its lowest degree (folded into the rule's weight), and what
    remains is a polynomial in r^a against a matched weight, so each group
    integrates exactly.
    """
    a = Fraction(a)
    classes: dict = {}
    for (s, mono, blade), coeff in expr.line_canonical().terms.items():
        total = Fraction(s) + sum(mono)
        rho = total - a * (total // a)
        classes.setdefault(rho, []).append((total, (s, mono, blade), coeff))
    out = np.zeros(1 << expr.m)
    for group in classes.values():
        base = min(total for total, _key, _c in group)
        terms = {(s - base, mono, blade): c for _t, (s, mono, blade), c in group}
        pts, wts = weighted_grid(setup, a, lam, Fraction(extra) + base, n_r, n_ang)
        out += wts @ evaluate(RadialExpr(expr.m, terms), pts)
    return out