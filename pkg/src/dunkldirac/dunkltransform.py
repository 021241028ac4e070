"""Dunkl transform with a nontrivial reflection weight, by series.

No closed kernel exists once the multiplicity is switched on, but the
bihomogeneous components K_n built by :meth:`DunklContext.kernel_series`
converge like an exponential's Taylor series, so

    F f(y) = c_k^{-1} int f(x) E(x, -i y) w_k(x) dx,
    E(x, -i y) = sum_n (-i)^n K_n(x, y),

truncated near order thirty is accurate to square-summable noise against
Gaussian-damped inputs on moderate balls.  The natural eigenfunctions are

    L_j^{mu/2 + ell - 1}(r^2) H_ell(x) e^{-r^2/2},

H_ell harmonic for the Dunkl Laplacian, with eigenvalue (-i)^{2j + ell}.

The same machinery reaches two relatives: the a = -2 realization, whose
transform is the conjugate of this one by the inversion x -> x/r^2, and the
deformed transform on the commuting line c = 2/a - 1, which the radial
reparametrizations P and Q reduce to the a = 2 case.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .deformed import DeformedContext
from .dunkl import DunklContext
from .kelvin import inversion, p_map, q_coordinate_map
from .laguerre import laguerre_poly
from .measure import mehta_constant
from .poly import RadialExpr
from .quadrature import evaluate, paired_classes, weighted_grid
from .reflection import ReflectionSetup
from .scalars import ExactScalar


def _series(dk: DunklContext, order: int) -> list:
    """Kernel components through the requested order, cached on the context."""
    cache = getattr(dk, "_series_cache", None)
    if cache is None or len(cache) <= order:
        cache = dk.kernel_series(order)
        dk._series_cache = cache
    return cache[: order + 1]


def _mono_values(P: np.ndarray, monos: list) -> np.ndarray:
    npts, m = P.shape
    maxd = max((max(mo) for mo in monos), default=0)
    pows = [np.power.outer(P[:, i], np.arange(maxd + 1)) for i in range(m)]
    out = np.empty((npts, len(monos)))
    for col, mo in enumerate(monos):
        acc = pows[0][:, mo[0]].copy()
        for i in range(1, m):
            acc *= pows[i][:, mo[i]]
        out[:, col] = acc
    return out


def kernel_matrix(dk: DunklContext, X: np.ndarray, Y: np.ndarray,
                  order: int) -> np.ndarray:
    """E(x, -i y) truncated at the given order, for every row pair.

    Returns a complex (len(X), len(Y)) array.  The (-i)^n weights are
    folded into one coefficient matrix so the evaluation is two matmuls.
    """
    series = _series(dk, order)
    xmonos = sorted({xm for level in series for (xm, _ym) in level})
    ymonos = sorted({ym for level in series for (_xm, ym) in level})
    xi = {mo: t for t, mo in enumerate(xmonos)}
    yi = {mo: t for t, mo in enumerate(ymonos)}
    C = np.zeros((len(xmonos), len(ymonos)), dtype=complex)
    for n, level in enumerate(series):
        w = (-1j) ** (n % 4)
        for (xm, ym), c in level.items():
            C[xi[xm], yi[ym]] += w * float(c)
    return _mono_values(X, xmonos) @ C @ _mono_values(Y, ymonos).T


def normalization(setup: ReflectionSetup, n_r: int = 60, n_ang: int = 64) -> float:
    """c_k = int e^{-|x|^2/2} w_k dx; closed product where known, else the grid."""
    try:
        return float(mehta_constant(setup).numeric())
    except ValueError:
        _pts, wts = weighted_grid(setup, 2, 1, 0, n_r, n_ang)
        return float(np.sum(wts))


def transform_values(dk: DunklContext, f: RadialExpr, targets: np.ndarray,
                     order: int = 28, n_r: int = 60, n_ang: int = 64) -> np.ndarray:
    """Transform of f e^{-r^2/2} at the target points, one column per blade."""
    setup = dk.setup
    targets = np.asarray(targets, dtype=float)
    out = np.zeros((len(targets), 1 << setup.m), dtype=complex)
    for fold, part in paired_classes(f, 1):
        pts, wts = weighted_grid(setup, 2, 1, fold, n_r, n_ang)
        vals = evaluate(part, pts)
        M = kernel_matrix(dk, pts, targets, order)
        out += np.einsum("p,pb,pt->tb", wts, vals, M)
    return out / normalization(setup, n_r, n_ang)


def eigenfunction(dk: DunklContext, j: int, ell: int,
                  harmonic: RadialExpr) -> RadialExpr:
    """L_j^{mu/2 + ell - 1}(r^2) times a degree-ell harmonic.

    Against the implicit e^{-r^2/2} this transforms into itself times
    (-i)^{2j + ell}; see :func:`eigenvalue`.
    """
    alpha = Fraction(dk.setup.mu, 2) + ell - 1
    out = RadialExpr(dk.setup.m)
    for p, c in enumerate(laguerre_poly(j, alpha)):
        if c:
            out = out + harmonic.scale(c).mul_radial(2 * p)
    return out


def eigenvalue(j: int, ell: int) -> complex:
    return (-1j) ** ((2 * j + ell) % 4)


def transform_inverted(dk: DunklContext, g: RadialExpr, targets: np.ndarray,
                       order: int = 28, n_r: int = 60, n_ang: int = 64) -> np.ndarray:
    """a = -2 transform of g e^{-1/(2 r^2)} by conjugating with the inversion.

    The inversion J f(x) = r^{2 - mu} f(x / r^2) swaps the a = 2 and a = -2
    realizations, so the a = -2 transform is J o F o J:

        F_{-2} G (y) = r_y^{2 - mu} (F (J g) e^{-r^2/2})(y / r_y^2),

    where J carries the near-origin damping e^{-1/(2 r^2)} to the Gaussian.
    """
    mu = float(dk.setup.mu)
    r2 = np.sum(np.asarray(targets, dtype=float) ** 2, axis=1)
    inv_targets = targets / r2[:, None]
    vals = transform_values(dk, inversion(dk, g), inv_targets, order, n_r, n_ang)
    return vals * (r2 ** ((2 - mu) / 2))[:, None]


def transform_inverted_direct(dk: DunklContext, g: RadialExpr, targets: np.ndarray,
                              order: int = 28, n_r: int = 60,
                              n_ang: int = 64) -> np.ndarray:
    """The same a = -2 transform, integrating where g lives.

        F_{-2} G (y) = c_k^{-1} r_y^{2 - mu}
                       int g(v) E(v/r_v^2, -i y/r_y^2) r_v^{-mu - 2}
                           w_k(v) e^{-1/(2 r_v^2)} dv.

    Substituting v = x / r_x^2 turns the radial rule back into the Gaussian
    one, so the nodes are the standard grid's images under the inversion and
    g is evaluated there pointwise, never rewritten algebraically.  Agreement
    with :func:`transform_inverted` checks the two routes against each other.
    """
    setup = dk.setup
    mu = setup.mu
    targets = np.asarray(targets, dtype=float)
    r2t = np.sum(targets * targets, axis=1)
    inv_targets = targets / r2t[:, None]
    out = np.zeros((len(targets), 1 << setup.m), dtype=complex)
    # Group by the growth of each term's pullback under the substitution,
    # which is what the Gaussian grid actually sees.
    classes: dict = {}
    for (s, mono, blade), coeff in g.line_canonical().terms.items():
        n_x = -(Fraction(s) + sum(mono))
        key = (n_x - 2 * (n_x // 2), sum(mono) % 2)
        classes.setdefault(key, []).append((n_x, (s, mono, blade), coeff))
    for (_rho, parity), group in classes.items():
        fold = min(nx for nx, _key, _c in group) + parity
        part = RadialExpr(setup.m, {key: c for _nx, key, c in group})
        pts, wts = weighted_grid(setup, 2, 1, 2 - mu + fold, n_r, n_ang)
        r2 = np.sum(pts * pts, axis=1)
        inv_pts = pts / r2[:, None]
        vals = evaluate(part, inv_pts) * (r2 ** (-float(fold) / 2))[:, None]
        M = kernel_matrix(dk, pts, inv_targets, order)
        out += np.einsum("p,pb,pt->tb", wts, vals, M)
    out /= normalization(setup, n_r, n_ang)
    return out * (r2t ** ((2 - float(mu)) / 2))[:, None]


def inverted_damped_values(dk: DunklContext, g: RadialExpr,
                           targets: np.ndarray) -> np.ndarray:
    """g e^{-1/(2 r^2)} at the targets, the a = -2 counterpart of a damped tower."""
    targets = np.asarray(targets, dtype=float)
    r2 = np.sum(targets * targets, axis=1)
    return evaluate(g, targets) * np.exp(-0.5 / r2)[:, None]


def deformed_transform(dctx: DeformedContext, psi: RadialExpr, targets: np.ndarray,
                       order: int = 28, n_r: int = 60, n_ang: int = 64) -> np.ndarray:
    """Deformed transform of psi e^{-r^a/a} with any sign-flip weight.

    Only on the commuting line c = 2/a - 1, where the reparametrization P
    carries psi e^{-r^a/a} to (P psi) e^{-r^2/2} and its inverse Q carries
    the transform back:

        F_D = (a/2)^{b/2} Q_y F P_x,

    with (Q h)(y) = r_y^{-ab/2} h((2/a)^{1/2} y r_y^{a/2 - 1}).  For the
    trivial weight this must match the closed-kernel route in
    :func:`dunkldirac.fourier.fourier_apply`.
    """
    par = dctx.par
    if not par.is_commuting_choice():
        raise ValueError("reduction to the a = 2 transform needs c = 2/a - 1")
    a, b = float(par.a), float(par.b)
    targets = np.asarray(targets, dtype=float)
    fz = p_map(par, psi)
    vals = transform_values(dctx.dk, fz, q_coordinate_map(par, targets),
                            order, n_r, n_ang)
    pre = float(ExactScalar.power(par.a / 2, par.b / 2))
    r_tgt = np.sqrt(np.sum(targets * targets, axis=1))
    return vals * pre * (r_tgt ** (-a * b / 2))[:, None]
