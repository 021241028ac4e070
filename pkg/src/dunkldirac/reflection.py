"""Finite reflection groups with rational root data.

Roots are stored as primitive integer vectors (one per positive root line)
together with a rational multiplicity per root.  The normalization to
squared length 2 only ever enters through the even power (2/<v,v>)^k in the
weight function, so all operator coefficients stay rational.  Every built-in
family acts by signed coordinate permutations, which keeps reflections of
monomials monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _primitive(vec) -> tuple:
    fr = [Fraction(x) for x in vec]
    if not any(fr):
        raise ValueError("zero root")
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(Fraction(v) for v in ints)


@dataclass(frozen=True)
class ReflectionSetup:
    """A root system fragment: positive root lines plus multiplicities."""

    name: str
    m: int
    roots: tuple
    mults: tuple

    def __post_init__(self):
        if len(self.roots) != len(self.mults):
            raise ValueError("one multiplicity per root")
        for v in self.roots:
            if len(v) != self.m:
                raise ValueError("root dimension mismatch")

    @property
    def gamma(self) -> Fraction:
        return sum(self.mults, Fraction(0))

    @property
    def mu(self) -> Fraction:
        """Effective dimension m + 2 gamma."""
        return self.m + 2 * self.gamma

    def norm2(self, ridx: int) -> Fraction:
        v = self.roots[ridx]
        return sum((x * x for x in v), Fraction(0))

    def reflect_vector(self, ridx: int, vec):
        v = self.roots[ridx]
        ip = sum((a * b for a, b in zip(v, vec)), Fraction(0))
        factor = 2 * ip / self.norm2(ridx)
        return tuple(Fraction(x) - factor * a for x, a in zip(vec, v))

    def reflection_matrix(self, ridx: int):
        cols = []
        for j in range(self.m):
            basis = [Fraction(0)] * self.m
            basis[j] = Fraction(1)
            cols.append(self.reflect_vector(ridx, basis))
        return tuple(tuple(cols[j][i] for j in range(self.m)) for i in range(self.m))

    def signed_permutation(self, ridx: int):
        """(perm, signs) with r(x)_perm[j] = signs[j]*x_j, or None if not of that form."""
        mat = self.reflection_matrix(ridx)
        perm, signs = [], []
        for j in range(self.m):
            col = [mat[i][j] for i in range(self.m)]
            hits = [i for i, v in enumerate(col) if v]
            if len(hits) != 1 or abs(col[hits[0]]) != 1:
                return None
            perm.append(hits[0])
            signs.append(1 if col[hits[0]] > 0 else -1)
        return tuple(perm), tuple(signs)

    def check_invariance(self) -> bool:
        """Each reflection must permute the root lines preserving multiplicities."""
        lines = {_primitive(v): k for v, k in zip(self.roots, self.mults)}
        for ridx in range(len(self.roots)):
            for v, k in lines.items():
                img = _primitive(self.reflect_vector(ridx, v))
                if lines.get(img) != k:
                    return False
        return True

    def weight_exponent(self) -> Fraction:
        """Homogeneity degree 2 gamma of the weight function."""
        return 2 * self.gamma

    def weight_numeric(self, points):
        """prod_alpha |<alpha, x>|^{2 k_alpha} with <alpha,alpha> = 2, per row of points."""
        import numpy as np

        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts[None, :]
        out = np.ones(len(pts))
        for ridx, (v, k) in enumerate(zip(self.roots, self.mults)):
            if not k:
                continue
            varr = np.array([float(x) for x in v])
            scale = 2.0 / float(self.norm2(ridx))
            ip = pts @ varr
            out *= (scale * ip ** 2) ** float(k)
        return out

    def to_config(self) -> dict:
        return {
            "family": self.name,
            "m": self.m,
            "roots": [[str(x) for x in v] for v in self.roots],
            "mults": [str(k) for k in self.mults],
        }


def z2_power(m: int, ks) -> ReflectionSetup:
    """Z_2^m: sign flips of the coordinates, one multiplicity per axis."""
    if isinstance(ks, (int, str, Fraction)):
        ks = [ks] * m
    if len(ks) != m:
        raise ValueError("need one multiplicity per coordinate")
    roots = []
    for i in range(m):
        v = [Fraction(0)] * m
        v[i] = Fraction(1)
        roots.append(tuple(v))
    return ReflectionSetup("z2^m", m, tuple(roots), tuple(Fraction(k) for k in ks))


def symmetric(m: int, k) -> ReflectionSetup:
    """S_m acting on R^m by coordinate permutations (type A_{m-1} roots)."""
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            v = [Fraction(0)] * m
            v[i], v[j] = Fraction(1), Fraction(-1)
            roots.append(tuple(v))
    return ReflectionSetup("symmetric", m, tuple(roots), tuple([Fraction(k)] * len(roots)))


def hyperoctahedral(m: int, k_short, k_long) -> ReflectionSetup:
    """B_m: sign flips (short roots e_i) and signed transpositions (long e_i +- e_j)."""
    roots, mults = [], []
    for i in range(m):
        v = [Fraction(0)] * m
        v[i] = Fraction(1)
        roots.append(tuple(v))
        mults.append(Fraction(k_short))
    for i in range(m):
        for j in range(i + 1, m):
            for sgn in (1, -1):
                v = [Fraction(0)] * m
                v[i], v[j] = Fraction(1), Fraction(sgn)
                roots.append(tuple(v))
                mults.append(Fraction(k_long))
    return ReflectionSetup("hyperoctahedral", m, tuple(roots), tuple(mults))


def dihedral(n: int, k1, k2=None) -> ReflectionSetup:
    """I_2(n) in the plane, for the n with rational root coordinates.

    Only n = 2 (two perpendicular mirrors) and n = 4 (the square's symmetry
    group) have rational roots in an orthogonal embedding; other n need
    surds, which the exact layer does not represent.
    """
    if n == 2:
        return z2_power(2, [k1, k1 if k2 is None else k2])
    if n == 4:
        return hyperoctahedral(2, k1, k1 if k2 is None else k2)
    raise ValueError(f"I2({n}) has irrational root coordinates; only n in {{2, 4}} supported")


def from_config(cfg: dict) -> ReflectionSetup:
    fam = cfg["family"].lower()
    if fam in ("z2^m", "z2", "z2m"):
        return z2_power(int(cfg["m"]), [Fraction(k) for k in cfg["k"]]
                        if isinstance(cfg["k"], list) else Fraction(cfg["k"]))
    if fam in ("symmetric", "a"):
        return symmetric(int(cfg["m"]), Fraction(cfg["k"]))
    if fam in ("hyperoctahedral", "b"):
        ks = cfg["k"]
        if not isinstance(ks, list) or len(ks) != 2:
            raise ValueError("hyperoctahedral needs k = [k_short, k_long]")
        return hyperoctahedral(int(cfg["m"]), Fraction(ks[0]), Fraction(ks[1]))
    if fam in ("dihedral", "i2"):
        ks = cfg["k"]
        ks = ks if isinstance(ks, list) else [ks]
        return dihedral(int(cfg["n"]), *[Fraction(k) for k in ks])
    raise ValueError(f"unknown family {cfg['family']!r}")


@lru_cache(maxsize=None)
def reflect_monomial(setup: ReflectionSetup, ridx: int, mono: tuple):
    """x^mono composed with the reflection, as a monomial->coeff map.

    For the built-in families the result is a single signed monomial, but the
    expansion below handles any rational reflection.
    """
    mat = setup.reflection_matrix(ridx)
    acc = {(0,) * setup.m: Fraction(1)}
    for i, e in enumerate(mono):
        if not e:
            continue
        row = mat[i]
        lin = {}
        for j, a in enumerate(row):
            if a:
                key = tuple(1 if t == j else 0 for t in range(setup.m))
                lin[key] = a
        for _ in range(e):
            nxt: dict = {}
            for mo, c in acc.items():
                for lo, lc in lin.items():
                    key = tuple(x + y for x, y in zip(mo, lo))
                    nxt[key] = nxt.get(key, Fraction(0)) + c * lc
            acc = nxt
    return {k: v for k, v in acc.items() if v}
