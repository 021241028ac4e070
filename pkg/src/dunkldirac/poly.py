"""Radially shifted Clifford-valued polynomials.

A :class:`RadialExpr` is a finite sum of terms ``coeff * r^s * x^mono * e_B``
with rational radial exponents ``s``, monomials ``x^mono`` in m variables, and
blade bitmasks ``B`` (see :mod:`dunkldirac.clifford`).  Coefficients are
``Fraction`` or :class:`~dunkldirac.scalars.ExactScalar`.

The representation of a function is not unique: ``r^2 * 1`` and
``r^0 * (x_1^2 + ... + x_m^2)`` are the same thing.  Equality is therefore
decided by a zero test that groups terms into comparability classes (same
blade, same total homogeneity, radial exponents differing by even integers),
lifts every term to the smallest radial exponent by multiplying the polynomial
part with powers of ``sum x_i^2``, and compares coefficient dictionaries.
Operators act per term, so they never need a canonical form themselves.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .clifford import Multivector, blade_product, bar_sign, blade_indices

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def r_squared_power(m: int, j: int) -> tuple:
    """Monomial expansion of (x_1^2 + ... + x_m^2)^j as ((mono, int), ...)."""
    if j == 0:
        return (((0,) * m, 1),)
    prev = dict(r_squared_power(m, j - 1))
    out: dict = {}
    for mono, c in prev.items():
        for i in range(m):
            lifted = mono[:i] + (mono[i] + 2,) + mono[i + 1:]
            out[lifted] = out.get(lifted, 0) + c
    return tuple(out.items())


def _bump(mono: tuple, i: int, by: int = 1) -> tuple:
    return mono[:i] + (mono[i] + by,) + mono[i + 1:]


class RadialExpr:
    """Sparse sum of ``coeff * r^s * x^mono * e_B`` terms."""

    __slots__ = ("m", "terms")
    __hash__ = None

    def __init__(self, m: int, terms=None):
        self.m = m
        self.terms = {}
        for (s, mono, blade), c in (terms or {}).items():
            if not c:
                continue
            key = (Fraction(s), tuple(mono), blade)
            acc = self.terms.get(key)
            c = c if acc is None else acc + c
            if c:
                self.terms[key] = c
            elif acc is not None:
                del self.terms[key]

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, m: int):
        return cls(m)

    @classmethod
    def scalar(cls, m: int, c):
        out = cls(m)
        if c:
            out.terms[(_ZERO, (0,) * m, 0)] = c
        return out

    @classmethod
    def monomial(cls, m: int, mono, coeff=Fraction(1), blade: int = 0, r_exp=_ZERO):
        out = cls(m)
        if coeff:
            out.terms[(Fraction(r_exp), tuple(mono), blade)] = coeff
        return out

    @classmethod
    def variable(cls, m: int, i: int):
        """x_i as an expression (i is 1-based)."""
        return cls.monomial(m, _bump((0,) * m, i - 1))

    @classmethod
    def from_multivector(cls, mv: Multivector):
        out = cls(mv.m)
        for blade, c in mv.comps.items():
            out.terms[(_ZERO, (0,) * mv.m, blade)] = c
        return out

    def copy(self):
        out = RadialExpr(self.m)
        out.terms = dict(self.terms)
        return out

    # -- linear structure -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RadialExpr):
            return NotImplemented
        out = RadialExpr(self.m)
        out.terms = dict(self.terms)
        t = out.terms
        for key, c in other.terms.items():
            acc = t.get(key)
            c = c if acc is None else acc + c
            if c:
                t[key] = c
            elif acc is not None:
                del t[key]
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = RadialExpr(self.m)
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def scale(self, factor):
        out = RadialExpr(self.m)
        if factor:
            out.terms = {k: c * factor for k, c in self.terms.items()}
            out.terms = {k: c for k, c in out.terms.items() if c}
        return out

    def __mul__(self, other):
        if isinstance(other, RadialExpr):
            return self.mul_expr(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # -- multiplicative structure ------------------------------------------

    def mul_expr(self, other: "RadialExpr") -> "RadialExpr":
        """Full product; blades multiply in Cl(0, m), left factor first."""
        if other.m != self.m:
            raise ValueError("dimension mismatch")
        out = RadialExpr(self.m)
        t = out.terms
        for (s1, m1, b1), c1 in self.terms.items():
            for (s2, m2, b2), c2 in other.terms.items():
                sign, b = blade_product(b1, b2)
                key = (s1 + s2, tuple(a + bq for a, bq in zip(m1, m2)), b)
                c = c1 * c2 if sign == 1 else -(c1 * c2)
                acc = t.get(key)
                c = c if acc is None else acc + c
                if c:
                    t[key] = c
                elif acc is not None:
                    del t[key]
        return out

    def mul_radial(self, ds) -> "RadialExpr":
        """Multiply by r^ds."""
        ds = Fraction(ds)
        if not ds:
            return self
        out = RadialExpr(self.m)
        out.terms = {(s + ds, mono, b): c for (s, mono, b), c in self.terms.items()}
        return out

    def mul_x(self, i: int) -> "RadialExpr":
        """Multiply by the coordinate x_i (1-based)."""
        out = RadialExpr(self.m)
        out.terms = {(s, _bump(mono, i - 1), b): c for (s, mono, b), c in self.terms.items()}
        return out

    def vector_mul_left(self, r_shift=_ZERO) -> "RadialExpr":
        """Left multiplication by r^r_shift * sum_i x_i e_i."""
        r_shift = Fraction(r_shift)
        out = RadialExpr(self.m)
        t = out.terms
        for (s, mono, b), c in self.terms.items():
            for i in range(self.m):
                sign, nb = blade_product(1 << i, b)
                key = (s + r_shift, _bump(mono, i), nb)
                cc = c if sign == 1 else -c
                acc = t.get(key)
                cc = cc if acc is None else acc + cc
                if cc:
                    t[key] = cc
                elif acc is not None:
                    del t[key]
        return out

    def blade_mul_left(self, blade: int, coeff=Fraction(1)) -> "RadialExpr":
        out = RadialExpr(self.m)
        t = out.terms
        for (s, mono, b), c in self.terms.items():
            sign, nb = blade_product(blade, b)
            key = (s, mono, nb)
            cc = (c * coeff) if sign == 1 else -(c * coeff)
            acc = t.get(key)
            cc = cc if acc is None else acc + cc
            if cc:
                t[key] = cc
            elif acc is not None:
                del t[key]
        return out

    def blade_mul_right(self, blade: int, coeff=Fraction(1)) -> "RadialExpr":
        out = RadialExpr(self.m)
        t = out.terms
        for (s, mono, b), c in self.terms.items():
            sign, nb = blade_product(b, blade)
            key = (s, mono, nb)
            cc = (c * coeff) if sign == 1 else -(c * coeff)
            acc = t.get(key)
            cc = cc if acc is None else acc + cc
            if cc:
                t[key] = cc
            elif acc is not None:
                del t[key]
        return out

    def bar(self) -> "RadialExpr":
        """Main anti-involution applied to the Clifford part."""
        out = RadialExpr(self.m)
        out.terms = {k: (c if bar_sign(k[2]) == 1 else -c) for k, c in self.terms.items()}
        return out

    def line_canonical(self) -> "RadialExpr":
        """Fold x^2 = r^2 when m = 1, so term degrees match true growth."""
        if self.m != 1:
            return self
        out = RadialExpr(1)
        for (s, mono, blade), coeff in self.terms.items():
            key = (s + 2 * (mono[0] // 2), (mono[0] % 2,), blade)
            cur = out.terms.get(key)
            coeff = coeff if cur is None else cur + coeff
            if coeff:
                out.terms[key] = coeff
            elif cur is not None:
                del out.terms[key]
        return out

    # -- differential/radial operators (representation-independent) ---------

    def euler(self) -> "RadialExpr":
        """E = sum x_i d_i; each term is homogeneous of degree s + |mono|."""
        out = RadialExpr(self.m)
        out.terms = {}
        for (s, mono, b), c in self.terms.items():
            w = s + sum(mono)
            if w:
                out.terms[(s, mono, b)] = c * w
        return out

    def partial_r(self) -> "RadialExpr":
        """Radial derivative d_r = (1/r) E per homogeneous term."""
        out = RadialExpr(self.m)
        for (s, mono, b), c in self.terms.items():
            w = s + sum(mono)
            if w:
                out.terms[(s - 1, mono, b)] = c * w
        return out

    def deriv(self, i: int) -> "RadialExpr":
        """Cartesian partial d_i, including the chain rule through r^s."""
        i -= 1
        out = RadialExpr(self.m)
        t = out.terms
        for (s, mono, b), c in self.terms.items():
            if s:
                key = (s - 2, _bump(mono, i), b)
                cc = c * s
                acc = t.get(key)
                cc = cc if acc is None else acc + cc
                if cc:
                    t[key] = cc
                elif acc is not None:
                    del t[key]
            e = mono[i]
            if e:
                key = (s, _bump(mono, i, -1), b)
                cc = c * e
                acc = t.get(key)
                cc = cc if acc is None else acc + cc
                if cc:
                    t[key] = cc
                elif acc is not None:
                    del t[key]
        return out

    # -- structure, comparison ------------------------------------------

    def select_blade(self, blade: int):
        out = RadialExpr(self.m)
        out.terms = {k: c for k, c in self.terms.items() if k[2] == blade}
        return out

    def blades(self):
        return sorted({k[2] for k in self.terms})

    def homogeneous_components(self) -> dict:
        """Split into Euler-homogeneous parts, keyed by degree s + |mono|."""
        parts: dict = {}
        for (s, mono, b), c in self.terms.items():
            h = s + sum(mono)
            parts.setdefault(h, RadialExpr(self.m)).terms[(s, mono, b)] = c
        return parts

    def poly_degree(self) -> int:
        return max((sum(k[1]) for k in self.terms), default=0)

    def min_r_exp(self) -> Fraction:
        return min((k[0] for k in self.terms), default=_ZERO)

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        classes: dict = {}
        for (s, mono, b), c in self.terms.items():
            h = s + sum(mono)
            classes.setdefault((b, h, s % 2), []).append((s, mono, c))
        for entries in classes.values():
            s0 = min(e[0] for e in entries)
            acc: dict = {}
            for s, mono, c in entries:
                j = (s - s0) / 2
                assert j.denominator == 1 and j >= 0
                for lift, lc in r_squared_power(self.m, int(j)):
                    key = tuple(a + bq for a, bq in zip(mono, lift))
                    cur = acc.get(key)
                    val = c * lc if cur is None else cur + c * lc
                    if val:
                        acc[key] = val
                    elif cur is not None:
                        del acc[key]
            if acc:
                return False
        return True

    def __eq__(self, other):
        if isinstance(other, RadialExpr):
            if other.m != self.m:
                return False
            return (self - other).is_zero()
        if other == 0:
            return self.is_zero()
        return (self - RadialExpr.scalar(self.m, other)).is_zero()

    # -- output -----------------------------------------------------------

    def __repr__(self):
        return self.to_text()

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (s, mono, b) in sorted(self.terms, key=lambda k: (k[0], sum(k[1]), k[1], k[2])):
            c = self.terms[(s, mono, b)]
            factors = []
            if s:
                factors.append(f"r^({s})")
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e:
                    factors.append(f"x{i + 1}^{e}")
            if b:
                factors.append("".join(f"e{i}" for i in blade_indices(b)))
            factors.append(f"({c})")
            bits.append("*".join(factors))
        return " + ".join(bits)

    def to_json(self) -> list:
        by_s: dict = {}
        for (s, mono, b), c in self.terms.items():
            by_s.setdefault(s, {}).setdefault(mono, {})[b] = c
        out = []
        for s in sorted(by_s):
            monos = []
            for mono in sorted(by_s[s]):
                mv = Multivector(self.m, by_s[s][mono])
                monos.append([list(mono), mv.to_json()])
            out.append({"r_exp": str(s), "poly": {"monomials": monos}})
        return out

    @classmethod
    def from_json(cls, m: int, data: list):
        out = cls(m)
        for chunk in data:
            s = Fraction(chunk["r_exp"])
            for mono, mvdata in chunk["poly"]["monomials"]:
                mv = Multivector.from_json(mvdata)
                for blade, c in mv.comps.items():
                    key = (s, tuple(mono), blade)
                    out.terms[key] = out.terms.get(key, _ZERO) + c
        out.terms = {k: c for k, c in out.terms.items() if c}
        return out

    def as_radial_pairs(self):
        """View as [(r_exp, {mono: Multivector})], merging equal exponents."""
        by_s: dict = {}
        for (s, mono, b), c in self.terms.items():
            by_s.setdefault(s, {}).setdefault(mono, {})[b] = c
        return [(s, {mono: Multivector(self.m, comps) for mono, comps in polys.items()})
                for s, polys in sorted(by_s.items())]


def x_vector(m: int) -> RadialExpr:
    """The vector variable x = sum_i x_i e_i."""
    out = RadialExpr(m)
    for i in range(m):
        out.terms[(_ZERO, _bump((0,) * m, i), 1 << i)] = Fraction(1)
    return out
