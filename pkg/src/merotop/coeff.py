"""Exact coefficient arithmetic.

Three layers, all exact and immutable:

* ``Rat`` -- arbitrary-precision rationals.  This is ``fractions.Fraction``,
  which already maintains the canonical form (reduced, positive
  denominator, zero is 0/1).
* :class:`UniPoly` -- univariate polynomials over the rationals, used for
  parameter polynomials, resultants and discriminant-style bookkeeping.
* :class:`ParamRat` -- the rational-function field in one named parameter,
  used to carry a generic deformation parameter through a computation.

No floating point is used anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, isqrt

from .errors import PoleAtValue, ZeroInput

Rat = Fraction


class UniPoly:
    """Dense univariate polynomial over Q.

    Coefficients are indexed by degree; trailing zeros are stripped so the
    leading coefficient is nonzero unless the polynomial is zero.  The
    degree of the zero polynomial is reported as -1, standing in for the
    usual "minus infinity" convention (no genuine degree is ever negative).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "UniPoly":
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            )
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self or not other:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly"):
        """Exact field division: returns (quotient, remainder)."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        dlead = other.coeffs[-1]
        dn = len(other.coeffs)
        while len(rem) >= dn:
            c = rem[-1] / dlead
            k = len(rem) - dn
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(q), UniPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def leading_coeff(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> "UniPoly":
        if not self:
            return self
        lc = self.coeffs[-1]
        return UniPoly(tuple(c / lc for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, v) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift_right(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if not self:
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def __repr__(self) -> str:
        if not self:
            return "UniPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*s^{i}" if i else f"{c}")
        return "UniPoly(" + " + ".join(parts) + ")"


def _as_unipoly(v):
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return UniPoly.const(v)
    return NotImplemented


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor in Q[x]; uni_gcd(a, 0) = monic(a)."""
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_part(a: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of ``a``.

    Raises ZeroInput on the zero polynomial.  In characteristic zero this
    is a / gcd(a, a') up to a scalar.
    """
    if not a:
        raise ZeroInput("squarefree_part of the zero polynomial")
    g = uni_gcd(a, a.derivative())
    q, r = a.divmod(g)
    assert not r
    return q.monic()


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _primitive_int_coeffs(a: UniPoly):
    """Integer coefficient vector with content 1, same roots as ``a``."""
    denom_lcm = 1
    for c in a.coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in a.coeffs]
    content = 0
    for v in ints:
        content = gcd(content, v)
    return [v // content for v in ints]


def rational_roots(a: UniPoly) -> set:
    """The exact set of rational roots of ``a``, each listed once.

    Candidates come from the rational-root bound on the primitive integer
    form; every candidate is verified by exact evaluation.  Found roots are
    deflated out so the divisor enumeration stays on small coefficients.
    """
    if not a:
        raise ZeroInput("rational_roots of the zero polynomial")
    p = squarefree_part(a)
    roots = set()
    # split off the root at zero
    k = 0
    while k < len(p.coeffs) and p.coeffs[k] == 0:
        k += 1
    if k > 0:
        roots.add(Fraction(0))
        p = UniPoly(p.coeffs[k:])
    while p.degree >= 1:
        ints = _primitive_int_coeffs(p)
        a0, ad = ints[0], ints[-1]
        found = None
        candidates = sorted(
            (
                Fraction(sign * num, den)
                for num in _divisors(a0)
                for den in _divisors(ad)
                for sign in (1, -1)
            ),
            key=lambda q: (abs(q.numerator) + q.denominator),
        )
        for cand in candidates:
            if p(cand) == 0:
                found = cand
                break
        if found is None:
            break
        roots.add(found)
        p, r = p.divmod(UniPoly((-found, 1)))
        assert not r
    return roots


class ParamRat:
    """Element of Q(s) for one named parameter symbol ``sym``.

    Stored as a reduced fraction num/den of :class:`UniPoly` with monic
    denominator, so equality of values is equality of representations.
    """

    __slots__ = ("num", "den", "sym")

    def __init__(self, num, den=None, sym: str = "t"):
        num = _as_unipoly(num)
        den = UniPoly.const(1) if den is None else _as_unipoly(den)
        if not den:
            raise ZeroDivisionError("zero denominator in ParamRat")
        if num:
            g = uni_gcd(num, den)
            num, den = num // g, den // g
        else:
            den = UniPoly.const(1)
        lc = den.leading_coeff()
        self.num = num * (1 / lc)
        self.den = den.monic()
        self.sym = sym

    @classmethod
    def variable(cls, sym: str = "t") -> "ParamRat":
        return cls(UniPoly.x(), sym=sym)

    @classmethod
    def const(cls, c, sym: str = "t") -> "ParamRat":
        return cls(UniPoly.const(c), sym=sym)

    def __bool__(self) -> bool:
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, ParamRat):
            nonconst = other.num.degree > 0 or other.den.degree > 0
            if other.sym != self.sym and nonconst:
                raise ValueError("mixed parameter symbols")
            return other
        if isinstance(other, (int, Fraction)):
            return ParamRat.const(other, sym=self.sym)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self):
        return ParamRat(-self.num, self.den, sym=self.sym)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ParamRat(self.num * o.den + o.num * self.den, self.den * o.den, sym=self.sym)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ParamRat(self.num * o.num, self.den * o.den, sym=self.sym)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero in Q(%s)" % self.sym)
        return ParamRat(self.num * o.den, self.den * o.num, sym=self.sym)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __repr__(self) -> str:
        if self.den == UniPoly.const(1):
            return f"ParamRat({self.num!r})"
        return f"ParamRat({self.num!r} / {self.den!r})"


def param_specialize(r: ParamRat, v: Rat) -> Rat:
    """Evaluate a rational function at a rational parameter value.

    Raises PoleAtValue when the (reduced) denominator vanishes at ``v``;
    the caller is expected to pick a different specialization.
    """
    v = Fraction(v)
    dv = r.den(v)
    if dv == 0:
        raise PoleAtValue(f"denominator vanishes at {v}")
    return r.num(v) / dv


def seeded_fractions(seed: int, count: int, max_num: int = 9, max_den: int = 4):
    """Deterministic stream of small nonzero rationals for spot checks."""
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        num = rng.randint(-max_num, max_num)
        if num == 0:
            continue
        out.append(Fraction(num, rng.randint(1, max_den)))
    return out


def distinct_integers_avoiding(excluded, count: int, start: int = 1):
    """First ``count`` positive integers (as Fractions) not in ``excluded``."""
    excluded = set(excluded)
    out = []
    for k in itertools.count(start):
        v = Fraction(k)
        if v not in excluded:
            out.append(v)
            if len(out) == count:
                return out
