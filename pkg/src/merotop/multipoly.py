"""Sparse multivariate polynomials over an exact coefficient field.

Monomials are plain exponent tuples; a polynomial is a map from exponent
tuple to nonzero coefficient.  Coefficients are either ``Fraction`` (the
field Q) or :class:`~merotop.coeff.ParamRat` (the field Q(t) of rational
functions in one parameter); the two kinds are never mixed inside one
polynomial, but the arithmetic is written generically so both work.

The module also provides the local monomial order used by the standard
basis engine, calculus and substitution operations, and bivariate
gcd/resultant built on a polynomial remainder sequence.
"""

from __future__ import annotations

from fractions import Fraction

from .coeff import ParamRat, UniPoly, uni_gcd
from .errors import ArityMismatch, IndexOutOfRange, WrongArity, ZeroInput

Monomial = tuple  # exponent tuples of fixed length nvars


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


class LocalOrder:
    """Anti-graded reverse lexicographic order.

    Monomials of smaller total degree are larger; ties are broken by the
    reverse lexicographic rule.  The constant monomial 1 is the unique
    maximum, and the order is compatible with multiplication, which is
    what the Mora normal form requires.
    """

    @staticmethod
    def key(m: Monomial):
        # Sorting by this key ascending lists monomials from largest to
        # smallest in the order.
        return (sum(m), tuple(reversed(m)))

    @classmethod
    def greater(cls, a: Monomial, b: Monomial) -> bool:
        return cls.key(a) < cls.key(b)

    @classmethod
    def max(cls, monomials):
        return min(monomials, key=cls.key)


LOCAL_ORDER = LocalOrder()


def _as_coeff(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class MPoly:
    """Sparse polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, coeff in terms.items() if isinstance(terms, dict) else terms:
                coeff = _as_coeff(coeff)
                if not coeff:
                    continue
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ArityMismatch(f"monomial {mono} has arity != {nvars}")
                acc = clean.get(mono)
                if acc is None:
                    clean[mono] = coeff
                else:
                    acc = acc + coeff
                    if acc:
                        clean[mono] = acc
                    else:
                        del clean[mono]
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MPoly":
        if not 0 <= i < nvars:
            raise IndexOutOfRange(f"variable index {i} out of range")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, nvars: int, expts, c=1) -> "MPoly":
        return cls(nvars, {tuple(expts): c})

    # -- basic queries -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Maximal total degree of a term, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            return -1
        return min(sum(m) for m in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_term(self, order=LOCAL_ORDER):
        """(monomial, coefficient) of the largest term in the order."""
        if not self.terms:
            raise ZeroInput("leading term of zero polynomial")
        m = order.max(self.terms.keys())
        return m, self.terms[m]

    # -- ring operations ----------------------------------------------

    def _check_arity(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ParamRat)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_arity(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc = acc + c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
        p = MPoly.__new__(MPoly)
        p.nvars = self.nvars
        p.terms = out
        return p

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ParamRat)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ParamRat)):
            other = _as_coeff(other)
            if not other:
                return MPoly.zero(self.nvars)
            return MPoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_arity(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                acc = out.get(m)
                if acc is None:
                    out[m] = c
                else:
                    acc = acc + c
                    if acc:
                        out[m] = acc
                    else:
                        del out[m]
        p = MPoly.__new__(MPoly)
        p.nvars = self.nvars
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = MPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_coeffs(self, fn) -> "MPoly":
        return MPoly(self.nvars, {m: fn(c) for m, c in self.terms.items()})

    def evaluate(self, point):
        """Exact evaluation at a tuple of coefficient values."""
        if len(point) != self.nvars:
            raise ArityMismatch("point arity mismatch")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for e, x in zip(m, point):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "MPoly(0)"
        names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for m in sorted(self.terms, key=LocalOrder.key):
            c = self.terms[m]
            factors = [f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(m) if e]
            body = "*".join(factors)
            parts.append(f"{c}*{body}" if body else f"{c}")
        return "MPoly(" + " + ".join(parts) + ")"


def partial_derivative(p: MPoly, var_index: int) -> MPoly:
    """Formal partial derivative with respect to one variable."""
    if not 0 <= var_index < p.nvars:
        raise IndexOutOfRange(f"variable index {var_index} out of range for {p.nvars} variables")
    out = {}
    for m, c in p.terms.items():
        e = m[var_index]
        if e:
            m2 = m[:var_index] + (e - 1,) + m[var_index + 1 :]
            out[m2] = c * e if m2 not in out else out[m2] + c * e
    return MPoly(p.nvars, out)


def gradient(p: MPoly):
    return [partial_derivative(p, i) for i in range(p.nvars)]


def substitute(p: MPoly, assignment) -> MPoly:
    """Compose ``p`` with one polynomial per variable (a ring homomorphism).

    All assignment polynomials must share a common variable count, which
    becomes the variable count of the result.
    """
    assignment = list(assignment)
    if len(assignment) != p.nvars:
        raise ArityMismatch(f"need {p.nvars} assignment polynomials, got {len(assignment)}")
    nv = assignment[0].nvars
    for q in assignment:
        if q.nvars != nv:
            raise ArityMismatch("assignment polynomials disagree on variable count")
    # cache powers per variable
    powers = [{0: MPoly.constant(nv, 1)} for _ in range(p.nvars)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * assignment[i]
        return cache[e]

    total = MPoly.zero(nv)
    for m, c in p.terms.items():
        term = MPoly.constant(nv, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


def homogenize(p: MPoly, degree: int | None = None) -> MPoly:
    """Append one variable and pad every term up to ``degree``.

    With the default degree (the total degree of ``p``) this is the usual
    projective homogenization; the new variable is the last one.
    """
    if not p:
        return MPoly.zero(p.nvars + 1)
    d = p.total_degree() if degree is None else degree
    if d < p.total_degree():
        raise ValueError("homogenization degree below the total degree")
    return MPoly(p.nvars + 1, {m + (d - sum(m),): c for m, c in p.terms.items()})


def dehomogenize(p: MPoly, var_index: int) -> MPoly:
    """Set one variable to 1 and drop it."""
    if not 0 <= var_index < p.nvars:
        raise IndexOutOfRange("chart variable out of range")
    out = {}
    for m, c in p.terms.items():
        m2 = m[:var_index] + m[var_index + 1 :]
        out[m2] = c if m2 not in out else out[m2] + c
    return MPoly(p.nvars - 1, out)


def translate(p: MPoly, point) -> MPoly:
    """Substitute x_i -> x_i + point_i, moving ``point`` to the origin."""
    assignment = [
        MPoly.variable(p.nvars, i) + MPoly.constant(p.nvars, point[i]) for i in range(p.nvars)
    ]
    return substitute(p, assignment)


# -- bivariate gcd and resultants -------------------------------------------
#
# Both run on the representation of a bivariate polynomial as a dense vector
# of UniPoly coefficients in the eliminated variable.


def _to_coeff_vector(p: MPoly, var: int):
    """Coefficients of p in variable ``var`` as UniPoly in the other one."""
    other = 1 - var
    deg = p.degree_in(var) if p else -1
    out = [dict() for _ in range(deg + 1)]
    for m, c in p.terms.items():
        out[m[var]][m[other]] = c
    vec = []
    for d in out:
        coeffs = [Fraction(0)] * (max(d) + 1 if d else 0)
        for e, c in d.items():
            coeffs[e] = c
        vec.append(UniPoly(coeffs))
    while vec and not vec[-1]:
        vec.pop()
    return vec


def _from_coeff_vector(vec, var: int) -> MPoly:
    terms = {}
    for i, u in enumerate(vec):
        for j, c in enumerate(u.coeffs):
            if c:
                m = (i, j) if var == 0 else (j, i)
                terms[m] = c
    return MPoly(2, terms)


def _vec_degree(vec) -> int:
    return len(vec) - 1


def _vec_is_zero(vec) -> bool:
    return not vec


def _vec_normalize(vec):
    while vec and not vec[-1]:
        vec.pop()
    return vec


def _vec_scale(vec, u: UniPoly):
    return _vec_normalize([c * u for c in vec])


def _vec_content(vec) -> UniPoly:
    g = UniPoly()
    for c in vec:
        g = uni_gcd(g, c)
    return g


def _vec_exact_div(vec, u: UniPoly):
    out = []
    for c in vec:
        q, r = c.divmod(u)
        assert not r, "inexact content division"
        out.append(q)
    return _vec_normalize(out)


def _vec_prem(f, g):
    """Pseudo-remainder: lc(g)^(df-dg+1) * f  mod  g, fraction free."""
    f = list(f)
    df, dg = _vec_degree(f), _vec_degree(g)
    lg = g[-1]
    steps = df - dg + 1
    while not _vec_is_zero(f) and _vec_degree(f) >= dg:
        lf = f[-1]
        shift = _vec_degree(f) - dg
        f = [c * lg for c in f]
        for i, gc in enumerate(g):
            f[i + shift] = f[i + shift] - lf * gc
        _vec_normalize(f)
        steps -= 1
    if steps > 0:
        lgs = lg**steps
        f = [c * lgs for c in f]
    return _vec_normalize(f)


def bivariate_gcd(p: MPoly, q: MPoly) -> MPoly:
    """Primitive gcd of two nonzero bivariate polynomials.

    Uses content/primitive-part splitting in one variable and a remainder
    sequence on the primitive parts.  The result is normalized to integer
    coprime coefficients with a positive leading coefficient in the local
    order.
    """
    if p.nvars != 2 or q.nvars != 2:
        raise WrongArity("bivariate_gcd needs 2-variable polynomials")
    if not p or not q:
        raise ZeroInput("bivariate_gcd of zero polynomial")
    var = 0  # eliminate x; any fixed choice is fine
    fv, gv = _to_coeff_vector(p, var), _to_coeff_vector(q, var)
    content = uni_gcd(_vec_content(fv), _vec_content(gv))
    if _vec_degree(fv) == 0 or _vec_degree(gv) == 0:
        g = _one_var_poly_from_uni(content, 1 - var)
        return _normalize_biv(g)
    fp = _vec_exact_div(fv, _vec_content(fv))
    gp = _vec_exact_div(gv, _vec_content(gv))
    if _vec_degree(fp) < _vec_degree(gp):
        fp, gp = gp, fp
    a, b = fp, gp
    while True:
        rem = _vec_prem(a, b)
        if _vec_is_zero(rem):
            break
        rem = _vec_exact_div(rem, _vec_content(rem))
        a, b = b, rem
    gcd_pp = _vec_exact_div(b, _vec_content(b))
    result = _vec_scale(gcd_pp, content)
    return _normalize_biv(_from_coeff_vector(result, var))


def _one_var_poly_from_uni(u: UniPoly, var: int) -> MPoly:
    terms = {}
    for j, c in enumerate(u.coeffs):
        if c:
            m = (j, 0) if var == 0 else (0, j)
            terms[m] = c
    return MPoly(2, terms)


def _normalize_biv(g: MPoly) -> MPoly:
    """Scale to integer coprime coefficients, positive local-order lead."""
    if not g:
        return g
    from math import gcd as igcd

    denom_lcm = 1
    for c in g.terms.values():
        denom_lcm = denom_lcm * c.denominator // igcd(denom_lcm, c.denominator)
    nums = [int(c * denom_lcm) for c in g.terms.values()]
    content = 0
    for v in nums:
        content = igcd(content, v)
    scale = Fraction(denom_lcm, content)
    g = g * scale
    _, lc = g.leading_term(LOCAL_ORDER)
    if lc < 0:
        g = -g
    return g


def resultant_eliminate(p: MPoly, q: MPoly, var_index: int) -> UniPoly:
    """Resultant of two bivariate polynomials with respect to one variable.

    Computed through the polynomial remainder sequence over the rational
    function field in the surviving variable, with the classical degree and
    sign corrections, so the result is the genuine Sylvester resultant as a
    univariate polynomial in the surviving variable.
    """
    if p.nvars != 2 or q.nvars != 2:
        raise WrongArity("resultant_eliminate needs 2-variable polynomials")
    if var_index not in (0, 1):
        raise IndexOutOfRange("variable index must be 0 or 1")
    if not p or not q:
        return UniPoly()
    sym = "_resx"
    fv = [ParamRat(u, sym=sym) for u in _to_coeff_vector(p, var_index)]
    gv = [ParamRat(u, sym=sym) for u in _to_coeff_vector(q, var_index)]
    res = _resultant_field(fv, gv, sym)
    assert res.den == UniPoly.const(1), "resultant of polynomials must be polynomial"
    return res.num


def _pr_vec_normalize(vec):
    while vec and not vec[-1]:
        vec.pop()
    return vec


def _resultant_field(f, g, sym: str) -> ParamRat:
    f, g = _pr_vec_normalize(list(f)), _pr_vec_normalize(list(g))
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        return ParamRat.const(0, sym=sym)
    if m < n:
        sign = -1 if (m * n) % 2 else 1
        return _resultant_field(g, f, sym) * sign
    if n == 0:
        # resultant with a constant: c^deg(f)
        out = ParamRat.const(1, sym=sym)
        for _ in range(m):
            out = out * g[0]
        return out
    # true remainder of f by g over the field
    r = list(f)
    while len(r) - 1 >= n:
        lead = r[-1] / g[-1]
        shift = len(r) - 1 - n
        for i, gc in enumerate(g):
            r[i + shift] = r[i + shift] - lead * gc
        r.pop()
        _pr_vec_normalize(r)
    _pr_vec_normalize(r)
    k = len(r) - 1
    if k < 0:
        return ParamRat.const(0, sym=sym)
    sign = -1 if (m * n) % 2 else 1
    lc_pow = ParamRat.const(1, sym=sym)
    for _ in range(m - k):
        lc_pow = lc_pow * g[-1]
    return _resultant_field(g, r, sym) * lc_pow * sign
