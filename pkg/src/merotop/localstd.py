"""Local standard bases and Milnor numbers.

The computational setting is the local ring at the origin: monomials are
compared with the anti-graded order from :mod:`merotop.multipoly`, normal
forms use Mora's tangent-cone reduction (with ecart-driven self-recording,
which is what makes division terminate for local orders), and a
Buchberger-style pair completion turns an ideal basis into a standard
basis.  The Milnor number of a germ is then the number of monomials under
the staircase of its Jacobian ideal.

Everything runs either over Q or over the rational-function field Q(t);
in the parametric case the engine records the parameter values at which an
inverted or leading coefficient vanishes, giving a finite, conservative
superset of the specializations where the generic answer may fail to hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .coeff import ParamRat, rational_roots
from .errors import NonIsolated, NotVanishingAtOrigin, ZeroInput
from .multipoly import (
    LOCAL_ORDER,
    MPoly,
    gradient,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()

_TAIL_PASS_CAP = 1000


@dataclass
class StandardBasisResult:
    """Outcome of a standard basis computation.

    ``lead_staircase`` holds the minimal generators of the lead-term
    ideal.  ``quotient_dimension`` is the number of monomials outside that
    ideal, or the INFINITE marker when some variable has no pure power on
    the staircase.  ``bad_specializations`` is only populated over a
    parameter field: the rational parameter values at which a coefficient
    inverted during the run (or a leading coefficient of the final basis)
    vanishes.
    """

    basis: list
    lead_staircase: frozenset
    quotient_dimension: object
    bad_specializations: frozenset = field(default_factory=frozenset)


def _ecart(p: MPoly, order=LOCAL_ORDER) -> int:
    lm, _ = p.leading_term(order)
    return p.total_degree() - monomial_degree(lm)


class _InversionLog:
    """Collects every coefficient the reduction engine divides by."""

    def __init__(self):
        self.coeffs = []

    def record(self, c):
        if isinstance(c, ParamRat):
            self.coeffs.append(c)

    def bad_values(self) -> frozenset:
        bad = set()
        for c in self.coeffs:
            if c.num.degree >= 1:
                bad |= rational_roots(c.num)
        return frozenset(bad)


def _reduce_once(h: MPoly, f: MPoly, order, log) -> MPoly:
    """One Mora reduction step: cancel the lead term of h against f."""
    lm_h, lc_h = h.leading_term(order)
    lm_f, lc_f = f.leading_term(order)
    log.record(lc_f)
    factor = MPoly.monomial(h.nvars, monomial_div(lm_h, lm_f), lc_h / lc_f)
    return h - factor * f


def weak_normal_form(g: MPoly, reducers, order=LOCAL_ORDER, log=None, track_unit=False):
    """Mora weak normal form of ``g`` with respect to a reducer list.

    Returns ``r`` with u*g = sum(q_i * G_i) + r for a unit u (nonzero at
    the origin), such that the lead term of r is not divisible by any lead
    term of the reducers.  Reducer choice is by smallest ecart, then first
    position in the working list, and intermediate states are appended to
    the list when the chosen reducer has strictly larger ecart, which is
    the self-recording that guarantees termination.

    With ``track_unit`` the pair (r, u) is returned; u certifies the
    division relation and always has constant term 1 up to scaling.
    """
    if log is None:
        log = _InversionLog()
    T = [f for f in reducers if f]
    ecarts = [_ecart(f, order) for f in T]
    units = [None] * len(T) if track_unit else None
    h = g
    u = MPoly.constant(g.nvars, 1) if track_unit else None
    while h:
        lm_h, _ = h.leading_term(order)
        best = None
        for idx, f in enumerate(T):
            lm_f, _ = f.leading_term(order)
            if monomial_divides(lm_f, lm_h):
                key = (ecarts[idx], idx)
                if best is None or key < best[0]:
                    best = (key, idx)
        if best is None:
            break
        idx = best[1]
        f = T[idx]
        if ecarts[idx] > _ecart(h, order):
            T.append(h)
            ecarts.append(_ecart(h, order))
            if track_unit:
                units.append(u)
        if track_unit:
            lm_h2, lc_h = h.leading_term(order)
            lm_f, lc_f = f.leading_term(order)
            log.record(lc_f)
            factor = MPoly.monomial(h.nvars, monomial_div(lm_h2, lm_f), lc_h / lc_f)
            h = h - factor * f
            if units[idx] is not None:
                u = u - factor * units[idx]
        else:
            h = _reduce_once(h, f, order, log)
    if track_unit:
        return h, u
    return h


def mora_normal_form(g: MPoly, G, order=LOCAL_ORDER) -> MPoly:
    """Normal form of ``g`` against ``G`` in the local ring.

    First applies the weak normal form, then clears reducible tail terms.
    Each tail pass reduces the lower part of the working polynomial while
    multiplying the upper part by the same unit, so the division relation
    u*g = sum(q_i*G_i) + r stays exact throughout.  On every return no
    term of the result is divisible by a lead term of ``G``.
    """
    reducers = [f for f in G if f]
    for f in reducers:
        if f.nvars != g.nvars:
            raise ValueError("normal form inputs disagree on variable count")
    log = _InversionLog()
    h = weak_normal_form(g, reducers, order, log)
    if not reducers:
        return h
    lead_ms = [f.leading_term(order)[0] for f in reducers]
    for _ in range(_TAIL_PASS_CAP):
        if not h:
            return h
        lm_h, _ = h.leading_term(order)
        targets = [
            m
            for m in h.terms
            if m != lm_h and any(monomial_divides(lm, m) for lm in lead_ms)
        ]
        if not targets:
            return h
        m_top = LOCAL_ORDER.max(targets)
        key_top = order.key(m_top)
        upper = MPoly(h.nvars, {m: c for m, c in h.terms.items() if order.key(m) < key_top})
        lower = h - upper
        reduced, u = weak_normal_form(lower, reducers, order, log, track_unit=True)
        h = u * upper + reduced
    raise RuntimeError("tail reduction did not stabilize within the iteration cap")


def _spoly(f: MPoly, g: MPoly, order, log) -> MPoly:
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    lcm = monomial_lcm(lm_f, lm_g)
    log.record(lc_f)
    log.record(lc_g)
    mf = MPoly.monomial(f.nvars, monomial_div(lcm, lm_f), 1 / lc_f)
    mg = MPoly.monomial(g.nvars, monomial_div(lcm, lm_g), 1 / lc_g)
    return mf * f - mg * g


def _minimal_monomials(monomials):
    ms = list(monomials)
    out = []
    for m in ms:
        if any(monomial_divides(o, m) and o != m for o in ms):
            continue
        out.append(m)
    return frozenset(out)


def _quotient_dimension(staircase, nvars):
    """Count monomials outside the monomial ideal, or INFINITE."""
    bounds = []
    for i in range(nvars):
        pure = [m[i] for m in staircase if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for expts in product(*(range(b) for b in bounds)):
        if not any(monomial_divides(m, expts) for m in staircase):
            count += 1
    return count


def standard_basis(gens, order=LOCAL_ORDER) -> StandardBasisResult:
    """Standard basis of the local ideal generated by ``gens``.

    Pair completion in the normal strategy (pairs by increasing degree of
    the lead-term lcm, with a fixed tie-break), S-polynomials reduced by
    the weak Mora normal form, and the product criterion to skip pairs
    with coprime lead monomials.  Deterministic: identical inputs always
    give the identical basis.
    """
    G = [g for g in gens if g]
    if not G:
        raise ZeroInput("standard_basis of an empty or all-zero generating set")
    nvars = G[0].nvars
    log = _InversionLog()

    def pair_key(pair):
        i, j = pair
        lcm = monomial_lcm(
            G[i].leading_term(order)[0], G[j].leading_term(order)[0]
        )
        return (monomial_degree(lcm), tuple(reversed(lcm)), i, j)

    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.remove((i, j))
        lm_i = G[i].leading_term(order)[0]
        lm_j = G[j].leading_term(order)[0]
        if monomial_lcm(lm_i, lm_j) == monomial_mul(lm_i, lm_j):
            continue  # product criterion
        h = weak_normal_form(_spoly(G[i], G[j], order, log), G, order, log)
        if h:
            G.append(h)
            k = len(G) - 1
            pairs |= {(i2, k) for i2 in range(k)}
    staircase = _minimal_monomials(g.leading_term(order)[0] for g in G)
    bad = set(log.bad_values())
    for g in G:
        lc = g.leading_term(order)[1]
        if isinstance(lc, ParamRat) and lc.num.degree >= 1:
            bad |= rational_roots(lc.num)
    return StandardBasisResult(
        basis=G,
        lead_staircase=staircase,
        quotient_dimension=_quotient_dimension(staircase, nvars),
        bad_specializations=frozenset(bad),
    )


def milnor_number(g: MPoly) -> int:
    """Milnor number of a holomorphic germ at the origin.

    The dimension of the local algebra modulo the Jacobian ideal.  Zero
    when the gradient at the origin does not vanish; NonIsolated when the
    critical point is not isolated.
    """
    if not g:
        raise ZeroInput("milnor_number of the zero germ")
    if g.constant_term():
        raise NotVanishingAtOrigin("germ does not vanish at the origin")
    J = gradient(g)
    if any(d.constant_term() for d in J):
        return 0
    result = standard_basis([d for d in J if d])
    if result.quotient_dimension is INFINITE:
        raise NonIsolated("the critical point at the origin is not isolated")
    return result.quotient_dimension


def milnor_number_parametric(g: MPoly):
    """Milnor number of a germ with Q(t) coefficients, with bad values.

    Returns (mu, bad_specializations).  ``bad_specializations`` is a
    finite superset of the rational parameter values where the
    specialized Milnor number may differ from the generic one.
    """
    if not g:
        raise ZeroInput("milnor_number of the zero germ")
    c0 = g.constant_term()
    if c0:
        raise NotVanishingAtOrigin("germ does not vanish at the origin")
    J = gradient(g)
    consts = [d.constant_term() for d in J]
    nonzero_consts = [c for c in consts if c]
    if nonzero_consts:
        # Gradient at the origin is generically nonzero: mu = 0 exactly
        # outside the common roots of the constant terms.
        bad = None
        for c in nonzero_consts:
            roots = (
                rational_roots(c.num) if isinstance(c, ParamRat) and c.num.degree >= 1 else set()
            )
            if isinstance(c, Fraction) or (isinstance(c, ParamRat) and c.num.degree == 0):
                return 0, frozenset()
            bad = roots if bad is None else bad & roots
        return 0, frozenset(bad or set())
    result = standard_basis([d for d in J if d])
    if result.quotient_dimension is INFINITE:
        raise NonIsolated("the critical point at the origin is not isolated")
    return result.quotient_dimension, result.bad_specializations


def to_parametric(p: MPoly, sym: str = "t") -> MPoly:
    """Promote a polynomial over Q to one over Q(sym)."""
    return p.map_coeffs(lambda c: ParamRat.const(c, sym=sym))


def milnor_number_generic(P: MPoly, Q: MPoly, sym: str = "t"):
    """Milnor number of P + t*Q at the origin for generic t.

    Computed exactly over the rational-function field Q(t).  Returns
    (mu, bad_specializations) where the bad values are a finite superset
    of the parameter values at which the specialized Milnor number can
    differ.
    """
    if not P or not Q:
        raise ZeroInput("zero germ in a deformation pencil")
    if P.constant_term() or Q.constant_term():
        raise NotVanishingAtOrigin("pencil members must vanish at the origin")
    t = ParamRat.variable(sym)
    pencil = to_parametric(P, sym) + to_parametric(Q, sym) * t
    return milnor_number_parametric(pencil)


def milnor_number_sampled(P: MPoly, Q: MPoly, seed: int, attempts: int = 12):
    """Cross-check mode: two random specializations of t that must agree.

    Draws distinct nonzero rational values for the deformation parameter
    and returns the common Milnor number of the two specialized germs.
    Raises NonIsolated if both samples are degenerate, RuntimeError if no
    agreeing pair is found within the attempt budget.
    """
    import random

    rng = random.Random(seed)
    seen = {}
    for _ in range(attempts):
        num = rng.randint(-19, 19)
        if num == 0:
            continue
        tv = Fraction(num, rng.randint(1, 5))
        if tv in seen:
            continue
        try:
            seen[tv] = milnor_number(P + Q * tv)
        except NonIsolated:
            continue
        values = sorted(seen.values())
        if len(seen) >= 2 and values[0] == values[-1]:
            return values[0]
    if len(seen) >= 2:
        # disagreement: the generic value is the minimum by semicontinuity,
        # but agreement was requested, so report failure
        raise RuntimeError(f"sampled Milnor numbers disagree: {sorted(set(seen.values()))}")
    raise NonIsolated("no nondegenerate specialization found while sampling")
