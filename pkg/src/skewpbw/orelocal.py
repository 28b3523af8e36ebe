"""Ore localization relative to a multiplicative set of denominators.

Left fractions ``s \\ a`` stand for ``s^-1 a`` and right fractions
``a / s`` for ``a s^-1``.  Fractions are never reduced; equality is the
usual Ore relation, decided by :func:`frac_eq`.

The fraction calculus is written against a small protocol so that the
quantum module can plug in its own denominators (unit times monomial).
A multiplicative set object provides ``contains``, ``one``,
``as_element``, ``mul``, ``ore_denoms_left/right``, ``solve_left/right``
and ``format``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .coeffring import (
    CoeffValue,
    DerivSpec,
    EndoSpec,
    PolynomialRing,
    apply_deriv,
    apply_endo,
    fraction_field,
    fraction_value,
    ore_pair_left,
    ore_pair_right,
    to_fraction_field,
)
from .errors import (
    FractionMismatchError,
    InvalidDenominatorError,
    InvalidPresentationError,
    MissingInverseError,
    RewriteLimitError,
    UnsupportedFractionFieldError,
)
from .pbwcore import Element, Presentation, leading_data, mul, sigma_alpha, sigma_alpha_inverse

LEFT = "left"
RIGHT = "right"


# --------------------------------------------------------------------------
# localized endomorphisms and derivations


def localized_endo(sigma: EndoSpec, delta: DerivSpec, a, s=1) -> tuple[CoeffValue, CoeffValue]:
    """``(sigma_bar(a/s), delta_bar(a/s))`` as fraction-field values."""
    ring = a.ring if isinstance(a, CoeffValue) else s.ring
    a, s = ring.coerce(a), ring.coerce(s)
    if s.is_zero():
        raise InvalidDenominatorError("zero denominator")
    sa, ss = apply_endo(sigma, a), apply_endo(sigma, s)
    da, ds = apply_deriv(delta, sigma, a), apply_deriv(delta, sigma, s)
    sig = fraction_value(sa, ss)
    der = -fraction_value(ds, ss) * fraction_value(a, s) + fraction_value(da, ss)
    return sig, der


def localized_endo_right(sigma: EndoSpec, delta: DerivSpec, a, s=1) -> tuple[CoeffValue, CoeffValue]:
    """``(sigma_tilde(a/s), delta_tilde(a/s))`` for the right localization."""
    if not sigma.has_inverse:
        raise MissingInverseError("the right localization needs a bijective sigma")
    ring = a.ring if isinstance(a, CoeffValue) else s.ring
    a, s = ring.coerce(a), ring.coerce(s)
    if s.is_zero():
        raise InvalidDenominatorError("zero denominator")
    sa, ss = apply_endo(sigma, a), apply_endo(sigma, s)
    da, ds = apply_deriv(delta, sigma, a), apply_deriv(delta, sigma, s)
    sig = fraction_value(sa, ss)
    der = -sig * fraction_value(ds, s) + fraction_value(da, s)
    return sig, der


# --------------------------------------------------------------------------
# Ore solvers with coefficient denominators


def _step_bound(f: Element) -> int:
    # every step lowers the leader, which ranges over monomials of degree <= deg f
    return comb(f.P.n + f.degree, f.P.n)


def ore_solve_left(f: Element, s, S=None, P: Presentation | None = None) -> tuple:
    """Return ``(u, g)`` with ``u`` in ``S`` and ``u*f == g*s``."""
    P = P or f.P
    S = S or NonzeroCoefficients(P)
    if not isinstance(S, NonzeroCoefficients):
        return S.solve_left(f, s)
    s = S.check(s)
    ring = P.ring
    U, G, cur = ring.one(), P.zero(), f
    if f.is_zero():
        return U, G
    bound, steps = _step_bound(f), 0
    S_el = P.const(s)
    while cur:
        steps += 1
        if steps > bound:
            raise RewriteLimitError(f"left Ore solver exceeded {bound} steps")
        alpha, c, _ = leading_data(cur)
        u1, r = ore_pair_left(c, sigma_alpha(alpha, s, P), ring)
        term = P.monomial(alpha, r)
        nxt = u1 * cur - mul(term, S_el)
        assert nxt.is_zero() or _lower(nxt, alpha)
        cur = nxt
        U = u1 * U
        G = u1 * G + term
    assert mul(P.const(U), f) == mul(G, S_el), "left Ore postcondition failed"
    return U, G


def ore_solve_right(f: Element, s, S=None, P: Presentation | None = None) -> tuple:
    """Return ``(u, g)`` with ``u`` in ``S`` and ``f*u == s*g``."""
    P = P or f.P
    S = S or NonzeroCoefficients(P)
    if not isinstance(S, NonzeroCoefficients):
        return S.solve_right(f, s)
    s = S.check(s)
    for i, sg in enumerate(P.sigma):
        if not sg.has_inverse:
            raise MissingInverseError(f"sigma_{i + 1} has no inverse; right fractions are unavailable")
    ring = P.ring
    U, G, cur = ring.one(), P.zero(), f
    if f.is_zero():
        return U, G
    bound, steps = _step_bound(f), 0
    while cur:
        steps += 1
        if steps > bound:
            raise RewriteLimitError(f"right Ore solver exceeded {bound} steps")
        alpha, c, _ = leading_data(cur)
        u1, r = ore_pair_right(c, s, ring)
        w = P.const(sigma_alpha_inverse(alpha, u1, P))
        nxt = mul(cur, w) - s * P.monomial(alpha, r)
        assert nxt.is_zero() or _lower(nxt, alpha)
        cur = nxt
        U = U * w.constant_value()
        G = mul(G, w) + P.monomial(alpha, r)
    assert mul(f, P.const(U)) == s * G, "right Ore postcondition failed"
    return U, G


def _lower(f: Element, alpha) -> bool:
    from .pbwcore import monomial_key

    return monomial_key(f.leading_monomial) < monomial_key(tuple(alpha))


# --------------------------------------------------------------------------
# multiplicative sets


class NonzeroCoefficients:
    """``S = R \\ {0}`` inside the coefficient ring of a presentation."""

    kind = "nonzero"

    def __init__(self, P: Presentation):
        self.P = P

    def __eq__(self, other):
        return isinstance(other, NonzeroCoefficients) and self.P == other.P

    def __hash__(self):
        return hash((self.kind, self.P))

    def __repr__(self):
        return f"NonzeroCoefficients({self.P.ring})"

    def contains(self, s) -> bool:
        try:
            s = self.P.ring.coerce(s)
        except Exception:
            return False
        return not s.is_zero()

    def check(self, s) -> CoeffValue:
        if isinstance(s, Element):
            v = s.constant_value()
            if v is None:
                raise InvalidDenominatorError(f"denominator {s} is not a coefficient")
            s = v
        s = self.P.ring.coerce(s)
        if s.is_zero():
            raise InvalidDenominatorError("zero is not an admissible denominator")
        return s

    def one(self) -> CoeffValue:
        return self.P.ring.one()

    def as_element(self, s) -> Element:
        return self.P.const(s)

    def mul(self, u, s):
        return u * s

    def ore_denoms_left(self, s, t):
        """``(c, d)`` in ``S`` with ``c*s == d*t``."""
        return ore_pair_left(s, t, self.P.ring)

    def ore_denoms_right(self, s, t):
        """``(c, d)`` in ``S`` with ``s*c == t*d``."""
        return ore_pair_right(s, t, self.P.ring)

    def solve_left(self, a: Element, s):
        return ore_solve_left(a, s, self)

    def solve_right(self, a: Element, s):
        return ore_solve_right(a, s, self)

    def lmul(self, c, a: Element) -> Element:
        return c * a

    def rmul(self, a: Element, c) -> Element:
        return mul(a, self.P.const(c))

    def format(self, s) -> str:
        return str(s)

    def parse(self, text: str):
        return self.check(self.P.ring.parse(text))


# --------------------------------------------------------------------------
# fractions


@dataclass(frozen=True, eq=False)
class OreFraction:
    """A left (``s^-1 a``) or right (``a s^-1``) fraction."""

    side: str
    denom: object
    numer: Element
    S: object

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
        object.__setattr__(self, "denom", self.S.check(self.denom))

    def __str__(self):
        d = self.S.format(self.denom)
        a = str(self.numer)
        d = d if " " not in d else f"({d})"
        a = a if " " not in a else f"({a})"
        return f"{d} \\ {a}" if self.side == LEFT else f"{a} / {d}"

    def __repr__(self):
        return f"OreFraction({self})"

    def __eq__(self, other):
        if not isinstance(other, OreFraction):
            return NotImplemented
        return frac_eq(self, other)

    __hash__ = None

    def __add__(self, other):
        return frac_add(self, other)

    def __sub__(self, other):
        return frac_add(self, frac_neg(other))

    def __neg__(self):
        return frac_neg(self)

    def __mul__(self, other):
        return frac_mul(self, other)


def left_fraction(s, a: Element, S=None) -> OreFraction:
    return OreFraction(LEFT, s, a, S or NonzeroCoefficients(a.P))


def right_fraction(a: Element, s, S=None) -> OreFraction:
    return OreFraction(RIGHT, s, a, S or NonzeroCoefficients(a.P))


def embed(a: Element, side: str = LEFT, S=None) -> OreFraction:
    """The image of ``a`` under ``a -> 1^-1 a``."""
    S = S or NonzeroCoefficients(a.P)
    return OreFraction(side, S.one(), a, S)


def _same(phi: OreFraction, psi: OreFraction):
    if phi.side != psi.side:
        raise FractionMismatchError("left and right fractions cannot be combined")
    if phi.S != psi.S:
        raise FractionMismatchError("fractions use different multiplicative sets")
    return phi.S


def _lmul(S, c, a: Element) -> Element:
    return S.lmul(c, a)


def _rmul(S, a: Element, c) -> Element:
    return S.rmul(a, c)


def frac_eq(phi: OreFraction, psi: OreFraction) -> bool:
    S = _same(phi, psi)
    if phi.side == LEFT:
        c, d = S.ore_denoms_left(phi.denom, psi.denom)
        return _lmul(S, c, phi.numer) == _lmul(S, d, psi.numer)
    c, d = S.ore_denoms_right(phi.denom, psi.denom)
    return _rmul(S, phi.numer, c) == _rmul(S, psi.numer, d)


def frac_neg(phi: OreFraction) -> OreFraction:
    return OreFraction(phi.side, phi.denom, -phi.numer, phi.S)


def frac_add(phi: OreFraction, psi: OreFraction, witness=None) -> OreFraction:
    """Sum over a common denominator; ``witness`` rescales the Ore pair."""
    S = _same(phi, psi)
    if phi.side == LEFT:
        c, d = S.ore_denoms_left(phi.denom, psi.denom)
        if witness is not None:
            w = S.check(witness)
            c, d = S.mul(w, c), S.mul(w, d)
        numer = _lmul(S, c, phi.numer) + _lmul(S, d, psi.numer)
        return OreFraction(LEFT, S.mul(c, phi.denom), numer, S)
    c, d = S.ore_denoms_right(phi.denom, psi.denom)
    if witness is not None:
        w = S.check(witness)
        c, d = S.mul(c, w), S.mul(d, w)
    numer = _rmul(S, phi.numer, c) + _rmul(S, psi.numer, d)
    return OreFraction(RIGHT, S.mul(phi.denom, c), numer, S)


def frac_mul(phi: OreFraction, psi: OreFraction, witness=None) -> OreFraction:
    """Product; ``witness`` rescales the Ore step used to move the middle denominator."""
    S = _same(phi, psi)
    if phi.side == LEFT:
        # a t^-1 = u^-1 c  from  u a = c t
        u, c = S.solve_left(phi.numer, psi.denom)
        if witness is not None:
            w = S.check(witness)
            u, c = S.mul(w, u), mul(S.as_element(w), c)
        return OreFraction(LEFT, S.mul(u, phi.denom), mul(c, psi.numer), S)
    # s^-1 b = c u^-1  from  b u = s c
    u, c = S.solve_right(psi.numer, phi.denom)
    if witness is not None:
        w = S.check(witness)
        u, c = S.mul(u, w), mul(c, S.as_element(w))
    return OreFraction(RIGHT, S.mul(psi.denom, u), mul(phi.numer, c), S)


def zero_fraction(P: Presentation, side: str = LEFT, S=None) -> OreFraction:
    return embed(P.zero(), side, S)


def common_denominator(fractions) -> list[OreFraction]:
    """Rewrite a list of same-sided fractions over a single denominator."""
    fractions = list(fractions)
    if not fractions:
        return []
    S = fractions[0].S
    side = fractions[0].side
    for phi in fractions[1:]:
        _same(fractions[0], phi)
    d = fractions[0].denom
    numers = [fractions[0].numer]
    for phi in fractions[1:]:
        if side == LEFT:
            c, e = S.ore_denoms_left(d, phi.denom)
            numers = [_lmul(S, c, a) for a in numers] + [_lmul(S, e, phi.numer)]
            d = S.mul(c, d)
        else:
            c, e = S.ore_denoms_right(d, phi.denom)
            numers = [_rmul(S, a, c) for a in numers] + [_rmul(S, phi.numer, e)]
            d = S.mul(d, c)
    return [OreFraction(side, d, a, S) for a in numers]


# --------------------------------------------------------------------------
# localized presentations


def localize_presentation(P: Presentation, S=None) -> Presentation:
    """The presentation of ``S^-1 A`` over the fraction field of ``R``."""
    if S is not None and not isinstance(S, NonzeroCoefficients):
        raise NotImplementedError("only S = R \\ {0} can be localized into a presentation")
    ring = P.ring
    if ring.is_field:
        return P
    if not (isinstance(ring, PolynomialRing) and ring.nvars == 1):
        raise UnsupportedFractionFieldError(f"localization over {ring} needs a multivariate fraction field")
    if not P.bijective:
        raise InvalidPresentationError("localizing a presentation requires it to be bijective")
    F = fraction_field(ring)
    name = ring.variables[0]
    t = ring.gen(name)
    sigmas, deltas = [], []
    for sg, dl in zip(P.sigma, P.delta):
        sig_t, der_t = localized_endo(sg, dl, t)
        if sg.is_identity:
            sigmas.append(EndoSpec())
        else:
            inv = {k: to_fraction_field(v) for k, v in sg.inverse_images}
            sigmas.append(EndoSpec.from_images(F, {name: sig_t}, inv))
        deltas.append(DerivSpec() if dl.is_zero else DerivSpec.from_images(F, {name: der_t}))
    c = {key: to_fraction_field(v) for key, v in P.constants.items()}
    tails = {
        key: {alpha: to_fraction_field(v) for alpha, v in tail.as_dict().items()}
        for key, tail in P.tails.items()
    }
    return Presentation(
        F,
        P.n,
        sigma=sigmas,
        delta=deltas,
        c=c,
        tails=tails,
        quasi_commutative=P.quasi_commutative,
        bijective=True,
    )


def lift_element(f: Element, Q: Presentation) -> Element:
    """Read an element of ``A`` inside the localized presentation ``Q``."""
    return Q.element({alpha: to_fraction_field(c) for alpha, c in f.terms})
