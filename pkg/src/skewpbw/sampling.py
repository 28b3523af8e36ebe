"""Random coefficients, elements and Laurent elements for tests and checks.

Heights (absolute values of integers appearing in coefficients) are
bounded by ``height``; everything is driven by an explicit
``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coeffring import CoeffRing, CoeffValue, PolynomialRing, RationalField, RationalFunctionField
from .pbwcore import Element, Presentation


def random_rational(rng: random.Random, height: int = 10, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if v or not nonzero:
            return v


def random_coeff(ring: CoeffRing, rng: random.Random, height: int = 10, nonzero: bool = False) -> CoeffValue:
    while True:
        v = _draw(ring, rng, height)
        if v or not nonzero:
            return v


def _draw(ring, rng, height):
    if isinstance(ring, RationalField):
        return ring.coerce(random_rational(rng, height))
    if isinstance(ring, RationalFunctionField):
        num = [random_rational(rng, height) for _ in range(rng.randint(1, 2))]
        if rng.random() < 0.5:
            return ring.from_polynomial(num)
        den = [random_rational(rng, height, nonzero=True) for _ in range(rng.randint(1, 2))]
        if not any(den):
            den = [Fraction(1)]
        return ring.from_parts(num, den)
    if isinstance(ring, PolynomialRing):
        terms = {}
        for _ in range(rng.randint(1, 2)):
            exp = tuple(rng.randint(0, 2) for _ in range(ring.nvars))
            terms[exp] = random_rational(rng, height)
        return ring.from_dict(terms)
    raise TypeError(f"cannot sample from {ring}")


def random_monomial(n: int, rng: random.Random, max_deg: int) -> tuple:
    d = rng.randint(0, max_deg)
    alpha = [0] * n
    for _ in range(d):
        alpha[rng.randrange(n)] += 1
    return tuple(alpha)


def random_element(
    P: Presentation,
    rng: random.Random,
    max_deg: int = 4,
    max_terms: int = 5,
    height: int = 10,
    nonzero: bool = False,
) -> Element:
    while True:
        terms = [
            (random_monomial(P.n, rng, max_deg), random_coeff(P.ring, rng, height))
            for _ in range(rng.randint(1, max_terms))
        ]
        f = P.element(terms)
        if f or not nonzero:
            return f


def random_laurent(T, rng: random.Random, max_terms: int = 3, spread: int = 2, height: int = 10):
    """A nonzero Laurent element with exponents in ``[-spread, spread]`` on the invertible block."""
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            alpha = tuple(
                rng.randint(-spread, spread) if i < T.r else rng.randint(0, spread) for i in range(T.n)
            )
            terms.append((alpha, random_coeff(T.ring, rng, height)))
        f = T.element(terms)
        if f:
            return f
