"""Degree filtration, associated graded presentation and principal symbols."""

from __future__ import annotations

from dataclasses import dataclass

from .coeffring import DerivSpec
from .errors import InvalidPresentationError, UndefinedLeaderError
from .pbwcore import Element, Presentation, mul


def in_filtration(f: Element, m: int) -> bool:
    """True when ``f`` lies in ``F_m``, i.e. ``deg f <= m``."""
    if m < 0:
        raise ValueError("filtration index must be nonnegative")
    return f.is_zero() or f.degree <= m


def associated_graded_presentation(P: Presentation) -> Presentation:
    """Same ring, sigmas and constants; derivations and tails dropped."""
    return Presentation(
        P.ring,
        P.n,
        sigma=P.sigma,
        delta=(DerivSpec(),) * P.n,
        c=P.constants,
        tails={},
        quasi_commutative=True,
        bijective=P.bijective,
    )


def principal_symbol(f: Element, P: Presentation | None = None) -> Element:
    """Top-degree part of ``f`` read in the associated graded presentation."""
    P = P or f.P
    if f.is_zero():
        raise UndefinedLeaderError("the zero element has no principal symbol")
    G = P.graded()
    top = f.degree
    return G.element({a: c for a, c in f.terms if sum(a) == top})


@dataclass(frozen=True)
class IteratedView:
    """``A = R[z1; theta_1]...[zn; theta_n]`` for a quasi-commutative ``A``.

    ``ring_action[i]`` is the endomorphism ``theta_i`` restricted to ``R``
    and ``generator_action[i]`` maps ``m < i`` to the constant with
    ``theta_i(x_m) = c_{m,i} x_m``.
    """

    presentation: Presentation
    ring_action: tuple
    generator_action: tuple

    def theta(self, i: int, f: Element) -> Element:
        """``theta_i(f)``, defined by ``x_i f = theta_i(f) x_i``.

        ``f`` must only involve ``x_1..x_{i-1}`` (0-based: generators ``< i``).
        """
        P = self.presentation
        for alpha, _ in f.terms:
            if any(alpha[i:]):
                raise ValueError(f"theta_{i + 1} acts on x1..x{i} only")
        prod = mul(P.gen(i), f)
        out = {}
        for alpha, c in prod.terms:
            out[alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]] = c
        return P.element(out)

    def rebuild(self) -> Presentation:
        """The presentation described by this view."""
        P = self.presentation
        c = {(m, i): self.generator_action[i][m] for i in range(P.n) for m in range(i)}
        return Presentation(P.ring, P.n, sigma=self.ring_action, c=c, bijective=P.bijective)


def iterated_skew_view(P: Presentation) -> IteratedView:
    if not P.quasi_commutative:
        raise InvalidPresentationError("the iterated skew polynomial view needs a quasi-commutative presentation")
    gen_action = tuple(tuple(P.c(m, i) for m in range(i)) for i in range(P.n))
    return IteratedView(P, tuple(P.sigma), gen_action)
