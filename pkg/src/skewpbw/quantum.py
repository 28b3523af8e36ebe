"""Multiparametric quantum spaces, their quantum tori and the Laurent view.

The quantum space over ``R`` has ``x_i r = sigma_i(r) x_i`` and
``x_j x_i = q_ij x_i x_j``.  Inverting ``x_1..x_r`` gives the quantum
torus, whose elements are :class:`LaurentElement` values multiplied in
closed form by

    (a x^alpha)(b x^beta) = a sigma^alpha(b) Q(alpha, beta) x^(alpha+beta)

with ``Q(alpha, beta) = prod_{i<j} q_ij^(alpha_j beta_i)``.  The closed
form needs every ``sigma_k`` to fix every ``q_ij``; this is checked.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .coeffring import (
    CoeffRing,
    CoeffValue,
    EndoSpec,
    apply_endo,
    apply_endo_power,
    extend_endo,
    fraction_field,
    to_fraction_field,
)
from .errors import (
    EndomorphismError,
    InvalidDenominatorError,
    InvalidParameterMatrixError,
    MissingInverseError,
    NegativeExponentError,
    NotAUnitError,
)
from .orelocal import LEFT, RIGHT, OreFraction, localize_presentation
from .pbwcore import (
    Element,
    Presentation,
    format_terms,
    monomial_key,
    monomial_times_monomial,
    mul,
    sigma_alpha,
    sigma_alpha_inverse,
)


class QMatrix:
    """Parameter matrix ``[q_ij]`` with ``q_ii = 1`` and ``q_ij q_ji = 1``.

    ``entries`` maps 0-based pairs to values; a missing ``q_ji`` is filled
    in as the inverse of ``q_ij`` and missing pairs default to 1.
    """

    def __init__(self, ring: CoeffRing, n: int, entries: Mapping | None = None):
        self.ring = ring
        self.n = n
        given = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidParameterMatrixError(f"entry ({i + 1}, {j + 1}) is outside a {n}x{n} matrix")
            given[(i, j)] = ring.coerce(v)
        full = {}
        for i in range(n):
            for j in range(n):
                v = given.get((i, j))
                if v is None and (j, i) in given:
                    w = given[(j, i)]
                    if not w.is_unit():
                        raise InvalidParameterMatrixError(f"q[{j + 1},{i + 1}] = {w} is not a unit")
                    v = w.inverse()
                full[(i, j)] = ring.one() if v is None else v
        for i in range(n):
            if full[(i, i)] != 1:
                raise InvalidParameterMatrixError(f"q[{i + 1},{i + 1}] must be 1")
            for j in range(n):
                if not full[(i, j)].is_unit():
                    raise InvalidParameterMatrixError(f"q[{i + 1},{j + 1}] = {full[(i, j)]} is not a unit")
                if full[(i, j)] * full[(j, i)] != 1:
                    raise InvalidParameterMatrixError(f"q[{i + 1},{j + 1}] * q[{j + 1},{i + 1}] != 1")
        self._q = full

    def __getitem__(self, key) -> CoeffValue:
        return self._q[key]

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.ring == other.ring and self._q == other._q

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self._q.items()))))

    def __repr__(self):
        return f"QMatrix({self.upper()})"

    def upper(self) -> dict:
        return {(i, j): self._q[(i, j)] for i in range(self.n) for j in range(i + 1, self.n)}

    def over(self, ring: CoeffRing) -> "QMatrix":
        """The same matrix read in a ring containing the current one."""
        return QMatrix(ring, self.n, {k: ring.coerce(to_fraction_field(v)) for k, v in self.upper().items()})

    def swapped(self, i: int, j: int) -> "QMatrix":
        """Replace ``q_ij`` by ``q_ji`` (used to build a deliberately wrong route)."""
        up = self.upper()
        a, b = min(i, j), max(i, j)
        up[(a, b)] = self._q[(b, a)]
        return QMatrix(self.ring, self.n, up)

    @classmethod
    def from_presentation(cls, P: Presentation) -> "QMatrix":
        return cls(P.ring, P.n, P.constants)


def quantum_space_presentation(q: QMatrix, sigma=None, ring: CoeffRing | None = None) -> Presentation:
    """The quasi-commutative bijective presentation with ``c_ij = q_ij``."""
    ring = ring or q.ring
    if q.ring != ring:
        q = q.over(ring)
    sigma = tuple(sigma) if sigma is not None else (EndoSpec(),) * q.n
    for k, s in enumerate(sigma):
        if not s.has_inverse:
            raise MissingInverseError(f"sigma_{k + 1} must be bijective with inverse data")
    return Presentation(ring, q.n, sigma=sigma, c=q.upper(), quasi_commutative=True, bijective=True)


def q_factor(alpha, beta, q: QMatrix) -> CoeffValue:
    """``Q(alpha, beta) = prod_{i<j} q_ij^(alpha_j beta_i)``, integer exponents allowed."""
    out = q.ring.one()
    for i in range(q.n):
        if not beta[i]:
            continue
        for j in range(i + 1, q.n):
            e = alpha[j] * beta[i]
            if e:
                out = out * q[(i, j)] ** e
    return out


# --------------------------------------------------------------------------
# quantum torus


class QuantumTorus:
    """``R_{q,sigma}[x_1^{+-1}, .., x_r^{+-1}, x_{r+1}, .., x_n]``."""

    def __init__(self, q: QMatrix, sigma=None, r: int | None = None, ring: CoeffRing | None = None):
        self.presentation = quantum_space_presentation(q, sigma, ring)
        self._setup(r)

    @classmethod
    def from_presentation(cls, P: Presentation, r: int | None = None) -> "QuantumTorus":
        if not (P.quasi_commutative and P.bijective):
            raise EndomorphismError("a quantum torus needs a quasi-commutative bijective presentation")
        T = cls.__new__(cls)
        T.presentation = P
        T._setup(r)
        return T

    def _setup(self, r):
        P = self.presentation
        self.ring = P.ring
        self.n = P.n
        self.r = P.n if r is None else r
        if not 0 <= self.r <= self.n:
            raise ValueError(f"invertible block size {self.r} outside 0..{self.n}")
        self.q = QMatrix.from_presentation(P)
        self.sigma = P.sigma
        for k, s in enumerate(self.sigma):
            for (i, j), v in self.q.upper().items():
                if apply_endo(s, v) != v:
                    raise EndomorphismError(f"sigma_{k + 1} moves q[{i + 1},{j + 1}]; the torus formula needs it fixed")

    def __eq__(self, other):
        return isinstance(other, QuantumTorus) and self.presentation == other.presentation and self.r == other.r

    def __hash__(self):
        return hash((self.presentation, self.r))

    # -- construction -----------------------------------------------------
    def element(self, terms) -> "LaurentElement":
        d: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for alpha, c in items:
            alpha = self._check(tuple(alpha))
            c = self.ring.coerce(c)
            d[alpha] = d[alpha] + c if alpha in d else c
        return LaurentElement(self, d)

    def _check(self, alpha):
        if len(alpha) != self.n:
            raise ValueError(f"exponent vector {alpha} has wrong length for n={self.n}")
        for i in range(self.r, self.n):
            if alpha[i] < 0:
                raise NegativeExponentError(f"x{i + 1} is not invertible (only x1..x{self.r} are)")
        return alpha

    def zero(self) -> "LaurentElement":
        return LaurentElement(self, {})

    def one(self) -> "LaurentElement":
        return self.const(1)

    def const(self, c) -> "LaurentElement":
        return self.element({(0,) * self.n: c})

    def gen(self, i: int) -> "LaurentElement":
        return self.monomial(tuple(1 if k == i else 0 for k in range(self.n)))

    def monomial(self, alpha, coeff=1) -> "LaurentElement":
        return self.element({tuple(alpha): coeff})

    def from_element(self, f: Element) -> "LaurentElement":
        return self.element(f.as_dict())

    def to_element(self, f: "LaurentElement") -> Element:
        for alpha in f.data:
            if min(alpha, default=0) < 0:
                raise NegativeExponentError(f"{f} has negative exponents")
        return self.presentation.element(f.data)

    def parse(self, text: str) -> "LaurentElement":
        from .parsing import parse_expression

        symbols = {name: self.const(v) for name, v in self.ring.gens().items()}
        for i in range(self.n):
            symbols[f"x{i + 1}"] = self.gen(i)
        if self.n == 1:
            symbols.setdefault("x", self.gen(0))
        return parse_expression(text, symbols, lambda k: self.const(self.ring.scalar(k)))

    # -- arithmetic ---------------------------------------------------------
    def sigma_power(self, alpha, b: CoeffValue) -> CoeffValue:
        """``sigma^alpha(b)``; negative entries use the inverses."""
        for i in range(self.n - 1, -1, -1):
            b = apply_endo_power(self.sigma[i], alpha[i], b)
        return b

    def mul(self, f: "LaurentElement", g: "LaurentElement") -> "LaurentElement":
        out: dict = {}
        for alpha, a in f.data.items():
            for beta, b in g.data.items():
                c = a * self.sigma_power(alpha, b) * q_factor(alpha, beta, self.q)
                key = tuple(x + y for x, y in zip(alpha, beta))
                out[key] = out[key] + c if key in out else c
        return LaurentElement(self, out)

    def inverse(self, f: "LaurentElement") -> "LaurentElement":
        """Two-sided inverse of a unit ``r x^alpha``."""
        if len(f.data) != 1:
            raise NotAUnitError(f"{f} is not a single term")
        (alpha, r), = f.data.items()
        if any(alpha[self.r:]):
            raise NotAUnitError(f"{f} involves a non-invertible generator")
        if not r.is_unit():
            raise NotAUnitError(f"coefficient {r} is not a unit")
        neg = tuple(-a for a in alpha)
        b = (self.sigma_power(neg, r) * q_factor(neg, alpha, self.q)).inverse()
        inv = LaurentElement(self, {neg: b})
        assert self.mul(inv, f) == self.one() and self.mul(f, inv) == self.one()
        return inv


class LaurentElement:
    """Immutable Laurent element; terms sorted by the monomial order of the exponents."""

    __slots__ = ("T", "data", "terms")

    def __init__(self, T: QuantumTorus, data: dict):
        self.T = T
        self.data = {k: v for k, v in data.items() if v}
        self.terms = tuple(sorted(self.data.items(), key=lambda kv: monomial_key(kv[0]), reverse=True))

    def _other(self, other):
        if isinstance(other, LaurentElement):
            if other.T != self.T:
                raise ValueError("Laurent elements from different tori")
            return other
        if isinstance(other, (int, Fraction, CoeffValue)):
            return self.T.const(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = dict(self.data)
        for k, v in o.data.items():
            d[k] = d[k] + v if k in d else v
        return LaurentElement(self.T, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentElement(self.T, {k: -v for k, v in self.data.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.T.mul(self, o)

    def __rmul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.T.mul(o, self)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.T.mul(self, self.T.inverse(o))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.T.inverse(self)
        out = self.T.one()
        for _ in range(abs(k)):
            out = self.T.mul(out, base)
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentElement):
            return self.T == other.T and self.data == other.data
        o = self._other(other)
        return NotImplemented if o is None else self == o

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.data)

    def is_zero(self) -> bool:
        return not self.data

    def __str__(self):
        return format_terms(self.terms)

    def __repr__(self):
        return f"LaurentElement({self})"


def torus_mul(f: LaurentElement, g: LaurentElement) -> LaurentElement:
    return f.T.mul(f, g)


# --------------------------------------------------------------------------
# the multiplicative set {unit * x^alpha}


class QuantumSetSpec:
    """``S = {r x^alpha : r a unit, alpha supported on x_1..x_r}``.

    All Ore steps are done with the rewriting engine of the presentation;
    the closed-form torus is not used here.
    """

    kind = "quantum"

    def __init__(self, P: Presentation, r: int):
        if not (P.quasi_commutative and P.bijective):
            raise EndomorphismError("S = unit * monomial needs a quasi-commutative bijective presentation")
        if not 0 <= r <= P.n:
            raise ValueError(f"invertible block size {r} outside 0..{P.n}")
        self.P = P
        self.r = r

    def __eq__(self, other):
        return isinstance(other, QuantumSetSpec) and self.P == other.P and self.r == other.r

    def __hash__(self):
        return hash((self.kind, self.P, self.r))

    def __repr__(self):
        return f"QuantumSetSpec(r={self.r})"

    def _split(self, s: Element):
        (alpha, c), = s.terms
        return alpha, c

    def contains(self, s) -> bool:
        try:
            self.check(s)
        except (InvalidDenominatorError, ValueError):
            return False
        return True

    def check(self, s) -> Element:
        if not isinstance(s, Element):
            s = self.P.const(s)
        if s.P != self.P:
            raise InvalidDenominatorError("denominator belongs to another presentation")
        if len(s.terms) != 1:
            raise InvalidDenominatorError(f"{s} is not a unit times a monomial")
        alpha, c = s.terms[0]
        if any(alpha[self.r:]):
            raise InvalidDenominatorError(f"{s} involves generators beyond x{self.r}")
        if not c.is_unit():
            raise InvalidDenominatorError(f"coefficient {c} of {s} is not a unit")
        return s

    def one(self) -> Element:
        return self.P.one()

    def as_element(self, s) -> Element:
        return s

    def mul(self, u, s) -> Element:
        return mul(u, s)

    def lmul(self, c, a: Element) -> Element:
        return mul(c, a)

    def rmul(self, a: Element, c) -> Element:
        return mul(a, c)

    def format(self, s) -> str:
        return str(s)

    def parse(self, text: str) -> Element:
        return self.check(self.P.parse(text))

    def _c(self, alpha, beta) -> CoeffValue:
        return monomial_times_monomial(alpha, beta, self.P)[0]

    def ore_denoms_left(self, s, t):
        """``(c, d)`` in ``S`` with ``c*s == d*t``."""
        alpha, _ = self._split(s)
        beta, b = self._split(t)
        gamma = tuple(max(x, y) for x, y in zip(alpha, beta))
        ga = tuple(g - a for g, a in zip(gamma, alpha))
        gb = tuple(g - x for g, x in zip(gamma, beta))
        c = self.P.monomial(ga)
        e = mul(c, s).coefficient(gamma)
        d = self.P.monomial(gb, e / (sigma_alpha(gb, b, self.P) * self._c(gb, beta)))
        assert mul(c, s) == mul(d, t)
        return c, d

    def ore_denoms_right(self, s, t):
        """``(c, d)`` in ``S`` with ``s*c == t*d``."""
        alpha, _ = self._split(s)
        beta, b = self._split(t)
        gamma = tuple(max(x, y) for x, y in zip(alpha, beta))
        ga = tuple(g - a for g, a in zip(gamma, alpha))
        gb = tuple(g - x for g, x in zip(gamma, beta))
        c = self.P.monomial(ga)
        e = mul(s, c).coefficient(gamma)
        d = self.P.monomial(gb, sigma_alpha_inverse(beta, e / (b * self._c(beta, gb)), self.P))
        assert mul(s, c) == mul(t, d)
        return c, d

    def solve_left(self, f: Element, s):
        """``(u, g)`` with ``u*f == g*s``; ``u = x^alpha`` for ``s = a x^alpha``."""
        s = self.check(s)
        alpha, a = self._split(s)
        u = self.P.monomial(alpha)
        if f.is_zero():
            return self.P.one(), self.P.zero()
        out = {}
        for mu, e in mul(u, f).terms:
            nu = tuple(m - x for m, x in zip(mu, alpha))
            out[nu] = e / (sigma_alpha(nu, a, self.P) * self._c(nu, alpha))
        g = self.P.element(out)
        assert mul(u, f) == mul(g, s), "left Ore postcondition failed"
        return u, g

    def solve_right(self, f: Element, s):
        """``(u, g)`` with ``f*u == s*g``."""
        s = self.check(s)
        alpha, a = self._split(s)
        u = self.P.monomial(alpha)
        if f.is_zero():
            return self.P.one(), self.P.zero()
        out = {}
        for mu, e in mul(f, u).terms:
            nu = tuple(m - x for m, x in zip(mu, alpha))
            out[nu] = sigma_alpha_inverse(alpha, e / (a * self._c(alpha, nu)), self.P)
        g = self.P.element(out)
        assert mul(f, u) == mul(s, g), "right Ore postcondition failed"
        return u, g


# --------------------------------------------------------------------------
# fractions <-> Laurent elements


def fraction_to_laurent(phi: OreFraction, T: QuantumTorus | None = None) -> LaurentElement:
    """Evaluate a fraction with a ``unit * monomial`` denominator in the torus."""
    S = phi.S
    if not isinstance(S, QuantumSetSpec):
        raise InvalidDenominatorError("fraction_to_laurent needs a QuantumSetSpec denominator")
    T = T or QuantumTorus.from_presentation(S.P, S.r)
    inv = T.inverse(T.from_element(phi.denom))
    a = T.from_element(phi.numer)
    return T.mul(inv, a) if phi.side == LEFT else T.mul(a, inv)


def laurent_to_fraction(f: LaurentElement, side: str = LEFT) -> OreFraction:
    """Clear negative exponents with ``x^beta``, ``beta_i = max(0, -min_i)``."""
    T = f.T
    beta = tuple(
        max(0, -min((alpha[i] for alpha in f.data), default=0)) if i < T.r else 0 for i in range(T.n)
    )
    xb = T.monomial(beta)
    numer = T.mul(xb, f) if side == LEFT else T.mul(f, xb)
    S = QuantumSetSpec(T.presentation, T.r)
    return OreFraction(side, T.presentation.monomial(beta), T.to_element(numer), S)


# --------------------------------------------------------------------------
# dual-route check of the localization isomorphism


@dataclass
class GKReport:
    structural_mismatches: list = field(default_factory=list)
    samples: int = 0
    agreements: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def structural_ok(self) -> bool:
        return not self.structural_mismatches

    @property
    def ok(self) -> bool:
        return self.structural_ok and self.agreements == self.samples

    def __str__(self):
        lines = [f"structure: {'ok' if self.structural_ok else 'MISMATCH'}"]
        lines += [f"  {m}" for m in self.structural_mismatches]
        lines.append(f"products: {self.agreements}/{self.samples} agree")
        lines += [f"  {d}" for d in self.disagreements[:5]]
        lines.append("result: " + ("pass" if self.ok else "FAIL"))
        return "\n".join(lines)


def _compare_presentations(Pa: Presentation, Pb: Presentation) -> list:
    out = []
    if Pa.ring != Pb.ring:
        out.append(f"rings differ: {Pa.ring} vs {Pb.ring}")
        return out
    if Pa.n != Pb.n:
        out.append(f"generator counts differ: {Pa.n} vs {Pb.n}")
        return out
    for key in sorted(Pa.constants):
        if Pa.c(*key) != Pb.c(*key):
            i, j = key
            out.append(f"c[{i + 1},{j + 1}]: {Pa.c(*key)} vs {Pb.c(*key)}")
    for i, (sa, sb) in enumerate(zip(Pa.sigma, Pb.sigma)):
        if sa.image_map() != sb.image_map():
            out.append(f"sigma[{i + 1}] images differ")
    for i, (da, db) in enumerate(zip(Pa.delta, Pb.delta)):
        if da.image_map() != db.image_map():
            out.append(f"delta[{i + 1}] images differ")
    if Pa.tails != Pb.tails:
        out.append("tails differ")
    return out


def gk_structure_check(
    r: int,
    n: int,
    q: QMatrix,
    sigma=None,
    ring: CoeffRing | None = None,
    *,
    k: int = 50,
    seed: int = 0,
    route_b: Presentation | None = None,
) -> GKReport:
    """Compare two constructions of the quantum space over the fraction field.

    Route (a) localizes the quantum space over ``R``; route (b) builds the
    quantum space over ``Frac(R)`` directly (or uses ``route_b``).  Besides
    comparing the presentations, ``k`` random Laurent products are
    computed in closed form in route (a) and through fraction
    multiplication (rewriting plus Ore steps) in route (b).
    """
    from .sampling import random_laurent

    ring = ring or q.ring
    if q.n != n:
        raise InvalidParameterMatrixError(f"q-matrix has size {q.n}, expected {n}")
    sigma = tuple(sigma) if sigma is not None else (EndoSpec(),) * n
    Pa = localize_presentation(quantum_space_presentation(q, sigma, ring))
    if route_b is None:
        F = fraction_field(ring)
        route_b = quantum_space_presentation(q.over(F), [extend_endo(s, ring) for s in sigma], F)
    Pb = route_b
    report = GKReport(_compare_presentations(Pa, Pb))
    Ta = QuantumTorus.from_presentation(Pa, r)
    Tb = QuantumTorus.from_presentation(Pb, r)
    rng = random.Random(seed)
    for _ in range(k):
        f = random_laurent(Ta, rng)
        g = random_laurent(Ta, rng)
        direct = Ta.mul(f, g)
        fb, gb = Tb.element(f.data), Tb.element(g.data)
        prod = laurent_to_fraction(fb) * laurent_to_fraction(gb)
        via = fraction_to_laurent(prod, Tb)
        report.samples += 1
        if direct.data == via.data:
            report.agreements += 1
        else:
            report.disagreements.append(f"({f}) * ({g}): {direct} vs {via}")
    return report
