"""Skew PBW presentations, canonical elements and normal-form arithmetic.

A presentation over a coefficient ring ``R`` has generators ``x1..xn``
with relations::

    x_i r     = sigma_i(r) x_i + delta_i(r)
    x_j x_i   = c_ij x_i x_j + d0 + d1 x_1 + ... + dn x_n      (i < j)

Elements are finite left ``R``-combinations of standard monomials
``x1^a1 ... xn^an``, stored in strictly descending order: total degree
first, then the first differing exponent (``x1`` heaviest).

Indices in the Python API are 0-based; printed generator names are
1-based (``x1`` is generator 0).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping

from .coeffring import (
    CoeffRing,
    CoeffValue,
    DerivSpec,
    EndoSpec,
    apply_deriv,
    apply_endo,
    apply_endo_power,
)
from .errors import (
    InvalidPresentationError,
    NegativeExponentError,
    PresentationMismatchError,
    RewriteLimitError,
    UndefinedLeaderError,
)

Monomial = tuple

#: hard cap on relation applications inside a single ``mul`` call
STEP_LIMIT = 5_000_000

_CACHE_LIMIT = 200_000
_INF = float("inf")


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def monomial_key(alpha: Monomial) -> tuple:
    """Sort key realising the monomial order (larger key = heavier)."""
    return (sum(alpha), alpha)


def compare_monomials(alpha: Monomial, beta: Monomial) -> Ordering:
    if len(alpha) != len(beta):
        raise ValueError(f"monomials of different length: {alpha} vs {beta}")
    ka, kb = monomial_key(tuple(alpha)), monomial_key(tuple(beta))
    if ka == kb:
        return Ordering.EQUAL
    return Ordering.GREATER if ka > kb else Ordering.LESS


def format_monomial(alpha: Monomial, prefix: str = "x") -> str:
    parts = []
    for i, e in enumerate(alpha):
        if e == 1:
            parts.append(f"{prefix}{i + 1}")
        elif e:
            parts.append(f"{prefix}{i + 1}^{e}")
    return "*".join(parts)


def format_terms(terms, prefix: str = "x") -> str:
    """Render ``(monomial, coefficient)`` pairs, leader first."""
    if not terms:
        return "0"
    out = []
    for idx, (alpha, c) in enumerate(terms):
        mon = format_monomial(alpha, prefix)
        cs = str(c)
        neg = cs.startswith("-") and c.is_atomic()
        if neg:
            cs = cs[1:]
        if not mon:
            body = cs if c.is_atomic() or idx == 0 else f"({cs})"
        elif cs == "1":
            body = mon
        elif c.is_atomic():
            body = f"{cs}*{mon}"
        else:
            body = f"({cs})*{mon}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _unit(n: int, k: int) -> Monomial:
    return tuple(1 if i == k else 0 for i in range(n))


def _last_nonzero(alpha: Monomial) -> int:
    for i in range(len(alpha) - 1, -1, -1):
        if alpha[i]:
            return i
    return -1


def _first_nonzero(alpha: Monomial) -> int:
    for i, e in enumerate(alpha):
        if e:
            return i
    return len(alpha)


def _bump(alpha: Monomial, k: int, d: int) -> Monomial:
    return alpha[:k] + (alpha[k] + d,) + alpha[k + 1:]


def _acc(out: dict, key, value) -> None:
    prev = out.get(key)
    out[key] = value if prev is None else prev + value


def _prune(out: dict) -> dict:
    return {k: v for k, v in out.items() if v}


# --------------------------------------------------------------------------
# presentation


class Presentation:
    """Finite presentation of a skew PBW extension.

    ``c`` maps 0-based pairs ``(i, j)`` with ``i < j`` to ``c_ij``
    (missing pairs default to 1).  ``tails`` maps the same pairs to the
    degree-at-most-one part of ``x_j x_i``, given as a mapping from
    exponent vectors to coefficients.  Flags left as ``None`` are
    inferred from the data.  With ``check=True`` the presentation is
    validated by :func:`check_presentation` and rejected on violations.
    """

    def __init__(
        self,
        ring: CoeffRing,
        n: int,
        sigma: Iterable[EndoSpec] | None = None,
        delta: Iterable[DerivSpec] | None = None,
        c: Mapping | None = None,
        tails: Mapping | None = None,
        *,
        quasi_commutative: bool | None = None,
        bijective: bool | None = None,
        check: bool = True,
        degree_bound: int = 3,
    ):
        if n < 1:
            raise InvalidPresentationError("a presentation needs at least one generator")
        self.ring = ring
        self.n = n
        self.sigma = tuple(sigma) if sigma is not None else (EndoSpec(),) * n
        self.delta = tuple(delta) if delta is not None else (DerivSpec(),) * n
        if len(self.sigma) != n or len(self.delta) != n:
            raise InvalidPresentationError("one sigma and one delta per generator are required")
        cc = {}
        for (i, j), v in (c or {}).items():
            if not 0 <= i < j < n:
                raise InvalidPresentationError(f"c entry ({i}, {j}) is not an upper-triangular pair")
            cc[(i, j)] = ring.coerce(v)
        one = ring.one()
        self._c = {(i, j): cc.get((i, j), one) for i in range(n) for j in range(i + 1, n)}
        self._tails = {}
        for (i, j), spec in (tails or {}).items():
            if not 0 <= i < j < n:
                raise InvalidPresentationError(f"tail entry ({i}, {j}) is not an upper-triangular pair")
            d0 = ring.zero()
            ds = [ring.zero()] * n
            for alpha, v in spec.items():
                alpha = tuple(alpha)
                if len(alpha) != n:
                    raise InvalidPresentationError(f"tail monomial {alpha} has wrong length")
                if sum(alpha) > 1 or min(alpha) < 0:
                    raise InvalidPresentationError(
                        f"tail of x{j + 1}*x{i + 1} has a term of degree {sum(alpha)}; only degree <= 1 is allowed"
                    )
                v = ring.coerce(v)
                if sum(alpha) == 0:
                    d0 = d0 + v
                else:
                    k = alpha.index(1)
                    ds[k] = ds[k] + v
            if d0 or any(ds):
                self._tails[(i, j)] = (d0, tuple(ds))
        inferred_qc = all(d.is_zero for d in self.delta) and not self._tails
        inferred_bij = all(s.has_inverse for s in self.sigma) and all(v.is_unit() for v in self._c.values())
        self.quasi_commutative = inferred_qc if quasi_commutative is None else bool(quasi_commutative)
        self.bijective = inferred_bij if bijective is None else bool(bijective)
        self._key = (
            self.ring,
            self.n,
            self.sigma,
            self.delta,
            tuple(sorted(self._c.items())),
            tuple(sorted(self._tails.items())),
            self.quasi_commutative,
            self.bijective,
        )
        self._hash = hash(self._key)
        self._engine = None
        self._graded = None
        if check:
            report = check_presentation(self, degree_bound)
            if not report.ok:
                raise InvalidPresentationError(f"presentation failed its checks:\n{report}", report)

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Presentation):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<Presentation n={self.n} over {self.ring}>"

    # -- data access ----------------------------------------------------
    def c(self, i: int, j: int) -> CoeffValue:
        """The constant ``c_ij`` of ``x_j x_i = c_ij x_i x_j + ...`` (``i < j``)."""
        return self._c[(i, j)]

    @property
    def constants(self) -> dict:
        return dict(self._c)

    def tail(self, i: int, j: int) -> "Element":
        """The degree-at-most-one part of ``x_j x_i`` as an element."""
        d0, ds = self._tails.get((i, j), (self.ring.zero(), (self.ring.zero(),) * self.n))
        d = {(0,) * self.n: d0}
        for k, v in enumerate(ds):
            d[_unit(self.n, k)] = v
        return Element._from_dict(self, d)

    @property
    def tails(self) -> dict:
        return {key: self.tail(*key) for key in self._tails}

    def replace(self, **changes) -> "Presentation":
        """A new presentation with some fields changed."""
        args = dict(
            ring=self.ring,
            n=self.n,
            sigma=self.sigma,
            delta=self.delta,
            c=self._c,
            tails={key: self.tail(*key).as_dict() for key in self._tails},
            quasi_commutative=self.quasi_commutative,
            bijective=self.bijective,
        )
        args.update(changes)
        return Presentation(**args)

    # -- element construction ----------------------------------------------
    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(f"x{i + 1}" for i in range(self.n))

    def zero(self) -> "Element":
        return Element._from_dict(self, {})

    def one(self) -> "Element":
        return self.const(self.ring.one())

    def const(self, value) -> "Element":
        return Element._from_dict(self, {(0,) * self.n: self.ring.coerce(value)})

    def gen(self, i: int) -> "Element":
        return Element._from_dict(self, {_unit(self.n, i): self.ring.one()})

    def gens(self) -> list["Element"]:
        return [self.gen(i) for i in range(self.n)]

    def monomial(self, alpha: Monomial, coeff=1) -> "Element":
        alpha = tuple(alpha)
        if len(alpha) != self.n or min(alpha, default=0) < 0:
            raise ValueError(f"bad exponent vector {alpha} for n={self.n}")
        return Element._from_dict(self, {alpha: self.ring.coerce(coeff)})

    def element(self, terms) -> "Element":
        return normalize(terms.items() if isinstance(terms, Mapping) else terms, self)

    def parse(self, text: str) -> "Element":
        from .parsing import parse_expression

        symbols = {name: self.const(v) for name, v in self.ring.gens().items()}
        for i, name in enumerate(self.generator_names):
            symbols[name] = self.gen(i)
        if self.n == 1:
            symbols.setdefault("x", self.gen(0))
        return parse_expression(text, symbols, lambda k: self.const(self.ring.scalar(k)))

    @property
    def engine(self) -> "_Rewriter":
        if self._engine is None:
            self._engine = _Rewriter(self)
        return self._engine

    def graded(self) -> "Presentation":
        from .graded import associated_graded_presentation

        if self._graded is None:
            self._graded = associated_graded_presentation(self)
        return self._graded


# --------------------------------------------------------------------------
# elements


class Element:
    """An immutable element in canonical (normal) form."""

    __slots__ = ("P", "terms", "_d", "_hash")

    def __init__(self, P: Presentation, terms: tuple, d: dict):
        self.P = P
        self.terms = terms
        self._d = d
        self._hash = None

    @classmethod
    def _from_dict(cls, P: Presentation, d: dict) -> "Element":
        d = {k: v for k, v in d.items() if v}
        terms = tuple(sorted(d.items(), key=lambda kv: monomial_key(kv[0]), reverse=True))
        return cls(P, terms, d)

    # -- inspection ---------------------------------------------------------
    def as_dict(self) -> dict:
        return dict(self._d)

    def coefficient(self, alpha: Monomial) -> CoeffValue:
        return self._d.get(tuple(alpha), self.P.ring.zero())

    def monomials(self) -> list[Monomial]:
        return [alpha for alpha, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(alpha) for alpha, _ in self.terms)

    def constant_value(self) -> CoeffValue | None:
        if not self.is_constant():
            return None
        return self.coefficient((0,) * self.P.n)

    @property
    def degree(self) -> int:
        if not self.terms:
            raise UndefinedLeaderError("the zero element has no degree")
        return max(sum(alpha) for alpha, _ in self.terms)

    @property
    def leading_monomial(self) -> Monomial:
        return leading_data(self)[0]

    @property
    def leading_coefficient(self) -> CoeffValue:
        return leading_data(self)[1]

    def leading_term(self) -> "Element":
        alpha, c, _ = leading_data(self)
        return Element._from_dict(self.P, {alpha: c})

    def homogeneous_part(self, m: int) -> "Element":
        return Element._from_dict(self.P, {a: c for a, c in self._d.items() if sum(a) == m})

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "Element | None":
        if isinstance(other, Element):
            if other.P is not self.P and other.P != self.P:
                raise PresentationMismatchError("elements belong to different presentations")
            return other
        if isinstance(other, (int, Fraction, CoeffValue)):
            return self.P.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return add(self, o)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.P, tuple((a, -c) for a, c in self.terms), {a: -c for a, c in self._d.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return add(self, -o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return add(o, -self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return mul(self, o)

    def __rmul__(self, other):
        # coefficients sit on the left, so r*f only rescales
        if isinstance(other, (int, Fraction, CoeffValue)):
            r = self.P.ring.coerce(other)
            return Element._from_dict(self.P, {a: r * c for a, c in self._d.items()})
        return NotImplemented

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        v = o.constant_value()
        if v is None:
            raise NegativeExponentError("division is only defined by constant units")
        return mul(self, self.P.const(v.inverse()))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            v = self.constant_value()
            if v is None:
                raise NegativeExponentError(f"negative power of {self} in a skew PBW extension")
            return self.P.const(v.inverse() ** -k)
        result = self.P.one()
        for _ in range(k):
            result = mul(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return (self.P is other.P or self.P == other.P) and self._d == other._d
        if isinstance(other, (int, Fraction, CoeffValue)):
            return self == self.P.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __str__(self):
        return format_terms(self.terms)

    def __repr__(self):
        return f"Element({self})"


def normalize(raw_terms: Iterable, P: Presentation) -> Element:
    """Merge, sort and drop zeros from ``(monomial, coefficient)`` pairs."""
    d: dict = {}
    for alpha, c in raw_terms:
        alpha = tuple(alpha)
        if len(alpha) != P.n:
            raise ValueError(f"monomial {alpha} has wrong length for n={P.n}")
        _acc(d, alpha, P.ring.coerce(c))
    return Element._from_dict(P, d)


def add(f: Element, g: Element) -> Element:
    if f.P is not g.P and f.P != g.P:
        raise PresentationMismatchError("elements belong to different presentations")
    if not g.terms:
        return f
    if not f.terms:
        return g
    d = dict(f._d)
    for a, c in g.terms:
        _acc(d, a, c)
    return Element._from_dict(f.P, d)


def mul(f: Element, g: Element) -> Element:
    """Normal form of the product ``f*g``."""
    if f.P is not g.P and f.P != g.P:
        raise PresentationMismatchError("elements belong to different presentations")
    eng = f.P.engine
    start = eng.steps
    out: dict = {}
    for alpha, a in f.terms:
        for beta, b in g.terms:
            for gamma, c in eng.mon_coeff(alpha, b).items():
                ac = a * c
                for mu, d in eng.mon_mon(gamma, beta).items():
                    _acc(out, mu, ac * d)
    if eng.steps - start > STEP_LIMIT:
        raise RewriteLimitError(f"rewriting took {eng.steps - start} steps")
    eng.trim()
    return Element._from_dict(f.P, out)


# --------------------------------------------------------------------------
# rewriting engine


class _Rewriter:
    """Memoised normal forms of ``x^a r``, ``x^a x_k`` and ``x^a x^b``.

    Every recursive call strictly lowers the measure ``(word length,
    inversions)``: ``x^a r`` has measure ``(|a|, inf)`` and ``x^a x_k``
    has ``(|a| + 1, sum of a_i for i > k)``.  This is asserted at each
    call site, which is the termination argument made executable.
    """

    def __init__(self, P: Presentation):
        self.P = P
        self.n = P.n
        self.one = P.ring.one()
        self.units = [_unit(P.n, k) for k in range(P.n)]
        self.trivial_coeff = all(s.is_identity and d.is_zero for s, d in zip(P.sigma, P.delta))
        self.mc: dict = {}
        self.mg: dict = {}
        self.mm: dict = {}
        self.steps = 0

    def trim(self):
        if len(self.mc) > _CACHE_LIMIT:
            self.mc.clear()
        if len(self.mm) > _CACHE_LIMIT:
            self.mm.clear()

    @staticmethod
    def _measure_gen(alpha, k):
        return (sum(alpha) + 1, sum(alpha[k + 1:]))

    def mon_coeff(self, alpha: Monomial, r: CoeffValue) -> dict:
        """Normal form of ``x^alpha * r``."""
        if not r:
            return {}
        if self.trivial_coeff or not any(alpha):
            return {alpha: r}
        key = (alpha, r)
        hit = self.mc.get(key)
        if hit is not None:
            return hit
        P = self.P
        own = (sum(alpha), _INF)
        k = _last_nonzero(alpha)
        beta = _bump(alpha, k, -1)
        sigma, delta = P.sigma[k], P.delta[k]
        sr = apply_endo(sigma, r)
        dr = apply_deriv(delta, sigma, r)
        if not sigma.is_identity or dr:
            self.steps += 1
        out: dict = {}
        assert (sum(beta), _INF) < own
        for gamma, c in self.mon_coeff(beta, sr).items():
            assert self._measure_gen(gamma, k) < own
            for mu, d in self.mon_gen(gamma, k).items():
                _acc(out, mu, c * d)
        if dr:
            for gamma, c in self.mon_coeff(beta, dr).items():
                _acc(out, gamma, c)
        out = _prune(out)
        self.mc[key] = out
        return out

    def mon_gen(self, alpha: Monomial, k: int) -> dict:
        """Normal form of ``x^alpha * x_k``."""
        m = _last_nonzero(alpha)
        if m <= k:
            return {_bump(alpha, k, 1): self.one}
        key = (alpha, k)
        hit = self.mg.get(key)
        if hit is not None:
            return hit
        self.steps += 1
        P = self.P
        own = self._measure_gen(alpha, k)
        a1 = _bump(alpha, m, -1)
        out: dict = {}
        # x^a1 (x_m x_k) with x_m x_k = c_km x_k x_m + tail
        assert (sum(a1), _INF) < own
        for gamma, cg in self.mon_coeff(a1, P._c[(k, m)]).items():
            assert self._measure_gen(gamma, k) < own
            for mu, d in self.mon_gen(gamma, k).items():
                assert self._measure_gen(mu, m) < own
                cd = cg * d
                for nu, e in self.mon_gen(mu, m).items():
                    _acc(out, nu, cd * e)
        tail = P._tails.get((k, m))
        if tail is not None:
            d0, ds = tail
            for l, dl in enumerate(ds):
                if dl:
                    for gamma, cg in self.mon_coeff(a1, dl).items():
                        assert self._measure_gen(gamma, l) < own
                        for mu, d in self.mon_gen(gamma, l).items():
                            _acc(out, mu, cg * d)
            if d0:
                for gamma, cg in self.mon_coeff(a1, d0).items():
                    _acc(out, gamma, cg)
        out = _prune(out)
        self.mg[key] = out
        return out

    def mon_mon(self, alpha: Monomial, beta: Monomial) -> dict:
        """Normal form of ``x^alpha * x^beta``."""
        if not any(beta):
            return {alpha: self.one}
        if not any(alpha):
            return {beta: self.one}
        k = _first_nonzero(beta)
        if _last_nonzero(alpha) <= k:
            return {tuple(a + b for a, b in zip(alpha, beta)): self.one}
        key = (alpha, beta)
        hit = self.mm.get(key)
        if hit is not None:
            return hit
        rest = _bump(beta, k, -1)
        head = self.mon_gen(alpha, k)
        if not any(rest):
            out = head
        else:
            out = {}
            for gamma, c in head.items():
                for mu, d in self.mon_mon(gamma, rest).items():
                    _acc(out, mu, c * d)
            out = _prune(out)
        self.mm[key] = out
        return out


# --------------------------------------------------------------------------
# leading data and the structure constants of the monomial calculus


def sigma_alpha(alpha: Monomial, r: CoeffValue, P: Presentation) -> CoeffValue:
    """``sigma_1^a1(...sigma_n^an(r)...)``: sigma_n is applied first.

    Negative exponents use the inverse endomorphisms.
    """
    for i in range(P.n - 1, -1, -1):
        r = apply_endo_power(P.sigma[i], alpha[i], r)
    return r


def sigma_alpha_inverse(alpha: Monomial, r: CoeffValue, P: Presentation) -> CoeffValue:
    """Inverse of :func:`sigma_alpha`: sigma_1 inverses first."""
    for i in range(P.n):
        r = apply_endo_power(P.sigma[i], -alpha[i], r)
    return r


def monomial_times_coeff(alpha: Monomial, r, P: Presentation) -> tuple[CoeffValue, Element]:
    """Split ``x^alpha * r`` as ``(r_alpha, p)`` with ``deg p < |alpha|``."""
    r = P.ring.coerce(r)
    if r.is_zero():
        raise ValueError("monomial_times_coeff needs a nonzero coefficient")
    alpha = tuple(alpha)
    prod = mul(P.monomial(alpha), P.const(r))
    lead = prod.coefficient(alpha)
    return lead, prod - P.monomial(alpha, lead)


def monomial_times_monomial(alpha: Monomial, beta: Monomial, P: Presentation) -> tuple[CoeffValue, Element]:
    """Split ``x^alpha * x^beta`` as ``(c_ab, p)`` with ``deg p < |alpha + beta|``."""
    alpha, beta = tuple(alpha), tuple(beta)
    target = tuple(a + b for a, b in zip(alpha, beta))
    prod = mul(P.monomial(alpha), P.monomial(beta))
    lead = prod.coefficient(target)
    return lead, prod - P.monomial(target, lead)


def leading_data(f: Element) -> tuple[Monomial, CoeffValue, int]:
    """``(lm(f), lc(f), deg(f))``."""
    if not f.terms:
        raise UndefinedLeaderError("the zero element has no leading term")
    alpha, c = f.terms[0]
    return alpha, c, sum(alpha)


# --------------------------------------------------------------------------
# consistency checks


@dataclass(frozen=True)
class Violation:
    kind: str
    location: str
    detail: str

    def __str__(self):
        return f"[{self.kind}] {self.location}: {self.detail}"


@dataclass
class PresentationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


def _word(indices) -> str:
    return "*".join(f"x{i + 1}" for i in indices)


def check_presentation(P: Presentation, degree_bound: int = 3) -> PresentationReport:
    """Check the axioms, the flags and overlap consistency of ``P``.

    Overlaps are tested by multiplying every generator word of length
    3..``degree_bound`` nested to the left and to the right, and every
    ``x_j x_i r`` / ``x_i r r'`` with ring generators ``r, r'`` both ways.
    This is a consistency heuristic up to the bound, not a proof.
    """
    report = PresentationReport()
    bad = report.violations
    n = P.n
    for (i, j), v in sorted(P._c.items()):
        if v.is_zero():
            bad.append(Violation("axiom", f"c[{i + 1},{j + 1}]", "constant must be nonzero"))
    if P.quasi_commutative:
        for i, d in enumerate(P.delta):
            if not d.is_zero:
                bad.append(Violation("flag", f"delta[{i + 1}]", "quasi-commutative but delta is nonzero"))
        for (i, j) in sorted(P._tails):
            bad.append(Violation("flag", f"x{j + 1}*x{i + 1}", "quasi-commutative but tail is nonzero"))
    if P.bijective:
        for i, s in enumerate(P.sigma):
            if not s.has_inverse:
                bad.append(Violation("flag", f"sigma[{i + 1}]", "bijective but sigma has no inverse"))
        for (i, j), v in sorted(P._c.items()):
            if v and not v.is_unit():
                bad.append(Violation("flag", f"c[{i + 1},{j + 1}]", "bijective but constant is not a unit"))
    for i, s in enumerate(P.sigma):
        for _, img in s.images or ():
            if img.ring != P.ring:
                bad.append(Violation("axiom", f"sigma[{i + 1}]", f"image lives in {img.ring}"))
                break
    for i, d in enumerate(P.delta):
        for _, img in d.images or ():
            if img.ring != P.ring:
                bad.append(Violation("axiom", f"delta[{i + 1}]", f"image lives in {img.ring}"))
                break
    if bad:
        return report

    gens = P.gens()
    for length in range(3, max(degree_bound, 3) + 1):
        for word in itertools.product(range(n), repeat=length):
            if all(word[t] <= word[t + 1] for t in range(length - 1)):
                continue
            factors = [gens[w] for w in word]
            left = reduce(mul, factors)
            right = reduce(lambda acc, f: mul(f, acc), reversed(factors[:-1]), factors[-1])
            if left != right:
                bad.append(Violation("overlap", _word(word), f"left-nested minus right-nested = {left - right}"))
    rgens = list(P.ring.gens().values())
    for j in range(n):
        for i in range(n):
            for r in rgens:
                R = P.const(r)
                left = mul(mul(gens[j], gens[i]), R)
                right = mul(gens[j], mul(gens[i], R))
                if left != right:
                    bad.append(
                        Violation("coefficient-overlap", f"{_word((j, i))}*{r}", f"difference = {left - right}")
                    )
    for i in range(n):
        for r in rgens:
            for s in rgens:
                if r == s:
                    continue
                left = mul(mul(gens[i], P.const(r)), P.const(s))
                right = mul(gens[i], P.const(r * s))
                if left != right:
                    bad.append(
                        Violation("coefficient-overlap", f"x{i + 1}*{r}*{s}", f"difference = {left - right}")
                    )
    return report
