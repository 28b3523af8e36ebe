"""Exact coefficient rings, their endomorphisms and sigma-derivations.

Three kinds of commutative domain are supported:

* ``RationalField()`` -- the rationals, values backed by ``fractions.Fraction``;
* ``RationalFunctionField("q")`` -- univariate rational functions over the
  rationals, stored as a GCD-reduced ``(numerator, denominator)`` pair of
  dense coefficient tuples with a monic denominator;
* ``PolynomialRing(("t1", "t2"))`` -- multivariate polynomials over the
  rationals, stored as a tuple of ``(exponent, coefficient)`` pairs sorted
  lexicographically descending.

Every value is a :class:`CoeffValue`, an immutable wrapper around one of
those canonical representations.  Equality of values is equality of
representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import ClassVar, Mapping, Union

from .errors import (
    EndomorphismError,
    InvalidDenominatorError,
    MissingInverseError,
    NotAUnitError,
    RingMismatchError,
    UnsupportedFractionFieldError,
)

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# --------------------------------------------------------------------------
# dense univariate polynomials over Q: tuples of Fractions, low degree first


def _ustrip(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _uadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ustrip(out)


def _uneg(a):
    return tuple(-c for c in a)


def _umul(a, b):
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ustrip(out)


def _uscale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def _udivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) - 1 < db:
        return (), _ustrip(rem)
    quo = [_ZERO] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = rem[k + db] / lead
        quo[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return _ustrip(quo), _ustrip(rem[:db])


def _umonic(a):
    if not a:
        return ()
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(c / lead for c in a)


def _ugcd(a, b):
    while b:
        a, b = b, _udivmod(a, b)[1]
    return _umonic(a)


def _ufmt(coeffs, name: str) -> str:
    terms = [(k, c) for k, c in enumerate(coeffs) if c]
    terms.reverse()
    return _fmt_terms([((k,), c) for k, c in terms], (name,))


def _fmt_monomial(exp, names) -> str:
    parts = []
    for e, name in zip(exp, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _fmt_terms(terms, names) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (exp, c) in enumerate(terms):
        mon = _fmt_monomial(exp, names)
        neg = c < 0
        a = -c if neg else c
        if not mon:
            body = str(a)
        elif a == 1:
            body = mon
        else:
            body = f"{a}*{mon}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# --------------------------------------------------------------------------
# rings


class CoeffRing:
    """Common interface of the coefficient rings."""

    kind: ClassVar[str]
    is_field: ClassVar[bool]

    def zero(self) -> "CoeffValue":
        return CoeffValue(self, self._zero_data())

    def one(self) -> "CoeffValue":
        return self.scalar(1)

    def scalar(self, x: Scalar) -> "CoeffValue":
        return CoeffValue(self, self._scalar_data(Fraction(x)))

    def variable_names(self) -> tuple[str, ...]:
        return ()

    def gens(self) -> dict[str, "CoeffValue"]:
        return {name: self.gen(name) for name in self.variable_names()}

    def gen(self, name: str) -> "CoeffValue":
        raise KeyError(name)

    def coerce(self, x) -> "CoeffValue":
        if isinstance(x, CoeffValue):
            if x.ring != self:
                raise RingMismatchError(f"value over {x.ring} used in {self}")
            return x
        if isinstance(x, (int, Fraction)):
            return self.scalar(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def parse(self, text: str) -> "CoeffValue":
        from .parsing import parse_expression

        return parse_expression(text, self.gens(), self.scalar)

    # representation hooks
    def _zero_data(self):
        raise NotImplementedError

    def _scalar_data(self, x: Fraction):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _inverse(self, a):
        """Inverse data, or None when ``a`` is not a unit."""
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError

    def _constant(self, a):
        """The rational value of a constant, else None."""
        raise NotImplementedError


@dataclass(frozen=True)
class RationalField(CoeffRing):
    kind: ClassVar[str] = "rational"
    is_field: ClassVar[bool] = True

    def __str__(self):
        return "QQ"

    def _zero_data(self):
        return _ZERO

    def _scalar_data(self, x):
        return x

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return not a

    def _inverse(self, a):
        return 1 / a

    def _format(self, a):
        return str(a)

    def _constant(self, a):
        return a


@dataclass(frozen=True)
class RationalFunctionField(CoeffRing):
    parameter: str = "q"

    kind: ClassVar[str] = "rational_function"
    is_field: ClassVar[bool] = True

    def __str__(self):
        return f"QQ({self.parameter})"

    def variable_names(self):
        return (self.parameter,)

    def gen(self, name=None):
        if name is not None and name != self.parameter:
            raise KeyError(name)
        return CoeffValue(self, ((_ZERO, _ONE), (_ONE,)))

    def from_polynomial(self, coeffs) -> "CoeffValue":
        return CoeffValue(self, (_ustrip(Fraction(c) for c in coeffs), (_ONE,)))

    def from_parts(self, num, den) -> "CoeffValue":
        return CoeffValue(self, _rf_make(_ustrip(num), _ustrip(den)))

    def _zero_data(self):
        return ((), (_ONE,))

    def _scalar_data(self, x):
        return (_ustrip((x,)), (_ONE,))

    def _add(self, a, b):
        an, ad = a
        bn, bd = b
        if ad == bd:
            if ad == (_ONE,):
                return (_uadd(an, bn), ad)
            return _rf_make(_uadd(an, bn), ad)
        return _rf_make(_uadd(_umul(an, bd), _umul(bn, ad)), _umul(ad, bd))

    def _neg(self, a):
        return (_uneg(a[0]), a[1])

    def _mul(self, a, b):
        an, ad = a
        bn, bd = b
        if not an or not bn:
            return ((), (_ONE,))
        if ad == (_ONE,) and bd == (_ONE,):
            return (_umul(an, bn), ad)
        g1 = _ugcd(an, bd)
        g2 = _ugcd(bn, ad)
        if len(g1) > 1:
            an, bd = _udivmod(an, g1)[0], _udivmod(bd, g1)[0]
        if len(g2) > 1:
            bn, ad = _udivmod(bn, g2)[0], _udivmod(ad, g2)[0]
        num = _umul(an, bn)
        den = _umul(ad, bd)
        lead = den[-1]
        if lead != 1:
            num = _uscale(num, 1 / lead)
            den = _uscale(den, 1 / lead)
        return (num, den)

    def _is_zero(self, a):
        return not a[0]

    def _inverse(self, a):
        if not a[0]:
            return None
        return _rf_make(a[1], a[0])

    def _format(self, a):
        num, den = a
        ns = _ufmt(num, self.parameter)
        if den == (_ONE,):
            return ns
        ds = _ufmt(den, self.parameter)
        if " " in ns:
            ns = f"({ns})"
        if " " in ds or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def _constant(self, a):
        num, den = a
        if len(num) <= 1 and den == (_ONE,):
            return num[0] if num else _ZERO
        return None


def _rf_make(num, den):
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return ((), (_ONE,))
    if len(den) > 1:
        g = _ugcd(num, den)
        if len(g) > 1:
            num = _udivmod(num, g)[0]
            den = _udivmod(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = _uscale(num, 1 / lead)
        den = _uscale(den, 1 / lead)
    return (num, den)


@dataclass(frozen=True)
class PolynomialRing(CoeffRing):
    variables: tuple[str, ...] = ("t",)

    kind: ClassVar[str] = "polynomial"
    is_field: ClassVar[bool] = False

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("polynomial ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")

    def __str__(self):
        return f"QQ[{', '.join(self.variables)}]"

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def variable_names(self):
        return self.variables

    def gen(self, name):
        i = self.variables.index(name)
        exp = tuple(1 if k == i else 0 for k in range(self.nvars))
        return CoeffValue(self, ((exp, _ONE),))

    def from_dict(self, terms: Mapping[tuple, Scalar]) -> "CoeffValue":
        return CoeffValue(self, _pmake({tuple(e): Fraction(c) for e, c in terms.items()}))

    def _zero_data(self):
        return ()

    def _scalar_data(self, x):
        if not x:
            return ()
        return (((0,) * self.nvars, x),)

    def _add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        d = dict(a)
        for e, c in b:
            d[e] = d.get(e, _ZERO) + c
        return _pmake(d)

    def _neg(self, a):
        return tuple((e, -c) for e, c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        d: dict = {}
        for ea, ca in a:
            for eb, cb in b:
                e = tuple(x + y for x, y in zip(ea, eb))
                d[e] = d.get(e, _ZERO) + ca * cb
        return _pmake(d)

    def _is_zero(self, a):
        return not a

    def _inverse(self, a):
        c = self._constant(a)
        if c is None or not c:
            return None
        return self._scalar_data(1 / c)

    def _format(self, a):
        return _fmt_terms(list(a), self.variables)

    def _constant(self, a):
        if not a:
            return _ZERO
        if len(a) == 1 and not any(a[0][0]):
            return a[0][1]
        return None


def _pmake(d) -> tuple:
    return tuple(sorted(((e, c) for e, c in d.items() if c), reverse=True))


# --------------------------------------------------------------------------
# values


class CoeffValue:
    """An immutable element of a coefficient ring."""

    __slots__ = ("ring", "data", "_hash")

    def __init__(self, ring: CoeffRing, data):
        self.ring = ring
        self.data = data
        self._hash = None

    def _other(self, other):
        if isinstance(other, CoeffValue):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"cannot combine values over {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.scalar(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CoeffValue(self.ring, self.ring._add(self.data, o.data))

    __radd__ = __add__

    def __neg__(self):
        return CoeffValue(self.ring, self.ring._neg(self.data))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CoeffValue(self.ring, self.ring._add(self.data, self.ring._neg(o.data)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CoeffValue(self.ring, self.ring._mul(self.data, o.data))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = self.ring.one()
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CoeffValue):
            return self.ring == other.ring and self.data == other.data
        if isinstance(other, (int, Fraction)):
            return self.data == self.ring._scalar_data(Fraction(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self.ring), self.data))
        return self._hash

    def __bool__(self):
        return not self.ring._is_zero(self.data)

    def is_zero(self) -> bool:
        return self.ring._is_zero(self.data)

    def is_unit(self) -> bool:
        return not self.is_zero() and self.ring._inverse(self.data) is not None

    def constant(self) -> Fraction | None:
        """The rational value when this is a constant, else None."""
        return self.ring._constant(self.data)

    def inverse(self) -> "CoeffValue":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        inv = self.ring._inverse(self.data)
        if inv is None:
            raise NotAUnitError(f"{self} is not a unit of {self.ring}")
        return CoeffValue(self.ring, inv)

    def is_atomic(self) -> bool:
        """True when the printed form needs no parentheses as a factor."""
        return " " not in str(self)

    def __str__(self):
        return self.ring._format(self.data)

    def __repr__(self):
        return f"CoeffValue({self.ring}, {self})"


# --------------------------------------------------------------------------
# spec-level arithmetic entry points


def arith(a: CoeffValue, b: CoeffValue, op: str) -> CoeffValue:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot combine values over {a.ring} and {b.ring}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def invert(a: CoeffValue) -> CoeffValue:
    return a.inverse()


# --------------------------------------------------------------------------
# endomorphisms and sigma-derivations


def _image_table(ring: CoeffRing, images) -> tuple:
    if not isinstance(ring, (PolynomialRing, RationalFunctionField)):
        raise EndomorphismError(f"generator images are not available over {ring}")
    names = ring.variable_names()
    unknown = set(images) - set(names)
    if unknown:
        raise EndomorphismError(f"unknown variables {sorted(unknown)} for {ring}")
    return tuple((name, ring.coerce(images[name]) if name in images else ring.gen(name)) for name in names)


@dataclass(frozen=True)
class EndoSpec:
    """A ring endomorphism given by the images of the ring variables.

    ``images is None`` means the identity.  ``inverse_images`` optionally
    records the inverse; it is verified on construction.
    """

    images: tuple | None = None
    inverse_images: tuple | None = None

    @classmethod
    def identity(cls) -> "EndoSpec":
        return cls()

    @classmethod
    def from_images(cls, ring: CoeffRing, images: Mapping, inverse: Mapping | None = None) -> "EndoSpec":
        table = _image_table(ring, images)
        if all(v == ring.gen(k) for k, v in table):
            return cls()
        inv = None
        if inverse is not None:
            inv = _image_table(ring, inverse)
            fwd, bwd = cls(table), cls(inv)
            for name in ring.variable_names():
                t = ring.gen(name)
                if apply_endo(fwd, apply_endo(bwd, t)) != t or apply_endo(bwd, apply_endo(fwd, t)) != t:
                    raise EndomorphismError(f"inverse images do not invert the endomorphism at {name}")
        for name, value in table:
            if value.constant() is not None:
                raise EndomorphismError(f"image of {name} is constant; the endomorphism is not injective")
        return cls(table, inv)

    @property
    def is_identity(self) -> bool:
        return self.images is None

    @property
    def has_inverse(self) -> bool:
        return self.images is None or self.inverse_images is not None

    def inverse(self) -> "EndoSpec":
        if self.images is None:
            return self
        if self.inverse_images is None:
            raise MissingInverseError("endomorphism carries no inverse data")
        return EndoSpec(self.inverse_images, self.images)

    def image_map(self) -> dict:
        return dict(self.images or ())


@dataclass(frozen=True)
class DerivSpec:
    """A sigma-derivation given by the images of the ring variables."""

    images: tuple | None = None

    @classmethod
    def zero(cls) -> "DerivSpec":
        return cls()

    @classmethod
    def from_images(cls, ring: CoeffRing, images: Mapping) -> "DerivSpec":
        if not isinstance(ring, (PolynomialRing, RationalFunctionField)):
            raise EndomorphismError(f"derivation images are not available over {ring}")
        names = ring.variable_names()
        unknown = set(images) - set(names)
        if unknown:
            raise EndomorphismError(f"unknown variables {sorted(unknown)} for {ring}")
        table = tuple((name, ring.coerce(images.get(name, 0))) for name in names)
        if all(v.is_zero() for _, v in table):
            return cls()
        return cls(table)

    @property
    def is_zero(self) -> bool:
        return self.images is None

    def image_map(self) -> dict:
        return dict(self.images or ())


def _check_ring(spec, a: CoeffValue):
    for _, v in spec.images or ():
        if v.ring != a.ring:
            raise RingMismatchError(f"map over {v.ring} applied to a value over {a.ring}")
        break


def _horner(coeffs, x: CoeffValue) -> CoeffValue:
    out = x.ring.zero()
    for c in reversed(coeffs):
        out = out * x + c
    return out


@lru_cache(maxsize=1 << 16)
def apply_endo(sigma: EndoSpec, a: CoeffValue) -> CoeffValue:
    """Apply the ring endomorphism ``sigma`` to ``a``."""
    if sigma.images is None or a.is_zero():
        return a
    _check_ring(sigma, a)
    ring = a.ring
    imgs = [v for _, v in sigma.images]
    if isinstance(ring, RationalFunctionField):
        num, den = a.data
        x = imgs[0]
        return _horner(num, x) / _horner(den, x)
    powers: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = imgs[i] ** e
        return powers[key]

    out = ring.zero()
    for exp, c in a.data:
        term = ring.scalar(c)
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


def apply_endo_power(sigma: EndoSpec, k: int, a: CoeffValue) -> CoeffValue:
    """``sigma**k`` applied to ``a``; negative ``k`` uses the inverse."""
    if sigma.is_identity or k == 0:
        return a
    step = sigma if k > 0 else sigma.inverse()
    for _ in range(abs(k)):
        a = apply_endo(step, a)
    return a


@lru_cache(maxsize=1 << 16)
def apply_deriv(delta: DerivSpec, sigma: EndoSpec, a: CoeffValue) -> CoeffValue:
    """Apply the sigma-derivation ``delta`` (twisted by ``sigma``) to ``a``.

    Rational constants are killed; on products the twisted Leibniz rule
    ``delta(ab) = sigma(a) delta(b) + delta(a) b`` holds.
    """
    ring = a.ring
    if delta.images is None or a.is_zero():
        return ring.zero()
    _check_ring(delta, a)
    dimgs = [v for _, v in delta.images]
    if isinstance(ring, RationalFunctionField):
        num, den = a.data
        s = ring.from_polynomial(den)
        d_num = _deriv_univariate(num, dimgs[0], sigma, ring)
        if den == (_ONE,):
            return d_num
        d_den = _deriv_univariate(den, dimgs[0], sigma, ring)
        sig_den = apply_endo(sigma, s)
        return -(d_den / sig_den) * a + d_num / sig_den
    simgs = [ring.gen(v) for v in ring.variable_names()]
    if sigma.images is not None:
        simgs = [v for _, v in sigma.images]
    gens = [ring.gen(v) for v in ring.variable_names()]
    out = ring.zero()
    for exp, c in a.data:
        word = [i for i, e in enumerate(exp) for _ in range(e)]
        # suffix[i] = product of word[i:]
        suffix = [ring.one()] * (len(word) + 1)
        for i in range(len(word) - 1, -1, -1):
            suffix[i] = gens[word[i]] * suffix[i + 1]
        prefix = ring.one()
        acc = ring.zero()
        for i, g in enumerate(word):
            if dimgs[g]:
                acc = acc + prefix * dimgs[g] * suffix[i + 1]
            prefix = prefix * simgs[g]
        out = out + acc * c
    return out


def _deriv_univariate(coeffs, dq: CoeffValue, sigma: EndoSpec, ring: RationalFunctionField) -> CoeffValue:
    q = ring.gen()
    sq = apply_endo(sigma, q)
    out = ring.zero()
    d_k = ring.zero()
    q_pow = ring.one()
    for k, c in enumerate(coeffs):
        if k:
            d_k = sq * d_k + dq * q_pow
            q_pow = q_pow * q
        if c:
            out = out + d_k * c
    return out


# --------------------------------------------------------------------------
# coefficient-level Ore pairs


def ore_pair_left(a: CoeffValue, s: CoeffValue, ring: CoeffRing | None = None) -> tuple[CoeffValue, CoeffValue]:
    """Return ``(u, r)`` with ``u != 0`` and ``u*a == r*s``."""
    ring = ring or s.ring
    a, s = ring.coerce(a), ring.coerce(s)
    if s.is_zero():
        raise InvalidDenominatorError("Ore pair requested for a zero denominator")
    if ring.is_field:
        u, r = ring.one(), a / s
    else:
        u, r = s, a
    assert u * a == r * s
    return u, r


def ore_pair_right(a: CoeffValue, s: CoeffValue, ring: CoeffRing | None = None) -> tuple[CoeffValue, CoeffValue]:
    """Return ``(u, r)`` with ``u != 0`` and ``a*u == s*r``."""
    ring = ring or s.ring
    a, s = ring.coerce(a), ring.coerce(s)
    if s.is_zero():
        raise InvalidDenominatorError("Ore pair requested for a zero denominator")
    if ring.is_field:
        u, r = ring.one(), s.inverse() * a
    else:
        u, r = s, a
    assert a * u == s * r
    return u, r


# --------------------------------------------------------------------------
# fraction fields


def fraction_field(ring: CoeffRing) -> CoeffRing:
    """The field of fractions, where it is representable."""
    if ring.is_field:
        return ring
    if isinstance(ring, PolynomialRing) and ring.nvars == 1:
        return RationalFunctionField(ring.variables[0])
    raise UnsupportedFractionFieldError(f"no fraction-field representation for {ring}")


def to_fraction_field(a: CoeffValue) -> CoeffValue:
    """Embed ``a`` into ``fraction_field(a.ring)``."""
    ring = a.ring
    ff = fraction_field(ring)
    if ff is ring or ff == ring:
        return a
    coeffs = [_ZERO] * (max((e[0] for e, _ in a.data), default=-1) + 1)
    for (e,), c in a.data:
        coeffs[e] = c
    return ff.from_polynomial(coeffs)


def fraction_value(a: CoeffValue, s: CoeffValue) -> CoeffValue:
    """The fraction ``a/s`` as a value of the fraction field."""
    if s.is_zero():
        raise InvalidDenominatorError("zero denominator")
    return to_fraction_field(a) / to_fraction_field(s)


def extend_endo(sigma: EndoSpec, ring: CoeffRing) -> EndoSpec:
    """Transport ``sigma`` from ``ring`` to its fraction field by embedding images."""
    if sigma.is_identity:
        return sigma
    ff = fraction_field(ring)
    images = {k: to_fraction_field(v) for k, v in sigma.images}
    inverse = None
    if sigma.inverse_images is not None:
        inverse = {k: to_fraction_field(v) for k, v in sigma.inverse_images}
    return EndoSpec.from_images(ff, images, inverse)


def extend_deriv(delta: DerivSpec, ring: CoeffRing) -> DerivSpec:
    if delta.is_zero:
        return delta
    ff = fraction_field(ring)
    return DerivSpec.from_images(ff, {k: to_fraction_field(v) for k, v in delta.images})


def ring_from_spec(spec: Mapping) -> CoeffRing:
    kind = spec["kind"]
    if kind == "rational":
        return RationalField()
    if kind == "rational_function":
        return RationalFunctionField(spec.get("parameter", "q"))
    if kind == "polynomial":
        return PolynomialRing(tuple(spec["variables"]))
    raise ValueError(f"unknown ring kind {kind!r}")


def ring_to_spec(ring: CoeffRing) -> dict:
    if isinstance(ring, RationalField):
        return {"kind": "rational"}
    if isinstance(ring, RationalFunctionField):
        return {"kind": "rational_function", "parameter": ring.parameter}
    return {"kind": "polynomial", "variables": list(ring.variables)}
