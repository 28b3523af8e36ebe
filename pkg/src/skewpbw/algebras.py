"""Catalog presentations and brute-force oracles.

The oracles deliberately avoid the rewriting engine and the coefficient
arithmetic of :mod:`skewpbw.coeffring`: polynomials are plain
``{exponent: Fraction}`` dictionaries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .coeffring import (
    CoeffValue,
    DerivSpec,
    EndoSpec,
    PolynomialRing,
    RationalField,
    RationalFunctionField,
)
from .errors import InvalidPresentationError
from .pbwcore import Element, Presentation
from .quantum import QMatrix, quantum_space_presentation


def weyl(n: int = 1) -> Presentation:
    """The Weyl algebra ``A_n``: ``x_i t_j = t_j x_i + [i == j]``."""
    names = ("t",) if n == 1 else tuple(f"t{i + 1}" for i in range(n))
    R = PolynomialRing(names)
    deltas = [DerivSpec.from_images(R, {v: int(k == i) for k, v in enumerate(names)}) for i in range(n)]
    return Presentation(R, n, delta=deltas)


def shift_algebra() -> Presentation:
    """``x t = (t + 1) x`` over ``QQ[t]``."""
    R = PolynomialRing(("t",))
    t = R.gen("t")
    return Presentation(R, 1, sigma=[EndoSpec.from_images(R, {"t": t + 1}, {"t": t - 1})])


def quantum_plane() -> Presentation:
    F = RationalFunctionField("q")
    return quantum_space_presentation(QMatrix(F, 2, {(0, 1): F.gen()}))


def quantum_space(n: int = 3, qmatrix: QMatrix | None = None) -> Presentation:
    """Quantum space over ``QQ(q)``; by default ``q_ij = q^(i+j-2)`` in 1-based indices.

    For ``n = 3`` that is ``q12 = q, q13 = q^2, q23 = q^3``.
    """
    F = RationalFunctionField("q")
    if qmatrix is None:
        q = F.gen()
        qmatrix = QMatrix(F, n, {(i, j): q ** (i + j) for i in range(n) for j in range(i + 1, n)})
    return quantum_space_presentation(qmatrix)


def enveloping_lie(structure: Mapping, dim: int, *, check: bool = True) -> Presentation:
    """``U(g)`` with ``x_j x_i = x_i x_j + [x_j, x_i]`` over ``QQ``.

    ``structure`` maps 0-based pairs ``(j, i)`` to ``{k: c}`` meaning
    ``[x_j, x_i] = sum c x_k``; either orientation of a pair may be given
    and the other is obtained by antisymmetry.
    """
    bracket: dict = {}
    for (a, b), vec in structure.items():
        if a == b:
            if any(Fraction(v) for v in vec.values()):
                raise InvalidPresentationError(f"[x{a + 1}, x{a + 1}] must vanish")
            continue
        vec = {k: Fraction(v) for k, v in vec.items() if Fraction(v)}
        key, sign = ((a, b), 1) if a > b else ((b, a), -1)
        vec = {k: sign * v for k, v in vec.items()}
        if key in bracket and bracket[key] != vec:
            raise InvalidPresentationError(f"structure constants for x{a + 1}, x{b + 1} are not antisymmetric")
        bracket[key] = vec
    tails = {}
    for (j, i), vec in bracket.items():
        tails[(i, j)] = {tuple(int(m == k) for m in range(dim)): v for k, v in vec.items()}
    return Presentation(RationalField(), dim, tails=tails, check=check)


SL2_BRACKETS = {(1, 0): {2: -1}, (2, 0): {0: 2}, (2, 1): {1: -2}}


def sl2() -> Presentation:
    """``U(sl2)`` in the order ``e, f, h``: ``fe = ef - h``, ``he = eh + 2e``, ``hf = fh - 2f``."""
    return enveloping_lie(SL2_BRACKETS, 3)


def broken_sl2() -> Presentation:
    """``U(sl2)`` with ``he = eh + 3e``; built unchecked since it is inconsistent."""
    return enveloping_lie({(1, 0): {2: -1}, (2, 0): {0: 3}, (2, 1): {1: -2}}, 3, check=False)


def zero_constant_plane() -> Presentation:
    """A quantum-plane-like presentation with ``c_12 = 0``; built unchecked."""
    F = RationalFunctionField("q")
    return Presentation(F, 2, c={(0, 1): 0}, check=False)


CATALOG: dict[str, Callable[[], Presentation]] = {
    "weyl1": lambda: weyl(1),
    "weyl2": lambda: weyl(2),
    "shift": shift_algebra,
    "quantum-plane": quantum_plane,
    "quantum-space3": lambda: quantum_space(3),
    "sl2": sl2,
}

CORRUPTED: dict[str, Callable[[], Presentation]] = {
    "broken-sl2": broken_sl2,
    "zero-c12": zero_constant_plane,
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def build_catalog(name: str) -> Presentation:
    if name in CATALOG:
        return CATALOG[name]()
    if name in CORRUPTED:
        return CORRUPTED[name]()
    raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(list(CATALOG) + list(CORRUPTED))}")


# --------------------------------------------------------------------------
# oracles


def _poly_dict(p) -> dict:
    """``{exponent: Fraction}`` from a univariate CoeffValue, a mapping or a coefficient list."""
    if isinstance(p, CoeffValue):
        return {e[0]: Fraction(c) for e, c in p.data}
    if isinstance(p, Mapping):
        return {int(k): Fraction(v) for k, v in p.items() if Fraction(v)}
    if isinstance(p, (int, Fraction)):
        return {0: Fraction(p)} if p else {}
    return {k: Fraction(v) for k, v in enumerate(p) if Fraction(v)}


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, u in a.items():
        for j, v in b.items():
            out[i + j] = out.get(i + j, 0) + u * v
    return {k: v for k, v in out.items() if v}


def _pderiv(a: dict) -> dict:
    return {k - 1: k * v for k, v in a.items() if k}


def weyl_oracle_apply(f: Element, p) -> dict:
    """Act with ``f`` in ``A_1`` on ``p(t)``: ``x`` is ``d/dt``, ``t`` multiplies.

    Returns the result as ``{exponent: Fraction}``.
    """
    poly = _poly_dict(p)
    out: dict = {}
    for (k,), c in f.terms:
        d = poly
        for _ in range(k):
            d = _pderiv(d)
        for e, v in _pmul(_poly_dict(c), d).items():
            out[e] = out.get(e, 0) + v
    return {k: v for k, v in out.items() if v}


def torus_oracle_factor(alpha, beta, q: QMatrix) -> CoeffValue:
    """Recompute ``Q(alpha, beta)`` by bubble-sorting the word ``x^alpha x^beta``."""
    if min(tuple(alpha) + tuple(beta), default=0) < 0:
        raise ValueError("the oracle handles natural exponents only")
    word = [i for i, a in enumerate(alpha) for _ in range(a)] + [i for i, b in enumerate(beta) for _ in range(b)]
    factor = q.ring.one()
    changed = True
    while changed:
        changed = False
        for pos in range(len(word) - 1):
            j, i = word[pos], word[pos + 1]
            if j > i:
                # x_j x_i = q_ij x_i x_j
                word[pos], word[pos + 1] = i, j
                factor = factor * q[(i, j)]
                changed = True
    return factor
