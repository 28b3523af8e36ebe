"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with pytest (the summary lines appear at the end of the session) or
directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ALGEBRAS, BIJECTIVE  # noqa: E402

from skewpbw.algebras import CORRUPTED, build_catalog, torus_oracle_factor, weyl_oracle_apply  # noqa: E402
from skewpbw.coeffring import EndoSpec, PolynomialRing, RationalFunctionField  # noqa: E402
from skewpbw.graded import associated_graded_presentation, principal_symbol  # noqa: E402
from skewpbw.orelocal import (  # noqa: E402
    LEFT,
    RIGHT,
    NonzeroCoefficients,
    OreFraction,
    embed,
    frac_add,
    frac_eq,
    frac_mul,
    frac_neg,
    left_fraction,
    ore_solve_left,
    ore_solve_right,
)
from skewpbw.pbwcore import check_presentation, monomial_times_coeff, monomial_times_monomial, mul, sigma_alpha  # noqa: E402
from skewpbw.quantum import (  # noqa: E402
    QMatrix,
    QuantumSetSpec,
    QuantumTorus,
    fraction_to_laurent,
    gk_structure_check,
    laurent_to_fraction,
    q_factor,
    quantum_space_presentation,
    torus_mul,
)
from skewpbw.sampling import random_coeff, random_element, random_laurent, random_monomial  # noqa: E402

RESULTS: dict = {}

TITLES = {
    1: "associativity and distributivity",
    2: "monomial-times-coefficient and monomial-times-monomial contracts",
    3: "Ore solver soundness",
    4: "fraction calculus",
    5: "Weyl algebra oracle",
    6: "quantum torus oracle and Laurent round trip",
    7: "graded structure",
    8: "consistency detection",
    9: "dual-route localization check",
    10: "no zero divisors",
}


def _catalog():
    return {name: build_catalog(name) for name in ALGEBRAS}


def _record(number: int, failures: list) -> None:
    RESULTS[number] = failures
    status = "PASS" if not failures else f"FAIL ({len(failures)} failures; first: {failures[0]})"
    print(f"criterion {number}: {status}: {TITLES[number]}")
    assert not failures, failures[:3]


def _lower(p, bound: int) -> bool:
    return p.is_zero() or p.degree < bound


# --------------------------------------------------------------------------


def test_criterion_01_ring_laws():
    failures = []
    for name, P in _catalog().items():
        rng = random.Random(f"c1-{name}")
        for k in range(200):
            f, g, h = (random_element(P, rng) for _ in range(3))
            if (f * g) * h != f * (g * h):
                failures.append(f"{name}#{k}: (fg)h != f(gh)")
            if f * (g + h) != f * g + f * h:
                failures.append(f"{name}#{k}: f(g+h) != fg+fh")
            if (f + g) * h != f * h + g * h:
                failures.append(f"{name}#{k}: (f+g)h != fh+gh")
    _record(1, failures)


def test_criterion_02_leading_term_contracts():
    failures = []
    for name, P in _catalog().items():
        rng = random.Random(f"c2-{name}")
        for k in range(200):
            alpha = random_monomial(P.n, rng, 4)
            r = random_coeff(P.ring, rng, nonzero=True)
            r_alpha, p = monomial_times_coeff(alpha, r, P)
            direct = mul(P.monomial(alpha), P.const(r))
            if r_alpha != sigma_alpha(alpha, r, P) or direct != P.monomial(alpha, r_alpha) + p:
                failures.append(f"{name}#{k}: x^{alpha} r leading coefficient")
            if not _lower(p, sum(alpha)) or (P.quasi_commutative and not p.is_zero()):
                failures.append(f"{name}#{k}: x^{alpha} r remainder {p}")

            beta = random_monomial(P.n, rng, 4)
            target = tuple(a + b for a, b in zip(alpha, beta))
            c, p = monomial_times_monomial(alpha, beta, P)
            if mul(P.monomial(alpha), P.monomial(beta)) != P.monomial(target, c) + p or c.is_zero():
                failures.append(f"{name}#{k}: x^{alpha} x^{beta} leading coefficient")
            if not _lower(p, sum(target)) or (P.quasi_commutative and not p.is_zero()):
                failures.append(f"{name}#{k}: x^{alpha} x^{beta} remainder {p}")
            if P.bijective and not c.is_unit():
                failures.append(f"{name}#{k}: c_(alpha,beta) = {c} is not a unit")
    _record(2, failures)


def test_criterion_03_ore_solvers():
    failures = []
    catalog = _catalog()
    for name, P in catalog.items():
        rng = random.Random(f"c3-{name}")
        for k in range(100):
            f = random_element(P, rng)
            s = random_coeff(P.ring, rng, nonzero=True)
            u, g = ore_solve_left(f, s)
            if u.is_zero() or mul(P.const(u), f) != mul(g, P.const(s)):
                failures.append(f"{name}#{k}: left solver, f={f}, s={s}")
            if name in BIJECTIVE:
                u, g = ore_solve_right(f, s)
                if u.is_zero() or mul(f, P.const(u)) != mul(P.const(s), g):
                    failures.append(f"{name}#{k}: right solver, f={f}, s={s}")
    W = catalog["weyl1"]
    t = W.ring.gen("t")
    u, g = ore_solve_left(W.gen(0), t)
    if not frac_eq(left_fraction(u, g), left_fraction(t**2, W.parse("t*x - 1"))):
        failures.append(f"weyl1: (x, t) gave ({u}, {g})")
    _record(3, failures)


FRACTION_ALGEBRAS = ["weyl1", "weyl2", "shift", "quantum-plane", "sl2"]


def _random_fraction(P, rng, side):
    S = NonzeroCoefficients(P)
    s = random_coeff(P.ring, rng, height=5, nonzero=True)
    a = random_element(P, rng, max_deg=2, max_terms=3, height=5)
    return OreFraction(side, s, a, S)


def _times_one(phi, P, rng):
    """An equal fraction with a different representative, via phi * (t^-1 t)."""
    t = random_coeff(P.ring, rng, height=5, nonzero=True)
    one = OreFraction(phi.side, t, P.const(t), phi.S)
    return frac_mul(phi, one)


def test_criterion_04_fraction_calculus():
    failures = []
    catalog = _catalog()
    for k in range(100):
        name = FRACTION_ALGEBRAS[k % len(FRACTION_ALGEBRAS)]
        P = catalog[name]
        side = LEFT if k % 2 == 0 else RIGHT
        rng = random.Random(f"c4-{k}")
        phi, psi, chi = (_random_fraction(P, rng, side) for _ in range(3))
        tag = f"{name}/{side}#{k}"

        # equivalence relation
        if not frac_eq(phi, phi):
            failures.append(f"{tag}: not reflexive")
        if frac_eq(phi, psi) != frac_eq(psi, phi):
            failures.append(f"{tag}: not symmetric on a random pair")
        phi2 = _times_one(phi, P, rng)
        phi3 = _times_one(phi2, P, rng)
        if not (frac_eq(phi, phi2) and frac_eq(phi2, phi) and frac_eq(phi2, phi3)):
            failures.append(f"{tag}: equal representatives not recognised")
        elif not frac_eq(phi, phi3):
            failures.append(f"{tag}: not transitive")

        # witness invariance: another Ore witness and another representative
        w = random_coeff(P.ring, rng, height=5, nonzero=True)
        if not frac_eq(frac_add(phi, psi), frac_add(phi, psi, witness=w)):
            failures.append(f"{tag}: sum depends on the witness")
        if not frac_eq(frac_mul(phi, psi), frac_mul(phi, psi, witness=w)):
            failures.append(f"{tag}: product depends on the witness")
        if not frac_eq(frac_add(phi, psi), frac_add(phi2, psi)):
            failures.append(f"{tag}: sum depends on the representative")
        if not (frac_eq(frac_mul(phi, psi), frac_mul(phi2, psi)) and frac_eq(frac_mul(psi, phi), frac_mul(psi, phi2))):
            failures.append(f"{tag}: product depends on the representative")

        # ring axioms
        zero, one = embed(P.zero(), side), embed(P.one(), side)
        checks = {
            "additive associativity": (frac_add(frac_add(phi, psi), chi), frac_add(phi, frac_add(psi, chi))),
            "additive commutativity": (frac_add(phi, psi), frac_add(psi, phi)),
            "additive identity": (frac_add(phi, zero), phi),
            "additive inverse": (frac_add(phi, frac_neg(phi)), zero),
            "multiplicative identity": (frac_mul(one, phi), frac_mul(phi, one)),
            "multiplicative associativity": (frac_mul(frac_mul(phi, psi), chi), frac_mul(phi, frac_mul(psi, chi))),
            "left distributivity": (frac_mul(phi, frac_add(psi, chi)), frac_add(frac_mul(phi, psi), frac_mul(phi, chi))),
            "right distributivity": (frac_mul(frac_add(phi, psi), chi), frac_add(frac_mul(phi, chi), frac_mul(psi, chi))),
        }
        for law, (lhs, rhs) in checks.items():
            if not frac_eq(lhs, rhs):
                failures.append(f"{tag}: {law}")
        if not frac_eq(frac_mul(one, phi), phi):
            failures.append(f"{tag}: one * phi != phi")

    W = catalog["weyl1"]
    t = W.ring.gen("t")
    worked = frac_mul(left_fraction(t, W.gen(0)), left_fraction(t, W.one()))
    if not frac_eq(worked, left_fraction(t**3, W.parse("t*x - 1"))):
        failures.append(f"worked identity gave {worked}")
    _record(4, failures)


def test_criterion_05_weyl_oracle():
    failures = []
    W = build_catalog("weyl1")
    rng = random.Random("c5")
    for k in range(100):
        f, g = random_element(W, rng), random_element(W, rng)
        m = rng.randint(0, 8)
        p = {m: Fraction(1)}
        if weyl_oracle_apply(mul(f, g), p) != weyl_oracle_apply(f, weyl_oracle_apply(g, p)):
            failures.append(f"#{k}: f={f}, g={g}, m={m}")
    _record(5, failures)


def _random_quantum_fraction(P, S, rng, side):
    alpha = tuple(rng.randint(0, 2) if i < S.r else 0 for i in range(P.n))
    denom = P.monomial(alpha, random_coeff(P.ring, rng, height=5, nonzero=True))
    return OreFraction(side, denom, random_element(P, rng, max_deg=3, max_terms=3, height=5), S)


def test_criterion_06_quantum_oracle():
    failures = []
    catalog = _catalog()
    for name in ("quantum-plane", "quantum-space3"):
        P = catalog[name]
        T = QuantumTorus.from_presentation(P)
        q = QMatrix.from_presentation(P)
        rng = random.Random(f"c6-{name}")
        for k in range(200):
            f = random_element(P, rng, max_deg=6)
            g = random_element(P, rng, max_deg=6)
            if torus_mul(T.from_element(f), T.from_element(g)) != T.from_element(mul(f, g)):
                failures.append(f"{name}#{k}: torus product of {f} and {g}")
            alpha, beta = random_monomial(P.n, rng, 6), random_monomial(P.n, rng, 6)
            if q_factor(alpha, beta, q) != torus_oracle_factor(alpha, beta, q):
                failures.append(f"{name}#{k}: q-factor of {alpha}, {beta}")
        for k in range(50):
            side = LEFT if k % 2 == 0 else RIGHT
            S = QuantumSetSpec(P, P.n if k % 3 else 1)
            phi = _random_quantum_fraction(P, S, rng, side)
            back = laurent_to_fraction(fraction_to_laurent(phi, QuantumTorus.from_presentation(P, S.r)), side)
            if not frac_eq(back, phi):
                failures.append(f"{name}#{k}: fraction round trip of {phi} gave {back}")
            L = random_laurent(T, rng)
            if fraction_to_laurent(laurent_to_fraction(L, side), T) != L:
                failures.append(f"{name}#{k}: Laurent round trip of {L}")
    _record(6, failures)


def test_criterion_07_graded_structure():
    failures = []
    for name, P in _catalog().items():
        rng = random.Random(f"c7-{name}")
        G = associated_graded_presentation(P)
        if not G.quasi_commutative or not check_presentation(G).ok:
            failures.append(f"{name}: associated graded presentation is not a valid quasi-commutative one")
        for k in range(200):
            f = random_element(P, rng, nonzero=True)
            g = random_element(P, rng, nonzero=True)
            fg = mul(f, g)
            if fg.degree > f.degree + g.degree:
                failures.append(f"{name}#{k}: degree grew")
            elif fg.degree == f.degree + g.degree and principal_symbol(fg) != mul(principal_symbol(f), principal_symbol(g)):
                failures.append(f"{name}#{k}: symbol not multiplicative")
    _record(7, failures)


def test_criterion_08_consistency_detection():
    failures = []
    for name, P in _catalog().items():
        report = check_presentation(P)
        if not report.ok:
            failures.append(f"{name}: {report}")
    expected = {"broken-sl2": "x3*x2*x1", "zero-c12": "c[1,2]"}
    for name in CORRUPTED:
        report = check_presentation(build_catalog(name))
        if report.ok:
            failures.append(f"{name}: accepted")
        elif not any(v.location == expected[name] for v in report.violations):
            failures.append(f"{name}: violation not localized at {expected[name]}: {report}")
    _record(8, failures)


def _gk_cases():
    F = RationalFunctionField("q")
    q = F.gen()
    R = PolynomialRing(("t",))
    t = R.gen("t")
    shifts = [EndoSpec.from_images(R, {"t": t + i + 1}, {"t": t - i - 1}) for i in range(3)]
    yield "Q(q) (1,2)", 1, 2, QMatrix(F, 2, {(0, 1): q}), None, F
    yield "Q(q) (2,3)", 2, 3, QMatrix(F, 3, {(0, 1): q, (0, 2): q**2, (1, 2): q**3}), None, F
    yield "Q[t] (1,2)", 1, 2, QMatrix(R, 2, {(0, 1): Fraction(2)}), shifts[:2], R
    yield "Q[t] (2,3)", 2, 3, QMatrix(R, 3, {(0, 1): Fraction(3, 2), (0, 2): Fraction(-5), (1, 2): Fraction(1, 7)}), shifts, R
    yield "Q[t] trivial sigma (2,3)", 2, 3, QMatrix(R, 3, {(0, 1): Fraction(2), (1, 2): Fraction(-3)}), None, R


def test_criterion_09_dual_route():
    from skewpbw.coeffring import extend_endo, fraction_field

    failures = []
    for label, r, n, q, sigma, ring in _gk_cases():
        report = gk_structure_check(r, n, q, sigma, ring, k=50, seed=9)
        if not report.ok or report.agreements != 50:
            failures.append(f"{label}: {report}")
        F = fraction_field(ring)
        sig = [extend_endo(s, ring) for s in sigma] if sigma else None
        wrong = quantum_space_presentation(q.over(F).swapped(0, 1), sig, F)
        if gk_structure_check(r, n, q, sigma, ring, k=50, seed=9, route_b=wrong).ok:
            failures.append(f"{label}: corrupted route accepted")
    _record(9, failures)


def test_criterion_10_domain():
    failures = []
    for name, P in _catalog().items():
        rng = random.Random(f"c10-{name}")
        for k in range(500):
            f = random_element(P, rng, nonzero=True)
            g = random_element(P, rng, nonzero=True)
            if mul(f, g).is_zero():
                failures.append(f"{name}#{k}: ({f}) * ({g}) = 0")
    _record(10, failures)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
