import random
from fractions import Fraction

import pytest

from skewpbw.algebras import broken_sl2, shift_algebra, sl2, weyl, zero_constant_plane
from skewpbw.coeffring import DerivSpec, EndoSpec, PolynomialRing, RationalField, RationalFunctionField
from skewpbw.errors import (
    InvalidPresentationError,
    NegativeExponentError,
    PresentationMismatchError,
    UndefinedLeaderError,
)
from skewpbw.pbwcore import (
    Ordering,
    Presentation,
    add,
    check_presentation,
    compare_monomials,
    leading_data,
    monomial_times_coeff,
    monomial_times_monomial,
    mul,
    normalize,
    sigma_alpha,
)
from skewpbw.sampling import random_coeff, random_element

from conftest import ALGEBRAS


def test_compare_monomials():
    assert compare_monomials((1, 0), (0, 1)) is Ordering.GREATER
    assert compare_monomials((0, 2), (1, 0)) is Ordering.GREATER
    assert compare_monomials((1, 1), (1, 1)) is Ordering.EQUAL
    assert compare_monomials((0, 1), (1, 0)) is Ordering.LESS
    with pytest.raises(ValueError):
        compare_monomials((1,), (1, 0))


def test_normalize(catalog):
    P = catalog["quantum-plane"]
    assert normalize([((1, 0), 1), ((1, 0), -1)], P).is_zero()
    f = normalize([((0, 1), 1), ((1, 0), 1)], P)
    assert f.monomials() == [(1, 0), (0, 1)]
    assert str(f) == "x1 + x2"
    c = normalize([((0, 0), Fraction(2, 3))], P)
    assert c.is_constant() and c.constant_value() == Fraction(2, 3)


def test_add(catalog):
    P = catalog["quantum-plane"]
    x1 = P.gen(0)
    f = P.parse("x1 + x2")
    assert add(f, P.zero()) == f
    assert add(x1, -x1).is_zero()
    assert add(P.parse("x1 + 1"), P.parse("x1 - 1")) == 2 * x1
    with pytest.raises(PresentationMismatchError):
        add(x1, catalog["weyl1"].gen(0))


def test_weyl_products():
    W = weyl(1)
    x, t = W.gen(0), W.parse("t")
    assert str(mul(x, t)) == "t*x1 + 1"
    assert str(mul(x * x, t)) == "t*x1^2 + 2*x1"


def test_weyl2_product():
    W = weyl(2)
    lhs = W.parse("x1*x2*t1*t2")
    # (t1 x1 + 1)(t2 x2 + 1), the t's commute with the other x
    assert lhs == W.parse("t1*t2*x1*x2 + t1*x1 + t2*x2 + 1")


def test_quantum_products(catalog):
    P = catalog["quantum-plane"]
    x1, x2 = P.gens()
    assert str(mul(x2**2, x1**2)) == "q^4*x1^2*x2^2"
    Q3 = catalog["quantum-space3"]
    y1, y2, y3 = Q3.gens()
    assert str(y3 * y2 * y1) == "q^6*x1*x2*x3"


def test_sl2_products():
    U = sl2()
    e, f, h = U.gens()
    assert str(f * e) == "x1*x2 - x3"
    assert str(h * e) == "x1*x3 + 2*x1"
    assert str(h * f) == "x2*x3 - 2*x2"
    # f e^2 = (ef - h) e = e(ef - h) - (eh + 2e)
    assert f * e * e == U.parse("x1^2*x2 - 2*x1*x3 - 2*x1")


def test_shift_products():
    S = shift_algebra()
    assert S.parse("x*t") == S.parse("(t+1)*x")
    assert S.parse("x^2*t") == S.parse("(t+2)*x^2")


def test_sigma_alpha_examples():
    S = shift_algebra()
    t = S.ring.gen("t")
    assert sigma_alpha((0,), t, S) == t
    assert sigma_alpha((3,), t, S) == t + 3
    R = PolynomialRing(("t",))
    t = R.gen("t")
    D = Presentation(R, 1, sigma=[EndoSpec.from_images(R, {"t": 2 * t})])
    assert sigma_alpha((2,), t**2, D) == 16 * t**2


def test_monomial_times_coeff_examples():
    W = weyl(1)
    t = W.ring.gen("t")
    assert monomial_times_coeff((0,), t, W) == (t, W.zero())
    r, p = monomial_times_coeff((1,), t, W)
    assert r == t and p == W.one()
    with pytest.raises(ValueError):
        monomial_times_coeff((1,), 0, W)


def test_monomial_times_monomial_examples(catalog):
    P = catalog["quantum-plane"]
    q = P.ring.gen()
    assert monomial_times_monomial((0, 2), (0, 0), P) == (P.ring.one(), P.zero())
    assert monomial_times_monomial((0, 2), (2, 0), P) == (q**4, P.zero())
    W = catalog["weyl1"]
    assert monomial_times_monomial((1,), (1,), W) == (W.ring.one(), W.zero())


def test_leading_data(catalog):
    P = catalog["quantum-plane"]
    assert leading_data(P.parse("2*x1 + x2")) == ((1, 0), 2, 1)
    assert leading_data(P.parse("x2^2 + x1")) == ((0, 2), 1, 2)
    W = catalog["weyl1"]
    lm, lc, d = leading_data(W.parse("t*x + 1"))
    assert (lm, str(lc), d) == ((1,), "t", 1)
    with pytest.raises(UndefinedLeaderError):
        leading_data(W.zero())


def test_catalog_presentations_pass(catalog):
    for P in catalog.values():
        assert check_presentation(P).ok


def test_broken_presentations_are_localized():
    report = check_presentation(broken_sl2())
    assert not report.ok
    assert any(v.kind == "overlap" and v.location == "x3*x2*x1" for v in report.violations)
    report = check_presentation(zero_constant_plane())
    assert [(v.kind, v.location) for v in report.violations] == [("axiom", "c[1,2]")]
    with pytest.raises(InvalidPresentationError):
        broken_sl2().replace()


def test_incompatible_derivation_is_detected():
    R = PolynomialRing(("t1", "t2"))
    t1, t2 = R.gen("t1"), R.gen("t2")
    sigma = EndoSpec.from_images(R, {"t1": t1 + 1, "t2": t2 + 2}, {"t1": t1 - 1, "t2": t2 - 2})
    delta = DerivSpec.from_images(R, {"t1": 1, "t2": 1})  # needs delta(t2) = 2 delta(t1)
    P = Presentation(R, 1, sigma=[sigma], delta=[delta], check=False)
    report = check_presentation(P)
    assert any(v.kind == "coefficient-overlap" for v in report.violations)


def test_flag_consistency():
    QQ = RationalField()
    P = Presentation(QQ, 2, tails={(0, 1): {(0, 0): 1}}, quasi_commutative=True, check=False)
    assert any(v.kind == "flag" for v in check_presentation(P).violations)
    R = PolynomialRing(("t",))
    t = R.gen("t")
    P = Presentation(R, 1, sigma=[EndoSpec.from_images(R, {"t": 2 * t})], bijective=True, check=False)
    assert any(v.kind == "flag" for v in check_presentation(P).violations)


def test_higher_degree_tails_rejected():
    with pytest.raises(InvalidPresentationError):
        Presentation(RationalField(), 2, tails={(0, 1): {(1, 1): 1}})


def test_negative_powers_rejected(catalog):
    P = catalog["quantum-plane"]
    with pytest.raises(NegativeExponentError):
        P.gen(0) ** -1
    assert P.const(2) ** -1 == P.const(Fraction(1, 2))


def test_right_multiplication_by_coefficients():
    W = weyl(1)
    x = W.gen(0)
    t = W.ring.gen("t")
    assert x * t == W.parse("t*x + 1")
    assert t * x == W.parse("t*x")
    assert W.parse("x/2") == W.parse("1/2*x")


@pytest.mark.parametrize("name", ALGEBRAS)
def test_leading_term_law(catalog, name):
    P = catalog[name]
    rng = random.Random(5)
    for _ in range(60):
        f = random_element(P, rng, max_deg=3, max_terms=3, nonzero=True)
        g = random_element(P, rng, max_deg=3, max_terms=3, nonzero=True)
        (a, ca, _), (b, cb, _) = leading_data(f), leading_data(g)
        fg = f * g
        lm, lc, _ = leading_data(fg)
        assert lm == tuple(x + y for x, y in zip(a, b))
        assert lc == ca * sigma_alpha(a, cb, P) * monomial_times_monomial(a, b, P)[0]


@pytest.mark.parametrize("name", ALGEBRAS)
def test_left_bilinearity(catalog, name):
    P = catalog[name]
    rng = random.Random(6)
    for _ in range(40):
        f, g = random_element(P, rng, max_deg=3), random_element(P, rng, max_deg=3)
        r = random_coeff(P.ring, rng)
        assert (r * f) * g == r * (f * g)
        assert (f + g) * g == f * g + g * g


@pytest.mark.parametrize("name", ALGEBRAS)
def test_sigma_alpha_composes(catalog, name):
    P = catalog[name]
    rng = random.Random(8)
    for _ in range(30):
        a = tuple(rng.randint(0, 3) for _ in range(P.n))
        b = tuple(rng.randint(0, 3) for _ in range(P.n))
        r = random_coeff(P.ring, rng)
        ab = tuple(x + y for x, y in zip(a, b))
        assert sigma_alpha(ab, r, P) == sigma_alpha(a, sigma_alpha(b, r, P), P)


def test_elements_are_canonical(catalog):
    P = catalog["sl2"]
    f = P.parse("x3*x2*x1 + x1")
    keys = [(sum(a), a) for a in f.monomials()]
    assert keys == sorted(keys, reverse=True)
    assert all(c for _, c in f.terms)
    assert hash(f) == hash(P.parse(str(f)))
