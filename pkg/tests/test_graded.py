import random

import pytest

from skewpbw.errors import InvalidPresentationError, UndefinedLeaderError
from skewpbw.graded import associated_graded_presentation, in_filtration, iterated_skew_view, principal_symbol
from skewpbw.pbwcore import check_presentation
from skewpbw.sampling import random_element

from conftest import ALGEBRAS


def test_weyl_graded_is_commutative(catalog):
    G = associated_graded_presentation(catalog["weyl1"])
    assert G.quasi_commutative and G.bijective
    assert G.parse("x*t") == G.parse("t*x")


def test_quantum_plane_is_a_fixpoint(catalog):
    P = catalog["quantum-plane"]
    assert associated_graded_presentation(P) == P


def test_sl2_graded_is_polynomial(catalog):
    G = associated_graded_presentation(catalog["sl2"])
    e, f, h = G.gens()
    assert f * e == e * f and h * e == e * h and h * f == f * h
    assert all(G.c(i, j) == 1 for i in range(3) for j in range(i + 1, 3))


def test_graded_is_cached(catalog):
    P = catalog["sl2"]
    assert P.graded() is P.graded()


def test_principal_symbol_examples(catalog):
    W = catalog["weyl1"]
    assert str(principal_symbol(W.parse("t*x + 1"))) == "t*x1"
    Q = catalog["quantum-plane"]
    f = Q.parse("x1*x2 + x1 + 1")
    assert str(principal_symbol(f)) == "x1*x2"
    h = Q.parse("x1*x2 + x2^2")
    assert principal_symbol(h) == h
    with pytest.raises(UndefinedLeaderError):
        principal_symbol(W.zero())


def test_filtration_membership(catalog):
    W = catalog["weyl1"]
    assert in_filtration(W.parse("t*x + 1"), 1)
    assert not in_filtration(W.parse("x^2"), 1)
    assert in_filtration(W.zero(), 0)


@pytest.mark.parametrize("name", ALGEBRAS)
def test_symbol_multiplicative(catalog, name):
    P = catalog[name]
    rng = random.Random(13)
    for _ in range(40):
        f = random_element(P, rng, max_deg=3, max_terms=4, nonzero=True)
        g = random_element(P, rng, max_deg=3, max_terms=4, nonzero=True)
        fg = f * g
        assert fg.degree <= f.degree + g.degree
        if fg.degree == f.degree + g.degree:
            assert principal_symbol(fg) == principal_symbol(f) * principal_symbol(g)


def test_iterated_view_quantum(catalog):
    P = catalog["quantum-plane"]
    view = iterated_skew_view(P)
    q = P.ring.gen()
    assert view.generator_action[1] == (q,)
    assert view.theta(1, P.gen(0)) == q * P.gen(0)
    assert view.rebuild() == P


def test_iterated_view_quantum_space(catalog):
    P = catalog["quantum-space3"]
    view = iterated_skew_view(P)
    q = P.ring.gen()
    assert view.theta(2, P.gen(0)) == q**2 * P.gen(0)
    assert view.theta(2, P.gen(1)) == q**3 * P.gen(1)
    # theta is multiplicative on the subalgebra it acts on
    f, g = P.parse("x1 + 2*x2^2"), P.parse("x1*x2 - 3")
    assert view.theta(2, f * g) == view.theta(2, f) * view.theta(2, g)
    assert all(c.is_unit() for row in view.generator_action for c in row)


def test_iterated_view_single_generator(catalog):
    view = iterated_skew_view(catalog["shift"])
    assert view.generator_action == ((),)
    assert view.rebuild() == catalog["shift"]


def test_iterated_view_needs_quasi_commutative(catalog):
    with pytest.raises(InvalidPresentationError):
        iterated_skew_view(catalog["weyl1"])


@pytest.mark.parametrize("name", ALGEBRAS)
def test_graded_presentations_check(catalog, name):
    G = associated_graded_presentation(catalog[name])
    assert G.quasi_commutative
    assert check_presentation(G).ok
