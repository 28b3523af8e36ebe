import random
from fractions import Fraction

import pytest

from skewpbw.algebras import (
    CATALOG,
    CORRUPTED,
    build_catalog,
    catalog_names,
    enveloping_lie,
    quantum_space,
    torus_oracle_factor,
    weyl,
    weyl_oracle_apply,
)
from skewpbw.errors import InvalidPresentationError
from skewpbw.pbwcore import check_presentation
from skewpbw.quantum import QMatrix
from skewpbw.sampling import random_element


def test_weyl_oracle_examples():
    W = weyl(1)
    assert weyl_oracle_apply(W.gen(0), {3: 1}) == {2: Fraction(3)}
    assert weyl_oracle_apply(W.parse("t*x + 1"), {1: 1}) == {1: Fraction(2)}
    assert weyl_oracle_apply(W.parse("x^2"), [1, 1]) == {}


def test_weyl_product_is_composition():
    W = weyl(1)
    rng = random.Random(8)
    for _ in range(40):
        f = random_element(W, rng, max_deg=3, max_terms=3)
        g = random_element(W, rng, max_deg=3, max_terms=3)
        p = {k: Fraction(rng.randint(-5, 5)) for k in range(rng.randint(0, 6))}
        assert weyl_oracle_apply(f * g, p) == weyl_oracle_apply(f, weyl_oracle_apply(g, p))


def test_torus_oracle_rejects_negative():
    Q = QMatrix(quantum_space(2).ring, 2)
    with pytest.raises(ValueError):
        torus_oracle_factor((-1, 0), (0, 1), Q)


def test_catalog_round():
    assert catalog_names() == list(CATALOG)
    for name in CATALOG:
        assert check_presentation(build_catalog(name)).ok
    for name in CORRUPTED:
        assert not check_presentation(build_catalog(name)).ok
    with pytest.raises(KeyError):
        build_catalog("nope")


def test_weyl_names():
    assert weyl(1).ring.variables == ("t",)
    assert weyl(3).ring.variables == ("t1", "t2", "t3")


def test_enveloping_lie_validation():
    with pytest.raises(InvalidPresentationError):
        enveloping_lie({(0, 0): {1: 1}}, 2)
    with pytest.raises(InvalidPresentationError):
        enveloping_lie({(1, 0): {0: 1}, (0, 1): {0: 1}}, 2)
    # the non-abelian 2-dimensional algebra [x2, x1] = x1, given in either orientation
    a = enveloping_lie({(1, 0): {0: 1}}, 2)
    b = enveloping_lie({(0, 1): {0: -1}}, 2)
    assert a == b
    x1, x2 = a.gens()
    assert x2 * x1 == x1 * x2 + x1
