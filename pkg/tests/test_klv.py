import itertools

import pytest

from twisted_bruhat import classical
from twisted_bruhat.bruhat_graph import build_bg
from twisted_bruhat.klv import PolyTable, p_poly, q_poly, r_poly
from twisted_bruhat.poly import ONE, IntPolynomial

from conftest import poset_for, table_for

EXHAUSTIVE = ["flip:4", "flip:6", "diagonal:3", "diagonal:4"]


def pairs(poset):
    return [(u, w) for u, w in itertools.product(range(poset.size), repeat=2) if poset.leq(u, w)]


def test_q_examples():
    t = table_for("flip:4")
    assert q_poly(t, "2143", "2143") == ONE
    assert q_poly(t, "1234", "2143") == IntPolynomial([-1, 1])
    assert q_poly(t, "1234", "3412") == IntPolynomial([0, -1, 1])
    assert q_poly(t, "3412", "2143") == 0


def test_r_examples():
    t = table_for("flip:4")
    assert r_poly(t, "3412", "3412") == ONE
    assert r_poly(t, "1234", "2143") == IntPolynomial([-1, 1])
    assert r_poly(t, "1234", "3412") == IntPolynomial([1, -1])


def test_p_examples():
    t = table_for("flip:4")
    assert p_poly(t, "1234", "3412") == ONE
    assert p_poly(t, "2143", "2143") == ONE
    d = table_for("diagonal:4")
    assert p_poly(d, "1234|1234", "3412|3412") == IntPolynomial([1, 1])


@pytest.mark.parametrize("model", EXHAUSTIVE)
def test_q_identities(model):
    poset, t = poset_for(model), table_for(model)
    for w in range(poset.size):
        edges = build_bg(poset, w).edge_set()
        total = IntPolynomial()
        for u in range(poset.size):
            q = t.q(u, w)
            assert q.at_one() == (1 if u == w else 0)
            assert q.derivative_at_one() == (1 if frozenset((u, w)) in edges else 0)
            assert q.constant_term() == poset.mobius(u, w) == poset.mobius_recursive(u, w)
            total = total + q
        assert total == IntPolynomial.monomial(poset.rank[w])


@pytest.mark.parametrize("model", EXHAUSTIVE + ["flip:8"])
def test_p_properties(model):
    poset, t = poset_for(model), table_for(model)
    for u, w in pairs(poset):
        p = t.p(u, w)
        d = poset.rank[w] - poset.rank[u]
        assert p.constant_term() == 1
        assert p.nonnegative()
        if u != w:
            assert 2 * p.degree <= d - 1


@pytest.mark.parametrize("model", EXHAUSTIVE)
def test_r_routes_agree(model):
    poset, t = poset_for(model), table_for(model)
    for u, w in itertools.product(range(poset.size), repeat=2):
        assert t.r(u, w) == t.r_recursive(u, w)


@pytest.mark.parametrize("m", [3, 4])
def test_diagonal_reduces_to_classical(m):
    poset, t = poset_for(f"diagonal:{m}"), table_for(f"diagonal:{m}")
    for u, w in itertools.product(range(poset.size), repeat=2):
        r, p = classical.classical_kl_oracle(poset.elements[u][0], poset.elements[w][0])
        assert t.q(u, w) == r
        assert t.r(u, w) == r
        assert t.p(u, w) == p


@pytest.mark.parametrize("model", ["flip:6", "diagonal:4"])
def test_descent_choice_does_not_matter(model):
    poset = poset_for(model)
    ref = table_for(model)
    for seed in range(5):
        t = PolyTable(poset, descent_seed=seed)
        for u, w in itertools.product(range(poset.size), repeat=2):
            assert t.q(u, w) == ref.q(u, w)
            assert t.r_recursive(u, w) == ref.r_recursive(u, w)
            assert t.p(u, w) == ref.p(u, w)


def test_every_descent_gives_the_same_step():
    poset, t = poset_for("flip:8"), table_for("flip:8")
    for u, w in pairs(poset)[::7]:
        if u == w:
            continue
        values = {t.q_step(u, w, g) for g in t.descents(w)}
        assert values == {t.q(u, w)}


def test_flip8_has_nontrivial_p():
    poset, t = poset_for("flip:8"), table_for("flip:8")
    degrees = {t.p(u, w).degree for u, w in pairs(poset)}
    assert max(degrees) >= 1
