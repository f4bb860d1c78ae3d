from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import FIXTURE, FULL2, GOLDEN, IDENTITY, cylfns, shift_spaces
from markovcoe.cylfn import CylFn, compose_shift
from markovcoe.errors import IncompatibleSupport, NotStochastic, SpaceMismatch
from markovcoe.measures import (
    MarkovMeasure,
    bernoulli,
    check_invariance,
    check_measure_suite,
    check_normalization,
    check_positivity,
    cylinder_table,
    markov_measure,
    parry_measure,
    pushforward,
    stationary_vector,
)
from markovcoe.shift import admissible_words

HALF = Fraction(1, 2)
MU = bernoulli(FULL2, [HALF, HALF])


@st.composite
def markov_measures(draw, S):
    rows = []
    for i in range(S.n):
        ws = [draw(st.integers(1, 5)) if S.rows[i][j] else 0 for j in range(S.n)]
        rows.append([Fraction(w, sum(ws)) for w in ws])
    return markov_measure(S, rows)


def test_bernoulli_examples():
    assert MU.cylinder_mass((1, 2, 2)) == Fraction(1, 8)
    assert MU.evaluate(FIXTURE.c1) == Fraction(3, 2)
    assert sum(MU.cylinder_mass(w) for w in admissible_words(FULL2, 3)) == 1


def test_markov_measure_rejections():
    with pytest.raises(IncompatibleSupport):
        markov_measure(GOLDEN, [[HALF, HALF], [HALF, HALF]])
    with pytest.raises(NotStochastic):
        markov_measure(FULL2, [[HALF, HALF], [1, 1]])
    with pytest.raises(NotStochastic):
        MarkovMeasure(FULL2, ((HALF, HALF), (HALF, HALF)), (Fraction(1, 3), Fraction(2, 3)))
    with pytest.raises(SpaceMismatch):
        MU.evaluate(CylFn.constant(GOLDEN, 1))


def test_golden_stationary_vector():
    mu = markov_measure(GOLDEN, [[HALF, HALF], [1, 0]])
    assert mu.pi == (Fraction(2, 3), Fraction(1, 3))


@settings(max_examples=30, deadline=None)
@given(shift_spaces(max_n=4), st.data())
def test_stationary_vector_matches_sympy(S, data):
    from sympy import Matrix, Rational, eye

    mu = data.draw(markov_measures(S))
    P = Matrix([[Rational(p.numerator, p.denominator) for p in row] for row in mu.P])
    null = (P.T - eye(S.n)).nullspace()
    assert len(null) == 1
    v = null[0] / sum(null[0])
    assert [Fraction(int(a.p), int(a.q)) for a in v] == list(stationary_vector(mu.P))


@settings(max_examples=30, deadline=None)
@given(shift_spaces(max_n=3), st.data())
def test_markov_measures_are_invariant_and_kill_coboundaries(S, data):
    mu = data.draw(markov_measures(S))
    assert check_invariance(mu, 3).passed
    g = data.draw(cylfns(S, max_depth=2))
    assert mu.evaluate(g - compose_shift(g)) == 0


def test_pushforward_examples():
    nu = pushforward(FIXTURE, MU)
    assert nu.cylinder_mass((1,)) == 1
    assert nu.cylinder_mass((2,)) == HALF
    assert nu.evaluate(CylFn.constant(GOLDEN, 1)) == Fraction(3, 2)
    assert nu.cylinder_mass((1, 2)) == HALF
    table = cylinder_table(nu, 2)
    assert table == {"1": 1, "2": HALF, "11": HALF, "12": HALF, "21": HALF}


def test_pushforward_checks_on_fixture():
    nu = pushforward(FIXTURE, MU)
    assert check_invariance(nu, 4).passed
    assert check_positivity(nu, 4).passed
    rep = check_normalization(FIXTURE, MU)
    assert rep.passed and rep.details["mass"] == Fraction(3, 2)
    assert rep.details["note"] == "probability not preserved, mass = 3/2"
    assert not rep.details["c1_class_is_one"]
    assert check_measure_suite(FIXTURE, MU, 4).passed


def test_identity_spec_preserves_probability():
    mu = markov_measure(GOLDEN, [[HALF, HALF], [1, 0]])
    rep = check_normalization(IDENTITY, mu)
    assert rep.passed and rep.details["mass"] == 1 and rep.details["c1_class_is_one"]
    nu = pushforward(IDENTITY, mu)
    for w in admissible_words(GOLDEN, 4):
        assert nu.cylinder_mass(w) == mu.cylinder_mass(w)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_pushforward_linearity_and_coboundaries(data):
    mu = data.draw(markov_measures(FULL2))
    nu = pushforward(FIXTURE, mu)
    f = data.draw(cylfns(GOLDEN, max_depth=3))
    g = data.draw(cylfns(GOLDEN, max_depth=3))
    a = data.draw(st.integers(-3, 3))
    assert nu.evaluate(f * a + g) == a * nu.evaluate(f) + nu.evaluate(g)
    assert nu.evaluate(g - compose_shift(g)) == 0


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_round_trip_through_inverse(data):
    mu = data.draw(markov_measures(FULL2))
    back = pushforward(FIXTURE.inverse(), pushforward(FIXTURE, mu))
    for w in admissible_words(FULL2, 3):
        assert back.cylinder_mass(w) == mu.cylinder_mass(w)


def test_parry_golden():
    mu = parry_measure(GOLDEN)
    phi = (1 + 5**0.5) / 2
    assert abs(float(mu.P[0][0]) - 1 / phi) < 1e-10
    assert mu.P[1] == (1, 0)
    assert abs(float(mu.pi[0]) - phi**2 / (1 + phi**2)) < 1e-10


@settings(max_examples=20, deadline=None)
@given(shift_spaces(max_n=4))
def test_parry_matches_numpy_eigendata(S):
    mu = parry_measure(S)
    A = np.array(S.rows, dtype=float)
    vals, vecs = np.linalg.eig(A)
    k = int(np.argmax(vals.real))
    lam = vals[k].real
    r = np.abs(vecs[:, k].real)
    for i in range(S.n):
        for j in range(S.n):
            want = A[i, j] * r[j] / (lam * r[i])
            assert abs(float(mu.P[i][j]) - want) < 1e-6
    assert check_invariance(mu, 3).passed


def test_parry_pushforward_suite():
    assert check_measure_suite(FIXTURE, parry_measure(FULL2), 4).passed


def test_measure_json():
    assert MU.to_json() == {"P": [["1/2", "1/2"], ["1/2", "1/2"]], "pi": ["1/2", "1/2"]}
