import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import FIXTURE, FULL2, GOLDEN, IDENTITY, points, pt
from markovcoe.coe import (
    CoeSpec,
    Transducer,
    apply_transducer,
    check_cocycle_uniqueness,
    check_cor_positive,
    check_factor,
    check_klp,
    check_lemma_omega_transport,
    check_orbit_bijection,
    check_orbit_length,
    check_psi_equations,
    check_rminuss,
    check_taileq,
    check_xi_representative,
    cocycle_c,
    derive_single_state_cocycles,
    klp_sides,
    lemma_transport_data,
    psi_h,
    verify_coe,
    xi_h,
)
from markovcoe.cylfn import CylFn, orbit_sum
from markovcoe.errors import (
    AlternativeCocycleInvalid,
    InadmissibleOutput,
    NotPeriodic,
    NullCycle,
    PreconditionFailed,
    UndefinedTransition,
)
from markovcoe.shift import Orbit, admissible_words, evps_up_to, periodic_orbits_up_to, shift_evp

H = FIXTURE.h
HINV = FIXTURE.hinv


def test_apply_transducer_examples():
    assert apply_transducer(H, pt(FULL2, "", "2")) == pt(GOLDEN, "", "21")
    assert apply_transducer(H, pt(FULL2, "", "12")) == pt(GOLDEN, "", "121")
    for x in evps_up_to(GOLDEN, 5):
        assert apply_transducer(IDENTITY.h, x) == x


def test_apply_prefix_and_depth_examples():
    assert H.apply_prefix((2, 2)) == (2, 1, 2, 1)
    assert H.required_input_depth(3) == 3
    for m in range(6):
        assert IDENTITY.h.required_input_depth(m) == m


@pytest.mark.parametrize("T", [H, HINV])
@pytest.mark.parametrize("m", range(1, 7))
def test_required_input_depth_brute_force(T, m):
    d = T.required_input_depth(m)
    assert all(len(T.apply_prefix(w)) >= m for w in admissible_words(T.source, d))
    if d > 0:
        assert any(len(T.apply_prefix(w)) < m for w in admissible_words(T.source, d - 1))


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_image_agrees_with_long_prefix_oracle(data):
    T = data.draw(st.sampled_from([H, HINV]))
    x = data.draw(points(T.source, 7))
    y = apply_transducer(T, x)
    long = T.apply_prefix(x.prefix(40))
    assert len(long) >= 20
    assert y.prefix(20) == long[:20]


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_images_are_inverted(data):
    x = data.draw(points(FULL2, 8))
    assert apply_transducer(HINV, apply_transducer(H, x)) == x
    y = data.draw(points(GOLDEN, 8))
    assert apply_transducer(H, apply_transducer(HINV, y)) == y


def test_transducer_invariants_rejected():
    with pytest.raises(UndefinedTransition):
        Transducer(FULL2, GOLDEN, ["s"], "s", {("s", 1): ("s", (1,))})
    with pytest.raises(NullCycle):
        Transducer(FULL2, GOLDEN, ["s"], "s", {("s", 1): ("s", ()), ("s", 2): ("s", (2, 1))})
    with pytest.raises(InadmissibleOutput):
        Transducer(FULL2, GOLDEN, ["s"], "s", {("s", 1): ("s", (1,)), ("s", 2): ("s", (2,))})
    with pytest.raises(InadmissibleOutput):
        Transducer(FULL2, GOLDEN, ["s"], "s", {("s", 1): ("s", (1,)), ("s", 2): ("s", (2, 2))})


def test_hinv_machine_allows_empty_output_after_two():
    # the deletion edge is fine because it cannot repeat without output
    assert HINV.apply_prefix((2, 1, 2, 1)) == (2, 2)


def test_verify_examples():
    rep = verify_coe(FIXTURE, 8)
    assert rep.passed
    assert rep.details["statement"] == "certified to bound 8"
    assert verify_coe(IDENTITY, 8).passed
    bad = CoeSpec(FULL2, GOLDEN, H, HINV, FIXTURE.k1, CylFn.constant(FULL2, 1), FIXTURE.k2, FIXTURE.l2)
    rep = verify_coe(bad, 8)
    assert not rep.passed and rep.counterexample == pt(FULL2, "", "2")


def test_verify_detects_corrupted_second_equation():
    bad = CoeSpec(FULL2, GOLDEN, H, HINV, FIXTURE.k1, FIXTURE.l1, CylFn.constant(GOLDEN, 0), FIXTURE.l2)
    rep = verify_coe(bad, 6)
    assert not rep.passed and rep.details["failed"] == "orbit-equation[hinv]"


def test_derive_single_state_cocycles():
    k, l = derive_single_state_cocycles(H)
    assert k == FIXTURE.k1 and l == FIXTURE.l1
    with pytest.raises(ValueError):
        derive_single_state_cocycles(HINV)


def test_cocycle_examples():
    assert cocycle_c(FIXTURE, "A").table == {(1,): 1, (2,): 2}
    assert cocycle_c(FIXTURE, "B").table == {(1,): 1, (2,): 0}
    assert cocycle_c(IDENTITY, "A") == CylFn.constant(GOLDEN, 1)


def test_cocycle_uniqueness():
    assert check_cocycle_uniqueness(FIXTURE, FIXTURE.k1, FIXTURE.l1).passed
    with pytest.raises(AlternativeCocycleInvalid) as info:
        check_cocycle_uniqueness(FIXTURE, CylFn.constant(FULL2, 0), FIXTURE.l1 + CylFn.constant(FULL2, 1))
    assert info.value.counterexample == pt(FULL2, "", "2")


def test_cocycle_uniqueness_with_padding():
    # shifting both sides of the orbit equation one more step keeps it valid
    k_alt = FIXTURE.k1 + CylFn.constant(FULL2, 1)
    l_alt = FIXTURE.l1 + CylFn.constant(FULL2, 1)
    assert check_cocycle_uniqueness(FIXTURE, k_alt, l_alt).passed


def test_taileq_examples():
    assert check_taileq(FIXTURE, pt(FULL2, "2", "1"), pt(FULL2, "", "1"), 1, 0).passed
    x = pt(FULL2, "1", "2")
    assert check_taileq(FIXTURE, x, x, 3, 3).passed
    assert check_taileq(FIXTURE, pt(FULL2, "", "12"), pt(FULL2, "", "21"), 1, 0).passed
    with pytest.raises(PreconditionFailed):
        check_taileq(FIXTURE, pt(FULL2, "", "12"), pt(FULL2, "", "12"), 1, 0)


def test_klp_examples():
    x = pt(FULL2, "", "2")
    assert klp_sides(FIXTURE, x, 1) == (2, 2)
    for y in evps_up_to(FULL2, 5):
        assert check_klp(FIXTURE, y, 0).passed
    assert check_klp(FIXTURE, pt(FULL2, "", "12"), 2).passed


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_klp_property_both_sides(data):
    S = data.draw(st.sampled_from([FULL2, GOLDEN]))
    x = data.draw(points(S, 6))
    assert check_klp(FIXTURE, x, data.draw(st.integers(0, 6))).passed


def test_psi_examples():
    y = psi_h(FIXTURE, pt(FULL2, "", "1"), 1)
    assert (y.orbit.cycle, y.phase) == ((1,), 0)
    y = psi_h(FIXTURE, pt(FULL2, "", "2"), 1)
    assert y.orbit.cycle == (1, 2) and y.to_one_sided() == pt(GOLDEN, "", "21")
    assert y.period == 2 == orbit_sum(FIXTURE.c1, Orbit.of(FULL2, (2,)))
    y = psi_h(FIXTURE, pt(FULL2, "", "12"), 2)
    assert y.orbit.cycle == (1, 1, 2) and y.period == 3
    with pytest.raises(NotPeriodic):
        psi_h(FIXTURE, pt(FULL2, "2", "1"), 1)
    with pytest.raises(NotPeriodic):
        psi_h(FIXTURE, pt(FULL2, "", "12"), 3)


@pytest.mark.parametrize("g", periodic_orbits_up_to(FULL2, 8), ids=str)
def test_psi_relations_on_all_orbits(g):
    for x in g.points():
        assert check_psi_equations(FIXTURE, x, g.period).passed
    assert check_xi_representative(FIXTURE, g).passed
    assert check_orbit_length(FIXTURE, g).passed


def test_xi_examples():
    assert xi_h(FIXTURE, Orbit.of(FULL2, (2,))) == Orbit.of(GOLDEN, (1, 2))
    assert xi_h(FIXTURE, Orbit.of(FULL2, (1,))) == Orbit.of(GOLDEN, (1,))
    rep = check_orbit_bijection(FIXTURE, 6)
    assert rep.passed
    assert rep.details["orbits"]["orbit-bijection[A]"] == len(periodic_orbits_up_to(FULL2, 6))


def test_omega_transport_examples():
    one = CylFn.constant(GOLDEN, 1)
    z, rp, sp = lemma_transport_data(FIXTURE, pt(FULL2, "", "12"), 2, 0)
    assert (z, rp, sp) == (pt(GOLDEN, "", "121"), 3, 0)
    rep = check_lemma_omega_transport(FIXTURE, one, pt(FULL2, "", "12"), 2, 0)
    assert rep.passed and rep.details["lhs"] == 3
    rep = check_lemma_omega_transport(FIXTURE, one, pt(FULL2, "", "2"), 1, 0)
    assert rep.passed and (rep.details["r'"], rep.details["s'"], rep.details["lhs"]) == (2, 0, 2)
    rep = check_lemma_omega_transport(FIXTURE, CylFn.indicator(GOLDEN, "2"), pt(FULL2, "", "12"), 2, 0)
    assert rep.passed and rep.details["lhs"] == 1
    with pytest.raises(PreconditionFailed):
        check_lemma_omega_transport(FIXTURE, one, pt(FULL2, "", "12"), 1, 0)


def test_cor_positive_examples():
    rep = check_cor_positive(FIXTURE, pt(FULL2, "", "2"), 1, 0)
    assert rep.passed and rep.details["c1^q"] == 2
    rep = check_cor_positive(FIXTURE, pt(FULL2, "2", "1"), 2, 1)
    assert rep.passed and rep.details["c1^q"] == 1
    for g in periodic_orbits_up_to(GOLDEN, 5):
        rep = check_cor_positive(IDENTITY, g.point(0), g.period, 0)
        assert rep.passed and rep.details["c1^q"] == g.period


@pytest.mark.parametrize("x", [g.point(0) for g in periodic_orbits_up_to(FULL2, 6)] +
                         [pt(FULL2, "2", "1"), pt(FULL2, "12", "2")], ids=str)
def test_rminuss_and_factor(x):
    s = len(x.transient)
    r = s + len(x.cycle)
    assert check_rminuss(FIXTURE, x, r, s).passed
    if x.is_periodic:
        for n in range(1, 5):
            assert check_factor(FIXTURE, x, n).passed


def test_inverse_spec_swaps_sides():
    inv = FIXTURE.inverse()
    assert inv.A == GOLDEN and inv.h is HINV and inv.inverse().h is H
    assert verify_coe(inv, 6).passed
