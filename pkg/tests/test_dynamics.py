import dataclasses
import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_words, random_simple
from qf1ca import zoo
from qf1ca.automaton import (CounterDomain, Observation, general_from_simple)
from qf1ca.core import StateVector, norm2
from qf1ca.dynamics import (BRUTE_FORCE_MAX_LEN, NegativeCounter, TooLong,
                            brute_force_run, evolve_step, recognition_margin,
                            run, run_mm, run_mo)


def test_evolve_step_uses_sign_before_the_move():
    a3 = general_from_simple(zoo.build_example3())
    v = StateVector.basis("q1", 1)
    # Counter 1, so the nonzero-sign row applies even though "0" moves it.
    out = evolve_step(a3, "$", v)
    assert out.amplitude("qr2", 1) == pytest.approx(1.0)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_evolution_preserves_total_norm(seed):
    rng = np.random.default_rng(seed)
    g = general_from_simple(random_simple(rng))
    r = run_mm(g, "0110")
    assert r.p_accept + r.p_reject + r.p_residual == pytest.approx(1.0, abs=1e-12)
    r = run_mo(g, "0110")
    assert r.p_accept + r.p_reject + r.p_residual == pytest.approx(1.0, abs=1e-12)


def test_run_mm_measures_at_every_symbol():
    a4 = zoo.build_example4()
    r = run_mm(a4, "01", keep_trace=True)
    # One rejection already at the "1", before the endmarker.
    assert [t.symbol for t in r.trace] == ["#", "0", "1", "$"]
    assert r.trace[2].rejected == pytest.approx(1 - zoo.critical_p(), abs=1e-12)
    assert r.trace[3].accepted == pytest.approx(zoo.critical_p(), abs=1e-12)


def test_run_mo_defers_measurement():
    a3 = dataclasses.replace(zoo.build_example3(),
                             observation=Observation.ONCE_MEASURE)
    r = run_mo(a3, "010", keep_trace=True)
    assert all(t.accepted == 0 and t.rejected == 0 for t in r.trace)
    assert r.p_accept == pytest.approx(1.0)


def test_run_dispatches_on_observation_mode():
    a = zoo.build_example4()
    assert run(a, "01").p_accept == run_mm(a, "01").p_accept
    mo = dataclasses.replace(a, observation=Observation.ONCE_MEASURE)
    assert run(mo, "01").p_accept == run_mo(mo, "01").p_accept


def test_negative_counter_enforcement():
    a = dataclasses.replace(zoo.build_example3(),
                            counter_domain=CounterDomain.NON_NEGATIVE)
    with pytest.raises(NegativeCounter):
        run_mm(a, "0100")  # second block overshoots the counter below zero
    safe = zoo.build_example3(CounterDomain.NON_NEGATIVE)
    assert run_mm(safe, "0100").p_reject_total == pytest.approx(1.0)


def test_brute_force_rejects_long_words():
    with pytest.raises(TooLong):
        brute_force_run(zoo.build_example3(), "0" * (BRUTE_FORCE_MAX_LEN + 1))


def test_brute_force_matches_runner_with_interference():
    # Theorem 5 relies on destructive interference at the endmarker, which
    # path enumeration only reproduces when amplitudes are summed per
    # configuration before squaring.
    t5 = zoo.build_theorem5()
    for word in ["010101", "011010", "00100"]:
        fast, slow = run_mm(t5, word), brute_force_run(t5, word)
        assert fast.p_accept == pytest.approx(slow.p_accept, abs=1e-12)
        assert fast.p_reject == pytest.approx(slow.p_reject, abs=1e-12)
        assert fast.p_residual == pytest.approx(slow.p_residual, abs=1e-12)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_brute_force_matches_runner_on_random_automata(seed):
    rng = np.random.default_rng(seed)
    g = general_from_simple(random_simple(rng, n_states=(2, 3)))
    for word in all_words(3):
        fast, slow = run_mm(g, word), brute_force_run(g, word)
        assert fast.p_accept == pytest.approx(slow.p_accept, abs=1e-9)
        assert fast.p_reject == pytest.approx(slow.p_reject, abs=1e-9)


def test_recognition_margin():
    a3 = zoo.build_example3()
    members = ["010", "00100"]
    nonmembers = ["01", "110"]
    assert recognition_margin(a3, members, nonmembers) == pytest.approx((1.0, 1.0))
    # A mislabelled member drags the accept side down to zero.
    min_acc, min_rej = recognition_margin(a3, members + ["0110"], nonmembers)
    assert min_acc == pytest.approx(0.0)
    assert min_rej == pytest.approx(1.0)
