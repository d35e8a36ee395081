"""Evolution and measurement semantics.

``run_mm`` measures after every tape symbol (including both endmarkers):
the accepting and rejecting parts of the superposition are removed and their
squared norms accumulated, and the non-halting remainder continues without
renormalization.  ``run_mo`` evolves the full superposition through the tape
and measures once at the end.  Whatever norm is still non-halting after the
right endmarker is reported as ``p_residual`` and folded into
``p_reject_total``.

``brute_force_run`` recomputes the same probabilities by enumerating
computation paths one at a time and summing amplitudes per reachable
configuration, with no matrix or state-vector machinery shared with the
main runner.  It is the independent oracle the runner is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .automaton import (AcceptanceType, ConfigClass, CounterDomain,
                        GeneralQf1ca, Observation, SimpleQf1ca, as_general,
                        classify_config)
from .core import Configuration, StateVector, displacement, norm2, sign, split, tape

#: Longest word the path-enumeration oracle will accept.
BRUTE_FORCE_MAX_LEN = 8


class NegativeCounter(ValueError):
    """Amplitude flowed below counter zero in a non-negative counter automaton."""


class TooLong(ValueError):
    """Word exceeds the path-enumeration oracle's length budget."""


@dataclass(frozen=True)
class StepTrace:
    symbol: str
    before: StateVector
    after: StateVector
    accepted: float
    rejected: float


@dataclass(frozen=True)
class RunResult:
    p_accept: float
    p_reject: float
    p_residual: float
    trace: tuple[StepTrace, ...] = field(default=(), repr=False)

    @property
    def p_reject_total(self) -> float:
        return self.p_reject + self.p_residual


def evolve_step(a: GeneralQf1ca, symbol: str, v: StateVector) -> StateVector:
    """One application of the evolution operator for a tape symbol.

    The counter sign fed to the transition table is the sign before the move.
    """
    out: dict[Configuration, complex] = {}
    for (q, k), amp in v:
        for (q2, d), t_amp in a.targets(q, symbol, sign(k)).items():
            k2 = k + displacement(d)
            if k2 < 0 and a.counter_domain is CounterDomain.NON_NEGATIVE:
                raise NegativeCounter(
                    f"transition ({q!r}, {symbol!r}, {sign(k)}) -> ({q2!r}, {d}) "
                    f"takes the counter from {k} to {k2}")
            c2 = Configuration(q2, k2)
            out[c2] = out.get(c2, 0.0 + 0.0j) + amp * t_amp
    return StateVector.from_dict(out, v.prune_eps)


def run_mm(a: GeneralQf1ca | SimpleQf1ca, word: str,
           keep_trace: bool = False) -> RunResult:
    """Measure-every-step run over '#' + word + '$'."""
    g = as_general(a)
    v = StateVector.basis(g.initial)
    p_accept = 0.0
    p_reject = 0.0
    trace: list[StepTrace] = []
    for symbol in tape(word):
        before = v
        evolved = evolve_step(g, symbol, v)
        accepting, rest = split(evolved, lambda c: classify_config(g, c) is ConfigClass.ACCEPT)
        rejecting, v = split(rest, lambda c: classify_config(g, c) is ConfigClass.REJECT)
        step_acc = norm2(accepting)
        step_rej = norm2(rejecting)
        p_accept += step_acc
        p_reject += step_rej
        if keep_trace:
            trace.append(StepTrace(symbol, before, v, step_acc, step_rej))
    return RunResult(p_accept, p_reject, norm2(v), tuple(trace))


def run_mo(a: GeneralQf1ca | SimpleQf1ca, word: str,
           keep_trace: bool = False) -> RunResult:
    """Measure-once run: full evolution through the tape, one final measurement.

    The final non-halting norm is the residual; there is no intermediate
    accept/reject accumulation.
    """
    g = as_general(a)
    v = StateVector.basis(g.initial)
    trace: list[StepTrace] = []
    for symbol in tape(word):
        before = v
        v = evolve_step(g, symbol, v)
        if keep_trace:
            trace.append(StepTrace(symbol, before, v, 0.0, 0.0))
    accepting, rest = split(v, lambda c: classify_config(g, c) is ConfigClass.ACCEPT)
    rejecting, residual = split(rest, lambda c: classify_config(g, c) is ConfigClass.REJECT)
    return RunResult(norm2(accepting), norm2(rejecting), norm2(residual), tuple(trace))


def run(a: GeneralQf1ca | SimpleQf1ca, word: str, keep_trace: bool = False) -> RunResult:
    """Run under the automaton's own observation mode."""
    runner = run_mm if a.observation is Observation.MANY_MEASURE else run_mo
    return runner(a, word, keep_trace)


def brute_force_run(a: GeneralQf1ca | SimpleQf1ca, word: str) -> RunResult:
    """Path-enumeration oracle for the measure-every-step semantics.

    Walks every computation path (sequence of individual transitions) through
    the tape, multiplying amplitudes along the way.  A path dies when it hits
    an accepting or rejecting configuration; surviving paths are grouped by
    the configuration and step where they halt or finish, amplitudes summed
    within a group, then squared.  Exponential in the word length, hence the
    hard cap.
    """
    if len(word) > BRUTE_FORCE_MAX_LEN:
        raise TooLong(f"word length {len(word)} exceeds {BRUTE_FORCE_MAX_LEN}")
    g = as_general(a)
    symbols = tape(word)
    n_steps = len(symbols)
    # (step at which the path stopped, configuration) -> summed amplitude.
    accept_amp: dict[tuple[int, Configuration], complex] = {}
    reject_amp: dict[tuple[int, Configuration], complex] = {}
    residual_amp: dict[Configuration, complex] = {}

    def walk(step: int, config: Configuration, amp: complex) -> None:
        if step == n_steps:
            residual_amp[config] = residual_amp.get(config, 0.0 + 0.0j) + amp
            return
        q, k = config
        for (q2, d), t_amp in g.targets(q, symbols[step], sign(k)).items():
            k2 = k + displacement(d)
            if k2 < 0 and g.counter_domain is CounterDomain.NON_NEGATIVE:
                raise NegativeCounter(
                    f"transition ({q!r}, {symbols[step]!r}, {sign(k)}) -> "
                    f"({q2!r}, {d}) takes the counter from {k} to {k2}")
            c2 = Configuration(q2, k2)
            cls = classify_config(g, c2)
            if cls is ConfigClass.ACCEPT:
                key = (step, c2)
                accept_amp[key] = accept_amp.get(key, 0.0 + 0.0j) + amp * t_amp
            elif cls is ConfigClass.REJECT:
                key = (step, c2)
                reject_amp[key] = reject_amp.get(key, 0.0 + 0.0j) + amp * t_amp
            else:
                walk(step + 1, c2, amp * t_amp)

    walk(0, Configuration(g.initial, 0), 1.0 + 0.0j)
    p_accept = sum(abs(x) ** 2 for x in accept_amp.values())
    p_reject = sum(abs(x) ** 2 for x in reject_amp.values())
    p_residual = sum(abs(x) ** 2 for x in residual_amp.values())
    return RunResult(p_accept, p_reject, p_residual)


def recognition_margin(
    a: GeneralQf1ca | SimpleQf1ca,
    members: Iterable[str],
    nonmembers: Iterable[str],
) -> tuple[float, float]:
    """Worst-case probabilities over a labelled sample.

    Returns (min p_accept over members, min p_reject_total over
    non-members).  Both above 1/2 + epsilon means every sampled word is
    decided with margin epsilon.  Both lists must be non-empty.
    """
    min_accept = min(run(a, w).p_accept for w in members)
    min_reject_total = min(run(a, w).p_reject_total for w in nonmembers)
    return min_accept, min_reject_total
