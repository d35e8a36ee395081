"""Automaton-to-automaton constructions.

``mo_to_mm`` converts a measure-once automaton into a measure-every-step one
with the same word probabilities: halting states are shadowed by primed
copies that only become populated on the right endmarker, so no measurement
before the end of the tape can remove amplitude.

``eliminate_negative`` converts an automaton running over all integers into
one whose counter stays non-negative: primed copies of the states track the
mirror image of the negative half-axis, with counter moves reversed there.
A counter value of zero reached from the negative side is parked in the
primed copy (same acceptance status), so the two halves never merge
destructively.
"""

from __future__ import annotations

from .automaton import (AcceptanceType, CounterDomain, DeltaTable,
                        GeneralQf1ca, Observation)
from .core import Direction, RIGHT_END, invert_direction


class UnsupportedAcceptance(ValueError):
    """The requested transform is not defined for this acceptance type."""


def _primed_names(states: tuple[str, ...]) -> dict[str, str]:
    """A fresh primed name for every state, avoiding collisions with Q."""
    taken = set(states)
    out: dict[str, str] = {}
    for q in states:
        name = q + "'"
        while name in taken:
            name += "'"
        taken.add(name)
        out[q] = name
    return out


def mo_to_mm(a: GeneralQf1ca) -> GeneralQf1ca:
    """Measure-once to measure-every-step, preserving all word probabilities.

    Only state-based halting can be deferred this way; zero-counter acceptance
    would accept at every intermediate zero crossing, so it is refused.
    """
    if a.observation is not Observation.ONCE_MEASURE:
        raise ValueError("input automaton is not measure-once")
    if a.acceptance is AcceptanceType.ZERO_COUNTER:
        raise UnsupportedAcceptance(
            "zero-counter acceptance halts on counter value alone and cannot "
            "be deferred to the endmarker")
    prime = _primed_names(a.states)
    delta: dict[tuple[str, str, int], dict[tuple[str, Direction], complex]] = {}
    for symbol in a.tape_alphabet:
        for q in a.states:
            for s in (0, 1):
                row = a.targets(q, symbol, s)
                if symbol == RIGHT_END:
                    if row:
                        # The original endmarker step lands in primed states;
                        # from primed states the same step leads back, which
                        # keeps the operator unitary on the doubled space.
                        delta[(q, symbol, s)] = {
                            (prime[q2], d): amp for (q2, d), amp in row.items()}
                        delta[(prime[q], symbol, s)] = dict(row)
                else:
                    if row:
                        delta[(q, symbol, s)] = dict(row)
                    delta[(prime[q], symbol, s)] = {(prime[q], Direction.STAY): 1.0 + 0.0j}
    return GeneralQf1ca(
        alphabet=a.alphabet,
        states=(*a.states, *(prime[q] for q in a.states)),
        initial=a.initial,
        accepting=frozenset(prime[q] for q in a.accepting),
        rejecting=frozenset(prime[q] for q in a.rejecting),
        delta=delta,
        acceptance=a.acceptance,
        observation=Observation.MANY_MEASURE,
        counter_domain=a.counter_domain)


def eliminate_negative(a: GeneralQf1ca) -> GeneralQf1ca:
    """Fold the negative counter half-axis onto primed states.

    A configuration (q, k) of the input maps to (q, k) for k >= 0 and to
    (q', -k) for k < 0, except that zero reached from below is held at
    (q', 0).  Primed states copy the input's nonzero-sign transitions with
    the counter direction reversed; primed states at zero copy the zero-sign
    transitions, re-entering the unprimed copy when the counter turns
    positive.  Acceptance status of a primed state matches its original, so
    word probabilities are unchanged.
    """
    if a.counter_domain is CounterDomain.NON_NEGATIVE:
        raise ValueError("input automaton already runs on a non-negative counter")
    prime = _primed_names(a.states)
    delta: dict[tuple[str, str, int], dict[tuple[str, Direction], complex]] = {}
    for symbol in a.tape_alphabet:
        for q in a.states:
            pos = a.targets(q, symbol, 1)
            if pos:
                delta[(q, symbol, 1)] = dict(pos)
                delta[(prime[q], symbol, 1)] = {
                    (prime[q2], invert_direction(d)): amp
                    for (q2, d), amp in pos.items()}
            zero = a.targets(q, symbol, 0)
            if zero:
                plain: dict[tuple[str, Direction], complex] = {}
                ghost: dict[tuple[str, Direction], complex] = {}
                for (q2, d), amp in zero.items():
                    if d is Direction.LEFT:
                        # Counter would become -1: move to the mirror instead.
                        plain[(prime[q2], Direction.RIGHT)] = amp
                        ghost[(prime[q2], Direction.RIGHT)] = amp
                    elif d is Direction.RIGHT:
                        plain[(q2, d)] = amp
                        ghost[(q2, d)] = amp
                    else:
                        plain[(q2, d)] = amp
                        ghost[(prime[q2], d)] = amp
                delta[(q, symbol, 0)] = plain
                delta[(prime[q], symbol, 0)] = ghost
    return GeneralQf1ca(
        alphabet=a.alphabet,
        states=(*a.states, *(prime[q] for q in a.states)),
        initial=a.initial,
        accepting=a.accepting | frozenset(prime[q] for q in a.accepting),
        rejecting=a.rejecting | frozenset(prime[q] for q in a.rejecting),
        delta=delta,
        acceptance=a.acceptance,
        observation=a.observation,
        counter_domain=CounterDomain.NON_NEGATIVE)
