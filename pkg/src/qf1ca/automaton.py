"""Automaton representations: the general transition table and the simple V/D form.

A general automaton stores a sparse table delta(q, symbol, counter_sign) ->
{(q', direction): amplitude}.  A simple automaton stores one unitary matrix
per (symbol, counter_sign) plus a direction function on (target state, symbol);
``general_from_simple`` expands it into the table form used by the runtime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

import numpy as np

from .core import Direction, ENDMARKERS, LEFT_END, RIGHT_END, Configuration

#: Tolerance on the modulus of a stored amplitude.
AMP_TOL = 1e-12

DeltaTable = Mapping[tuple[str, str, int], Mapping[tuple[str, Direction], complex]]


class AcceptanceType(Enum):
    STATE_AND_ZERO = "state_and_zero"  # accept iff state accepting and counter 0
    ZERO_COUNTER = "zero"              # accept iff counter 0
    STATE_ONLY = "state"               # accept iff state accepting


class Observation(Enum):
    MANY_MEASURE = "mm"
    ONCE_MEASURE = "mo"


class CounterDomain(Enum):
    ALL_INTEGERS = "int"
    NON_NEGATIVE = "nonneg"


class ConfigClass(Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    NON_HALTING = "non_halting"


class MissingDirection(ValueError):
    """The direction function of a simple automaton is not total on Q x Gamma."""


@dataclass(frozen=True)
class GeneralQf1ca:
    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: str
    accepting: frozenset[str]
    rejecting: frozenset[str]
    delta: DeltaTable
    acceptance: AcceptanceType = AcceptanceType.STATE_AND_ZERO
    observation: Observation = Observation.MANY_MEASURE
    counter_domain: CounterDomain = CounterDomain.ALL_INTEGERS

    @property
    def tape_alphabet(self) -> tuple[str, ...]:
        return (*self.alphabet, LEFT_END, RIGHT_END)

    def targets(self, state: str, symbol: str, s: int) -> Mapping[tuple[str, Direction], complex]:
        return self.delta.get((state, symbol, s), {})


@dataclass(frozen=True)
class SimpleQf1ca:
    """Simple form: per-(symbol, sign) unitary V plus direction function D.

    ``unitaries[(symbol, s)]`` holds the matrix with entry [i, j] equal to the
    amplitude of states[i] in V applied to states[j] (targets index rows,
    sources index columns).  ``direction[(target_state, symbol)]`` gives the
    counter move of every transition entering that state on that symbol.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: str
    accepting: frozenset[str]
    rejecting: frozenset[str]
    unitaries: Mapping[tuple[str, int], np.ndarray]
    direction: Mapping[tuple[str, str], Direction]
    acceptance: AcceptanceType = AcceptanceType.STATE_AND_ZERO
    observation: Observation = Observation.MANY_MEASURE
    counter_domain: CounterDomain = CounterDomain.ALL_INTEGERS

    @property
    def tape_alphabet(self) -> tuple[str, ...]:
        return (*self.alphabet, LEFT_END, RIGHT_END)


def general_from_simple(a: SimpleQf1ca, amp_eps: float = 0.0) -> GeneralQf1ca:
    """Expand the V/D form into a sparse delta table.

    Matrix entries are copied verbatim (no rounding); entries with modulus
    <= amp_eps are omitted from the sparse table.  Raises MissingDirection if
    D is not defined for some (target state, tape symbol) that carries a
    nonzero amplitude.
    """
    index = {q: i for i, q in enumerate(a.states)}
    delta: dict[tuple[str, str, int], dict[tuple[str, Direction], complex]] = {}
    for (symbol, s), matrix in a.unitaries.items():
        m = np.asarray(matrix)
        if m.shape != (len(a.states), len(a.states)):
            raise ValueError(f"matrix for ({symbol!r}, {s}) has shape {m.shape}, "
                             f"expected {(len(a.states),) * 2}")
        for q in a.states:
            col = m[:, index[q]]
            targets: dict[tuple[str, Direction], complex] = {}
            for q2 in a.states:
                amp = complex(col[index[q2]])
                if abs(amp) <= amp_eps:
                    continue
                d = a.direction.get((q2, symbol))
                if d is None:
                    raise MissingDirection(f"D({q2!r}, {symbol!r}) is undefined")
                targets[(q2, d)] = amp
            if targets:
                delta[(q, symbol, s)] = targets
    return GeneralQf1ca(
        alphabet=a.alphabet, states=a.states, initial=a.initial,
        accepting=a.accepting, rejecting=a.rejecting, delta=delta,
        acceptance=a.acceptance, observation=a.observation,
        counter_domain=a.counter_domain)


def as_general(a: GeneralQf1ca | SimpleQf1ca) -> GeneralQf1ca:
    return a if isinstance(a, GeneralQf1ca) else general_from_simple(a)


def classify_config(a: GeneralQf1ca | SimpleQf1ca, c: Configuration) -> ConfigClass:
    """Accept/reject/non-halting class of a configuration under the automaton's
    acceptance type.  For zero-counter acceptance, counter 0 takes precedence
    over a rejecting state so the three classes stay disjoint.
    """
    q, k = c
    t = a.acceptance
    if t is AcceptanceType.STATE_AND_ZERO:
        if q in a.accepting and k == 0:
            return ConfigClass.ACCEPT
        if q in a.rejecting:
            return ConfigClass.REJECT
    elif t is AcceptanceType.ZERO_COUNTER:
        if k == 0:
            return ConfigClass.ACCEPT
        if q in a.rejecting:
            return ConfigClass.REJECT
    else:  # STATE_ONLY
        if q in a.accepting:
            return ConfigClass.ACCEPT
        if q in a.rejecting:
            return ConfigClass.REJECT
    return ConfigClass.NON_HALTING


@dataclass(frozen=True)
class Violation:
    field: str
    detail: str

    def __str__(self) -> str:
        return f"{self.field}: {self.detail}"


def validate_structure(a: GeneralQf1ca) -> list[Violation]:
    """Set-level invariants of the definition: disjoint halting sets, known
    states and symbols, amplitude moduli bounded by 1.  Returns violations as
    data; an empty list means structurally valid.
    """
    out: list[Violation] = []
    states = set(a.states)
    gamma = set(a.tape_alphabet)
    for q in sorted(a.accepting & a.rejecting):
        out.append(Violation("accepting/rejecting", f"state {q!r} is in both sets"))
    if a.initial not in states:
        out.append(Violation("initial", f"unknown state {a.initial!r}"))
    for q in sorted(a.accepting - states):
        out.append(Violation("accepting", f"unknown state {q!r}"))
    for q in sorted(a.rejecting - states):
        out.append(Violation("rejecting", f"unknown state {q!r}"))
    for sym in a.alphabet:
        if sym in ENDMARKERS:
            out.append(Violation("alphabet", f"endmarker {sym!r} inside the input alphabet"))
    for (q, symbol, s), targets in a.delta.items():
        if q not in states:
            out.append(Violation("delta", f"unknown source state {q!r}"))
        if symbol not in gamma:
            out.append(Violation("delta", f"unknown tape symbol {symbol!r}"))
        if s not in (0, 1):
            out.append(Violation("delta", f"counter sign {s!r} not in {{0, 1}}"))
        for (q2, d), amp in targets.items():
            if q2 not in states:
                out.append(Violation("delta", f"unknown target state {q2!r}"))
            if not isinstance(d, Direction):
                out.append(Violation("delta", f"bad direction {d!r}"))
            if abs(amp) > 1 + AMP_TOL:
                out.append(Violation(
                    "delta", f"amplitude modulus {abs(amp):.6g} > 1 "
                             f"at ({q!r}, {symbol!r}, {s}, {q2!r}, {d})"))
    return out
