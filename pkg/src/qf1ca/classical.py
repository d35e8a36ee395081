"""Deterministic and probabilistic one-counter automata.

These machines read the bare word (no endmarkers) and decide by the state
they finish in.  The counter is an integer starting at 0; transitions see
only its sign (0 or nonzero), exactly like the quantum model.

``build_example2`` is a probabilistic recognizer for the two-separator block
language 0^l 1 0^m 1 0^n with l = m = n: the first symbol branches uniformly
into N deterministic paths, and path i accepts exactly the block words with
(l - n) = i * (m - n).  A member satisfies every path (both sides are 0), a
non-member block word satisfies at most one, so members are accepted with
probability 1 and non-members with probability at most 1/N.

Each path tests its relation with unit counter moves via a divisibility
gadget: the first block decrements the counter on every i-th zero (tracking
l mod i in the state), the second block increments on every zero, and the
third block decrements on every zero that is not an i-th one, so the counter
ends at (m - n) - (l - n)/i whenever l and n agree mod i.  Since the machine
cannot observe the counter after the last symbol, the final decrement is
applied one step early and a "matched" state records the moment the count
balances; any later decrement would make it negative for good and kills the
path.  Acceptance requires a matched state whose two residues (l mod i and
n mod i) coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .core import Direction, displacement, sign


class Verdict(Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    NEITHER = "neither"


#: (state, symbol, counter sign) -> (next state, counter move)
CdfaTable = Mapping[tuple[str, str, int], tuple[str, Direction]]

#: (state, symbol, counter sign) -> list of (next state, counter move, probability)
CpfaTable = Mapping[tuple[str, str, int], tuple[tuple[str, Direction, float], ...]]

PROB_TOL = 1e-12


@dataclass(frozen=True)
class Cdfa:
    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: str
    accepting: frozenset[str]
    rejecting: frozenset[str]
    delta: CdfaTable

    def __post_init__(self) -> None:
        if self.accepting & self.rejecting:
            raise ValueError("accepting and rejecting sets overlap")
        for q in self.states:
            for symbol in self.alphabet:
                for s in (0, 1):
                    if (q, symbol, s) not in self.delta:
                        raise ValueError(f"delta undefined at ({q!r}, {symbol!r}, {s})")


@dataclass(frozen=True)
class Cpfa:
    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: str
    accepting: frozenset[str]
    rejecting: frozenset[str]
    delta: CpfaTable

    def __post_init__(self) -> None:
        if self.accepting & self.rejecting:
            raise ValueError("accepting and rejecting sets overlap")
        for q in self.states:
            for symbol in self.alphabet:
                for s in (0, 1):
                    choices = self.delta.get((q, symbol, s))
                    if choices is None:
                        raise ValueError(f"delta undefined at ({q!r}, {symbol!r}, {s})")
                    total = sum(p for _, _, p in choices)
                    if any(p < 0 for _, _, p in choices) or abs(total - 1.0) > PROB_TOL:
                        raise ValueError(
                            f"probabilities at ({q!r}, {symbol!r}, {s}) sum to {total}")


def run_cdfa(a: Cdfa, word: str) -> Verdict:
    """Deterministic trajectory; verdict from the final state's membership."""
    q, k = a.initial, 0
    for symbol in word:
        q, d = a.delta[(q, symbol, sign(k))]
        k += displacement(d)
    if q in a.accepting:
        return Verdict.ACCEPTED
    if q in a.rejecting:
        return Verdict.REJECTED
    return Verdict.NEITHER


def run_cpfa(a: Cpfa, word: str) -> float:
    """Exact forward propagation; returns the final mass on accepting states."""
    dist: dict[tuple[str, int], float] = {(a.initial, 0): 1.0}
    for symbol in word:
        nxt: dict[tuple[str, int], float] = {}
        for (q, k), mass in dist.items():
            for q2, d, p in a.delta[(q, symbol, sign(k))]:
                if p == 0.0:
                    continue
                key = (q2, k + displacement(d))
                nxt[key] = nxt.get(key, 0.0) + mass * p
        dist = nxt
    return sum(mass for (q, _), mass in dist.items() if q in a.accepting)


def build_example1() -> Cdfa:
    """Deterministic recognizer of 0^n 1 0^n (n >= 1).

    The first block loads the counter with n - 1 (the first zero is absorbed
    by the state change), the second block counts down; the zero read when
    the counter is already empty is the n-th one, landing in the accepting
    state.  Anything off-pattern falls into the dead state.
    """
    states = ("start", "up", "down", "done", "dead")
    d = Direction
    delta: dict[tuple[str, str, int], tuple[str, Direction]] = {}

    def rule(q: str, symbol: str, target: str, move: Direction,
             s: int | None = None) -> None:
        for sg in (0, 1) if s is None else (s,):
            delta[(q, symbol, sg)] = (target, move)

    rule("start", "0", "up", d.STAY)
    rule("start", "1", "done", d.STAY)
    rule("up", "0", "up", d.RIGHT)
    rule("up", "1", "down", d.STAY)
    rule("down", "0", "down", d.LEFT, s=1)
    rule("down", "0", "done", d.STAY, s=0)
    rule("down", "1", "dead", d.STAY)
    rule("done", "0", "dead", d.STAY)
    rule("done", "1", "dead", d.STAY)
    rule("dead", "0", "dead", d.STAY)
    rule("dead", "1", "dead", d.STAY)
    return Cdfa(alphabet=("0", "1"), states=states, initial="start",
                accepting=frozenset({"done"}),
                rejecting=frozenset(states) - {"done"},
                delta=delta)


def _path_states(i: int) -> list[str]:
    out = [f"a{r}" for r in range(i)]
    out += [f"b{r}" for r in range(i)]
    out += [f"p{r}_{t}" for r in range(i) for t in range(i)]
    out += [f"m{r}_{t}" for r in range(i) for t in range(i)]
    out.append("dead")
    return out


def build_example2_path(i: int) -> Cdfa:
    """One deterministic path of the probabilistic recognizer: accepts the
    block words 0^l 1 0^m 1 0^n with (l - n) = i * (m - n), everything else
    rejected.  See the module docstring for the gadget.
    """
    if i < 1:
        raise ValueError("path index must be >= 1")
    d = Direction
    delta: dict[tuple[str, str, int], tuple[str, Direction]] = {}

    def rule(q: str, symbol: str, target: str, move: Direction,
             s: int | None = None) -> None:
        for sg in (0, 1) if s is None else (s,):
            delta[(q, symbol, sg)] = (target, move)

    for r in range(i):
        r2 = (r + 1) % i
        # Block 1: decrement on every i-th zero, residue in the state.
        rule(f"a{r}", "0", f"a{r2}", d.LEFT if r2 == 0 else d.STAY)
        rule(f"a{r}", "1", f"b{r}", d.STAY)
        # Block 2: increment on every zero; the residue rides along.
        rule(f"b{r}", "0", f"b{r}", d.RIGHT)
        # Second separator: counter already balanced -> matched, otherwise
        # enter the offset block-3 states with one decrement applied early.
        rule(f"b{r}", "1", f"m{r}_0", d.STAY, s=0)
        rule(f"b{r}", "1", f"p{r}_0", d.LEFT, s=1)
        for t in range(i):
            t2 = (t + 1) % i
            if t2 == 0:
                # Every i-th zero of block 3 leaves the counter alone.
                rule(f"p{r}_{t}", "0", f"p{r}_{t2}", d.STAY)
                rule(f"m{r}_{t}", "0", f"m{r}_{t2}", d.STAY)
            else:
                # Decrementing zero: with the offset, a zero counter means
                # this very zero balances the count.
                rule(f"p{r}_{t}", "0", f"p{r}_{t2}", d.LEFT, s=1)
                rule(f"p{r}_{t}", "0", f"m{r}_{t2}", d.STAY, s=0)
                # Once balanced, any further decrement is unrecoverable.
                rule(f"m{r}_{t}", "0", "dead", d.STAY)
            rule(f"p{r}_{t}", "1", "dead", d.STAY)
            rule(f"m{r}_{t}", "1", "dead", d.STAY)
    rule("dead", "0", "dead", d.STAY)
    rule("dead", "1", "dead", d.STAY)
    states = tuple(_path_states(i))
    accepting = frozenset({f"m{r}_{r}" for r in range(i)})
    return Cdfa(alphabet=("0", "1"), states=states, initial="a0",
                accepting=accepting,
                rejecting=frozenset(states) - accepting,
                delta=delta)


def build_example2(n: int) -> Cpfa:
    """Uniform branch over n deterministic paths; path i tests
    (l - n̂) = i * (m - n̂).  Members of the equal-blocks language satisfy
    every path, non-member block words at most one.
    """
    if n < 2:
        raise ValueError("need at least 2 paths")
    paths = [build_example2_path(i) for i in range(1, n + 1)]
    states: list[str] = ["q0"]
    accepting: set[str] = set()
    delta: dict[tuple[str, str, int], tuple[tuple[str, Direction, float], ...]] = {}
    for i, path in enumerate(paths, start=1):
        tag = f"P{i}_"
        states.extend(tag + q for q in path.states)
        accepting.update(tag + q for q in path.accepting)
        for (q, symbol, s), (q2, d) in path.delta.items():
            delta[(tag + q, symbol, s)] = ((tag + q2, d, 1.0),)
    # The decision which path to follow is made on the first symbol.
    for symbol in ("0", "1"):
        for s in (0, 1):
            choices = []
            for i, path in enumerate(paths, start=1):
                q2, d = path.delta[(path.initial, symbol, s)]
                choices.append((f"P{i}_{q2}", d, 1.0 / n))
            delta[("q0", symbol, s)] = tuple(choices)
    state_tuple = tuple(states)
    return Cpfa(alphabet=("0", "1"), states=state_tuple, initial="q0",
                accepting=frozenset(accepting),
                rejecting=frozenset(state_tuple) - accepting,
                delta=delta)
