"""Foundational value types: symbols, directions, configurations, sparse state vectors.

The evolution space is spanned by configurations (state, counter).  State
vectors are sparse maps from configuration to a complex amplitude; entries
below a pruning threshold are dropped after every linear operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator, Mapping, NamedTuple

LEFT_END = "#"
RIGHT_END = "$"
ENDMARKERS = (LEFT_END, RIGHT_END)

#: Default threshold below which state-vector entries are pruned.
PRUNE_EPS = 1e-15


class Direction(Enum):
    """Counter move attached to a transition: decrement, keep, or increment."""

    LEFT = "L"
    STAY = "D"
    RIGHT = "R"

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"Direction.{self.name}"


_DISPLACEMENT = {Direction.LEFT: -1, Direction.STAY: 0, Direction.RIGHT: +1}

_INVERSE = {
    Direction.LEFT: Direction.RIGHT,
    Direction.STAY: Direction.STAY,
    Direction.RIGHT: Direction.LEFT,
}


def displacement(d: Direction) -> int:
    """Counter change for a direction: LEFT -> -1, STAY -> 0, RIGHT -> +1."""
    return _DISPLACEMENT[d]


def invert_direction(d: Direction) -> Direction:
    """Swap LEFT and RIGHT; STAY is its own inverse."""
    return _INVERSE[d]


def sign(counter: int) -> int:
    """Counter sign as visible to transitions: 0 iff the counter is zero."""
    return 0 if counter == 0 else 1


class Configuration(NamedTuple):
    """A (state, counter) pair; basis vector of the evolution space."""

    state: str
    counter: int


def tape(word: str) -> list[str]:
    """Tape contents for an input word: '#' + word + '$', one symbol per cell."""
    return [LEFT_END, *word, RIGHT_END]


@dataclass(frozen=True)
class StateVector:
    """Sparse superposition over configurations.

    Treated as immutable: every operation returns a new vector.  Entries with
    modulus below ``prune_eps`` are never stored.
    """

    entries: Mapping[Configuration, complex] = field(default_factory=dict)
    prune_eps: float = PRUNE_EPS

    @staticmethod
    def basis(state: str, counter: int = 0) -> "StateVector":
        return StateVector({Configuration(state, counter): 1.0 + 0.0j})

    @staticmethod
    def from_dict(raw: Mapping[Configuration, complex],
                  prune_eps: float = PRUNE_EPS) -> "StateVector":
        pruned = {c: complex(a) for c, a in raw.items() if abs(a) >= prune_eps}
        return StateVector(pruned, prune_eps)

    def __iter__(self) -> Iterator[tuple[Configuration, complex]]:
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)

    def amplitude(self, state: str, counter: int) -> complex:
        return self.entries.get(Configuration(state, counter), 0.0 + 0.0j)


def norm2(v: StateVector) -> float:
    """Squared l2 norm: sum of |amplitude|^2 over stored entries."""
    return sum(abs(a) ** 2 for a in v.entries.values())


def split(v: StateVector,
          member: Callable[[Configuration], bool]) -> tuple[StateVector, StateVector]:
    """Partition a vector by a configuration predicate.

    Returns (inside, outside); squared norms add up to norm2(v) exactly up to
    floating rounding since entries are merely routed, never rescaled.
    """
    inside: dict[Configuration, complex] = {}
    outside: dict[Configuration, complex] = {}
    for c, a in v.entries.items():
        (inside if member(c) else outside)[c] = a
    return (StateVector(inside, v.prune_eps), StateVector(outside, v.prune_eps))
