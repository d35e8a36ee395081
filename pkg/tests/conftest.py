"""Shared helpers: word families and random automaton generation."""

from __future__ import annotations

import itertools

import numpy as np

from qf1ca.automaton import SimpleQf1ca
from qf1ca.core import Direction

TAPE_SYMBOLS = ("0", "1", "#", "$")


def block_word(l: int, m: int, n: int) -> str:
    return "0" * l + "1" + "0" * m + "1" + "0" * n


def all_words(max_len: int, alphabet: str = "01") -> list[str]:
    out = []
    for length in range(max_len + 1):
        out.extend("".join(t) for t in itertools.product(alphabet, repeat=length))
    return out


def is_equal_pair(word: str) -> bool:
    """Membership in 0^n 1 0^n (n >= 0)."""
    if word.count("1") != 1:
        return False
    left, right = word.split("1")
    return set(left) <= {"0"} and left == right


def is_zeros_then_ones(word: str) -> bool:
    """Membership in 0^n 1^n (n >= 0)."""
    k = word.count("0")
    return len(word) == 2 * k and word == "0" * k + "1" * (len(word) - k)


def split_blocks(word: str) -> tuple[int, int, int] | None:
    """(l, m, n) if the word is 0^l 1 0^m 1 0^n, else None."""
    if word.count("1") != 2:
        return None
    a, b, c = word.split("1")
    if set(a + b + c) <= {"0"}:
        return len(a), len(b), len(c)
    return None


def random_simple(rng: np.random.Generator,
                  n_states: tuple[int, int] = (2, 4)) -> SimpleQf1ca:
    """Haar-ish random simple automaton: QR-orthonormalized Gaussian matrices
    per (symbol, sign) and a uniformly random total direction function.
    """
    n = int(rng.integers(n_states[0], n_states[1] + 1))
    states = tuple(f"q{i}" for i in range(n))
    unitaries = {}
    for symbol in TAPE_SYMBOLS:
        for s in (0, 1):
            z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            q, _ = np.linalg.qr(z)
            unitaries[(symbol, s)] = q
    direction = {(q, symbol): Direction(rng.choice(["L", "D", "R"]))
                 for q in states for symbol in TAPE_SYMBOLS}
    return SimpleQf1ca(
        alphabet=("0", "1"), states=states, initial="q0",
        accepting=frozenset({states[-1]}), rejecting=frozenset(),
        unitaries=unitaries, direction=direction)


def perturb_one_amplitude(a: SimpleQf1ca, rng: np.random.Generator,
                          factor: float = 1.01,
                          min_modulus: float = 0.1) -> SimpleQf1ca:
    """Scale one matrix entry of modulus >= min_modulus by the given factor.

    Every column of a unitary has an entry of modulus >= 1/sqrt(n), so a
    qualifying entry always exists; picking a large one makes the induced
    norm defect detectable above numerical noise.
    """
    keys = sorted(a.unitaries)
    key = keys[int(rng.integers(len(keys)))]
    m = np.array(a.unitaries[key], dtype=complex)
    big = np.argwhere(np.abs(m) >= min_modulus)
    i, j = big[int(rng.integers(len(big)))]
    m[i, j] *= factor
    return SimpleQf1ca(
        alphabet=a.alphabet, states=a.states, initial=a.initial,
        accepting=a.accepting, rejecting=a.rejecting,
        unitaries={**a.unitaries, key: m}, direction=a.direction)
