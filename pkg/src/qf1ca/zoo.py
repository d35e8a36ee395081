"""Builders for the catalogued quantum one-counter automata.

Every builder returns a ``SimpleQf1ca`` whose matrices are completed to full
unitaries: explicitly listed columns are taken verbatim, unlisted states get
a self-loop whenever that keeps the columns orthonormal, and the few
remaining columns are filled by Gram-Schmidt.  Self-loops keep unreachable
trash states inert, which matters for exact rejection probabilities.

The recognizers:

* ``build_example3`` - the equal-blocks language 0^n 1 0^n with probability 1,
  in an integer-counter and a non-negative-counter variant.
* ``build_example4`` - 0^n 1^n with probability p where p is the real root of
  p^3 + p - 1 = 0 (``critical_p``), the best achievable for this construction.
* ``build_example5`` - the two-separator language 0^n 1 0^n 1 0^n: N parallel
  reversible paths, path i testing (l - n) = i * (m - n) via a divisibility
  gadget; members accepted with probability 1, non-members rejected with
  probability at least 1 - 1/N.
* ``build_theorem5`` - blocks 0^l 1 0^m 1 0^n with exactly one of l = n,
  m = n and l != m, recognized with probability 4/7 through interference of
  two paths at the right endmarker.
* ``build_theorem6_experimental`` - three-path variant for the
  exactly-two-equal-blocks language; the margin (measured, not asserted)
  is 1/34 over one half.
"""

from __future__ import annotations

import cmath
from typing import Mapping

import numpy as np

from .automaton import (AcceptanceType, CounterDomain, Observation,
                        SimpleQf1ca)
from .core import Direction, LEFT_END, RIGHT_END
from .wellformed import complete_unitary

#: source state -> {target state: amplitude}; unlisted sources are completed.
ColumnSpec = Mapping[str, Mapping[str, complex]]


def critical_p(tol: float = 1e-13) -> float:
    """Real root of p^3 + p - 1 = 0 in (0, 1), by bisection."""
    def f(p: float) -> float:
        return p ** 3 + p - 1

    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def path_predicate(i: int, l: int, m: int, n: int) -> bool:
    """Arithmetic oracle for path i of the multi-path recognizers."""
    if i < 1:
        raise ValueError("path index must be >= 1")
    return (l - n) == i * (m - n)


def build_unitary(states: tuple[str, ...], columns: ColumnSpec) -> np.ndarray:
    """Unitary with the given columns; unlisted states self-loop when that is
    orthogonal to every given column, the rest is completed by Gram-Schmidt.
    """
    index = {q: i for i, q in enumerate(states)}
    n = len(states)
    partial: dict[int, np.ndarray] = {}
    hit_rows: set[int] = set()
    for src, targets in columns.items():
        col = np.zeros(n, dtype=complex)
        for tgt, amp in targets.items():
            col[index[tgt]] = amp
            hit_rows.add(index[tgt])
        partial[index[src]] = col
    for q in states:
        j = index[q]
        if j not in partial and j not in hit_rows:
            col = np.zeros(n, dtype=complex)
            col[j] = 1.0
            partial[j] = col
            hit_rows.add(j)
    return complete_unitary(partial, n)


def assemble(alphabet: tuple[str, ...],
             states: tuple[str, ...],
             initial: str,
             accepting: frozenset[str],
             rejecting: frozenset[str],
             columns: Mapping[tuple[str, int], ColumnSpec],
             directions: Mapping[tuple[str, str], Direction],
             acceptance: AcceptanceType = AcceptanceType.STATE_AND_ZERO,
             observation: Observation = Observation.MANY_MEASURE,
             counter_domain: CounterDomain = CounterDomain.ALL_INTEGERS,
             ) -> SimpleQf1ca:
    """Build a simple automaton from sparse column specs.

    Matrices absent from ``columns`` (for any (tape symbol, sign)) default to
    the identity; the direction function defaults to STAY everywhere and is
    overridden by ``directions``.
    """
    tape_alphabet = (*alphabet, LEFT_END, RIGHT_END)
    unitaries = {}
    for symbol in tape_alphabet:
        for s in (0, 1):
            unitaries[(symbol, s)] = build_unitary(states, columns.get((symbol, s), {}))
    direction = {(q, symbol): Direction.STAY
                 for q in states for symbol in tape_alphabet}
    direction.update(directions)
    return SimpleQf1ca(
        alphabet=alphabet, states=states, initial=initial,
        accepting=accepting, rejecting=rejecting,
        unitaries=unitaries, direction=direction,
        acceptance=acceptance, observation=observation,
        counter_domain=counter_domain)


def build_example3(variant: CounterDomain = CounterDomain.ALL_INTEGERS,
                   acceptance: AcceptanceType = AcceptanceType.STATE_AND_ZERO,
                   ) -> SimpleQf1ca:
    """Recognizer of 0^n 1 0^n (n >= 0) with probability 1.

    The counter goes up through the first block and down through the second;
    the endmarker matrix routes a balanced counter to accept and anything
    else to a reject state.  Surplus separators walk the amplitude through
    the trash cycle q2 -> r2 -> r, never back into a live state.  The
    non-negative variant instead rejects from q2 the moment the counter hits
    zero with zeros still to read, so the counter never needs to go below 0.
    """
    states = ("q0", "q1", "q2", "qa", "qr", "qr2")
    one = 1.0 + 0.0j
    if variant is CounterDomain.ALL_INTEGERS:
        zero_cols = {"q1": {"q1": one}, "q2": {"q2": one}}
        columns = {("0", 0): zero_cols, ("0", 1): zero_cols}
    else:
        columns = {
            ("0", 0): {"q1": {"q1": one}, "q2": {"qr": one}},
            ("0", 1): {"q1": {"q1": one}, "q2": {"q2": one}},
        }
    ones = {"q1": {"q2": one}, "q2": {"qr2": one}, "qr2": {"qr": one}, "qr": {"q1": one}}
    columns.update({
        ("#", 0): {"q0": {"q1": one}},
        ("1", 0): ones,
        ("1", 1): ones,
        ("$", 0): {"q1": {"qr": one}, "q2": {"qa": one}},
        ("$", 1): {"q1": {"qr2": one}, "q2": {"qr": one}},
    })
    directions = {("q1", "0"): Direction.RIGHT, ("q2", "0"): Direction.LEFT}
    return assemble(
        alphabet=("0", "1"), states=states, initial="q0",
        accepting=frozenset({"qa"}), rejecting=frozenset({"qr", "qr2"}),
        columns=columns, directions=directions,
        acceptance=acceptance, counter_domain=variant)


def build_example4(p: float | None = None) -> SimpleQf1ca:
    """Recognizer of 0^n 1^n with acceptance probability p for members.

    The initial superposition sqrt(1-p)|q1> + sqrt(p)|q2> is an exact fixed
    point of the 0-step, so no probability leaks while the first block is
    read; each 1 rejects the q1 share and the endmarker accepts the q2 share
    iff the counter is balanced.  The default p, the root of p^3 + p - 1 = 0,
    makes the worst non-member rejection probability equal to the member
    acceptance probability.
    """
    if p is None:
        p = critical_p()
    if not 0.0 < p < 1.0:
        raise ValueError("p must lie strictly between 0 and 1")
    states = ("q0", "q1", "q2", "qa", "qr", "qr2")
    sp = np.sqrt(p)
    s1p = np.sqrt(1.0 - p)
    spp = np.sqrt(p * (1.0 - p))
    one = 1.0 + 0.0j
    zero_cols = {
        "q1": {"q1": 1.0 - p, "q2": spp, "qr": sp},
        "q2": {"q1": spp, "q2": p, "qr": -s1p},
    }
    columns = {
        ("#", 0): {"q0": {"q1": s1p, "q2": sp}},
        ("0", 0): zero_cols,
        ("0", 1): zero_cols,
        ("1", 1): {"q1": {"qr": one}, "q2": {"q2": one}},
        ("1", 0): {"q1": {"qr": one}, "q2": {"qr2": one}},
        ("$", 1): {"q1": {"qr": one}, "q2": {"qr2": one}},
        ("$", 0): {"q1": {"qr": one}, "q2": {"qa": one}},
    }
    directions = {
        ("q1", "0"): Direction.RIGHT, ("q2", "0"): Direction.RIGHT,
        ("q1", "1"): Direction.LEFT, ("q2", "1"): Direction.LEFT,
    }
    return assemble(
        alphabet=("0", "1"), states=states, initial="q0",
        accepting=frozenset({"qa"}), rejecting=frozenset({"qr", "qr2"}),
        columns=columns, directions=directions)


def build_example5(n_paths: int) -> SimpleQf1ca:
    """Recognizer of 0^n 1 0^n 1 0^n: members accepted with probability 1,
    non-members rejected with probability >= 1 - 1/n_paths.

    The left endmarker splits the amplitude evenly over n_paths reversible
    paths.  Path i runs the divisibility gadget: the first block increments
    the counter on every i-th zero while tracking l mod i in the state, the
    second block decrements on every zero, the third increments on every
    zero that is not an i-th one while tracking n mod i.  At the endmarker a
    path accepts (state and zero counter) iff its two residues agree, which
    together with counter zero is equivalent to (l - n) = i * (m - n).
    """
    if n_paths < 2:
        raise ValueError("need at least 2 paths")
    one = 1.0 + 0.0j
    states: list[str] = ["q0"]
    columns: dict[tuple[str, int], dict[str, dict[str, complex]]] = {
        ("#", 0): {"q0": {}},
        ("0", 0): {}, ("0", 1): {},
        ("1", 0): {}, ("1", 1): {},
        ("$", 0): {}, ("$", 1): {},
    }
    directions: dict[tuple[str, str], Direction] = {}
    accepting: set[str] = set()
    rejecting: set[str] = set()
    amp0 = (1.0 / np.sqrt(n_paths)) + 0.0j
    for i in range(1, n_paths + 1):
        a = [f"a{i}_{r}" for r in range(i)]
        b = [f"b{i}_{r}" for r in range(i)]
        c = {(r, t): f"c{i}_{r}_{t}" for r in range(i) for t in range(i)}
        acc = [f"acc{i}_{r}" for r in range(i)]
        ra = [f"ra{i}_{r}" for r in range(i)]
        rb = [f"rb{i}_{r}" for r in range(i)]
        rc = {(r, t): f"rc{i}_{r}_{t}" for r in range(i) for t in range(i)}
        r1 = {(r, t): f"r1{i}_{r}_{t}" for r in range(i) for t in range(i)}
        states += a + b + list(c.values()) + acc + ra + rb
        states += list(rc.values()) + list(r1.values())
        accepting.update(acc)
        rejecting.update(ra + rb)
        rejecting.update(rc.values())
        rejecting.update(r1.values())
        columns[("#", 0)]["q0"][a[0]] = amp0
        for r in range(i):
            r2 = (r + 1) % i
            for s in (0, 1):
                columns[("0", s)][a[r]] = {a[r2]: one}
                columns[("0", s)][b[r]] = {b[r]: one}
                columns[("1", s)][a[r]] = {b[r]: one}
                columns[("1", s)][b[r]] = {c[(r, 0)]: one}
                columns[("$", s)][a[r]] = {ra[r]: one}
                columns[("$", s)][b[r]] = {rb[r]: one}
            for t in range(i):
                t2 = (t + 1) % i
                for s in (0, 1):
                    columns[("0", s)][c[(r, t)]] = {c[(r, t2)]: one}
                    columns[("1", s)][c[(r, t)]] = {r1[(r, t)]: one}
                    columns[("$", s)][c[(r, t)]] = \
                        {acc[r]: one} if t == r else {rc[(r, t)]: one}
                # Block 3: increment unless this is an i-th zero.
                if t != 0:
                    directions[(c[(r, t)], "0")] = Direction.RIGHT
            directions[(b[r], "0")] = Direction.LEFT
        # Block 1: increment exactly on the i-th zeros (wrap to residue 0).
        directions[(a[0], "0")] = Direction.RIGHT
    return assemble(
        alphabet=("0", "1"), states=tuple(states), initial="q0",
        accepting=frozenset(accepting), rejecting=frozenset(rejecting),
        columns=columns, directions=directions)


def build_theorem5() -> SimpleQf1ca:
    """Two-path interference recognizer (probability 4/7) for block words
    0^l 1 0^m 1 0^n with exactly one of l = n, m = n true and l != m.

    The left endmarker puts weight 3/7 directly on accept and 2/7 on each of
    two reversible paths whose counters end at m - n and l - n.  At the right
    endmarker both paths mix into the same accept/reject pair; with equal
    counters the accept amplitudes cancel (rejecting all-equal words with
    4/7 total), and a single path at counter zero adds 1/7 of acceptance.
    """
    one = 1.0 + 0.0j
    h = (1.0 / np.sqrt(2.0)) + 0.0j
    states = ("q0", "a1", "b1", "c1", "a2", "b2", "c2", "qa", "qr",
              "ra1", "rb1", "ra2", "rb2", "rr1", "rr2")
    live = {
        ("0", None): {"a1": "a1", "b1": "b1", "c1": "c1",
                      "a2": "a2", "b2": "b2", "c2": "c2"},
        ("1", None): {"a1": "b1", "b1": "c1", "c1": "rr1",
                      "a2": "b2", "b2": "c2", "c2": "rr2"},
    }
    columns: dict[tuple[str, int], dict[str, dict[str, complex]]] = {
        ("#", 0): {"q0": {"a1": np.sqrt(2.0 / 7.0) + 0.0j,
                          "a2": np.sqrt(2.0 / 7.0) + 0.0j,
                          "qa": np.sqrt(3.0 / 7.0) + 0.0j}},
    }
    for (symbol, _), mapping in live.items():
        for s in (0, 1):
            columns[(symbol, s)] = {src: {tgt: one} for src, tgt in mapping.items()}
    dollar = {
        "a1": {"ra1": one}, "b1": {"rb1": one},
        "a2": {"ra2": one}, "b2": {"rb2": one},
        "c1": {"qa": h, "qr": h},
        "c2": {"qa": -h, "qr": h},
    }
    columns[("$", 0)] = dollar
    columns[("$", 1)] = dollar
    directions = {
        # Path 1 tracks m - n, path 2 tracks l - n.
        ("b1", "0"): Direction.RIGHT, ("c1", "0"): Direction.LEFT,
        ("a2", "0"): Direction.RIGHT, ("c2", "0"): Direction.LEFT,
    }
    return assemble(
        alphabet=("0", "1"), states=states, initial="q0",
        accepting=frozenset({"qa"}),
        rejecting=frozenset({"qr", "ra1", "rb1", "ra2", "rb2", "rr1", "rr2"}),
        columns=columns, directions=directions)


def build_theorem6_experimental() -> SimpleQf1ca:
    """Three-path recognizer for block words where exactly two of the three
    blocks are equal.  Paths track m - n, l - n and l - m; the endmarker
    mixes each path through a cube-roots-of-unity column so that the accept
    amplitudes cancel exactly when all three counters are zero.  Measured
    behavior: members accepted with 9/17, non-members rejected with >= 9/17
    (margin 1/34 over one half).
    """
    one = 1.0 + 0.0j
    alpha = np.sqrt(3.0 / 17.0)
    beta = np.sqrt(8.0 / 17.0)
    w = cmath.exp(2j * cmath.pi / 3)
    states = ("q0",
              "a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3",
              "qa", "u", "v",
              "ra1", "rb1", "ra2", "rb2", "ra3", "rb3", "rr1", "rr2", "rr3")
    columns: dict[tuple[str, int], dict[str, dict[str, complex]]] = {
        ("#", 0): {"q0": {"qa": beta + 0.0j,
                          "a1": alpha + 0.0j, "a2": alpha + 0.0j, "a3": alpha + 0.0j}},
    }
    for s in (0, 1):
        columns[("0", s)] = {q: {q: one}
                             for q in ("a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3")}
        columns[("1", s)] = {"a1": {"b1": one}, "b1": {"c1": one}, "c1": {"rr1": one},
                             "a2": {"b2": one}, "b2": {"c2": one}, "c2": {"rr2": one},
                             "a3": {"b3": one}, "b3": {"c3": one}, "c3": {"rr3": one}}
        third = (1.0 / np.sqrt(3.0))
        columns[("$", s)] = {
            "a1": {"ra1": one}, "b1": {"rb1": one},
            "a2": {"ra2": one}, "b2": {"rb2": one},
            "a3": {"ra3": one}, "b3": {"rb3": one},
            "c1": {"qa": third * w, "u": third * w ** 2, "v": third * one},
            "c2": {"qa": third * w ** 2, "u": third * w, "v": third * one},
            "c3": {"qa": third * one, "u": third * one, "v": third * one},
        }
    directions = {
        # Path 1: m - n; path 2: l - n; path 3: l - m.
        ("b1", "0"): Direction.RIGHT, ("c1", "0"): Direction.LEFT,
        ("a2", "0"): Direction.RIGHT, ("c2", "0"): Direction.LEFT,
        ("a3", "0"): Direction.RIGHT, ("b3", "0"): Direction.LEFT,
    }
    return assemble(
        alphabet=("0", "1"), states=states, initial="q0",
        accepting=frozenset({"qa"}),
        rejecting=frozenset({"u", "v", "ra1", "rb1", "ra2", "rb2",
                             "ra3", "rb3", "rr1", "rr2", "rr3"}),
        columns=columns, directions=directions)
