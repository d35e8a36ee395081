"""Numerical well-formedness checks.

Three layers of certification:

* ``check_conditions`` evaluates the three transition-table sum conditions
  (local probability/orthogonality, separability I and II) directly.
* ``check_simple`` reduces the simple form to per-matrix unitarity.
* ``isometry_oracle`` builds the explicit step operator on a truncated
  configuration space and measures how far its columns are from orthonormal.
  This is the independent ground truth the other two are compared against.

In *strict* mode the separability conditions are additionally evaluated with
independent counter signs for the two factors.  The table states them with a
single shared sign, but they are applied to configuration pairs whose counters
differ by 1 or 2, where the two signs can disagree (e.g. counters 0 and 1);
the matrix oracle settles which reading matters at that boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .automaton import GeneralQf1ca, SimpleQf1ca
from .core import Direction, displacement, sign, tape

DEFAULT_TOL = 1e-9


class NotIsometric(ValueError):
    """Supplied columns are not orthonormal, so no unitary completion exists."""


@dataclass(frozen=True)
class ConditionViolation:
    condition: int                      # 1, 2 or 3
    symbol: str
    signs: tuple[int, int]
    states: tuple[str, str]
    residual: float

    def __str__(self) -> str:
        return (f"condition ({self.condition}) at symbol {self.symbol!r}, "
                f"signs {self.signs}, states {self.states}: residual {self.residual:.3e}")


@dataclass(frozen=True)
class ConditionReport:
    violations: list[ConditionViolation] = field(default_factory=list)
    strict_mode: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def max_residual(self) -> float:
        return max((v.residual for v in self.violations), default=0.0)


def _cond1(a: GeneralQf1ca, q1: str, q2: str, symbol: str, s: int) -> complex:
    t1 = a.targets(q1, symbol, s)
    t2 = a.targets(q2, symbol, s)
    total = sum(t1[key].conjugate() * t2[key] for key in t1.keys() & t2.keys())
    return total - (1.0 if q1 == q2 else 0.0)


def _cond2(a: GeneralQf1ca, q1: str, q2: str, symbol: str, s1: int, s2: int) -> complex:
    t1 = a.targets(q1, symbol, s1)
    t2 = a.targets(q2, symbol, s2)
    total = 0.0 + 0.0j
    for (q, d), amp in t1.items():
        if d is Direction.RIGHT:
            total += amp.conjugate() * t2.get((q, Direction.STAY), 0.0)
        elif d is Direction.STAY:
            total += amp.conjugate() * t2.get((q, Direction.LEFT), 0.0)
    return total


def _cond3(a: GeneralQf1ca, q1: str, q2: str, symbol: str, s1: int, s2: int) -> complex:
    t1 = a.targets(q1, symbol, s1)
    t2 = a.targets(q2, symbol, s2)
    total = 0.0 + 0.0j
    for (q, d), amp in t1.items():
        if d is Direction.RIGHT:
            total += amp.conjugate() * t2.get((q, Direction.LEFT), 0.0)
    return total


def check_conditions(a: GeneralQf1ca, tol: float = DEFAULT_TOL,
                     strict: bool = True) -> ConditionReport:
    """Evaluate the three well-formedness sums for every tape symbol, ordered
    state pair, and counter sign; residuals above ``tol`` are reported.
    """
    violations: list[ConditionViolation] = []
    sign_pairs = [(s1, s2) for s1 in (0, 1) for s2 in (0, 1)] if strict \
        else [(0, 0), (1, 1)]
    for symbol in a.tape_alphabet:
        for q1 in a.states:
            for q2 in a.states:
                for s in (0, 1):
                    r = abs(_cond1(a, q1, q2, symbol, s))
                    if r > tol:
                        violations.append(ConditionViolation(1, symbol, (s, s), (q1, q2), r))
                for s1, s2 in sign_pairs:
                    r = abs(_cond2(a, q1, q2, symbol, s1, s2))
                    if r > tol:
                        violations.append(ConditionViolation(2, symbol, (s1, s2), (q1, q2), r))
                    r = abs(_cond3(a, q1, q2, symbol, s1, s2))
                    if r > tol:
                        violations.append(ConditionViolation(3, symbol, (s1, s2), (q1, q2), r))
    return ConditionReport(violations, strict_mode=strict)


def check_matrix_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Max-norm residual of m† m - I; ok iff it is within tol."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    residual = float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))
    return residual <= tol, residual


def check_simple(a: SimpleQf1ca, tol: float = DEFAULT_TOL) -> ConditionReport:
    """Per-matrix unitarity check; equivalent to the three conditions for the
    simple form.  Failures are reported against condition (1) at the offending
    (symbol, sign).
    """
    violations: list[ConditionViolation] = []
    for (symbol, s), m in sorted(a.unitaries.items()):
        ok, residual = check_matrix_unitary(m, tol)
        if not ok:
            violations.append(ConditionViolation(1, symbol, (s, s), ("*", "*"), residual))
    return ConditionReport(violations, strict_mode=True)


def isometry_oracle(a: GeneralQf1ca, word: str, counter_bound: int) -> float:
    """Largest deviation of the per-step evolution operator from an isometry.

    For every tape position the explicit matrix of the step operator is built
    over source configurations (q, k) with |k| <= counter_bound (targets range
    one further), and the max-norm distance of its column Gram matrix from the
    identity is taken.  Returns the maximum over all steps.
    """
    if counter_bound < len(word) + 2:
        raise ValueError("counter_bound must be at least |word| + 2")
    K = counter_bound
    states = a.states
    src_index = {}
    cols = []
    for k in range(-K, K + 1):
        for q in states:
            src_index[(q, k)] = len(cols)
            cols.append((q, k))
    tgt_index = {}
    n_rows = 0
    for k in range(-K - 1, K + 2):
        for q in states:
            tgt_index[(q, k)] = n_rows
            n_rows += 1
    worst = 0.0
    for symbol in tape(word):
        u = np.zeros((n_rows, len(cols)), dtype=complex)
        for (q, k), j in src_index.items():
            for (q2, d), amp in a.targets(q, symbol, sign(k)).items():
                u[tgt_index[(q2, k + displacement(d))], j] += amp
        gram = u.conj().T @ u
        worst = max(worst, float(np.max(np.abs(gram - np.eye(len(cols))))))
    return worst


def complete_unitary(partial: dict[int, np.ndarray], order: int,
                     tol: float = DEFAULT_TOL) -> np.ndarray:
    """Extend pairwise-orthonormal columns to a full unitary matrix.

    ``partial`` maps column index -> column vector.  Unspecified columns are
    filled by Gram-Schmidt over the standard basis vectors taken in ascending
    index order, so the completion is deterministic.  Raises NotIsometric if
    the given columns are not orthonormal within tol.
    """
    n = order
    m = np.zeros((n, n), dtype=complex)
    given = sorted(partial.items())
    for j, col in given:
        v = np.asarray(col, dtype=complex).reshape(n)
        m[:, j] = v
    if given:
        sub = m[:, [j for j, _ in given]]
        residual = float(np.max(np.abs(sub.conj().T @ sub - np.eye(len(given)))))
        if residual > tol:
            raise NotIsometric(f"given columns deviate from orthonormal by {residual:.3e}")
    chosen = [m[:, j] for j, _ in given]
    basis_cursor = 0
    for j in range(n):
        if j in partial:
            continue
        col = None
        while basis_cursor < n:
            cand = np.zeros(n, dtype=complex)
            cand[basis_cursor] = 1.0
            basis_cursor += 1
            for c in chosen:
                cand = cand - (c.conj() @ cand) * c
            nrm = float(np.linalg.norm(cand))
            if nrm > 1e-6:
                col = cand / nrm
                break
        if col is None:
            raise NotIsometric("ran out of basis vectors; given columns were degenerate")
        m[:, j] = col
        chosen.append(col)
    return m
