import itertools

import pytest

from conftest import all_words, block_word, split_blocks
from qf1ca.classical import (Cdfa, Cpfa, Verdict, build_example1,
                             build_example2, build_example2_path, run_cdfa,
                             run_cpfa)
from qf1ca.core import Direction
from qf1ca.zoo import path_predicate


def test_cdfa_requires_total_delta():
    with pytest.raises(ValueError):
        Cdfa(alphabet=("0",), states=("q",), initial="q",
             accepting=frozenset(), rejecting=frozenset(),
             delta={("q", "0", 0): ("q", Direction.STAY)})  # sign 1 missing


def test_cpfa_requires_probabilities_summing_to_one():
    with pytest.raises(ValueError):
        Cpfa(alphabet=("0",), states=("q",), initial="q",
             accepting=frozenset(), rejecting=frozenset(),
             delta={("q", "0", s): (("q", Direction.STAY, 0.7),) for s in (0, 1)})


def test_example1_decides_the_equal_pair_language():
    a = build_example1()
    assert run_cdfa(a, "010") is Verdict.ACCEPTED
    assert run_cdfa(a, "00100") is Verdict.ACCEPTED
    assert run_cdfa(a, "0010") is Verdict.REJECTED
    assert run_cdfa(a, "0100") is Verdict.REJECTED
    assert run_cdfa(a, "0") is Verdict.REJECTED
    assert run_cdfa(a, "") is Verdict.REJECTED


def test_example1_exhaustive_against_word_oracle():
    a = build_example1()
    for word in all_words(9):
        left, sep, right = word.partition("1")
        member = sep == "1" and "1" not in right and left == right
        got = run_cdfa(a, word)
        assert (got is Verdict.ACCEPTED) == member, word


def test_path_cdfa_agrees_with_arithmetic_predicate():
    for i in (1, 2, 3, 4, 5):
        path = build_example2_path(i)
        for l, m, n in itertools.product(range(8), repeat=3):
            got = run_cdfa(path, block_word(l, m, n))
            want = Verdict.ACCEPTED if path_predicate(i, l, m, n) else Verdict.REJECTED
            assert got is want, (i, l, m, n)


def test_path_cdfa_rejects_malformed_words():
    path = build_example2_path(2)
    for word in all_words(7):
        if split_blocks(word) is None:
            assert run_cdfa(path, word) is Verdict.REJECTED, word


def test_build_example2_validates_parameters():
    with pytest.raises(ValueError):
        build_example2(1)
    with pytest.raises(ValueError):
        build_example2_path(0)


def test_example2_members_accepted_with_probability_one():
    a = build_example2(3)
    for k in range(7):
        assert run_cpfa(a, block_word(k, k, k)) == pytest.approx(1.0, abs=1e-12)


def test_example2_nonmembers_capped_at_one_over_n():
    for n in (2, 3, 5):
        a = build_example2(n)
        for l, m, nn in itertools.product(range(6), repeat=3):
            if l == m == nn:
                continue
            p = run_cpfa(a, block_word(l, m, nn))
            matches = sum(path_predicate(i, l, m, nn) for i in range(1, n + 1))
            assert p == pytest.approx(matches / n, abs=1e-12)
            assert p <= 1 / n + 1e-12


def test_example2_malformed_words_rejected_surely():
    a = build_example2(4)
    for word in all_words(6):
        if split_blocks(word) is None:
            assert run_cpfa(a, word) == pytest.approx(0.0, abs=1e-12)


def test_cpfa_mass_is_conserved_stepwise():
    a = build_example2(3)
    # run_cpfa reports accepting mass; rejecting states absorb the rest, so
    # total mass 1 means conservation held throughout.
    for word in ["0101", "010010", "11", "000"]:
        p = run_cpfa(a, word)
        q = run_cpfa(replace_accepting_with_complement(a), word)
        assert p + q == pytest.approx(1.0, abs=1e-12)


def replace_accepting_with_complement(a: Cpfa) -> Cpfa:
    return Cpfa(alphabet=a.alphabet, states=a.states, initial=a.initial,
                accepting=frozenset(a.states) - a.accepting,
                rejecting=frozenset(), delta=a.delta)
