import math

from hypothesis import given
from hypothesis import strategies as st

from qf1ca.core import (Configuration, Direction, StateVector, displacement,
                        invert_direction, norm2, sign, split, tape)


def test_displacement_values():
    assert displacement(Direction.LEFT) == -1
    assert displacement(Direction.STAY) == 0
    assert displacement(Direction.RIGHT) == 1


def test_invert_direction_is_involution():
    for d in Direction:
        assert invert_direction(invert_direction(d)) is d
    assert invert_direction(Direction.LEFT) is Direction.RIGHT


@given(st.integers(min_value=-1000, max_value=1000))
def test_sign_is_zero_only_at_zero(k):
    assert sign(k) == (0 if k == 0 else 1)


def test_tape_wraps_word_in_endmarkers():
    assert tape("01") == ["#", "0", "1", "$"]
    assert tape("") == ["#", "$"]


def test_basis_vector_has_unit_norm():
    v = StateVector.basis("q0")
    assert norm2(v) == 1.0
    assert v.amplitude("q0", 0) == 1.0
    assert v.amplitude("q0", 1) == 0.0


def test_from_dict_prunes_tiny_entries():
    v = StateVector.from_dict({
        Configuration("a", 0): 0.5,
        Configuration("b", 1): 1e-20,
    })
    assert len(v) == 1
    assert v.amplitude("b", 1) == 0.0


amplitudes = st.complex_numbers(max_magnitude=1.0, allow_nan=False,
                                allow_infinity=False)
vectors = st.dictionaries(
    st.tuples(st.sampled_from(["a", "b", "c"]), st.integers(-3, 3)).map(
        lambda t: Configuration(*t)),
    amplitudes, max_size=8)


@given(vectors)
def test_split_conserves_norm_and_partitions(raw):
    v = StateVector.from_dict(raw)
    inside, outside = split(v, lambda c: c.counter == 0)
    assert math.isclose(norm2(inside) + norm2(outside), norm2(v),
                        rel_tol=0, abs_tol=1e-12)
    assert all(c.counter == 0 for c, _ in inside)
    assert all(c.counter != 0 for c, _ in outside)
    assert len(inside) + len(outside) == len(v)
