"""
Tests for the reproducible noise streams.
"""

import numpy as np
import pytest

from langevingraph.integrators.noise import NoiseStream
from langevingraph.utils.errors import DomainError


def draw(stream, count):
    return np.array([stream.normal() for _ in range(count)])


def test_same_seed_and_key_repeat():
    a = draw(NoiseStream(42, 3, key=(1,)), 10)
    b = draw(NoiseStream(42, 3, key=(1,)), 10)
    assert np.array_equal(a, b)


def test_keys_give_different_streams():
    a = draw(NoiseStream(42, 3, key=(0,)), 5)
    b = draw(NoiseStream(42, 3, key=(1,)), 5)
    assert not np.array_equal(a, b)


def test_chunk_size_does_not_change_the_sequence():
    a = draw(NoiseStream(7, 2, chunk=3), 20)
    b = draw(NoiseStream(7, 2, chunk=4096), 20)
    assert np.array_equal(a, b)


def test_normals_continue_the_sequence():
    single = draw(NoiseStream(5, 2, chunk=8), 12)
    stream = NoiseStream(5, 2, chunk=8)
    head = draw(stream, 3)
    rest = stream.normals(9)
    assert np.array_equal(np.vstack([head, rest]), single)
    assert stream.consumed == 12


def test_spawn_matches_explicit_key():
    child = NoiseStream(9, 2, key=(4,)).spawn(1)
    assert child.key == (4, 1)
    assert np.array_equal(draw(child, 3), draw(NoiseStream(9, 2, key=(4, 1)), 3))


def test_invalid_arguments():
    with pytest.raises(DomainError):
        NoiseStream(-1, 2)
    with pytest.raises(DomainError):
        NoiseStream(2**64, 2)
    with pytest.raises(DomainError):
        NoiseStream(0, 0)
