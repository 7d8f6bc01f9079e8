import math

import numpy as np
import pytest

from orthkit import FieldTag, MultilinearMap, SpaceSpec


@pytest.fixture
def diag21():
    return MultilinearMap.from_matrix(np.diag([2.0, 1.0]))


@pytest.fixture
def e22():
    return MultilinearMap.from_matrix(np.array([[0.0, 0.0], [0.0, 1.0]]))


@pytest.fixture
def eye2():
    return MultilinearMap.from_matrix(np.eye(2))


@pytest.fixture
def eye2c():
    return MultilinearMap.from_matrix(np.eye(2, dtype=complex))


@pytest.fixture
def diag_i_minus_i():
    return MultilinearMap.from_matrix(np.diag([1j, -1j]))


@pytest.fixture
def bilinear_x1y1():
    return MultilinearMap.from_bilinear(np.array([[1.0, 0.0], [0.0, 0.0]]))


@pytest.fixture
def bilinear_x2y2():
    return MultilinearMap.from_bilinear(np.array([[0.0, 0.0], [0.0, 1.0]]))


@pytest.fixture
def linf_sum_functional():
    # x -> x1 + x2 on l-inf(R^2)
    return MultilinearMap((SpaceSpec(2, math.inf),), SpaceSpec(1, 2.0),
                          np.array([[1.0, 1.0]]))
