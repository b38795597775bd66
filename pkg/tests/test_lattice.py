import numpy as np
import pytest
from hypothesis import given, strategies as st

from snake_qchar.exceptions import DomainError, InputError
from snake_qchar.lattice import (AlgebraType, PlanePoint, SpectralPoint, cartan_matrix, in_W, in_X, iota,
                                 iota_inverse, simple_root, symmetrizer, x_class_shift)


def test_parse_algebra_names():
    assert AlgebraType.parse('B3') == AlgebraType(3)
    assert AlgebraType.parse('bn=4').rank == 4
    assert AlgebraType.parse('sl2').sl2
    assert str(AlgebraType(5)) == 'B5'


def test_parse_rejects_unknown_types():
    with pytest.raises(InputError):
        AlgebraType.parse('C3')


def test_rank_bounds():
    with pytest.raises(DomainError):
        AlgebraType(1)
    with pytest.raises(DomainError):
        AlgebraType(9)


def test_cartan_matrix_b3(b3):
    expected = np.array([[2, -1, 0], [-1, 2, -1], [0, -2, 2]])
    assert (cartan_matrix(b3) == expected).all()
    assert (symmetrizer(b3) == np.diag([2, 2, 1])).all()
    assert list(simple_root(b3, 3)) == [0, -1, 2]


def test_symmetrized_cartan_matrix_is_symmetric(b4):
    product = symmetrizer(b4) @ cartan_matrix(b4)
    assert (product == product.T).all()


def test_r_values(b3):
    assert [b3.r(i) for i in b3.nodes] == [2, 2, 1]
    with pytest.raises(DomainError):
        b3.r(4)


def test_membership_in_x_and_w(b3):
    assert in_X(b3, (3, 1))
    assert not in_X(b3, (3, 2))
    assert in_X(b3, (1, 0))
    assert not in_X(b3, (1, 1))
    assert in_W(b3, (3, 2))
    assert in_W(b3, (1, 2))
    assert not in_W(b3, (1, 1))


def test_x_class_shift(b3):
    assert x_class_shift(b3, (3, 1)) == 0
    assert x_class_shift(b3, (3, 2)) == 1
    assert x_class_shift(b3, (2, 5)) == 1


def test_iota_columns(b3):
    assert iota(b3, (3, 7)) == PlanePoint(5, 7)
    assert iota(b3, (1, 0)) == PlanePoint(8, 0)
    assert iota(b3, (1, 2)) == PlanePoint(2, 2)
    assert iota(b3, (1, 4)) == PlanePoint(8, 4)


def test_iota_rejects_points_outside_x(b3):
    with pytest.raises(DomainError):
        iota(b3, (1, 1))


def test_iota_inverse_rejects_border_columns(b3):
    with pytest.raises(DomainError):
        iota_inverse(b3, PlanePoint(0, 4))
    with pytest.raises(DomainError):
        iota_inverse(b3, PlanePoint(5, 7))


@pytest.mark.property_based
@given(n=st.integers(min_value=2, max_value=6), i=st.integers(min_value=1, max_value=5),
       level=st.integers(min_value=-40, max_value=40))
def test_iota_inverse_undoes_iota_off_the_spin_node(n, i, level):
    algebra = AlgebraType(n)
    i = min(i, n - 1)
    k = 2 * (level // 2)
    assert iota_inverse(algebra, iota(algebra, (i, k))) == SpectralPoint(i, k)
