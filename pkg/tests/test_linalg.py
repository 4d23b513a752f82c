import pytest
from hypothesis import given, strategies as st

from formcones.errors import DegenerateRay
from formcones.linalg import (
    dot,
    kernel_basis,
    negate,
    primitive,
    rank,
    reduce_mod_rowspace,
    row_space_basis,
)

small_ints = st.integers(min_value=-9, max_value=9)


def vectors(width):
    return st.tuples(*[small_ints] * width)


def test_dot():
    assert dot((1, 2, 3), (4, 5, 6)) == 32
    assert dot((), ()) == 0
    assert dot((-1, 1), (1, 1)) == 0


def test_primitive_divides_out_gcd():
    assert primitive((2, 4, 6)) == (1, 2, 3)
    assert primitive((-3, 6)) == (-1, 2)
    assert primitive((5,)) == (1,)
    assert primitive((0, 7, 0)) == (0, 1, 0)


def test_primitive_rejects_zero():
    with pytest.raises(DegenerateRay):
        primitive((0, 0, 0))


def test_negate():
    assert negate((1, -2, 0)) == (-1, 2, 0)


def test_rank_oracles():
    assert rank([]) == 0
    assert rank([(0, 0)]) == 0
    assert rank([(1, 0), (0, 1)]) == 2
    assert rank([(1, 2), (2, 4)]) == 1
    assert rank([(1, 2, 3), (4, 5, 6), (7, 8, 9)]) == 2


def test_kernel_basis_oracle():
    k = kernel_basis([(1, 1, 1)])
    assert len(k) == 2
    for v in k:
        assert dot((1, 1, 1), v) == 0
    assert kernel_basis([(1, 0), (0, 1)]) == ()
    assert kernel_basis([], width=2) == ((0, 1), (1, 0))


def test_kernel_basis_needs_width_for_empty_input():
    with pytest.raises(ValueError):
        kernel_basis([])


def test_row_space_basis_canonical():
    b = row_space_basis([(2, 4), (1, 2), (3, 6)])
    assert b == ((1, 2),)
    again = row_space_basis(b, width=2)
    assert again == b


def test_reduce_mod_rowspace():
    basis = row_space_basis([(1, 0, 0), (0, 1, 0)])
    assert reduce_mod_rowspace((3, -2, 0), basis) is None
    reduced = reduce_mod_rowspace((3, -2, 5), basis)
    assert reduced is not None
    assert reduced[2] != 0


@given(st.lists(vectors(4), min_size=0, max_size=6))
def test_kernel_is_orthogonal_and_rank_complements(rows):
    k = kernel_basis(rows, width=4)
    for v in k:
        for r in rows:
            assert dot(r, v) == 0
    assert rank(rows) + len(k) == 4


@given(st.lists(vectors(3), min_size=1, max_size=5))
def test_row_space_basis_preserves_span(rows):
    basis = row_space_basis(rows, width=3)
    assert rank(basis) == len(basis) == rank(rows)
    for r in rows:
        assert reduce_mod_rowspace(r, basis) is None


@given(vectors(3))
def test_primitive_is_idempotent_on_nonzero(v):
    if not any(v):
        with pytest.raises(DegenerateRay):
            primitive(v)
    else:
        p = primitive(v)
        assert primitive(p) == p
