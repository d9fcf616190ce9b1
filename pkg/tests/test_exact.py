# Copyright (c) 2026 Cospectra developers.
#
# Licensed under the BSD 3-Clause License
# <LICENSE.rst or https://opensource.org/licenses/BSD-3-Clause>.
# This file may not be copied, modified, or distributed except
# according to those terms.

import itertools
import math

import numpy as np
import pytest

from hypothesis import given, strategies as st

from cospectra.exact import dot, exact_rank, ExactMatrix, ExactScalar, INV_SQRT2, ONE, ZERO


scalars = st.builds(ExactScalar,
                    st.integers(min_value=-50, max_value=50),
                    st.integers(min_value=-50, max_value=50),
                    st.integers(min_value=0, max_value=6))

nonzero_scalars = scalars.filter(bool)

sqrt2 = ExactScalar(0, 1)


@pytest.mark.parametrize('x, triple', [
    (ExactScalar(2, 2, 1), (1, 1, 0)),
    (ExactScalar(4, 0, 2), (1, 0, 0)),
    (ExactScalar(6, 4, 3), (3, 2, 2)),
    (ExactScalar(0, 0, 5), (0, 0, 0)),
    (ExactScalar(1, 0, -2), (4, 0, 0)),
    (ExactScalar(0, 1, 1), (0, 1, 1)),
])
def test_canonical_form(x, triple):
    assert x.as_triple() == triple


def test_integer_interop():
    assert ExactScalar(4, 0, 2) == 1
    assert ExactScalar(3) == 3
    assert hash(ExactScalar(3)) == hash(3)
    assert ONE + 1 == 2
    assert 1 - ONE == ZERO
    assert 3 * INV_SQRT2 == ExactScalar(0, 3, 1)


def test_sqrt2_arithmetic():
    assert INV_SQRT2 * INV_SQRT2 == ExactScalar(1, 0, 1)
    assert sqrt2 * sqrt2 == 2
    assert ONE.div_sqrt2() == INV_SQRT2
    assert INV_SQRT2.div_sqrt2() == ExactScalar(1, 0, 1)
    assert (ONE + sqrt2) * (ONE - sqrt2) == -1
    assert ExactScalar(1, 1).conjugate() == ExactScalar(1, -1)


@pytest.mark.parametrize('x, sign', [
    (ExactScalar(3, -2), 1),
    (ExactScalar(-3, 2), -1),
    (ExactScalar(1, -1), -1),
    (ExactScalar(-1, 1), 1),
    (ExactScalar(0, 0), 0),
    (ExactScalar(0, -1, 3), -1),
])
def test_sign(x, sign):
    assert x.sign() == sign


@given(scalars, scalars)
def test_order_agrees_with_float(x, y):
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


@given(scalars, scalars)
def test_ring_laws(x, y):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) - y == x
    assert float(x * y) == pytest.approx(float(x) * float(y), rel=1e-9, abs=1e-9)


@given(scalars, nonzero_scalars)
def test_exact_div_inverts_multiplication(x, y):
    assert (x * y).exact_div(y) == x


@pytest.mark.parametrize('x, y, expected', [
    (ONE, sqrt2, INV_SQRT2),
    (ONE, ExactScalar(1, 1), ExactScalar(-1, 1)),
    (ExactScalar(1, 1), ExactScalar(1, 1), ONE),
    (ExactScalar(6), ExactScalar(4), ExactScalar(3, 0, 1)),
    (ZERO, ExactScalar(5), ZERO),
])
def test_exact_div(x, y, expected):
    assert x.exact_div(y) == expected


def test_exact_div_errors():
    with pytest.raises(ArithmeticError):
        ONE.exact_div(3)
    with pytest.raises(ArithmeticError):
        ONE.exact_div(ExactScalar(3, 1))
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)


def test_float_and_str():
    assert float(INV_SQRT2) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert float(ExactScalar(3, 0, 2)) == 0.75
    assert str(INV_SQRT2) == '√2/2'
    assert str(ExactScalar(-3)) == '-3'
    assert str(ExactScalar(1, -1, 1)) == '(1-1√2)/2'
    assert repr(ExactScalar(1, 1)) == 'ExactScalar(1, 1, 0)'


def test_dot():
    assert dot([INV_SQRT2, INV_SQRT2], [INV_SQRT2, INV_SQRT2]) == ONE
    assert dot([INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]) == ZERO


def test_matrix_basics():
    m = ExactMatrix([[1, INV_SQRT2], [INV_SQRT2, 0]])
    assert m.n == 2
    assert m[0, 1] == INV_SQRT2
    assert m.trace() == ONE
    assert m.diagonal() == [ONE, ZERO]
    assert m.shift(1) == ExactMatrix([[0, INV_SQRT2], [INV_SQRT2, -1]])
    assert ExactMatrix.identity(2) @ m == m
    assert m + ExactMatrix.zeros(2) == m
    assert (m - m).is_zero()
    assert ExactMatrix.from_triples(m.to_triples()) == m
    assert m.to_triples() == [[[1, 0, 0], [0, 1, 1]], [[0, 1, 1], [0, 0, 0]]]
    assert m.matvec([ONE, ONE]) == [ExactScalar(2, 1, 1), INV_SQRT2]


@pytest.mark.parametrize('rows, error', [
    ([[1, 2], [3, 4]], 'not symmetric'),
    ([[1, 2]], 'not square'),
])
def test_matrix_invalid(rows, error):
    with pytest.raises(ValueError, match=error):
        ExactMatrix(rows)


def test_matrix_dimension_mismatch():
    with pytest.raises(ValueError):
        ExactMatrix.identity(2) + ExactMatrix.identity(3)
    with pytest.raises(ValueError):
        ExactMatrix.identity(2).matvec([ONE])


@pytest.mark.parametrize('rows, rank', [
    (ExactMatrix.identity(3), 3),
    (ExactMatrix.zeros(3), 0),
    ([[ONE, ONE], [ONE, ONE]], 1),
    ([[ONE, sqrt2], [sqrt2, 2 * ONE]], 1),
    ([[ZERO, ONE], [ONE, ZERO]], 2),
    ([[INV_SQRT2, ONE, ZERO], [ONE, sqrt2, ZERO], [ZERO, ZERO, ZERO]], 1),
    ([], 0),
])
def test_exact_rank(rows, rank):
    assert exact_rank(rows) == rank


@given(st.lists(st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4), min_size=4, max_size=4),
       st.permutations(range(4)))
def test_exact_rank_agrees_with_numpy(entries, order):
    rows = [[ExactScalar(x) * (sqrt2 if (i + j) % 2 else ONE) for j, x in enumerate(row)] for i, row in enumerate(entries)]
    a = np.array([[float(x) for x in row] for row in rows])
    expected = np.linalg.matrix_rank(a, tol=1e-9)
    assert exact_rank(rows) == expected
    assert exact_rank(rows, row_order=order) == expected


def test_exact_rank_row_order():
    m = ExactMatrix([[0, 1, 0], [1, 0, INV_SQRT2], [0, INV_SQRT2, 0]])
    ranks = {exact_rank(m, row_order=order) for order in itertools.permutations(range(3))}
    assert ranks == {2}
