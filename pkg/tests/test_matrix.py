import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from sylvan.errors import DimensionMismatch, NonSquare
from sylvan.generators import circulant
from sylvan.matrix import CMatrix, is_normal, mat_apply, normality_residual

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)
complex_arrays = st.tuples(st.integers(1, 6), st.integers(1, 6)).flatmap(
    lambda shape: st.tuples(arrays(np.float64, shape, elements=finite),
                            arrays(np.float64, shape, elements=finite))
).map(lambda pair: pair[0] + 1j * pair[1])


class TestNormality:
    def test_diagonal(self):
        assert normality_residual(np.diag([1, 2j, -3])) == 0.0

    def test_jordan_block(self):
        # A*A - AA* = diag(-1, 1)
        assert normality_residual([[0, 1], [0, 0]]) == pytest.approx(math.sqrt(2), abs=1e-15)
        assert not is_normal([[0, 1], [0, 0]])

    def test_circulant(self, rng):
        c = circulant(rng.standard_normal(9) + 1j * rng.standard_normal(9))
        assert normality_residual(c) <= 1e-13 * max(1, np.linalg.norm(c) ** 2)
        assert is_normal(c)

    def test_hermitian_scaled(self, rng):
        m = rng.standard_normal((20, 20)) + 1j * rng.standard_normal((20, 20))
        h = m + m.conj().T
        assert normality_residual(h) <= 1e-12 * np.linalg.norm(h) ** 2

    def test_non_square(self):
        with pytest.raises(NonSquare):
            normality_residual(np.ones((2, 3)))


class TestArithmetic:
    def test_identity_multiply(self, rng):
        A = CMatrix(rng.standard_normal((4, 4)))
        assert mat_apply(CMatrix.identity(4), A, "mul") == A

    def test_adjoint_involution(self, rng):
        A = CMatrix(rng.standard_normal((3, 5)) + 1j * rng.standard_normal((3, 5)), 2, -1)
        assert mat_apply(mat_apply(A, None, "adjoint"), None, "adjoint") == A
        assert A.H.row_offset == -1 and A.H.col_offset == 2

    def test_sub_self(self, rng):
        A = CMatrix(rng.standard_normal((3, 3)))
        assert np.all((A - A).data == 0)

    def test_scale_and_add(self):
        A = CMatrix([[1, 2], [3, 4]])
        assert (2 * A + A).data.tolist() == (A * 3).data.tolist()

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            CMatrix(np.ones((2, 2))) + CMatrix(np.ones((3, 3)))
        with pytest.raises(DimensionMismatch):
            CMatrix(np.ones((2, 3))) @ CMatrix(np.ones((2, 3)))

    def test_offset_mismatch(self):
        with pytest.raises(DimensionMismatch):
            CMatrix(np.ones((2, 2)), 0, 0) + CMatrix(np.ones((2, 2)), 1, 1)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            CMatrix([[np.nan]])
        with pytest.raises(ValueError):
            CMatrix([[1, np.inf]])

    def test_immutable(self):
        A = CMatrix([[1.0]])
        with pytest.raises(ValueError):
            A.data[0, 0] = 2


@settings(max_examples=60, deadline=None)
@given(complex_arrays, st.integers(-5, 5), st.integers(-5, 5))
def test_json_round_trip(arr, r0, c0):
    A = CMatrix(arr, r0, c0)
    assert CMatrix.from_json(A.to_json()) == A


@settings(max_examples=60, deadline=None)
@given(complex_arrays)
def test_adjoint_is_frobenius_isometry(arr):
    A = CMatrix(arr)
    assert A.H.fro() == pytest.approx(A.fro(), rel=1e-15)


def test_json_layout():
    A = CMatrix([[1 + 2j, 3], [4, -1j]], 1, 1)
    obj = A.to_dict()
    assert obj == {"nrows": 2, "ncols": 2, "row_offset": 1, "col_offset": 1,
                   "entries": [[1.0, 2.0], [3.0, 0.0], [4.0, 0.0], [0.0, -1.0]]}


def test_from_dict_rejects_wrong_count():
    with pytest.raises(ValueError):
        CMatrix.from_dict({"nrows": 2, "ncols": 2, "entries": [[1, 0]]})
