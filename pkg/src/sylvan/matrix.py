"""Finite complex matrices carrying integer index offsets.

A :class:`CMatrix` is a finite section ``(a(i, j))`` of an operator indexed
by the integers. Row ``r`` of the stored array has logical index
``row_offset + r`` and likewise for columns, which is what the weighted
algebra norms need in order to evaluate ``|i - j|``.
"""
import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonSquare

__all__ = [
    "CMatrix",
    "as_cmatrix",
    "mat_apply",
    "normality_residual",
    "normality_tolerance",
    "is_normal",
]


@dataclass(frozen=True, eq=False)
class CMatrix:
    """Immutable dense complex matrix with logical index offsets.

    Parameters
    ----------
    data : array_like
        2-D array of finite complex values.
    row_offset, col_offset : int
        Logical index of the first row and column.
    """

    data: np.ndarray
    row_offset: int = 0
    col_offset: int = 0

    def __post_init__(self):
        arr = np.array(self.data, dtype=np.complex128, ndmin=2, copy=True)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("a CMatrix needs at least one row and one column")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "row_offset", int(self.row_offset))
        object.__setattr__(self, "col_offset", int(self.col_offset))

    @classmethod
    def identity(cls, n, offset=0):
        return cls(np.eye(n), offset, offset)

    @classmethod
    def zeros(cls, nrows, ncols=None, row_offset=0, col_offset=0):
        ncols = nrows if ncols is None else ncols
        return cls(np.zeros((nrows, ncols)), row_offset, col_offset)

    @property
    def nrows(self):
        return self.data.shape[0]

    @property
    def ncols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def is_square(self):
        return self.nrows == self.ncols

    @property
    def is_section(self):
        """True for a square block with matching row/column index windows."""
        return self.is_square and self.row_offset == self.col_offset

    @property
    def H(self):
        return mat_apply(self, None, "adjoint")

    def fro(self):
        return float(np.linalg.norm(self.data, "fro"))

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def __add__(self, other):
        return mat_apply(self, other, "add")

    def __sub__(self, other):
        return mat_apply(self, other, "sub")

    def __matmul__(self, other):
        return mat_apply(self, other, "mul")

    def __mul__(self, scalar):
        return mat_apply(self, scalar, "scale")

    __rmul__ = __mul__

    def __neg__(self):
        return mat_apply(self, -1, "scale")

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return (self.row_offset == other.row_offset
                and self.col_offset == other.col_offset
                and np.array_equal(self.data, other.data))

    __hash__ = None

    def __repr__(self):
        return (f"CMatrix(shape={self.shape}, row_offset={self.row_offset}, "
                f"col_offset={self.col_offset})")

    # serialization -------------------------------------------------------

    def to_dict(self):
        flat = self.data.ravel()
        return {
            "nrows": self.nrows,
            "ncols": self.ncols,
            "row_offset": self.row_offset,
            "col_offset": self.col_offset,
            "entries": [[float(z.real), float(z.imag)] for z in flat],
        }

    @classmethod
    def from_dict(cls, obj):
        try:
            nrows, ncols = int(obj["nrows"]), int(obj["ncols"])
            entries = np.asarray(obj["entries"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed matrix object: {exc}") from exc
        if entries.shape != (nrows * ncols, 2):
            raise ValueError(
                f"expected {nrows * ncols} [re, im] pairs, got array of shape {entries.shape}")
        data = (entries[:, 0] + 1j * entries[:, 1]).reshape(nrows, ncols)
        return cls(data, int(obj.get("row_offset", 0)), int(obj.get("col_offset", 0)))

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def as_cmatrix(A):
    """Return ``A`` as a :class:`CMatrix`, wrapping plain arrays with offset 0."""
    if isinstance(A, CMatrix):
        return A
    return CMatrix(A)


def mat_apply(A, B, op):
    """Apply one of ``add``, ``sub``, ``mul``, ``adjoint``, ``scale``.

    ``B`` is ignored for ``adjoint`` and is a scalar for ``scale``.
    """
    A = as_cmatrix(A)
    if op == "adjoint":
        return CMatrix(A.data.conj().T, A.col_offset, A.row_offset)
    if op == "scale":
        return CMatrix(complex(B) * A.data, A.row_offset, A.col_offset)
    B = as_cmatrix(B)
    if op in ("add", "sub"):
        if A.shape != B.shape:
            raise DimensionMismatch(f"cannot {op} shapes {A.shape} and {B.shape}")
        if (A.row_offset, A.col_offset) != (B.row_offset, B.col_offset):
            raise DimensionMismatch(f"cannot {op} matrices with different index offsets")
        data = A.data + B.data if op == "add" else A.data - B.data
        return CMatrix(data, A.row_offset, A.col_offset)
    if op == "mul":
        if A.ncols != B.nrows:
            raise DimensionMismatch(f"cannot multiply shapes {A.shape} and {B.shape}")
        if A.col_offset != B.row_offset:
            raise DimensionMismatch("inner index windows differ")
        return CMatrix(A.data @ B.data, A.row_offset, B.col_offset)
    raise ValueError(f"unknown operation {op!r}")


def normality_residual(A):
    """Frobenius norm of the commutator ``A* A - A A*``."""
    a = np.asarray(as_cmatrix(A).data)
    if a.shape[0] != a.shape[1]:
        raise NonSquare(f"normality needs a square matrix, got {a.shape}")
    ah = a.conj().T
    return float(np.linalg.norm(ah @ a - a @ ah, "fro"))


def normality_tolerance(A):
    fro = np.linalg.norm(as_cmatrix(A).data, "fro")
    return 1e-10 * (1.0 + fro ** 2)


def is_normal(A):
    return normality_residual(A) <= normality_tolerance(A)
