"""Dense exact linear algebra over F_q on integer-coded matrices.

A ``MatrixFq`` wraps a numpy array of element codes together with its field
spec.  Elimination work is delegated to the selected kernel backend (see
``vcinv.kernels``); everything here is pure and never mutates its inputs.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .gf import FieldElem, FieldMismatchError, FieldSpec


class InconsistentSystemError(ValueError):
    """The linear system has no solution."""


class MatrixFq:
    """A rows x cols matrix of field-element codes over one ``FieldSpec``."""

    __slots__ = ("spec", "data")

    def __init__(self, spec: FieldSpec, data):
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= spec.q):
            raise ValueError("entries must be codes in [0, q)")
        self.spec = spec
        self.data = arr

    @classmethod
    def from_elems(cls, spec: FieldSpec, rows) -> "MatrixFq":
        codes = []
        for row in rows:
            out = []
            for v in row:
                if isinstance(v, FieldElem):
                    if v.spec != spec:
                        raise FieldMismatchError("entry from a different field spec")
                    out.append(v.code)
                else:
                    out.append(spec.element(int(v)).code)
            codes.append(out)
        return cls(spec, codes)

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MatrixFq":
        return cls(spec, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "MatrixFq":
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __eq__(self, other):
        return (
            isinstance(other, MatrixFq)
            and self.spec == other.spec
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self):
        return f"MatrixFq({self.spec.p}^{self.spec.r}, {self.data.tolist()})"

    def mul(self, other: "MatrixFq") -> "MatrixFq":
        if other.spec != self.spec:
            raise FieldMismatchError("matrices over different field specs")
        if self.shape[1] != other.shape[0]:
            raise ValueError("dimension mismatch in matrix product")
        spec = self.spec
        if spec.r == 1:
            return MatrixFq(spec, (self.data @ other.data) % spec.p)
        out = np.zeros((self.shape[0], other.shape[1]), dtype=np.int64)
        for i in range(self.shape[0]):
            for j in range(other.shape[1]):
                acc = 0
                for k in range(self.shape[1]):
                    acc = spec.add_codes(
                        acc, spec.mul_codes(int(self.data[i, k]), int(other.data[k, j]))
                    )
                out[i, j] = acc
        return MatrixFq(spec, out)


def rref(M: MatrixFq) -> tuple[MatrixFq, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    R, pivots = kernels.rref(M.data, M.spec)
    return MatrixFq(M.spec, R), pivots


def rank(M: MatrixFq) -> int:
    return kernels.rank(M.data, M.spec)


def nullspace(M: MatrixFq) -> MatrixFq:
    """Matrix whose columns are a basis of the right kernel of M."""
    spec = M.spec
    n = M.shape[1]
    R, pivots = kernels.rref(M.data, spec)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = spec.neg_code(int(R[i, fc]))
    return MatrixFq(spec, basis)


def solve(M: MatrixFq, b) -> np.ndarray:
    """One solution of M x = b (codes); raises ``InconsistentSystemError``."""
    spec = M.spec
    m, n = M.shape
    bcol = np.asarray(
        [v.code if isinstance(v, FieldElem) else int(v) for v in b], dtype=np.int64
    )
    if bcol.shape != (m,):
        raise ValueError("right-hand side length mismatch")
    if bcol.size and (bcol.min() < 0 or bcol.max() >= spec.q):
        raise ValueError("right-hand side entries must be codes in [0, q)")
    aug = np.concatenate([M.data, bcol[:, None]], axis=1)
    R, pivots = kernels.rref(aug, spec)
    if pivots and pivots[-1] == n:
        raise InconsistentSystemError("no solution")
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n]
    return x


def fixed_space(operators) -> MatrixFq:
    """Basis (columns) of the joint fixed space of square operators M_i x = x."""
    ops = list(operators)
    if not ops:
        raise ValueError("need at least one operator")
    spec = ops[0].spec
    n = ops[0].shape[0]
    blocks = []
    for op in ops:
        if op.spec != spec:
            raise FieldMismatchError("operators over different field specs")
        if op.shape != (n, n):
            raise ValueError("operators must be square of equal size")
        block = op.data.copy()
        for i in range(n):
            block[i, i] = spec.sub_codes(int(block[i, i]), 1)
        blocks.append(block)
    return nullspace(MatrixFq(spec, np.concatenate(blocks, axis=0)))
