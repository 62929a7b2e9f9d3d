"""Backend dispatch for the exact elimination kernels.

Two interchangeable implementations exist: numba-compiled loops (default when
numba imports) and a pure-numpy fallback.  The environment variable
``VCINV_KERNEL`` selects one explicitly ("numba" or "numpy"); see also
``set_backend`` for programmatic switching (used by tests and the benchmark).

GF(2) ranks go through a bit-packed fast path; other prime fields use direct
modular arithmetic; extension fields use per-spec lookup tables.
"""

from __future__ import annotations

import os

import numpy as np

from .gf import FieldSpec
from . import _kernels_numpy

_ENV_FLAG = "VCINV_KERNEL"

_backends = {"numpy": _kernels_numpy}
try:  # pragma: no cover - exercised implicitly
    from . import _kernels_numba

    _backends["numba"] = _kernels_numba
    _DEFAULT = "numba"
except ImportError:  # pragma: no cover
    _DEFAULT = "numpy"

_active = os.environ.get(_ENV_FLAG, _DEFAULT)
if _active not in _backends:
    raise RuntimeError(
        f"{_ENV_FLAG}={_active!r} is not available; choose from {sorted(_backends)}"
    )


def available_backends() -> list[str]:
    return sorted(_backends)


def get_backend() -> str:
    return _active


def set_backend(name: str) -> str:
    """Switch the kernel backend; returns the previously active name."""
    global _active
    if name not in _backends:
        raise ValueError(f"unknown backend {name!r}; available: {sorted(_backends)}")
    prev = _active
    _active = name
    return prev


_table_cache: dict[FieldSpec, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}


def _field_tables(spec: FieldSpec):
    tabs = _table_cache.get(spec)
    if tabs is None:
        spec.build_tables()
        q = spec.q
        mul_t = np.array(spec._mul_table, dtype=np.int64)
        sub_t = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                sub_t[a, b] = spec.sub_codes(a, b)
        inv_t = np.array(spec._inv_table, dtype=np.int64)
        tabs = (mul_t, sub_t, inv_t)
        _table_cache[spec] = tabs
    return tabs


def pack_gf2(M: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix into 64 columns per uint64 word."""
    m, n = M.shape
    words = (n + 63) // 64
    P = np.zeros((m, words), dtype=np.uint64)
    nz = M != 0
    for j in range(n):
        P[:, j >> 6] |= nz[:, j].astype(np.uint64) << np.uint64(j & 63)
    return P


def rank(M: np.ndarray, spec: FieldSpec) -> int:
    """Rank of a code matrix over the field; does not modify the input."""
    impl = _backends[_active]
    if M.size == 0:
        return 0
    if spec.r == 1:
        if spec.p == 2:
            return impl.rank_gf2_packed(pack_gf2(M), M.shape[1])
        return impl.rank_mod_p(M.astype(np.int64), spec.p)
    mul_t, sub_t, inv_t = _field_tables(spec)
    return impl.rank_tables(M.astype(np.int64), mul_t, sub_t, inv_t)


def rref(M: np.ndarray, spec: FieldSpec) -> tuple[np.ndarray, tuple[int, ...]]:
    """Fully reduced row echelon form and pivot columns; input left untouched."""
    impl = _backends[_active]
    R = M.astype(np.int64)
    if R.size == 0:
        return R, ()
    if spec.r == 1:
        pivots = impl.rref_mod_p(R, spec.p)
    else:
        mul_t, sub_t, inv_t = _field_tables(spec)
        pivots = impl.rref_tables(R, mul_t, sub_t, inv_t)
    return R, tuple(int(c) for c in pivots)
