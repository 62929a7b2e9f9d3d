import numpy as np
import pytest

from vcinv import kernels
from vcinv.gf import field_make
from vcinv.groups import generators, group_id
from vcinv.linalg import (
    InconsistentSystemError,
    MatrixFq,
    fixed_space,
    nullspace,
    rank,
    rref,
    solve,
)
from vcinv.poly import monomials_of_degree
from vcinv.ringcalc import action_matrix

F2 = field_make(2)
F3 = field_make(3)
F4 = field_make(2, 2)
F9 = field_make(3, 2)

SPECS = [F2, F3, F4, F9]


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    prev = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(prev)


def random_matrix(spec, rng, shape):
    return MatrixFq(spec, rng.integers(0, spec.q, size=shape))


def test_rank_identity(backend):
    assert rank(MatrixFq.identity(F2, 3)) == 3


def test_nullspace_of_zero_matrix(backend):
    ns = nullspace(MatrixFq.zeros(F2, 2, 5))
    assert ns.shape == (5, 5)


def test_solve_example(backend):
    sol = solve(MatrixFq.from_elems(F3, [[1, 1], [0, 1]]), (1, 1))
    assert tuple(sol) == (0, 1)


def test_solve_inconsistent(backend):
    with pytest.raises(InconsistentSystemError):
        solve(MatrixFq.from_elems(F2, [[1, 0], [1, 0]]), (1, 0))


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(MatrixFq.from_elems(F2, [[1, 0]]), (1, 0, 1))


@pytest.mark.parametrize("spec", SPECS)
def test_rref_idempotent(backend, spec):
    rng = np.random.default_rng(42)
    for _ in range(5):
        M = random_matrix(spec, rng, (7, 5))
        R, piv = rref(M)
        R2, piv2 = rref(R)
        assert R == R2 and piv == piv2


@pytest.mark.parametrize("spec", SPECS)
def test_nullspace_annihilated(backend, spec):
    rng = np.random.default_rng(7)
    for _ in range(5):
        M = random_matrix(spec, rng, (6, 9))
        ns = nullspace(M)
        assert rank(M) + ns.shape[1] == 9
        assert not M.mul(ns).data.any()


@pytest.mark.parametrize("spec", SPECS)
def test_solve_round_trip(backend, spec):
    rng = np.random.default_rng(11)
    for _ in range(5):
        M = random_matrix(spec, rng, (6, 4))
        x = rng.integers(0, spec.q, size=4)
        b = M.mul(MatrixFq(spec, x[:, None])).data[:, 0]
        sol = solve(M, [int(v) for v in b])
        back = M.mul(MatrixFq(spec, sol[:, None])).data[:, 0]
        assert np.array_equal(back, b)


def test_backends_agree():
    rng = np.random.default_rng(3)
    for spec in SPECS:
        M = random_matrix(spec, rng, (12, 9))
        results = {}
        for name in kernels.available_backends():
            prev = kernels.set_backend(name)
            results[name] = (rank(M), rref(M)[0].data.tolist(), rref(M)[1])
            kernels.set_backend(prev)
        vals = list(results.values())
        assert all(v == vals[0] for v in vals)


def test_fixed_space_of_identity(backend):
    ops = [MatrixFq.identity(F3, 4)]
    assert fixed_space(ops).shape[1] == 4


def test_fixed_space_of_swap(backend):
    swap = MatrixFq.from_elems(F2, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    fs = fixed_space([swap])
    assert fs.shape[1] == 2
    assert not (swap.mul(fs).data != fs.data).any()


def test_fixed_space_of_degree2_action(backend):
    # the joint fixed space of the group generators acting on quadratics
    gid = group_id("sl2", F2)
    ops = [MatrixFq(F2, action_matrix(g, 2).astype(np.int64)) for g in generators(gid)]
    fs = fixed_space(ops)
    assert fs.shape == (len(monomials_of_degree(2)), 3)
    for op in ops:
        assert np.array_equal(op.mul(fs).data, fs.data)


def test_fixed_space_dimension_mismatch():
    with pytest.raises(ValueError):
        fixed_space([MatrixFq.identity(F2, 2), MatrixFq.identity(F2, 3)])


def test_matrix_validation():
    with pytest.raises(ValueError):
        MatrixFq(F2, [[0, 2], [1, 0]])
    with pytest.raises(ValueError):
        MatrixFq(F2, [1, 0])


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        kernels.set_backend("cython")
    assert set(kernels.available_backends()) <= {"numba", "numpy"}
    assert kernels.get_backend() in kernels.available_backends()
