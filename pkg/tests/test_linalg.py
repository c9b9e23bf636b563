import random

import pytest

from leibnizalg.errors import DomainError, InputError
from leibnizalg.linalg import (
    Matrix,
    SparseSolver,
    Subspace,
    is_nilpotent_matrix,
    jordan_block_sizes,
    kernel,
    rank,
    rref,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
    vec_is_zero,
)
from leibnizalg.scalars import ONE, ZERO, as_scalar, rational


def test_rref_dependent_rows():
    m = Matrix([[1, 2], [2, 4]])
    reduced, rk, pivots = rref(m)
    assert rk == 1 and pivots == (0,)
    assert reduced.row(0) == (ONE, as_scalar(2))


def test_rref_identity_and_zero():
    assert rref(Matrix.identity(3))[0] == Matrix.identity(3)
    assert rref(Matrix.identity(3))[1] == 3
    assert rref(Matrix.zeros(2))[1] == 0


def test_rref_idempotent_on_random_matrices():
    rng = random.Random(3)
    for _ in range(40):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = Matrix([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
        reduced, _, _ = rref(m)
        again, _, _ = rref(reduced)
        assert again == reduced


def test_kernel_examples():
    assert kernel(Matrix.zeros(2)).dim == 2
    assert kernel(Matrix.identity(4)).dim == 0
    k = kernel(Matrix([[1, 1]]))
    assert k.dim == 1
    assert k.contains_vector([1, -1])


def test_kernel_vectors_verified_back():
    rng = random.Random(5)
    for _ in range(30):
        m = Matrix([[rng.randint(-3, 3) for _ in range(5)] for _ in range(3)])
        for v in kernel(m).basis_rows():
            assert vec_is_zero(m.apply(v))


def test_subspace_lattice():
    a = Subspace.from_vectors(3, [[1, 0, 0]])
    b = Subspace.from_vectors(3, [[0, 1, 0]])
    assert subspace_sum(a, b).dim == 2
    v = Subspace.from_vectors(3, [[1, 2, 0], [0, 0, 1]])
    assert subspace_intersect(v, v) == v
    # forced by one equation: span{e1+e2} meets span{e1} trivially
    c = Subspace.from_vectors(2, [[1, 1]])
    d = Subspace.from_vectors(2, [[1, 0]])
    assert subspace_intersect(c, d).dim == 0


def test_subspace_dimension_formula_random():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 6)
        a = Subspace.from_vectors(n, [[rng.randint(-2, 2) for _ in range(n)]
                                      for _ in range(rng.randint(0, n))])
        b = Subspace.from_vectors(n, [[rng.randint(-2, 2) for _ in range(n)]
                                      for _ in range(rng.randint(0, n))])
        assert a.dim + b.dim == subspace_sum(a, b).dim + subspace_intersect(a, b).dim
        assert subspace_contains(subspace_sum(a, b), a)
        assert subspace_contains(a, subspace_intersect(a, b))


def test_subspace_ambient_mismatch():
    a = Subspace.from_vectors(3, [[1, 0, 0]])
    b = Subspace.from_vectors(2, [[1, 0]])
    with pytest.raises(InputError):
        subspace_sum(a, b)


def test_nilpotency():
    shift = Matrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert is_nilpotent_matrix(shift)
    assert not is_nilpotent_matrix(Matrix.identity(3))
    with pytest.raises(InputError):
        is_nilpotent_matrix(Matrix.zeros(2, 3))


def _jordan_block(k):
    return [[ONE if j == i + 1 else ZERO for j in range(k)] for i in range(k)]


def test_jordan_block_sizes_examples():
    j3 = _jordan_block(3)
    j2 = _jordan_block(2)
    direct_sum = Matrix([r + [ZERO] * 2 for r in j3] + [[ZERO] * 3 + r for r in j2])
    assert jordan_block_sizes(direct_sum) == (3, 2)
    assert jordan_block_sizes(Matrix.zeros(5)) == (1, 1, 1, 1, 1)
    with pytest.raises(DomainError):
        jordan_block_sizes(Matrix.identity(2))


def test_jordan_consistent_with_rank_sequence_random():
    # random strictly upper-triangular matrices up to size 12
    rng = random.Random(17)
    for _ in range(100):
        n = rng.randint(2, 12)
        m = Matrix([[rng.randint(-2, 2) if j > i else 0 for j in range(n)]
                    for i in range(n)])
        sizes = jordan_block_sizes(m)
        assert sum(sizes) == n
        assert list(sizes) == sorted(sizes, reverse=True)
        # rank(m^k) must equal the partition tail sums
        p = Matrix.identity(n)
        for k in range(1, max(sizes) + 1):
            p = p * m
            assert rank(p) == sum(s - k for s in sizes if s > k)


def test_matrix_inverse_and_power():
    m = Matrix([[1, 1], [0, 1]])
    assert m * m.inverse() == Matrix.identity(2)
    assert m ** 3 == Matrix([[1, 3], [0, 1]])
    with pytest.raises(InputError):
        Matrix([[1, 1], [2, 2]]).inverse()


def test_sparse_solver_matches_dense_kernel():
    rng = random.Random(23)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 8), rng.randint(1, 8)
        rows = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(ncols)]
                for _ in range(nrows)]
        m = Matrix(rows)
        solver = SparseSolver(ncols)
        for row in rows:
            solver.add_row({c: as_scalar(v) for c, v in enumerate(row) if v})
        assert solver.rank == rank(m)
        dense = kernel(m)
        sparse_vecs = []
        for kv in solver.kernel_basis():
            flat = [ZERO] * ncols
            for c, v in kv.items():
                flat[c] = v
            sparse_vecs.append(flat)
        assert Subspace.from_vectors(ncols, sparse_vecs) == dense
