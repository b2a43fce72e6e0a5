from fractions import Fraction

from hypothesis import given, settings, strategies as st

from quivalg import linalg


small_matrices = st.integers(0, 4).flatmap(
    lambda r: st.integers(0, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_rref_known():
    r, pivots = linalg.rref([[2, 4], [1, 2]])
    assert pivots == [0]
    assert r[0] == [1, 2]
    assert r[1] == [0, 0]


def test_rank_and_nullspace_known():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert linalg.rank(m) == 2
    ns = linalg.nullspace(m, 3)
    assert len(ns) == 1
    v = ns[0]
    for row in m:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_empty_shapes():
    assert linalg.rank([]) == 0
    assert linalg.nullspace([], 3) == [
        [1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert linalg.mat_mul([], [[1]], bcols=1) == []
    assert linalg.mat_mul([[], []], [], bcols=3) == [[0, 0, 0], [0, 0, 0]]


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rank_nullity(m):
    cols = len(m[0]) if m else 0
    assert linalg.rank(m) + len(linalg.nullspace(m, cols)) == cols


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_nullspace_vectors_lie_in_kernel(m):
    cols = len(m[0]) if m else 0
    for v in linalg.nullspace(m, cols):
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_rref_idempotent(m):
    cols = len(m[0]) if m else 0
    r1, p1 = linalg.rref(m, cols)
    r2, p2 = linalg.rref(r1, cols)
    assert r1 == r2 and p1 == p2


@settings(max_examples=60, deadline=None)
@given(small_matrices, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_row_solver_reconstructs(m, coeffs):
    if not m:
        return
    cols = len(m[0])
    coeffs = coeffs[:len(m)] + [0] * max(0, len(m) - 4)
    vec = [sum(c * row[j] for c, row in zip(coeffs, m)) for j in range(cols)]
    solver = linalg.RowSolver(m, cols)
    got = solver.coords(vec)
    assert got is not None
    rebuilt = [sum(c * row[j] for c, row in zip(got, m)) for j in range(cols)]
    assert rebuilt == [Fraction(x) for x in vec]


def test_row_solver_rejects_outside_vector():
    solver = linalg.RowSolver([[1, 0]], 2)
    assert solver.coords([0, 1]) is None
    assert solver.coords([3, 0]) == [Fraction(3)]


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_quotient_maps_properties(rows):
    cols = len(rows[0]) if rows else 3
    dim, proj, sect = linalg.quotient_maps(rows, cols)
    assert dim == cols - linalg.rank(rows)
    # the section is a right inverse of the projection
    assert linalg.mat_mul(sect, proj, bcols=dim) == linalg.identity(dim) or dim == 0
    # the row span projects to zero
    for row in rows:
        image = linalg.mat_mul([row], proj, bcols=dim)[0]
        assert all(x == 0 for x in image)
