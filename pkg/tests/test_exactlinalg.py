import pytest
from hypothesis import given, settings, strategies as st

from oracles import row_space
from leibnizkit.errors import AmbientMismatch, DimensionMismatch, ParseError
from leibnizkit.exactlinalg import (
    Matrix,
    Subspace,
    nullspace,
    rref,
    span,
    subspace_intersect,
    subspace_intersect_by_nullspace,
    subspace_sum,
    zero_subspace,
)
from leibnizkit.scalars import GF, QQ, function_field

F2t = function_field(2, "t")


def M(field, rows):
    return Matrix.from_rows(field, rows)


def test_rref_example():
    m, piv = rref(M(QQ, [[2, 4, 6], [1, 2, 4]]))
    assert piv == [0, 2]
    assert m.to_strings() == [["1", "2", "0"], ["0", "0", "1"]]


def test_nullspace_example():
    ns = nullspace(M(GF(3), [[1, 1, 1]]))
    assert ns.dim == 2
    for v in ns.basis:
        assert sum(v, GF(3).zero) == GF(3).zero


def test_matrix_product_and_identity():
    a = M(QQ, [[1, 2], [3, 4]])
    i = Matrix.identity(QQ, 2)
    assert a @ i == a and i @ a == a
    assert (a @ a).to_strings() == [["7", "10"], ["15", "22"]]
    assert (a - a).is_zero()
    with pytest.raises(DimensionMismatch):
        a @ M(QQ, [[1, 2, 3]])


def test_subspace_parse_and_encode():
    s = Subspace.parse(GF(3), 3, "1,0,2;0,1,1")
    assert s.encode() == "1,0,2;0,1,1"
    assert Subspace.parse(GF(3), 3, "2,0,1").encode() == "1,0,2"
    assert Subspace.parse(GF(3), 3, "").dim == 0
    with pytest.raises(ParseError):
        Subspace.parse(GF(3), 3, "1,0")
    with pytest.raises(ParseError):
        Subspace.parse(GF(3), 3, "1,x,0")


def test_subspace_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        subspace_sum(zero_subspace(QQ, 2), zero_subspace(QQ, 3))


def test_function_field_span():
    t = F2t.gen()
    s = span(F2t, 2, [(t, t * t)])
    assert s.encode() == "1,t"
    assert (F2t.one, t) in s


def _to_set(s, q, n):
    return row_space([tuple(int(str(x)) for x in row) for row in s.basis], q, n)


vec = lambda q, n: st.tuples(*[st.integers(0, q - 1)] * n)
gens = lambda q, n: st.lists(vec(q, n), max_size=3)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 5]), gens(5, 4), gens(5, 4))
def test_sum_and_intersection_match_vector_sets(q, u_rows, w_rows):
    n = 4
    u_rows = [tuple(x % q for x in r) for r in u_rows]
    w_rows = [tuple(x % q for x in r) for r in w_rows]
    F = GF(q)
    u, w = span(F, n, u_rows), span(F, n, w_rows)
    U, W = row_space(u_rows, q, n), row_space(w_rows, q, n)
    assert _to_set(u, q, n) == U
    assert _to_set(subspace_intersect(u, w), q, n) == U & W
    assert _to_set(subspace_sum(u, w), q, n) == row_space(u_rows + w_rows, q, n)
    assert subspace_intersect(u, w) == subspace_intersect_by_nullspace(u, w)
    assert u.dim + w.dim == subspace_sum(u, w).dim + subspace_intersect(u, w).dim


@settings(max_examples=100)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity_over_q(rows):
    m = M(QQ, rows)
    r, piv = rref(m)
    ns = nullspace(m)
    assert len(piv) + ns.dim == 4
    for v in ns.basis:
        assert all(x == QQ.zero for x in m.apply(v))
    # rref is idempotent and preserves the row space
    assert rref(r)[0] == r
    assert span(QQ, 4, rows) == span(QQ, 4, r.rows)
