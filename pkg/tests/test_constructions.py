"""Example families and closure operations."""

import random

import pytest

from quasitoric import (
    Omniorientation,
    connected_sum_4d,
    cp2_sum,
    cpn,
    decide_positive,
    euler_characteristic,
    f_vector,
    hirzebruch,
    polygon,
    product,
    vertex_cut,
)
from quasitoric.errors import NotDimension2Error
from support import random_valid_pair, random_vertex


def test_cpn_small():
    one = cpn(1)
    assert one.polytope.vertices == ((0,), (1,))
    assert one.matrix.entries == ((1, -1),)
    two = cpn(2)
    assert two.polytope.vertices == ((0, 1), (0, 2), (1, 2))
    assert two.matrix.entries == ((1, 0, -1), (0, 1, -1))


def test_cpn_positive():
    for n in range(1, 5):
        assert decide_positive(cpn(n)).satisfiable


def test_cpn_rejects_zero():
    with pytest.raises(ValueError):
        cpn(0)


def test_polygon():
    assert polygon(3).vertices == cpn(2).polytope.vertices
    for m in (3, 5, 8):
        assert f_vector(polygon(m)) == (m, m)
    with pytest.raises(ValueError):
        polygon(2)


def test_hirzebruch_valid_all_a():
    for a in range(-3, 4):
        pair = hirzebruch(a)
        assert set(pair.vertex_dets) <= {1, -1}
        assert decide_positive(pair).satisfiable


def test_product_square():
    pair = product(cpn(1), cpn(1))
    assert pair.polytope.vertices == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert pair.matrix.entries == ((1, -1, 0, 0), (0, 0, 1, -1))


def test_product_euler_multiplies():
    rng = random.Random(51)
    for _ in range(10):
        p = random_valid_pair(rng, max_m=8)
        q = cpn(rng.randint(1, 2))
        assert euler_characteristic(product(p, q)) == euler_characteristic(
            p
        ) * euler_characteristic(q)


def test_product_dets_multiply():
    rng = random.Random(52)
    for _ in range(10):
        p = random_valid_pair(rng, max_m=8)
        q = cpn(rng.randint(1, 2))
        pq = product(p, q)
        m1 = p.polytope.num_facets
        for vi, v in enumerate(p.polytope.vertices):
            for wi, w in enumerate(q.polytope.vertices):
                combined = v + tuple(j + m1 for j in w)
                ci = pq.polytope.vertex_index(combined)
                assert pq.vertex_dets[ci] == p.vertex_dets[vi] * q.vertex_dets[wi]


def test_product_orientation_single_global_constant():
    rng = random.Random(53)
    for _ in range(12):
        p = random_valid_pair(rng, max_m=8)
        q = cpn(rng.randint(1, 2))
        pq = product(p, q)
        m1 = p.polytope.num_facets
        constants = set()
        for vi, v in enumerate(p.polytope.vertices):
            for wi, w in enumerate(q.polytope.vertices):
                ci = pq.polytope.vertex_index(v + tuple(j + m1 for j in w))
                constants.add(
                    pq.orientation.signs[ci]
                    * p.orientation.signs[vi]
                    * q.orientation.signs[wi]
                )
        assert len(constants) == 1


def test_product_positivity_factorization():
    sat = [cpn(1), cpn(2), hirzebruch(1)]
    unsat = [cp2_sum(2), cp2_sum(4)]
    for p in sat:
        for q in sat:
            assert decide_positive(product(p, q)).satisfiable
        for q in unsat:
            assert not decide_positive(product(p, q)).satisfiable
            assert not decide_positive(product(q, p)).satisfiable
    assert not decide_positive(product(unsat[0], unsat[0])).satisfiable


def test_product_commutative_up_to_relabeling():
    rng = random.Random(54)
    for _ in range(8):
        p = random_valid_pair(rng, max_m=7)
        q = cpn(rng.randint(1, 2))
        ab, ba = product(p, q), product(q, p)
        da, db = decide_positive(ab), decide_positive(ba)
        assert da.satisfiable == db.satisfiable
        assert da.solution_count == db.solution_count
        assert f_vector(ab.polytope) == f_vector(ba.polytope)


def test_vertex_cut_cp2():
    pair = vertex_cut(cpn(2), (0, 1))
    assert pair.polytope.num_facets == 4
    assert pair.polytope.vertices == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert pair.matrix.column(3) == (1, 1)


def test_vertex_cut_euler_increment():
    rng = random.Random(55)
    for _ in range(12):
        pair = random_valid_pair(rng, max_m=10)
        n = pair.polytope.dim
        cut = vertex_cut(pair, random_vertex(rng, pair))
        assert euler_characteristic(cut) == euler_characteristic(pair) + n - 1


def test_cp2_sum_one_is_cp2():
    assert cp2_sum(1) == cpn(2)


def test_cp2_sum_structure():
    for k in range(1, 8):
        pair = cp2_sum(k)
        assert pair.polytope.num_facets == k + 2
        assert euler_characteristic(pair) == k + 2
        assert set(pair.vertex_dets) <= {1, -1}
        assert decide_positive(pair).satisfiable == (k % 2 == 1)


def test_connected_sum_signature_additive_at_random_corners():
    from quasitoric import compute_invariants

    rng = random.Random(56)
    for _ in range(20):
        ka, kb = rng.randint(1, 4), rng.randint(1, 3)
        a, b = cp2_sum(ka), cp2_sum(kb)
        s = connected_sum_4d(a, random_vertex(rng, a), b, random_vertex(rng, b))
        rep = compute_invariants(
            s, Omniorientation.all_positive(s.polytope.num_facets)
        )
        assert rep.euler == ka + kb + 2
        assert rep.signature == ka + kb


def test_connected_sum_requires_dim2():
    with pytest.raises(NotDimension2Error):
        connected_sum_4d(cpn(3), (0, 1, 2), cpn(2), (0, 1))
    with pytest.raises(ValueError):
        cp2_sum(0)
