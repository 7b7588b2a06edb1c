"""Arrangements, projective utilities, and the translate solver."""

import random
from fractions import Fraction

import pytest

from discarr import (
    Arrangement,
    IndexFamily,
    NotGeneric,
    ProjectiveMap,
    Quadratic,
    Rational,
    arrangement_from_json,
    arrangement_to_json,
    cross_ratio,
    discriminantal_normal,
    is_generic,
    projective_map_through,
    translate_solver,
)
from discarr.arrangement import (
    DegeneratePoints,
    normalize_projective,
    projectively_equal,
)
from discarr.gallery import crapo, f4_arrangement, octahedral, regular_polygon

Q = Rational()


def _lines(*slopes):
    normals = [(1, 0), (0, 1), (1, 1)] + [(s, 1) for s in slopes]
    return Arrangement(Q, 2, normals)


def test_arrangement_basics():
    a = crapo()
    assert (a.n, a.k) == (6, 2)
    assert a.field == Q
    assert list(a.indices) == [1, 2, 3, 4, 5, 6]
    assert a.normal(1) == (Q.one(), Q.zero())
    assert a.normal(6) == (Q.from_int(8), Q.one())
    with pytest.raises(IndexError):
        a.normal(7)
    with pytest.raises(IndexError):
        a.normal(0)


def test_is_generic():
    assert is_generic(_lines(2, 5, 8))
    assert not is_generic(Arrangement(Q, 2, ((1, 0), (2, 0), (0, 1))))
    assert not is_generic(Arrangement(Q, 2, ((0, 0), (1, 0), (0, 1))))
    assert is_generic(f4_arrangement())


def test_projective_equality_and_normalization():
    u = (Q.from_int(2), Q.from_int(4))
    v = (Q.from_int(3), Q.from_int(6))
    w = (Q.from_int(3), Q.from_int(5))
    assert projectively_equal(u, v)
    assert not projectively_equal(u, w)
    assert not projectively_equal(u, (Q.zero(), Q.zero()))
    assert normalize_projective(u) == (Q.one(), Q.from_int(2))
    assert normalize_projective((Q.zero(), Q.from_int(-3))) == (Q.zero(), Q.one())
    with pytest.raises(ValueError):
        normalize_projective((Q.zero(), Q.zero()))


def test_cross_ratio_frame():
    # ((1,0), (0,1), (1,1), (t,1)) has cross ratio t
    one, zero = Q.one(), Q.zero()
    for t in (2, -3, Fraction(5, 7)):
        et = Q.from_fraction(Fraction(t))
        assert cross_ratio((one, zero), (zero, one), (one, one), (et, one)) == et


def test_cross_ratio_projective_invariance():
    rng = random.Random("pgl")
    one, zero = Q.one(), Q.zero()
    pts = ((one, zero), (zero, one), (one, one), (Q.from_int(7), one))
    base = cross_ratio(*pts)
    for _ in range(20):
        while True:
            rows = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
            if rows[0][0] * rows[1][1] != rows[0][1] * rows[1][0]:
                break
        g = ProjectiveMap.from_rows(rows, Q)
        assert cross_ratio(*(g.apply(p) for p in pts)) == base


def test_cross_ratio_degenerate():
    one, zero = Q.one(), Q.zero()
    with pytest.raises(DegeneratePoints):
        cross_ratio((one, zero), (one, zero), (one, one), (zero, one))


def test_projective_map_operations():
    f = ProjectiveMap.from_rows([[1, 2], [3, 4]], Q)
    g = ProjectiveMap.from_rows([[0, 1], [1, 0]], Q)
    assert f.compose(f.inverse()).is_identity()
    assert ProjectiveMap.from_rows([[5, 0], [0, 5]], Q).is_identity()
    assert f.compose(g).proj_eq(ProjectiveMap.from_rows([[2, 1], [4, 3]], Q))
    scaled = ProjectiveMap.from_rows([[3, 6], [9, 12]], Q)
    assert f == scaled and hash(f) == hash(scaled)
    with pytest.raises(DegeneratePoints):
        ProjectiveMap.from_rows([[1, 2], [2, 4]], Q)


def test_projective_map_through():
    one, zero = Q.one(), Q.zero()
    src = ((one, zero), (zero, one), (one, one))
    dst = ((one, one), (Q.from_int(2), one), (Q.from_int(5), one))
    f = projective_map_through(src, dst)
    for s, d in zip(src, dst):
        assert f.maps_to(s, d)
    # a fourth point rides along by cross-ratio preservation
    extra = (Q.from_int(3), one)
    r = cross_ratio(*src, extra)
    img = f.apply(extra)
    assert cross_ratio(*dst, img) == r
    with pytest.raises(DegeneratePoints):
        projective_map_through((src[0], src[0], src[1]), dst)


def test_translate_solver_single_triple():
    a = _lines(2, 5, 8)
    t = translate_solver(a, [(1, 2, 3)])
    assert t is not None
    # the three shifted lines meet: alpha_L . t = 0
    lam = discriminantal_normal(a, (1, 2, 3))
    acc = Q.zero()
    for i in range(6):
        acc = acc + lam[i] * t[i]
    assert acc.is_zero()


def test_translate_solver_respects_patterns():
    a = _lines(2, 5, 8)
    # crapo's detected 4-set admits a translate; a non-detected one does not
    good = ((1, 2, 3), (1, 5, 6), (2, 4, 6), (3, 4, 5))
    bad = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6))
    assert translate_solver(a, IndexFamily(good)) is not None
    assert translate_solver(a, IndexFamily(bad)) is None

    t = translate_solver(a, IndexFamily(good))
    for L in good:
        lam = discriminantal_normal(a, L)
        acc = Q.zero()
        for i in range(6):
            acc = acc + lam[i] * t[i]
        assert acc.is_zero()


def test_translate_solver_input_validation():
    a = _lines(2, 5, 8)
    with pytest.raises(ValueError):
        translate_solver(a, [(1, 2)])
    with pytest.raises(ValueError):
        translate_solver(a, [(1, 2, 9)])
    degenerate = Arrangement(Q, 2, ((1, 0), (1, 0), (0, 1)))
    with pytest.raises(NotGeneric):
        translate_solver(degenerate, [(1, 2, 3)])


def test_index_family():
    fam = IndexFamily([(3, 1, 2), (1, 2, 3), (4, 5, 6)])
    assert len(fam) == 2
    assert (1, 2, 3) in list(fam)


def test_json_roundtrip_over_each_field():
    for a in (crapo(), octahedral(), f4_arrangement(), regular_polygon(6)):
        b = arrangement_from_json(arrangement_to_json(a))
        assert b == a
        assert b.field == a.field and b.k == a.k and b.normals == a.normals


def test_json_rejects_garbage():
    with pytest.raises((KeyError, ValueError, TypeError)):
        arrangement_from_json({"k": 2})
