"""Coincidence detectors for line and plane arrangements.

k=2 detectors find translation patterns among six or seven lines: the
determinant product condition on a 4-set of triples (equivalently a
projective involution pairing the six lines), and the cross-ratio
equality that makes five triple-points align on seven lines.  The k=3
detector finds three pairwise intersection lines meeting a common
point at infinity.  Closure scanners verify the composition laws the
detected patterns must obey.

All detectors are pure and return canonical, deduplicated families.
"""

from __future__ import annotations

from itertools import combinations

from .arrangement import (
    Arrangement,
    NotGeneric,
    ProjectiveMap,
    cross_ratio,
    is_generic,
    projective_map_through,
)
from .exactfield import FieldElement
from .linalg import Matrix, Vector, cross3, det, det2


class BadFourSet(ValueError):
    """Four triples that do not pairwise intersect in single points."""


class NotDimension3(ValueError):
    """The operation needs plane normals in K^3."""


class TooFewHyperplanes(ValueError):
    """The sweep needs more hyperplanes than the arrangement has."""


def perfect_matchings(items):
    """All ways to split an even index set into unordered pairs.

    Pairs come out as (small, large), sorted by first element."""
    items = sorted(items)
    if not items:
        return [()]
    out = []
    first, rest = items[0], items[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for tail in perfect_matchings(remaining):
            out.append(((first, partner),) + tail)
    return out


class FourSet:
    """Four 3-subsets, pairwise meeting in one index, covering six
    indices twice each."""

    __slots__ = ("sets",)

    def __init__(self, sets):
        quads = sorted(tuple(sorted(s)) for s in sets)
        if len(quads) != 4 or any(len(s) != 3 or len(set(s)) != 3 for s in quads):
            raise BadFourSet(f"need four 3-subsets, got {quads}")
        counts: dict[int, int] = {}
        for s in quads:
            for p in s:
                counts[p] = counts.get(p, 0) + 1
        if len(counts) != 6 or set(counts.values()) != {2}:
            raise BadFourSet(f"indices must cover a 6-set twice each: {quads}")
        for s, t in combinations(quads, 2):
            if len(set(s) & set(t)) != 1:
                raise BadFourSet(f"triples {s} and {t} do not meet in one index")
        self.sets = tuple(quads)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted({p for s in self.sets for p in s}))

    def labels(self) -> tuple[int, ...]:
        """(p1..p6) with L1={p1,p2,p3}, L2={p1,p5,p6}, L3={p2,p4,p6},
        L4={p3,p4,p5} for the lexicographically sorted triples."""
        l1, l2, l3, l4 = (set(s) for s in self.sets)
        take = lambda s: next(iter(s))
        return (take(l1 & l2), take(l1 & l3), take(l1 & l4),
                take(l3 & l4), take(l2 & l4), take(l2 & l3))

    def matching(self) -> frozenset[frozenset[int]]:
        """Pair each index with the intersection of the two triples
        avoiding it."""
        p = self.labels()
        return frozenset({frozenset({p[0], p[3]}), frozenset({p[1], p[4]}),
                          frozenset({p[2], p[5]})})

    def complement(self) -> "FourSet":
        sup = set(self.support)
        return FourSet(tuple(sup - set(s)) for s in self.sets)

    def __eq__(self, other):
        if not isinstance(other, FourSet):
            return NotImplemented
        return self.sets == other.sets

    def __hash__(self):
        return hash(self.sets)

    def __lt__(self, other: "FourSet"):
        return self.sets < other.sets

    def __repr__(self):
        body = ", ".join("{" + "".join(map(str, s)) + "}" for s in self.sets)
        return f"FourSet({body})"


def _check_k2(a: Arrangement):
    if a.k != 2:
        raise NotDimension3(f"line detectors need k=2, got k={a.k}")


def ceva_value(a: Arrangement, fourset: FourSet) -> FieldElement:
    """|p1 p5||p2 p6||p3 p4| / |p1 p6||p2 p4||p3 p5| for the canonical
    labels; the 4-set is a coincidence pattern exactly when this is 1."""
    _check_k2(a)
    if not isinstance(fourset, FourSet):
        fourset = FourSet(fourset)
    p = fourset.labels()
    v = [a.normal(q) for q in p]
    num = det2(v[0], v[4]) * det2(v[1], v[5]) * det2(v[2], v[3])
    den = det2(v[0], v[5]) * det2(v[1], v[3]) * det2(v[2], v[4])
    return num / den


def crossratio_form(a: Arrangement, fourset: FourSet) -> FieldElement:
    """The triple cross-ratio product; always equals -ceva_value."""
    _check_k2(a)
    if not isinstance(fourset, FourSet):
        fourset = FourSet(fourset)
    p = fourset.labels()
    v = {q: a.normal(q) for q in p}
    r1 = cross_ratio(v[p[1]], v[p[2]], v[p[0]], v[p[3]])
    r2 = cross_ratio(v[p[2]], v[p[0]], v[p[1]], v[p[4]])
    r3 = cross_ratio(v[p[0]], v[p[1]], v[p[2]], v[p[5]])
    return r1 * r2 * r3


def _pair_dets(a: Arrangement, subset) -> dict:
    d = {}
    for x, y in combinations(subset, 2):
        d[(x, y)] = det2(a.normal(x), a.normal(y))
    return d


def _dd(dets, x, y):
    return dets[(x, y)] if x < y else -dets[(y, x)]


def quadral_points(a: Arrangement) -> list[FourSet]:
    """All 4-sets with ceva_value 1, over every 6-subset of indices.

    Each satisfying matching contributes its complementary pair of
    4-sets, so the count is even."""
    _check_k2(a)
    if not is_generic(a):
        raise NotGeneric("parallel or repeated lines")
    found = []
    for subset in combinations(a.indices, 6):
        dets = _pair_dets(a, subset)
        for pairs in perfect_matchings(subset):
            (a1, b1), (a2, b2), (a3, b3) = pairs
            lhs = _dd(dets, a1, b2) * _dd(dets, a2, b3) * _dd(dets, a3, b1)
            rhs = _dd(dets, a1, b3) * _dd(dets, a2, b1) * _dd(dets, a3, b2)
            if lhs == rhs:
                found.append(FourSet(((a1, a2, a3), (a1, b2, b3),
                                      (b1, a2, b3), (b1, b2, a3))))
                found.append(FourSet(((b1, b2, b3), (b1, a2, a3),
                                      (a1, b2, a3), (a1, a2, b3))))
    return sorted(set(found))


def find_involutions(a: Arrangement):
    """For each pairing of six lines, the projective involution
    swapping the normals along it, when one exists.

    Returns (matching, map) pairs; the map sends each normal to its
    partner in both directions and squares to the identity."""
    _check_k2(a)
    if a.n != 6:
        raise TooFewHyperplanes("involution search is defined for exactly 6 lines")
    if not is_generic(a):
        raise NotGeneric("parallel or repeated lines")
    out = []
    for pairs in perfect_matchings(a.indices):
        src = tuple(a.normal(x) for x, _ in pairs)
        dst = tuple(a.normal(y) for _, y in pairs)
        f = projective_map_through(src, dst)
        if all(f.maps_to(dst[i], src[i]) for i in range(3)):
            assert f.compose(f).is_identity()
            matching = frozenset(frozenset(p) for p in pairs)
            out.append((matching, f))
    return out


class QuintFamily:
    """Center p0 plus aligned triples (p1,p2,p3), (p4,p5,p6), encoding
    the five sets {p0,p1,p4}, {p0,p2,p5}, {p0,p3,p6}, {p1,p2,p3},
    {p4,p5,p6}.

    Canonical form: the triple holding the smallest non-center index
    comes first, with its entries ascending."""

    __slots__ = ("center", "ta", "tb")

    def __init__(self, center: int, ta, tb):
        ta, tb = tuple(ta), tuple(tb)
        indices = (center,) + ta + tb
        if len(ta) != 3 or len(tb) != 3 or len(set(indices)) != 7:
            raise ValueError(f"need 7 distinct indices, got {indices}")
        if min(tb) < min(ta):
            ta, tb = tb, ta
        order = sorted(range(3), key=lambda i: ta[i])
        self.center = center
        self.ta = tuple(ta[i] for i in order)
        self.tb = tuple(tb[i] for i in order)

    @property
    def sets(self) -> tuple[tuple[int, ...], ...]:
        spokes = [tuple(sorted((self.center, self.ta[i], self.tb[i])))
                  for i in range(3)]
        return tuple(sorted(spokes) + [self.ta, tuple(sorted(self.tb))])

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted((self.center,) + self.ta + self.tb))

    def __eq__(self, other):
        if not isinstance(other, QuintFamily):
            return NotImplemented
        return (self.center, self.ta, self.tb) == (other.center, other.ta, other.tb)

    def __hash__(self):
        return hash((self.center, self.ta, self.tb))

    def __lt__(self, other: "QuintFamily"):
        return ((self.support, self.center, self.ta, self.tb)
                < (other.support, other.center, other.ta, other.tb))

    def __repr__(self):
        return f"QuintFamily(center={self.center}, {self.ta} | {self.tb})"


def quint_value(a: Arrangement, q: QuintFamily):
    """The two cross ratios [a0,a1;a2,a3] and [a0,a4;a5,a6]; the family
    is a coincidence pattern exactly when they are equal."""
    _check_k2(a)
    v0 = a.normal(q.center)
    va = [a.normal(p) for p in q.ta]
    vb = [a.normal(p) for p in q.tb]
    return (cross_ratio(v0, va[0], va[1], va[2]),
            cross_ratio(v0, vb[0], vb[1], vb[2]))


def _quint_condition(dets, center, ta, tb) -> bool:
    """Division-free cross-ratio equality; degenerate input counts false."""
    n1 = _dd(dets, center, ta[1]) * _dd(dets, ta[0], ta[2])
    d1 = _dd(dets, ta[0], ta[1]) * _dd(dets, center, ta[2])
    n2 = _dd(dets, center, tb[1]) * _dd(dets, tb[0], tb[2])
    d2 = _dd(dets, tb[0], tb[1]) * _dd(dets, center, tb[2])
    if d1.is_zero() or d2.is_zero():
        return False
    return n1 * d2 == n2 * d1


def quintuple_points(a: Arrangement) -> list[QuintFamily]:
    """All canonical quint families holding on some 7-subset."""
    _check_k2(a)
    if a.n < 7:
        raise TooFewHyperplanes(f"quint families need 7 hyperplanes, have {a.n}")
    if not is_generic(a):
        raise NotGeneric("parallel or repeated lines")
    found = []
    for subset in combinations(a.indices, 7):
        dets = _pair_dets(a, subset)
        for center in subset:
            rim = [p for p in subset if p != center]
            for pairs in perfect_matchings(rim):
                (x1, y1), (x2, y2), (x3, y3) = pairs
                for c2, d2 in ((x2, y2), (y2, x2)):
                    for c3, d3 in ((x3, y3), (y3, x3)):
                        ta, tb = (x1, c2, c3), (y1, d2, d3)
                        if _quint_condition(dets, center, ta, tb):
                            found.append(QuintFamily(center, ta, tb))
    return sorted(set(found))


def quint_closure_checks(a: Arrangement) -> list[str]:
    """Composition laws among detected quint families.

    Same center and same unordered triple pair: two detected pairings
    differing by a 3-cycle force the third power.  Same center and same
    rim pairing: three detected splits force the fourth.  Returns the
    violations found (expected none)."""
    try:
        families = quintuple_points(a)
    except TooFewHyperplanes:
        return []
    detected = set(families)
    violations = []

    by_triples: dict = {}
    for q in families:
        key = (q.center, frozenset((frozenset(q.ta), frozenset(q.tb))))
        by_triples.setdefault(key, set()).add(q)
    for (center, _), fams in sorted(by_triples.items(),
                                    key=lambda kv: (kv[0][0], sorted(map(sorted, kv[0][1])))):
        # canonical form aligns every family on the same sorted ta
        bijections = {q.tb: q for q in fams}
        for tb1 in bijections:
            m1_inv = {tb1[i]: i for i in range(3)}
            for tb2 in bijections:
                if tb2 == tb1:
                    continue
                cycle = {tb1[i]: tb2[i] for i in range(3)}
                if any(cycle[b] == b for b in cycle):
                    continue
                tb3 = tuple(cycle[tb2[i]] for i in range(3))
                if tb3 not in bijections:
                    q1, q2 = bijections[tb1], bijections[tb2]
                    violations.append(
                        f"three-cycle closure fails: {q1!r} and {q2!r} "
                        f"detected but center={center} tb={tb3} is not")

    by_pairing: dict = {}
    for q in families:
        key = (q.center, frozenset(frozenset((q.ta[i], q.tb[i])) for i in range(3)))
        by_pairing.setdefault(key, set()).add(q)
    for (center, pairing), fams in by_pairing.items():
        if len(fams) == 3:
            violations.append(
                f"split closure fails: center={center} pairing="
                f"{sorted(map(sorted, pairing))} has 3 of 4 splits detected")
    return violations


class Good6Partition:
    """Three disjoint index pairs; the coincidence pattern is the three
    pair-union 4-subsets."""

    __slots__ = ("matching",)

    def __init__(self, pairs):
        canon = tuple(sorted(tuple(sorted(p)) for p in pairs))
        flat = [x for p in canon for x in p]
        if len(canon) != 3 or any(len(p) != 2 for p in canon) or len(set(flat)) != 6:
            raise ValueError(f"need three disjoint pairs, got {canon}")
        self.matching = canon

    @property
    def sets(self) -> tuple[tuple[int, ...], ...]:
        (p, q, r) = self.matching
        return tuple(sorted((tuple(sorted(p + q)), tuple(sorted(p + r)),
                             tuple(sorted(q + r)))))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(x for p in self.matching for x in p))

    def as_frozenset(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(p) for p in self.matching)

    def __eq__(self, other):
        if not isinstance(other, Good6Partition):
            return NotImplemented
        return self.matching == other.matching

    def __hash__(self):
        return hash(self.matching)

    def __lt__(self, other: "Good6Partition"):
        return self.matching < other.matching

    def __repr__(self):
        body = ")(".join("".join(map(str, p)) for p in self.matching)
        return f"Good6Partition(({body}))"


def good6_condition(a: Arrangement, g: Good6Partition) -> FieldElement:
    """det of the three pair cross-products; zero exactly when the
    three pair intersections share a point at infinity."""
    if a.k != 3:
        raise NotDimension3(f"cross-product condition needs k=3, got k={a.k}")
    if not isinstance(g, Good6Partition):
        g = Good6Partition(g)
    rows = [cross3(a.normal(p), a.normal(q)) for p, q in g.matching]
    return det(Matrix.from_rows(rows, a.field))


def good6_points(a: Arrangement) -> list[Good6Partition]:
    """All good partitions over every 6-subset of indices, k=3."""
    if a.k != 3:
        raise NotDimension3(f"cross-product condition needs k=3, got k={a.k}")
    if not is_generic(a):
        raise NotGeneric("dependent normal triple")
    found = []
    for subset in combinations(a.indices, 6):
        for pairs in perfect_matchings(subset):
            g = Good6Partition(pairs)
            if good6_condition(a, g).is_zero():
                found.append(g)
    return sorted(found)


def pappus_closure_check(a: Arrangement) -> list[str]:
    """Detected partitions sharing a support but no pair must be closed
    under conjugation of their involutions.  Returns violations
    (expected none)."""
    found = good6_points(a)
    detected = set(found)
    by_support: dict = {}
    for g in found:
        by_support.setdefault(g.support, []).append(g)
    violations = []
    for support, gs in sorted(by_support.items()):
        for g1, g2 in combinations(gs, 2):
            if set(g1.matching) & set(g2.matching):
                continue
            s1 = {x: y for p in g1.matching for x, y in (p, p[::-1])}
            s2 = {x: y for p in g2.matching for x, y in (p, p[::-1])}
            s3 = {x: s1[s2[s1[x]]] for x in support}
            g3 = Good6Partition(frozenset(frozenset((x, y)) for x, y in s3.items()))
            if g3 not in detected:
                violations.append(
                    f"conjugation closure fails: {g1!r} and {g2!r} "
                    f"detected but {g3!r} is not")
    return violations
