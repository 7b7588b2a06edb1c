"""Discriminantal arrangements B(n,k,A) and their intersection lattices.

Each (k+1)-subset L of hyperplane indices gives one hyperplane D_L in
the n-dimensional space of translation vectors: D_L is the locus of
translations making the L-indexed hyperplanes concurrent, and its
normal is supported on L with signed k x k minors of the base normals
as coordinates.  The whole family is central of rank n - k.

Lattice flats are stored by closed support: the set of ALL subsets L
whose normal lies in the flat's normal span.  Comparison against a
randomized reference arrangement flags the flats whose (support, rank)
pair a very generic arrangement cannot produce.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .arrangement import Arrangement, NotGeneric, is_generic
from .exactfield import FieldDescriptor, FieldElement, Rational, descriptor_to_json
from .linalg import Matrix, Vector, det


class BadSubsetSize(ValueError):
    """An index subset does not have exactly k+1 distinct entries in range."""


class TooLarge(ValueError):
    """The arrangement exceeds the supported lattice-computation size."""


class ExhaustedRetries(RuntimeError):
    """No random arrangement passed the genericity filters."""


class ShapeMismatch(ValueError):
    """Two objects with different (n, k) cannot be compared."""


def _as_subset(a: Arrangement, L) -> tuple[int, ...]:
    key = tuple(sorted(L))
    if len(key) != a.k + 1 or len(set(key)) != len(key):
        raise BadSubsetSize(f"need {a.k + 1} distinct indices, got {key}")
    if key[0] < 1 or key[-1] > a.n:
        raise BadSubsetSize(f"indices out of range 1..{a.n}: {key}")
    return key


def discriminantal_normal(a: Arrangement, L) -> Vector:
    """Normal of D_L: coordinate p_j carries (-1)^(j+1) times the minor
    of the base normals with column p_j deleted; all other coordinates
    are zero."""
    key = _as_subset(a, L)
    cols = [a.normal(p) for p in key]
    zero = a.field.zero()
    coords = [zero] * a.n
    for j, p in enumerate(key):
        rest = [cols[i] for i in range(len(cols)) if i != j]
        minor = Matrix.from_rows(
            [tuple(c[r] for c in rest) for r in range(a.k)], a.field)
        d = det(minor)
        coords[p - 1] = d if j % 2 == 0 else -d
    return tuple(coords)


def ordered_normal(a: Arrangement, seq) -> Vector:
    """discriminantal_normal of sorted(seq), signed by the sorting parity."""
    seq = tuple(seq)
    base = discriminantal_normal(a, seq)
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
                     if seq[i] > seq[j])
    if inversions % 2 == 0:
        return base
    return tuple(-x for x in base)


class _Span:
    """Incremental row echelon over an exact field."""

    __slots__ = ("field", "rows", "pivots")

    def __init__(self, field: FieldDescriptor):
        self.field = field
        self.rows: list[list[FieldElement]] = []
        self.pivots: list[int] = []

    def _reduce(self, v) -> list[FieldElement]:
        w = list(v)
        for row, piv in zip(self.rows, self.pivots):
            c = w[piv]
            if not c.is_zero():
                for i in range(piv, len(w)):
                    w[i] = w[i] - c * row[i]
        return w

    def contains(self, v) -> bool:
        return all(x.is_zero() for x in self._reduce(v))

    def insert(self, v) -> bool:
        """Add v to the span; False when v was already inside."""
        w = self._reduce(v)
        for i, x in enumerate(w):
            if not x.is_zero():
                inv = x.inv()
                self.rows.append([y * inv for y in w])
                self.pivots.append(i)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


class DiscriminantalArrangement:
    """All C(n, k+1) hyperplanes D_L of B(n,k,A), keyed by sorted subset."""

    __slots__ = ("base", "hyperplanes")

    def __init__(self, base: Arrangement, hyperplanes: dict):
        self.base = base
        self.hyperplanes = hyperplanes

    @property
    def field(self) -> FieldDescriptor:
        return self.base.field

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int:
        return self.base.k

    def subsets(self) -> list[tuple[int, ...]]:
        return sorted(self.hyperplanes)

    def normal(self, L) -> Vector:
        return self.hyperplanes[_as_subset(self.base, L)]

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def __repr__(self):
        return f"DiscriminantalArrangement(n={self.n}, k={self.k}, {len(self)} hyperplanes)"


def build_discriminantal(a: Arrangement) -> DiscriminantalArrangement:
    if not is_generic(a):
        raise NotGeneric("base arrangement has a dependent k-subset of normals")
    hyperplanes = {}
    span = _Span(a.field)
    for L in combinations(a.indices, a.k + 1):
        v = discriminantal_normal(a, L)
        hyperplanes[L] = v
        span.insert(v)
    if span.rank != a.n - a.k:
        raise NotGeneric(
            f"normal family has rank {span.rank}, expected {a.n - a.k}")
    return DiscriminantalArrangement(a, hyperplanes)


@dataclass(frozen=True)
class Flat:
    """A lattice element: closed support plus the rank of its normal span."""

    support: tuple[tuple[int, ...], ...]
    rank: int

    def key(self) -> tuple[frozenset, int]:
        return (frozenset(self.support), self.rank)

    def __len__(self) -> int:
        return len(self.support)


class Lattice:
    """Flats of B(n,k,A) grouped by rank, with the span-closure operator."""

    __slots__ = ("n", "k", "field", "normals", "flats_by_rank")

    def __init__(self, d: DiscriminantalArrangement, flats_by_rank: dict):
        self.n = d.n
        self.k = d.k
        self.field = d.field
        self.normals = dict(d.hyperplanes)
        self.flats_by_rank = flats_by_rank

    def closure(self, supports) -> Flat:
        span = _Span(self.field)
        for L in supports:
            span.insert(self.normals[tuple(sorted(L))])
        members = tuple(L for L in sorted(self.normals)
                        if span.contains(self.normals[L]))
        return Flat(support=members, rank=span.rank)

    def flats(self, rank: int | None = None):
        if rank is not None:
            return list(self.flats_by_rank.get(rank, ()))
        return [f for r in sorted(self.flats_by_rank)
                for f in self.flats_by_rank[r]]

    def counts(self) -> dict[int, int]:
        return {r: len(fl) for r, fl in sorted(self.flats_by_rank.items())}

    def max_rank(self) -> int:
        return max(self.flats_by_rank)

    def report(self, nvg=()) -> dict:
        flagged = {f.key() for f in nvg}
        ranks = []
        for r in sorted(self.flats_by_rank):
            flats = [{"support": [list(L) for L in f.support],
                      "rank": f.rank,
                      "nvg": f.key() in flagged}
                     for f in self.flats_by_rank[r]]
            ranks.append({"rank": r, "count": len(flats), "flats": flats})
        return {"n": self.n, "k": self.k,
                "field": descriptor_to_json(self.field), "ranks": ranks}


def intersection_lattice(d: DiscriminantalArrangement,
                         max_rank: int | None = None) -> Lattice:
    """All flats of rank <= max_rank (default n-k), by level-wise closure.

    Level r+1 extends each rank-r flat by one outside hyperplane and
    closes the span; the top level is the single central flat.
    """
    if len(d.hyperplanes) > 64:
        raise TooLarge(f"{len(d.hyperplanes)} hyperplanes exceeds the 64 cap")
    top = d.n - d.k
    if max_rank is None:
        max_rank = top
    max_rank = max(0, min(max_rank, top))
    keys = sorted(d.hyperplanes)

    lat = Lattice(d, {})
    levels: dict[int, tuple[Flat, ...]] = {0: (Flat(support=(), rank=0),)}
    if max_rank >= 1:
        assigned: set[tuple[int, ...]] = set()
        singles = []
        for L in keys:
            if L in assigned:
                continue
            flat = lat.closure([L])
            assigned.update(flat.support)
            singles.append(flat)
        levels[1] = tuple(singles)
    for r in range(2, max_rank + 1):
        if r == top:
            levels[r] = (Flat(support=tuple(keys), rank=top),)
            break
        found: dict[tuple, Flat] = {}
        for f in levels[r - 1]:
            have = set(f.support)
            for L in keys:
                if L in have:
                    continue
                flat = lat.closure(f.support + (L,))
                found[flat.support] = flat
        levels[r] = tuple(found[s] for s in sorted(found))
    lat.flats_by_rank = levels
    return lat


def reference_very_generic(n: int, k: int, seed: int = 0) -> Arrangement:
    """Random integer arrangement over the rationals passing every
    coincidence detector; deterministic in (n, k, seed)."""
    from . import detectors

    if k not in (2, 3):
        raise ValueError(f"reference construction supports k in {{2, 3}}, got {k}")
    if not k < n <= 9:
        raise ValueError(f"need k < n <= 9, got n={n}")
    rng = random.Random(f"reference-{n}-{k}-{seed}")
    field = Rational()
    for _ in range(64):
        normals = [tuple(field.from_int(rng.randint(-99, 99)) for _ in range(k))
                   for _ in range(n)]
        try:
            a = Arrangement(field, k, normals)
        except ValueError:
            continue
        if not is_generic(a):
            continue
        if k == 2:
            if detectors.quadral_points(a):
                continue
            if n >= 7 and detectors.quintuple_points(a):
                continue
        else:
            if n >= 6 and detectors.good6_points(a):
                continue
        return a
    raise ExhaustedRetries(f"no very generic candidate in 64 draws for (n={n}, k={k})")


def nvg_flats(d: DiscriminantalArrangement, reference: Lattice,
              lattice: Lattice | None = None) -> list[Flat]:
    """Flats of d's lattice whose (support, rank) pair the reference
    lattice does not contain.  Supports are compared under the identity
    indexing of (k+1)-subsets."""
    if (d.n, d.k) != (reference.n, reference.k):
        raise ShapeMismatch(
            f"arrangement is (n={d.n}, k={d.k}), reference is "
            f"(n={reference.n}, k={reference.k})")
    if lattice is None:
        lattice = intersection_lattice(d, max_rank=reference.max_rank())
    ref_keys = {f.key() for f in reference.flats()}
    out = [f for f in lattice.flats() if f.key() not in ref_keys]
    out.sort(key=lambda f: (f.rank, f.support))
    return out
