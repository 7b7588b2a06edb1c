"""Permutations of [6], the exceptional automorphism, and type labels.

The labeled complete graph places one fixed-point-free involution on each
edge of K_6: edge (i, j) carries the image of the transposition (i j)
under the exceptional automorphism phi of S_6.  Detected coincidences of
a 6-line (or 6-plane) arrangement select a set of edges; the connected
components of that edge set give the arrangement its type nu, and
m(nu) = sum a_j C(d_j, 2) counts the induced edges.

Composition order: (p * q)(x) = p(q(x)), i.e. the right factor acts
first.  All tests and tables assume this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb


class ClosureViolation(RuntimeError):
    """A detected edge set is not induced by any vertex partition."""


class NotAMatchingLabel(ValueError):
    """The given matching is not the orbit set of any edge label."""


class Perm:
    """A permutation of {1,...,6}; images[i-1] is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images):
        im = tuple(images)
        if sorted(im) != [1, 2, 3, 4, 5, 6]:
            raise ValueError(f"not a permutation of 1..6: {im}")
        self.images = im

    @classmethod
    def identity(cls) -> "Perm":
        return cls((1, 2, 3, 4, 5, 6))

    @classmethod
    def from_cycles(cls, cycles) -> "Perm":
        im = list(range(1, 7))
        for cyc in cycles:
            cyc = tuple(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                im[a - 1] = b
        return cls(im)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[other.images[i] - 1] for i in range(6)))

    def inverse(self) -> "Perm":
        im = [0] * 6
        for i, y in enumerate(self.images):
            im[y - 1] = i + 1
        return Perm(im)

    def orbits(self) -> frozenset[frozenset[int]]:
        seen = set()
        parts = []
        for start in range(1, 7):
            if start in seen:
                continue
            orb = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                orb.append(x)
                seen.add(x)
                x = self(x)
            parts.append(frozenset(orb))
        return frozenset(parts)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(o) for o in self.orbits()))

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        parts = []
        for orb in sorted(self.orbits(), key=min):
            if len(orb) == 1:
                continue
            cyc = [min(orb)]
            while True:
                nxt = self(cyc[-1])
                if nxt == cyc[0]:
                    break
                cyc.append(nxt)
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) if parts else "()"


Matching = frozenset  # frozenset of three disjoint frozenset pairs


def matching_from_perm(p: Perm) -> Matching:
    orbs = p.orbits()
    if any(len(o) != 2 for o in orbs):
        raise NotAMatchingLabel(f"{p!r} is not a fixed-point-free involution")
    return frozenset(orbs)


def all_matchings() -> list[Matching]:
    """The 15 perfect matchings of {1,...,6}, canonically ordered."""
    out = []
    for b1 in range(2, 7):
        rest = [x for x in range(2, 7) if x != b1]
        a2 = rest[0]
        for b2 in rest[1:]:
            a3, b3 = [x for x in rest[1:] if x != b2]
            out.append(frozenset({frozenset({1, b1}), frozenset({a2, b2}), frozenset({a3, b3})}))
    return sorted(out, key=matching_sort_key)


def matching_sort_key(m: Matching):
    return tuple(sorted(tuple(sorted(p)) for p in m))


_GENERATORS: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {
    (1, 2): ((1, 5), (2, 6), (3, 4)),
    (2, 3): ((1, 2), (3, 5), (4, 6)),
    (3, 4): ((1, 5), (2, 4), (3, 6)),
    (4, 5): ((1, 4), (2, 6), (3, 5)),
    (5, 6): ((1, 5), (2, 3), (4, 6)),
}


def _build_phi_table() -> dict[Perm, Perm]:
    gens = [(Perm.from_cycles([pair]), Perm.from_cycles(list(img)))
            for pair, img in _GENERATORS.items()]
    table = {Perm.identity(): Perm.identity()}
    frontier = [Perm.identity()]
    while frontier:
        nxt = []
        for g in frontier:
            fg = table[g]
            for s, fs in gens:
                h = g * s
                if h not in table:
                    table[h] = fg * fs
                    nxt.append(h)
        frontier = nxt
    if len(table) != 720:
        raise RuntimeError(f"automorphism table has {len(table)} entries")
    return table


_PHI: dict[Perm, Perm] | None = None


def phi(p: Perm) -> Perm:
    global _PHI
    if _PHI is None:
        _PHI = _build_phi_table()
    return _PHI[p]


def edge_label(i: int, j: int) -> Perm:
    if i == j or not (1 <= i <= 6 and 1 <= j <= 6):
        raise ValueError(f"not an edge of K_6: ({i}, {j})")
    return phi(Perm.from_cycles([(i, j)]))


_EDGE_OF_MATCHING: dict[Matching, tuple[int, int]] | None = None


def _edge_table() -> dict[Matching, tuple[int, int]]:
    global _EDGE_OF_MATCHING
    if _EDGE_OF_MATCHING is None:
        table = {}
        for i, j in combinations(range(1, 7), 2):
            table[matching_from_perm(edge_label(i, j))] = (i, j)
        if len(table) != 15:
            raise RuntimeError("edge labels are not 15 distinct matchings")
        _EDGE_OF_MATCHING = table
    return _EDGE_OF_MATCHING


def matching_to_edge(m: Matching) -> tuple[int, int]:
    table = _edge_table()
    key = frozenset(frozenset(p) for p in m)
    if key not in table:
        raise NotAMatchingLabel(f"{sorted(map(sorted, m))} labels no edge")
    return table[key]


def o_map(p: Perm) -> frozenset[frozenset[int]]:
    """Orbit partition of [6] under the cyclic group generated by p."""
    return p.orbits()


class VertexPartition:
    """A partition of the six vertices of the labeled K_6."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        bl = frozenset(frozenset(b) for b in blocks)
        flat = sorted(x for b in bl for x in b)
        if flat != [1, 2, 3, 4, 5, 6]:
            raise ValueError(f"blocks must partition 1..6, got {sorted(map(sorted, bl))}")
        self.blocks = bl

    def type(self) -> "PartitionType":
        return PartitionType(sorted(len(b) for b in self.blocks))

    def sorted_blocks(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(b)) for b in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, VertexPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        body = "|".join("".join(map(str, b)) for b in self.sorted_blocks())
        return f"VertexPartition({body})"


class PartitionType:
    """A partition of the integer 6, written d1^a1 d2^a2 ... with d ascending."""

    __slots__ = ("sizes",)

    def __init__(self, sizes):
        sz = tuple(sorted(int(s) for s in sizes))
        if sum(sz) != 6 or any(s < 1 for s in sz):
            raise ValueError(f"sizes must partition 6, got {sz}")
        self.sizes = sz

    @classmethod
    def from_string(cls, s: str) -> "PartitionType":
        sizes = []
        for part in s.replace(",", " ").split():
            if "^" in part:
                d, a = part.split("^")
                sizes.extend([int(d)] * int(a))
            else:
                sizes.append(int(part))
        return cls(sizes)

    def label(self) -> str:
        out = []
        for d in sorted(set(self.sizes)):
            out.append(f"{d}^{self.sizes.count(d)}")
        return " ".join(out)

    def cli_token(self) -> str:
        return self.label().replace(" ", ",")

    def m(self) -> int:
        return sum(comb(d, 2) for d in self.sizes)

    def __eq__(self, other):
        if not isinstance(other, PartitionType):
            return NotImplemented
        return self.sizes == other.sizes

    def __hash__(self):
        return hash(self.sizes)

    def __repr__(self):
        return f"PartitionType({self.label()})"


# the eleven types in the order every table of this library uses
TYPE_ORDER: tuple[PartitionType, ...] = tuple(
    PartitionType.from_string(s)
    for s in (
        "1^6", "1^4 2^1", "1^3 3^1", "1^2 2^2", "1^2 4^1", "1^1 2^1 3^1",
        "2^3", "1^1 5^1", "2^1 4^1", "3^2", "6^1",
    )
)


def m_of_type(nu: PartitionType) -> int:
    return nu.m()


def induced_edges(v: VertexPartition) -> frozenset[tuple[int, int]]:
    """Edges of K_6 with both endpoints inside one block."""
    out = set()
    for b in v.blocks:
        for i, j in combinations(sorted(b), 2):
            out.add((i, j))
    return frozenset(out)


def partition_from_edges(edges) -> VertexPartition:
    parent = {i: i for i in range(1, 7)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for x in range(1, 7):
        groups.setdefault(find(x), []).append(x)
    return VertexPartition(groups.values())


def all_partitions_of_6() -> list[VertexPartition]:
    """All 203 set partitions of {1,...,6}."""
    out = []

    def grow(rest, blocks):
        if not rest:
            out.append(VertexPartition(blocks))
            return
        first, tail = rest[0], rest[1:]
        for size in range(len(tail) + 1):
            for extra in combinations(tail, size):
                block = (first,) + extra
                remaining = [x for x in tail if x not in extra]
                grow(remaining, blocks + [block])

    grow(list(range(1, 7)), [])
    return out


@dataclass(frozen=True)
class TypeReport:
    type: PartitionType
    partition: VertexPartition
    matchings: tuple[Matching, ...]
    edges: frozenset[tuple[int, int]]
    m_a: int
    m_formula_consistent: bool


def arrangement_type(a, k: int | None = None) -> TypeReport:
    """Classify a 6-hyperplane arrangement by its detected edge set.

    k = 2 collects the matchings realized by projective involutions of
    the six lines; k = 3 collects the matchings whose three cross
    products are linearly dependent.  The detected edges must be exactly
    the edges induced by their connected-component partition; anything
    else raises ClosureViolation.
    """
    from . import detectors

    if k is None:
        k = a.k
    if k != a.k:
        raise ValueError(f"arrangement has k={a.k}, requested k={k}")
    if a.n != 6:
        raise ValueError("type classification needs exactly 6 hyperplanes")
    if k == 2:
        matchings = tuple(m for m, _ in detectors.find_involutions(a))
        m_a = 2 * len(matchings)
        factor = 2
    elif k == 3:
        matchings = tuple(g.matching for g in detectors.good6_points(a))
        m_a = len(matchings)
        factor = 1
    else:
        raise ValueError(f"no classifier for k={k}")
    edges = frozenset(matching_to_edge(m) for m in matchings)
    part = partition_from_edges(edges)
    closed = induced_edges(part)
    if closed != edges:
        missing = sorted(closed - edges)
        raise ClosureViolation(f"detected edges are not component-closed; missing {missing}")
    nu = part.type()
    return TypeReport(
        type=nu,
        partition=part,
        matchings=matchings,
        edges=edges,
        m_a=m_a,
        m_formula_consistent=(m_a == factor * nu.m()),
    )


def upper_bound_check(reports) -> bool:
    """Every k=2 result obeys m(A) <= 20 and never realizes type 6^1."""
    six = PartitionType.from_string("6^1")
    for rep in reports:
        if rep.m_a > 20:
            return False
        if rep.type == six:
            return False
    return True
