"""Generic hyperplane arrangements and projective-line utilities.

An arrangement is a list of n normal vectors in K^k with n > k >= 1.
Hyperplane p is { x : alpha_p . x = t_p }; the library keeps only the
normals (offsets live in separate translation vectors t in K^n).
Indices are 1-based throughout the public interface.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .exactfield import (
    FieldDescriptor,
    FieldElement,
    descriptor_from_json,
    descriptor_to_json,
    embed,
    format_element,
    parse_element,
)
from .linalg import Matrix, Vector, det, det2, kernel


class NotGeneric(ValueError):
    """Some k normals of the arrangement are linearly dependent."""


class DegeneratePoints(ValueError):
    """Projective points that were required to be distinct coincide."""


class NoGenericWitness(RuntimeError):
    """Every candidate translation hits a forbidden extra incidence."""


def _as_element(field: FieldDescriptor, value) -> FieldElement:
    if isinstance(value, FieldElement):
        if value.fd != field:
            raise ValueError("normal entry from a different field")
        return value
    if isinstance(value, int):
        return field.from_int(value)
    if isinstance(value, Fraction):
        return embed(value, field)
    raise TypeError(f"cannot use {value!r} as a field element")


class Arrangement:
    """n hyperplanes through the origin of K^k, one normal each."""

    __slots__ = ("field", "k", "n", "_normals")

    def __init__(self, field: FieldDescriptor, k: int, normals):
        rows = [tuple(_as_element(field, e) for e in v) for v in normals]
        if k < 1:
            raise ValueError("ambient dimension must be at least 1")
        if any(len(r) != k for r in rows):
            raise ValueError("every normal must have length k")
        if len(rows) <= k:
            raise ValueError("need more hyperplanes than dimensions")
        self.field = field
        self.k = k
        self.n = len(rows)
        self._normals = tuple(rows)

    @property
    def normals(self) -> tuple[Vector, ...]:
        return self._normals

    def normal(self, p: int) -> Vector:
        """Normal of hyperplane p, 1-based."""
        if not 1 <= p <= self.n:
            raise IndexError(f"hyperplane index {p} out of range 1..{self.n}")
        return self._normals[p - 1]

    @property
    def indices(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return (self.field, self.k, self._normals) == (other.field, other.k, other._normals)

    def __hash__(self):
        return hash((self.field, self.k, self._normals))

    def __repr__(self):
        return f"Arrangement(n={self.n}, k={self.k}, field={self.field!r})"


def is_generic(a: Arrangement) -> bool:
    """True iff every k-subset of normals is linearly independent."""
    if a.k == 2:
        # common case: all pairwise 2x2 determinants nonzero
        for u, v in combinations(a.normals, 2):
            if det2(u, v).is_zero():
                return False
        return True
    for rows in combinations(a.normals, a.k):
        if det(Matrix.from_rows(list(rows), a.field)).is_zero():
            return False
    return True


def projectively_equal(u: Vector, v: Vector) -> bool:
    """True iff u and v are nonzero and proportional."""
    if len(u) != len(v):
        return False
    if all(e.is_zero() for e in u) or all(e.is_zero() for e in v):
        return False
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def normalize_projective(v: Vector) -> Vector:
    """Scale so the first nonzero coordinate is 1 (canonical form only)."""
    for e in v:
        if not e.is_zero():
            s = e.inv()
            return tuple(s * x for x in v)
    raise ValueError("zero vector has no projective class")


def cross_ratio(v1: Vector, v2: Vector, v3: Vector, v4: Vector) -> FieldElement:
    """Cross ratio |v1 v3||v2 v4| / |v2 v3||v1 v4| of four points of P^1.

    All four arguments are 2-vectors representing pairwise distinct
    projective points; DegeneratePoints is raised when any two of them
    are proportional.
    """
    pts = (v1, v2, v3, v4)
    dets = {}
    for i, j in combinations(range(4), 2):
        d = det2(pts[i], pts[j])
        if d.is_zero():
            raise DegeneratePoints(f"points {i + 1} and {j + 1} coincide")
        dets[(i, j)] = d
    return (dets[(0, 2)] * dets[(1, 3)]) / (dets[(1, 2)] * dets[(0, 3)])


class ProjectiveMap:
    """Invertible k x k matrix considered up to nonzero scaling."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if matrix.rows != matrix.cols:
            raise ValueError("projective map needs a square matrix")
        if det(matrix).is_zero():
            raise DegeneratePoints("singular matrix is not a projective map")
        self.matrix = matrix

    @classmethod
    def from_rows(cls, rows, field: FieldDescriptor) -> "ProjectiveMap":
        ents = [[_as_element(field, e) for e in r] for r in rows]
        return cls(Matrix.from_rows(ents, field))

    def apply(self, v: Vector) -> Vector:
        return self.matrix.apply(v)

    def compose(self, other: "ProjectiveMap") -> "ProjectiveMap":
        """self after other."""
        return ProjectiveMap(self.matrix * other.matrix)

    def inverse(self) -> "ProjectiveMap":
        m = self.matrix
        f = m.field
        if m.rows == 2:
            a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
            return ProjectiveMap(Matrix.from_rows([[d, -b], [-c, a]], f))
        # generic size: solve M X = I column by column
        from .linalg import solve

        cols = []
        for j in range(m.rows):
            e = tuple(f.one() if i == j else f.zero() for i in range(m.rows))
            part, _ = solve(m, e)
            cols.append(part)
        rows = [[cols[j][i] for j in range(m.rows)] for i in range(m.rows)]
        return ProjectiveMap(Matrix.from_rows(rows, f))

    def proj_eq(self, other: "ProjectiveMap") -> bool:
        u = self.matrix.entries
        v = other.matrix.entries
        if len(u) != len(v):
            return False
        return projectively_equal(u, v)

    def is_identity(self) -> bool:
        m = self.matrix
        ident = Matrix.identity(m.field, m.rows)
        return projectively_equal(m.entries, ident.entries)

    def maps_to(self, v: Vector, w: Vector) -> bool:
        return projectively_equal(self.apply(v), w)

    def __eq__(self, other):
        if not isinstance(other, ProjectiveMap):
            return NotImplemented
        return self.proj_eq(other)

    def __hash__(self):
        # hash the projectively normalized entry tuple
        return hash(normalize_projective(self.matrix.entries))

    def __repr__(self):
        return f"ProjectiveMap({self.matrix!r})"


def projective_map_through(sources, targets) -> ProjectiveMap:
    """The unique map of P^1 taking the three sources to the three targets.

    sources and targets are triples of 2-vectors, each triple pairwise
    distinct projectively.
    """
    sources = tuple(sources)
    targets = tuple(targets)
    if len(sources) != 3 or len(targets) != 3:
        raise ValueError("exactly three source and three target points")

    def frame(p1, p2, p3):
        # scale columns p1, p2 so that the matrix sends (1,1) to p3
        d12 = det2(p1, p2)
        d13 = det2(p1, p3)
        d23 = det2(p2, p3)
        if d12.is_zero() or d13.is_zero() or d23.is_zero():
            raise DegeneratePoints("frame points are not pairwise distinct")
        # p3 = l1 p1 + l2 p2 by Cramer
        l1 = d23 / d12
        l2 = -d13 / d12
        f = p1[0].fd
        return Matrix.from_rows([[l1 * p1[0], l2 * p2[0]], [l1 * p1[1], l2 * p2[1]]], f)

    ms = frame(*sources)
    mt = frame(*targets)
    return ProjectiveMap(mt).compose(ProjectiveMap(ms).inverse())


class IndexFamily:
    """A family of index subsets, none a proper subset of another."""

    __slots__ = ("sets",)

    def __init__(self, sets):
        fam = tuple(sorted({tuple(sorted(set(s))) for s in sets}))
        if not fam:
            raise ValueError("family must contain at least one index set")
        for a, b in combinations(fam, 2):
            sa, sb = set(a), set(b)
            if sa < sb or sb < sa:
                raise ValueError(f"{a} and {b} are nested")
        self.sets = fam

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __eq__(self, other):
        if not isinstance(other, IndexFamily):
            return NotImplemented
        return self.sets == other.sets

    def __hash__(self):
        return hash(self.sets)

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets)
        return f"IndexFamily({body})"


def _lin_functional_dot(lam: Vector, t: Vector) -> FieldElement:
    acc = lam[0] * t[0]
    for i in range(1, len(lam)):
        acc = acc + lam[i] * t[i]
    return acc


def translate_solver(a: Arrangement, family) -> Vector | None:
    """Find a translation t making each family set concurrent, no extras.

    Returns t in K^n such that for every L in the family the hyperplanes
    {alpha_p . x = t_p : p in L} share a point and no hyperplane outside
    L passes through that point.  Returns None when no such t exists.
    Raises NoGenericWitness when the field has too few elements to avoid
    the finitely many forbidden subspaces.
    """
    if not isinstance(family, IndexFamily):
        family = IndexFamily(family)
    if not is_generic(a):
        raise NotGeneric("translate solving requires a generic arrangement")
    f = a.field
    k, n = a.k, a.n
    for L in family:
        if len(L) < k + 1:
            raise ValueError(f"family set {L} smaller than k+1 = {k + 1}")
        if any(not 1 <= p <= n for p in L):
            raise ValueError(f"family set {L} has out-of-range indices")

    from .discriminantal import discriminantal_normal

    rows = []
    for L in family:
        for sub in combinations(L, k + 1):
            rows.append(list(discriminantal_normal(a, sub)))
    basis = kernel(Matrix.from_rows(rows, f))
    if not basis:
        return None

    # extra-incidence functionals: for each L and q outside L, the map
    # t -> alpha_q . x_L(t) - t_q where x_L(t) is the common point
    from .linalg import solve

    functionals = []
    for L in family:
        head = L[: k]
        m = Matrix.from_rows([list(a.normal(p)) for p in head], f)
        minv_cols = []
        for j in range(k):
            e = tuple(f.one() if i == j else f.zero() for i in range(k))
            part, _ = solve(m, e)
            minv_cols.append(part)
        for q in a.indices:
            if q in L:
                continue
            lam = [f.zero()] * n
            aq = a.normal(q)
            for j, p in enumerate(head):
                coef = f.zero()
                for i in range(k):
                    coef = coef + aq[i] * minv_cols[j][i]
                lam[p - 1] = coef
            lam[q - 1] = lam[q - 1] - f.one()
            functionals.append(tuple(lam))

    evaluated = []
    for lam in functionals:
        vals = tuple(_lin_functional_dot(lam, b) for b in basis)
        if all(v.is_zero() for v in vals):
            return None  # the extra incidence holds on the whole kernel
        evaluated.append(vals)

    def admissible(coeffs) -> Vector | None:
        # coeffs combine the kernel basis; check every functional
        for vals in evaluated:
            acc = f.zero()
            for c, v in zip(coeffs, vals):
                if c is not None:
                    acc = acc + c * v
            if acc.is_zero():
                return None
        t = [f.zero()] * n
        for c, b in zip(coeffs, basis):
            if c is None:
                continue
            for i in range(n):
                t[i] = t[i] + c * b[i]
        return tuple(t)

    dim = len(basis)
    char = f.characteristic()
    if char == 0:
        one = f.one()
        for i in range(dim):
            coeffs = [None] * dim
            coeffs[i] = one
            t = admissible(coeffs)
            if t is not None:
                return t
        scalars = [f.from_int(c) for c in range(-8, 9)]
        for i, j in combinations(range(dim), 2):
            for ci, cj in product(scalars, repeat=2):
                coeffs = [None] * dim
                coeffs[i], coeffs[j] = ci, cj
                t = admissible(coeffs)
                if t is not None:
                    return t
        raise NoGenericWitness("no small kernel combination avoids the extra incidences")

    # finite field: enumerate the kernel outright
    try:
        elems = list(f.iter_elements())
    except Exception as exc:  # pragma: no cover - descriptor without enumeration
        raise NoGenericWitness("cannot enumerate this field") from exc
    if len(elems) ** dim > 10 ** 6:
        raise NoGenericWitness("kernel too large to enumerate")
    for coeffs in product(elems, repeat=dim):
        if all(c.is_zero() for c in coeffs):
            continue
        t = admissible(list(coeffs))
        if t is not None:
            return t
    raise NoGenericWitness("every kernel vector hits an extra incidence")


def arrangement_to_json(a: Arrangement) -> dict:
    return {
        "field": descriptor_to_json(a.field),
        "k": a.k,
        "normals": [[format_element(e) for e in v] for v in a.normals],
    }


def arrangement_from_json(obj: dict) -> Arrangement:
    if not isinstance(obj, dict):
        raise ValueError("arrangement JSON must be an object")
    for key in ("field", "k", "normals"):
        if key not in obj:
            raise ValueError(f"arrangement JSON is missing {key!r}")
    fd = descriptor_from_json(obj["field"])
    k = obj["k"]
    if not isinstance(k, int):
        raise ValueError("k must be an integer")
    normals = obj["normals"]
    if not isinstance(normals, list) or not all(isinstance(r, list) for r in normals):
        raise ValueError("normals must be a list of lists of element strings")
    rows = [[parse_element(s, fd) for s in r] for r in normals]
    return Arrangement(fd, k, rows)
