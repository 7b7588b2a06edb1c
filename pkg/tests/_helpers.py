"""Shared constructors for the test suite: seeded random arrangements,
candidate-family enumeration, and small number-theory checks."""

from fractions import Fraction
from itertools import combinations

from discarr import (
    Arrangement,
    FourSet,
    Good6Partition,
    QuintFamily,
    Rational,
    is_generic,
    perfect_matchings,
)
from discarr.gallery import is_parameter_generic, parametrized


def rand_fraction(rng, span=12, max_den=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_k2(rng, n=6, tries=400):
    """Generic n lines with small integer normals."""
    q = Rational()
    for _ in range(tries):
        normals = [(rng.randint(-25, 25), rng.randint(-25, 25)) for _ in range(n)]
        if any(u == (0, 0) for u in normals):
            continue
        a = Arrangement(q, 2, normals)
        if is_generic(a):
            return a
    raise RuntimeError("no generic k=2 sample found")


def imposed_k2(rng, tries=400):
    """Six lines with slopes (inf, 0, 1, l4, l5, l6) where l6 is chosen
    so one pairing condition holds exactly."""
    q = Rational()
    for _ in range(tries):
        l4 = rand_fraction(rng, span=9, max_den=4)
        l5 = rand_fraction(rng, span=9, max_den=4)
        if l4 in (0, 1) or l5 in (0, 1) or l4 == l5:
            continue
        l6 = l4 * (l5 - 1) / (l4 - 1)
        lams = (l4, l5, l6)
        if l6 in (0, 1) or len(set(lams)) < 3:
            continue
        a = Arrangement(q, 2, ((1, 0), (0, 1), (1, 1),
                               (l4, 1), (l5, 1), (l6, 1)))
        if is_generic(a):
            return a
    raise RuntimeError("no imposed k=2 sample found")


def random_k3(rng, tries=400):
    q = Rational()
    for _ in range(tries):
        w, x, y, z = (rand_fraction(rng, span=9, max_den=4) for _ in range(4))
        if is_parameter_generic(q, w, x, y, z):
            return parametrized(q, w, x, y, z)
    raise RuntimeError("no generic k=3 sample found")


def imposed_k3(rng, tries=400):
    """Parametrized planes with z = x*y, making one pairing condition
    hold exactly while staying generic."""
    q = Rational()
    for _ in range(tries):
        w, x, y = (rand_fraction(rng, span=9, max_den=4) for _ in range(3))
        z = x * y
        if is_parameter_generic(q, w, x, y, z):
            return parametrized(q, w, x, y, z)
    raise RuntimeError("no imposed k=3 sample found")


# ---------------------------------------------------------------------------
# candidate families (detected or not), for the rank-equivalence sweeps

def matching_foursets(pairs):
    """The complementary pair of 4-sets determined by three index pairs."""
    (a1, b1), (a2, b2), (a3, b3) = sorted(tuple(sorted(p)) for p in pairs)
    return (FourSet(((a1, a2, a3), (a1, b2, b3), (b1, a2, b3), (b1, b2, a3))),
            FourSet(((b1, b2, b3), (b1, a2, a3), (a1, b2, a3), (a1, a2, b3))))


def fourset_candidates(indices):
    """All 4-sets over every 6-subset of the given indices."""
    out = []
    for subset in combinations(sorted(indices), 6):
        for pairs in perfect_matchings(subset):
            out.extend(matching_foursets(pairs))
    return out


def quint_candidates(indices):
    """All canonical five-triple families over every 7-subset."""
    out = []
    for subset in combinations(sorted(indices), 7):
        for center in subset:
            rim = [p for p in subset if p != center]
            for pairs in perfect_matchings(rim):
                (x1, y1), (x2, y2), (x3, y3) = pairs
                for c2, d2 in ((x2, y2), (y2, x2)):
                    for c3, d3 in ((x3, y3), (y3, x3)):
                        out.append(QuintFamily(center, (x1, c2, c3), (y1, d2, d3)))
    return out


def good6_candidates(indices):
    out = []
    for subset in combinations(sorted(indices), 6):
        for pairs in perfect_matchings(subset):
            out.append(Good6Partition(pairs))
    return out


# ---------------------------------------------------------------------------
# rationality checks used by the classification certificate

def is_rational_square(q: Fraction) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    for part in (q.numerator, q.denominator):
        r = int(part ** 0.5)
        while r * r > part:
            r -= 1
        while (r + 1) * (r + 1) <= part:
            r += 1
        if r * r != part:
            return False
    return True


def monic_quadratic_irreducible_over_q(c1, c0) -> bool:
    """x^2 + c1 x + c0 with integer coefficients: irreducible over the
    rationals iff the discriminant is not a perfect square (equivalently,
    by Gauss, iff there is no integer root)."""
    disc = Fraction(c1) ** 2 - 4 * Fraction(c0)
    return not is_rational_square(disc)
