"""Counting and enumerating class-tuple solutions of x₁x₂⋯x_s = 1.

Two independent routes produce every count: the character-theoretic sum
(∏|C_i|/|G|)·Σ_χ ∏χ(g_i)/χ(1)^{s−2}, and an exhaustive scan that iterates
the s−1 smallest classes and solves for the member of the largest.  Neither
route calls the other; their agreement is a standing test invariant.

Solution sets are decomposed into orbits under simultaneous conjugation,
g·(x₁,…,x_s) = (g⁻¹x₁g, …, g⁻¹x_sg); a tuple of classes is rigid when the
solution set is nonempty and forms a single orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from .chartab import CharacterTable
from .conjugacy import ClassTable, classes_of_element_order
from .cyclotomic import Cyclotomic
from .errors import CapExceededError, NonIntegerResultError
from .groups import FiniteGroup

DEFAULT_ITERATION_CAP = 100_000_000


@dataclass(frozen=True)
class SolutionSet:
    class_ids: tuple[int, ...]
    solutions: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class Orbit:
    representative: tuple[int, ...]
    size: int
    stabilizer_order: int


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[Orbit, ...]
    total: int


@dataclass(frozen=True)
class RigidityVerdict:
    """Empty, Rigid(stabilizer order), or NotRigid(number of orbits)."""

    kind: str
    stabilizer_order: int | None = None
    num_orbits: int = 0

    @classmethod
    def empty(cls) -> "RigidityVerdict":
        return cls(kind="empty")

    @classmethod
    def rigid(cls, stabilizer_order: int) -> "RigidityVerdict":
        return cls(kind="rigid", stabilizer_order=stabilizer_order, num_orbits=1)

    @classmethod
    def not_rigid(cls, num_orbits: int) -> "RigidityVerdict":
        return cls(kind="not-rigid", num_orbits=num_orbits)


def _check_ids(CTorT, class_ids) -> tuple[int, ...]:
    ids = tuple(class_ids)
    if len(ids) < 2:
        raise ValueError(f"need at least 2 classes, got {len(ids)}")
    return ids


def frobenius_count(CT: CharacterTable, class_ids) -> int:
    """Number of tuples (x₁,…,x_s) ∈ C₁×⋯×C_s with product 1, by characters."""
    ids = _check_ids(CT, class_ids)
    r = CT.num_classes
    for i in ids:
        if not 0 <= i < r:
            raise IndexError(f"class id {i} outside 0..{r - 1}")
    s = len(ids)
    total = Cyclotomic.from_rational(0)
    for row in CT.rows:
        term = Cyclotomic.from_rational(1)
        for i in ids:
            term = term * row.values[i]
        total = total + term / Fraction(row.degree ** (s - 2))
    sizes_product = 1
    for i in ids:
        sizes_product *= CT.class_sizes[i]
    scaled = total * Fraction(sizes_product, CT.group_order)
    if not scaled.is_rational():
        raise NonIntegerResultError(f"character sum is irrational for tuple {ids}")
    value = scaled.as_rational()
    if value.denominator != 1 or value < 0:
        raise NonIntegerResultError(
            f"character sum gives non-integer {value} for tuple {ids}"
        )
    return int(value)


def class_algebra_constant(CT: CharacterTable, x: int, y: int, z: int) -> int:
    """a_{xyz} = #{(a, b) ∈ C_x × C_y : a·b·z₀ = 1} for the representative z₀.

    Computed by its own character sum (|C_x||C_y| / |G|)·Σ_χ χ(x)χ(y)χ(z)/χ(1)
    rather than by rescaling frobenius_count, so the standing identity
    frobenius_count(x, y, z) = |C_z| · a_{xyz} is a real cross-check.
    """
    r = CT.num_classes
    for i in (x, y, z):
        if not 0 <= i < r:
            raise IndexError(f"class id {i} outside 0..{r - 1}")
    total = Cyclotomic.from_rational(0)
    for row in CT.rows:
        term = row.values[x] * row.values[y] * row.values[z]
        total = total + term / Fraction(row.degree)
    scale = Fraction(CT.class_sizes[x] * CT.class_sizes[y], CT.group_order)
    scaled = total * scale
    if not scaled.is_rational():
        raise NonIntegerResultError(f"irrational constant for ({x}, {y}, {z})")
    value = scaled.as_rational()
    if value.denominator != 1 or value < 0:
        raise NonIntegerResultError(
            f"non-integer constant {value} for ({x}, {y}, {z})"
        )
    return int(value)


def enumerate_solutions(
    G: FiniteGroup,
    T: ClassTable,
    class_ids,
    cap: int = DEFAULT_ITERATION_CAP,
) -> SolutionSet:
    """Exhaustive scan; iterates all classes but the largest, solves for it."""
    ids = _check_ids(T, class_ids)
    for i in ids:
        if not 0 <= i < len(T.classes):
            raise IndexError(f"class id {i} outside 0..{len(T.classes) - 1}")
    s = len(ids)
    sizes = [T.classes[i].size for i in ids]
    m = sizes.index(max(sizes))
    iterations = 1
    for pos, size in enumerate(sizes):
        if pos != m:
            iterations *= size
    if iterations > cap:
        raise CapExceededError(
            f"scan needs {iterations} iterations, exceeding cap {cap}"
        )
    positions = [pos for pos in range(s) if pos != m]
    member_lists = [T.classes[ids[pos]].members for pos in positions]
    target = ids[m]
    class_of = T.class_of
    solutions = []
    for combo in iter_product(*member_lists):
        assigned: list[int] = [0] * s
        for pos, x in zip(positions, combo):
            assigned[pos] = x
        pre = 0
        for pos in range(m):
            pre = G.mult(pre, assigned[pos])
        suf = 0
        for pos in range(m + 1, s):
            suf = G.mult(suf, assigned[pos])
        if m == s - 1:
            xm = G.inverse(pre)
        elif m == 0:
            xm = G.inverse(suf)
        else:
            xm = G.mult(G.inverse(pre), G.inverse(suf))
        if class_of[xm] == target:
            assigned[m] = xm
            solutions.append(tuple(assigned))
    solutions.sort()
    return SolutionSet(class_ids=ids, solutions=tuple(solutions))


def orbit_decomposition(G: FiniteGroup, S: SolutionSet) -> OrbitDecomposition:
    """Orbits under simultaneous conjugation; representatives are least tuples."""
    gens = G.generator_indices or (0,)
    remaining = set(S.solutions)
    orbits = []
    # ascending scan: the first unconsumed solution is the least of its orbit
    for seed in S.solutions:
        if seed not in remaining:
            continue
        orbit = {seed}
        queue = [seed]
        while queue:
            sol = queue.pop()
            for g in gens:
                image = tuple(G.conjugate(x, g) for x in sol)
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        if G.order % len(orbit) != 0:
            raise RuntimeError("orbit size does not divide the group order")
        orbits.append(
            Orbit(
                representative=seed,
                size=len(orbit),
                stabilizer_order=G.order // len(orbit),
            )
        )
        remaining -= orbit
    return OrbitDecomposition(orbits=tuple(orbits), total=len(S.solutions))


def rigidity_verdict(
    G: FiniteGroup,
    T: ClassTable,
    CT: CharacterTable,
    class_ids,
    cap: int = DEFAULT_ITERATION_CAP,
) -> RigidityVerdict:
    """Empty / Rigid / NotRigid for one class tuple."""
    count = frobenius_count(CT, class_ids)
    if count == 0:
        return RigidityVerdict.empty()
    solutions = enumerate_solutions(G, T, class_ids, cap)
    if len(solutions) != count:
        raise RuntimeError(
            f"character count {count} disagrees with scan {len(solutions)}"
        )
    decomposition = orbit_decomposition(G, solutions)
    if len(decomposition.orbits) == 1:
        return RigidityVerdict.rigid(decomposition.orbits[0].stabilizer_order)
    return RigidityVerdict.not_rigid(len(decomposition.orbits))


def generated_subgroup_report(G: FiniteGroup, triple) -> tuple[int, tuple]:
    """Order and fingerprint of the subgroup generated by the first two entries."""
    entries = tuple(triple)
    if len(entries) < 2:
        raise ValueError("need at least two tuple entries")
    indices = G.subgroup_generated(entries[:2])
    subgroup = G.subgroup(indices)
    return (subgroup.order, subgroup.fingerprint())


@dataclass(frozen=True)
class CensusOrbit:
    representative: tuple[int, ...]
    size: int
    stabilizer_order: int
    subgroup_order: int
    subgroup_fingerprint: tuple


@dataclass(frozen=True)
class AbcCensus:
    orders: tuple[int, int, int]
    per_tuple: tuple[tuple[tuple[int, int, int], int], ...]
    total: int
    orbits: tuple[CensusOrbit, ...]


def abc_census(
    G: FiniteGroup,
    T: ClassTable,
    a: int,
    b: int,
    c: int,
    cap: int = DEFAULT_ITERATION_CAP,
) -> AbcCensus:
    """Census of all (a, b, c)-triples: per-tuple counts, orbits, generation."""
    xs = classes_of_element_order(T, a)
    ys = classes_of_element_order(T, b)
    zs = classes_of_element_order(T, c)
    union: list[tuple[int, ...]] = []
    per_tuple = []
    for ids in iter_product(xs, ys, zs):
        sols = enumerate_solutions(G, T, ids, cap)
        per_tuple.append((ids, len(sols)))
        union.extend(sols.solutions)
    union.sort()
    union_set = SolutionSet(class_ids=(), solutions=tuple(union))
    decomposition = orbit_decomposition(G, union_set)
    orbits = []
    for orbit in decomposition.orbits:
        order, fp = generated_subgroup_report(G, orbit.representative)
        orbits.append(
            CensusOrbit(
                representative=orbit.representative,
                size=orbit.size,
                stabilizer_order=orbit.stabilizer_order,
                subgroup_order=order,
                subgroup_fingerprint=fp,
            )
        )
    return AbcCensus(
        orders=(a, b, c),
        per_tuple=tuple(per_tuple),
        total=len(union),
        orbits=tuple(orbits),
    )
