"""Enumeration of finite groups and index-based group arithmetic.

A group is materialized as a list of concrete elements (permutations or
matrices over a prime field) discovered breadth-first from the identity by
right-multiplication with a deduplicated, canonically sorted generator list.
Element 0 is always the identity and the discovery order is deterministic, so
two runs over the same generators produce identical tables.

After enumeration all arithmetic is done on element indices.  Product rows are
memoized lazily; closures that would touch many rows once (conjugation sweeps,
subgroup generation) fall back to direct element arithmetic, which costs two
dictionary lookups per step instead of an O(|G|) row fill.

The named constructors (symmetric, alternating, cyclic, dihedral, orthogonal)
check their known order against the cap before enumerating anything, so a
request like Sym(50) fails fast instead of exhausting memory.
"""

from __future__ import annotations

from collections import Counter

from .elements import GroupElement, Permutation, PrimeFieldMatrix
from .errors import (
    CapExceededError,
    IncompatibleGeneratorsError,
    SingularMatrixError,
    UnsupportedModulusError,
)

DEFAULT_CAP = 2_000_000


def _element_closure(gens: list, identity) -> set:
    """Closure of {identity} under right multiplication by gens."""
    members = {identity}
    queue = [identity]
    while queue:
        x = queue.pop()
        for g in gens:
            y = x * g
            if y not in members:
                members.add(y)
                queue.append(y)
    return members


class FiniteGroup:
    """A fully enumerated finite group; element 0 is the identity."""

    def __init__(self, elements: list, generator_indices):
        self.elements: list[GroupElement] = list(elements)
        self.index: dict[GroupElement, int] = {
            g: i for i, g in enumerate(self.elements)
        }
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements in group table")
        self.generator_indices: tuple[int, ...] = tuple(generator_indices)
        self._rows: list[list[int] | None] = [None] * len(self.elements)
        self._inverses: list[int] | None = None
        self._orders: list[int] = [0] * len(self.elements)

    @classmethod
    def from_closed_elements(cls, elements: list) -> "FiniteGroup":
        """Wrap an already-closed element list (identity first) as a group.

        A generating set is chosen greedily: walk the list in order and keep
        each element not yet generated by the ones kept so far.  The walk is
        deterministic, so equal input lists give equal generator choices.
        """
        elements = list(elements)
        if not elements:
            raise ValueError("empty element list")
        identity = elements[0].identity_element()
        if elements[0] != identity:
            raise ValueError("element 0 must be the identity")
        gens: list = []
        covered = {identity}
        for x in elements[1:]:
            if x not in covered:
                gens.append(x)
                covered = _element_closure(gens, identity)
        if covered != set(elements):
            raise ValueError("element list is not closed under multiplication")
        group = cls(elements, [])
        group.generator_indices = tuple(group.index[g] for g in gens)
        return group

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    def _check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < len(self.elements):
            raise IndexError(
                f"element index {i!r} outside 0..{len(self.elements) - 1}"
            )

    def mult(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j]; memoizes the full row i."""
        row = self._rows[i]
        if row is None:
            x = self.elements[i]
            index = self.index
            row = [index[x * y] for y in self.elements]
            self._rows[i] = row
        return row[j]

    def inverse(self, i: int) -> int:
        if self._inverses is None:
            index = self.index
            self._inverses = [index[g.inverse()] for g in self.elements]
        return self._inverses[i]

    def conjugate(self, i: int, g: int) -> int:
        """Index of g⁻¹ x g for x = elements[i]."""
        ge = self.elements[g]
        inv = self.elements[self.inverse(g)]
        return self.index[inv * self.elements[i] * ge]

    def element_order(self, i: int) -> int:
        """Least k ≥ 1 with elements[i]^k = identity."""
        self._check_index(i)
        if self._orders[i] == 0:
            x = self.elements[i]
            power = x
            k = 1
            while not power.is_identity():
                power = power * x
                k += 1
            self._orders[i] = k
        return self._orders[i]

    def centralizer(self, i: int) -> set[int]:
        """Indices of all elements commuting with elements[i]."""
        self._check_index(i)
        x = self.elements[i]
        return {j for j, y in enumerate(self.elements) if x * y == y * x}

    def subgroup_generated(self, seed) -> set[int]:
        """Index set of the subgroup generated by the seed indices.

        Right-multiplication closure suffices: a finite set of invertible
        elements closed under products and containing the identity is a group.
        """
        gen_indices = sorted(set(seed))
        for s in gen_indices:
            self._check_index(s)
        gens = [self.elements[s] for s in gen_indices]
        index = self.index
        members = {0}
        queue = [0]
        while queue:
            x = self.elements[queue.pop()]
            for g in gens:
                y = index[x * g]
                if y not in members:
                    members.add(y)
                    queue.append(y)
        return members

    def derived_subgroup(self) -> set[int]:
        """Index set of the commutator subgroup.

        Seeded by commutators of the stored generators; the derived subgroup
        is the normal closure of that seed, computed by alternating subgroup
        closure with conjugation by generators until stable.
        """
        gens = self.generator_indices or (0,)
        seed = {0}
        for a in gens:
            for b in gens:
                ia, ib = self.inverse(a), self.inverse(b)
                seed.add(self.mult(self.mult(self.mult(ia, ib), a), b))
        closure_seed = sorted(seed)
        while True:
            members = self.subgroup_generated(closure_seed)
            grew = False
            for h in sorted(members):
                for g in gens:
                    c = self.conjugate(h, g)
                    if c not in members:
                        closure_seed.append(c)
                        grew = True
            if not grew:
                return members

    def subgroup(self, indices) -> "FiniteGroup":
        """Materialize a multiplication-closed index set as its own group."""
        idx = sorted(set(indices))
        for i in idx:
            self._check_index(i)
        if not idx or idx[0] != 0:
            raise ValueError("subgroup must contain the identity (index 0)")
        return FiniteGroup.from_closed_elements([self.elements[i] for i in idx])

    def fingerprint(self) -> tuple:
        """(order, sorted class sizes, sorted (element order, count) pairs)."""
        from .conjugacy import conjugacy_classes

        table = conjugacy_classes(self)
        sizes = tuple(sorted(c.size for c in table.classes))
        profile = Counter(self.element_order(i) for i in range(self.order))
        return (self.order, sizes, tuple(sorted(profile.items())))

    def __repr__(self):
        kind = type(self.elements[0]).__name__
        return f"FiniteGroup(order={self.order}, realization={kind})"


def closure_enumerate(gens, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Enumerate the group generated by gens, breadth-first from the identity."""
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator required")
    first = gens[0]
    for g in gens[1:]:
        if not first.compatible_with(g):
            raise IncompatibleGeneratorsError(
                f"incompatible generators: {first!r} vs {g!r}"
            )
    if isinstance(first, PrimeFieldMatrix):
        for g in gens:
            if g.determinant() == 0:
                raise SingularMatrixError(f"generator is singular mod {g.p}: {g!r}")
    unique = sorted({g.encode(): g for g in gens}.values(), key=lambda g: g.encode())
    identity = first.identity_element()
    elements = [identity]
    index = {identity: 0}
    qi = 0
    while qi < len(elements):
        x = elements[qi]
        qi += 1
        for g in unique:
            y = x * g
            if y not in index:
                if len(elements) >= cap:
                    raise CapExceededError(
                        f"closure exceeded the cap of {cap} elements"
                    )
                index[y] = len(elements)
                elements.append(y)
    group = FiniteGroup(elements, [index[g] for g in unique])
    return group


def so3_enumerate(p: int) -> FiniteGroup:
    """All 3×3 matrices M over F_p with M·Mᵀ = I and det M = 1.

    Exhaustive scan in row-major lexicographic order with row-level pruning;
    the surviving matrices appear in exactly the order a naive scan of all p⁹
    candidates would produce.  The identity is then moved to the front.
    """
    if p not in (3, 5, 7):
        raise UnsupportedModulusError(
            f"supported moduli are 3, 5, 7 (got {p})"
        )
    rng = range(p)
    vectors = [(a, b, c) for a in rng for b in rng for c in rng]

    def dot(u, v):
        return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % p

    unit = [v for v in vectors if dot(v, v) == 1]
    mats = []
    for r1 in unit:
        for r2 in unit:
            if dot(r1, r2) != 0:
                continue
            for r3 in vectors:
                if dot(r3, r3) != 1 or dot(r1, r3) or dot(r2, r3):
                    continue
                det = (
                    r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
                    - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
                    + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0])
                ) % p
                if det == 1:
                    mats.append(PrimeFieldMatrix(p, (r1, r2, r3)))
    ident = PrimeFieldMatrix.identity(p, 3)
    mats.remove(ident)
    mats.insert(0, ident)
    return FiniteGroup.from_closed_elements(mats)


def _check_known_order(order: int, label: str, cap: int) -> None:
    if order > cap:
        raise CapExceededError(f"{label} has order {order}, exceeding cap {cap}")


def _check_factorial_cap(n: int, divisor: int, label: str, cap: int) -> None:
    """Reject when n!/divisor > cap, without ever computing a huge factorial."""
    product = 1
    for k in range(2, n + 1):
        product *= k
        if product > cap * divisor:
            raise CapExceededError(f"{label} has order exceeding cap {cap}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def sym_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Symmetric group on {0, ..., n-1}."""
    if n < 1:
        raise ValueError(f"degree must be ≥ 1, got {n}")
    _check_factorial_cap(n, 1, f"Sym({n})", cap)
    if n == 1:
        gens = [Permutation.identity(1)]
    elif n == 2:
        gens = [Permutation((1, 0))]
    else:
        gens = [
            Permutation.from_cycles(n, [(0, 1)]),
            Permutation.from_cycles(n, [tuple(range(n))]),
        ]
    return closure_enumerate(gens, cap)


def alt_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Alternating group on {0, ..., n-1}."""
    if n < 1:
        raise ValueError(f"degree must be ≥ 1, got {n}")
    _check_factorial_cap(n, 2, f"Alt({n})", cap)
    if n <= 2:
        gens = [Permutation.identity(n)]
    elif n == 3:
        gens = [Permutation.from_cycles(3, [(0, 1, 2)])]
    elif n % 2 == 1:
        gens = [
            Permutation.from_cycles(n, [(0, 1, 2)]),
            Permutation.from_cycles(n, [tuple(range(n))]),
        ]
    else:
        # even n: the full n-cycle is odd, use an (n-1)-cycle on 1..n-1
        gens = [
            Permutation.from_cycles(n, [(0, 1, 2)]),
            Permutation.from_cycles(n, [tuple(range(1, n))]),
        ]
    return closure_enumerate(gens, cap)


def cyc_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Cyclic group of order n, as the n-cycle on {0, ..., n-1}."""
    if n < 1:
        raise ValueError(f"order must be ≥ 1, got {n}")
    _check_known_order(n, f"Cyc({n})", cap)
    if n == 1:
        gens = [Permutation.identity(1)]
    else:
        gens = [Permutation.from_cycles(n, [tuple(range(n))])]
    return closure_enumerate(gens, cap)


def dih_group(n: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Dihedral group of order 2n."""
    if n < 1:
        raise ValueError(f"parameter must be ≥ 1, got {n}")
    _check_known_order(2 * n, f"Dih({n})", cap)
    if n == 1:
        gens = [Permutation((1, 0))]
    elif n == 2:
        # Klein four group needs degree 4 to realize both commuting involutions
        gens = [
            Permutation.from_cycles(4, [(0, 1)]),
            Permutation.from_cycles(4, [(2, 3)]),
        ]
    else:
        rotation = Permutation(tuple((i + 1) % n for i in range(n)))
        reflection = Permutation(tuple((n - i) % n for i in range(n)))
        gens = [rotation, reflection]
    return closure_enumerate(gens, cap)


def perm_group(degree: int, generator_cycles, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Group generated by explicit permutations, each given as cycle lists."""
    if degree < 1:
        raise ValueError(f"degree must be ≥ 1, got {degree}")
    gens = [Permutation.from_cycles(degree, cycles) for cycles in generator_cycles]
    if not gens:
        gens = [Permutation.identity(degree)]
    return closure_enumerate(gens, cap)


def mat_group(p: int, n: int, flat_matrices, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Group generated by explicit n×n matrices over F_p (row-major entries)."""
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p >= 1 << 16:
        raise ValueError(f"modulus {p} too large (must be < 2^16)")
    if n < 1:
        raise ValueError(f"dimension must be ≥ 1, got {n}")
    gens = [PrimeFieldMatrix.from_flat(p, n, flat) for flat in flat_matrices]
    if not gens:
        gens = [PrimeFieldMatrix.identity(p, n)]
    return closure_enumerate(gens, cap)


def omega3_group(p: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Derived subgroup of the 3-dimensional orthogonal group over F_p."""
    _check_known_order(p * (p * p - 1) // 2, f"Omega3({p})", cap)
    full = so3_enumerate(p)
    return full.subgroup(full.derived_subgroup())


def so3_group(p: int, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Cap-checked wrapper around so3_enumerate."""
    _check_known_order(p * (p * p - 1), f"SO3({p})", cap)
    return so3_enumerate(p)
