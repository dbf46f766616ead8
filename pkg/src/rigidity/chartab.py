"""Exact complex character tables via class-matrix eigenspace splitting.

The class sums K_j of a finite group span its class algebra, with structure
constants a_{jik} = #{(x, y) ∈ C_j × C_i : xy = rep_k}.  For every
irreducible character χ the scaled values ω(k) = |C_k|·χ(g_k)/χ(1) form a
simultaneous right eigenvector of all structure-constant matrices:
(A_j · ω)_i = ω(j)·ω(i).  The table is recovered in five exact steps:

1. count the integer matrices A_j;
2. pick a prime p ≡ 1 (mod exponent) with p > 2√|G|.  Such p cannot divide
   |G|: a prime divisor q of |G| divides the exponent (Cauchy), forcing
   p ≡ 1 (mod q), so the class algebra over F_p is semisimple and F_p holds
   every needed root of unity;
3. split F_p^r into common eigenspaces by the matrices A_j in increasing j,
   eigenvalues scanned ascending; each surviving line, scaled to value 1 at
   the identity class, is one ω-vector mod p;
4. recover each degree from d² = |G| / Σ_k ω(k)·ω(k')/|C_k| (k' the inverse
   class), unique as an integer ≤ √|G| < p/2;
5. lift each value by the inverse discrete Fourier transform over power-map
   classes: with η a primitive o-th root mod p (o the element order), the
   multiplicity of ζ_o^t in the representation at g is
   m_t = (1/o)·Σ_s χ(g^s)·η^{−ts} mod p, and χ(g) = Σ_t m_t·ζ_o^t.

The root η is derived from the least primitive e-th root λ mod p, so output
is reproducible; a different λ would relabel the table by a global Galois
automorphism, which every consumer here is invariant under.  Any internal
inconsistency raises SplitFailure and the next admissible prime is tried, at
most three retries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .conjugacy import ClassTable
from .cyclotomic import Cyclotomic, _prime_factors
from .errors import SplitFailureError
from .groups import FiniteGroup, _is_prime


@dataclass(frozen=True)
class ClassMatrix:
    """Structure constants a_{jik} for one fixed class j; entries[i][k]."""

    j: int
    entries: tuple[tuple[int, ...], ...]


def class_matrices(T: ClassTable, G: FiniteGroup) -> list[ClassMatrix]:
    """Count all structure-constant matrices exactly."""
    r = len(T.classes)
    reps = [G.elements[c.representative] for c in T.classes]
    out = []
    for c in T.classes:
        entries = [[0] * r for _ in range(r)]
        for x in c.members:
            # xy = z  ⟺  y = x⁻¹z; tally the class y lands in
            xi = G.elements[G.inverse(x)]
            for k, z in enumerate(reps):
                entries[T.class_of[G.index[xi * z]]][k] += 1
        out.append(ClassMatrix(j=c.id, entries=tuple(tuple(row) for row in entries)))
    return out


def _admissible_primes(exponent: int, group_order: int):
    """Primes ≡ 1 mod exponent with p > 2√(group_order), ascending."""
    four_n = 4 * group_order
    candidate = 2 if exponent == 1 else exponent + 1
    for _ in range(1_000_000):
        if candidate > 1 and _is_prime(candidate) and candidate * candidate > four_n:
            yield candidate
        candidate += exponent if exponent > 1 else 1
    raise RuntimeError("prime search exhausted its iteration bound")


def dixon_prime(exponent: int, group_order: int) -> int:
    """Least admissible working prime for the splitting step."""
    if exponent < 1:
        raise ValueError(f"exponent must be ≥ 1, got {exponent}")
    return next(_admissible_primes(exponent, group_order))


@dataclass(frozen=True)
class Character:
    """One table row: degree plus one value per class id."""

    degree: int
    values: tuple[Cyclotomic, ...]


@dataclass(frozen=True)
class CharacterTable:
    group_order: int
    class_sizes: tuple[int, ...]
    class_orders: tuple[int, ...]
    rows: tuple[Character, ...]
    # set only by the symmetric-group oracle, for column alignment by cycle type
    class_cycle_types: tuple[tuple[int, ...], ...] | None = None

    @property
    def num_classes(self) -> int:
        return len(self.class_sizes)


def _apply(matrix, vec, p):
    return tuple(sum(a * x for a, x in zip(row, vec)) % p for row in matrix)


def _coordinates(basis, images, p):
    """Coordinates of each image in terms of basis, all solved at once."""
    r = len(basis[0])
    m = len(basis)
    width = m + len(images)
    aug = [
        [basis[b][i] for b in range(m)] + [img[i] for img in images]
        for i in range(r)
    ]
    row = 0
    pivot_rows = []
    for col in range(m):
        pivot = next((i for i in range(row, r) if aug[i][col] % p), None)
        if pivot is None:
            raise SplitFailureError("degenerate subspace basis")
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = pow(aug[row][col], -1, p)
        aug[row] = [x * inv % p for x in aug[row]]
        for i in range(r):
            if i != row and aug[i][col] % p:
                f = aug[i][col]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[row])]
        pivot_rows.append(row)
        row += 1
    for i in range(row, r):
        if any(aug[i][m:]):
            raise SplitFailureError("image escapes the invariant subspace")
    return [[aug[pr][m + idx] for pr in pivot_rows] for idx in range(len(images))]


def _kernel_mod(matrix, p):
    """Deterministic kernel basis of a square matrix over F_p."""
    m = len(matrix)
    mat = [list(row) for row in matrix]
    pivots = {}
    row = 0
    for col in range(m):
        pivot = next((i for i in range(row, m) if mat[i][col] % p), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = pow(mat[row][col], -1, p)
        mat[row] = [x * inv % p for x in mat[row]]
        for i in range(m):
            if i != row and mat[i][col] % p:
                f = mat[i][col]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[row])]
        pivots[col] = row
        row += 1
    basis = []
    for free in range(m):
        if free in pivots:
            continue
        vec = [0] * m
        vec[free] = 1
        for col, prow in pivots.items():
            vec[col] = (-mat[prow][free]) % p
        basis.append(tuple(vec))
    return basis


def _split_space(basis, A, p):
    """Split an invariant subspace into eigenspaces of A, eigenvalues ascending."""
    m = len(basis)
    images = [_apply(A, v, p) for v in basis]
    coords = _coordinates(basis, images, p)
    # restriction acts on V-coordinates x by x ↦ Mt·x with Mt[i][b] = coords[b][i]
    pieces = []
    found = 0
    for lam in range(p):
        if found == m:
            break
        shifted = [
            [(coords[b][i] - (lam if i == b else 0)) % p for b in range(m)]
            for i in range(m)
        ]
        ker = _kernel_mod(shifted, p)
        if not ker:
            continue
        ambient = [
            tuple(sum(x[b] * basis[b][i] for b in range(m)) % p for i in range(len(basis[0])))
            for x in ker
        ]
        pieces.append(ambient)
        found += len(ker)
    if found != m:
        raise SplitFailureError("matrix not diagonalizable over this prime")
    return pieces


def _least_primitive_root(p: int, e: int) -> int:
    """Least λ in [1, p) of multiplicative order exactly e mod p."""
    if e == 1:
        return 1
    divisors = _prime_factors(e)
    for lam in range(2, p):
        if pow(lam, e, p) == 1 and all(pow(lam, e // q, p) != 1 for q in divisors):
            return lam
    raise SplitFailureError(f"no primitive {e}-th root mod {p}")


def _attempt(G: FiniteGroup, T: ClassTable, int_mats, p: int, e: int) -> CharacterTable:
    r = len(T.classes)
    mats_mod = [
        tuple(tuple(x % p for x in row) for row in M.entries) for M in int_mats
    ]
    spaces = [[tuple(1 if i == k else 0 for i in range(r)) for k in range(r)]]
    for j in range(1, r):
        if all(len(b) == 1 for b in spaces):
            break
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
            else:
                new_spaces.extend(_split_space(basis, mats_mod[j], p))
        spaces = new_spaces
    if any(len(b) != 1 for b in spaces):
        raise SplitFailureError(f"{sum(1 for b in spaces if len(b) > 1)} eigenspaces left unsplit")

    vectors = []
    for (v,) in spaces:
        if v[0] == 0:
            raise SplitFailureError("eigenvector vanishes at the identity class")
        scale = pow(v[0], -1, p)
        vectors.append(tuple(x * scale % p for x in v))

    sizes = [c.size for c in T.classes]
    inv_sizes = [pow(s, -1, p) for s in sizes]
    order = G.order
    order_mod = order % p
    degrees = []
    for w in vectors:
        s_val = sum(w[k] * w[T.inverse_class[k]] * inv_sizes[k] for k in range(r)) % p
        if s_val == 0:
            raise SplitFailureError("degree denominator vanished")
        d_sq = order_mod * pow(s_val, -1, p) % p
        degree = next(
            (d for d in range(1, isqrt(order) + 1) if d * d % p == d_sq), None
        )
        if degree is None:
            raise SplitFailureError("no integer degree matches")
        degrees.append(degree)
    if sum(d * d for d in degrees) != order:
        raise SplitFailureError("degree squares do not sum to the group order")

    lam_root = _least_primitive_root(p, e)
    power_classes = []
    for c in T.classes:
        o = T.element_order_of_class[c.id]
        x = G.elements[c.representative]
        acc = G.elements[0]
        pcs = []
        for _ in range(o):
            pcs.append(T.class_of[G.index[acc]])
            acc = acc * x
        power_classes.append(pcs)

    rows = []
    for w, degree in zip(vectors, degrees):
        values = []
        for k in range(r):
            pcs = power_classes[k]
            o = len(pcs)
            eta = pow(lam_root, e // o, p)
            eta_pow = [1] * o
            for i in range(1, o):
                eta_pow[i] = eta_pow[i - 1] * eta % p
            inv_o = pow(o, -1, p)
            theta = [degree * w[pc] * inv_sizes[pc] % p for pc in pcs]
            mults = {}
            for t in range(o):
                m = sum(theta[s] * eta_pow[(-t * s) % o] for s in range(o)) * inv_o % p
                if m > degree:
                    raise SplitFailureError("root multiplicity exceeds the degree")
                if m:
                    mults[t] = m
            if sum(mults.values()) != degree:
                raise SplitFailureError("root multiplicities do not sum to the degree")
            for s in range(o):
                # lifted value must reduce back to the eigenvector data
                if sum(m * eta_pow[(t * s) % o] for t, m in mults.items()) % p != theta[s]:
                    raise SplitFailureError("lifted value does not reduce to mod-p data")
            values.append(Cyclotomic.from_exponent_map(o, mults))
        rows.append(Character(degree=degree, values=tuple(values)))

    rows.sort(key=lambda row: (row.degree, tuple(v.sort_key() for v in row.values)))
    return CharacterTable(
        group_order=order,
        class_sizes=tuple(sizes),
        class_orders=tuple(T.element_order_of_class),
        rows=tuple(rows),
    )


def character_table(G: FiniteGroup, T: ClassTable) -> CharacterTable:
    """Exact character table; retries with the next prime on a failed split."""
    exponent = lcm(*T.element_order_of_class)
    mats = class_matrices(T, G)
    primes = _admissible_primes(exponent, G.order)
    failure: SplitFailureError | None = None
    for _ in range(4):
        p = next(primes)
        try:
            return _attempt(G, T, mats, p, exponent)
        except SplitFailureError as exc:
            failure = exc
    raise SplitFailureError("splitting failed for four admissible primes") from failure


@dataclass(frozen=True)
class OrthogonalityReport:
    passed: bool
    failure: str | None


def verify_orthogonality(ct: CharacterTable) -> OrthogonalityReport:
    """Exact first and second orthogonality relations, first violation reported."""
    order = Fraction(ct.group_order)
    rows = ct.rows
    r = len(rows)
    for a in range(r):
        for b in range(a, r):
            total = Cyclotomic.from_rational(0)
            for k, size in enumerate(ct.class_sizes):
                total = total + rows[a].values[k] * rows[b].values[k].conjugate() * size
            expected = order if a == b else Fraction(0)
            if total != expected:
                return OrthogonalityReport(
                    passed=False, failure=f"row orthogonality fails for rows {a}, {b}"
                )
    for k in range(len(ct.class_sizes)):
        for l in range(k, len(ct.class_sizes)):
            total = Cyclotomic.from_rational(0)
            for row in rows:
                total = total + row.values[k] * row.values[l].conjugate()
            expected = order / ct.class_sizes[k] if k == l else Fraction(0)
            if total != expected:
                return OrthogonalityReport(
                    passed=False, failure=f"column orthogonality fails for classes {k}, {l}"
                )
    return OrthogonalityReport(passed=True, failure=None)
