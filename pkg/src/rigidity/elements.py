"""Concrete group element realizations.

Two element kinds are supported: permutations of {0, ..., degree-1} and square
matrices over a prime field F_p.  Both expose the same small surface (product,
inverse, identity, canonical byte encoding) so the enumeration machinery in
`groups` can stay agnostic of the realization.
"""

from __future__ import annotations

from typing import Union

from .errors import IncompatibleGeneratorsError, SingularMatrixError


class Permutation:
    """A permutation of {0, ..., degree-1}, stored as its image tuple."""

    __slots__ = ("degree", "images")

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        degree = len(images)
        if sorted(images) != list(range(degree)):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {images!r}")
        self.degree = degree
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build a permutation from cycles, applied right to left.

        Each cycle is a sequence of distinct 0-based points; points absent from
        every cycle are fixed.
        """
        result = cls.identity(degree)
        for cycle in reversed(list(cycles)):
            cycle = [int(x) for x in cycle]
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"cycle repeats a point: {cycle!r}")
            for x in cycle:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} outside degree {degree}")
            images = list(range(degree))
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
            result = cls(images) * result
        return result

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (self * other)(x) = self(other(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise IncompatibleGeneratorsError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        s = self.images
        return Permutation(s[x] for x in other.images)

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, x in enumerate(self.images):
            images[x] = i
        return Permutation(images)

    def identity_element(self) -> "Permutation":
        return Permutation.identity(self.degree)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def encode(self) -> bytes:
        """Canonical encoding; lexicographic order matches image-tuple order."""
        width = 1 if self.degree <= 0xFF else 2
        body = b"".join(x.to_bytes(width, "big") for x in self.images)
        return b"P" + self.degree.to_bytes(4, "big") + body

    def compatible_with(self, other) -> bool:
        return isinstance(other, Permutation) and other.degree == self.degree

    def cycle_string(self) -> str:
        """Disjoint cycle notation, fixed points omitted; identity is ()."""
        seen = set()
        parts = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                seen.add(start)
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            parts.append("(" + " ".join(str(p) for p in cycle) + ")")
        return "".join(parts) if parts else "()"

    def __eq__(self, other):
        return (
            isinstance(other, Permutation)
            and self.degree == other.degree
            and self.images == other.images
        )

    def __hash__(self):
        return hash(("P", self.degree, self.images))

    def __repr__(self):
        return f"Permutation({self.cycle_string()}, degree={self.degree})"


class PrimeFieldMatrix:
    """A square matrix over F_p with entries reduced to [0, p)."""

    __slots__ = ("p", "n", "entries")

    def __init__(self, p: int, entries):
        rows = tuple(tuple(int(x) % p for x in row) for row in entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        self.p = int(p)
        self.n = n
        self.entries = rows

    @classmethod
    def identity(cls, p: int, n: int) -> "PrimeFieldMatrix":
        return cls(p, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, p: int, n: int, flat) -> "PrimeFieldMatrix":
        flat = list(flat)
        if len(flat) != n * n:
            raise ValueError(f"expected {n * n} entries, got {len(flat)}")
        return cls(p, [flat[i * n : (i + 1) * n] for i in range(n)])

    def __mul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        if other.p != self.p or other.n != self.n:
            raise IncompatibleGeneratorsError(
                f"matrix shape/modulus mismatch: ({self.n}, {self.p}) vs ({other.n}, {other.p})"
            )
        p, n = self.p, self.n
        a, b = self.entries, other.entries
        cols = list(zip(*b))
        return PrimeFieldMatrix(
            p,
            [[sum(x * y for x, y in zip(row, col)) % p for col in cols] for row in a],
        )

    def determinant(self) -> int:
        """Determinant mod p by fraction-free elimination."""
        p, n = self.p, self.n
        m = [list(row) for row in self.entries]
        det = 1
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                return 0
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det % p
            det = det * m[col][col] % p
            inv = pow(m[col][col], -1, p)
            for r in range(col + 1, n):
                factor = m[r][col] * inv % p
                if factor:
                    m[r] = [(x - factor * y) % p for x, y in zip(m[r], m[col])]
        return det % p

    def inverse(self) -> "PrimeFieldMatrix":
        p, n = self.p, self.n
        m = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                raise SingularMatrixError(f"matrix is singular mod {p}: {self.entries!r}")
            m[col], m[pivot] = m[pivot], m[col]
            inv = pow(m[col][col], -1, p)
            m[col] = [x * inv % p for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    factor = m[r][col]
                    m[r] = [(x - factor * y) % p for x, y in zip(m[r], m[col])]
        return PrimeFieldMatrix(p, [row[n:] for row in m])

    def identity_element(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix.identity(self.p, self.n)

    def is_identity(self) -> bool:
        return self == PrimeFieldMatrix.identity(self.p, self.n)

    def encode(self) -> bytes:
        """Canonical encoding; lexicographic order matches row-major entry order."""
        width = 1 if self.p <= 0xFF else 2
        body = b"".join(
            x.to_bytes(width, "big") for row in self.entries for x in row
        )
        return b"M" + self.p.to_bytes(2, "big") + self.n.to_bytes(1, "big") + body

    def compatible_with(self, other) -> bool:
        return (
            isinstance(other, PrimeFieldMatrix)
            and other.p == self.p
            and other.n == self.n
        )

    def __eq__(self, other):
        return (
            isinstance(other, PrimeFieldMatrix)
            and self.p == other.p
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(("M", self.p, self.entries))

    def __repr__(self):
        return f"PrimeFieldMatrix(p={self.p}, {list(map(list, self.entries))})"


GroupElement = Union[Permutation, PrimeFieldMatrix]
