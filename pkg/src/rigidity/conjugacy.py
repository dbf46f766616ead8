"""Conjugacy classes of an enumerated group.

Classes are found by orbit closure under conjugation by the stored generators
only; that suffices because the generators generate, and it costs
O(|G| · #generators) conjugations instead of O(|G|²).

The class ordering convention is fixed project-wide: sort by (element order,
class size, least member index).  The identity class therefore always gets
id 0, and equal runs produce identical tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteGroup


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugacy class; members are sorted ascending."""

    id: int
    representative: int
    members: tuple[int, ...]
    size: int
    centralizer_order: int


@dataclass(frozen=True)
class ClassTable:
    """All classes of a group plus the maps the counting layer needs."""

    group: FiniteGroup
    classes: tuple[ConjugacyClass, ...]
    class_of: tuple[int, ...]
    inverse_class: tuple[int, ...]
    element_order_of_class: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)


def conjugacy_classes(G: FiniteGroup) -> ClassTable:
    """Partition G into conjugacy classes, sorted by the fixed convention."""
    n = G.order
    gens = G.generator_indices or (0,)
    assigned = [False] * n
    raw: list[list[int]] = []
    for start in range(n):
        if assigned[start]:
            continue
        members = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for g in gens:
                y = G.conjugate(x, g)
                if y not in members:
                    members.add(y)
                    queue.append(y)
        for m in members:
            assigned[m] = True
        raw.append(sorted(members))

    keyed = sorted(
        (G.element_order(members[0]), len(members), members[0], members)
        for members in raw
    )
    classes = []
    class_of = [0] * n
    for cid, (order, size, rep, members) in enumerate(keyed):
        for m in members:
            class_of[m] = cid
        classes.append(
            ConjugacyClass(
                id=cid,
                representative=rep,
                members=tuple(members),
                size=size,
                centralizer_order=n // size,
            )
        )
    inverse_class = tuple(
        class_of[G.inverse(c.representative)] for c in classes
    )
    element_orders = tuple(G.element_order(c.representative) for c in classes)
    return ClassTable(
        group=G,
        classes=tuple(classes),
        class_of=tuple(class_of),
        inverse_class=inverse_class,
        element_order_of_class=element_orders,
    )


def power_map(T: ClassTable, k: int) -> tuple[int, ...]:
    """Class id of g^k per class id; well-defined on classes."""
    G = T.group
    result = []
    for c in T.classes:
        m = T.element_order_of_class[c.id]
        e = k % m
        x = G.elements[c.representative]
        acc = G.elements[0]
        for _ in range(e):
            acc = acc * x
        result.append(T.class_of[G.index[acc]])
    return tuple(result)


def classes_of_element_order(T: ClassTable, m: int) -> list[int]:
    """Ids of all classes whose elements have order exactly m, in table order."""
    return [c.id for c in T.classes if T.element_order_of_class[c.id] == m]
