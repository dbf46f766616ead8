"""Solution counting, orbit splitting, and verdicts."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import charactered
from rigidity.chartab import Character, CharacterTable
from rigidity.counting import (
    abc_census,
    class_algebra_constant,
    enumerate_solutions,
    frobenius_count,
    generated_subgroup_report,
    orbit_decomposition,
    rigidity_verdict,
)
from rigidity.errors import CapExceededError, NonIntegerResultError

DUAL_ROUTE_NAMES = (
    "Sym3",
    "Sym4",
    "Sym5",
    "Alt4",
    "Alt5",
    "Q8",
    "Dih4",
    "Cyc6",
)


def test_character_count_equals_scan_on_all_triples():
    for name in DUAL_ROUTE_NAMES:
        G, T, CT = charactered(name)
        r = T.num_classes
        for x in range(r):
            for y in range(r):
                for z in range(r):
                    ids = (x, y, z)
                    by_characters = frobenius_count(CT, ids)
                    by_scan = len(enumerate_solutions(G, T, ids))
                    assert by_characters == by_scan, (name, ids)
                    constant = class_algebra_constant(CT, x, y, z)
                    assert by_characters == T.classes[z].size * constant, (name, ids)


def test_pair_counts_detect_inverse_classes():
    G, T, CT = charactered("Sym4")
    for x in range(T.num_classes):
        for y in range(T.num_classes):
            count = frobenius_count(CT, (x, y))
            expected = T.classes[x].size if y == T.inverse_class[x] else 0
            assert count == expected
            assert count == len(enumerate_solutions(G, T, (x, y)))


def test_quadruple_counts_match_scan():
    G, T, CT = charactered("Sym3")
    for ids in ((1, 1, 1, 1), (1, 1, 2, 2), (2, 2, 2, 2), (0, 1, 1, 0)):
        assert frobenius_count(CT, ids) == len(enumerate_solutions(G, T, ids))


def test_non_integer_sum_is_rejected():
    _, _, CT = charactered("Sym3")
    rows = list(CT.rows)
    chi = rows[-1]
    values = list(chi.values)
    values[-1] = values[-1] + 1
    rows[-1] = Character(degree=chi.degree, values=tuple(values))
    bad = CharacterTable(
        group_order=CT.group_order,
        class_sizes=CT.class_sizes,
        class_orders=CT.class_orders,
        rows=tuple(rows),
    )
    with pytest.raises(NonIntegerResultError):
        frobenius_count(bad, (2, 2, 2))


def test_input_validation():
    G, T, CT = charactered("Sym4")
    with pytest.raises(ValueError):
        frobenius_count(CT, (1,))
    with pytest.raises(IndexError):
        frobenius_count(CT, (0, 99))
    with pytest.raises(ValueError):
        enumerate_solutions(G, T, (2,))
    with pytest.raises(IndexError):
        enumerate_solutions(G, T, (2, 99))


def test_scan_cap():
    G, T, _ = charactered("Sym5")
    with pytest.raises(CapExceededError):
        enumerate_solutions(G, T, (4, 4, 4), cap=100)


def test_solutions_multiply_to_identity_within_classes():
    G, T, _ = charactered("Alt5")
    ids = (1, 2, 3)
    S = enumerate_solutions(G, T, ids)
    for sol in S.solutions:
        acc = G.identity_index
        for x in sol:
            acc = G.mult(acc, x)
        assert acc == G.identity_index
        assert tuple(T.class_of[x] for x in sol) == ids
    assert list(S.solutions) == sorted(S.solutions)


def test_orbit_invariants():
    for name, ids in (("Sym4", (1, 3, 3)), ("Alt5", (1, 2, 2)), ("Q8", (1, 2, 3))):
        G, T, _ = charactered(name)
        S = enumerate_solutions(G, T, ids)
        dec = orbit_decomposition(G, S)
        assert dec.total == len(S)
        assert sum(o.size for o in dec.orbits) == dec.total
        for o in dec.orbits:
            assert G.order % o.size == 0
            assert o.size * o.stabilizer_order == G.order
            assert o.representative in S.solutions


def test_orbits_are_closed_and_representatives_least():
    G, T, _ = charactered("Alt4")
    S = enumerate_solutions(G, T, (1, 1, 1))
    dec = orbit_decomposition(G, S)
    for o in dec.orbits:
        members = {o.representative}
        frontier = [o.representative]
        while frontier:
            sol = frontier.pop()
            for g in range(G.order):
                image = tuple(G.conjugate(x, g) for x in sol)
                if image not in members:
                    members.add(image)
                    frontier.append(image)
        assert len(members) == o.size
        assert min(members) == o.representative


def test_count_is_rotation_and_reversal_invariant():
    _, T, CT = charactered("Sym4")
    r = T.num_classes
    for x in range(r):
        for y in range(r):
            for z in range(r):
                n = frobenius_count(CT, (x, y, z))
                assert n == frobenius_count(CT, (y, z, x))
                assert n == frobenius_count(
                    CT,
                    (T.inverse_class[z], T.inverse_class[y], T.inverse_class[x]),
                )


def test_verdicts():
    G, T, CT = charactered("Sym3")
    v = rigidity_verdict(G, T, CT, (1, 1, 2))
    assert (v.kind, v.stabilizer_order) == ("rigid", 1)
    v = rigidity_verdict(G, T, CT, (2, 2, 2))
    assert (v.kind, v.stabilizer_order) == ("rigid", 3)

    G, T, CT = charactered("Alt4")
    v = rigidity_verdict(G, T, CT, (1, 1, 1))
    assert (v.kind, v.num_orbits) == ("not-rigid", 2)

    G, T, CT = charactered("Sym5")
    v = rigidity_verdict(G, T, CT, (1, 4, 5))
    assert (v.kind, v.stabilizer_order) == ("rigid", 1)
    v = rigidity_verdict(G, T, CT, (2, 4, 5))
    assert v.kind == "empty"
    assert v.stabilizer_order is None
    assert v.num_orbits == 0


def test_stabilizer_mass_formula():
    # summing 1/|stabilizer| over orbits recovers total/|G| exactly
    for name, ids in (("Alt4", (1, 1, 1)), ("Sym5", (1, 4, 5)), ("Alt5", (1, 3, 4))):
        G, T, _ = charactered(name)
        S = enumerate_solutions(G, T, ids)
        dec = orbit_decomposition(G, S)
        mass = sum(
            (Fraction(1, o.stabilizer_order) for o in dec.orbits), Fraction(0)
        )
        assert mass == Fraction(dec.total, G.order)


def test_census_shape_and_totals():
    G, T, _ = charactered("Sym5")
    census = abc_census(G, T, 2, 4, 5)
    assert census.orders == (2, 4, 5)
    assert sum(count for _, count in census.per_tuple) == census.total
    assert census.total == 120
    assert dict(census.per_tuple) == {(1, 4, 5): 120, (2, 4, 5): 0}
    assert len(census.orbits) == 1
    orbit = census.orbits[0]
    assert (orbit.size, orbit.stabilizer_order, orbit.subgroup_order) == (120, 1, 120)
    assert orbit.subgroup_fingerprint == G.fingerprint()


def test_census_on_even_subgroup():
    G, T, _ = charactered("Alt5")
    census = abc_census(G, T, 2, 5, 5)
    assert census.total == 120
    assert len(census.orbits) == 2
    for orbit in census.orbits:
        assert (orbit.size, orbit.stabilizer_order) == (60, 1)
        assert orbit.subgroup_order == 60
        assert orbit.subgroup_fingerprint == G.fingerprint()


def test_census_with_no_classes_of_an_order():
    G, T, _ = charactered("Sym4")
    census = abc_census(G, T, 2, 4, 5)
    assert census.per_tuple == ()
    assert census.total == 0
    assert census.orbits == ()


def test_degenerate_generated_subgroup():
    G, T, _ = charactered("Cyc6")
    # a commuting pair generates a proper cyclic subgroup
    order, fingerprint = generated_subgroup_report(G, (2, 4, 0))
    assert order == 3
    assert fingerprint[0] == 3


def test_generated_subgroup_report_validation():
    G, _, _ = charactered("Sym4")
    with pytest.raises(ValueError):
        generated_subgroup_report(G, (3,))
    with pytest.raises(IndexError):
        generated_subgroup_report(G, (0, 999))
