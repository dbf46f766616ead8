"""Character tables from class-matrix eigenspaces."""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import charactered, classed
from rigidity.chartab import (
    Character,
    CharacterTable,
    character_table,
    class_matrices,
    dixon_prime,
    verify_orthogonality,
)
from rigidity.cyclotomic import Cyclotomic
from rigidity.murnaghan import align_to_class_table, murnaghan_nakayama

ALL_NAMES = (
    "Sym2",
    "Sym3",
    "Sym4",
    "Sym5",
    "Sym6",
    "Alt4",
    "Alt5",
    "Dih4",
    "Cyc6",
    "Q8",
    "SO3_5",
    "Omega3_5",
)


def test_class_matrix_row_sums():
    # summing a_{jik}·|C_k| over k counts all of C_j × C_i
    G, T = classed("Sym4")
    for mat in class_matrices(T, G):
        for i, row in enumerate(mat.entries):
            total = sum(a * T.classes[k].size for k, a in enumerate(row))
            assert total == T.classes[mat.j].size * T.classes[i].size


def test_identity_class_matrix_is_identity():
    for name in ("Sym3", "Sym4", "Q8"):
        G, T = classed(name)
        mat = class_matrices(T, G)[0]
        for i, row in enumerate(mat.entries):
            assert all(a == (1 if k == i else 0) for k, a in enumerate(row))


def test_scaled_rows_are_simultaneous_eigenvectors():
    for name in ("Sym4", "Q8"):
        G, T, CT = charactered(name)
        mats = class_matrices(T, G)
        for chi in CT.rows:
            omega = [
                chi.values[k] * T.classes[k].size / Fraction(chi.degree)
                for k in range(T.num_classes)
            ]
            for mat in mats:
                for i, row in enumerate(mat.entries):
                    lhs = Cyclotomic.from_rational(0)
                    for k, a in enumerate(row):
                        lhs = lhs + omega[k] * a
                    assert lhs == omega[mat.j] * omega[i]


def test_orthogonality_and_degree_sums():
    from rigidity.conjugacy import conjugacy_classes
    from rigidity.groups import cyc_group, dih_group

    groups = [charactered(name)[::2] for name in ALL_NAMES]
    for n in range(1, 13):
        G = cyc_group(n)
        groups.append((G, character_table(G, conjugacy_classes(G))))
    for n in range(1, 9):
        G = dih_group(n)
        groups.append((G, character_table(G, conjugacy_classes(G))))
    for G, CT in groups:
        report = verify_orthogonality(CT)
        assert report.passed, report.failure
        assert sum(chi.degree ** 2 for chi in CT.rows) == G.order
        assert all(v.is_integral() for chi in CT.rows for v in chi.values)


def test_first_row_is_trivial_character():
    for name in ALL_NAMES:
        _, T, CT = charactered(name)
        assert all(v == 1 for v in CT.rows[0].values)
        for chi in CT.rows:
            assert chi.values[0] == chi.degree


def test_tampered_table_fails_orthogonality():
    _, _, CT = charactered("Sym3")
    bad_rows = list(CT.rows)
    chi = bad_rows[-1]
    values = list(chi.values)
    values[-1] = values[-1] + 1
    bad_rows[-1] = Character(degree=chi.degree, values=tuple(values))
    bad = CharacterTable(
        group_order=CT.group_order,
        class_sizes=CT.class_sizes,
        class_orders=CT.class_orders,
        rows=tuple(bad_rows),
    )
    report = verify_orthogonality(bad)
    assert not report.passed
    assert report.failure


def test_dixon_prime_selection():
    assert dixon_prime(3, 3) == 7
    assert dixon_prime(60, 120) == 61
    assert dixon_prime(1, 1) == 3
    assert dixon_prime(12, 24) == 13
    assert dixon_prime(4, 8) == 13


def test_dixon_prime_properties():
    for e, n in ((2, 4), (6, 60), (12, 120), (30, 360), (60, 2520)):
        p = dixon_prime(e, n)
        assert p % e == 1
        assert p * p > 4 * n
        assert all(p % d for d in range(2, p)) or p == 2
        # nothing smaller qualifies
        for q in range(3, p):
            if q % e != 1 or q * q <= 4 * n:
                continue
            assert any(q % d == 0 for d in range(2, q))


def test_matches_combinatorial_oracle_exactly():
    from conftest import group

    for n in range(3, 7):
        G = group(f"Sym{n}")
        _, T, CT = charactered(f"Sym{n}")
        oracle = align_to_class_table(murnaghan_nakayama(n), T)
        assert oracle.class_sizes == CT.class_sizes
        assert oracle.class_orders == CT.class_orders
        assert oracle.rows == CT.rows
        assert G.order == CT.group_order


def test_table_is_deterministic():
    G, T = classed("Alt5")
    a = character_table(G, T)
    b = character_table(G, T)
    assert a.rows == b.rows


def test_known_degree_sequences():
    expected = {
        "Sym5": [1, 1, 4, 4, 5, 5, 6],
        "Alt5": [1, 3, 3, 4, 5],
        "Q8": [1, 1, 1, 1, 2],
        "Alt4": [1, 1, 1, 3],
        "Dih4": [1, 1, 1, 1, 2],
    }
    for name, degrees in expected.items():
        _, _, CT = charactered(name)
        assert sorted(chi.degree for chi in CT.rows) == degrees


def test_rotation_group_table_matches_its_shadow():
    _, _, CT5 = charactered("SO3_5")
    _, _, CTS = charactered("Sym5")
    assert sorted(chi.degree for chi in CT5.rows) == sorted(
        chi.degree for chi in CTS.rows
    )
    lhs = sorted(tuple(v.sort_key() for v in chi.values) for chi in CT5.rows)
    rhs = sorted(tuple(v.sort_key() for v in chi.values) for chi in CTS.rows)
    assert lhs == rhs
