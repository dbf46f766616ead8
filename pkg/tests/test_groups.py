"""Group enumeration: closure, builders, and the orthogonal-group scan."""

from __future__ import annotations

from itertools import product

import pytest
from conftest import Q8_FLATS, group

from rigidity.elements import Permutation, PrimeFieldMatrix
from rigidity.errors import (
    CapExceededError,
    IncompatibleGeneratorsError,
    SingularMatrixError,
    UnsupportedModulusError,
)
from rigidity.groups import (
    FiniteGroup,
    alt_group,
    closure_enumerate,
    cyc_group,
    dih_group,
    mat_group,
    omega3_group,
    so3_enumerate,
    so3_group,
    sym_group,
)


def test_builder_orders():
    assert [sym_group(n).order for n in range(1, 7)] == [1, 2, 6, 24, 120, 720]
    assert [alt_group(n).order for n in range(1, 7)] == [1, 1, 3, 12, 60, 360]
    assert [cyc_group(n).order for n in range(1, 9)] == [1, 2, 3, 4, 5, 6, 7, 8]
    assert [dih_group(n).order for n in range(1, 9)] == [2, 4, 6, 8, 10, 12, 14, 16]


def test_identity_is_element_zero():
    for name in ("Sym4", "Alt4", "Q8", "SO3_5"):
        G = group(name)
        assert G.elements[0].is_identity()
        assert G.identity_index == 0


def test_alt_elements_are_even():
    G = alt_group(4)
    for g in G.elements:
        # parity = (degree - number of cycles) mod 2, fixed points included
        seen = set()
        cycles = 0
        for start in range(g.degree):
            if start not in seen:
                cycles += 1
                x = start
                while x not in seen:
                    seen.add(x)
                    x = g.images[x]
        assert (g.degree - cycles) % 2 == 0


def test_mult_table_matches_element_arithmetic():
    G = group("Sym4")
    for i in range(G.order):
        for j in range(G.order):
            assert G.elements[G.mult(i, j)] == G.elements[i] * G.elements[j]


def test_inverse_table():
    G = group("Sym4")
    for i in range(G.order):
        assert G.mult(i, G.inverse(i)) == 0
        assert G.mult(G.inverse(i), i) == 0


def test_conjugate_matches_element_arithmetic():
    G = group("Q8")
    for i in range(G.order):
        for g in range(G.order):
            expected = (
                G.elements[G.inverse(g)] * G.elements[i] * G.elements[g]
            )
            assert G.elements[G.conjugate(i, g)] == expected


def test_element_order_matches_naive_powers():
    G = group("Sym4")
    for i in range(G.order):
        x = G.elements[i]
        power = x
        k = 1
        while not power.is_identity():
            power = power * x
            k += 1
        assert G.element_order(i) == k


def test_element_order_divides_group_order():
    for name in ("Sym5", "Q8", "SO3_5"):
        G = group(name)
        for i in range(G.order):
            assert G.order % G.element_order(i) == 0


def test_centralizer_sizes():
    G = group("Sym4")
    four_cycle = next(i for i in range(G.order) if G.element_order(i) == 4)
    assert len(G.centralizer(four_cycle)) == 4
    assert len(G.centralizer(0)) == G.order


def test_closure_cap():
    gens = [
        Permutation.from_cycles(5, [(0, 1)]),
        Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]),
    ]
    with pytest.raises(CapExceededError):
        closure_enumerate(gens, cap=50)


def test_named_builder_caps_trip_fast():
    with pytest.raises(CapExceededError):
        sym_group(50)
    with pytest.raises(CapExceededError):
        sym_group(10**12)
    with pytest.raises(CapExceededError):
        alt_group(10**9)
    with pytest.raises(CapExceededError):
        cyc_group(3_000_000)


def test_closure_requires_generators_and_compatibility():
    with pytest.raises(ValueError):
        closure_enumerate([])
    with pytest.raises(IncompatibleGeneratorsError):
        closure_enumerate([Permutation.identity(3), Permutation.identity(4)])
    with pytest.raises(SingularMatrixError):
        closure_enumerate([PrimeFieldMatrix(3, ((1, 2), (2, 1)))])


def test_bfs_enumeration_is_deterministic():
    a = sym_group(4)
    b = sym_group(4)
    assert [g.encode() for g in a.elements] == [g.encode() for g in b.elements]
    assert a.generator_indices == b.generator_indices


def test_from_closed_elements_roundtrip():
    G = group("Sym4")
    rebuilt = FiniteGroup.from_closed_elements(list(G.elements))
    assert rebuilt.order == G.order
    assert [g.encode() for g in rebuilt.elements] == [g.encode() for g in G.elements]


def test_from_closed_elements_rejects_bad_input():
    G = group("Sym3")
    with pytest.raises(ValueError):
        FiniteGroup.from_closed_elements(list(G.elements)[:-1])
    with pytest.raises(ValueError):
        FiniteGroup.from_closed_elements(list(G.elements)[1:])
    with pytest.raises(ValueError):
        FiniteGroup.from_closed_elements([])


def test_subgroup_generated_satisfies_lagrange():
    G = group("Sym4")
    for i in range(G.order):
        sub = G.subgroup_generated([i])
        assert G.order % len(sub) == 0
        assert len(sub) == G.element_order(i)


def test_subgroup_materialization():
    G = group("Sym4")
    transposition = next(
        i
        for i in range(G.order)
        if G.element_order(i) == 2 and len(G.centralizer(i)) == 4
    )
    sub = G.subgroup(G.subgroup_generated([transposition]))
    assert sub.order == 2
    with pytest.raises(ValueError):
        G.subgroup({1, 2})
    with pytest.raises(IndexError):
        G.subgroup_generated([G.order])


def test_derived_subgroups():
    assert len(sym_group(3).derived_subgroup()) == 3
    assert len(sym_group(4).derived_subgroup()) == 12
    assert len(sym_group(5).derived_subgroup()) == 60
    assert len(cyc_group(6).derived_subgroup()) == 1
    assert len(dih_group(4).derived_subgroup()) == 2
    # perfect group: derived subgroup is everything
    assert len(alt_group(5).derived_subgroup()) == 60


def test_derived_subgroup_is_normal():
    G = group("Sym4")
    derived = G.derived_subgroup()
    for h in derived:
        for g in range(G.order):
            assert G.conjugate(h, g) in derived


def test_so3_small_moduli():
    assert so3_group(3).order == 24
    assert so3_group(5).order == 120
    assert so3_group(7).order == 336
    with pytest.raises(UnsupportedModulusError):
        so3_enumerate(11)
    with pytest.raises(UnsupportedModulusError):
        so3_enumerate(4)


def test_so3_matches_naive_scan_mod3():
    p = 3
    naive = []
    for flat in product(range(p), repeat=9):
        m = [flat[0:3], flat[3:6], flat[6:9]]
        gram_ok = all(
            sum(m[i][k] * m[j][k] for k in range(3)) % p == (1 if i == j else 0)
            for i in range(3)
            for j in range(3)
        )
        if not gram_ok:
            continue
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        ) % p
        if det == 1:
            naive.append(flat)
    G = group("SO3_3")
    ours = [tuple(x for row in g.entries for x in row) for g in G.elements]
    identity_flat = (1, 0, 0, 0, 1, 0, 0, 0, 1)
    naive.remove(identity_flat)
    assert ours == [identity_flat] + naive


def test_so3_matches_naive_scan_mod5():
    np = pytest.importorskip("numpy")
    p = 5
    count = p**9
    rem = np.arange(count, dtype=np.int64)
    digits = np.empty((count, 9), dtype=np.int16)
    for k in range(8, -1, -1):
        digits[:, k] = rem % p
        rem //= p
    m = digits.reshape(count, 3, 3)
    gram = np.einsum("nij,nkj->nik", m, m) % p
    eye = np.eye(3, dtype=np.int16)
    orthogonal = (gram == eye).all(axis=(1, 2))
    det = (
        m[:, 0, 0] * (m[:, 1, 1] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 1])
        - m[:, 0, 1] * (m[:, 1, 0] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 0])
        + m[:, 0, 2] * (m[:, 1, 0] * m[:, 2, 1] - m[:, 1, 1] * m[:, 2, 0])
    ) % p
    keep = orthogonal & (det == 1)
    naive = [tuple(int(x) for x in row) for row in digits[keep]]
    G = group("SO3_5")
    ours = [tuple(x for row in g.entries for x in row) for g in G.elements]
    identity_flat = (1, 0, 0, 0, 1, 0, 0, 0, 1)
    naive.remove(identity_flat)
    assert ours == [identity_flat] + naive


def test_shadow_fingerprints():
    assert group("SO3_5").fingerprint() == group("Sym5").fingerprint()
    assert group("Omega3_5").fingerprint() == group("Alt5").fingerprint()
    assert omega3_group(3).fingerprint() == alt_group(4).fingerprint()


def test_omega3_orders():
    assert omega3_group(3).order == 12
    assert group("Omega3_5").order == 60


def test_q8_fingerprint():
    assert group("Q8").fingerprint() == (
        8,
        (1, 1, 2, 2, 2),
        ((1, 1), (2, 1), (4, 6)),
    )


def test_mat_group_validation():
    with pytest.raises(ValueError):
        mat_group(4, 2, [(1, 0, 0, 1)])
    with pytest.raises(ValueError):
        mat_group(1 << 17, 2, [(1, 0, 0, 1)])
    with pytest.raises(ValueError):
        mat_group(3, 0, [()])
    assert mat_group(3, 2, Q8_FLATS).order == 8


def test_builder_rejects_nonpositive_parameters():
    for builder in (sym_group, alt_group, cyc_group, dih_group):
        with pytest.raises(ValueError):
            builder(0)
