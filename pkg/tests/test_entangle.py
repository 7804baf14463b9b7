import random
from fractions import Fraction

import pytest

from lambdasv.entangle import (ClosureError, EntangledState, StructureError,
                               compare_opposite_tables, equal_bases, invariance_sign,
                               is_plain_integer, joint_distribution, opposite, opposite_map,
                               partner_basis_map, sign_canonical)
from lambdasv.exactnum import J, J1, J2, CMat4, CVec4
from lambdasv.matgroup import sigma_tilde, two_a5, two_s5
from lambdasv.rayconfig import Configuration, Ray


def test_entangled_state():
    st = EntangledState(J)
    assert st.normalization == Fraction(1, 4)
    assert [(j, k) for j, k, _ in st.terms()] == [(0, 3), (1, 2), (2, 1), (3, 0)]


def test_entangled_state_requires_antisymmetry():
    with pytest.raises(ValueError):
        EntangledState(CMat4.identity(7))


@pytest.mark.parametrize("A, sign", [(CMat4.identity(7), 1), (J, 1)])
def test_invariance_sign_examples(A, sign):
    assert invariance_sign(A, J) == sign


def test_invariance_sign_on_subgroups():
    assert {invariance_sign(A, J) for A in two_s5().matrices()} == {1, -1}
    assert {invariance_sign(A, J) for A in two_a5().matrices()} == {1}


def test_invariance_sign_is_a_character():
    ms = two_s5().matrices()
    rng = random.Random(2)
    for _ in range(300):
        a, b = rng.choice(ms), rng.choice(ms)
        assert invariance_sign(a @ b, J) == invariance_sign(a, J) * invariance_sign(b, J)


def test_outside_2s5_has_no_sign():
    g = sigma_tilde()
    outside = [m for m in g.matrices() if m not in two_s5()]
    assert all(invariance_sign(m, J) is None for m in outside[:200])


def test_opposites_match_table(ws, sv):
    opp = opposite_map(J, sv)
    assert opp.is_involution()
    assert opp.fixed_points() == []
    assert opp.labelled(sv) == ws.table_opposites("J")


def test_opposite_intertwines(sv):
    # opposite(A v) = (J conj(A) J^-1) opposite(v)
    Jinv = J.inverse()
    rng = random.Random(5)
    ms = sigma_tilde().matrices()
    for _ in range(50):
        A = rng.choice(ms)
        B = J @ A.conjugate() @ Jinv
        v = rng.choice(sv.rays).vector
        assert opposite(J, A.apply(v)) == B.apply(opposite(J, v))


def test_closure_error():
    cfg = Configuration([Ray(CVec4.basis(7, 0), 0)], 2, 7)
    with pytest.raises(ClosureError):
        opposite_map(J, cfg)


def test_structure_error(ws, sv):
    with pytest.raises(StructureError):
        partner_basis_map(J, ws.sv_bases[:1], sv)


def test_basis_pairing(ws):
    p = ws.basis_pairing
    assert p.is_involution()
    assert p.pairs == ws.table_basis_pairs
    assert p.fixed_set == sorted(ws.table_bases[1])


@pytest.mark.parametrize("group", [two_a5, two_s5])
def test_equal_bases(ws, sv, group):
    assert equal_bases(group(), sv, ws.sv_bases) == set(ws.table_bases[1])


def test_joint_distribution_standard_basis(ws, sv):
    b3 = ws.sv_bases[2]
    P = joint_distribution(J, b3, b3, sv)
    support = {(b3.labels[r], b3.labels[s]) for r in range(4) for s in range(4) if P[r][s]}
    assert support == {(1, 31), (11, 21), (21, 11), (31, 1)}
    assert all(P[r][s] in (0, Fraction(1, 4)) for r in range(4) for s in range(4))


def test_joint_distribution_sums_to_one(ws, sv):
    P = joint_distribution(J, ws.sv_bases[0], ws.sv_bases[100], sv)
    assert sum(sum(row) for row in P) == 1
    # marginals are uniform because J is unitary
    assert all(sum(row) == Fraction(1, 4) for row in P)


def test_coset_matrices(ws):
    cm = ws.coset_matrices
    assert len(cm) == 21
    assert cm[0][0] == CMat4.identity(7)
    assert cm[0][1] == sign_canonical(J)
    plain = {M.key() for _, M in cm[1:] if is_plain_integer(M)}
    assert plain == {sign_canonical(J1).key(), sign_canonical(J2).key()}
    assert all(M.is_unitary() and M.is_antisymmetric() for _, M in cm)


def test_sign_canonical():
    assert sign_canonical(-J) == sign_canonical(J)
    assert sign_canonical(sign_canonical(J1)) == sign_canonical(J1)


def test_tables_five_six_swap(ws, sv):
    computed = {w: opposite_map(m, sv).labelled(sv) for w, m in (("J1", J1), ("J2", J2))}
    printed = {w: ws.table_opposites(w) for w in ("J1", "J2")}
    cmp = compare_opposite_tables(computed, printed)
    assert cmp["covers_both"]
    assert cmp["assignment"] == {"J1": "J2", "J2": "J1"}
    assert cmp["swapped"]


@pytest.mark.parametrize("printed, swapped, covers", [
    ({"A": {1: 2, 2: 1}, "B": {1: 1, 2: 2}}, False, True),
    ({"A": {1: 1, 2: 2}, "B": {1: 2, 2: 1}}, True, True),
    ({"A": {1: 2, 2: 1}, "B": {1: 2, 2: 1}}, False, False),
])
def test_compare_tables_synthetic(printed, swapped, covers):
    computed = {"A": {1: 2, 2: 1}, "B": {1: 1, 2: 2}}
    cmp = compare_opposite_tables(computed, printed)
    assert cmp["swapped"] == swapped
    assert cmp["covers_both"] == covers
