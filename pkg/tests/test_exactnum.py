from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lambdasv.exactnum import (IOTA, IOTA1, IOTA2, NAMED_MATRICES, OMEGA, P1, P2, ROOT7,
                               ROOT7_BAR, S, CMat4, CVec4, DomainMismatchError, QImag,
                               inner_product)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100)


def elements(d):
    return st.builds(lambda a, b: QImag(d, a, b), fractions, fractions)


field = st.sampled_from([3, 7]).flatmap(
    lambda d: st.tuples(elements(d), elements(d), elements(d)))


@given(field)
def test_field_axioms(xyz):
    x, y, z = xyz
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == QImag(x.d, 0)
    assert x.conjugate().conjugate() == x
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * x.conjugate()).is_real()
    assert (x * x.conjugate()).a == x.norm()


@given(field)
def test_inverse(xyz):
    x = xyz[0]
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == QImag(x.d, 1)
        assert x.norm() > 0


def test_normalisation_keeps_fractions_reduced():
    z = QImag(7, Fraction(2, 4), Fraction(6, 8))
    assert (z.a, z.b) == (Fraction(1, 2), Fraction(3, 4))
    assert z.a.denominator > 0


def test_mixed_fields_rejected():
    with pytest.raises(DomainMismatchError):
        QImag(3, 1) + QImag(7, 1)
    with pytest.raises(DomainMismatchError):
        inner_product(CVec4.basis(3, 0), CVec4.basis(7, 0))
    with pytest.raises(DomainMismatchError):
        CMat4.identity(3) @ CMat4.identity(7)


@pytest.mark.parametrize("z, norm", [(IOTA, Fraction(1, 7)), (IOTA1, Fraction(2, 7)),
                                     (IOTA2, Fraction(4, 7))])
def test_iota_norms(z, norm):
    assert z.norm() == norm


def test_named_scalars():
    assert IOTA * IOTA.conjugate() == QImag(7, Fraction(1, 7))
    assert OMEGA ** 3 == QImag(3, 1)
    assert IOTA1.inverse() * IOTA1 == QImag(7, 1)
    # roots of z^2 + z + 2
    for r in (ROOT7, ROOT7_BAR):
        assert r * r + r + 2 == QImag(7, 0)
        assert r.norm() == 2


def test_inner_products():
    psi1 = CVec4.basis(7, 0)
    psi2 = CVec4([IOTA * 2, IOTA, IOTA, IOTA])
    assert inner_product(psi1, psi1) == QImag(7, 1)
    assert inner_product(psi1, CVec4.basis(7, 1)).is_zero()
    assert inner_product(psi1, psi2).norm() == Fraction(4, 7)
    assert psi2.is_unit()


def test_inner_product_is_conjugate_linear_in_first_slot():
    u = CVec4.basis(7, 0)
    assert inner_product(u.scale(IOTA1), u) == IOTA1.conjugate()
    assert inner_product(u, u.scale(IOTA1)) == IOTA1


def test_matrix_identities():
    I = CMat4.identity(7)
    assert S ** 7 == I
    assert P2 @ P2 == -I
    assert P1 ** 3 == I
    assert S @ S.inverse() == I


@pytest.mark.parametrize("name", sorted(NAMED_MATRICES))
def test_named_matrices_unitary(name):
    assert NAMED_MATRICES[name].is_unitary()


@pytest.mark.parametrize("name", ["J", "J1", "J2"])
def test_j_matrices_antisymmetric(name):
    assert NAMED_MATRICES[name].is_antisymmetric()


def test_apply_matches_matmul():
    v = CVec4([IOTA1, IOTA, 0, IOTA2.conjugate()], 7)
    M = S @ P1
    assert M.apply(v) == S.apply(P1.apply(v))


def test_tuple_round_trip():
    z = QImag(7, Fraction(-1, 2), Fraction(3, 14))
    assert QImag.from_tuple(7, z.to_tuple()) == z
