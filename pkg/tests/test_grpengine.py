import numpy as np
import pytest

from expgroups.errors import ActionNotHomomorphic, CapExceeded, NotCentral
from expgroups.gf import field_of_order
from expgroups.grpengine import (
    Element,
    central_quotient,
    cyclic_perm_group,
    direct_product,
    element_order,
    elementary_abelian_2,
    enumerate_group,
    exponent,
    exponent_projective,
    matrix_group,
    order_spectrum,
    parse_perm,
    perm_group,
    perm_to_cycles,
    projective_order,
    semidirect_product,
    wreath_product,
)

A5 = perm_group(["(1,2,3,4,5)", "(1,2,3)"], 5, "A5")
S4 = perm_group(["(1,2,3,4)", "(1,2)"], 4, "S4")


def gl2(q, projective=False):
    F = field_of_order(q)
    g = F.primitive_element
    return matrix_group([[[g, 0], [0, 1]], [[F.neg(1), 1], [F.neg(1), 0]], [[1, 1], [0, 1]]], F, projective, f"GL(2,{q})")


def test_perm_orders_and_exponents():
    E = enumerate_group(A5)
    assert E.order == 60
    assert exponent(E) == 30
    assert order_spectrum(E) == {1: 1, 2: 15, 3: 20, 5: 24}
    E4 = enumerate_group(S4)
    assert E4.order == 24 and exponent(E4) == 12
    assert order_spectrum(E4) == {1: 1, 2: 9, 3: 8, 4: 6}


def test_parse_perm_roundtrip():
    img = parse_perm("(1,3,5)(2,4)", 6)
    assert img.tolist() == [2, 3, 4, 1, 0, 5]
    assert perm_to_cycles(img) == "(1,3,5)(2,4)"
    assert perm_to_cycles(parse_perm("()", 3)) == "()"
    with pytest.raises(ValueError):
        parse_perm("(1,7)", 5)
    with pytest.raises(ValueError):
        parse_perm("(1,2)(2,3)", 4)


def test_matrix_group_orders():
    for q in (2, 3, 4, 5):
        E = enumerate_group(gl2(q))
        assert E.order == (q * q - 1) * (q * q - q)
    assert exponent(enumerate_group(gl2(3))) == 24
    assert enumerate_group(gl2(5, projective=True)).order == 120  # PGL(2,5) = S5
    assert exponent(enumerate_group(gl2(5, projective=True))) == 60


def test_cap_exceeded_reports_partial():
    with pytest.raises(CapExceeded) as info:
        enumerate_group(A5, cap=20)
    assert info.value.partial > 20


def test_enumeration_deterministic_across_workers():
    handle = gl2(7)
    base = enumerate_group(handle, workers=1)
    for w in (2, 3, 4):
        E = enumerate_group(handle, workers=w)
        assert E.order == base.order
        assert np.array_equal(E.keys, base.keys)
        assert exponent(E) == exponent(base)
        assert order_spectrum(E) == order_spectrum(base)


def test_element_order_with_group_order():
    E = enumerate_group(gl2(5))
    for i in range(0, E.order, 37):
        g = E.element(i)
        assert element_order(g, E.order) == element_order(g) == int(E.orders[i])


@pytest.mark.parametrize("handle", [A5, S4, gl2(4), gl2(3, projective=True)])
def test_exponent_divides_order_and_orders_divide_exponent(handle):
    E = enumerate_group(handle)
    e = exponent(E)
    assert E.order % e.value == 0
    assert all(e.value % int(o) == 0 for o in np.unique(E.orders))


def test_wreath_and_direct_products():
    W = enumerate_group(wreath_product(cyclic_perm_group(2), 2))
    assert W.order == 8 and exponent(W) == 4  # dihedral of order 8
    W3 = enumerate_group(wreath_product(cyclic_perm_group(3), 3))
    assert W3.order == 81 and exponent(W3) == 9
    D = enumerate_group(direct_product([cyclic_perm_group(4), cyclic_perm_group(6)]))
    assert D.order == 24 and exponent(D) == 12
    assert enumerate_group(elementary_abelian_2(3)).order == 8


def test_semidirect_product_dihedral():
    N = cyclic_perm_group(5)
    H = cyclic_perm_group(2)
    inv = N.generators[0] ** 4
    G = enumerate_group(semidirect_product(N, H, [[inv]]))
    assert G.order == 10 and exponent(G) == 10
    assert order_spectrum(G) == {1: 1, 2: 5, 5: 4}


def test_semidirect_rejects_bad_action():
    N = cyclic_perm_group(5)
    H = cyclic_perm_group(3)
    sq = N.generators[0] ** 2  # x -> x^2 has order 4 in Aut(C5), not dividing 3
    with pytest.raises(ActionNotHomomorphic):
        semidirect_product(N, H, [[sq]])
    Hs = perm_group(["(1,2)"], 2)
    with pytest.raises(ActionNotHomomorphic):
        semidirect_product(N, Hs, [[N.identity()]])


def test_projective_orders_and_quotient():
    handle = gl2(5)
    E = enumerate_group(handle)
    scalars = [Element(handle.algebra, handle.algebra.from_rows(np.eye(2, dtype=np.int64) * c)) for c in range(1, 5)]
    assert exponent_projective(E, scalars) == 60
    Q = enumerate_group(central_quotient(handle, scalars))
    assert Q.order == 120 and exponent(Q) == 60
    g = handle.generators[0]
    assert projective_order(g, scalars, handle.generators) == 4
    minus = scalars[3]
    assert exponent_projective(E, [minus]) == exponent(enumerate_group(central_quotient(handle, [minus])))
    with pytest.raises(NotCentral):
        exponent_projective(E, [handle.generators[1]])
