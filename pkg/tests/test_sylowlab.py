import pytest

from expgroups.classical import ClassicalSpec, order_factored
from expgroups.errors import InvalidSpec
from expgroups.expfml import exp_p
from expgroups.grpengine import enumerate_group, exponent
from expgroups.numth import two_local_s
from expgroups.sylowlab import (
    SylowModelSpec,
    check_kgen,
    check_krel,
    check_omgen,
    check_omrel,
    measure,
    w_tower_matrix_group,
    w_tower_order,
)


def _two_part(spec):
    return order_factored(spec).p_part(2).value


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
@pytest.mark.parametrize("r", [1, 2])
def test_symplectic_tower(q, r):
    order, e = measure(SylowModelSpec("Wr", q, r))
    sp = ClassicalSpec("Sp", 2**r, q)
    assert order == w_tower_order(q, r) == _two_part(sp)
    assert e == 2 ** (two_local_s(q) + r - 1)
    assert e == exp_p(sp, 2)


@pytest.mark.parametrize("q", [3, 5])
def test_symplectic_tower_as_matrices(q):
    E = enumerate_group(w_tower_matrix_group(q, 2))
    assert E.order == w_tower_order(q, 2)
    assert exponent(E) == 2 ** (two_local_s(q) + 1)


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("r", [1, 2])
def test_twisted_towers_match_orthogonal_sylows(q, r):
    dim = 2 ** (r + 1)
    order, e = measure(SylowModelSpec("WprimeR", q, r))
    k = ClassicalSpec("Keven", dim, q, 1)
    assert order == _two_part(k)
    assert e == exp_p(k, 2) == 2 ** (r + two_local_s(q) - 1)

    order, e = measure(SylowModelSpec("WdoubleR", q, r))
    om = ClassicalSpec("OmegaEven", dim, q, 1)
    assert order == _two_part(om)
    assert e == exp_p(om, 2)

    order, e = measure(SylowModelSpec("WdoubleR", q, r, projective=True))
    pom = ClassicalSpec("POmegaEven", dim, q, 1)
    assert order == _two_part(pom)
    assert e == exp_p(pom, 2)


@pytest.mark.parametrize("p,q,n", [(3, 2, 6), (5, 4, 5), (7, 2, 6), (3, 7, 3), (5, 2, 8)])
def test_gl_tower_is_sylow(p, q, n):
    order, e = measure(SylowModelSpec("GLtower", q, p=p, n=n))
    gl = ClassicalSpec("GL", n, q)
    assert order == order_factored(gl).p_part(p).value
    assert e == exp_p(gl, p)


def test_base_models():
    assert measure(SylowModelSpec("W2sp", 5)) == (8, 4)
    assert measure(SylowModelSpec("W2orth", 7)) == (16, 8)


@pytest.mark.parametrize("q", [3, 5, 7, 11])
def test_relations_hold(q):
    for check in (check_kgen, check_krel, check_omgen, check_omrel):
        rel = check(q)
        assert rel and all(rel.values()), (check.__name__, rel)


def test_unknown_kind():
    with pytest.raises(InvalidSpec):
        measure(SylowModelSpec("Nope", 3))
