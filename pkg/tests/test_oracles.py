import pytest

from expgroups.classical import ClassicalSpec, order_factored
from expgroups.errors import CapExceeded, FamilyNotCovered
from expgroups.expfml import exponent_formula
from expgroups.oracles import check_spec, default_grid, oracle_exponent, sylow_certificate, unitriangular_isometries


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_unitriangular_isometries_form_a_sylow(q):
    U = unitriangular_isometries(q)
    assert len(U) == q**4 == order_factored(ClassicalSpec("Sp", 4, q)).p_part(ClassicalSpec("Sp", 4, q).p).value


@pytest.mark.parametrize("q", [7, 9])
def test_certificates_over_budget(q):
    for fam in ("Sp", "PSp"):
        spec = ClassicalSpec(fam, 4, q)
        res = oracle_exponent(spec)
        assert res.mode == "sylow"
        assert all(c.ok for c in res.certificates)
        assert res.exponent == exponent_formula(spec)


def test_certificate_methods():
    spec = ClassicalSpec("Sp", 4, 7)
    methods = {p: sylow_certificate(spec, p).method for p in order_factored(spec).primes}
    assert methods == {
        2: "W_2 wreath tower",
        3: "Sp(2,q) x Sp(2,q) Sylow",
        5: "cyclic element search",
        7: "unitriangular isometries",
    }


def test_certificates_only_for_rank_two():
    with pytest.raises(FamilyNotCovered):
        sylow_certificate(ClassicalSpec("GL", 3, 5), 2)
    with pytest.raises(CapExceeded):
        oracle_exponent(ClassicalSpec("GL", 4, 5), budget=1000)


def test_enumerated_oracle_small():
    res = oracle_exponent(ClassicalSpec("PSp", 4, 3))
    assert res.mode == "enumerated" and res.exponent == 180


def test_grid_shape():
    grid = default_grid()
    assert len(grid) >= 40
    fams = {s.family for s in grid}
    assert {"GL", "Sp", "PSp", "SOodd", "OmegaOdd", "OmegaEven", "GOeven"} <= fams


@pytest.mark.parametrize(
    "spec",
    [ClassicalSpec("GL", 3, 3), ClassicalSpec("SOodd", 3, 7), ClassicalSpec("OmegaEven", 4, 5, -1),
     ClassicalSpec("GOeven", 2, 7, 1), ClassicalSpec("Sp", 4, 2)],
    ids=str,
)
def test_grid_entries_agree(spec):
    g = check_spec(spec)
    assert g.ok and not g.mismatches
    assert g.covered
