import pytest

from expgroups.classify import (
    TABLE1,
    TABLE1_EQUAL,
    TABLE3,
    ClassificationResult,
    SimpleGroupId,
    alternating_no_set,
    classify,
    default_witness_ids,
    odd_extension_exponent,
    parabolic_exclusions,
    verify_witness,
)
from expgroups.errors import EvenPrime, InvalidSpec, NonPrime, NotSimple


def verdict(gid):
    r = classify(gid)
    return r.verdict, r.reason


def test_alternating_verdicts():
    assert verdict(SimpleGroupId.alt(10)) == ("NO", "N_EQUALS_10")
    assert verdict(SimpleGroupId.alt(9)) == ("NO", "N_IS_ODD_PRIME_POWER")
    assert verdict(SimpleGroupId.alt(18)) == ("NO", "N_IS_FERMAT_PLUS_ONE")
    assert verdict(SimpleGroupId.alt(12)) == ("YES", "DROP_ONE_POINT")
    assert verdict(SimpleGroupId.alt(34)) == ("YES", "DROP_TRANSPOSITION_PAIR")
    assert classify(SimpleGroupId.alt(34)).witness == "(S32xS2)∩A34"
    assert classify(SimpleGroupId.alt(12)).witness == "A11"
    with pytest.raises(NotSimple):
        classify(SimpleGroupId.alt(4))


def test_alternating_no_set_small():
    assert alternating_no_set(20) == [5, 6, 7, 9, 10, 11, 13, 17, 18, 19]


def test_psp4_verdicts():
    assert verdict(SimpleGroupId.psp4(2)) == ("NO", "Q_EQUALS_2")
    assert verdict(SimpleGroupId.psp4(9)) == ("NO", "Q_POWER_OF_3")
    r = classify(SimpleGroupId.psp4(5))
    assert (r.verdict, r.reason, r.witness) == ("YES", "FIELD_AUTOMORPHISM_EXTENSION", "PSp(2,25)⋊C2")


def test_even_symplectic():
    assert classify(SimpleGroupId.psp_even_even(4, 2)).witness == "Ω-(8,2)"
    assert classify(SimpleGroupId.psp_even_even(2, 4)).reason == "FIELD_AUTOMORPHISM_EXTENSION"
    with pytest.raises(NotSimple):
        classify(SimpleGroupId.psp_even_even(2, 2))
    with pytest.raises(InvalidSpec):
        classify(SimpleGroupId.psp_even_even(3, 2))
    with pytest.raises(InvalidSpec):
        classify(SimpleGroupId.psp_even_even(4, 3))


def test_odd_orthogonal():
    assert verdict(SimpleGroupId.pomega_odd(4, 3)) == ("YES", "MINUS_TYPE_SUBGROUP")
    assert verdict(SimpleGroupId.pomega_odd(4, 7)) == ("NO", "DEFINING_CHAR_GAP")  # 2m-1 = 7
    assert verdict(SimpleGroupId.pomega_odd(14, 3)) == ("NO", "DEFINING_CHAR_GAP")  # 27 = 3^3
    assert verdict(SimpleGroupId.pomega_odd(6, 3)) == ("YES", "MINUS_TYPE_SUBGROUP")  # 11 is not a power of 3
    assert verdict(SimpleGroupId.pomega_odd(3, 5)) == ("NO", "NotInTable1")
    r = classify(SimpleGroupId.pomega_odd(2, 5))
    assert r.verdict == "YES" and "PSp(4,q)" in r.note
    with pytest.raises(InvalidSpec):
        classify(SimpleGroupId.pomega_odd(4, 4))


def test_plus_type():
    assert classify(SimpleGroupId.pomega_plus(4, 2)).witness == "Ω(7,2)"
    assert verdict(SimpleGroupId.pomega_plus(5, 3)) == ("NO", "NotInTable1")
    with pytest.raises(NotSimple):
        classify(SimpleGroupId.pomega_plus(2, 3))


def test_named_rows():
    for name in ("M12", "M24", "HS"):
        r = classify(SimpleGroupId.named(name))
        assert (r.verdict, r.witness) == ("YES", TABLE1_EQUAL[name])
    for name in ("M11", "U3(3)", "Co2", "McL"):
        assert verdict(SimpleGroupId.named(name)) == ("NO", "TABLE_ROW_UNEQUAL")
    assert verdict(SimpleGroupId.named("J1")) == ("NO", "NotInTable1")
    assert verdict(SimpleGroupId.named("A6")) == ("NO", "N_IS_FERMAT_PLUS_ONE")
    assert classify(SimpleGroupId.named("PSp4(7)")).verdict == "YES"
    assert classify(SimpleGroupId.named("O8+(2)")).verdict == "YES"


def test_result_validation():
    with pytest.raises(ValueError):
        ClassificationResult("A12", "YES", "DROP_ONE_POINT", "x")
    with pytest.raises(ValueError):
        ClassificationResult("A10", "NO", "DROP_ONE_POINT", "x")
    with pytest.raises(InvalidSpec):
        SimpleGroupId("Lie", (2,))


def test_table_data_consistent():
    for g, eg, m, em in TABLE3:
        assert m in TABLE1[g] or g in ("A6",)
        assert (eg == em) == (g in TABLE1_EQUAL)
        assert eg % em == 0


def test_odd_extension_and_parabolics():
    assert odd_extension_exponent(60, 3) == 3
    with pytest.raises(EvenPrime):
        odd_extension_exponent(60, 2)
    with pytest.raises(NonPrime):
        odd_extension_exponent(60, 9)
    ex = parabolic_exclusions()
    assert [e.group for e in ex] == ["U4(2)", "O8+(2)", "L6(2)"]
    assert all(e.excluded for e in ex)
    assert [(e.exp_p_group.value, e.exp_p_subgroup.value) for e in ex] == [(9, 3), (9, 3), (9, 3)]


def test_witness_for_no_verdict_rejected():
    with pytest.raises(InvalidSpec):
        verify_witness(SimpleGroupId.alt(10))


def test_cheap_witnesses():
    for gid in (SimpleGroupId.alt(12), SimpleGroupId.alt(34),
                SimpleGroupId.pomega_odd(6, 5), SimpleGroupId.psp_even_even(4, 4)):
        rep = verify_witness(gid)
        assert rep.ok, rep
    assert len(default_witness_ids()) >= 10
