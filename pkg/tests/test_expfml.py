import math
from itertools import permutations

import pytest

from expgroups.classical import ClassicalSpec
from expgroups.errors import EvenCharacteristic, FamilyNotCovered, InvalidSpec, OutOfRange, PNotDividing
from expgroups.expfml import (
    coxeter_number,
    exp_2_odd_char,
    exp_p,
    exp_p_alternating,
    exp_p_cross_char,
    exp_p_defining_char,
    exponent_alternating,
    exponent_alternating_by_partitions,
    exponent_alternating_intersection,
    exponent_formula,
    omega_even_2_by_eq5,
)
from expgroups.numth import is_power_of_two, primes_up_to


def S(*a):
    return ClassicalSpec(*a)


def test_frozen_p_parts():
    assert exp_p(S("GL", 3, 4), 3) == 9
    assert exp_p(S("Sp", 8, 2), 5) == 5
    assert exp_p(S("Sp", 6, 2), 7) == 7
    assert exp_p(S("PSp", 4, 9), 2) == 8
    assert exp_p(S("PSp", 2, 5), 2) == 2
    assert exp_p(S("OmegaOdd", 9, 3), 2) == 8
    assert exp_p(S("PSp", 4, 3), 3) == 9
    assert exp_p(S("Sp", 6, 2), 2) == 8
    assert exp_p(S("PSp", 4, 7), 7) == 7


def test_frozen_full_exponents():
    assert exponent_formula(S("PSp", 4, 7)) == 4200
    assert exponent_formula(S("Sp", 6, 2)) == 2520
    assert exponent_formula(S("OmegaEven", 8, 2, 1)) == 2520
    assert exponent_formula(S("PSp", 4, 3)) == 180
    assert exponent_formula(S("PSp", 4, 5)) == 780
    assert exponent_formula(S("POmegaEven", 6, 3, -1)) == 2520


def test_errors():
    with pytest.raises(PNotDividing):
        exp_p(S("PSp", 4, 7), 11)
    with pytest.raises(InvalidSpec):
        exp_p_cross_char(S("Sp", 4, 7), 2)
    with pytest.raises(InvalidSpec):
        exp_p_cross_char(S("Sp", 4, 9), 3)
    with pytest.raises(EvenCharacteristic):
        exp_2_odd_char(S("Sp", 4, 4))
    with pytest.raises(FamilyNotCovered):
        exp_2_odd_char(S("GL", 3, 5))
    with pytest.raises(FamilyNotCovered):
        exp_p_cross_char(S("SL", 3, 2), 7)
    with pytest.raises(OutOfRange):
        omega_even_2_by_eq5(3, 2)


def _cross_or_one(spec, p):
    try:
        return exp_p_cross_char(spec, p).value
    except PNotDividing:
        return 1


@pytest.mark.parametrize("p,q", [(3, 2), (3, 4), (5, 2), (5, 7), (7, 2)])
def test_cross_char_monotone_in_dimension(p, q):
    gl = [_cross_or_one(S("GL", n, q), p) for n in range(1, 25)]
    sp = [_cross_or_one(S("Sp", 2 * n, q), p) for n in range(1, 25)]
    assert gl == sorted(gl)
    assert sp == sorted(sp)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_projective_symplectic_two_part(q):
    for n in range(1, 9):
        sp = exp_2_odd_char(S("Sp", 2 * n, q)).value
        psp = exp_2_odd_char(S("PSp", 2 * n, q)).value
        assert psp * (2 if is_power_of_two(n) else 1) == sp


def test_defining_char_dichotomy():
    for p in primes_up_to(13):
        a = exp_p_defining_char(S("Sp", 4, p)).value
        b = exp_p_defining_char(S("Sp", 2, p * p)).value
        assert (a == p * b) == (p in (2, 3))
        assert a in (b, p * b)


def test_coxeter_numbers():
    assert coxeter_number(S("Sp", 8, 3)) == 8
    assert coxeter_number(S("OmegaOdd", 7, 3)) == 6
    assert coxeter_number(S("OmegaEven", 8, 3, 1)) == 6


def test_eq5_consistent_with_two_part():
    for q in (3, 5, 7, 9, 11, 13):
        for m in range(3, 9):
            for eta in (1, -1):
                if (q**m - eta) % 4:  # the rule covers q^m = eta mod 4
                    continue
                assert omega_even_2_by_eq5(q, m) == exp_2_odd_char(S("OmegaEven", 2 * m, q, eta))


def _brute_alt_exponent(n):
    orders = set()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        if inv % 2:
            continue
        seen, lens = set(), []
        for i in range(n):
            j, c = i, 0
            while j not in seen:
                seen.add(j)
                j = perm[j]
                c += 1
            if c:
                lens.append(c)
        orders.add(math.lcm(*lens))
    return math.lcm(*orders)


def test_alternating_small_by_brute_force():
    for n in range(2, 9):
        assert exponent_alternating(n) == _brute_alt_exponent(n)


def test_alternating_frozen():
    assert exponent_alternating(6) == 60
    assert exponent_alternating(7) == 420
    assert exponent_alternating(9) == 1260
    assert exponent_alternating(11) == exponent_alternating(12) == 27720
    assert exp_p_alternating(10, 2) == 8
    with pytest.raises(OutOfRange):
        exp_p_alternating(1, 2)
    with pytest.raises(InvalidSpec):
        exp_p_alternating(10, 4)


def test_partition_oracle_equivalence():
    for n in range(2, 41):
        assert exponent_alternating(n) == exponent_alternating_by_partitions(n)


def test_intersection_cases():
    for n in range(6, 20):
        assert exponent_alternating_intersection(n, n - 1) == exponent_alternating(n - 1)
    assert exponent_alternating_intersection(34, 32) == exponent_alternating(34)
    with pytest.raises(OutOfRange):
        exponent_alternating_intersection(10, 4)


def test_intersection_at_ten():
    a, b = exponent_alternating_intersection(10, 8), exponent_alternating(10)
    assert a.value < b.value and a.divides(b)
    assert a.p_part(3).value < b.p_part(3).value
    # an 8-cycle times a transposition is even and lies in (S8 x S2) ∩ A10
    assert a.p_part(2) == b.p_part(2) == 8
