import math

import pytest

from expgroups.errors import EvenInput, NonPrime, NotCoprime
from expgroups.numth import (
    FactoredInteger,
    factorize,
    floor_log,
    is_fermat_prime,
    is_power_of_two,
    is_prime,
    is_prime_power,
    lcm_all,
    mult_order,
    padic_valuation,
    prime_local_data,
    prime_power_base,
    primes_up_to,
    two_local_s,
)


def test_is_prime_matches_sieve():
    sieve = set(primes_up_to(5000))
    assert [n for n in range(5001) if is_prime(n)] == sorted(sieve)


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_factorize_roundtrip():
    for n in range(1, 3000):
        f = factorize(n)
        assert f.value == n
        assert all(is_prime(p) for p in f.primes)


def test_factorize_needs_pollard():
    n = 1000003 * 998244353
    assert factorize(n).factors == {1000003: 1, 998244353: 1}
    assert factorize(2**64 - 1).factors == {3: 1, 5: 1, 17: 1, 257: 1, 641: 1, 65537: 1, 6700417: 1}


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)


def test_factored_arithmetic():
    a, b = FactoredInteger.of(360), FactoredInteger.of(84)
    assert (a * b).value == 360 * 84
    assert a.lcm(b).value == math.lcm(360, 84)
    assert a.gcd(b).value == math.gcd(360, 84)
    assert (a / 12).value == 30
    assert FactoredInteger.of(12).divides(a)
    assert not b.divides(a)
    with pytest.raises(ValueError):
        b / a
    assert str(a) == "2^3*3^2*5"
    assert str(FactoredInteger()) == "1"
    assert a == 360 and a != 361
    assert a.p_part(3) == 9 and a.p_part(7) == 1


def test_lcm_all():
    assert lcm_all(range(1, 11)) == 2520
    assert lcm_all([]) == 1


def test_padic_and_mult_order():
    assert padic_valuation(2, 96) == 5
    assert padic_valuation(3, 96) == 1
    with pytest.raises(NonPrime):
        padic_valuation(4, 16)
    for p in primes_up_to(60)[1:]:
        for q in range(2, 30):
            if q % p == 0:
                continue
            e = mult_order(p, q)
            assert pow(q, e, p) == 1
            assert all(pow(q, d, p) != 1 for d in range(1, e))
    with pytest.raises(NotCoprime):
        mult_order(3, 9)


def test_prime_local_data():
    d = prime_local_data(3, 2)
    assert (d.e, d.r, d.x) == (2, 1, 1)
    d = prime_local_data(5, 7)
    assert (d.e, d.r, d.x) == (4, 2, 96)
    with pytest.raises(EvenInput):
        prime_local_data(2, 3)
    with pytest.raises(NotCoprime):
        prime_local_data(3, 6)


def test_two_local_s():
    assert [two_local_s(q) for q in (3, 5, 7, 9, 11, 17, 31)] == [2, 2, 3, 3, 2, 4, 5]
    with pytest.raises(EvenInput):
        two_local_s(4)


def test_prime_power_helpers():
    assert [n for n in range(1, 30) if is_prime_power(n)] == [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29,
    ]
    assert prime_power_base(81) == (3, 4)
    with pytest.raises(ValueError):
        prime_power_base(12)
    assert [n for n in range(70000) if is_fermat_prime(n)] == [3, 5, 17, 257, 65537]
    assert is_power_of_two(1) and is_power_of_two(64) and not is_power_of_two(96)
    assert floor_log(2, 1) == 0 and floor_log(2, 8) == 3 and floor_log(3, 26) == 2
