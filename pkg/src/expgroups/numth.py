"""Exact integer number theory: factorization, valuations, multiplicative orders."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Mapping

from .errors import EvenInput, NonPrime, NotCoprime

# deterministic for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for all n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")


class FactoredInteger:
    """A positive integer stored as a prime -> multiplicity map."""

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] | None = None):
        clean = {}
        for p, e in (factors or {}).items():
            if e < 0:
                raise ValueError(f"negative multiplicity for {p}")
            if e:
                clean[int(p)] = int(e)
        self._factors = dict(sorted(clean.items()))

    @classmethod
    def of(cls, n: int) -> FactoredInteger:
        return factorize(n)

    @classmethod
    def prime_power(cls, p: int, e: int) -> FactoredInteger:
        return cls({p: e})

    @property
    def factors(self) -> dict[int, int]:
        return dict(self._factors)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self._factors.items())

    def __int__(self) -> int:
        return self.value

    @property
    def primes(self) -> list[int]:
        return list(self._factors)

    def multiplicity(self, p: int) -> int:
        return self._factors.get(p, 0)

    def p_part(self, p: int) -> FactoredInteger:
        e = self._factors.get(p, 0)
        return FactoredInteger({p: e} if e else {})

    def __mul__(self, other: FactoredInteger | int) -> FactoredInteger:
        other = _coerce(other)
        out = dict(self._factors)
        for p, e in other._factors.items():
            out[p] = out.get(p, 0) + e
        return FactoredInteger(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> FactoredInteger:
        return FactoredInteger({p: e * k for p, e in self._factors.items()})

    def __truediv__(self, other: FactoredInteger | int) -> FactoredInteger:
        other = _coerce(other)
        out = dict(self._factors)
        for p, e in other._factors.items():
            if out.get(p, 0) < e:
                raise ValueError(f"{other} does not divide {self}")
            out[p] -= e
        return FactoredInteger(out)

    def divides(self, other: FactoredInteger | int) -> bool:
        other = _coerce(other)
        return all(other._factors.get(p, 0) >= e for p, e in self._factors.items())

    def lcm(self, other: FactoredInteger | int) -> FactoredInteger:
        other = _coerce(other)
        out = dict(self._factors)
        for p, e in other._factors.items():
            out[p] = max(out.get(p, 0), e)
        return FactoredInteger(out)

    def gcd(self, other: FactoredInteger | int) -> FactoredInteger:
        other = _coerce(other)
        return FactoredInteger(
            {p: min(e, other._factors[p]) for p, e in self._factors.items() if p in other._factors}
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return other >= 1 and self.value == other
        if isinstance(other, FactoredInteger):
            return self._factors == other._factors
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._factors.items()))

    def __repr__(self) -> str:
        return f"FactoredInteger({self._factors})"

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self._factors.items())


def _coerce(x) -> FactoredInteger:
    if isinstance(x, FactoredInteger):
        return x
    return factorize(int(x))


def lcm_all(values: Iterable[FactoredInteger | int]) -> FactoredInteger:
    return reduce(lambda a, b: a.lcm(b), (_coerce(v) for v in values), FactoredInteger())


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of composite odd n (deterministic seeds)."""
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=4096)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel mod 30
    p, steps, i = 7, (4, 2, 4, 2, 4, 6, 2, 6), 0
    while p * p <= n and p < _TRIAL_LIMIT:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += steps[i]
        i = (i + 1) % 8
    if n > 1:
        if p * p > n:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_into(n, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> FactoredInteger:
    """Factor a positive integer (trial division, then Pollard-Brent)."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    return FactoredInteger(dict(_factorize_cached(int(n))))


def padic_valuation(p: int, n: int) -> int:
    _require_prime(p)
    if n < 1:
        raise ValueError("valuation needs a positive integer")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def mult_order(p: int, q: int) -> int:
    """Least e >= 1 with q^e = 1 mod p, for a prime p."""
    _require_prime(p)
    if q % p == 0:
        raise NotCoprime(f"{q} is not a unit mod {p}")
    e = p - 1
    for ell in factorize(p - 1).primes:
        while e % ell == 0 and pow(q, e // ell, p) == 1:
            e //= ell
    return e


@dataclass(frozen=True)
class PrimeLocalData:
    """q^e - 1 = p^r * x with e the order of q mod p and p not dividing x."""

    p: int
    q: int
    e: int
    r: int
    x: int


def prime_local_data(p: int, q: int) -> PrimeLocalData:
    _require_prime(p)
    if p == 2:
        raise EvenInput("prime_local_data is for odd primes")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    e = mult_order(p, q)
    n = q**e - 1
    r = padic_valuation(p, n)
    return PrimeLocalData(p=p, q=q, e=e, r=r, x=n // p**r)


def two_local_s(q: int) -> int:
    """The s with 2^(s+1) exactly dividing q^2 - 1, for odd q."""
    if q % 2 == 0:
        raise EvenInput(f"{q} is even")
    return padic_valuation(2, q * q - 1) - 1


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorize(n).primes) == 1


def prime_power_base(n: int) -> tuple[int, int]:
    """(p, k) with n = p^k; raises ValueError if n is not a prime power."""
    f = factorize(n).factors
    if len(f) != 1:
        raise ValueError(f"{n} is not a prime power")
    ((p, k),) = f.items()
    return p, k


def is_fermat_prime(n: int) -> bool:
    if n < 3 or not is_prime(n):
        return False
    m = n - 1
    if m & (m - 1):
        return False
    k = m.bit_length() - 1
    return k & (k - 1) == 0


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def floor_log(base: int, n: int) -> int:
    """Largest t with base^t <= n (n >= 1)."""
    t, acc = 0, base
    while acc <= n:
        acc *= base
        t += 1
    return t


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, v in enumerate(sieve) if v]
