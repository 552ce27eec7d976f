"""Finite fields GF(p^k) in a polynomial basis over the canonical modulus.

Elements are encoded as integers: the coefficient of x^i is the i-th base-p
digit.  Integer order on the encoding is the coefficient-lex order used for
every deterministic choice in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import BadResidue, NoSuchRoot, NonPrime, TooLarge, ZeroElement
from .numth import factorize, is_prime

MAX_FIELD_SIZE = 2**20
_TABLE_LIMIT = 1024


# -- polynomials over GF(p), coefficient lists low -> high ---------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(_ptrim(a)) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _ptrim(_pmod(a, b, p))
    return a


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return _ptrim(result)


def is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial f over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**k, f, p), x, p):
        return False
    for ell in factorize(k).primes:
        h = _psub(_ppowmod(x, p ** (k // ell), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(n % p)
        n //= p
    return out


# -- fields --------------------------------------------------------------------

class FiniteField:
    """GF(p^k); construct through make_field so instances are canonical."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (make_field, (self.p, self.k))

    # scalar arithmetic on encodings
    def coeffs(self, a: int) -> list[int]:
        return _digits(a, self.p, self.k)

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs) + [0] * (self.k - len(coeffs))
        coeffs = _pmod([c % self.p for c in coeffs], list(self.modulus), self.p)
        coeffs = coeffs + [0] * (self.k - len(coeffs))
        return sum(c * self.p**i for i, c in enumerate(coeffs[: self.k]))

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.encode([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.encode([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self.q <= _TABLE_LIMIT:
            return int(self.mul_table[a, b])
        prod = _pmul(_ptrim(self.coeffs(a)), _ptrim(self.coeffs(b)), self.p)
        return self.encode(_pmod(prod, list(self.modulus), self.p))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("0 has no inverse")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, j: int = 1) -> int:
        return self.pow(a, self.p**j)

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def element(self, value) -> FieldElement:
        if isinstance(value, (list, tuple)):
            value = self.encode(value)
        return FieldElement(self, int(value))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.q)]

    # vectorized tables for small fields
    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        if q > _TABLE_LIMIT:
            raise TooLarge(f"no tables for fields above {_TABLE_LIMIT} elements")
        if self.k == 1:
            r = np.arange(q, dtype=np.int64)
            return (np.multiply.outer(r, r) % q).astype(np.int32)
        t = np.zeros((q, q), dtype=np.int32)
        mod = list(self.modulus)
        cs = [_ptrim(self.coeffs(a)) for a in range(q)]
        for a in range(1, q):
            for b in range(a, q):
                c = self.encode(_pmod(_pmul(cs[a], cs[b], self.p), mod, self.p))
                t[a, b] = t[b, a] = c
        return t

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.q
        if q > _TABLE_LIMIT:
            raise TooLarge(f"no tables for fields above {_TABLE_LIMIT} elements")
        digits = np.array([_digits(a, self.p, self.k) for a in range(q)], dtype=np.int64)
        s = (digits[:, None, :] + digits[None, :, :]) % self.p
        weights = self.p ** np.arange(self.k, dtype=np.int64)
        return (s @ weights).astype(np.int32)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int32)

    @cached_property
    def inv_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=np.int32)
        for a in range(1, self.q):
            t[a] = self.inv(a)
        return t

    @cached_property
    def primitive_element(self) -> int:
        """Least generator of the multiplicative group."""
        n = self.q - 1
        ps = factorize(n).primes if n > 1 else []
        for a in range(1, self.q):
            if all(self.pow(a, n // ell) != 1 for ell in ps):
                return a
        raise AssertionError("no primitive element")


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FiniteField:
    """GF(p^k) with the lexicographically least monic irreducible modulus."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > MAX_FIELD_SIZE:
        raise TooLarge(f"GF({p}^{k}) exceeds {MAX_FIELD_SIZE} elements")
    for tail in range(p**k):
        f = _digits(tail, p, k) + [1]
        if is_irreducible(f, p):
            return FiniteField(p, k, tuple(f))
    raise AssertionError("no irreducible polynomial found")


def field_of_order(q: int) -> FiniteField:
    f = factorize(q).factors
    if len(f) != 1:
        raise NonPrime(f"{q} is not a prime power")
    ((p, k),) = f.items()
    return make_field(p, k)


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    value: int

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            return other.value
        return self.field.from_int(int(other))

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.field!r}({self.value})"


def elem_mult_order(x: FieldElement | tuple[FiniteField, int]) -> int:
    F, a = (x.field, x.value) if isinstance(x, FieldElement) else x
    if a == 0:
        raise ZeroElement("0 has no multiplicative order")
    n = F.q - 1
    order = n
    for ell in factorize(n).primes if n > 1 else []:
        while order % ell == 0 and F.pow(a, order // ell) == 1:
            order //= ell
    return order


def root_of_unity(F: FiniteField, n: int) -> FieldElement:
    """The coefficient-lex least element of exact multiplicative order n."""
    if n < 1 or (F.q - 1) % n:
        raise NoSuchRoot(f"{n} does not divide {F.q - 1}")
    g = F.primitive_element
    base = F.pow(g, (F.q - 1) // n)
    best = None
    power = 1
    for j in range(n):
        if np.gcd(j, n) == 1:
            best = power if best is None else min(best, power)
        power = F.mul(power, base)
    return FieldElement(F, best)


def split_root_pair(q: int, s: int) -> tuple[FieldElement, FieldElement]:
    """(a, b) in GF(q) with a + b*sqrt(-1) of exact order 2^s in GF(q^2).

    Needs q = 3 mod 4 so that sqrt(-1) lies outside GF(q).  The pair is the
    lex-least (a major, then b) among all valid choices.
    """
    F = field_of_order(q)
    if q % 4 != 3:
        raise BadResidue(f"q = {q} is not 3 mod 4")
    if s < 1 or (q * q - 1) % 2**s:
        raise NoSuchRoot(f"2^{s} does not divide q^2 - 1")
    minus_one = F.neg(1)
    mul, add = F.mul, F.add

    def cmul(x, y):
        (a, b), (c, d) = x, y
        return add(mul(a, c), mul(minus_one, mul(b, d))), add(mul(a, d), mul(b, c))

    def cpow(x, e):
        r = (1, 0)
        while e:
            if e & 1:
                r = cmul(r, x)
            x = cmul(x, x)
            e >>= 1
        return r

    half = 2 ** (s - 1)
    for a in range(q):
        for b in range(q):
            if (a, b) == (0, 0):
                continue
            h = cpow((a, b), half)
            if h != (1, 0) and cmul(h, h) == (1, 0):
                return FieldElement(F, a), FieldElement(F, b)
    raise NoSuchRoot(f"no element of order 2^{s}")


@lru_cache(maxsize=None)
def subfield_embedding(small: FiniteField, big: FiniteField) -> tuple[int, ...]:
    """Encoding map small -> big sending x to the least root of small's modulus."""
    if small.p != big.p or big.k % small.k:
        raise ValueError(f"{small!r} is not a subfield of {big!r}")
    mod = small.modulus

    def ev(poly, r):
        acc = 0
        for c in reversed(poly):
            acc = big.add(big.mul(acc, r), big.from_int(c))
        return acc

    for r in range(big.q):
        if ev(mod, r) == 0:
            break
    else:
        raise AssertionError("modulus has no root in the extension")
    return tuple(ev(small.coeffs(a), r) for a in range(small.q))


def minimal_polynomial(big: FiniteField, a: int, small: FiniteField) -> list[int]:
    """Monic minimal polynomial of a over the subfield `small`, in small's encoding.

    Coefficients low -> high.
    """
    emb = subfield_embedding(small, big)
    back = {v: i for i, v in enumerate(emb)}
    conj = [a]
    while True:
        nxt = big.pow(conj[-1], small.q)
        if nxt == a:
            break
        conj.append(nxt)
    poly = [1]  # in big's encoding
    for c in conj:
        # poly *= (X - c)
        out = [0] * (len(poly) + 1)
        for i, pi in enumerate(poly):
            out[i + 1] = big.add(out[i + 1], pi)
            out[i] = big.add(out[i], big.mul(big.neg(c), pi))
        poly = out
    return [back[c] for c in poly]
