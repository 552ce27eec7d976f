"""Closed-form exponents of classical and alternating groups, prime by prime.

Three regimes for a prime p and a group over GF(q):
  * p odd, p not dividing q  -- wreath towers over a cyclic seed;
  * p = 2, q odd             -- the W, W', W'' towers;
  * p dividing q             -- the least p-power exceeding c - 1, c the
                                Coxeter number.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .classical import EVEN_ORTHOGONAL, ODD_ORTHOGONAL, ClassicalSpec, order_factored, order_value
from .errors import EvenCharacteristic, FamilyNotCovered, InvalidSpec, OutOfRange, PNotDividing
from .numth import (
    FactoredInteger,
    floor_log,
    is_power_of_two,
    is_prime,
    prime_local_data,
    primes_up_to,
    two_local_s,
)


def _pp(p: int, k: int) -> FactoredInteger:
    return FactoredInteger({p: k}) if k > 0 else FactoredInteger()


def _check_divides(spec: ClassicalSpec, p: int) -> None:
    if order_value(spec) % p:
        raise PNotDividing(f"{p} does not divide |{spec}|")


# -- p odd, coprime to q ---------------------------------------------------------

def _tower_height(unit: int, p: int, bound: int) -> int:
    """Largest v with unit * p^v <= bound (bound >= unit)."""
    v = 0
    while unit * p ** (v + 1) <= bound:
        v += 1
    return v


def _gl_count(p: int, q: int, n: int) -> FactoredInteger:
    d = prime_local_data(p, q)
    if n < d.e:
        return FactoredInteger()
    return _pp(p, d.r + _tower_height(d.e, p, n))


def _sp_count(p: int, q: int, two_n: int) -> FactoredInteger:
    """Sylow count for Sp(2n,q): GL(2n) when e is even, towers over Sp(2e) when e is odd."""
    d = prime_local_data(p, q)
    if d.e % 2 == 0:
        return _gl_count(p, q, two_n)
    if two_n < 2 * d.e:
        return FactoredInteger()
    return _pp(p, d.r + _tower_height(2 * d.e, p, two_n))


def exp_p_cross_char(spec: ClassicalSpec, p: int) -> FactoredInteger:
    """p-part of the exponent for an odd prime p not dividing q."""
    if p == 2 or not is_prime(p):
        raise InvalidSpec("cross-characteristic formulas need an odd prime")
    if spec.q % p == 0:
        raise InvalidSpec(f"{p} divides q = {spec.q}")
    _check_divides(spec, p)
    fam, dim, q = spec.family, spec.dim, spec.q
    if fam == "GL":
        return _gl_count(p, q, dim)
    if fam in ("SL", "PSL"):
        if dim == 2:
            return _sp_count(p, q, 2)
        raise FamilyNotCovered(f"{fam}({dim},{q}) is only handled as a Sylow carrier in dimension 2")
    if fam in ("Sp", "PSp"):
        return _sp_count(p, q, dim)
    if fam in ODD_ORTHOGONAL:
        return _sp_count(p, q, dim - 1)
    m = dim // 2
    if (q**m - spec.sign) % p == 0:
        return _sp_count(p, q, 2 * m)
    return _sp_count(p, q, 2 * m - 2)


# -- p = 2, q odd ---------------------------------------------------------------------

def _rt(degree: int) -> int:
    """r_t with 2^r_t <= degree < 2^(r_t + 1)."""
    return floor_log(2, degree)


def _two_rule(s: int, degree: int, param: int) -> FactoredInteger:
    return _pp(2, s + _rt(degree) - (2 if is_power_of_two(param) else 1))


def _so_odd_2(s: int, two_n: int) -> int:
    """log2 of exp_2(SO(2n+1,q)) = exp of W_{r_t}; 0 for n = 0."""
    return s + _rt(two_n) - 1 if two_n else 0


def _go_even_2(q: int, n: int, eta: int) -> int:
    """log2 of exp_2(GO^eta(2n,q)); 0 for n = 0."""
    if n == 0:
        return 0
    s = two_local_s(q)
    if (q**n - eta) % 4 == 0:
        return _so_odd_2(s, 2 * n)
    return max(1, _so_odd_2(s, 2 * n - 2))


def _omega_even_2(q: int, m: int, eta: int, projective: bool) -> int:
    s = two_local_s(q)
    if (q**m + eta) % 4 == 0:
        # q^m = -eta mod 4: Sylow of GO^eta'(2m-2,q), q^(m-1) = eta' mod 4
        eta2 = 1 if q ** (m - 1) % 4 == 1 else -1
        return _go_even_2(q, m - 1, eta2)
    if m > 2:
        return s + _rt(2 * m) - (2 if is_power_of_two(m) else 1)
    if m == 2:
        return s - 1 if projective else s
    if projective:
        raise OutOfRange("POmega(2,q) is not covered")
    return s - 1


def exp_2_odd_char(spec: ClassicalSpec) -> FactoredInteger:
    """2-part of the exponent for q odd."""
    q = spec.q
    if q % 2 == 0:
        raise EvenCharacteristic(f"q = {q} is even")
    _check_divides(spec, 2)
    s = two_local_s(q)
    fam, dim = spec.family, spec.dim
    if fam in ("SL", "PSL"):
        if dim != 2:
            raise FamilyNotCovered(f"{fam}({dim},{q}) has no 2-part formula here")
        fam = "Sp" if fam == "SL" else "PSp"
    if fam == "GL":
        raise FamilyNotCovered("GL 2-parts in odd characteristic are not covered")
    if fam == "Sp":
        return _pp(2, s + _rt(dim) - 1)
    if fam == "PSp":
        return _two_rule(s, dim, dim // 2)
    if fam == "SOodd":
        return _pp(2, _so_odd_2(s, dim - 1))
    if fam in ("OmegaOdd", "POmegaOdd"):
        return _two_rule(s, dim, (dim - 1) // 2)
    m, eta = dim // 2, spec.sign
    if fam in ("GOeven", "SOeven"):
        return _pp(2, _go_even_2(q, m, eta))
    if fam in ("OmegaEven", "POmegaEven"):
        return _pp(2, _omega_even_2(q, m, eta, fam == "POmegaEven"))
    if fam == "Keven":
        if (q**m - eta) % 4 == 0 and is_power_of_two(m):
            r = floor_log(2, m)
            return _pp(2, r + s - 1)
        lo = _omega_even_2(q, m, eta, False)
        hi = _go_even_2(q, m, eta)
        if lo == hi:
            return _pp(2, hi)
        raise FamilyNotCovered(f"{spec}: spinor kernel 2-part not determined")
    raise FamilyNotCovered(str(spec))


def omega_even_2_by_eq5(q: int, m: int) -> FactoredInteger:
    """The m > 2 statement for Omega^eta(2m,q), independent of eta."""
    if m <= 2:
        raise OutOfRange("this rule is stated for m > 2 only")
    return _two_rule(two_local_s(q), 2 * m, m)


# -- p | q --------------------------------------------------------------------------

def coxeter_number(spec: ClassicalSpec) -> int:
    fam, dim = spec.family, spec.dim
    if fam in ("GL", "SL", "PSL"):
        return dim
    if fam in ("Sp", "PSp"):
        return dim
    if fam in ODD_ORTHOGONAL:
        return dim - 1
    return dim - 2


def exp_p_defining_char(spec: ClassicalSpec) -> FactoredInteger:
    """min{p^a : p^a > c - 1}."""
    p = spec.p
    _check_divides(spec, p)
    if spec.family in EVEN_ORTHOGONAL and spec.family not in ("OmegaEven", "POmegaEven") and p == 2:
        raise FamilyNotCovered(f"{spec}: only Omega is covered in characteristic 2")
    c = coxeter_number(spec)
    a = 0
    while p**a <= c - 1:
        a += 1
    return _pp(p, a)


# -- assembly -------------------------------------------------------------------------

def exp_p(spec: ClassicalSpec, p: int) -> FactoredInteger:
    if spec.q % p == 0:
        return exp_p_defining_char(spec)
    if p == 2:
        return exp_2_odd_char(spec)
    return exp_p_cross_char(spec, p)


def exponent_formula(spec: ClassicalSpec) -> FactoredInteger:
    """Product over the primes dividing the group order of the p-parts."""
    out = FactoredInteger()
    for p in order_factored(spec).primes:
        out = out * exp_p(spec, p)
    return out


# -- alternating groups --------------------------------------------------------------

def exp_p_alternating(n: int, p: int) -> FactoredInteger:
    """odd p: largest p^t <= n; p = 2: largest 2^t with 2^t + 2 <= n."""
    if n < 2:
        raise OutOfRange("n must be at least 2")
    if not is_prime(p):
        raise InvalidSpec(f"{p} is not prime")
    if p == 2:
        return _pp(2, floor_log(2, n - 2)) if n >= 4 else FactoredInteger()
    return _pp(p, floor_log(p, n)) if p <= n else FactoredInteger()


def exponent_alternating(n: int) -> FactoredInteger:
    out = FactoredInteger()
    for p in primes_up_to(n):
        out = out * exp_p_alternating(n, p)
    return out


@lru_cache(maxsize=None)
def partition_lcm_parity(k: int) -> frozenset[tuple[int, int]]:
    """{(lcm of parts, sign parity)} over all partitions of k."""
    table: list[set[tuple[int, int]]] = [set() for _ in range(k + 1)]
    table[0].add((1, 0))
    for j in range(1, k + 1):
        flip = (j - 1) & 1
        for t in range(j, k + 1):
            table[t].update((math.lcm(L, j), par ^ flip) for L, par in table[t - j])
    return frozenset(table[k])


def exponent_alternating_by_partitions(n: int) -> FactoredInteger:
    """lcm of cycle-type orders over even permutations of n points."""
    vals = {L for L, par in partition_lcm_parity(n) if par == 0}
    return FactoredInteger.of(math.lcm(*vals))


def exponent_alternating_intersection(n: int, k: int) -> FactoredInteger:
    """Exponent of (S_k x S_(n-k)) intersected with A_n, for n/2 <= k < n."""
    if not (2 * k >= n and k < n):
        raise OutOfRange(f"need n/2 <= k < n, got n={n}, k={k}")
    left = partition_lcm_parity(k)
    right = partition_lcm_parity(n - k)
    vals = set()
    for L1, a in left:
        for L2, b in right:
            if a == b:
                vals.add(math.lcm(L1, L2))
    return FactoredInteger.of(math.lcm(*vals))
