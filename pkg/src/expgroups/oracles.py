"""Exponent oracles independent of the closed-form formulas.

Within the element budget the whole group is enumerated.  Above it (only
Sp(4,q) and PSp(4,q) are supported) each prime is settled by a certified
Sylow subgroup: a concrete p-subgroup whose generators preserve the form and
whose enumerated order equals |G|_p.  Its exponent is then exp_p(G).
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .classical import ClassicalSpec, order_factored, preserves_form_batch, standard_form, standard_generators
from .errors import CapExceeded, FamilyNotCovered, NotSimpleRange
from .gf import field_of_order
from .grpengine import (
    DEFAULT_BUDGET,
    Element,
    GroupHandle,
    MatrixAlgebra,
    batch_orders,
    element_order,
    enumerate_group,
    exponent,
)
from .numth import FactoredInteger, lcm_all, prime_local_data
from .sylowlab import w_tower_matrices


@dataclass
class SylowCertificate:
    p: int
    method: str
    order: int
    expected_order: int
    exponent: FactoredInteger

    @property
    def ok(self) -> bool:
        return self.order == self.expected_order


@dataclass
class OracleResult:
    spec: ClassicalSpec
    exponent: FactoredInteger
    mode: str  # "enumerated" or "sylow"
    certificates: list[SylowCertificate]
    order: int = 0  # elements enumerated, or the certified order

    def exp_p(self, p: int) -> FactoredInteger:
        return self.exponent.p_part(p)


def _in_group(alg: MatrixAlgebra, mats, form) -> bool:
    batch = np.stack([np.asarray(m, dtype=np.int32) for m in mats])
    return bool(preserves_form_batch(alg, batch, form).all())


def _handle(q: int, mats, projective: bool, name: str) -> GroupHandle:
    alg = MatrixAlgebra(field_of_order(q), len(mats[0]), projective)
    return GroupHandle(alg, [Element(alg, alg.from_rows(m)) for m in mats], name)


def _sylow_from_generators(spec: ClassicalSpec, p: int, mats, method: str, cap: int) -> SylowCertificate:
    form = standard_form("Sp", spec.dim, spec.q)
    if not _in_group(MatrixAlgebra(field_of_order(spec.q), spec.dim), mats, form):
        raise ValueError(f"{method}: generators leave the group")
    E = enumerate_group(_handle(spec.q, mats, spec.projective, method), cap)
    want = order_factored(spec).p_part(p).value
    return SylowCertificate(p, method, E.order, want, exponent(E))


def unitriangular_isometries(q: int, n: int = 4) -> np.ndarray:
    """All isometries of the standard symplectic form that are upper
    unitriangular in the basis e1, e2, ..., f2, f1 (a Borel unipotent radical)."""
    F = field_of_order(q)
    half = n // 2
    perm = [2 * i for i in range(half)] + [2 * i + 1 for i in reversed(range(half))]
    slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
    vals = np.array(list(itertools.product(range(q), repeat=len(slots))), dtype=np.int32)
    batch = np.zeros((len(vals), n, n), dtype=np.int32)
    for i in range(n):
        batch[:, perm[i], perm[i]] = 1
    for c, (i, j) in enumerate(slots):
        batch[:, perm[i], perm[j]] = vals[:, c]
    alg = MatrixAlgebra(F, n)
    ok = preserves_form_batch(alg, batch, standard_form("Sp", n, q))
    return batch[ok]


def _defining_sylow(spec: ClassicalSpec) -> SylowCertificate:
    U = unitriangular_isometries(spec.q, spec.dim)
    alg = MatrixAlgebra(field_of_order(spec.q), spec.dim)
    orders = batch_orders(alg, U)
    want = order_factored(spec).p_part(spec.p).value
    return SylowCertificate(spec.p, "unitriangular isometries", len(U), want, lcm_all(int(x) for x in np.unique(orders)))


def _block_diag(a, b) -> np.ndarray:
    n, m = len(a), len(b)
    out = np.zeros((n + m, n + m), dtype=np.int64)
    out[:n, :n] = a
    out[n:, n:] = b
    return out


def _sp2_sylow_generator(q: int, p: int) -> np.ndarray:
    """A generator of a (cyclic) Sylow p-subgroup of Sp(2,q), odd p."""
    H, _ = standard_generators(ClassicalSpec("Sp", 2, q))
    E = enumerate_group(H)
    orders = E.orders
    want = order_factored(ClassicalSpec("Sp", 2, q)).p_part(p).value
    i = int(np.flatnonzero(orders % want == 0)[0])
    g = E.element(i) ** (int(orders[i]) // want)
    return np.asarray(g.data[0], dtype=np.int64)


def _random_elements(handle: GroupHandle, count: int, length: int, seed: int):
    rng = np.random.default_rng(seed)
    gens = handle.generators
    for _ in range(count):
        g = gens[int(rng.integers(len(gens)))]
        for j in rng.integers(len(gens), size=length - 1):
            g = g * gens[int(j)]
        yield g


def _cyclic_sylow_by_search(spec: ClassicalSpec, p: int, tries: int = 4000) -> SylowCertificate:
    """Search for an element whose order carries the full p-part of |G|;
    a cyclic group of that order is then a Sylow subgroup."""
    H, _ = standard_generators(spec)
    total = order_factored(spec)
    want = total.p_part(p).value
    best = 1
    for g in _random_elements(H, tries, 24, seed=p * 1000 + spec.q):
        o = element_order(g, total)
        pp = FactoredInteger.of(o).p_part(p).value
        best = max(best, pp)
        if best == want:
            break
    return SylowCertificate(p, "cyclic element search", best, want, FactoredInteger.of(best))


def sylow_certificate(spec: ClassicalSpec, p: int, cap: int = DEFAULT_BUDGET) -> SylowCertificate:
    """Certified exp_p for Sp(4,q) or PSp(4,q)."""
    if spec.family not in ("Sp", "PSp") or spec.dim != 4:
        raise FamilyNotCovered("Sylow certificates are implemented for Sp(4,q) and PSp(4,q)")
    q = spec.q
    if q % p == 0:
        return _defining_sylow(spec)
    if p == 2:
        return _sylow_from_generators(spec, 2, w_tower_matrices(q, 2), "W_2 wreath tower", cap)
    d = prime_local_data(p, q)
    if d.e in (1, 2):
        g = _sp2_sylow_generator(q, p)
        one = np.eye(2, dtype=np.int64)
        return _sylow_from_generators(spec, p, [_block_diag(g, one), _block_diag(one, g)], "Sp(2,q) x Sp(2,q) Sylow", cap)
    return _cyclic_sylow_by_search(spec, p)


def oracle_exponent(spec: ClassicalSpec, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Exponent by full enumeration, or prime by prime through certified Sylow subgroups."""
    total = order_factored(spec)
    if total.value <= budget:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NotSimpleRange)
            H, _ = standard_generators(spec, budget)
        E = enumerate_group(H, budget)
        return OracleResult(spec, exponent(E), "enumerated", [], E.order)
    if spec.family not in ("Sp", "PSp") or spec.dim != 4:
        raise CapExceeded(budget, total.value)
    certs = [sylow_certificate(spec, p, budget) for p in total.primes]
    bad = [c for c in certs if not c.ok]
    if bad:
        raise ValueError(f"uncertified Sylow subgroups: {bad}")
    out = FactoredInteger()
    for c in certs:
        out = out * c.exponent
    return OracleResult(spec, out, "sylow", certs, total.value)


# -- formula-vs-oracle grid ------------------------------------------------------------

def default_grid(budget: int = DEFAULT_BUDGET) -> list[ClassicalSpec]:
    specs = []
    for n in (2, 3, 4):
        for q in (2, 3, 4, 5):
            s = ClassicalSpec("GL", n, q)
            if order_factored(s).value <= budget:
                specs.append(s)
    for q in (2, 3, 4, 5, 7, 9):
        specs += [ClassicalSpec("Sp", 2, q), ClassicalSpec("Sp", 4, q), ClassicalSpec("PSp", 4, q)]
    specs.append(ClassicalSpec("OmegaOdd", 5, 3))
    for q in (3, 5, 7):
        specs += [
            ClassicalSpec("SOodd", 3, q),
            ClassicalSpec("OmegaEven", 4, q, -1),
            ClassicalSpec("OmegaEven", 4, q, 1),
            ClassicalSpec("GOeven", 2, q, 1),
            ClassicalSpec("GOeven", 2, q, -1),
        ]
    return specs


@dataclass
class GridResult:
    spec: ClassicalSpec
    oracle: OracleResult
    formula: dict[int, FactoredInteger | None]  # None: prime not covered

    @property
    def covered(self) -> list[int]:
        return [p for p, v in self.formula.items() if v is not None]

    @property
    def mismatches(self) -> list[int]:
        return [p for p in self.covered if self.formula[p] != self.oracle.exp_p(p)]

    @property
    def full_formula(self) -> FactoredInteger | None:
        if any(v is None for v in self.formula.values()):
            return None
        out = FactoredInteger()
        for v in self.formula.values():
            out = out * v
        return out

    @property
    def ok(self) -> bool:
        full = self.full_formula
        return not self.mismatches and (full is None or full == self.oracle.exponent)


@lru_cache(maxsize=None)
def cached_oracle(spec: ClassicalSpec, budget: int = DEFAULT_BUDGET) -> OracleResult:
    return oracle_exponent(spec, budget)


def check_spec(spec: ClassicalSpec, budget: int = DEFAULT_BUDGET) -> GridResult:
    from .errors import OutOfRange
    from .expfml import exp_p

    res = cached_oracle(spec, budget)
    formula = {}
    for p in order_factored(spec).primes:
        try:
            formula[p] = exp_p(spec, p)
        except (FamilyNotCovered, OutOfRange):
            formula[p] = None
    return GridResult(spec, res, formula)


def run_grid(specs=None, budget: int = DEFAULT_BUDGET) -> list[GridResult]:
    return [check_spec(s, budget) for s in (specs if specs is not None else default_grid(budget))]
