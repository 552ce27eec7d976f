"""Brute-force finite group enumeration.

Every element algebra works on *batches*: numpy-backed stacks of elements, so
closure, element orders and exponents are computed with vectorized products.
Each algebra supplies canonical keys (int64 when they fit, raw bytes
otherwise); the enumerated element set is sorted by key, which makes it
independent of generation order and of worker count.
"""
from __future__ import annotations

import math
import os
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Sequence

import numpy as np

from .errors import ActionNotHomomorphic, CapExceeded, NotCentral
from .gf import FiniteField, field_of_order
from .numth import FactoredInteger, factorize, lcm_all

DEFAULT_BUDGET = int(os.environ.get("EXPGROUPS_BUDGET", 5_000_000))
_INT_KEY_LIMIT = 2**62
_CHUNK = 1 << 18


def _fits_int(radix_product: int | None) -> bool:
    return radix_product is not None and radix_product <= _INT_KEY_LIMIT


def _to_void(keys: np.ndarray) -> np.ndarray:
    if keys.dtype.kind == "V":
        return keys
    # big-endian so byte order agrees with numeric order
    b = np.ascontiguousarray(keys.astype(">i8"))
    return b.view(np.dtype((np.void, 8))).ravel()


def _rows_to_void(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows)
    width = rows.shape[1] * rows.dtype.itemsize
    return rows.view(np.dtype((np.void, width))).ravel()


def combine_keys(parts: Sequence[np.ndarray], radices: Sequence[int | None]) -> tuple[np.ndarray, int | None]:
    """Injectively merge per-component keys into one key per element."""
    total = 1
    for r in radices:
        total = None if (total is None or r is None) else total * r
    if _fits_int(total):
        out = np.zeros(len(parts[0]), dtype=np.int64)
        for k, r in zip(parts, radices):
            out = out * r + k.astype(np.int64)
        return out, total
    voids = [_to_void(k) for k in parts]
    rows = np.concatenate(
        [np.frombuffer(v.tobytes(), dtype=np.uint8).reshape(len(v), -1) for v in voids], axis=1
    )
    return _rows_to_void(rows), None


# -- algebras -----------------------------------------------------------------

class Algebra:
    """Batched element arithmetic.  Subclasses define the batch layout."""

    key_radix: int | None = None

    def identity(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def keys(self, a) -> np.ndarray:
        raise NotImplementedError

    def take(self, a, idx):
        raise NotImplementedError

    def concat(self, batches):
        raise NotImplementedError

    def length(self, a) -> int:
        raise NotImplementedError

    def repeat(self, a, n: int):
        return self.take(a, np.zeros(n, dtype=np.int64))

    def describe(self, a, i: int = 0) -> Any:
        return self.take(a, np.array([i]))

    def identity_key(self):
        return self.keys(self.identity())[0]

    def is_identity(self, a) -> np.ndarray:
        return self.keys(a) == self.identity_key()

    def _bcast(self, a, b):
        la, lb = self.length(a), self.length(b)
        if la == lb:
            return a, b
        if lb == 1:
            return a, self.repeat(b, la)
        if la == 1:
            return self.repeat(a, lb), b
        raise ValueError(f"batch length mismatch {la} vs {lb}")


class PermAlgebra(Algebra):
    """Permutations of {0..d-1} as image arrays; a*b applies a first."""

    def __init__(self, degree: int):
        self.degree = degree
        self.dtype = np.uint8 if degree <= 256 else np.int32
        r = degree**degree
        self.key_radix = r if _fits_int(r) else None
        if self.key_radix:
            self._weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)

    def __repr__(self):
        return f"PermAlgebra({self.degree})"

    def identity(self):
        return np.arange(self.degree, dtype=self.dtype)[None, :]

    def mul(self, a, b):
        if len(b) == 1:
            return b[0][a]
        if len(a) == 1:
            return np.take_along_axis(b, np.broadcast_to(a, b.shape), axis=1)
        return np.take_along_axis(b, a.astype(np.intp), axis=1)

    def inverse(self, a):
        out = np.empty_like(a)
        rows = np.arange(len(a))[:, None]
        out[rows, a] = np.arange(self.degree, dtype=self.dtype)[None, :]
        return out

    def keys(self, a):
        if self.key_radix:
            return a.astype(np.int64) @ self._weights
        return _rows_to_void(a)

    def take(self, a, idx):
        return a[idx]

    def concat(self, batches):
        return np.concatenate(batches)

    def length(self, a):
        return len(a)

    def describe(self, a, i=0):
        return perm_to_cycles(a[i])

    def from_cycles(self, text: str):
        return parse_perm(text, self.degree)[None, :].astype(self.dtype)

    def from_images(self, images):
        arr = np.asarray(images, dtype=np.int64)
        if sorted(arr.tolist()) != list(range(self.degree)):
            raise ValueError("not a permutation")
        return arr[None, :].astype(self.dtype)


class MatrixAlgebra(Algebra):
    """Invertible n x n matrices over GF(q); optionally modulo scalars.

    In projective mode every matrix is normalized so that its first nonzero
    entry (row-major) is 1, which picks one representative per scalar class.
    """

    def __init__(self, field: FiniteField, n: int, projective: bool = False):
        self.field = field
        self.n = n
        self.q = field.q
        self.projective = projective
        self.prime_field = field.k == 1
        r = self.q ** (n * n)
        self.key_radix = r if _fits_int(r) else None
        if self.key_radix:
            self._weights = self.q ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
        if not self.prime_field:
            self._mul_flat = field.mul_table.ravel()
            self._add_flat = field.add_table.ravel()

    def __repr__(self):
        kind = "PMatrixAlgebra" if self.projective else "MatrixAlgebra"
        return f"{kind}({self.n}, {self.q})"

    def identity(self):
        return np.eye(self.n, dtype=np.int32)[None]

    def _raw_mul(self, a, b):
        if self.prime_field:
            return ((a.astype(np.int64) @ b.astype(np.int64)) % self.q).astype(np.int32)
        a, b = np.broadcast_arrays(a, b)
        q = self.q
        out = None
        for k in range(self.n):
            prod = self._mul_flat[a[:, :, k, None].astype(np.int64) * q + b[:, None, k, :]]
            out = prod if out is None else self._add_flat[out.astype(np.int64) * q + prod]
        return out.astype(np.int32)

    def normalize(self, a):
        if not self.projective:
            return a
        flat = a.reshape(len(a), -1)
        lead_idx = np.argmax(flat != 0, axis=1)
        lead = flat[np.arange(len(a)), lead_idx]
        if self.prime_field:
            inv = _prime_inverses(self.q)[lead]
            flat = (flat.astype(np.int64) * inv[:, None]) % self.q
        else:
            inv = np.asarray(self.field.inv_table, dtype=np.int64)[lead]
            flat = self._mul_flat[flat.astype(np.int64) * self.q + inv[:, None]]
        return flat.reshape(a.shape).astype(np.int32)

    def mul(self, a, b):
        return self.normalize(self._raw_mul(a, b))

    def keys(self, a):
        flat = a.reshape(len(a), -1)
        if self.key_radix:
            return flat.astype(np.int64) @ self._weights
        dt = np.uint8 if self.q <= 256 else np.uint16
        return _rows_to_void(flat.astype(dt).byteswap() if dt is np.uint16 else flat.astype(dt))

    def take(self, a, idx):
        return a[idx]

    def concat(self, batches):
        return np.concatenate(batches)

    def length(self, a):
        return len(a)

    def describe(self, a, i=0):
        return a[i].tolist()

    def from_rows(self, rows):
        arr = np.asarray(rows, dtype=np.int64) % self.q if self.prime_field else np.asarray(rows, dtype=np.int64)
        if arr.shape != (self.n, self.n):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        return self.normalize(arr.astype(np.int32)[None])


_PRIME_INV_CACHE: dict[int, np.ndarray] = {}


def _prime_inverses(p: int) -> np.ndarray:
    if p not in _PRIME_INV_CACHE:
        t = np.zeros(p, dtype=np.int64)
        for x in range(1, p):
            t[x] = pow(x, -1, p)
        _PRIME_INV_CACHE[p] = t
    return _PRIME_INV_CACHE[p]


class DirectProductAlgebra(Algebra):
    """Componentwise product of several algebras; batch = tuple of batches."""

    def __init__(self, factors: Sequence[Algebra]):
        self.factors = list(factors)
        total = 1
        for f in self.factors:
            total = None if (total is None or f.key_radix is None) else total * f.key_radix
        self.key_radix = total if _fits_int(total) else None

    def __repr__(self):
        return "DirectProduct(" + ", ".join(map(repr, self.factors)) + ")"

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def mul(self, a, b):
        a, b = self._bcast(a, b)
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def keys(self, a):
        parts = [f.keys(x) for f, x in zip(self.factors, a)]
        return combine_keys(parts, [f.key_radix for f in self.factors])[0]

    def take(self, a, idx):
        return tuple(f.take(x, idx) for f, x in zip(self.factors, a))

    def concat(self, batches):
        return tuple(f.concat([b[i] for b in batches]) for i, f in enumerate(self.factors))

    def length(self, a):
        return self.factors[0].length(a[0])

    def describe(self, a, i=0):
        return tuple(f.describe(x, i) for f, x in zip(self.factors, a))


class WreathAlgebra(Algebra):
    """G wr C_t: elements ((g_0..g_{t-1}), k) with top sigma = i -> i+k mod t.

    Product: (f, s)(f', s') = (i -> f(i) f'(i+s), s+s').
    """

    def __init__(self, base: Algebra, t: int):
        self.base = base
        self.t = t
        r = None if base.key_radix is None else base.key_radix**t * t
        self.key_radix = r if _fits_int(r) else None

    def __repr__(self):
        return f"Wreath({self.base!r}, C{self.t})"

    def identity(self):
        return (self.base.repeat(self.base.identity(), self.t), np.zeros(1, dtype=np.int64))

    def mul(self, a, b):
        a, b = self._bcast(a, b)
        (fa, sa), (fb, sb) = a, b
        n, t = len(sa), self.t
        pos = np.arange(t)[None, :]
        idx_b = (np.arange(n)[:, None] * t + (pos + sa[:, None]) % t).ravel()
        children = self.base.mul(fa, self.base.take(fb, idx_b))
        return children, (sa + sb) % t

    def keys(self, a):
        f, s = a
        n, t = len(s), self.t
        ck = self.base.keys(f)
        parts = [ck[i::t] for i in range(t)] + [s]
        return combine_keys(parts, [self.base.key_radix] * t + [t])[0]

    def take(self, a, idx):
        f, s = a
        idx = np.asarray(idx, dtype=np.int64)
        cidx = (idx[:, None] * self.t + np.arange(self.t)[None, :]).ravel()
        return self.base.take(f, cidx), s[idx]

    def concat(self, batches):
        return self.base.concat([b[0] for b in batches]), np.concatenate([b[1] for b in batches])

    def length(self, a):
        return len(a[1])

    def describe(self, a, i=0):
        f, s = a
        return (tuple(self.base.describe(f, i * self.t + j) for j in range(self.t)), int(s[i]))

    def embed(self, child, position: int = 0):
        """The base-group batch `child` placed in one coordinate, top trivial."""
        n = self.base.length(child)
        ident = self.base.repeat(self.base.identity(), n * self.t)
        cidx = np.arange(n) * self.t + position
        # scatter by rebuilding: take identity everywhere except the slot
        parts = []
        order = np.empty(n * self.t, dtype=np.int64)
        order[:] = -1
        order[cidx] = np.arange(n)
        src_all = self.base.concat([child, self.base.repeat(self.base.identity(), 1)])
        sel = np.where(order >= 0, order, n)
        return self.base.take(src_all, sel), np.zeros(n, dtype=np.int64)

    def top_cycle(self):
        return self.base.repeat(self.base.identity(), self.t), np.ones(1, dtype=np.int64)


class SemidirectAlgebra(Algebra):
    """N x| H with N enumerated; elements (index into N, index into H).

    H acts on N on the right, n -> n^h, and
    (n1, h1)(n2, h2) = (n1 * n2^(h1^-1), h1 h2).
    """

    def __init__(self, N: EnumeratedGroup, H: EnumeratedGroup, tables: np.ndarray):
        self.N = N
        self.H = H
        self.tables = tables  # tables[h, n] = index of n^h
        nh = H.order
        hk = H.keys
        prods = []
        for i in range(nh):
            prods.append(H.index_of(H.algebra.mul(H.algebra.repeat(H.element_batch(i), nh), H.elements)))
        self.hmul = np.array(prods, dtype=np.int64)
        self.hinv = np.argmax(self.hmul == H.identity_index, axis=1)
        self.key_radix = N.order * nh

    def __repr__(self):
        return f"Semidirect(|N|={self.N.order}, |H|={self.H.order})"

    def identity(self):
        return np.array([self.N.identity_index]), np.array([self.H.identity_index])

    def mul(self, a, b):
        a, b = self._bcast(a, b)
        (n1, h1), (n2, h2) = a, b
        n2_act = self.tables[self.hinv[h1], n2]
        prod = self.N.algebra.mul(self.N.element_batch(n1), self.N.element_batch(n2_act))
        return self.N.index_of(prod), self.hmul[h1, h2]

    def keys(self, a):
        n, h = a
        return n.astype(np.int64) * self.H.order + h

    def take(self, a, idx):
        return a[0][idx], a[1][idx]

    def concat(self, batches):
        return np.concatenate([b[0] for b in batches]), np.concatenate([b[1] for b in batches])

    def length(self, a):
        return len(a[0])

    def describe(self, a, i=0):
        n, h = a
        return (self.N.algebra.describe(self.N.element_batch(n[i : i + 1])),
                self.H.algebra.describe(self.H.element_batch(h[i : i + 1])))

    def from_n(self, nbatch):
        return self.N.index_of(nbatch), np.full(self.N.algebra.length(nbatch), self.H.identity_index)

    def from_h(self, hbatch):
        return np.full(self.H.algebra.length(hbatch), self.N.identity_index), self.H.index_of(hbatch)


class CentralQuotientAlgebra(Algebra):
    """G/Z for a finite central subgroup Z, without listing cosets.

    Each coset is represented by its member with the smallest key.
    """

    def __init__(self, base: Algebra, central: Sequence[Any]):
        self.base = base
        self.central = [c for c in central]
        self.key_radix = base.key_radix

    def __repr__(self):
        return f"Quotient({self.base!r}, |Z|={len(self.central)})"

    def normalize(self, a):
        n = self.base.length(a)
        cands = [a] + [self.base.mul(a, self.base.repeat(z, n)) for z in self.central]
        keys = [self.base.keys(c) for c in cands]
        if keys[0].dtype.kind != "V":
            stack = np.stack(keys)
            best = np.argmin(stack, axis=0)
        else:
            best = np.array([min(range(len(keys)), key=lambda j: keys[j][i].tobytes()) for i in range(n)])
        allc = self.base.concat(cands)
        return self.base.take(allc, best * n + np.arange(n))

    def identity(self):
        return self.normalize(self.base.identity())

    def mul(self, a, b):
        return self.normalize(self.base.mul(a, b))

    def keys(self, a):
        return self.base.keys(a)

    def take(self, a, idx):
        return self.base.take(a, idx)

    def concat(self, batches):
        return self.base.concat(batches)

    def length(self, a):
        return self.base.length(a)

    def describe(self, a, i=0):
        return self.base.describe(a, i)


def central_quotient(G: GroupHandle, Z: Sequence[Element], name: str = "") -> GroupHandle:
    """Handle for G/<Z>; Z must be central (checked against the generators)."""
    _check_central(Z, G.generators)
    alg = CentralQuotientAlgebra(G.algebra, [z.data for z in Z if not z.is_identity()])
    return GroupHandle(alg, [Element(alg, alg.normalize(g.data)) for g in G.generators], name)


# -- elements and handles -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class Element:
    """A single group element: a length-1 batch plus its algebra."""

    algebra: Algebra
    data: Any

    def __mul__(self, other: Element) -> Element:
        return Element(self.algebra, self.algebra.mul(self.data, other.data))

    def __pow__(self, k: int) -> Element:
        if k < 0:
            return self.inverse() ** (-k)
        result = Element(self.algebra, self.algebra.identity())
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @property
    def key(self):
        return self.algebra.keys(self.data)[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.key == other.key

    def __hash__(self):
        k = self.key
        return hash(bytes(k) if isinstance(k, np.void) else int(k))

    def is_identity(self) -> bool:
        return bool(self.algebra.is_identity(self.data)[0])

    def order(self, group_order: int | FactoredInteger | None = None) -> int:
        return element_order(self, group_order)

    def inverse(self) -> Element:
        if hasattr(self.algebra, "inverse"):
            return Element(self.algebra, self.algebra.inverse(self.data))
        return self ** (self.order() - 1)

    def conj(self, by: Element) -> Element:
        """self^by = by^-1 * self * by."""
        return by.inverse() * self * by

    def describe(self):
        return self.algebra.describe(self.data)

    def __repr__(self):
        return f"Element({self.describe()!r})"


def identity_element(algebra: Algebra) -> Element:
    return Element(algebra, algebra.identity())


@dataclass
class GroupHandle:
    algebra: Algebra
    generators: list[Element]
    name: str = ""

    def __post_init__(self):
        if not self.generators:
            self.generators = [identity_element(self.algebra)]
        for g in self.generators:
            if g.algebra is not self.algebra:
                raise ValueError("generators must share the handle's algebra")

    def gens_batch(self):
        return self.algebra.concat([g.data for g in self.generators])

    def identity(self) -> Element:
        return identity_element(self.algebra)


def perm_group(gens: Sequence[str | Sequence[int]], degree: int, name: str = "") -> GroupHandle:
    alg = PermAlgebra(degree)
    els = [
        Element(alg, alg.from_cycles(g) if isinstance(g, str) else alg.from_images(g)) for g in gens
    ]
    return GroupHandle(alg, els, name)


def matrix_group(gens, field: FiniteField | int, projective: bool = False, name: str = "") -> GroupHandle:
    if not isinstance(field, FiniteField):
        field = field_of_order(field)
    gens = [np.asarray(g) for g in gens]
    alg = MatrixAlgebra(field, gens[0].shape[0], projective)
    return GroupHandle(alg, [Element(alg, alg.from_rows(g)) for g in gens], name)


# -- permutations as text -------------------------------------------------------

def parse_perm(text: str, degree: int) -> np.ndarray:
    """Cycle notation with 1-based points, e.g. '(1,2,3)(4,5)' or '(1 2 3)'."""
    img = np.arange(degree, dtype=np.int64)
    text = text.strip()
    if text in ("", "()"):
        return img
    for cyc in re.findall(r"\(([^()]*)\)", text):
        pts = [int(x) - 1 for x in re.split(r"[,\s]+", cyc.strip()) if x]
        if any(p < 0 or p >= degree for p in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle ({cyc}) for degree {degree}")
        for i, p in enumerate(pts):
            img[p] = pts[(i + 1) % len(pts)]
    if sorted(img.tolist()) != list(range(degree)):
        raise ValueError("cycles overlap")
    return img


def perm_to_cycles(img) -> str:
    img = list(map(int, img))
    seen, out = set(), []
    for i in range(len(img)):
        if i in seen or img[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = img[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


# -- enumeration ----------------------------------------------------------------

class _SortedKeySet:
    """Sorted key runs merged geometrically; membership via searchsorted."""

    def __init__(self):
        self.runs: list[np.ndarray] = []
        self.size = 0

    def contains(self, keys: np.ndarray) -> np.ndarray:
        hit = np.zeros(len(keys), dtype=bool)
        for run in self.runs:
            pos = np.searchsorted(run, keys)
            pos[pos == len(run)] = 0
            hit |= run[pos] == keys
        return hit

    def add(self, sorted_keys: np.ndarray) -> None:
        self.runs.append(sorted_keys)
        self.size += len(sorted_keys)
        while len(self.runs) > 1 and len(self.runs[-1]) * 2 >= len(self.runs[-2]):
            b = self.runs.pop()
            a = self.runs.pop()
            self.runs.append(np.sort(np.concatenate([a, b]), kind="stable"))


@dataclass
class EnumeratedGroup:
    handle: GroupHandle
    elements: Any  # batch sorted by key
    keys: np.ndarray
    order: int

    @property
    def algebra(self) -> Algebra:
        return self.handle.algebra

    @cached_property
    def identity_index(self) -> int:
        return int(self.index_of(self.algebra.identity())[0])

    def element_batch(self, idx):
        return self.algebra.take(self.elements, np.atleast_1d(np.asarray(idx, dtype=np.int64)))

    def element(self, i: int) -> Element:
        return Element(self.algebra, self.element_batch([i]))

    def index_of(self, batch, check: bool = True) -> np.ndarray:
        k = self.algebra.keys(batch)
        pos = np.searchsorted(self.keys, k)
        if check:
            bad = (pos >= len(self.keys)) | (self.keys[np.minimum(pos, len(self.keys) - 1)] != k)
            if bad.any():
                raise KeyError("element not in group")
        return pos.astype(np.int64)

    def contains(self, g: Element) -> bool:
        k = g.key
        pos = np.searchsorted(self.keys, k)
        return bool(pos < len(self.keys) and self.keys[pos] == k)

    @cached_property
    def orders(self) -> np.ndarray:
        return batch_orders(self.algebra, self.elements, self.order)

    def __len__(self):
        return self.order

    def __iter__(self):
        for i in range(self.order):
            yield self.element(i)


def _expand(alg: Algebra, frontier, gens_batch, ngens: int):
    n = alg.length(frontier)
    parts = []
    for j in range(ngens):
        g = alg.take(gens_batch, np.array([j]))
        parts.append(alg.mul(frontier, g))
    cand = alg.concat(parts)
    keys = alg.keys(cand)
    uk, idx = np.unique(keys, return_index=True)
    return uk, alg.take(cand, idx)


def enumerate_group(handle: GroupHandle, cap: int = DEFAULT_BUDGET, workers: int = 1) -> EnumeratedGroup:
    """Breadth-first closure of the generators under right multiplication."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    alg = handle.algebra
    gens = handle.gens_batch()
    ngens = alg.length(gens)
    ident = alg.identity()
    seen = _SortedKeySet()
    seen.add(alg.keys(ident))
    levels = [ident]
    level_keys = [alg.keys(ident)]
    frontier = ident
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        while alg.length(frontier):
            n = alg.length(frontier)
            step = max(1, min(_CHUNK, -(-n // max(workers, 1))))
            chunks = [alg.take(frontier, np.arange(i, min(i + step, n))) for i in range(0, n, step)]
            if pool is not None:
                results = list(pool.map(lambda c: _expand(alg, c, gens, ngens), chunks))
            else:
                results = [_expand(alg, c, gens, ngens) for c in chunks]
            keys = np.concatenate([r[0] for r in results])
            cand = alg.concat([r[1] for r in results])
            uk, idx = np.unique(keys, return_index=True)
            fresh = ~seen.contains(uk)
            new_keys = uk[fresh]
            if seen.size + len(new_keys) > cap:
                raise CapExceeded(cap, seen.size + len(new_keys))
            frontier = alg.take(cand, idx[fresh])
            seen.add(new_keys)
            levels.append(frontier)
            level_keys.append(new_keys)
    finally:
        if pool is not None:
            pool.shutdown()
    allkeys = np.concatenate(level_keys)
    order = np.argsort(allkeys, kind="stable")
    elements = alg.take(alg.concat(levels), order)
    return EnumeratedGroup(handle, elements, allkeys[order], len(allkeys))


def group_order(handle: GroupHandle, cap: int = DEFAULT_BUDGET) -> int:
    return enumerate_group(handle, cap).order


# -- orders and exponents ------------------------------------------------------

def batch_orders(alg: Algebra, elems, group_order: int | None = None, central_keys=None,
                 max_iter: int = 1 << 20) -> np.ndarray:
    """Least k >= 1 with x^k trivial (or inside `central_keys`) for each x."""
    n = alg.length(elems)
    out = np.zeros(n, dtype=np.int64)
    if central_keys is None:
        target = np.array([alg.identity_key()])
    else:
        target = np.sort(np.asarray(central_keys))
    for start in range(0, n, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, n))
        base = alg.take(elems, idx)
        cur = base
        active = np.arange(len(idx))
        k = 1
        while len(active):
            keys = alg.keys(cur)
            pos = np.searchsorted(target, keys)
            pos[pos == len(target)] = 0
            done = target[pos] == keys
            out[idx[active[done]]] = k
            keep = np.flatnonzero(~done)
            active = active[keep]
            if not len(active):
                break
            cur = alg.mul(alg.take(cur, keep), alg.take(base, active))
            k += 1
            if k > max_iter:
                raise RuntimeError("element order search did not terminate")
    return out


def element_order(g: Element, group_order: int | FactoredInteger | None = None) -> int:
    """Order of g; with a known multiple of it, strip primes from that multiple."""
    if group_order is None:
        return int(batch_orders(g.algebra, g.data)[0])
    m = group_order if isinstance(group_order, FactoredInteger) else factorize(int(group_order))
    order = m.value
    if not (g**order).is_identity():
        raise ValueError("supplied group order is not a multiple of the element order")
    for p in m.primes:
        while order % p == 0 and (g ** (order // p)).is_identity():
            order //= p
    return order


def _lcm_of_orders(orders: np.ndarray) -> FactoredInteger:
    return lcm_all(int(x) for x in np.unique(orders))


def exponent(G: EnumeratedGroup) -> FactoredInteger:
    """lcm of all element orders."""
    return _lcm_of_orders(G.orders)


def _check_central(Z: Sequence[Element], generators: Sequence[Element]) -> None:
    for z in Z:
        for g in generators:
            if z * g != g * z:
                raise NotCentral(f"{z!r} does not commute with generator {g!r}")


def projective_order(g: Element, Z: Sequence[Element], generators: Sequence[Element] = ()) -> int:
    """Least k >= 1 with g^k in Z, for a central subgroup Z."""
    _check_central(Z, generators)
    keys = [g.algebra.identity_key()] + [z.key for z in Z]
    return int(batch_orders(g.algebra, g.data, central_keys=np.unique(keys))[0])


def exponent_projective(G: EnumeratedGroup, Z: Sequence[Element]) -> FactoredInteger:
    """Exponent of G/Z without building the quotient."""
    _check_central(Z, G.handle.generators)
    keys = np.unique([G.algebra.identity_key()] + [z.key for z in Z])
    orders = batch_orders(G.algebra, G.elements, central_keys=keys)
    return _lcm_of_orders(orders)


def order_spectrum(G: EnumeratedGroup) -> dict[int, int]:
    vals, counts = np.unique(G.orders, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, counts)}


# -- constructions -------------------------------------------------------------

def wreath_product(G: GroupHandle, t: int) -> GroupHandle:
    """G wr C_t generated by G in coordinate 0 plus the top t-cycle."""
    if t < 2:
        raise ValueError("top cycle length must be >= 2")
    alg = WreathAlgebra(G.algebra, t)
    gens = [Element(alg, alg.embed(g.data, 0)) for g in G.generators]
    gens.append(Element(alg, alg.top_cycle()))
    name = f"({G.name}) wr C{t}" if G.name else ""
    return GroupHandle(alg, gens, name)


def direct_product(handles: Sequence[GroupHandle], name: str = "") -> GroupHandle:
    alg = DirectProductAlgebra([h.algebra for h in handles])
    gens = []
    for i, h in enumerate(handles):
        for g in h.generators:
            parts = [g.data if j == i else f.identity() for j, f in enumerate(alg.factors)]
            gens.append(Element(alg, tuple(parts)))
    return GroupHandle(alg, gens, name)


def _graph_table(EN: EnumeratedGroup, images: Sequence[Element], cap: int) -> np.ndarray:
    """Index table of the endomorphism of N sending generator i to images[i]."""
    N = EN.handle
    if len(images) != len(N.generators):
        raise ActionNotHomomorphic("need one image per generator of N")
    pair = DirectProductAlgebra([N.algebra, N.algebra])
    gens = [Element(pair, (g.data, im.data)) for g, im in zip(N.generators, images)]
    try:
        graph = enumerate_group(GroupHandle(pair, gens), cap=max(cap, EN.order))
    except CapExceeded as exc:
        raise ActionNotHomomorphic("generator images do not define a map on N") from exc
    if graph.order != EN.order:
        raise ActionNotHomomorphic("generator images do not define a homomorphism")
    src, dst = graph.elements
    table = np.empty(EN.order, dtype=np.int64)
    table[EN.index_of(src)] = EN.index_of(dst)
    if len(np.unique(table)) != EN.order:
        raise ActionNotHomomorphic("generator images define a non-injective map")
    return table


def semidirect_product(N: GroupHandle, H: GroupHandle, action: Sequence[Sequence[Element]],
                       cap: int = DEFAULT_BUDGET, name: str = "") -> GroupHandle:
    """N x| H where action[j] lists the images n_i^(h_j) of N's generators.

    The action is a right action (x^h = h^-1 x h inside the product).  Both
    the automorphism property and the homomorphism H -> Aut(N) are checked by
    closure over N and H.
    """
    EN = enumerate_group(N, cap)
    EH = enumerate_group(H, cap)
    if len(action) != len(H.generators):
        raise ActionNotHomomorphic("need one automorphism per generator of H")
    gen_tables = [_graph_table(EN, imgs, cap) for imgs in action]
    tables = np.full((EH.order, EN.order), -1, dtype=np.int64)
    ident = EH.identity_index
    tables[ident] = np.arange(EN.order)
    frontier = [ident]
    gidx = [int(EH.index_of(g.data)[0]) for g in H.generators]
    halg = H.algebra
    while frontier:
        nxt = []
        for h in frontier:
            hb = EH.element_batch([h])
            for j, g in enumerate(H.generators):
                hg = int(EH.index_of(halg.mul(hb, g.data))[0])
                # n^(hg) = (n^h)^g
                t = gen_tables[j][tables[h]]
                if tables[hg, 0] == -1:
                    tables[hg] = t
                    nxt.append(hg)
                elif not np.array_equal(tables[hg], t):
                    raise ActionNotHomomorphic("action is not a homomorphism from H")
        frontier = nxt
    alg = SemidirectAlgebra(EN, EH, tables)
    gens = [Element(alg, alg.from_n(g.data)) for g in N.generators]
    gens += [Element(alg, alg.from_h(g.data)) for g in H.generators]
    return GroupHandle(alg, gens, name)


def cyclic_perm_group(n: int) -> GroupHandle:
    return perm_group([list(range(1, n)) + [0]], n, f"C{n}")


def elementary_abelian_2(k: int) -> GroupHandle:
    """C2^k as disjoint transpositions on 2k points."""
    gens = []
    for i in range(k):
        img = list(range(2 * k))
        img[2 * i], img[2 * i + 1] = 2 * i + 1, 2 * i
        gens.append(img)
    return perm_group(gens, 2 * k, f"C2^{k}")
