"""Explicit Sylow subgroup models and their orders and exponents.

Odd p, p not dividing q: cyclic seeds inside GL(e,q) and the wreath towers
G_{i+1} = G_i wr C_p.  p = 2, q odd: the 2x2 symplectic and orthogonal bases
W, the iterated wreath products W_r, and the twisted towers W'_r, W''_r built
as iterated semidirect products (N = previous level squared, H = V).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .classical import ClassicalSpec, QuadraticFormSpec, orthogonal_sum, standard_form
from .errors import EvenInput, InvalidSpec, NotCoprime
from .gf import field_of_order, make_field, minimal_polynomial, root_of_unity, split_root_pair, subfield_embedding
from .grpengine import (
    DEFAULT_BUDGET,
    Element,
    GroupHandle,
    MatrixAlgebra,
    direct_product,
    elementary_abelian_2,
    enumerate_group,
    exponent,
    central_quotient,
    perm_group,
    semidirect_product,
    wreath_product,
)
from .numth import FactoredInteger, is_prime, prime_local_data, prime_power_base, two_local_s


@dataclass(frozen=True)
class SylowModelSpec:
    kind: str  # GLtower, SpTower, W2sp, W2orth, Wr, WprimeR, WdoubleR
    q: int
    r: int = 1
    p: int = 2
    n: int | None = None
    projective: bool = False

    @property
    def s(self) -> int:
        return two_local_s(self.q)


def _require_odd_q(q: int) -> None:
    if q % 2 == 0:
        raise EvenInput(f"q = {q} must be odd")


def _mat(F, rows) -> np.ndarray:
    return np.array([[int(x) for x in r] for r in rows], dtype=np.int64)


def _matrix_handle(q: int, mats, name: str = "", projective: bool = False) -> GroupHandle:
    F = field_of_order(q)
    alg = MatrixAlgebra(F, len(mats[0]), projective)
    return GroupHandle(alg, [Element(alg, alg.from_rows(m)) for m in mats], name)


def trivial_group() -> GroupHandle:
    return perm_group([[0]], 1, "1")


# -- odd p: cyclic seeds and GL towers ------------------------------------------

def cyclic_seed_matrix(p: int, q: int) -> np.ndarray:
    """Companion matrix over GF(q) of an element of order p^r in GF(q^e)."""
    if not is_prime(p) or p == 2:
        raise EvenInput("cyclic seeds are for odd primes")
    data = prime_local_data(p, q)
    ell, k = prime_power_base(q)
    small = make_field(ell, k)
    big = make_field(ell, k * data.e)
    zeta = root_of_unity(big, p**data.r).value
    poly = minimal_polynomial(big, zeta, small)  # monic, low -> high
    e = len(poly) - 1
    C = np.zeros((e, e), dtype=np.int64)
    for i in range(1, e):
        C[i, i - 1] = 1
    for i in range(e):
        C[i, e - 1] = small.neg(poly[i])
    return C


def cyclic_seed(p: int, q: int) -> GroupHandle:
    """Cyclic Sylow p-subgroup of GL(e,q), order p^r, for p | q^e - 1."""
    C = cyclic_seed_matrix(p, q)
    return _matrix_handle(q, [C], f"C{p}^r in GL({C.shape[0]},{q})")


def gl_tower_level(p: int, q: int, i: int) -> GroupHandle:
    """G_i = G_0 wr C_p wr ... wr C_p with i wreath layers."""
    G = cyclic_seed(p, q)
    for _ in range(i):
        G = wreath_product(G, p)
    return G


def gl_sylow_tower(p: int, q: int, n: int) -> GroupHandle:
    """Product of towers G_i^{a_i} for n = c + e*a, a = sum a_i p^i."""
    data = prime_local_data(p, q)
    a = n // data.e
    factors = []
    i = 0
    while a:
        a, digit = divmod(a, p)
        factors += [gl_tower_level(p, q, i)] * digit
        i += 1
    if not factors:
        return trivial_group()
    if len(factors) == 1:
        return factors[0]
    return direct_product(factors, f"Sylow {p} of GL({n},{q})")


# -- p = 2: symplectic base W and wreath towers W_r --------------------------------

def w_base_matrices(q: int) -> list[np.ndarray]:
    """The two displayed generators X, Y of a Sylow 2-subgroup of Sp(2,q)."""
    _require_odd_q(q)
    F = field_of_order(q)
    s = two_local_s(q)
    Y = _mat(F, [[0, 1], [F.neg(1), 0]])
    if q % 4 == 1:
        eps = root_of_unity(F, 2**s).value
        X = _mat(F, [[eps, 0], [0, F.inv(eps)]])
        return [X, Y]
    ell, k = prime_power_base(q)
    big = make_field(ell, 2 * k)
    eps = root_of_unity(big, 2 ** (s + 1)).value
    trace = big.add(eps, big.pow(eps, q))
    back = {v: i for i, v in enumerate(subfield_embedding(F, big))}
    t = back[trace]
    M = _mat(F, [[0, 1], [1, t]])
    X = np.array([[F.add(F.mul(int(M[i, 0]), int(M[0, j])), F.mul(int(M[i, 1]), int(M[1, j])))
                   for j in range(2)] for i in range(2)], dtype=np.int64)
    return [X, Y]


def w_base(q: int) -> GroupHandle:
    return _matrix_handle(q, w_base_matrices(q), f"W({q})")


def w_tower(q: int, r: int) -> GroupHandle:
    """W_r = W wr C2 wr ... wr C2 with r-1 wreath layers."""
    if r < 1:
        raise ValueError("r must be at least 1")
    G = w_base(q)
    for _ in range(r - 1):
        G = wreath_product(G, 2)
    G.name = f"W_{r}({q})"
    return G


def _block_embed(M: np.ndarray, dim: int) -> np.ndarray:
    out = np.eye(dim, dtype=np.int64)
    out[: M.shape[0], : M.shape[1]] = M
    return out


def _half_swap(size: int, dim: int) -> np.ndarray:
    h = size // 2
    S = np.zeros((size, size), dtype=np.int64)
    S[:h, h:] = np.eye(h, dtype=np.int64)
    S[h:, :h] = np.eye(h, dtype=np.int64)
    return _block_embed(S, dim)


def w_tower_matrices(q: int, r: int) -> list[np.ndarray]:
    """W_r realized inside Sp(2^r, q): base in the first plane, then swaps of
    the two halves of the leading 2^(j+1) block for each wreath layer."""
    dim = 2**r
    gens = [_block_embed(g, dim) for g in w_base_matrices(q)]
    for j in range(1, r):
        gens.append(_half_swap(2 ** (j + 1), dim))
    return gens


def w_tower_matrix_group(q: int, r: int, projective: bool = False) -> GroupHandle:
    return _matrix_handle(q, w_tower_matrices(q, r), f"W_{r}({q}) in Sp({2**r},{q})", projective)


# -- p = 2: orthogonal bases ------------------------------------------------------

def orth_sign(q: int) -> int:
    """eta with q = eta mod 4."""
    _require_odd_q(q)
    return 1 if q % 4 == 1 else -1


def orth_plane(q: int) -> QuadraticFormSpec:
    return standard_form("GOeven", 2, q, orth_sign(q))


@dataclass
class OrthBase:
    q: int
    u: np.ndarray
    w: np.ndarray
    v: np.ndarray
    e: np.ndarray
    form: QuadraticFormSpec


def _mm(F, A, B) -> np.ndarray:
    n = A.shape[0]
    out = np.zeros((n, B.shape[1]), dtype=np.int64)
    for i in range(n):
        for j in range(B.shape[1]):
            acc = 0
            for t in range(A.shape[1]):
                acc = F.add(acc, F.mul(int(A[i, t]), int(B[t, j])))
            out[i, j] = acc
    return out


def orth_base(q: int) -> OrthBase:
    """u, w generating a Sylow 2-subgroup W of GO^eta(2,q), with v = u^2, e = uw."""
    _require_odd_q(q)
    F = field_of_order(q)
    s = two_local_s(q)
    if q % 4 == 1:
        eps = root_of_unity(F, 2**s).value
        u = _mat(F, [[eps, 0], [0, F.inv(eps)]])
        w = _mat(F, [[0, 1], [1, 0]])
    else:
        a, b = split_root_pair(q, s)
        a, b = a.value, b.value
        u = _mat(F, [[a, b], [F.neg(b), a]])
        w = _mat(F, [[F.neg(1), 0], [0, 1]])
    return OrthBase(q, u, w, _mm(F, u, u), _mm(F, u, w), orth_plane(q))


def w_orth(q: int) -> GroupHandle:
    b = orth_base(q)
    return _matrix_handle(q, [b.u, b.w], f"W_orth({q})")


def w_prime_base(q: int) -> GroupHandle:
    """W' = <v, w>, dihedral of order 2^s inside K(2,q)."""
    b = orth_base(q)
    return _matrix_handle(q, [b.v, b.w], f"W'({q})")


def _diag_blocks(*blocks) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.int64)
    o = 0
    for b in blocks:
        k = b.shape[0]
        out[o : o + k, o : o + k] = b
        o += k
    return out


@dataclass
class DoubleBase:
    q: int
    d: np.ndarray
    g: np.ndarray
    h: np.ndarray
    k: np.ndarray
    z: np.ndarray
    e: np.ndarray
    f: np.ndarray
    form: QuadraticFormSpec


def double_base(q: int) -> DoubleBase:
    """The 4x4 generators d, g, h, k of W'' and the outer elements e, f."""
    b = orth_base(q)
    F = field_of_order(q)
    I2 = np.eye(2, dtype=np.int64)
    Z2 = np.zeros((2, 2), dtype=np.int64)
    # u has 2-power order, so u^-1 = u^(ord-1)
    order = 2 ** two_local_s(q)
    uinv = I2.copy()
    for _ in range(order - 1):
        uinv = _mm(F, uinv, b.u)
    d = _diag_blocks(b.u, uinv)
    g = _diag_blocks(b.u, b.u)
    h = np.block([[Z2, I2], [I2, Z2]])
    k = np.block([[Z2, b.w], [b.w, Z2]])
    z = np.eye(4, dtype=np.int64) * F.neg(1)
    e = _diag_blocks(b.e, I2)
    f = _diag_blocks(I2, b.w)
    return DoubleBase(q, d, g, h, k, z, e, f, orthogonal_sum(b.form, b.form))


def w_double_base(q: int, projective: bool = False) -> GroupHandle:
    db = double_base(q)
    return _matrix_handle(q, [db.d, db.g, db.h, db.k], f"W''({q})", projective)


# -- twisted towers -------------------------------------------------------------------

@dataclass
class TwistedLevel:
    """One level of a twisted tower with its outer automorphisms.

    outer[name] lists the images of handle.generators under that automorphism.
    """

    handle: GroupHandle
    outer: dict[str, list[Element]] = field(default_factory=dict)


def _conj_images(handle: GroupHandle, M: np.ndarray) -> list[Element]:
    """Images of the generators under x -> M^-1 x M (M an involution here)."""
    alg = handle.algebra
    m = Element(alg, alg.from_rows(M))
    minv = m.inverse()
    return [minv * g * m for g in handle.generators]


def _pair(alg, x: Element | None, y: Element | None, base_alg) -> Element:
    one = base_alg.identity()
    return Element(alg, (one if x is None else x.data, one if y is None else y.data))


def _next_level(level: TwistedLevel, names: list[str], cap: int) -> TwistedLevel:
    """(prev)^2 x| V where V = C2^(len(names)+1): the named outer automorphisms
    act diagonally, the last generator of V swaps the coordinates."""
    base = level.handle
    N = direct_product([base, base])
    balg, nalg = base.algebra, N.algebra
    gens = base.generators
    action = []
    for nm in names:
        imgs = level.outer[nm]
        action.append([_pair(nalg, im, None, balg) for im in imgs] + [_pair(nalg, None, im, balg) for im in imgs])
    action.append([_pair(nalg, None, g, balg) for g in gens] + [_pair(nalg, g, None, balg) for g in gens])
    V = elementary_abelian_2(len(names) + 1)
    G = semidirect_product(N, V, action, cap=cap)
    alg = G.algebra
    ngens = len(N.generators)
    vgens = G.generators[ngens:]

    def lift(el: Element) -> Element:
        return Element(alg, alg.from_n(el.data))

    outer = {}
    for nm in names:
        imgs = level.outer[nm]
        # first coordinate twisted, second fixed
        new = [lift(_pair(nalg, im, None, balg)) for im in imgs]
        new += [G.generators[len(gens) + i] for i in range(len(gens))]
        # the V-generators: the named ones are fixed, the swap picks up the
        # matching diagonal generator
        j = names.index(nm)
        new += list(vgens[:-1]) + [vgens[j] * vgens[-1]]
        outer[nm] = new
    return TwistedLevel(G, outer)


def w_prime_level0(q: int) -> TwistedLevel:
    b = orth_base(q)
    h = w_prime_base(q)
    return TwistedLevel(h, {"e": _conj_images(h, b.e)})


def w_prime_tower(q: int, r: int, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    """W'_r: r twisted layers over W' with V = <a, b>."""
    if r < 0:
        raise ValueError("r must be non-negative")
    level = w_prime_level0(q)
    for _ in range(r):
        level = _next_level(level, ["e"], cap)
    level.handle.name = f"W'_{r}({q})"
    return level.handle


def w_double_level1(q: int, projective: bool = False) -> TwistedLevel:
    db = double_base(q)
    h = w_double_base(q, projective)
    return TwistedLevel(h, {"e": _conj_images(h, db.e), "f": _conj_images(h, db.f)})


def w_double_tower(q: int, r: int, projective: bool = False, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    """W''_r: r-1 twisted layers over W'' with V = <a, b, c>.

    With projective=True the result is the quotient by the central involution
    z_r = -1, which sits diagonally in every copy of W'' (the image of the
    Sylow 2-subgroup in the projective group).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    G, z = w_double_central(q, r, cap)
    if projective:
        G = central_quotient(G, [z])
    G.name = f"W''_{r}({q})" + ("/<z>" if projective else "")
    return G


def w_double_central(q: int, r: int, cap: int = DEFAULT_BUDGET) -> tuple[GroupHandle, Element]:
    """The tower W''_r together with its central element z_r."""
    if r < 1:
        raise ValueError("r must be at least 1")
    level = w_double_level1(q)
    z = _el(level.handle.algebra, double_base(q).z)
    for _ in range(r - 1):
        level = _next_level(level, ["e", "f"], cap)
        alg = level.handle.algebra
        z = Element(alg, alg.from_n((z.data, z.data)))
    return level.handle, z


def w_double_tower_base_quotient(q: int, r: int, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    """Twisted tower built over W''/<z> itself (every copy of z killed).

    For r >= 2 this is a proper quotient of the Sylow 2-subgroup of the
    projective group: its order is |W''_r| / 2^(2^(r-1)).
    """
    level = w_double_level1(q, projective=True)
    for _ in range(r - 1):
        level = _next_level(level, ["e", "f"], cap)
    return level.handle


# -- relation checks --------------------------------------------------------------------

def _el(alg, M) -> Element:
    return Element(alg, alg.from_rows(M))


def check_kgen(q: int) -> dict[str, bool]:
    b = orth_base(q)
    alg = MatrixAlgebra(field_of_order(q), 2)
    v, w, one = _el(alg, b.v), _el(alg, b.w), _el(alg, np.eye(2, dtype=np.int64))
    s = two_local_s(q)
    return {
        "v^(2^(s-1)) = 1": v ** (2 ** (s - 1)) == one,
        "w^2 = 1": w**2 == one,
        "v^w = v^-1": v.conj(w) == v.inverse(),
    }


def check_krel(q: int) -> dict[str, bool]:
    b = orth_base(q)
    alg = MatrixAlgebra(field_of_order(q), 2)
    v, w, e, one = _el(alg, b.v), _el(alg, b.w), _el(alg, b.e), _el(alg, np.eye(2, dtype=np.int64))
    return {
        "e^2 = 1": e**2 == one,
        "v^e = v^-1": v.conj(e) == v.inverse(),
        "w^e = vw": w.conj(e) == v * w,
    }


def check_omgen(q: int) -> dict[str, bool]:
    db = double_base(q)
    alg = MatrixAlgebra(field_of_order(q), 4)
    d, g, h, k, z = (_el(alg, m) for m in (db.d, db.g, db.h, db.k, db.z))
    one = _el(alg, np.eye(4, dtype=np.int64))
    t = 2 ** (two_local_s(q) - 1)

    def comm(x, y):
        return x.inverse() * y.inverse() * x * y

    return {
        "d^(2^(s-1)) = z": d**t == z,
        "g^(2^(s-1)) = z": g**t == z,
        "z^2 = 1": z**2 == one,
        "h^2 = 1": h**2 == one,
        "k^2 = 1": k**2 == one,
        "d^h = d^-1": d.conj(h) == d.inverse(),
        "g^k = g^-1": g.conj(k) == g.inverse(),
        "[d,g] = 1": comm(d, g) == one,
        "[d,k] = 1": comm(d, k) == one,
        "[h,g] = 1": comm(h, g) == one,
        "[h,k] = 1": comm(h, k) == one,
    }


def check_omrel(q: int) -> dict[str, bool]:
    db = double_base(q)
    alg = MatrixAlgebra(field_of_order(q), 4)
    d, g, h, k, e, f = (_el(alg, m) for m in (db.d, db.g, db.h, db.k, db.e, db.f))
    return {
        "d^e = g^-1": d.conj(e) == g.inverse(),
        "g^e = d^-1": g.conj(e) == d.inverse(),
        "h^e = gk": h.conj(e) == g * k,
        "k^e = dh": k.conj(e) == d * h,
        "d^f = g": d.conj(f) == g,
        "g^f = d": g.conj(f) == d,
        "h^f = k": h.conj(f) == k,
        "k^f = h": k.conj(f) == h,
    }


# -- measurement --------------------------------------------------------------------

def build_model(spec: SylowModelSpec, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    kind = spec.kind
    if kind == "GLtower":
        if spec.n is None:
            return gl_tower_level(spec.p, spec.q, spec.r)
        return gl_sylow_tower(spec.p, spec.q, spec.n)
    if kind == "W2sp":
        return w_base(spec.q)
    if kind == "W2orth":
        return w_orth(spec.q)
    if kind in ("Wr", "SpTower"):
        return w_tower(spec.q, spec.r)
    if kind == "WprimeR":
        return w_prime_tower(spec.q, spec.r, cap)
    if kind == "WdoubleR":
        return w_double_tower(spec.q, spec.r, spec.projective, cap)
    raise InvalidSpec(f"unknown Sylow model kind {kind!r}")


def measure(spec: SylowModelSpec, cap: int = DEFAULT_BUDGET) -> tuple[int, FactoredInteger]:
    """(order, exponent) of a model by enumeration."""
    E = enumerate_group(build_model(spec, cap), cap)
    return E.order, exponent(E)


def w_tower_order(q: int, r: int) -> int:
    s = two_local_s(q)
    return 2 ** ((s + 1) * 2 ** (r - 1) + 2 ** (r - 1) - 1)

