"""Classical groups over GF(q) as concrete matrix groups.

Conventions: matrices act on column vectors.  A quadratic form is stored as
an upper-triangular matrix A with Q(x) = x^T A x; its polar form is
B(x, y) = Q(x+y) - Q(x) - Q(y), with Gram matrix A + A^T.  Hyperbolic planes
are Q = x1*x2, so B(x, x) = 2*x1*x2.  Symplectic groups use the block form
J = diag([[0,1],[-1,0]], ...).  Every basis is ordered plane by plane.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, InvalidSpec, NotIsometry, NotSimpleRange
from .gf import FiniteField, field_of_order
from .grpengine import (
    CapExceeded,
    Element,
    GroupHandle,
    MatrixAlgebra,
    enumerate_group,
)
from .numth import FactoredInteger, factorize, is_prime_power, prime_power_base

FAMILIES = (
    "GL", "SL", "PSL", "Sp", "PSp", "SOodd", "OmegaOdd", "POmegaOdd",
    "SOeven", "OmegaEven", "POmegaEven", "GOeven", "Keven",
)
EVEN_ORTHOGONAL = {"SOeven", "OmegaEven", "POmegaEven", "GOeven", "Keven"}
ODD_ORTHOGONAL = {"SOodd", "OmegaOdd", "POmegaOdd"}
PROJECTIVE = {"PSL", "PSp", "POmegaOdd", "POmegaEven"}

_ALIASES = {f.lower(): f for f in FAMILIES}
_ALIASES.update({
    "omega+": "OmegaEven", "omega-": "OmegaEven", "so": "SOodd", "omega": "OmegaOdd",
    "pomega": "POmegaOdd", "go": "GOeven", "k": "Keven",
})


def normalize_family(name: str) -> str:
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise InvalidSpec(f"unknown classical family {name!r}") from None


@dataclass(frozen=True)
class ClassicalSpec:
    """family, natural dimension, field size and (even orthogonal only) sign."""

    family: str
    dim: int
    q: int
    sign: int | None = None

    def __post_init__(self):
        fam = normalize_family(self.family)
        object.__setattr__(self, "family", fam)
        if not is_prime_power(self.q):
            raise InvalidSpec(f"q={self.q} is not a prime power")
        if self.dim < 1:
            raise InvalidSpec("dimension must be positive")
        if fam in EVEN_ORTHOGONAL:
            if self.sign not in (1, -1):
                raise InvalidSpec(f"{fam} needs sign +1 or -1")
            if self.dim % 2:
                raise InvalidSpec(f"{fam} needs even dimension")
            if fam == "Keven" and self.q % 2 == 0:
                raise InvalidSpec("the spinor kernel is defined here for odd q only")
        elif self.sign is not None:
            raise InvalidSpec(f"{fam} takes no sign")
        if fam in ("Sp", "PSp") and self.dim % 2:
            raise InvalidSpec("symplectic dimension must be even")
        if fam in ODD_ORTHOGONAL and (self.dim % 2 == 0 or self.dim < 3):
            raise InvalidSpec("odd orthogonal dimension must be odd and at least 3")

    @classmethod
    def from_m(cls, family: str, m: int, q: int, sign: int | None = None) -> ClassicalSpec:
        """Build from the rank-style parameter: Sp(2m), O(2m+1), O(2m), GL(m)."""
        fam = normalize_family(family)
        if fam in ("Sp", "PSp") or fam in EVEN_ORTHOGONAL:
            dim = 2 * m
        elif fam in ODD_ORTHOGONAL:
            dim = 2 * m + 1
        else:
            dim = m
        return cls(fam, dim, q, sign)

    @property
    def p(self) -> int:
        return prime_power_base(self.q)[0]

    @property
    def m(self) -> int:
        return self.dim // 2 if self.family not in ("GL", "SL", "PSL") else self.dim

    @property
    def projective(self) -> bool:
        return self.family in PROJECTIVE

    def __str__(self):
        sign = {1: "+", -1: "-", None: ""}[self.sign]
        return f"{self.family}{sign}({self.dim},{self.q})"


@dataclass(frozen=True, eq=False)
class QuadraticFormSpec:
    """A bilinear or quadratic form on GF(q)^dim.

    kind is 'plus', 'minus', 'odd' for quadratic forms and 'symplectic' for
    the alternating form.  `quad` is the upper-triangular coefficient matrix
    (None for symplectic), `gram` the Gram matrix of the polar/alternating form.
    """

    dim: int
    q: int
    kind: str
    gram: np.ndarray
    quad: np.ndarray | None = None

    @property
    def field(self) -> FiniteField:
        return field_of_order(self.q)

    @property
    def representation(self) -> np.ndarray:
        if self.quad is not None and self.q % 2 == 0:
            return self.quad
        return self.gram

    def Q(self, x) -> int:
        """Value of the quadratic form at a vector."""
        F = self.field
        x = [int(v) for v in x]
        acc = 0
        for i in range(self.dim):
            for j in range(i, self.dim):
                c = int(self.quad[i, j])
                if c and x[i] and x[j]:
                    acc = F.add(acc, F.mul(c, F.mul(x[i], x[j])))
        return acc

    def B(self, x, y) -> int:
        return _bilinear(self.field, self.gram, x, y)


# -- scalar linear algebra over GF(q) -----------------------------------------

def _bilinear(F: FiniteField, G, x, y) -> int:
    acc = 0
    n = len(x)
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if G[i, j] and y[j]:
                acc = F.add(acc, F.mul(int(x[i]), F.mul(int(G[i, j]), int(y[j]))))
    return acc


def mat_mul(F: FiniteField, A, B) -> np.ndarray:
    A = np.asarray(A)
    B = np.asarray(B)
    n, k = A.shape
    m = B.shape[1]
    out = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                if A[i, t] and B[t, j]:
                    acc = F.add(acc, F.mul(int(A[i, t]), int(B[t, j])))
            out[i, j] = acc
    return out


def _echelon(F: FiniteField, M):
    """Row echelon form; returns (rows, pivot columns, determinant factor)."""
    rows = [list(map(int, r)) for r in np.asarray(M)]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    det = 1
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if rows[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
            det = F.neg(det)
        piv = rows[r][c]
        det = F.mul(det, piv)
        inv = F.inv(piv)
        rows[r] = [F.mul(inv, v) for v in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows, pivots, det


def mat_rank(F: FiniteField, M) -> int:
    return len(_echelon(F, M)[1])


def mat_det(F: FiniteField, M) -> int:
    M = np.asarray(M)
    rows, pivots, det = _echelon(F, M)
    return det if len(pivots) == M.shape[0] else 0


def _identity_minus(F: FiniteField, M) -> np.ndarray:
    n = M.shape[0]
    out = np.zeros_like(M, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            out[i, j] = F.sub(1 if i == j else 0, int(M[i, j]))
    return out


# -- standard forms --------------------------------------------------------------

def _anisotropic_plane(F: FiniteField) -> tuple[int, int]:
    """(b, c) with x^2 + b*x*y + c*y^2 irreducible, lexicographically least.

    For odd q this is b = 0 with the least c making -c a nonsquare; for even
    q the least c with t^2 + t + c irreducible.
    """
    for b in range(F.q):
        for c in range(1, F.q):
            # irreducible iff t^2 + b t + c has no root
            if all(F.add(F.mul(t, F.add(t, b)), c) != 0 for t in range(F.q)):
                return b, c
    raise AssertionError("no irreducible quadratic")


def standard_form(family: str, dim: int, q: int, sign: int | None = None) -> QuadraticFormSpec:
    """Canonical invariant form for a family: hyperbolic planes, then the
    anisotropic plane (minus type) or the unary summand <1> (odd dimension)."""
    fam = normalize_family(family)
    F = field_of_order(q)
    if fam in ("Sp", "PSp"):
        if dim % 2:
            raise InvalidSpec("symplectic dimension must be even")
        J = np.zeros((dim, dim), dtype=np.int64)
        for i in range(0, dim, 2):
            J[i, i + 1] = 1
            J[i + 1, i] = F.neg(1)
        return QuadraticFormSpec(dim, q, "symplectic", J)
    if fam in ("GL", "SL", "PSL"):
        raise InvalidSpec(f"{fam} preserves no form")
    A = np.zeros((dim, dim), dtype=np.int64)
    if fam in ODD_ORTHOGONAL:
        if dim % 2 == 0:
            raise InvalidSpec("odd orthogonal dimension must be odd")
        kind, planes = "odd", (dim - 1) // 2
        A[dim - 1, dim - 1] = 1
    else:
        if dim % 2 or sign not in (1, -1):
            raise InvalidSpec("even orthogonal forms need even dimension and a sign")
        kind = "plus" if sign == 1 else "minus"
        planes = dim // 2 if sign == 1 else dim // 2 - 1
        if sign == -1:
            b, c = _anisotropic_plane(F)
            i = dim - 2
            A[i, i], A[i, i + 1], A[i + 1, i + 1] = 1, b, c
    for k in range(planes):
        A[2 * k, 2 * k + 1] = 1
    gram = np.zeros_like(A)
    for i in range(dim):
        for j in range(dim):
            gram[i, j] = F.add(int(A[i, j]), int(A[j, i]))
    return QuadraticFormSpec(dim, q, kind, gram, A)


def form_for(spec: ClassicalSpec) -> QuadraticFormSpec | None:
    if spec.family in ("GL", "SL", "PSL"):
        return None
    return standard_form(spec.family, spec.dim, spec.q, spec.sign)


def orthogonal_sum(*forms: QuadraticFormSpec) -> QuadraticFormSpec:
    q = forms[0].q
    dim = sum(f.dim for f in forms)
    A = np.zeros((dim, dim), dtype=np.int64)
    G = np.zeros((dim, dim), dtype=np.int64)
    o = 0
    for f in forms:
        A[o : o + f.dim, o : o + f.dim] = f.quad
        G[o : o + f.dim, o : o + f.dim] = f.gram
        o += f.dim
    return QuadraticFormSpec(dim, q, "sum", G, A)


# -- isometry predicates -------------------------------------------------------------

def _check_dims(M, form: QuadraticFormSpec) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.shape != (form.dim, form.dim):
        raise DimensionMismatch(f"{M.shape} matrix against a {form.dim}-dimensional form")
    return M


def preserves_form_batch(alg: MatrixAlgebra, batch: np.ndarray, form: QuadraticFormSpec) -> np.ndarray:
    """Vectorized isometry test for a stack of matrices (no projective mode)."""
    if batch.shape[1:] != (form.dim, form.dim):
        raise DimensionMismatch("matrix size does not match the form")
    raw = MatrixAlgebra(alg.field, alg.n)
    mt = np.ascontiguousarray(batch.transpose(0, 2, 1))
    gram = form.gram.astype(np.int32)[None]
    ok = np.all(raw.mul(raw.mul(mt, gram), batch) == gram, axis=(1, 2))
    if form.quad is not None:
        A = form.quad.astype(np.int32)[None]
        d = raw.mul(raw.mul(mt, A), batch)
        diag = np.diagonal(d, axis1=1, axis2=2)
        ok &= np.all(diag == np.diagonal(form.quad)[None, :], axis=1)
    return ok


def preserves_form(M, form: QuadraticFormSpec) -> bool:
    """True iff M is an isometry: Gram congruence plus Q on a basis."""
    M = _check_dims(M, form)
    alg = MatrixAlgebra(form.field, form.dim)
    return bool(preserves_form_batch(alg, M.astype(np.int32)[None], form)[0])


def _require_isometry(M, form: QuadraticFormSpec) -> np.ndarray:
    M = _check_dims(M, form)
    if form.quad is None or not preserves_form(M, form):
        raise NotIsometry("matrix does not preserve the quadratic form")
    return M


def spinor_norm(M, form: QuadraticFormSpec) -> str:
    """'trivial' or 'nonsquare'; normalized so a reflection in v maps to Q(v).

    Uses the discriminant of the bilinear form chi(x, y) = B(x, w) with
    (1 - M) w = y on the image of 1 - M, which is multiplicative and agrees
    with the product of Q-values over any reflection factorization.
    """
    F = form.field
    if F.p == 2:
        raise InvalidSpec("spinor norm is taken for odd q; use dickson() in characteristic 2")
    M = _require_isometry(M, form)
    D = _identity_minus(F, M)
    _, pivots, _ = _echelon(F, D)  # independent columns of D
    if not pivots:
        return "trivial"
    V = D[:, pivots]  # basis v_j = D e_{c_j}; preimage w_j = e_{c_j}
    k = len(pivots)
    chi = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            w = np.zeros(form.dim, dtype=np.int64)
            w[pivots[j]] = 1
            chi[i, j] = form.B(V[:, i], w)
    d = mat_det(F, chi)
    return "trivial" if F.is_square(d) else "nonsquare"


def dickson(M, form: QuadraticFormSpec) -> int:
    """rank(M - I) mod 2."""
    M = _require_isometry(M, form)
    return mat_rank(form.field, _identity_minus(form.field, M)) % 2


def omega_membership(M, form: QuadraticFormSpec) -> bool:
    M = _require_isometry(M, form)
    F = form.field
    if F.p == 2:
        return dickson(M, form) == 0
    return mat_det(F, M) == 1 and spinor_norm(M, form) == "trivial"


def kernel_membership(M, form: QuadraticFormSpec) -> bool:
    """Membership in K, the kernel of the spinor norm on the full isometry group."""
    return spinor_norm(M, form) == "trivial"


def reflection(v, form: QuadraticFormSpec) -> np.ndarray:
    """x -> x - (B(x,v)/Q(v)) v, for Q(v) nonzero."""
    F = form.field
    v = [int(t) for t in v]
    qv = form.Q(v)
    if qv == 0:
        raise ValueError("reflection needs an anisotropic vector")
    inv = F.inv(qv)
    n = form.dim
    R = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        e = [0] * n
        e[j] = 1
        coef = F.mul(form.B(e, v), inv)
        for i in range(n):
            R[i, j] = F.sub(e[i], F.mul(coef, v[i]))
    return R


# -- orders ---------------------------------------------------------------------------

def _fq(q: int, e: int) -> FactoredInteger:
    p, k = prime_power_base(q)
    return FactoredInteger({p: k * e})


def _qpow_minus(q: int, e: int, eps: int = 1) -> FactoredInteger:
    return factorize(q**e - eps)


def order_factored(spec: ClassicalSpec) -> FactoredInteger:
    """Group order from the classical formulas, assembled term by term."""
    fam, n, q = spec.family, spec.dim, spec.q
    if fam in ("GL", "SL", "PSL"):
        out = _fq(q, n * (n - 1) // 2)
        for i in range(1, n + 1):
            out = out * _qpow_minus(q, i)
        if fam == "GL":
            return out
        out = out / factorize(q - 1)
        if fam == "SL":
            return out
        return out / factorize(math.gcd(n, q - 1))
    if fam in ("Sp", "PSp"):
        m = n // 2
        out = _fq(q, m * m)
        for i in range(1, m + 1):
            out = out * _qpow_minus(q, 2 * i)
        if fam == "PSp" and q % 2:
            out = out / 2
        return out
    if fam in ODD_ORTHOGONAL:
        m = (n - 1) // 2
        sp = order_factored(ClassicalSpec("Sp", 2 * m, q))
        if q % 2 == 0:
            return sp
        return sp if fam == "SOodd" else sp / 2
    # even dimension
    m = n // 2
    eps = spec.sign
    go = FactoredInteger({2: 1}) * _fq(q, m * (m - 1)) * _qpow_minus(q, m, eps)
    for i in range(1, m):
        go = go * _qpow_minus(q, 2 * i)
    if fam == "GOeven":
        return go
    if q % 2 == 0:
        return go if fam == "SOeven" else go / 2
    if fam in ("SOeven", "Keven"):
        return go / 2
    omega = go / 4
    if fam == "POmegaEven" and (q**m - eps) % 4 == 0:
        return omega / 2
    return omega


def order_value(spec: ClassicalSpec) -> int:
    """Group order as a plain integer; same formulas as order_factored, no factoring."""
    fam, n, q = spec.family, spec.dim, spec.q
    if fam in ("GL", "SL", "PSL"):
        out = q ** (n * (n - 1) // 2) * math.prod(q**i - 1 for i in range(1, n + 1))
        if fam == "GL":
            return out
        out //= q - 1
        return out if fam == "SL" else out // math.gcd(n, q - 1)
    if fam in ("Sp", "PSp"):
        m = n // 2
        out = q ** (m * m) * math.prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        return out // 2 if fam == "PSp" and q % 2 else out
    if fam in ODD_ORTHOGONAL:
        sp = order_value(ClassicalSpec("Sp", n - 1, q))
        return sp if q % 2 == 0 or fam == "SOodd" else sp // 2
    m, eps = n // 2, spec.sign
    go = 2 * q ** (m * (m - 1)) * (q**m - eps) * math.prod(q ** (2 * i) - 1 for i in range(1, m))
    if fam == "GOeven":
        return go
    if q % 2 == 0:
        return go if fam == "SOeven" else go // 2
    if fam in ("SOeven", "Keven"):
        return go // 2
    if fam == "POmegaEven" and (q**m - eps) % 4 == 0:
        return go // 8
    return go // 4


# -- generators -----------------------------------------------------------------------

_SIMPLE_EXCEPTIONS = {
    ("PSL", 2, 2), ("PSL", 2, 3), ("PSp", 2, 2), ("PSp", 2, 3), ("PSp", 4, 2),
}


def _warn_range(spec: ClassicalSpec) -> None:
    key = (spec.family, spec.dim, spec.q)
    if key in _SIMPLE_EXCEPTIONS or (spec.family == "POmegaEven" and spec.dim <= 4 and spec.sign == 1):
        warnings.warn(f"{spec} is not simple", NotSimpleRange, stacklevel=3)


def _elementary(n: int, i: int, j: int, lam: int) -> np.ndarray:
    M = np.eye(n, dtype=np.int64)
    M[i, j] = lam
    return M


def _linear_generators(spec: ClassicalSpec, F: FiniteField) -> list[np.ndarray]:
    n = spec.dim
    w = F.primitive_element
    gens = []
    if n == 1:
        return [np.array([[w]])] if spec.family == "GL" else [np.eye(1, dtype=np.int64)]
    gens.append(_elementary(n, 0, 1, 1))
    gens.append(_elementary(n, 1, 0, 1))
    if F.k > 1:
        gens.append(_elementary(n, 0, 1, w))
    if n > 2:
        # n-cycle on the basis, sign-corrected to determinant 1
        P = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            P[(i + 1) % n, i] = 1
        if n % 2 == 0:
            P[0, n - 1] = F.neg(1)
        gens.append(P)
    if spec.family == "GL":
        D = np.eye(n, dtype=np.int64)
        D[0, 0] = w
        gens.append(D)
    return gens


def _symplectic_generators(spec: ClassicalSpec, F: FiniteField) -> list[np.ndarray]:
    n = spec.dim
    w = F.primitive_element
    gens = [_elementary(n, 0, 1, 1), _elementary(n, 1, 0, 1)]
    if F.k > 1:
        gens.append(_elementary(n, 0, 1, w))
    if n > 2:
        # cycle the hyperbolic pairs
        P = np.zeros((n, n), dtype=np.int64)
        m = n // 2
        for i in range(m):
            j = (i + 1) % m
            P[2 * j, 2 * i] = 1
            P[2 * j + 1, 2 * i + 1] = 1
        gens.append(P)
        # symplectic transvection along e1 + e2: x -> x + B(x, v) v
        J = standard_form("Sp", n, spec.q).gram
        v = np.zeros(n, dtype=np.int64)
        v[0] = v[2] = 1
        T = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            e = np.zeros(n, dtype=np.int64)
            e[j] = 1
            c = _bilinear(F, J, e, v)
            for i in range(n):
                T[i, j] = F.add(int(e[i]), F.mul(c, int(v[i])))
        gens.append(T)
    return gens


def _orthogonal_candidates(spec: ClassicalSpec, form: QuadraticFormSpec, F: FiniteField, seed: int):
    """Deterministic stream of candidate generators lying in the target group."""
    rng = np.random.default_rng(seed)
    n = form.dim
    fam = spec.family
    odd = F.p != 2
    planes = n // 2 if form.kind == "plus" else (n - 1) // 2 if form.kind == "odd" else n // 2 - 1
    if planes >= 2:
        # cycling the hyperbolic planes; needed e.g. for GO+(4,2), which
        # orthogonal transvections alone do not generate
        P = np.eye(n, dtype=np.int64)
        P[: 2 * planes, : 2 * planes] = 0
        for i in range(planes):
            j = (i + 1) % planes
            P[2 * j, 2 * i] = P[2 * j + 1, 2 * i + 1] = 1
        if _in_family(P, spec, form):
            yield P
    while True:
        u = rng.integers(0, F.q, n)
        v = rng.integers(0, F.q, n)
        qu, qv = form.Q(u), form.Q(v)
        if qu == 0:
            continue
        ru = reflection(u, form)
        if fam == "GOeven":
            yield ru
            continue
        if fam == "Keven":
            if F.is_square(qu):
                yield ru
            elif qv and F.is_square(F.mul(qu, qv)):
                yield mat_mul(F, ru, reflection(v, form))
            continue
        if qv == 0:
            continue
        if fam == "SOeven" and not odd:
            yield ru
            continue
        pair = mat_mul(F, ru, reflection(v, form))
        if fam in ("SOodd", "SOeven") or not odd:
            yield pair
        elif F.is_square(F.mul(qu, qv)):
            yield pair


def _in_family(M, spec: ClassicalSpec, form: QuadraticFormSpec) -> bool:
    fam = spec.family
    F = form.field
    if fam == "GOeven":
        return True
    if fam in ("SOodd", "SOeven"):
        return F.p == 2 or mat_det(F, M) == 1
    if fam == "Keven":
        return kernel_membership(M, form)
    return omega_membership(M, form)


def _greedy_generators(spec: ClassicalSpec, form: QuadraticFormSpec, F: FiniteField,
                       target: int, cap: int) -> list[np.ndarray]:
    alg = MatrixAlgebra(F, spec.dim, spec.projective)
    gens: list[np.ndarray] = []
    current = None
    stream = _orthogonal_candidates(spec, form, F, seed=1000 * spec.dim + spec.q)
    for tries in range(2000):
        cand = next(stream)
        el = Element(alg, alg.from_rows(cand))
        if current is not None and current.contains(el):
            continue
        gens.append(cand)
        current = enumerate_group(GroupHandle(alg, [Element(alg, alg.from_rows(g)) for g in gens]), cap)
        if current.order == target:
            return gens
        if current.order > target:
            raise AssertionError(f"generated group of {spec} exceeds the expected order")
    raise AssertionError(f"could not generate {spec}")


def _orthogonal_generators(spec: ClassicalSpec, form: QuadraticFormSpec, F: FiniteField,
                           cap: int) -> list[np.ndarray]:
    if F.p == 2 and spec.family in ODD_ORTHOGONAL:
        raise InvalidSpec("odd-dimensional orthogonal groups in characteristic 2 are not built here")
    target = order_factored(spec).value
    if target == 1:
        return [np.eye(spec.dim, dtype=np.int64)]
    return _greedy_generators(spec, form, F, target, cap)


@lru_cache(maxsize=128)
def _generator_rows(spec: ClassicalSpec, cap: int) -> tuple:
    F = field_of_order(spec.q)
    form = form_for(spec)
    if spec.family in ("GL", "SL", "PSL"):
        gens = _linear_generators(spec, F)
    elif spec.family in ("Sp", "PSp"):
        gens = _symplectic_generators(spec, F)
    else:
        gens = _orthogonal_generators(spec, form, F, cap)
    return tuple(tuple(map(tuple, np.asarray(g).tolist())) for g in gens)


def standard_generators(spec: ClassicalSpec, cap: int = 5_000_000) -> tuple[GroupHandle, QuadraticFormSpec | None]:
    """Generators for the group named by spec, with the form it preserves.

    Projective families live in the projective matrix algebra.  Orthogonal
    generators are chosen greedily (deterministic seed) until the generated
    group reaches the order given by order_factored.
    """
    _warn_range(spec)
    F = field_of_order(spec.q)
    rows = _generator_rows(spec, cap)
    alg = MatrixAlgebra(F, spec.dim, spec.projective)
    gens = [Element(alg, alg.from_rows(np.array(g))) for g in rows]
    return GroupHandle(alg, gens, str(spec)), form_for(spec)


def central_involution(spec: ClassicalSpec) -> Element:
    """-I in the linear (non-projective) algebra of the spec."""
    F = field_of_order(spec.q)
    alg = MatrixAlgebra(F, spec.dim)
    return Element(alg, alg.from_rows(np.eye(spec.dim, dtype=np.int64) * F.neg(1)))
