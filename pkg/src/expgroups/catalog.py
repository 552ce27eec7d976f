"""Concrete generators for the small and sporadic groups used in the tables."""
from __future__ import annotations

import itertools
import math
import warnings

import numpy as np

from .classical import ClassicalSpec, order_factored, standard_generators
from .errors import CapExceeded, InvalidSpec, NotSimpleRange
from .gf import make_field
from .grpengine import (
    DEFAULT_BUDGET,
    Element,
    GroupHandle,
    MatrixAlgebra,
    cyclic_perm_group,
    enumerate_group,
    perm_group,
    semidirect_product,
)
from .numth import prime_power_base

MATHIEU = {
    "M11": (11, ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"], 7920),
    "M12": (
        12,
        ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)", "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"],
        95040,
    ),
    "M22": (
        22,
        [
            "(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
            "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
            "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)",
        ],
        443520,
    ),
}


def alternating_group(n: int) -> GroupHandle:
    if n < 3:
        return perm_group([[0] if n < 1 else list(range(n))], max(n, 1), f"A{n}")
    if n % 2:
        long = list(range(1, n)) + [0]
    else:
        long = [0] + list(range(2, n)) + [1]
    three = [1, 2, 0] + list(range(3, n))
    return perm_group([long, three], n, f"A{n}")


def symmetric_group(n: int) -> GroupHandle:
    if n < 2:
        return perm_group([[0]], 1, "S1")
    return perm_group([list(range(1, n)) + [0], [1, 0] + list(range(2, n))], n, f"S{n}")


def mathieu_group(name: str) -> GroupHandle:
    try:
        degree, gens, _ = MATHIEU[name]
    except KeyError:
        raise InvalidSpec(f"no generators stored for {name}") from None
    return perm_group(gens, degree, name)


def classical_group(family: str, dim: int, q: int, sign: int | None = None) -> GroupHandle:
    spec = ClassicalSpec(family, dim, q, sign)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotSimpleRange)
        handle, _ = standard_generators(spec)
    return handle


def psl2(q: int) -> GroupHandle:
    return classical_group("PSL", 2, q)


# -- unitary groups in dimension 3 ----------------------------------------------------

def _unitary_unipotents(q: int) -> tuple[list[np.ndarray], object]:
    """Upper unitriangular 3x3 matrices over GF(q^2) preserving the hermitian
    form x1*y3^q + x2*y2^q + x3*y1^q (q prime)."""
    p, k = prime_power_base(q)
    if k != 1:
        raise InvalidSpec("unitary groups are built here for prime q only")
    F = make_field(p, 2)

    def bar(x):
        return F.pow(x, q)

    out = []
    for a, b, c in itertools.product(range(F.q), repeat=3):
        # M^T J Mbar = J reduces to a + c^q = 0 and b + b^q + a a^q = 0
        if F.add(a, bar(c)) != 0:
            continue
        if F.add(F.add(b, bar(b)), F.mul(a, bar(a))) != 0:
            continue
        if (a, b, c) != (0, 0, 0):
            out.append(np.array([[1, a, b], [0, 1, c], [0, 0, 1]], dtype=np.int64))
    return out, F


def special_unitary_3(q: int, projective: bool = False, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    """SU(3,q), or PSU(3,q) = U3(q) when projective, from root elements."""
    ups, F = _unitary_unipotents(q)
    w = np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=np.int64)
    target = q**3 * (q**2 - 1) * (q**3 + 1)
    if projective:
        target //= math.gcd(3, q + 1)
    alg = MatrixAlgebra(F, 3, projective)
    name = f"U3({q})" if projective else f"SU(3,{q})"
    gens = []
    for u in ups:
        gens += [Element(alg, alg.from_rows(u)), Element(alg, alg.from_rows(w @ u @ w))]
        handle = GroupHandle(alg, list(gens), name)
        if len(gens) >= 2 and enumerate_group(handle, cap).order == target:
            return handle
    raise CapExceeded(cap, 0)


# -- PSp(2,q^2) extended by the field automorphism --------------------------------------

def frobenius_extension(q: int, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    """PSp(2,q^2) x| C2, the C2 acting by x -> x^q on matrix entries."""
    N = classical_group("PSp", 2, q * q)
    F = N.algebra.field
    images = []
    for g in N.generators:
        M = np.vectorize(lambda x: F.pow(int(x), q))(np.asarray(g.data[0]))
        images.append(Element(N.algebra, N.algebra.from_rows(M)))
    return semidirect_product(N, cyclic_perm_group(2), [images], cap, f"PSp(2,{q * q})x|C2")


# -- named lookup -------------------------------------------------------------------

def named_group(name: str, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    """Groups by the short names used in the tables (A7, S8, L2(11), U3(3), ...)."""
    if name in MATHIEU:
        return mathieu_group(name)
    if name[0] in "AS" and name[1:].isdigit():
        n = int(name[1:])
        return alternating_group(n) if name[0] == "A" else symmetric_group(n)
    builders = {
        "L2(5)": lambda: psl2(5),
        "L2(7)": lambda: psl2(7),
        "L2(11)": lambda: psl2(11),
        "L2(13)": lambda: psl2(13),
        "L2(25)": lambda: psl2(25),
        "L3(4)": lambda: classical_group("PSL", 3, 4),
        "U3(3)": lambda: special_unitary_3(3, False, cap),
        "U3(5)": lambda: special_unitary_3(5, True, cap),
        "U4(2)": lambda: classical_group("PSp", 4, 3),
        "U4(3)": lambda: classical_group("POmegaEven", 6, 3, -1),
        "Sp6(2)": lambda: classical_group("Sp", 6, 2),
        "PSp4(7)": lambda: classical_group("PSp", 4, 7),
    }
    if name not in builders:
        raise InvalidSpec(f"no construction for {name}")
    return builders[name]()


NAMED_ORDERS = {
    "L2(5)": 60, "L2(7)": 168, "L2(11)": 660, "L2(13)": 1092, "L2(25)": 7800, "L3(4)": 20160,
    "U3(3)": 6048, "U3(5)": 126000, "U4(2)": 25920, "U4(3)": 3265920, "Sp6(2)": 1451520,
    "PSp4(7)": int(order_factored(ClassicalSpec("PSp", 4, 7))),
    "M11": 7920, "M12": 95040, "M22": 443520,
}


# -- generator files ----------------------------------------------------------------

def read_generators_file(path, projective: bool = False) -> GroupHandle:
    """Header 'perm <degree>' or 'mat <n> <p> <k>', then one generator per line:
    cycle notation, or matrix rows separated by ';' with field digits."""
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise InvalidSpec(f"{path}: empty generator file")
    head = lines[0].split()
    if head[0] == "perm" and len(head) == 2:
        return perm_group(lines[1:], int(head[1]), str(path))
    if head[0] == "mat" and len(head) == 4:
        n, p, k = map(int, head[1:])
        F = make_field(p, k)
        alg = MatrixAlgebra(F, n, projective)
        gens = []
        for ln in lines[1:]:
            rows = [[int(x) for x in r.split()] for r in ln.split(";")]
            M = np.array(rows, dtype=np.int64)
            if M.shape != (n, n) or (M < 0).any() or (M >= F.q).any():
                raise InvalidSpec(f"{path}: bad matrix line {ln!r}")
            gens.append(Element(alg, alg.from_rows(M)))
        return GroupHandle(alg, gens, str(path))
    raise InvalidSpec(f"{path}: header must be 'perm <degree>' or 'mat <n> <p> <k>'")
