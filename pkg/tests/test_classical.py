import warnings

import numpy as np
import pytest

from expgroups.classical import (
    ClassicalSpec,
    central_involution,
    dickson,
    kernel_membership,
    normalize_family,
    omega_membership,
    order_factored,
    order_value,
    preserves_form,
    reflection,
    spinor_norm,
    standard_form,
    standard_generators,
)
from expgroups.errors import InvalidSpec, NotIsometry, NotSimpleRange
from expgroups.grpengine import enumerate_group, exponent


def _specs():
    out = []
    for fam in ("GL", "SL", "PSL"):
        for n, qs in ((2, (2, 3, 4, 5, 7, 8, 9)), (3, (2, 3))):
            out += [ClassicalSpec(fam, n, q) for q in qs]
    for fam in ("Sp", "PSp"):
        out += [ClassicalSpec(fam, 2, q) for q in (2, 3, 4, 5, 7, 9)]
        out += [ClassicalSpec(fam, 4, q) for q in (2, 3)]
    out.append(ClassicalSpec("Sp", 6, 2))
    for fam in ("SOodd", "OmegaOdd", "POmegaOdd"):
        out += [ClassicalSpec(fam, 3, q) for q in (3, 5, 7)]
        out.append(ClassicalSpec(fam, 5, 3))
    for fam in ("GOeven", "SOeven", "OmegaEven", "POmegaEven", "Keven"):
        for sign in (1, -1):
            out += [ClassicalSpec(fam, 2, q, sign) for q in (3, 5, 7)]
            out += [ClassicalSpec(fam, 4, q, sign) for q in (3, 5)]
    for fam in ("GOeven", "SOeven", "OmegaEven"):
        for sign in (1, -1):
            out += [ClassicalSpec(fam, 4, q, sign) for q in (2, 4)]
            out.append(ClassicalSpec(fam, 6, 2, sign))
    return out


SPECS = _specs()


def _preserved_up_to_scalar(M, form):
    """Projective groups store one representative per scalar class."""
    F = form.field
    for c in range(1, F.q):
        cM = np.vectorize(lambda x: F.mul(c, int(x)))(M)
        if preserves_form(cM, form):
            return True
    return False


def _build(spec):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotSimpleRange)
        return standard_generators(spec)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_factored_order_matches_enumeration(spec):
    handle, form = _build(spec)
    E = enumerate_group(handle)
    assert E.order == order_factored(spec).value
    assert E.order % exponent(E).value == 0
    if form is not None:
        for g in handle.generators:
            M = np.asarray(g.data[0])
            if spec.projective:
                assert _preserved_up_to_scalar(M, form)
            else:
                assert preserves_form(M, form)


def test_textbook_orders():
    known = {
        ClassicalSpec("PSL", 2, 7): 168,
        ClassicalSpec("SL", 2, 5): 120,
        ClassicalSpec("PSL", 3, 4): 20160,
        ClassicalSpec("Sp", 4, 3): 51840,
        ClassicalSpec("PSp", 4, 3): 25920,
        ClassicalSpec("OmegaOdd", 5, 3): 25920,
        ClassicalSpec("OmegaEven", 4, 3, -1): 360,
        ClassicalSpec("OmegaEven", 4, 3, 1): 288,
        ClassicalSpec("OmegaEven", 6, 2, 1): 20160,
        ClassicalSpec("OmegaEven", 6, 2, -1): 25920,
        ClassicalSpec("OmegaEven", 8, 2, 1): 174182400,
        ClassicalSpec("POmegaEven", 6, 3, -1): 3265920,
        ClassicalSpec("Sp", 6, 2): 1451520,
        ClassicalSpec("GOeven", 2, 7, 1): 12,
        ClassicalSpec("GOeven", 2, 7, -1): 16,
    }
    for spec, n in known.items():
        assert order_factored(spec) == n, spec


@pytest.mark.parametrize("spec", SPECS + [ClassicalSpec("OmegaEven", 12, 7, -1), ClassicalSpec("PSL", 7, 9)], ids=str)
def test_integer_order_agrees(spec):
    assert order_value(spec) == order_factored(spec).value


def test_family_aliases_and_from_m():
    assert normalize_family("sp") == "Sp"
    assert normalize_family("omega-") == "OmegaEven"
    assert normalize_family("go") == "GOeven"
    assert ClassicalSpec.from_m("Sp", 3, 2).dim == 6
    assert ClassicalSpec.from_m("OmegaOdd", 2, 3).dim == 5
    assert ClassicalSpec.from_m("OmegaEven", 4, 2, 1).dim == 8
    assert ClassicalSpec.from_m("GL", 3, 4).dim == 3
    assert str(ClassicalSpec("OmegaEven", 4, 3, -1)) == "OmegaEven-(4,3)"


@pytest.mark.parametrize(
    "args",
    [("Sp", 3, 5, None), ("OmegaOdd", 4, 5, None), ("OmegaEven", 4, 5, None), ("GL", 2, 6, None),
     ("Sp", 4, 5, 1), ("Keven", 4, 4, 1), ("Nope", 2, 2, None)],
)
def test_invalid_specs(args):
    with pytest.raises(InvalidSpec):
        ClassicalSpec(*args)


def test_not_simple_warning():
    with pytest.warns(NotSimpleRange):
        standard_generators(ClassicalSpec("PSL", 2, 3))


def test_spinor_norm_of_reflections():
    for q in (3, 5, 7):
        form = standard_form("OmegaOdd", 3, q)
        F = form.field
        seen = set()
        for v in np.ndindex(q, q, q):
            qv = form.Q(v)
            if qv == 0:
                continue
            R = reflection(v, form)
            assert preserves_form(R, form)
            sn = spinor_norm(R, form)
            assert sn == ("trivial" if F.is_square(qv) else "nonsquare")
            assert not omega_membership(R, form)  # determinant -1
            seen.add(sn)
        assert seen == {"trivial", "nonsquare"}


def test_omega_generators_have_trivial_invariants():
    for spec in (ClassicalSpec("OmegaOdd", 5, 3), ClassicalSpec("OmegaEven", 4, 5, -1),
                 ClassicalSpec("OmegaEven", 4, 4, 1), ClassicalSpec("OmegaEven", 6, 2, -1)):
        handle, form = _build(spec)
        for g in handle.generators:
            M = np.asarray(g.data[0])
            assert omega_membership(M, form)
            if spec.q % 2 == 0:
                assert dickson(M, form) == 0
            else:
                assert kernel_membership(M, form)


def test_dickson_of_reflection_is_one():
    form = standard_form("OmegaEven", 4, 2, 1)
    R = reflection([1, 1, 0, 0], form)
    assert dickson(R, form) == 1
    assert not omega_membership(R, form)


def test_non_isometry_rejected():
    form = standard_form("OmegaOdd", 3, 5)
    with pytest.raises(NotIsometry):
        spinor_norm(np.diag([2, 1, 1]), form)


def test_central_involution():
    z = central_involution(ClassicalSpec("Sp", 4, 5))
    assert (z * z).is_identity() and not z.is_identity()
