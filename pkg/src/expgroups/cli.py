"""Command-line entry point: expgroups <command> [options]."""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
import warnings

from .classical import ClassicalSpec, normalize_family, standard_generators
from .errors import CapExceeded, ExpGroupsError, NotSimpleRange
from .grpengine import DEFAULT_BUDGET, Element, GroupHandle, MatrixAlgebra, enumerate_group, exponent
from .numth import FactoredInteger

_U64 = 2**64
BUDGET_ENV = "EXPGROUPS_BUDGET"


def default_budget() -> int:
    """Element budget from $EXPGROUPS_BUDGET, else the engine default."""
    v = os.environ.get(BUDGET_ENV)
    return int(v) if v else DEFAULT_BUDGET


class Report:
    """Collects values, fields and checks; renders as text or JSON."""

    def __init__(self, argv, inputs):
        self.command = " ".join(argv)
        self.inputs = inputs
        self.outputs = []
        self.fields = []
        self.checks = []
        self.timing = None

    def value(self, name, v, provenance):
        if isinstance(v, int):
            v = FactoredInteger.of(v)
        n = v.value
        self.outputs.append({
            "name": name,
            "factored": str(v),
            "expanded": n if n < _U64 else None,
            "provenance": provenance,
        })

    def field(self, name, v):
        self.fields.append({"name": name, "value": v})

    def check(self, name, passed, expected=None, actual=None):
        self.checks.append({"name": name, "passed": bool(passed), "expected": expected, "actual": actual})

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def as_dict(self):
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "fields": self.fields,
            "checks": self.checks,
            "passed": self.passed,
        }
        if self.timing is not None:
            out["timing"] = self.timing
        return out

    def render(self) -> str:
        lines = [f"$ expgroups {self.command}"]
        for f in self.fields:
            lines.append(f"{f['name']}: {f['value']}")
        for o in self.outputs:
            exp = "" if o["expanded"] is None else f" = {o['expanded']}"
            lines.append(f"{o['name']} = {o['factored']}{exp} [{o['provenance']}]")
        for c in self.checks:
            if c["passed"]:
                lines.append(f"PASS {c['name']}")
            else:
                lines.append(f"FAIL {c['name']}")
                lines.append(f"  - expected {c['expected']}")
                lines.append(f"  + actual   {c['actual']}")
        if self.checks:
            n_ok = sum(c["passed"] for c in self.checks)
            lines.append(f"{n_ok}/{len(self.checks)} checks passed")
        if self.timing is not None:
            lines.append(f"time {self.timing:.2f}s")
        return "\n".join(lines)


# -- group specs on the command line ---------------------------------------------------

_SPEC_RE = re.compile(r"^([a-zA-Z]+?)([+-])?(\d+):(\d+)$")


def parse_group(text: str, projective: bool = False, cap: int = DEFAULT_BUDGET) -> GroupHandle:
    """'sl2:5', 'psp4:3', 'omega-4:3', a table name like 'M11', or a generator file."""
    from .catalog import named_group, read_generators_file

    if os.path.exists(text):
        return read_generators_file(text, projective)
    m = _SPEC_RE.match(text)
    if m:
        fam, sign, dim, q = m.group(1), m.group(2), int(m.group(3)), int(m.group(4))
        sgn = None if sign is None else (1 if sign == "+" else -1)
        try:
            fam = normalize_family(fam + (sign or ""))
        except ExpGroupsError:
            fam = normalize_family(fam)
        spec = ClassicalSpec(fam, dim, q, sgn)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NotSimpleRange)
            handle, _ = standard_generators(spec, cap)
        if projective and not handle.algebra.projective:
            alg = MatrixAlgebra(handle.algebra.field, handle.algebra.n, True)
            gens = [Element(alg, alg.normalize(g.data)) for g in handle.generators]
            return GroupHandle(alg, gens, f"P{spec}")
        return handle
    handle = named_group(text, cap)
    if projective and isinstance(handle.algebra, MatrixAlgebra) and not handle.algebra.projective:
        alg = MatrixAlgebra(handle.algebra.field, handle.algebra.n, True)
        handle = GroupHandle(alg, [Element(alg, alg.normalize(g.data)) for g in handle.generators], text)
    return handle


def _spec_from_args(a) -> ClassicalSpec:
    fam = a.family
    sign = a.sign
    if fam[-1] in "+-" and len(fam) > 1:
        sign = 1 if fam[-1] == "+" else -1
        try:
            fam = normalize_family(fam)
        except ExpGroupsError:
            fam = fam[:-1]
    fam = normalize_family(fam)
    if a.dim is not None:
        return ClassicalSpec(fam, a.dim, a.q, sign)
    m = a.m if a.m is not None else a.n
    if m is None:
        raise SystemExit("exponent: give --m, --n or --dim")
    return ClassicalSpec.from_m(fam, m, a.q, sign)


# -- commands ----------------------------------------------------------------------------

def cmd_exponent(a, rep: Report):
    from .expfml import exp_p, exp_p_alternating, exponent_alternating, exponent_formula

    if a.family.lower() in ("alt", "a", "alternating"):
        if a.n is None:
            raise SystemExit("exponent: --family alt needs --n")
        rep.field("group", f"A{a.n}")
        if a.p:
            rep.value(f"exp_{a.p}", exp_p_alternating(a.n, a.p), "formula")
        else:
            rep.value("exponent", exponent_alternating(a.n), "formula")
        return
    spec = _spec_from_args(a)
    rep.field("group", str(spec))
    if a.p:
        rep.value(f"exp_{a.p}", exp_p(spec, a.p), "formula")
    else:
        rep.value("exponent", exponent_formula(spec), "formula")


def cmd_exponent_brute(a, rep: Report):
    if (a.group is None) == (a.gens_file is None):
        raise SystemExit("exponent-brute: give exactly one of --group or --gens-file")
    if a.gens_file is not None:
        from .catalog import read_generators_file

        handle = read_generators_file(a.gens_file, a.projective)
    else:
        handle = parse_group(a.group, a.projective, a.cap)
    E = enumerate_group(handle, a.cap, a.workers)
    rep.field("group", handle.name or a.group)
    rep.value("order", E.order, "enumerated")
    rep.value("exponent", exponent(E), "enumerated")


def _classify_id(a):
    from .classify import SimpleGroupId

    fam = a.family.lower().replace("_", "-")
    if fam in ("alt", "a", "alternating"):
        return SimpleGroupId.alt(a.n)
    if fam in ("psp4",):
        return SimpleGroupId.psp4(a.q)
    if fam in ("psp-even-even", "pspeveneven", "psp"):
        return SimpleGroupId.psp_even_even(a.m, a.q)
    if fam in ("pomega-odd", "pomegaodd"):
        return SimpleGroupId.pomega_odd(a.m, a.q)
    if fam in ("pomega-plus", "pomegaplus"):
        return SimpleGroupId.pomega_plus(a.m, a.q)
    if fam in ("named", "sporadic", "sporadicorsmall"):
        return SimpleGroupId.named(a.name)
    raise SystemExit(f"classify: unknown family {a.family!r}")


def cmd_classify(a, rep: Report):
    from .classify import alternating_no_set, classify

    if a.alt_range is not None:
        rep.field("alternating NO set", alternating_no_set(a.alt_range))
        return
    if a.family is None:
        raise SystemExit("classify: give --family or --alt-range")
    r = classify(_classify_id(a))
    rep.field("group", r.group)
    rep.field("verdict", r.verdict)
    rep.field("reason", r.reason)
    rep.field("anchor", r.anchor)
    if r.witness:
        rep.field("witness", r.witness)
    if r.note:
        rep.field("note", r.note)


def cmd_sylow(a, rep: Report):
    from .sylowlab import SylowModelSpec, build_model

    spec = SylowModelSpec(a.kind, a.q, a.r, a.p, a.n, a.projective)
    handle = build_model(spec, a.cap)
    E = enumerate_group(handle, a.cap)
    rep.field("model", handle.name or a.kind)
    rep.value("order", E.order, "enumerated")
    rep.value("exponent", exponent(E), "enumerated")


def cmd_verify(a, rep: Report):
    if a.suite == "table3":
        from .classify import verify_table3

        for row in verify_table3(a.budget):
            rep.check(
                f"{row.group} vs {row.subgroup} [{row.mode_G}/{row.mode_M}]",
                row.matches,
                f"{row.printed_G} / {row.printed_M}",
                f"{row.exp_G.value} / {row.exp_M.value}",
            )
    elif a.suite == "witnesses":
        from .classify import default_witness_ids, verify_witness

        for gid in default_witness_ids():
            r = verify_witness(gid, a.budget)
            if r.status == "budget_exceeded":
                rep.field(f"{r.group} ~ {r.witness}", "skipped: over budget")
                continue
            rep.check(
                f"{r.group} ~ {r.witness} [{r.mode_G}/{r.mode_W}]",
                r.ok,
                str(r.exp_G),
                str(r.exp_W),
            )
    else:
        from .oracles import default_grid, run_grid

        if a.grid != "default":
            raise SystemExit(f"verify formulas: unknown grid {a.grid!r}")
        for g in run_grid(default_grid(a.budget), a.budget):
            full = g.full_formula
            rep.check(
                f"{g.spec} [{g.oracle.mode}] primes {g.covered}",
                g.ok,
                str(full) if full is not None else ", ".join(f"{p}:{g.formula[p]}" for p in g.covered),
                str(g.oracle.exponent),
            )


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="expgroups", description="Exponents of finite simple and classical groups.")
    ap.add_argument("--json", action="store_true", help="emit one JSON document")
    ap.add_argument("--timing", action="store_true", help="include wall-clock time")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponent", help="closed-form exponent or p-part")
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--sign", type=int, choices=(1, -1))
    p.add_argument("--p", type=int)

    p = sub.add_parser("exponent-brute", help="exponent by enumeration")
    p.add_argument("--group")
    p.add_argument("--gens-file")
    p.add_argument("--projective", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("classify", help="same-exponent subgroup verdict")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--name")
    p.add_argument("--alt-range", type=int)

    p = sub.add_parser("sylow", help="order and exponent of a Sylow model")
    p.add_argument("--kind", required=True, choices=("Wr", "WprimeR", "WdoubleR", "GLtower", "W2sp", "W2orth"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--n", type=int)
    p.add_argument("--projective", action="store_true")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("verify", help="acceptance suites")
    p.add_argument("suite", choices=("table3", "witnesses", "formulas"))
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--grid", default="default")
    return ap


COMMANDS = {
    "exponent": cmd_exponent,
    "exponent-brute": cmd_exponent_brute,
    "classify": cmd_classify,
    "sylow": cmd_sylow,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for k in ("cap", "budget"):
        if getattr(a, k, 0) is None:
            setattr(a, k, default_budget())
    rep = Report(argv, {k: v for k, v in sorted(vars(a).items()) if k not in ("json", "timing")})
    t0 = time.perf_counter()
    try:
        COMMANDS[a.command](a, rep)
    except SystemExit as exc:
        print(f"usage error: {exc.code}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ExpGroupsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if a.timing:
        rep.timing = round(time.perf_counter() - t0, 3)
    if a.json:
        print(json.dumps(rep.as_dict(), indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print(rep.render())
    return 0 if rep.passed else 1


def entry() -> None:
    sys.exit(main())
