"""Scenario ingestion, built-in fixtures, and check execution.

A scenario is a JSON object: {"schemaVersion": 1, "model": {...},
"seed": <int>, "cutoff": <int>, "checks": [{"check": <name>, ...}]}.
Every descriptor / operation / polynomial parameter is a literal string
parsed against the declared model; unknown check names are rejected
before anything runs.
"""

from __future__ import annotations

import json
import os
import time

from .errors import ParseError, SemistarError
from .models import ZERO, model_from_spec
from .operations import closure, ft_of, quasi_spectrum, tilde_of
from .invertibility import (
    group_check,
    h_domain_equivalence_suite,
    invertibility_identity_suite,
    is_h_star_domain,
    is_quasi_star_invertible,
    is_star_invertible,
    localization_criterion,
    quasi_vs_star_bridge,
    star_f_tilde_bridge,
    check_invertible_implies_finite,
    strict_finite_witness,
)
from .nagata import (
    content,
    content_invertible_bridge,
    glue_principal_generator,
    in_nagata_multiplicative_set,
    nagata_invertible,
    saturation_check,
)
from .operations import axiom_check, op_leq
from .registry import parse_descriptor, parse_operation, parse_polynomial
from .report import FAIL, INCONCLUSIVE, PASS, CheckRecord, Report
from .sampling import derive_rng, sample_descriptor, sample_fg_fractional
from .suite import run_property_suite

DEFAULT_SEED = 20240717


def _env_seed() -> int:
    raw = os.environ.get("SEMISTAR_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise ParseError(f"SEMISTAR_SEED must be an integer, got {raw!r}")


class ScenarioContext:
    def __init__(self, model, seed: int, cutoff: int):
        self.model = model
        self.seed = seed
        self.cutoff = cutoff

    def descriptor(self, text):
        return parse_descriptor(self.model, text)

    def operation(self, text):
        return parse_operation(self.model, text)


def _verdict(ok: bool):
    return PASS if ok else FAIL


# each executor: (ctx, params) -> (verdict, witness, detail|None)


def _chk_binary(opname):
    def run(ctx, p):
        model = ctx.model
        a = ctx.descriptor(p["left"])
        b = ctx.descriptor(p["right"])
        out = getattr(model, opname)(a, b)
        got = "Zero" if out is ZERO else repr(out)
        if "expect" in p:
            return _verdict(got == p["expect"]), got, None
        return PASS, got, None

    return run


def _chk_leq(ctx, p):
    got = ctx.model.leq(ctx.descriptor(p["left"]), ctx.descriptor(p["right"]))
    return _verdict(got == p["expect"]), got, None


def _chk_normalize(ctx, p):
    out = ctx.model.normalize([tuple(x) if isinstance(x, list) else x for x in p["raw"]])
    return _verdict(repr(out) == p["expect"]), repr(out), None


def _chk_closure(ctx, p):
    out = closure(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    if "expect" in p:
        return _verdict(repr(out) == p["expect"]), repr(out), None
    return PASS, repr(out), None


def _chk_invertible(ctx, p):
    got = is_star_invertible(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    return _verdict(got == p["expect"]), got, None


def _chk_quasi(ctx, p):
    got = is_quasi_star_invertible(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    return _verdict(got == p["expect"]), got, None


def _chk_strict_witness(ctx, p):
    out = strict_finite_witness(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]), ctx.cutoff)
    got = None if out is None else repr(out)
    return _verdict(got == p.get("expect")), got, None


def _chk_spectrum(ctx, p):
    spec = quasi_spectrum(ctx.operation(p["op"]))
    got = sorted(s.name for s in spec.quasi_maximals)
    detail = {
        "quasiPrimes": sorted(s.name for s in spec.quasi_primes),
        "piStar": sorted(s.name for s in spec.pi_star),
        "quasiMaximals": got,
    }
    if "expectMaximals" in p:
        return _verdict(got == sorted(p["expectMaximals"])), got, detail
    return PASS, got, detail


def _chk_h_domain(ctx, p):
    got = is_h_star_domain(ctx.model, ctx.operation(p["op"]))
    return _verdict(got == p["expect"]), got, None


def _chk_h_equivalence(ctx, p):
    rep = h_domain_equivalence_suite(
        ctx.model, ctx.operation(p["op"]), samples=p.get("samples", 200), seed=ctx.seed
    )
    ok = rep["equivalent"]
    if "expectValue" in p:
        ok = ok and all(v == p["expectValue"] for v in rep["conditions"].values())
    if "expectWitness" in p:
        ok = ok and rep["witness"] == p["expectWitness"]
    return _verdict(ok), rep["witness"], rep


def _chk_op_agree(ctx, p):
    op1 = ctx.operation(p["op1"])
    op2 = ctx.operation(p["op2"])
    n = p.get("samples", 200)
    ok1, w1 = op_leq(op1, op2, n, ctx.seed)
    ok2, w2 = op_leq(op2, op1, n, ctx.seed)
    witness = w1 or w2
    return _verdict(ok1 and ok2), None if witness is None else repr(witness), None


def _chk_op_leq(ctx, p):
    ok, w = op_leq(ctx.operation(p["op1"]), ctx.operation(p["op2"]), p.get("samples", 200), ctx.seed)
    return _verdict(ok == p["expect"]), None if w is None else repr(w), None


def _chk_inv_implies_principal(ctx, p):
    op = ctx.operation(p["op"])
    model = ctx.model
    rng = derive_rng(ctx.seed, "inv-principal", model.name, op.name)
    witness = None
    for _ in range(p.get("samples", 200)):
        i = sample_descriptor(model, rng)
        if not i.fractional:
            continue
        if is_star_invertible(op, i) and not model.is_principal(i):
            witness = repr(i)
            break
    return _verdict(witness is None), witness, None


def _chk_localization_criterion(ctx, p):
    rep = localization_criterion(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    ok = rep["pass"]
    if "expectInvertible" in p:
        ok = ok and rep["invertible"] == p["expectInvertible"]
    if "expectLocal" in p:
        ok = ok and all(v == p["expectLocal"] for v in rep["localPrincipal"].values())
    return _verdict(ok), None, rep


def _chk_group(ctx, p):
    rep = group_check(ctx.operation(p["op"]), p["carrier"], p.get("samples", 100), ctx.seed)
    return _verdict(rep["pass"]), rep["failures"][:1] or None, rep


def _chk_group_criterion(ctx, p):
    model = ctx.model
    op = ctx.operation(p["op"])
    c = model.colon(model.D(), closure(op, model.D()))
    got = c is not ZERO
    ok = got == p["expect"]
    if "expectColon" in p:
        ok = ok and (repr(c) if c is not ZERO else "Zero") == p["expectColon"]
    return _verdict(ok), "Zero" if c is ZERO else repr(c), None


def _chk_axioms(ctx, p):
    rep = axiom_check(ctx.operation(p["op"]), p.get("samples", 200), ctx.seed)
    return _verdict(rep["all_passed"]), None, rep


def _chk_identity_suite(ctx, p):
    rep = invertibility_identity_suite(ctx.operation(p["op"]), p.get("samples", 200), ctx.seed)
    return _verdict(rep["pass"]), None, rep


def _chk_bridge(ctx, p):
    rep = quasi_vs_star_bridge(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    ok = rep.get("pass", True) if rep["applicable"] else True
    return _verdict(ok), None, rep


def _chk_ft_tilde(ctx, p):
    rep = star_f_tilde_bridge(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    return _verdict(rep["pass"]), None, rep


def _chk_inv_iff_finite(ctx, p):
    rep = check_invertible_implies_finite(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    ok = rep["equivalent"]
    for key in ("ftInvertible", "starInvertible"):
        want = p.get("expect" + key[0].upper() + key[1:])
        if want is not None:
            ok = ok and rep[key] == want
    return _verdict(ok), None, rep


def _chk_content(ctx, p):
    h = parse_polynomial(ctx.model, p["polynomial"])
    out = content(h)
    return _verdict(repr(out) == p["expect"]), repr(out), None


def _chk_in_nagata_set(ctx, p):
    h = parse_polynomial(ctx.model, p["polynomial"])
    got = in_nagata_multiplicative_set(ctx.operation(p["op"]), h)
    return _verdict(got == p["expect"]), got, None


def _chk_nagata_invertible(ctx, p):
    got = nagata_invertible(ctx.operation(p["op"]), ctx.descriptor(p["ideal"]))
    return _verdict(got == p["expect"]), got, None


def _chk_content_bridge(ctx, p):
    h = parse_polynomial(ctx.model, p["polynomial"])
    rep = content_invertible_bridge(ctx.operation(p["op"]), h)
    ok = rep["pass"]
    if "expectInvertible" in p:
        ok = ok and rep["contentInvertible"] == p["expectInvertible"]
    return _verdict(ok), None, rep


def _chk_saturation(ctx, p):
    rep = saturation_check(ctx.operation(p["op"]), p.get("samples", 200), ctx.seed)
    return _verdict(rep["pass"]), rep["witness"], rep


def _chk_glue(ctx, p):
    polys = [parse_polynomial(ctx.model, t) for t in p["polynomials"]]
    op = ctx.operation(p["op"])
    if p.get("expectError"):
        try:
            glue_principal_generator(op, polys)
        except SemistarError as exc:
            return _verdict(type(exc).__name__ == p["expectError"]), type(exc).__name__, None
        return FAIL, "no error", None
    glued, rep = glue_principal_generator(op, polys)
    ok = rep["pass"]
    if "expect" in p:
        ok = ok and repr(glued) == p["expect"]
    return _verdict(ok), repr(glued), rep


def _chk_suite(ctx, p):
    results = run_property_suite(
        [ctx.model],
        op_filter=p.get("ops"),
        n=p.get("samples", 100),
        seed=ctx.seed,
        cutoff=ctx.cutoff,
        laws=p.get("laws"),
    )
    failed = [r for r in results if r.verdict == "fail"]
    inconclusive = [r for r in results if r.verdict == "inconclusive"]
    detail = {
        "laws": len(results),
        "failed": [r.as_dict() for r in failed[:5]],
        "inconclusive": len(inconclusive),
    }
    if failed:
        return FAIL, failed[0].witness, detail
    if inconclusive:
        return INCONCLUSIVE, None, detail
    return PASS, None, detail


CHECKS = {
    "add": _chk_binary("add"),
    "mul": _chk_binary("mul"),
    "intersect": _chk_binary("intersect"),
    "colon": _chk_binary("colon"),
    "leq": _chk_leq,
    "normalize": _chk_normalize,
    "closure": _chk_closure,
    "invertible": _chk_invertible,
    "quasi": _chk_quasi,
    "strict-witness": _chk_strict_witness,
    "spectrum": _chk_spectrum,
    "h-domain": _chk_h_domain,
    "h-equivalence": _chk_h_equivalence,
    "op-agree": _chk_op_agree,
    "op-leq": _chk_op_leq,
    "inv-implies-principal": _chk_inv_implies_principal,
    "localization-criterion": _chk_localization_criterion,
    "group": _chk_group,
    "group-criterion": _chk_group_criterion,
    "axioms": _chk_axioms,
    "identity-suite": _chk_identity_suite,
    "bridge": _chk_bridge,
    "ft-tilde": _chk_ft_tilde,
    "invertible-iff-finite": _chk_inv_iff_finite,
    "content": _chk_content,
    "in-nagata-set": _chk_in_nagata_set,
    "nagata-invertible": _chk_nagata_invertible,
    "content-bridge": _chk_content_bridge,
    "saturation": _chk_saturation,
    "glue": _chk_glue,
    "suite": _chk_suite,
}


def run_scenario_dict(scenario: dict, seed: int | None = None, cutoff: int | None = None) -> Report:
    if scenario.get("schemaVersion") != 1:
        raise ParseError(f"unsupported schemaVersion {scenario.get('schemaVersion')!r}")
    model = model_from_spec(scenario["model"])
    seed = seed if seed is not None else scenario.get("seed", _env_seed())
    cutoff = cutoff if cutoff is not None else scenario.get("cutoff", 64)
    checks = scenario.get("checks", [])
    for c in checks:
        if c.get("check") not in CHECKS:
            raise ParseError(f"unknown check {c.get('check')!r}")
    ctx = ScenarioContext(model, seed, cutoff)
    report = Report(seed=seed)
    for c in checks:
        params = {k: v for k, v in c.items() if k not in ("check", "label")}
        started = time.perf_counter()
        try:
            verdict, witness, detail = CHECKS[c["check"]](ctx, params)
        except SemistarError as exc:
            verdict, witness, detail = FAIL, f"{type(exc).__name__}: {exc}", None
        record = CheckRecord(
            name=c.get("label", c["check"]),
            inputs=params,
            verdict=verdict,
            witness=witness,
            detail=detail,
            elapsed=time.perf_counter() - started,
        )
        report.record(record)
    return report


def run_scenario(path: str, seed: int | None = None, cutoff: int | None = None) -> Report:
    try:
        with open(path) as fh:
            scenario = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", position=f"line {exc.lineno} col {exc.colno}")
    return run_scenario_dict(scenario, seed=seed, cutoff=cutoff)


# -- built-in fixtures ----------------------------------------------------

FIXTURES: dict[str, dict] = {
    "semigroup-345": {
        "schemaVersion": 1,
        "model": {"kind": "semigroup", "generators": [3, 4, 5]},
        "checks": [
            {"check": "closure", "label": "maximal ideal is divisorial", "op": "v", "ideal": "Id{3,4,5}", "expect": "Id{3,4,5}"},
            {"check": "spectrum", "label": "divisorial maximals", "op": "v", "expectMaximals": ["M"]},
            {"check": "spectrum", "label": "t-maximals", "op": "t", "expectMaximals": ["M"]},
            {"check": "op-agree", "label": "stable closure of v is the identity", "op1": "w", "op2": "d", "samples": 200},
            {"check": "inv-implies-principal", "label": "v-invertibles are principal", "op": "v", "samples": 200},
            {"check": "op-leq", "label": "v exceeds d with witness", "op1": "v", "op2": "d", "expect": False, "samples": 200},
        ],
    },
    "pvd-dvr-hull": {
        "schemaVersion": 1,
        "model": {"kind": "pvd"},
        "checks": [
            {"check": "colon", "label": "inverse of M is the hull", "left": "D", "right": "V@1", "expect": "V@0"},
            {"check": "mul", "label": "M times its inverse stays M", "left": "V@1", "right": "V@0", "expect": "V@1"},
            {"check": "quasi", "label": "M quasi-invertible for the hull operation", "op": "star{T=V@0}", "ideal": "V@1", "expect": True},
            {"check": "invertible", "label": "M not invertible for the hull operation", "op": "star{T=V@0}", "ideal": "V@1", "expect": False},
            {"check": "op-agree", "label": "stable closure is the identity", "op1": "tilde(star{T=V@0})", "op2": "d", "samples": 200},
            {"check": "spectrum", "label": "single quasi-maximal", "op": "ft(star{T=V@0})", "expectMaximals": ["M"]},
        ],
    },
    "rank2-lex": {
        "schemaVersion": 1,
        "model": {"kind": "valuation-rank2-lex"},
        "checks": [
            {"check": "closure", "label": "P is closed for its spectral operation", "op": "spectral{P}", "ideal": "Row(1)", "expect": "Row(1)"},
            {"check": "strict-witness", "label": "strict finiteness witness", "op": "spectral{P}", "ideal": "Row(1)", "expect": "C(1,0)"},
            {"check": "invertible", "label": "P not invertible", "op": "spectral{P}", "ideal": "Row(1)", "expect": False},
            {"check": "quasi", "label": "P quasi-invertible", "op": "spectral{P}", "ideal": "Row(1)", "expect": True},
            {"check": "colon", "label": "(D:P) is the localization", "left": "D", "right": "Row(1)", "expect": "Row(0)"},
            {"check": "colon", "label": "(P:P) is the localization", "left": "Row(1)", "right": "Row(1)", "expect": "Row(0)"},
            {"check": "localization-criterion", "label": "locally principal yet not invertible", "op": "spectral{P}", "ideal": "Row(1)", "expectInvertible": False, "expectLocal": True},
        ],
    },
    "staircase-2d": {
        "schemaVersion": 1,
        "model": {"kind": "staircase"},
        "checks": [
            {"check": "closure", "label": "M^v is the whole ring", "op": "v", "ideal": "St{(1,0),(0,1)}", "expect": "St{(0,0)}"},
            {"check": "invertible", "label": "M is v-invertible", "op": "v", "ideal": "St{(1,0),(0,1)}", "expect": True},
            {"check": "colon", "label": "(D:M) = D", "left": "St{(0,0)}", "right": "St{(1,0),(0,1)}", "expect": "St{(0,0)}"},
            {"check": "mul", "label": "M(D:M) stays M", "left": "St{(1,0),(0,1)}", "right": "St{(0,0)}", "expect": "St{(0,1),(1,0)}"},
            {"check": "leq", "label": "M below D", "left": "St{(1,0),(0,1)}", "right": "St{(0,0)}", "expect": True},
            {"check": "leq", "label": "D not below M", "left": "St{(0,0)}", "right": "St{(1,0),(0,1)}", "expect": False},
        ],
    },
    "rank1-dense": {
        "schemaVersion": 1,
        "model": {"kind": "valuation-rank1-dense"},
        "checks": [
            {"check": "colon", "label": "inverse of M is the ring", "left": "D", "right": "Seg(>0)", "expect": "Seg(>=0)"},
            {"check": "closure", "label": "M^v is the ring", "op": "v", "ideal": "Seg(>0)", "expect": "Seg(>=0)"},
            {"check": "closure", "label": "M is t-closed", "op": "t", "ideal": "Seg(>0)", "expect": "Seg(>0)"},
            {"check": "h-domain", "label": "not an H-domain for v", "op": "v", "expect": False},
            {"check": "h-equivalence", "label": "all four conditions false", "op": "v", "expectValue": False, "expectWitness": "Seg(>0)", "samples": 200},
            {"check": "invertible", "label": "M is v-invertible", "op": "v", "ideal": "Seg(>0)", "expect": True},
            {"check": "invertible", "label": "M is not t-invertible", "op": "t", "ideal": "Seg(>0)", "expect": False},
        ],
    },
    "group-pvd": {
        "schemaVersion": 1,
        "model": {"kind": "pvd"},
        "checks": [
            {"check": "group-criterion", "label": "invertible star-ideals form a group", "op": "star{T=V@0}", "expect": True, "expectColon": "V@1"},
            {"check": "closure", "label": "M is star-closed", "op": "star{T=V@0}", "ideal": "V@1", "expect": "V@1"},
            {"check": "quasi", "label": "M inside the quasi group", "op": "star{T=V@0}", "ideal": "V@1", "expect": True},
            {"check": "invertible", "label": "M outside the invertible group", "op": "star{T=V@0}", "ideal": "V@1", "expect": False},
            {"check": "group", "label": "quasi-invertible group laws", "op": "star{T=V@0}", "carrier": "QInvStar", "samples": 100},
            {"check": "group", "label": "invertible group laws", "op": "star{T=V@0}", "carrier": "InvStar", "samples": 100},
        ],
    },
}


def run_fixtures(only: str | None = None, seed: int | None = None) -> Report:
    seed = seed if seed is not None else _env_seed()
    names = [only] if only else list(FIXTURES)
    for name in names:
        if name not in FIXTURES:
            raise ParseError(f"unknown fixture {name!r}; have {sorted(FIXTURES)}")
    report = Report(seed=seed)
    for name in names:
        sub = run_scenario_dict(FIXTURES[name], seed=seed)
        for check in sub.checks:
            check.name = f"{name}: {check.name}"
            report.record(check)
    return report
