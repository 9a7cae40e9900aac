"""Seeded property suite: every library invariant as a named law.

Each law samples descriptors from its model, evaluates a predicate, and
reports checked / passed / inconclusive counts; the first failure is
shrunk (generator count first, then exponent magnitude) and recorded as
the witness.  Inconclusive means a bounded search or supremum gave up,
never a silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CutoffNotStabilized, RawOutsideFamily, SearchExhausted
from .models import ZERO, DomainModel
from .operations import (
    SemistarOperation,
    axiom_check,
    closure,
    ft_of,
    identity_operation,
    quasi_spectrum,
    tilde_of,
    vstar_of,
)
from .invertibility import (
    check_invertible_implies_finite,
    group_check,
    h_domain_definition_check,
    h_domain_equivalence_suite,
    invertibility_identity_suite,
    invertibility_witness,
    is_quasi_star_invertible,
    is_star_invertible,
    localization_criterion,
    quasi_vs_star_bridge,
    star_f_tilde_bridge,
    star_finite_witness,
    strict_finite_witness,
)
from .nagata import (
    content_invertible_bridge,
    glue_principal_generator,
    in_nagata_multiplicative_set,
    nagata_invertible,
    saturation_check,
)
from .errors import NotInvertibleExtension
from .registry import catalogue_ops
from .sampling import (
    derive_rng,
    sample_descriptor,
    sample_fg_fractional,
    sample_fractional,
    sample_polynomial,
    sample_value,
    shrink_witness,
)


@dataclass
class LawResult:
    law: str
    model: str
    op: str | None
    checked: int
    passed: int
    inconclusive: int
    witness: str | None

    @property
    def failed(self) -> int:
        return self.checked - self.passed - self.inconclusive

    @property
    def verdict(self) -> str:
        if self.failed:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    def as_dict(self) -> dict:
        return {
            "law": self.law,
            "model": self.model,
            "op": self.op,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "inconclusive": self.inconclusive,
            "witness": self.witness,
        }


def _run_sampled(law, model, op_name, n, rng, sample_fn, fails_fn) -> LawResult:
    """Drive a predicate over n samples with shrinking on first failure."""
    passed = inconclusive = 0
    witness = None
    for _ in range(n):
        tup = sample_fn(rng)
        try:
            bad = fails_fn(tup)
        except (SearchExhausted, CutoffNotStabilized):
            inconclusive += 1
            continue
        if not bad:
            passed += 1
        elif witness is None:
            small = shrink_witness(tup, fails_fn)
            witness = ", ".join(repr(x) for x in small)
    return LawResult(law, model.name, op_name, n, passed, inconclusive, witness)


# -- model-level laws ---------------------------------------------------


def _raw_pieces(model, rng):
    kind = model.kind
    if kind == "semigroup":
        return [rng.randint(-8, 8) for _ in range(rng.randint(1, 4))]
    if kind == "staircase":
        return [(rng.randint(-8, 8), rng.randint(-8, 8)) for _ in range(rng.randint(1, 4))]
    if kind == "valuation-rank1-discrete":
        return [rng.randint(-8, 8) for _ in range(rng.randint(1, 3))]
    if kind == "valuation-rank1-dense":
        from fractions import Fraction

        return [(Fraction(rng.randint(-8, 8), rng.choice((1, 2, 4))), True) for _ in range(rng.randint(1, 3))]
    if kind == "valuation-rank2-lex":
        return [("C", rng.randint(-8, 8), rng.randint(-8, 8)) for _ in range(rng.randint(1, 3))]
    if kind == "pvd":
        return [(rng.randint(-8, 8), rng.choice(("D", "V"))) for _ in range(rng.randint(1, 3))]
    if kind == "semilocal-pid":
        return [(rng.randint(-8, 8), rng.randint(-8, 8)) for _ in range(rng.randint(1, 3))]
    raise RawOutsideFamily(kind)


def _redundant_piece(model, rng, pieces):
    first = pieces[0]
    kind = model.kind
    if kind == "semigroup":
        return first + rng.choice(model.semigroup.generators)
    if kind == "staircase":
        return (first[0] + rng.randint(0, 3), first[1] + rng.randint(0, 3))
    if kind == "valuation-rank1-discrete":
        return first + rng.randint(0, 4)
    if kind == "valuation-rank1-dense":
        return (first[0] + rng.randint(0, 3), True)
    if kind == "valuation-rank2-lex":
        return ("C", first[1] + rng.randint(0, 2), first[2] + rng.randint(0, 4))
    if kind == "pvd":
        return (first[0] + rng.randint(0, 3), first[1])
    if kind == "semilocal-pid":
        return (first[0] + rng.randint(0, 3), first[1] + rng.randint(0, 3))
    raise RawOutsideFamily(kind)


def law_canonical(model, ops, n, seed, cutoff):
    rng = derive_rng(seed, "canonical", model.name)
    passed = 0
    witness = None
    for _ in range(n):
        pieces = _raw_pieces(model, rng)
        extended = list(pieces) + [_redundant_piece(model, rng, pieces)]
        rng.shuffle(extended)
        a = model.normalize(pieces)
        b = model.normalize(extended)
        same = a == b and model.normalize(list(reversed(pieces))) == a
        if same:
            passed += 1
        elif witness is None:
            witness = f"pieces={pieces!r}"
    return [LawResult("models.canonical", model.name, None, n, passed, 0, witness)]


def law_ring(model, ops, n, seed, cutoff):
    rng = derive_rng(seed, "ring", model.name)

    def sample(r):
        return (
            sample_descriptor(model, r),
            sample_descriptor(model, r),
            sample_descriptor(model, r),
        )

    def fails(t):
        a, b, c = t
        if model.add(a, b) != model.add(b, a) or model.mul(a, b) != model.mul(b, a):
            return True
        if model.add(model.add(a, b), c) != model.add(a, model.add(b, c)):
            return True
        if model.mul(model.mul(a, b), c) != model.mul(a, model.mul(b, c)):
            return True
        if model.add(a, a) != a:
            return True
        if model.mul(model.D(), a) != a:
            return True
        return False

    res = _run_sampled("models.ring-laws", model, None, n, rng, sample, fails)

    def fails_dist(t):
        a, b, c = t
        return model.mul(a, model.add(b, c)) != model.add(model.mul(a, b), model.mul(a, c))

    res2 = _run_sampled("models.distributive", model, None, n, rng, sample, fails_dist)
    return [res, res2]


def law_colon_adjunction(model, ops, n, seed, cutoff):
    rng = derive_rng(seed, "colon-adj", model.name)

    def sample(r):
        return (sample_descriptor(model, r), sample_descriptor(model, r))

    def fails(t):
        a, b = t
        q = model.colon(a, b)
        if q is ZERO:
            return False
        return not model.leq(model.mul(b, q), a)

    return [_run_sampled("models.colon-adjunction", model, None, n, rng, sample, fails)]


def law_localize(model, ops, n, seed, cutoff):
    rng = derive_rng(seed, "localize", model.name)
    results = []
    for site in model.primes:
        def sample(r):
            return (sample_descriptor(model, r), sample_descriptor(model, r))

        def fails(t, site=site):
            a, b = t
            if site.localize(model.D()) != site.localized_model.D():
                return True
            return site.localize(model.mul(a, b)) != site.localized_model.mul(
                site.localize(a), site.localize(b)
            )

        results.append(
            _run_sampled("models.localize", model, site.name, n, rng, sample, fails)
        )
    return results


def law_flags_and_chain(model, ops, n, seed, cutoff):
    rng = derive_rng(seed, "chain", model.name)

    def sample(r):
        return (sample_descriptor(model, r, allow_k=True),)

    def fails(t):
        (a,) = t
        chain = model.fg_cofinal_chain(a, cutoff)
        if a.finitely_generated and chain != [a]:
            return True
        if not a.is_k and not all(model.leq(j, a) for j in chain):
            return True
        return any(
            not model.leq(x, y) for x, y in zip(chain, chain[1:])
        )

    res = _run_sampled("models.fg-chain", model, None, n, rng, sample, fails)

    def fails_eq(t):
        (a,) = t
        b = sample_descriptor(model, rng)
        return (model.leq(a, b) and model.leq(b, a)) != (a == b)

    res2 = _run_sampled("models.eq-consistency", model, None, n, rng, sample, fails_eq)
    return [res, res2]


# -- operation-level laws -----------------------------------------------


def law_axioms(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rep = axiom_check(op, sample_size=n, seed=seed)
        for law in rep["laws"]:
            results.append(
                LawResult(
                    f"ops.axioms.{law['key']}",
                    model.name,
                    name,
                    law["checked"],
                    law["passed"],
                    0,
                    law["witness"],
                )
            )
    return results


def law_ft_idempotent(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rng = derive_rng(seed, "ftidem", model.name, name)
        opf = ft_of(op, cutoff)
        opff = ft_of(opf, cutoff)

        def sample(r):
            return (sample_descriptor(model, r, allow_k=True),)

        def fails(t):
            (e,) = t
            if closure(opff, e) != closure(opf, e):
                return True
            if e.finitely_generated and closure(opf, e) != closure(op, e):
                return True
            return not model.leq(closure(opf, e), closure(op, e))

        results.append(
            _run_sampled("ops.ft-idempotent", model, name, n, rng, sample, fails)
        )
    return results


def law_maximals(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        opf = ft_of(op, cutoff)
        tld = tilde_of(op, cutoff)
        mf = {s.name for s in quasi_spectrum(opf).quasi_maximals}
        mt = {s.name for s in quasi_spectrum(tld).quasi_maximals}
        ok = mf == mt
        results.append(
            LawResult(
                "ops.maximals-tilde-agree",
                model.name,
                name,
                1,
                int(ok),
                0,
                None if ok else f"ft:{sorted(mf)} tilde:{sorted(mt)}",
            )
        )
    return results


def law_spectral_stable(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        if not op.flags.stable:
            continue
        rng = derive_rng(seed, "stable", model.name, name)

        def sample(r):
            return (sample_descriptor(model, r), sample_descriptor(model, r))

        def fails(t):
            e, f = t
            return closure(op, model.intersect(e, f)) != model.intersect(
                closure(op, e), closure(op, f)
            )

        results.append(
            _run_sampled("ops.spectral-stable", model, name, n, rng, sample, fails)
        )
    return results


def _leq_pairs(model, ops, cutoff):
    """Comparable operation pairs (op1 <= op2) derivable by construction."""
    d = identity_operation(model)
    pairs = {}
    for name, op in ops.items():
        opf = ft_of(op, cutoff)
        tld = tilde_of(op, cutoff)
        pairs[(tld.name, opf.name)] = (tld, opf)
        pairs[(opf.name, op.name)] = (opf, op)
        pairs[(d.name, op.name)] = (d, op)
        pairs[(op.name, vstar_of(op).name)] = (op, vstar_of(op))
    return pairs


def law_leq_compose(model, ops, n, seed, cutoff):
    results = []
    for (n1, n2), (op1, op2) in _leq_pairs(model, ops, cutoff).items():
        rng = derive_rng(seed, "leqcomp", model.name, n1, n2)

        def sample(r):
            return (sample_descriptor(model, r, allow_k=True),)

        def fails(t):
            (e,) = t
            c1, c2 = closure(op1, e), closure(op2, e)
            if not model.leq(c1, c2):
                return True
            return closure(op2, c1) != c2 or closure(op1, c2) != c2

        results.append(
            _run_sampled("ops.leq-compose", model, f"{n1}<={n2}", n, rng, sample, fails)
        )
    return results


def law_quasi_max_cover(model, ops, n, seed, cutoff):
    results = []
    d = model.D()
    for name, op in ops.items():
        if not op.flags.finite_type:
            continue
        rng = derive_rng(seed, "qcover", model.name, name)
        maximals = quasi_spectrum(op).quasi_maximals

        def sample(r):
            return (model.intersect(sample_descriptor(model, r), d),)

        def fails(t):
            (i,) = t
            trace = model.intersect(closure(op, i), d)
            if trace == d:
                return False
            return not any(model.leq(trace, s.ideal) for s in maximals)

        results.append(
            _run_sampled("ops.quasi-max-cover", model, name, n, rng, sample, fails)
        )
    return results


# -- invertibility laws ---------------------------------------------------


def law_inv_monotone(model, ops, n, seed, cutoff):
    results = []
    for (n1, n2), (op1, op2) in _leq_pairs(model, ops, cutoff).items():
        rng = derive_rng(seed, "invmono", model.name, n1, n2)

        def sample(r):
            return (sample_fractional(model, r),)

        def fails(t):
            (i,) = t
            if is_star_invertible(op1, i) and not is_star_invertible(op2, i):
                return True
            return is_quasi_star_invertible(op1, i) and not is_quasi_star_invertible(op2, i)

        results.append(
            _run_sampled("inv.monotone", model, f"{n1}<={n2}", n, rng, sample, fails)
        )
    return results


def law_star_implies_quasi(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rng = derive_rng(seed, "staquasi", model.name, name)

        def sample(r):
            return (sample_fractional(model, r),)

        def fails(t):
            (i,) = t
            return is_star_invertible(op, i) and not is_quasi_star_invertible(op, i)

        results.append(
            _run_sampled("inv.star-implies-quasi", model, name, n, rng, sample, fails)
        )
    return results


def law_identity_suite(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rep = invertibility_identity_suite(op, samples=n, seed=seed)
        for law in rep["laws"]:
            results.append(
                LawResult(
                    law["law"],
                    model.name,
                    name,
                    law["applicable"],
                    law["passed"],
                    0,
                    law["witness"],
                )
            )
    return results


def law_strict_finite(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        if not op.flags.finite_type:
            continue
        rng = derive_rng(seed, "strictfin", model.name, name)

        def sample(r):
            return (sample_descriptor(model, r),)

        def fails(t):
            (i,) = t
            strict = strict_finite_witness(op, i, cutoff)
            plain = star_finite_witness(op, i)
            if (strict is None) != (plain is None):
                return True
            if strict is not None:
                if not (model.leq(strict, i) and closure(op, strict) == closure(op, i)):
                    return True
            return False

        results.append(
            _run_sampled("inv.strict-finite-equiv", model, name, n, rng, sample, fails)
        )
    return results


def law_witness_pair(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        if not op.flags.finite_type:
            continue
        rng = derive_rng(seed, "witpair", model.name, name)
        dstar = closure(op, model.D())

        def sample(r):
            return (sample_fractional(model, r),)

        def fails(t):
            (i,) = t
            pair = invertibility_witness(op, i)
            if pair is None:
                return is_star_invertible(op, i)
            i1, i2 = pair
            inv = model.colon(model.D(), i)
            return not (
                model.leq(i1, i)
                and model.leq(i2, inv)
                and i1.finitely_generated
                and i2.finitely_generated
                and closure(op, model.mul(i1, i2)) == dstar
                and closure(op, i1) == closure(op, i)
                and closure(op, i2) == closure(op, inv)
            )

        results.append(
            _run_sampled("inv.witness-pair", model, name, n, rng, sample, fails)
        )
    return results


def law_inv_iff_finite(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rng = derive_rng(seed, "inviff", model.name, name)

        def sample(r):
            return (sample_fractional(model, r),)

        def fails(t):
            return not check_invertible_implies_finite(op, t[0])["equivalent"]

        results.append(
            _run_sampled("inv.invertible-iff-finite", model, name, n, rng, sample, fails)
        )
    return results


def law_colon_criterion(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rng = derive_rng(seed, "coloncrit", model.name, name)

        def sample(r):
            return (sample_fractional(model, r),)

        def fails(t):
            rep = quasi_vs_star_bridge(op, t[0])
            return rep["applicable"] and not rep["pass"]

        results.append(
            _run_sampled("inv.colon-criterion", model, name, n, rng, sample, fails)
        )
    return results


def law_ft_tilde(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rng = derive_rng(seed, "fttilde", model.name, name)

        def sample(r):
            return (sample_descriptor(model, r),)

        def fails(t):
            return not star_f_tilde_bridge(op, t[0])["pass"]

        results.append(
            _run_sampled("inv.ft-tilde-bridge", model, name, n, rng, sample, fails)
        )
    return results


def law_theorem(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        if not op.flags.finite_type:
            continue
        rng = derive_rng(seed, "theorem", model.name, name)

        def sample(r):
            return (sample_fg_fractional(model, r),)

        def fails(t):
            (i,) = t
            rep = localization_criterion(op, i)
            if not rep["pass"]:
                return True
            return nagata_invertible(op, i) != rep["invertible"]

        results.append(
            _run_sampled("thm.local-global", model, name, n, rng, sample, fails)
        )
    return results


def law_groups(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        for carrier in ("QInvStar", "InvStar"):
            rep = group_check(op, carrier, samples=max(20, n // 2), seed=seed)
            ok = rep["pass"]
            results.append(
                LawResult(
                    f"inv.group-{carrier.lower()}",
                    model.name,
                    name,
                    rep["members"] or 1,
                    (rep["members"] or 1) if ok else 0,
                    0,
                    None if ok else str(rep["failures"][:1] or rep["identification"]),
                )
            )
    return results


def law_h_domain(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rep = h_domain_equivalence_suite(model, op, samples=n, seed=seed)
        results.append(
            LawResult(
                "inv.h-domain-equivalence",
                model.name,
                name,
                1,
                int(rep["equivalent"]),
                0,
                None if rep["equivalent"] else str(rep["conditions"]),
            )
        )
        defrep = h_domain_definition_check(model, op, samples=n, seed=seed)
        results.append(
            LawResult(
                "inv.h-domain-definition",
                model.name,
                name,
                max(1, defrep["applicable"]),
                max(1, defrep["applicable"]) if defrep["consistent"] else 0,
                0,
                defrep["witness"],
            )
        )
    return results


# -- nagata laws ----------------------------------------------------------


def law_nagata_set_invariance(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        rng = derive_rng(seed, "nset", model.name, name)
        opf = ft_of(op, cutoff)
        tld = tilde_of(op, cutoff)

        def sample(r):
            return (sample_polynomial(model, r),)

        def fails(t):
            (h,) = t
            a = in_nagata_multiplicative_set(op, h)
            return a != in_nagata_multiplicative_set(opf, h) or a != in_nagata_multiplicative_set(tld, h)

        passed = inconclusive = 0
        witness = None
        for _ in range(n):
            h = sample_polynomial(model, rng)
            try:
                bad = fails((h,))
            except (SearchExhausted, CutoffNotStabilized):
                inconclusive += 1
                continue
            if not bad:
                passed += 1
            elif witness is None:
                witness = repr(h)
        results.append(
            LawResult("nagata.set-invariance", model.name, name, n, passed, inconclusive, witness)
        )
    return results


def law_content_bridge(model, ops, n, seed, cutoff):
    results = []
    for name, op in ops.items():
        if not op.flags.finite_type:
            continue
        rng = derive_rng(seed, "cbridge", model.name, name)
        passed = 0
        witness = None
        for _ in range(n):
            h = sample_polynomial(model, rng)
            rep = content_invertible_bridge(op, h)
            if rep["pass"]:
                passed += 1
            elif witness is None:
                witness = repr(h)
        results.append(
            LawResult("nagata.content-bridge", model.name, name, n, passed, 0, witness)
        )
    return results


def law_saturation(model, ops, n, seed, cutoff):
    if not model.element_support:
        return []
    results = []
    for name, op in ops.items():
        rep = saturation_check(op, samples=n, seed=seed)
        results.append(
            LawResult(
                "nagata.saturation",
                model.name,
                name,
                rep["checked"],
                rep["passed"],
                0,
                rep["witness"],
            )
        )
    return results


def law_glue(model, ops, n, seed, cutoff):
    if not model.element_support:
        return []
    results = []
    for name, op in ops.items():
        if not op.flags.finite_type:
            continue
        rng = derive_rng(seed, "glue", model.name, name)
        checked = passed = 0
        witness = None
        for _ in range(n):
            gens = [sample_polynomial(model, rng) for _ in range(rng.randint(1, 3))]
            try:
                _, rep = glue_principal_generator(op, gens)
            except NotInvertibleExtension:
                continue
            checked += 1
            if rep["pass"]:
                passed += 1
            elif witness is None:
                witness = rep["glued"]
        results.append(
            LawResult("nagata.glue", model.name, name, checked, passed, 0, witness)
        )
    return results


LAWS = {
    "models.canonical": law_canonical,
    "models.ring": law_ring,
    "models.colon-adjunction": law_colon_adjunction,
    "models.localize": law_localize,
    "models.chain": law_flags_and_chain,
    "ops.axioms": law_axioms,
    "ops.ft-idempotent": law_ft_idempotent,
    "ops.maximals": law_maximals,
    "ops.spectral-stable": law_spectral_stable,
    "ops.leq-compose": law_leq_compose,
    "ops.quasi-max-cover": law_quasi_max_cover,
    "inv.monotone": law_inv_monotone,
    "inv.star-implies-quasi": law_star_implies_quasi,
    "inv.identity-suite": law_identity_suite,
    "inv.strict-finite": law_strict_finite,
    "inv.witness-pair": law_witness_pair,
    "inv.invertible-iff-finite": law_inv_iff_finite,
    "inv.colon-criterion": law_colon_criterion,
    "inv.ft-tilde": law_ft_tilde,
    "thm.local-global": law_theorem,
    "inv.groups": law_groups,
    "inv.h-domain": law_h_domain,
    "nagata.set-invariance": law_nagata_set_invariance,
    "nagata.content-bridge": law_content_bridge,
    "nagata.saturation": law_saturation,
    "nagata.glue": law_glue,
}


def run_property_suite(
    models,
    op_filter=None,
    n: int = 200,
    seed: int = 0,
    cutoff: int = 64,
    laws=None,
) -> list[LawResult]:
    """Run the selected laws over the models; deterministic for a seed."""
    if n < 1:
        raise ValueError("sample count must be >= 1")
    selected = LAWS if laws is None else {k: LAWS[k] for k in laws}
    results: list[LawResult] = []
    for model in models:
        ops = catalogue_ops(model)
        if op_filter:
            ops = {k: v for k, v in ops.items() if k in op_filter}
        for law_name in sorted(selected):
            results.extend(selected[law_name](model, ops, n, seed, cutoff))
    results.sort(key=lambda r: (r.law, r.model, r.op or ""))
    return results
