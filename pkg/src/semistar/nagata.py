"""Content ideals and the Nagata-ring statements, via localization.

The Nagata ring of (D, *) is D[T] localized at the polynomials whose
content ideal closes up to D*.  It is never materialized: membership in
the multiplicative set is decided through content ideals, and statements
about extended ideals are decided through the equivalent local
conditions at the quasi-maximal primes (the Nagata ring is the
intersection of the local rings D_Q(T) over those primes).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotFinitelyGenerated,
    NotFiniteType,
    NotInvertibleExtension,
    RawOutsideFamily,
)
from .models import (
    DomainModel,
    IdealDescriptor,
    SemigroupRingModel,
    SemilocalPidModel,
)
from .operations import SemistarOperation, closure, ft_of, quasi_spectrum, tilde_of
from .invertibility import is_quasi_star_invertible, is_star_invertible


@dataclass(frozen=True)
class ContentPolynomial:
    """Polynomial over the model in the auxiliary indeterminate T.

    Terms are (degree, coefficient) with degrees strictly increasing and
    no zero coefficients.  Coefficients are model elements where the
    model supports them (rationals for the semilocal PID, monomial sums
    for the semigroup ring) and value-level markers (principal
    descriptors) in the valuation-style models.
    """

    model: DomainModel
    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise RawOutsideFamily("polynomial must have at least one term")
        degs = [d for d, _ in self.terms]
        if any(d < 0 for d in degs) or sorted(set(degs)) != degs:
            raise RawOutsideFamily("degrees must be distinct, increasing, nonnegative")
        for _, c in self.terms:
            if isinstance(c, Fraction) and c == 0:
                raise RawOutsideFamily("zero coefficient")
            if isinstance(c, dict) and not c:
                raise RawOutsideFamily("zero coefficient")

    @property
    def degree(self) -> int:
        return self.terms[-1][0]

    def __repr__(self):
        parts = []
        for d, c in self.terms:
            cs = _format_coeff(self.model, c)
            if d == 0:
                parts.append(cs)
            else:
                power = "T" if d == 1 else f"T^{d}"
                parts.append(f"{cs}*{power}" if cs != "1" else power)
        return " + ".join(parts)


def _format_coeff(model, c) -> str:
    if isinstance(c, IdealDescriptor):
        return f"val[{c!r}]"
    if isinstance(c, dict):
        return "(" + model.format_element(c) + ")"
    return str(c)


def _coeff_principal(model, c) -> IdealDescriptor:
    """Principal descriptor of a coefficient."""
    if isinstance(c, IdealDescriptor):
        if not model.is_principal(c):
            raise RawOutsideFamily(f"marker coefficient {c!r} is not principal")
        return c
    if isinstance(model, SemilocalPidModel):
        return model.element_principal(c)
    if isinstance(model, SemigroupRingModel):
        return model.element_principal(c)
    raise RawOutsideFamily(f"{model.name} has no element-level coefficients")


def _coeff_integral(model, c) -> bool:
    if isinstance(c, IdealDescriptor):
        return model.leq(c, model.D())
    if isinstance(model, SemilocalPidModel):
        return model.element_is_integral(c)
    if isinstance(model, SemigroupRingModel):
        return model.element_is_integral(c)
    return False


def _coeff_in_ideal(model, c, ideal: IdealDescriptor) -> bool:
    if isinstance(c, IdealDescriptor):
        return model.leq(c, ideal)
    return model.element_in_ideal(c, ideal)


def content(h: ContentPolynomial) -> IdealDescriptor:
    """The ideal generated by the coefficients (join of their principal
    descriptors); unit scaling of coefficients does not change it."""
    model = h.model
    out = None
    for _, c in h.terms:
        p = _coeff_principal(model, c)
        out = p if out is None else model.add(out, p)
    return out


def is_integral(h: ContentPolynomial) -> bool:
    return all(_coeff_integral(h.model, c) for _, c in h.terms)


def polynomial_mul(g: ContentPolynomial, h: ContentPolynomial) -> ContentPolynomial:
    """Exact product; needs element-level coefficients."""
    model = g.model
    if not model.element_support:
        raise RawOutsideFamily(f"{model.name} cannot expand polynomial products")
    acc: dict[int, object] = {}
    for dg, cg in g.terms:
        for dh, ch in h.terms:
            if isinstance(model, SemilocalPidModel):
                prod = cg * ch
            else:
                prod = model.element_mul(cg, ch)
            d = dg + dh
            if d in acc:
                if isinstance(model, SemilocalPidModel):
                    acc[d] = acc[d] + prod
                else:
                    merged = dict(acc[d])
                    for e, v in prod.items():
                        merged[e] = merged.get(e, Fraction(0)) + v
                    acc[d] = {e: v for e, v in merged.items() if v}
            else:
                acc[d] = prod
    terms = tuple(
        (d, c)
        for d, c in sorted(acc.items())
        if (c != 0 if isinstance(c, Fraction) else bool(c))
    )
    return ContentPolynomial(model, terms)


def in_nagata_multiplicative_set(op: SemistarOperation, h: ContentPolynomial) -> bool:
    """h != 0 with (c(h))^* = D^*.

    Computed through the content descriptor when the coefficients stay
    inside the family; otherwise through the equivalent finite-type
    characterization: h avoids Q[T] for every quasi-maximal Q.
    """
    model = op.model
    if not is_integral(h):
        raise RawOutsideFamily("polynomial must have integral coefficients")
    try:
        c = content(h)
    except RawOutsideFamily:
        maximals = quasi_spectrum(ft_of(op)).quasi_maximals
        return not any(
            all(_coeff_in_ideal(model, cf, site.ideal) for _, cf in h.terms)
            for site in maximals
        )
    return closure(op, c) == closure(op, model.D())


def saturation_check(op: SemistarOperation, samples: int = 200, seed: int = 0) -> dict:
    """Multiplicativity and saturation in one biconditional:
    gh is in the set iff both g and h are."""
    from .sampling import derive_rng, sample_polynomial

    model = op.model
    if not model.element_support:
        raise RawOutsideFamily(f"{model.name} has no element support")
    rng = derive_rng(seed, "saturation", model.name, op.name)
    checked = passed = 0
    witness = None
    for _ in range(samples):
        g = sample_polynomial(model, rng)
        h = sample_polynomial(model, rng)
        gh = polynomial_mul(g, h)
        checked += 1
        ok = in_nagata_multiplicative_set(op, gh) == (
            in_nagata_multiplicative_set(op, g) and in_nagata_multiplicative_set(op, h)
        )
        if ok:
            passed += 1
        elif witness is None:
            witness = f"g={g!r}, h={h!r}"
    return {
        "op": op.name,
        "model": model.name,
        "seed": seed,
        "checked": checked,
        "passed": passed,
        "witness": witness,
        "pass": checked == passed,
    }


@dataclass(frozen=True)
class NagataIdealRef:
    """The extended ideal base * Na(D, op), represented virtually."""

    op: SemistarOperation
    base: IdealDescriptor


def nagata_refs_equal(a: NagataIdealRef, b: NagataIdealRef) -> bool:
    """Extensions agree iff the stable closures of the bases agree
    (the Nagata ring of op and of its stable closure coincide)."""
    if a.op is not b.op:
        return False
    tld = tilde_of(a.op)
    return closure(tld, a.base) == closure(tld, b.base)


def nagata_invertible(op: SemistarOperation, base: IdealDescriptor) -> bool:
    """Whether base * Na(D, op) is invertible, via the local reduction:
    the extension is invertible iff the base is principal in D_Q for
    every quasi-maximal Q."""
    if not op.flags.finite_type:
        raise NotFiniteType(f"{op.name} is not of finite type")
    if not base.finitely_generated:
        raise NotFinitelyGenerated(f"{base!r} is not finitely generated")
    for site in quasi_spectrum(op).quasi_maximals:
        if not site.localized_model.is_principal(site.localize(base)):
            return False
    return True


def content_invertible_bridge(op: SemistarOperation, h: ContentPolynomial) -> dict:
    """c(h) is star-invertible iff h and c(h) generate the same extended
    ideal; the right side is decided by local principality of the
    content.  In particular invertibility and quasi-invertibility of
    c(h) agree."""
    if not op.flags.finite_type:
        raise NotFiniteType(f"{op.name} is not of finite type")
    model = op.model
    if not is_integral(h):
        raise RawOutsideFamily("polynomial must have integral coefficients")
    c = content(h)
    left = is_star_invertible(op, c)
    local = {}
    for site in quasi_spectrum(op).quasi_maximals:
        local[site.name] = site.localized_model.is_principal(site.localize(c))
    right = all(local.values())
    quasi = is_quasi_star_invertible(op, c)
    # the invertible<->quasi clause holds through the stable finite-type
    # (or proper) machinery; outside it the two notions can differ
    clause_applies = op.flags.semistar_proper or (
        op.flags.stable and c.finitely_generated
    )
    report = {
        "op": op.name,
        "polynomial": repr(h),
        "content": repr(c),
        "contentInvertible": left,
        "extensionPrincipalLocally": local,
        "extensionsAgree": right,
        "biconditional": left == right,
        "quasiInvertible": quasi,
        "quasiClauseApplies": clause_applies,
        "invertibleIffQuasi": left == quasi if clause_applies else None,
    }
    report["pass"] = report["biconditional"] and (
        not clause_applies or left == quasi
    )
    return report


def glue_principal_generator(op: SemistarOperation, gens) -> tuple[ContentPolynomial, dict]:
    """Single generator for an invertible extended ideal.

    Given h_1,...,h_n with invertible content-sum extension, returns
    h = h_1 + h_2 T^{d_1+1} + h_3 T^{d_1+d_2+2} + ... and verifies, at
    every quasi-maximal Q, that the content of h equals the content sum
    locally and is generated by the coefficient of minimal value.
    """
    if not op.flags.finite_type:
        raise NotFiniteType(f"{op.name} is not of finite type")
    gens = list(gens)
    if not gens:
        raise NotInvertibleExtension("empty generator list")
    model = op.model
    csum = None
    for g in gens:
        cg = content(g)
        csum = cg if csum is None else model.add(csum, cg)
    if not csum.finitely_generated or not nagata_invertible(op, csum):
        raise NotInvertibleExtension(
            f"extension of {csum!r} is not invertible in the Nagata ring"
        )

    terms = []
    offset = 0
    for idx, g in enumerate(gens):
        for d, c in g.terms:
            terms.append((d + offset, c))
        offset += g.degree + 1
    glued = ContentPolynomial(model, tuple(terms))
    c_glued = content(glued)

    local = {}
    for site in quasi_spectrum(op).quasi_maximals:
        sub = site.localized_model
        loc_glued = site.localize(c_glued)
        loc_sum = site.localize(csum)
        principals = [
            site.localize(_coeff_principal(model, c)) for _, c in glued.terms
        ]
        # one coefficient of minimal value must generate the local content
        generated = any(p == loc_glued for p in principals)
        local[site.name] = (
            loc_glued == loc_sum and sub.is_principal(loc_glued) and generated
        )
    report = {
        "op": op.name,
        "glued": repr(glued),
        "content": repr(c_glued),
        "contentSum": repr(csum),
        "localChecks": local,
        "pass": all(local.values()),
    }
    return glued, report
