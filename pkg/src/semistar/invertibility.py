"""Invertibility decision procedures and executable law checkers.

Two notions are decided exactly on descriptors:

* I is *star-invertible*       when (I*(D:I))^*  = D^*,
* I is *quasi-star-invertible* when (I*(D*:I))^* = D^*.

Star-invertibility always implies the quasi notion, since (D:I) is
contained in (D*:I); the converse can fail (the rank-2 and PVD fixtures
witness the gap).  Finiteness witnesses are decided, not searched: every
family-f.g. descriptor of the valuation-style models is principal, so
closure targets are reachable iff a principal shift exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    NotClosed,
    NotFiniteType,
    NotFractional,
    SearchExhausted,
)
from .models import ZERO, DomainModel, IdealDescriptor, PrimeSite
from .operations import (
    SemistarOperation,
    closure,
    ft_of,
    identity_operation,
    quasi_spectrum,
    tilde_of,
    v_operation,
    vstar_of,
)
from .sampling import (
    derive_rng,
    sample_descriptor,
    sample_fg_fractional,
    sample_fractional,
)


def _d_star(op: SemistarOperation) -> IdealDescriptor:
    return closure(op, op.model.D())


def is_star_invertible(op: SemistarOperation, ideal: IdealDescriptor) -> bool:
    """(I*(D:I))^* = D^*; requires a fractional ideal."""
    if not ideal.fractional:
        raise NotFractional(f"{ideal!r} is not fractional")
    model = op.model
    inv = model.colon(model.D(), ideal)
    if inv is ZERO:
        raise NotFractional(f"{ideal!r} has zero inverse")
    return closure(op, model.mul(ideal, inv)) == _d_star(op)


def quasi_inverse_or_zero(op: SemistarOperation, ideal: IdealDescriptor):
    return op.model.colon(_d_star(op), ideal)


def is_quasi_star_invertible(op: SemistarOperation, ideal: IdealDescriptor) -> bool:
    """(I*(D*:I))^* = D^*; defined for every nonzero submodule."""
    h = quasi_inverse_or_zero(op, ideal)
    if h is ZERO:
        return False
    return closure(op, op.model.mul(ideal, h)) == _d_star(op)


def quasi_invertibility_witness(op: SemistarOperation, ideal: IdealDescriptor):
    """H with (IH)^* = D^* when one exists ((D*:I) is then such an H)."""
    h = quasi_inverse_or_zero(op, ideal)
    if h is ZERO:
        return None
    return h if closure(op, op.model.mul(ideal, h)) == _d_star(op) else None


# -- finiteness --------------------------------------------------------


def star_finite_witness(op: SemistarOperation, ideal: IdealDescriptor):
    """Some f.g. J with J^* = I^*, or None when no family witness exists.

    For f.g. I the witness is I itself.  Otherwise only the valuation
    style models carry non-f.g. descriptors, and there every family-f.g.
    descriptor is a principal shift of D, so existence reduces to the
    solvable equation x*(D^*) = I^*.
    """
    if ideal.is_k:
        return None
    if ideal.finitely_generated:
        return ideal
    model = op.model
    target = closure(op, ideal)
    if target.is_k:
        return None
    x = model.shift_between(_d_star(op), target)
    if x is None:
        return None
    return model.scale(model.D(), x)


def strict_finite_witness(op: SemistarOperation, ideal: IdealDescriptor, cutoff: int = 64):
    """Some f.g. J <= I with J^* = I^*, or None (decided, not searched)."""
    if ideal.is_k:
        return None
    if ideal.finitely_generated:
        return ideal
    model = op.model
    target = closure(op, ideal)
    for j in model.fg_cofinal_chain(ideal, cutoff):
        if closure(op, j) == target:
            return j
    if target.is_k:
        return None
    x = model.shift_between(_d_star(op), target)
    if x is not None:
        j = model.scale(model.D(), x)
        if model.leq(j, ideal) and closure(op, j) == target:
            return j
    return None


def invertibility_witness(op: SemistarOperation, ideal: IdealDescriptor):
    """(I', I'') with I' <= I, I'' <= (D:I), both f.g., (I'I'')^* = D^*.

    Exists exactly when I is invertible under the finite-type operation;
    moreover I'^* = I^* and I''^* = ((D:I))^*.
    """
    if not op.flags.finite_type:
        raise NotFiniteType(f"{op.name} is not of finite type")
    if not ideal.fractional:
        raise NotFractional(f"{ideal!r} is not fractional")
    if not is_star_invertible(op, ideal):
        return None
    model = op.model
    inv = model.colon(model.D(), ideal)
    i1 = strict_finite_witness(op, ideal)
    i2 = strict_finite_witness(op, inv)
    if i1 is None or i2 is None:
        raise SearchExhausted("no strict finiteness witnesses in the family")
    if closure(op, model.mul(i1, i2)) != _d_star(op):
        raise SearchExhausted("witness product check failed")
    return i1, i2


@dataclass
class InvertibilityVerdict:
    subject: IdealDescriptor
    op: SemistarOperation
    star_invertible: bool
    quasi_star_invertible: bool
    star_finite_witness: IdealDescriptor | None
    strict_witness: IdealDescriptor | None
    decomposition: tuple | None
    local_principal: dict[str, bool] = field(default_factory=dict)

    def as_dict(self):
        fmt = lambda d: None if d is None else repr(d)
        return {
            "subject": repr(self.subject),
            "op": self.op.name,
            "starInvertible": self.star_invertible,
            "quasiStarInvertible": self.quasi_star_invertible,
            "starFiniteWitness": fmt(self.star_finite_witness),
            "strictWitness": fmt(self.strict_witness),
            "decomposition": None
            if self.decomposition is None
            else [repr(x) for x in self.decomposition],
            "localPrincipal": dict(self.local_principal),
        }


def invertibility_verdict(op: SemistarOperation, ideal: IdealDescriptor) -> InvertibilityVerdict:
    model = op.model
    star = is_star_invertible(op, ideal) if ideal.fractional else False
    quasi = is_quasi_star_invertible(op, ideal)
    witness = star_finite_witness(op, ideal)
    strict = strict_finite_witness(op, ideal)
    decomposition = None
    if star and op.flags.finite_type:
        try:
            decomposition = invertibility_witness(op, ideal)
        except SearchExhausted:
            decomposition = None
    local = {}
    if op.flags.finite_type:
        try:
            for site in quasi_spectrum(op).quasi_maximals:
                loc = site.localize(ideal)
                local[site.name] = site.localized_model.is_principal(loc)
        except Exception:
            local = {}
    verdict = InvertibilityVerdict(
        ideal, op, star, quasi, witness, strict, decomposition, local
    )
    if star and not quasi:
        raise AssertionError("star-invertible but not quasi-invertible: impossible")
    if strict is not None and witness is None:
        raise AssertionError("strict witness without a plain witness: impossible")
    return verdict


# -- section-level law checkers ----------------------------------------


def check_invertible_implies_finite(op: SemistarOperation, ideal: IdealDescriptor) -> dict:
    """I is ft-invertible iff I and (D:I) are ft-finite and I is op-invertible."""
    model = op.model
    opf = ft_of(op)
    lhs = is_star_invertible(opf, ideal)
    w_i = star_finite_witness(opf, ideal)
    inv = model.colon(model.D(), ideal)
    w_inv = star_finite_witness(opf, inv) if inv is not ZERO else None
    star = is_star_invertible(op, ideal)
    rhs = w_i is not None and w_inv is not None and star
    return {
        "subject": repr(ideal),
        "op": op.name,
        "ftInvertible": lhs,
        "ftFiniteWitness": None if w_i is None else repr(w_i),
        "inverseFtFiniteWitness": None if w_inv is None else repr(w_inv),
        "starInvertible": star,
        "equivalent": lhs == rhs,
    }


def is_h_star_domain(model: DomainModel, op: SemistarOperation) -> bool:
    """Exact test: every quasi-ft-maximal is a quasi-ideal of op."""
    d = model.D()
    spec = quasi_spectrum(ft_of(op))
    return all(
        model.intersect(closure(op, q.ideal), d) == q.ideal
        for q in spec.quasi_maximals
    )


def h_domain_definition_check(model, op, samples: int = 100, seed: int = 0) -> dict:
    """Sampled cross-check against the defining property.

    In an H(*)-domain every integral I with I^* = D^* contains a
    family-f.g. J with J^* = D^*; a counterexample among the samples
    contradicts a positive exact verdict.
    """
    rng = derive_rng(seed, "h_domain_def", model.name, op.name)
    verdict = is_h_star_domain(model, op)
    dstar = _d_star(op)
    applicable = 0
    witness = None
    for _ in range(samples):
        i = model.intersect(sample_descriptor(model, rng), model.D())
        if closure(op, i) != dstar:
            continue
        applicable += 1
        j = strict_finite_witness(op, i)
        has = j is not None and closure(op, j) == dstar
        if verdict and not has and witness is None:
            witness = repr(i)
    return {
        "verdict": verdict,
        "applicable": applicable,
        "witness": witness,
        "consistent": witness is None,
    }


def h_domain_equivalence_suite(model: DomainModel, op: SemistarOperation, samples: int = 200, seed: int = 0) -> dict:
    """The four equivalent H(*)-domain conditions; exact where the prime
    lists decide them, sampled for the invertibility transfer."""
    opf = ft_of(op)
    tld = tilde_of(op)
    cond_i = is_h_star_domain(model, op)
    m_f = tuple(s.ideal for s in quasi_spectrum(opf).quasi_maximals)
    m_op = tuple(s.ideal for s in quasi_spectrum(op).quasi_maximals)
    m_t = tuple(s.ideal for s in quasi_spectrum(tld).quasi_maximals)
    cond_iii = set(m_f) == set(m_op)
    cond_iv = set(m_t) == set(m_op)

    rng = derive_rng(seed, "h_equiv", model.name, op.name)
    cond_ii = True
    witness = None
    canonical = [s.ideal for s in model.primes if s.ideal.fractional]
    for i in canonical + [sample_fractional(model, rng) for _ in range(samples)]:
        if is_star_invertible(op, i) != is_star_invertible(opf, i):
            cond_ii = False
            witness = i
            break
    values = {"i": cond_i, "ii": cond_ii, "iii": cond_iii, "iv": cond_iv}
    return {
        "model": model.name,
        "op": op.name,
        "conditions": values,
        "equivalent": len(set(values.values())) == 1,
        "witness": None if witness is None else repr(witness),
    }


def quasi_vs_star_bridge(op: SemistarOperation, ideal: IdealDescriptor) -> dict:
    """For quasi-invertible fractional I:  I invertible iff (D:I)^* = (D*:I)."""
    model = op.model
    if not ideal.fractional:
        raise NotFractional(f"{ideal!r} is not fractional")
    quasi = is_quasi_star_invertible(op, ideal)
    report = {"subject": repr(ideal), "op": op.name, "quasiInvertible": quasi}
    if not quasi:
        report["applicable"] = False
        return report
    report["applicable"] = True
    star = is_star_invertible(op, ideal)
    lhs = closure(op, model.colon(model.D(), ideal))
    rhs = model.colon(_d_star(op), ideal)
    criterion = lhs == rhs
    report["starInvertible"] = star
    report["colonCriterion"] = criterion
    report["bridgeHolds"] = star == criterion
    if op.flags.semistar_proper:
        report["properCase"] = {"applies": True, "coincide": star == quasi}
    else:
        report["properCase"] = {"applies": False}
    if op.flags.stable and ideal.finitely_generated:
        report["stableFgCase"] = {"applies": True, "coincide": star == quasi}
    else:
        report["stableFgCase"] = {"applies": False}
    ok = report["bridgeHolds"]
    for case in (report["properCase"], report["stableFgCase"]):
        if case["applies"]:
            ok = ok and case["coincide"]
    report["pass"] = ok
    return report


def star_f_tilde_bridge(op: SemistarOperation, ideal: IdealDescriptor) -> dict:
    """ft-invertibility agrees with tilde-invertibility; the quasi version
    needs D^* = D^tilde, and without it the PVD-style gap is expected."""
    opf = ft_of(op)
    tld = tilde_of(op)
    report = {"subject": repr(ideal), "op": op.name}
    if ideal.fractional:
        a = is_star_invertible(opf, ideal)
        b = is_star_invertible(tld, ideal)
        report["ftInvertible"] = a
        report["tildeInvertible"] = b
        report["invertibleAgree"] = a == b
    hyp = _d_star(op) == _d_star(tld)
    report["hypothesisDstarEqual"] = hyp
    qa = is_quasi_star_invertible(opf, ideal)
    qb = is_quasi_star_invertible(tld, ideal)
    report["quasiFt"] = qa
    report["quasiTilde"] = qb
    if hyp:
        report["quasiAgree"] = qa == qb
        report["pass"] = report.get("invertibleAgree", True) and qa == qb
    else:
        # without the hypothesis only tilde => ft survives
        report["quasiOneWay"] = (not qb) or qa
        report["gapWitnessed"] = qa and not qb
        report["pass"] = report.get("invertibleAgree", True) and report["quasiOneWay"]
    return report


def localization_criterion(op: SemistarOperation, ideal: IdealDescriptor) -> dict:
    """Invertibility against quasi-maximal localizations and the colon test.

    For f.g. fractional I the three are equivalent; for the rest,
    invertibility still matches the colon criterion and implies local
    principality, which may hold strictly more often.
    """
    if not op.flags.finite_type:
        raise NotFiniteType(f"{op.name} is not of finite type")
    model = op.model
    if not ideal.fractional:
        raise NotFractional(f"{ideal!r} is not fractional")
    maximals = quasi_spectrum(op).quasi_maximals
    a = is_star_invertible(op, ideal)
    local = {}
    for site in maximals:
        loc = site.localize(ideal)
        local[site.name] = site.localized_model.is_principal(loc)
    b = all(local.values())
    d_inv = model.colon(model.D(), ideal)
    colon_strict = {}
    for site in maximals:
        qi = model.colon(site.ideal, ideal)
        if qi is ZERO:
            colon_strict[site.name] = d_inv is not ZERO
        else:
            colon_strict[site.name] = model.leq(qi, d_inv) and qi != d_inv
    c = all(colon_strict.values())
    report = {
        "subject": repr(ideal),
        "op": op.name,
        "invertible": a,
        "localPrincipal": local,
        "colonStrict": colon_strict,
        "finitelyGenerated": ideal.finitely_generated,
    }
    if ideal.finitely_generated:
        report["equivalent"] = a == b == c
        report["pass"] = report["equivalent"]
    else:
        report["invertibleIffColon"] = a == c
        report["invertibleImpliesLocal"] = (not a) or b
        report["pass"] = report["invertibleIffColon"] and report["invertibleImpliesLocal"]
    return report


# -- the semistar composition groups -----------------------------------


def semistar_product(op: SemistarOperation, a: IdealDescriptor, b: IdealDescriptor) -> IdealDescriptor:
    """I x J := (IJ)^* on star-closed members."""
    if closure(op, a) != a:
        raise NotClosed(f"{a!r} is not {op.name}-closed")
    if closure(op, b) != b:
        raise NotClosed(f"{b!r} is not {op.name}-closed")
    return closure(op, op.model.mul(a, b))


def quasi_inverse(op: SemistarOperation, a: IdealDescriptor) -> IdealDescriptor:
    """(D*:I), the unique inverse inside the quasi-invertible group."""
    h = op.model.colon(_d_star(op), a)
    if h is ZERO:
        raise NotFractional(f"{a!r} has zero quasi-inverse")
    return h


def group_check(op: SemistarOperation, carrier: str, samples: int = 100, seed: int = 0) -> dict:
    """Group laws on star-closed (quasi-)invertible members.

    carrier "QInvStar": always a group (identity D^*, inverse (D*:I)).
    carrier "InvStar": a group iff (D:D^*) is nonzero.
    The quasi group is also matched against the invertible star-ideals
    of D^* through the induced operation when D^* has a catalogue model.
    """
    if carrier not in ("QInvStar", "InvStar"):
        raise ValueError("carrier must be QInvStar or InvStar")
    model = op.model
    rng = derive_rng(seed, "group", model.name, op.name, carrier)
    dstar = _d_star(op)
    report: dict = {"op": op.name, "carrier": carrier, "seed": seed}

    if carrier == "InvStar":
        criterion = model.colon(model.D(), dstar) is not ZERO
        report["groupCriterion"] = criterion
        report["criterionColon"] = repr(model.colon(model.D(), dstar))

    members = []
    tries = 0
    while len(members) < samples and tries < samples * 30:
        tries += 1
        e = sample_descriptor(model, rng)
        i = closure(op, e)
        if i.is_k:
            continue
        if carrier == "QInvStar":
            if is_quasi_star_invertible(op, i):
                members.append(i)
        else:
            if i.fractional and is_star_invertible(op, i):
                members.append(i)
    report["members"] = len(members)

    failures = []
    for idx, i in enumerate(members):
        if semistar_product(op, i, dstar) != i:
            failures.append(("identity", repr(i)))
        inv = quasi_inverse(op, i)
        if semistar_product(op, i, inv) != dstar:
            failures.append(("inverse", repr(i)))
        if carrier == "QInvStar" and not is_quasi_star_invertible(op, inv):
            failures.append(("inverse-in-carrier", repr(i)))
        j = members[(idx * 7 + 1) % len(members)]
        l = members[(idx * 13 + 2) % len(members)]
        lhs = semistar_product(op, semistar_product(op, i, j), l)
        rhs = semistar_product(op, i, semistar_product(op, j, l))
        if lhs != rhs:
            failures.append(("associativity", f"{i!r},{j!r},{l!r}"))

    identification = {"applies": False}
    if carrier == "QInvStar":
        try:
            from .operations import induced_on_overring

            op_i = induced_on_overring(op, dstar)
            sub, embed, project = model.overring_model(dstar)
            ident_fail = None
            for idx, i in enumerate(members):
                phi = project(i)
                if closure(op_i, phi) != phi or not is_star_invertible(op_i, phi):
                    ident_fail = repr(i)
                    break
                j = members[(idx * 5 + 3) % len(members)]
                if project(semistar_product(op, i, j)) != semistar_product(op_i, phi, project(j)):
                    ident_fail = f"{i!r} x {j!r}"
                    break
            identification = {"applies": True, "pass": ident_fail is None, "witness": ident_fail}
        except Exception as exc:  # overring without a catalogue model
            identification = {"applies": False, "reason": str(exc)}
    report["identification"] = identification

    report["failures"] = failures
    ok = not failures and (identification.get("pass", True) is not False)
    report["pass"] = ok
    return report


# -- the identity-law battery -------------------------------------------


def invertibility_identity_suite(op: SemistarOperation, samples: int = 200, seed: int = 0) -> dict:
    """Named algebraic laws of (quasi-)invertible modules, checked on
    seeded samples.  Each law counts the instances whose hypotheses held
    and must have zero failures; the first failing instance is recorded.
    """
    model = op.model
    rng = derive_rng(seed, "identity_suite", model.name, op.name)
    d = model.D()
    dstar = _d_star(op)
    vst = vstar_of(op)
    vop = v_operation(model)

    laws: dict[str, dict] = {}

    def tally(name, applicable, ok, witness):
        entry = laws.setdefault(
            name, {"law": name, "applicable": 0, "passed": 0, "witness": None}
        )
        if not applicable:
            return
        entry["applicable"] += 1
        if ok:
            entry["passed"] += 1
        elif entry["witness"] is None:
            entry["witness"] = witness

    def star(i):
        return i.fractional and is_star_invertible(op, i)

    def quasi(i):
        return is_quasi_star_invertible(op, i)

    # constants
    tally("inv.unit", True, is_star_invertible(op, d), "D")
    tally("qinv.unit", True, is_quasi_star_invertible(op, dstar), "D*")

    for _ in range(samples):
        i = sample_descriptor(model, rng)
        j = sample_descriptor(model, rng)
        fi = sample_fractional(model, rng)
        fj = sample_fractional(model, rng)
        w = f"I={i!r}, J={j!r}"
        fw = f"I={fi!r}, J={fj!r}"

        # products (both directions)
        si, sj = star(fi), star(fj)
        tally("inv.product", True, (si and sj) == star(model.mul(fi, fj)), fw)
        qi_, qj_ = quasi(i), quasi(j)
        tally("qinv.product", True, (qi_ and qj_) == quasi(model.mul(i, j)), w)

        # inverses stay invertible
        if si:
            inv = model.colon(d, fi)
            tally("inv.inverse-closed", True, star(inv), fw)
            tally("inv.v-closed", True, star(closure(vop, fi)), fw)
            tally("inv.v-image", True, is_star_invertible(vst, fi)
                  and closure(op, fi) == closure(vst, fi), fw)
        if qi_:
            qinv = model.colon(dstar, i)
            tally("qinv.inverse-closed", True, quasi(qinv), w)
            tally("qinv.v-image-closed", True, quasi(closure(vst, i)), w)
            # quasi-invertibles are also quasi-invertible for v(D*),
            # with the same closure
            tally(
                "qinv.v-image-agrees",
                True,
                is_quasi_star_invertible(vst, i) and closure(op, i) == closure(vst, i),
                w,
            )

        # inverse uniqueness: (IH')* = D* = (IH'') forces H'* = H''* = (D*:I)
        if qi_:
            h1 = model.colon(dstar, i)
            candidates = [h1]
            if i.fractional:
                candidates.append(model.colon(d, i))
            for h2 in candidates:
                if h2 is ZERO:
                    continue
                hyp = closure(op, model.mul(i, h2)) == dstar
                concl = (
                    closure(op, h2) == closure(op, h1)
                    and closure(op, h1) == h1
                    and h1 == model.colon(dstar, i)
                )
                tally("qinv.inverse-unique", hyp, concl, f"I={i!r}, H={h2!r}")
        if si:
            h1 = model.colon(d, fi)
            target = closure(op, h1)
            for h2 in (h1, model.colon(dstar, fi)):
                if h2 is ZERO:
                    continue
                hyp = closure(op, model.mul(fi, h2)) == dstar
                tally("inv.inverse-unique", hyp, closure(op, h2) == target, f"I={fi!r}, H={h2!r}")

        # cancellation: I quasi-invertible, IJ <= IL  =>  J* <= L*
        big = model.add(j, sample_descriptor(model, rng))
        if qi_:
            hyp = model.leq(model.mul(i, j), model.mul(i, big))
            tally(
                "qinv.cancel",
                hyp,
                model.leq(closure(op, j), closure(op, big)),
                f"I={i!r}, J={j!r}, L={big!r}",
            )
        if si:
            hyp = model.leq(model.mul(fi, j), model.mul(fi, big))
            tally(
                "inv.cancel",
                hyp,
                model.leq(closure(op, j), closure(op, big)),
                f"I={fi!r}, J={j!r}, L={big!r}",
            )

        # interpolation: J <= I*  =>  (IL)* = J* for L = (D*:I)J
        if qi_:
            sub = model.intersect(j, closure(op, i))
            l = model.mul(model.colon(dstar, i), sub)
            tally(
                "qinv.interpolate",
                True,
                closure(op, model.mul(i, l)) == closure(op, sub),
                f"I={i!r}, J={sub!r}",
            )
            # membership transfer: (IL)* = J* with I, J quasi => L quasi
            if qj_:
                l2 = model.mul(model.colon(dstar, i), j)
                hyp = closure(op, model.mul(i, l2)) == closure(op, j)
                tally("qinv.transfer", hyp, quasi(l2), f"I={i!r}, J={j!r}")
        if si:
            sub = model.intersect(fj, closure(op, fi))
            l = model.mul(model.colon(d, fi), sub)
            tally(
                "inv.interpolate",
                True,
                closure(op, model.mul(fi, l)) == closure(op, sub),
                f"I={fi!r}, J={sub!r}",
            )
            if sj:
                l2 = model.mul(model.colon(d, fi), fj)
                hyp = closure(op, model.mul(fi, l2)) == closure(op, fj)
                concl = True
                if hyp:
                    concl = quasi(l2)
                    rhs = closure(op, model.mul(fi, model.colon(d, fj)))
                    concl = concl and model.colon(dstar, l2) == rhs
                    note = l2.fractional and is_star_invertible(op, l2)
                    crit = closure(op, model.colon(d, l2)) == rhs
                    concl = concl and note == crit
                tally("inv.transfer", hyp, concl, f"I={fi!r}, J={fj!r}")

        # colon of a product
        if qi_ and qj_:
            lhs = model.colon(dstar, model.mul(i, j))
            rhs = closure(op, model.mul(model.colon(dstar, i), model.colon(dstar, j)))
            tally(
                "qinv.colon-product",
                True,
                lhs == rhs and closure(op, lhs) == lhs,
                w,
            )
        if si and sj:
            lhs = closure(op, model.colon(d, model.mul(fi, fj)))
            rhs = closure(op, model.mul(model.colon(d, fi), model.colon(d, fj)))
            tally("inv.colon-product", True, lhs == rhs, fw)

        # common submodule: z*IJ lands below both closures
        if qi_ and qj_:
            zsrc = model.colon(dstar, model.add(i, j))
            if zsrc is not ZERO:
                l = model.mul(model.a_principal_subideal(zsrc), model.mul(i, j))
                tally(
                    "qinv.common-sub",
                    True,
                    quasi(l)
                    and model.leq(l, closure(op, i))
                    and model.leq(l, closure(op, j)),
                    w,
                )
        if si and sj:
            zsrc = model.colon(d, model.add(fi, fj))
            if zsrc is not ZERO:
                l = model.mul(model.a_principal_subideal(zsrc), model.mul(fi, fj))
                tally(
                    "inv.common-sub",
                    True,
                    star(l) and model.leq(l, fi) and model.leq(l, fj),
                    fw,
                )

        # meet and join: quasi versions run through v(D*), the star
        # versions through the divisorial closure at the level of D
        if qi_ and qj_:
            meet = model.intersect(closure(vst, i), closure(vst, j))
            if quasi(model.add(i, j)):
                tally("qinv.meet", True, quasi(meet), w)
            if quasi(meet):
                tally("qinv.join", True, is_quasi_star_invertible(vst, model.add(i, j)), w)
        if si and sj and is_star_invertible(vop, fi) and is_star_invertible(vop, fj):
            meet = model.intersect(closure(vop, fi), closure(vop, fj))
            s_sum = model.add(fi, fj)
            if star(s_sum):
                tally("inv.meet", True, star(meet), fw)
            if star(meet):
                tally("inv.join", True, is_star_invertible(vop, s_sum), fw)

        # divisorial product: for a star-closed invertible I,
        # (I J^v)* = (I : (D:J))
        ic = closure(op, i)
        if ic.fractional and is_star_invertible(op, ic) and fj.fractional:
            jv = closure(vop, fj)
            lhs = closure(op, model.mul(ic, jv))
            rhs = model.colon(ic, model.colon(d, fj))
            tally("inv.divisorial-product", True, lhs == rhs, f"I={ic!r}, J={fj!r}")
        if is_quasi_star_invertible(op, ic):
            jq = closure(vst, j)
            lhs = closure(op, model.mul(ic, jq))
            den = model.colon(dstar, j)
            if den is not ZERO:
                rhs = model.colon(ic, den)
                tally("qinv.divisorial-product", True, lhs == rhs, f"I={ic!r}, J={j!r}")

        # sandwich: J <= I with J* = I*
        j_in = model.intersect(i, j)
        if closure(op, j_in) == closure(op, i):
            if i.fractional and j_in.fractional and star(i):
                tally("inv.sandwich", True, star(j_in), f"I={i!r}, J={j_in!r}")
            if quasi(i):
                tally("qinv.sandwich", True, quasi(j_in), f"I={i!r}, J={j_in!r}")
            if quasi(j_in):
                tally("qinv.sandwich-up", True, quasi(i), f"I={i!r}, J={j_in!r}")

    failures = [
        entry for entry in laws.values() if entry["applicable"] > entry["passed"]
    ]
    return {
        "op": op.name,
        "model": model.name,
        "seed": seed,
        "samples": samples,
        "laws": sorted(laws.values(), key=lambda e: e["law"]),
        "failures": len(failures),
        "pass": not failures,
    }
