"""Semistar operations: constructors, combinators, spectra, law checkers.

A semistar operation is a closure map E -> E* on the nonzero D-submodules
of K satisfying

    (*1)  (xE)* = x E*          for nonzero x in K,
    (*2)  E <= F  implies  E* <= F*,
    (*3)  E <= E*  and  (E*)* = E*.

Operations are immutable values carrying declared structural flags
(finite type / stable / whether D* = D) and a construction record; the
evaluator is memoized per descriptor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import (
    CutoffNotStabilized,
    ModelMismatch,
    NotAnOverring,
    TrivialOperation,
)
from .models import ZERO, DomainModel, IdealDescriptor, PrimeSite
from .sampling import derive_rng, sample_descriptor, sample_value

DEFAULT_CUTOFF = 64


@dataclass(frozen=True)
class OpFlags:
    finite_type: bool = False
    stable: bool = False
    semistar_proper: bool = False  # D* = D


@dataclass(eq=False)
class SemistarOperation:
    name: str
    model: DomainModel
    evaluator: Callable[[IdealDescriptor], IdealDescriptor]
    flags: OpFlags
    basis: tuple
    _cache: dict = field(default_factory=dict, repr=False)
    _derived: dict = field(default_factory=dict, repr=False)

    def __call__(self, desc: IdealDescriptor) -> IdealDescriptor:
        return closure(self, desc)

    def __repr__(self):
        return f"<op {self.name} on {self.model.name}>"


def closure(op: SemistarOperation, desc: IdealDescriptor) -> IdealDescriptor:
    """E*, canonical.  Extensive, monotone and idempotent by construction."""
    if desc.model is not op.model:
        raise ModelMismatch(f"{desc!r} is not a descriptor of {op.model.name}")
    if desc.is_k:
        return desc
    out = op._cache.get(desc)
    if out is None:
        out = op.evaluator(desc)
        op._cache[desc] = out
        op._cache.setdefault(out, out)  # idempotence shortcut
    return out


def _finish(op: SemistarOperation) -> SemistarOperation:
    """Fill in the semistar_proper flag by evaluating at D."""
    proper = closure(op, op.model.D()) == op.model.D()
    op.flags = OpFlags(op.flags.finite_type, op.flags.stable, proper)
    return op


def make_identity(model: DomainModel) -> SemistarOperation:
    """The identity (semi)star operation d."""
    op = SemistarOperation(
        "d", model, lambda e: e, OpFlags(True, True, True), ("identity",)
    )
    return op


def make_v(model: DomainModel) -> SemistarOperation:
    """E^v = (D:(D:E)); when (D:E) = (0) the closure is K."""
    d = model.D()

    def ev(e):
        inv = model.colon(d, e)
        if inv is ZERO:
            return model.K()
        out = model.colon(d, inv)
        return model.K() if out is ZERO else out

    op = SemistarOperation("v", model, ev, OpFlags(False, False, False), ("vOperation",))
    return _finish(op)


def make_overring(model: DomainModel, t: IdealDescriptor, name: str | None = None) -> SemistarOperation:
    """E -> E*T for an overring descriptor T (T*T = T, D <= T).

    Multiplication by T commutes with directed unions, so the operation
    is of finite type.
    """
    if t.model is not model:
        raise ModelMismatch("T belongs to a different model")
    if t.is_k:
        raise TrivialOperation("the trivial operation E -> K is excluded")
    if not model.leq(model.D(), t) or model.mul(t, t) != t:
        raise NotAnOverring(f"{t!r} is not an overring descriptor")
    op = SemistarOperation(
        name or f"star{{T={t!r}}}",
        model,
        lambda e: model.mul(e, t),
        OpFlags(True, False, False),
        ("overring", t),
    )
    return _finish(op)


def make_spectral(model: DomainModel, sites: Sequence[PrimeSite], name: str | None = None) -> SemistarOperation:
    """E -> intersection of E*D_P over a nonempty finite set of primes.

    Spectral operations are stable, and of finite type because the set
    of primes is finite.
    """
    sites = list(sites)
    if not sites:
        raise TrivialOperation("spectral operation needs a nonempty prime set")
    for s in sites:
        if s.model is not model:
            raise ModelMismatch("prime site belongs to a different model")
    label = name or "spectral{" + ",".join(s.name for s in sites) + "}"
    op = SemistarOperation(
        label,
        model,
        lambda e: model.spectral_closure(e, sites),
        OpFlags(True, True, False),
        ("spectral", tuple(s.name for s in sites)),
    )
    return _finish(op)


def make_v_of_star_image(op: SemistarOperation, name: str | None = None) -> SemistarOperation:
    """E -> (D*:(D*:E)) for D* = closure(op, D)."""
    model = op.model
    s = closure(op, model.D())

    def ev(e):
        inv = model.colon(s, e)
        if inv is ZERO:
            return model.K()
        out = model.colon(s, inv)
        return model.K() if out is ZERO else out

    out = SemistarOperation(
        name or f"v(Dstar[{op.name}])",
        model,
        ev,
        OpFlags(False, False, False),
        ("vOfStarImage", op.name),
    )
    return _finish(out)


def finite_type_of(op: SemistarOperation, cutoff: int = DEFAULT_CUTOFF, name: str | None = None) -> SemistarOperation:
    """The finite-type operation: supremum of F* over f.g. F <= E.

    On f.g. descriptors it agrees with op.  On the others it joins E with
    the supremum of op over the model's cofinal chain of family-f.g.
    subideals; the join with E is sound because the true finite-type
    closure is extensive (every element spans a principal subideal).
    Non-stabilizing chains are resolved by the model's symbolic limit
    rule or rejected with CutoffNotStabilized.
    """
    if op.flags.finite_type:
        return op
    model = op.model

    def ev(e):
        if e.finitely_generated:
            return closure(op, e)
        chain = model.fg_cofinal_chain(e, cutoff)
        closures = []
        sup = None
        for j in chain:
            c = closure(op, j)
            closures.append(c)
            sup = c if sup is None else model.add(sup, c)
            if len(closures) >= 2 and closures[-1] == closures[-2]:
                return model.add(e, sup)
        if len(chain) < cutoff:
            # the model produced the whole cofinal chain; exhaustion is
            # stabilization
            return model.add(e, sup)
        limit = model.ft_limit(closures, chain, e)
        if limit is None:
            raise CutoffNotStabilized(
                f"supremum for {e!r} under {op.name} did not stabilize in {cutoff} steps"
            )
        return model.add(e, model.add(sup, limit))

    out = SemistarOperation(
        name or f"ft({op.name})",
        model,
        ev,
        OpFlags(True, op.flags.stable, op.flags.semistar_proper),
        ("finiteTypeOf", op.name),
    )
    return out


@dataclass(frozen=True)
class QuasiSpectrum:
    """Quasi-prime / quasi-maximal data of an operation over the model's primes.

    pi_star collects the primes P with P* /\\ D != D; quasi_maximals are
    its inclusion-maximal members (for finite-type operations these are
    exactly the maximal proper quasi-ideals, and each is a quasi-prime).
    """

    op: SemistarOperation
    quasi_primes: tuple[PrimeSite, ...]
    quasi_maximals: tuple[PrimeSite, ...]
    pi_star: tuple[PrimeSite, ...]


def quasi_spectrum(op: SemistarOperation) -> QuasiSpectrum:
    model = op.model
    d = model.D()
    if closure(op, d).is_k:
        raise TrivialOperation(f"{op.name} sends D to K")
    quasi, pi = [], []
    for site in model.primes:
        trace = model.intersect(closure(op, site.ideal), d)
        if trace == site.ideal:
            quasi.append(site)
        if trace != d:
            pi.append(site)
    maximals = [
        s
        for s in pi
        if not any(t is not s and model.leq(s.ideal, t.ideal) for t in pi)
    ]
    if op.flags.finite_type:
        for s in maximals:
            if s not in quasi:
                raise AssertionError(
                    f"finite-type spectrum violation: {s.name} maximal but not quasi-prime"
                )
    return QuasiSpectrum(op, tuple(quasi), tuple(maximals), tuple(pi))


def stable_of(op: SemistarOperation, cutoff: int = DEFAULT_CUTOFF, name: str | None = None) -> SemistarOperation:
    """The stable finite-type operation: spectral at the quasi-maximals of ft(op)."""
    ft = finite_type_of(op, cutoff)
    spec = quasi_spectrum(ft)
    if not spec.quasi_maximals:
        raise TrivialOperation(f"{op.name} has no quasi-maximal ideals")
    return make_spectral(op.model, spec.quasi_maximals, name=name or f"tilde({op.name})")


def induced_on_overring(op: SemistarOperation, t: IdealDescriptor, name: str | None = None) -> SemistarOperation:
    """The operation E -> E* restricted to T-submodules, on T's own model.

    Finite-type and stability carry over; the result is (semi)star proper
    when T = D*.
    """
    model = op.model
    if not t.is_k:
        if not model.leq(model.D(), t) or model.mul(t, t) != t:
            raise NotAnOverring(f"{t!r} is not an overring descriptor")
    sub, embed, project = model.overring_model(t)

    def ev(e):
        return project(closure(op, embed(e)))

    out = SemistarOperation(
        name or f"induced({op.name},{t!r})",
        sub,
        ev,
        OpFlags(op.flags.finite_type, op.flags.stable, False),
        ("induced", op.name, t.shape),
    )
    return _finish(out)


# -- memoized derived operations ---------------------------------------

_MODEL_OPS: dict[int, dict[str, SemistarOperation]] = {}


def _model_memo(model: DomainModel) -> dict:
    return _MODEL_OPS.setdefault(id(model), {})


def identity_operation(model: DomainModel) -> SemistarOperation:
    memo = _model_memo(model)
    if "d" not in memo:
        memo["d"] = make_identity(model)
    return memo["d"]


def v_operation(model: DomainModel) -> SemistarOperation:
    memo = _model_memo(model)
    if "v" not in memo:
        memo["v"] = make_v(model)
    return memo["v"]


def ft_of(op: SemistarOperation, cutoff: int = DEFAULT_CUTOFF) -> SemistarOperation:
    key = ("ft", cutoff)
    if key not in op._derived:
        op._derived[key] = finite_type_of(op, cutoff)
    return op._derived[key]


def tilde_of(op: SemistarOperation, cutoff: int = DEFAULT_CUTOFF) -> SemistarOperation:
    key = ("tilde", cutoff)
    if key not in op._derived:
        op._derived[key] = stable_of(op, cutoff)
    return op._derived[key]


def vstar_of(op: SemistarOperation) -> SemistarOperation:
    if "vstar" not in op._derived:
        op._derived["vstar"] = make_v_of_star_image(op)
    return op._derived["vstar"]


# -- comparisons and law checks ---------------------------------------


def op_leq(op1: SemistarOperation, op2: SemistarOperation, sample_size: int = 200, seed: int = 0):
    """Sampled semi-decision of op1 <= op2; returns (verdict, witness|None)."""
    if op1.model is not op2.model:
        raise ModelMismatch("operations live on different models")
    model = op1.model
    rng = derive_rng(seed, "op_leq", model.name, op1.name, op2.name)
    for _ in range(sample_size):
        e = sample_descriptor(model, rng, allow_k=True)
        if not model.leq(closure(op1, e), closure(op2, e)):
            return False, e
    return True, None


def axiom_check(op: SemistarOperation, sample_size: int = 200, seed: int = 0) -> dict:
    """Sampled audit of (*1)-(*3) and the product/sum/colon/intersection laws.

    Returns a report dict: one record per law with checked/passed counts
    and a witness for the first failure.  A sampled semi-decision, and
    says so in the report.
    """
    model = op.model
    rng = derive_rng(seed, "axiom_check", model.name, op.name)
    laws = {
        key: {"key": key, "law": text, "checked": 0, "passed": 0, "witness": None}
        for key, text in [
            ("scaling", "(xE)* = x E*"),
            ("monotone", "E <= F implies E* <= F*"),
            ("extensive", "E <= E*"),
            ("idempotent", "(E*)* = E*"),
            ("product", "(EF)* = (E*F)* = (EF*)* = (E*F*)*"),
            ("sum", "(E+F)* = (E*+F)* = (E+F*)* = (E*+F*)*"),
            ("colon", "(E:F)* <= (E*:F*) = (E*:F) = ((E*:F))*"),
            ("intersection", "(E/\\F)* <= E* /\\ F* = (E* /\\ F*)*"),
        ]
    }

    def record(key, ok, witness):
        entry = laws[key]
        entry["checked"] += 1
        if ok:
            entry["passed"] += 1
        elif entry["witness"] is None:
            entry["witness"] = witness

    for _ in range(sample_size):
        e = sample_descriptor(model, rng)
        f = sample_descriptor(model, rng)
        x = sample_value(model, rng)
        ce, cf = closure(op, e), closure(op, f)

        record("scaling", closure(op, model.scale(e, x)) == model.scale(ce, x), f"E={e!r}, x={x!r}")
        ef = model.add(e, f) if rng.random() < 0.5 else f
        record("monotone", not model.leq(e, ef) or model.leq(ce, closure(op, ef)), f"E={e!r}, F={ef!r}")
        record("extensive", model.leq(e, ce), f"E={e!r}")
        record("idempotent", closure(op, ce) == ce, f"E={e!r}")

        prod = closure(op, model.mul(e, f))
        ok = (
            prod == closure(op, model.mul(ce, f))
            and prod == closure(op, model.mul(e, cf))
            and prod == closure(op, model.mul(ce, cf))
        )
        record("product", ok, f"E={e!r}, F={f!r}")

        s = closure(op, model.add(e, f))
        ok = (
            s == closure(op, model.add(ce, f))
            and s == closure(op, model.add(e, cf))
            and s == closure(op, model.add(ce, cf))
        )
        record("sum", ok, f"E={e!r}, F={f!r}")

        q = model.colon(e, f)
        qc = model.colon(ce, cf)
        qc2 = model.colon(ce, f)
        if qc is ZERO or qc2 is ZERO:
            ok = q is ZERO and qc is ZERO and qc2 is ZERO
        else:
            ok = qc == qc2 and closure(op, qc2) == qc2
            if q is not ZERO:
                ok = ok and model.leq(closure(op, q), qc)
        record("colon", ok, f"E={e!r}, F={f!r}")

        meet = closure(op, model.intersect(e, f))
        rhs = model.intersect(ce, cf)
        record(
            "intersection",
            model.leq(meet, rhs) and closure(op, rhs) == rhs,
            f"E={e!r}, F={f!r}",
        )

    return {
        "op": op.name,
        "model": model.name,
        "seed": seed,
        "samples": sample_size,
        "kind": "sampled semi-decision",
        "laws": list(laws.values()),
        "all_passed": all(l["checked"] == l["passed"] for l in laws.values()),
    }
