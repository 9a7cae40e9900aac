"""Catalogue operations per model and literal parsing for descriptors,
operations and polynomials.

Operation literals:  d | v | t | w | star{T=<descriptor>} |
spectral{P1,...} | v(Dstar) | v(Dstar[<op>]) | ft(<op>) | tilde(<op>) |
induced(<op>,T=<descriptor>).  Prime names are the model's own (M, P,
P2, P3, PX, PY); positional aliases P1..Pn refer to the model's prime
list in order.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .models import (
    DenseRank1Model,
    DiscreteRank1Model,
    DomainModel,
    IdealDescriptor,
    PvdModel,
    Rank2LexModel,
    SemigroupRingModel,
    SemilocalPidModel,
    StaircaseModel,
)
from .operations import (
    SemistarOperation,
    ft_of,
    identity_operation,
    induced_on_overring,
    make_overring,
    make_spectral,
    make_v_of_star_image,
    tilde_of,
    v_operation,
)


def catalogue_ops(model: DomainModel) -> dict[str, SemistarOperation]:
    """The named operations exercised by suites and fixtures."""
    ops: dict[str, SemistarOperation] = {}
    ops["d"] = identity_operation(model)
    v = v_operation(model)
    ops["v"] = v
    ops["t"] = ft_of(v)
    ops["w"] = tilde_of(v)
    if isinstance(model, PvdModel):
        hull = model.make((0, "V"))
        ops[f"star{{T={hull!r}}}"] = make_overring(model, hull)
    if isinstance(model, SemigroupRingModel):
        hull = model.colon(model.D(), model.primes[0].ideal)
        if model.leq(model.D(), hull) and model.mul(hull, hull) == hull:
            ops[f"star{{T={hull!r}}}"] = make_overring(model, hull)
    if isinstance(model, Rank2LexModel):
        ops["spectral{P}"] = make_spectral(model, [model.primes[0]], name="spectral{P}")
    if isinstance(model, SemilocalPidModel):
        for site in model.primes:
            ops[f"spectral{{{site.name}}}"] = make_spectral(model, [site])
    if isinstance(model, StaircaseModel):
        ops["spectral{PX,PY}"] = make_spectral(model, model.primes[:2])
    return ops


def finite_type_catalogue_ops(model: DomainModel) -> dict[str, SemistarOperation]:
    return {k: op for k, op in catalogue_ops(model).items() if op.flags.finite_type}


# -- descriptor literals ------------------------------------------------


def parse_descriptor(model: DomainModel, text: str) -> IdealDescriptor:
    t = text.strip()
    if t == "K":
        return model.K()
    if t == "D":
        return model.D()
    try:
        return _parse_shape(model, t)
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError(f"bad descriptor literal {text!r} for {model.name}: {exc}")


def _parse_shape(model, t):
    if isinstance(model, SemigroupRingModel):
        m = re.fullmatch(r"Id\{([-\d,\s]+)\}", t)
        if not m:
            raise ParseError(f"expected Id{{...}}: {t!r}")
        return model.normalize([int(x) for x in m.group(1).split(",")])
    if isinstance(model, (DiscreteRank1Model, DenseRank1Model)):
        m = re.fullmatch(r"Seg\((>=?)\s*(-?\d+(?:/\d+)?)\)", t)
        if not m:
            raise ParseError(f"expected Seg(>=q) or Seg(>q): {t!r}")
        q = Fraction(m.group(2))
        closed = m.group(1) == ">="
        if isinstance(model, DiscreteRank1Model):
            if q.denominator != 1:
                raise ParseError("discrete model takes integer boundaries")
            return model.make(int(q) if closed else int(q) + 1)
        return model.make((q, closed))
    if isinstance(model, Rank2LexModel):
        m = re.fullmatch(r"C\((-?\d+),\s*(-?\d+)\)", t)
        if m:
            return model.make(("C", int(m.group(1)), int(m.group(2))))
        m = re.fullmatch(r"Row\((-?\d+)\)", t)
        if m:
            return model.make(("Row", int(m.group(1))))
        raise ParseError(f"expected C(a,b) or Row(a): {t!r}")
    if isinstance(model, PvdModel):
        m = re.fullmatch(r"([DV])@(-?\d+)", t)
        if not m:
            raise ParseError(f"expected D@n or V@n: {t!r}")
        return model.make((int(m.group(2)), m.group(1)))
    if isinstance(model, SemilocalPidModel):
        m = re.fullmatch(
            rf"\(\s*{model.p}\^(-oo|-?\d+)\s+{model.q}\^(-oo|-?\d+)\s*\)", t
        )
        if not m:
            raise ParseError(f"expected ({model.p}^a {model.q}^b): {t!r}")
        a = None if m.group(1) == "-oo" else int(m.group(1))
        b = None if m.group(2) == "-oo" else int(m.group(2))
        return model.make((a, b))
    if isinstance(model, StaircaseModel):
        m = re.fullmatch(r"St\{(.+)\}", t)
        if not m:
            raise ParseError(f"expected St{{(a,b),...}}: {t!r}")
        pairs = re.findall(r"\((-?\d+),\s*(-?\d+)\)", m.group(1))
        if not pairs:
            raise ParseError(f"no generator pairs in {t!r}")
        return model.normalize([(int(a), int(b)) for a, b in pairs])
    raise ParseError(f"no literal syntax for model {model.name}")


# -- operation literals ---------------------------------------------------


def _resolve_prime(model, token: str):
    token = token.strip()
    for site in model.primes:
        if site.name == token:
            return site
    m = re.fullmatch(r"P(\d+)", token)
    if m:
        idx = int(m.group(1)) - 1
        if 0 <= idx < len(model.primes):
            return model.primes[idx]
    raise ParseError(f"unknown prime {token!r}; model has {[s.name for s in model.primes]}")


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_operation(model: DomainModel, text: str) -> SemistarOperation:
    t = text.strip()
    if t == "d":
        return identity_operation(model)
    if t == "v":
        return v_operation(model)
    if t == "t":
        return ft_of(v_operation(model))
    if t == "w":
        return tilde_of(v_operation(model))
    if t == "v(Dstar)":
        return v_operation(model)
    m = re.fullmatch(r"v\(Dstar\[(.+)\]\)", t)
    if m:
        return make_v_of_star_image(parse_operation(model, m.group(1)))
    m = re.fullmatch(r"star\{T=(.+)\}", t)
    if m:
        return make_overring(model, parse_descriptor(model, m.group(1)))
    m = re.fullmatch(r"spectral\{(.+)\}", t)
    if m:
        sites = [_resolve_prime(model, tok) for tok in _split_top(m.group(1), ",")]
        return make_spectral(model, sites)
    m = re.fullmatch(r"ft\((.+)\)", t)
    if m:
        return ft_of(parse_operation(model, m.group(1)))
    m = re.fullmatch(r"tilde\((.+)\)", t)
    if m:
        return tilde_of(parse_operation(model, m.group(1)))
    m = re.fullmatch(r"induced\((.+),\s*T=(.+)\)", t)
    if m:
        head = _split_top(t[len("induced(") : -1], ",")
        opname = head[0]
        tpart = ",".join(head[1:]).strip()
        if not tpart.startswith("T="):
            raise ParseError(f"induced needs T=<descriptor>: {text!r}")
        base = parse_operation(model, opname)
        target = parse_descriptor(model, tpart[2:])
        return induced_on_overring(base, target)
    raise ParseError(f"unknown operation literal {text!r}")


# -- polynomial literals ---------------------------------------------------


def parse_polynomial(model: DomainModel, text: str):
    """Polynomial in the Nagata indeterminate T.

    Forms: "2 + 3*T + 5*T^2" (semilocal PID, rational coefficients),
    "X^3 + X^4*T" (semigroup ring), "val(1,0) + val(0,2)*T" (valuation
    models, value-level markers).
    """
    from .nagata import ContentPolynomial

    # terms are separated by space-surrounded +/- so that exponent and
    # tuple minuses survive ("X^-2", "val(1,-2)")
    chunks = re.split(r"\s([+-])\s", text.strip())
    signed = [("+", chunks[0])]
    for sign, chunk in zip(chunks[1::2], chunks[2::2]):
        signed.append((sign, chunk))
    terms = []
    for sign, chunk in signed:
        chunk = chunk.strip()
        if not chunk:
            continue
        neg = sign == "-"
        if chunk.startswith("-") and not chunk.startswith("-oo"):
            neg, chunk = not neg, chunk[1:].strip()
        coeff_txt, degree = _split_term(chunk)
        coeff = _parse_coefficient(model, coeff_txt, neg)
        terms.append((degree, coeff))
    terms.sort(key=lambda dc: dc[0])
    merged = []
    for d, c in terms:
        if merged and merged[-1][0] == d:
            raise ParseError(f"duplicate degree {d} in {text!r}")
        merged.append((d, c))
    return ContentPolynomial(model, tuple(merged))


def _split_term(chunk: str):
    m = re.fullmatch(r"(.*?)\*?\s*T(?:\^(\d+))?", chunk)
    if m and ("T" in chunk):
        coeff = m.group(1).strip().rstrip("*").strip()
        degree = int(m.group(2)) if m.group(2) else 1
        return (coeff or "1", degree)
    return (chunk, 0)


def _parse_coefficient(model, text: str, neg: bool):
    text = text.strip()
    if isinstance(model, SemilocalPidModel):
        value = Fraction(text)
        return -value if neg else value
    if isinstance(model, SemigroupRingModel):
        m = re.fullmatch(r"(?:(-?\d+(?:/\d+)?)\*)?X\^(-?\d+)", text)
        if not m:
            if re.fullmatch(r"-?\d+(?:/\d+)?", text):
                coeff = Fraction(text)
                return model.element([(0, -coeff if neg else coeff)])
            raise ParseError(f"bad semigroup coefficient {text!r}")
        scalar = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if neg:
            scalar = -scalar
        return model.element([(int(m.group(2)), scalar)])
    m = re.fullmatch(r"val\(([-\d/,\s]+)\)", text)
    if not m:
        if text == "1":
            return model.D()
        raise ParseError(f"bad value-marker coefficient {text!r}")
    parts = [p.strip() for p in m.group(1).split(",")]
    if isinstance(model, Rank2LexModel):
        return model.make(("C", int(parts[0]), int(parts[1])))
    if isinstance(model, StaircaseModel):
        return model.make(((int(parts[0]), int(parts[1])),))
    if isinstance(model, PvdModel):
        return model.make((int(parts[0]), "D"))
    if isinstance(model, DiscreteRank1Model):
        return model.make(int(parts[0]))
    if isinstance(model, DenseRank1Model):
        return model.make((Fraction(parts[0]), True))
    raise ParseError(f"no value markers for {model.name}")
