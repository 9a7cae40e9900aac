"""Seeded, reproducible sampling of descriptors, values and polynomials.

Shape parameters are drawn uniformly from a bounded box (exponents in
[-8, 8], at most 4 generators).  Every report records the seed it was
run with; subseeds are derived from stable string labels so that checks
are order-independent.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .models import (
    DenseRank1Model,
    DiscreteRank1Model,
    IdealDescriptor,
    PvdModel,
    Rank2LexModel,
    SemigroupRingModel,
    SemilocalPidModel,
    StaircaseModel,
)

EXPONENT_BOX = (-8, 8)
MAX_GENERATORS = 4


def derive_rng(seed: int, *labels: str) -> random.Random:
    h = hashlib.blake2b(digest_size=8)
    h.update(str(seed).encode())
    for label in labels:
        h.update(b"\x00" + label.encode())
    return random.Random(int.from_bytes(h.digest(), "big"))


def _exponent(rng: random.Random) -> int:
    return rng.randint(*EXPONENT_BOX)


def sample_descriptor(model, rng: random.Random, allow_k: bool = False) -> IdealDescriptor:
    if allow_k and rng.random() < 0.05:
        return model.K()
    if isinstance(model, SemigroupRingModel):
        n = rng.randint(1, MAX_GENERATORS)
        return model.normalize([_exponent(rng) for _ in range(n)])
    if isinstance(model, DiscreteRank1Model):
        return model.make(_exponent(rng))
    if isinstance(model, DenseRank1Model):
        q = Fraction(_exponent(rng), rng.choice((1, 1, 2, 3, 4)))
        return model.make((q, rng.random() < 0.5))
    if isinstance(model, Rank2LexModel):
        if rng.random() < 0.35:
            return model.make(("Row", _exponent(rng)))
        return model.make(("C", _exponent(rng), _exponent(rng)))
    if isinstance(model, PvdModel):
        return model.make((_exponent(rng), rng.choice(("D", "V"))))
    if isinstance(model, SemilocalPidModel):
        a = None if rng.random() < 0.15 else _exponent(rng)
        b = None if rng.random() < 0.15 else _exponent(rng)
        if a is None and b is None:
            a = _exponent(rng)
        return model.make((a, b))
    if isinstance(model, StaircaseModel):
        n = rng.randint(1, MAX_GENERATORS)
        return model.normalize(
            [(_exponent(rng), _exponent(rng)) for _ in range(n)]
        )
    raise TypeError(f"no sampler for {model!r}")


def sample_fg(model, rng: random.Random) -> IdealDescriptor:
    for _ in range(64):
        d = sample_descriptor(model, rng)
        if d.finitely_generated:
            return d
    raise RuntimeError("could not sample a finitely generated descriptor")


def sample_fractional(model, rng: random.Random) -> IdealDescriptor:
    for _ in range(64):
        d = sample_descriptor(model, rng)
        if d.fractional:
            return d
    raise RuntimeError("could not sample a fractional descriptor")


def sample_fg_fractional(model, rng: random.Random) -> IdealDescriptor:
    for _ in range(64):
        d = sample_descriptor(model, rng)
        if d.fractional and d.finitely_generated:
            return d
    raise RuntimeError("could not sample an f.g. fractional descriptor")


def sample_integral(model, rng: random.Random) -> IdealDescriptor:
    """A nonzero integral ideal (descriptor contained in D)."""
    return model.intersect(sample_descriptor(model, rng), model.D())


def sample_value(model, rng: random.Random):
    """The value of a principal element usable for descriptor shifts."""
    if isinstance(model, (SemigroupRingModel, DiscreteRank1Model, PvdModel)):
        return _exponent(rng)
    if isinstance(model, DenseRank1Model):
        return Fraction(_exponent(rng), rng.choice((1, 2, 4)))
    if isinstance(model, (Rank2LexModel, StaircaseModel, SemilocalPidModel)):
        return (_exponent(rng), _exponent(rng))
    raise TypeError(f"no value sampler for {model!r}")


# -- polynomials ------------------------------------------------------


def sample_polynomial(model, rng: random.Random, max_degree: int = 4):
    """ContentPolynomial with integral coefficients over the model."""
    from .nagata import ContentPolynomial

    degrees = sorted(rng.sample(range(max_degree + 1), rng.randint(1, min(4, max_degree + 1))))
    terms = []
    for d in degrees:
        terms.append((d, _integral_coefficient(model, rng)))
    return ContentPolynomial(model, tuple(terms))


def _integral_coefficient(model, rng: random.Random):
    if isinstance(model, SemilocalPidModel):
        unit = rng.choice((1, 1, 1, 5, 7, -1, -5, Fraction(1, 7), Fraction(5, 11)))
        return Fraction(unit) * model.p ** rng.randint(0, 3) * model.q ** rng.randint(0, 3)
    if isinstance(model, SemigroupRingModel):
        S = model.semigroup
        exps = [n for n in range(0, S.conductor + S.generators[-1] + 2) if S.contains(n)]
        return model.element([(rng.choice(exps), rng.choice((1, 1, 2, -1)))])
    # value-marker coefficient: a principal descriptor inside D
    d = sample_fg(model, rng)
    p = model.a_principal_subideal(model.intersect(d, model.D()))
    return p


# -- shrinking --------------------------------------------------------


def shrink_shape_candidates(desc: IdealDescriptor):
    """Simpler variants: fewer generators first, then smaller exponents."""
    model, shape = desc.model, desc.shape
    if desc.is_k:
        return
    if isinstance(model, (SemigroupRingModel,)):
        if len(shape) > 1:
            for i in range(len(shape)):
                yield model.normalize([g for j, g in enumerate(shape) if j != i])
        for i, g in enumerate(shape):
            if g != 0:
                smaller = g - (1 if g > 0 else -1)
                yield model.normalize([smaller if j == i else h for j, h in enumerate(shape)])
    elif isinstance(model, StaircaseModel):
        if len(shape) > 1:
            for i in range(len(shape)):
                yield model.normalize([g for j, g in enumerate(shape) if j != i])
        for i, (a, b) in enumerate(shape):
            for na, nb in ((a - (a > 0) + (a < 0), b), (a, b - (b > 0) + (b < 0))):
                if (na, nb) != (a, b):
                    yield model.normalize(
                        [(na, nb) if j == i else g for j, g in enumerate(shape)]
                    )
    elif isinstance(model, DiscreteRank1Model):
        if shape != 0:
            yield model.make(shape - (1 if shape > 0 else -1))
    elif isinstance(model, DenseRank1Model):
        q, closed = shape
        if q != 0:
            yield model.make((q / 2 if q.denominator > 1 else q - (1 if q > 0 else -1), closed))
        if not closed:
            yield model.make((q, True))
    elif isinstance(model, Rank2LexModel):
        if shape[0] == "Row":
            a = shape[1]
            if a != 0:
                yield model.make(("Row", a - (1 if a > 0 else -1)))
            yield model.make(("C", a, 0))
        else:
            _, a, b = shape
            if a != 0:
                yield model.make(("C", a - (1 if a > 0 else -1), b))
            if b != 0:
                yield model.make(("C", a, b - (1 if b > 0 else -1)))
    elif isinstance(model, PvdModel):
        n, tier = shape
        if n != 0:
            yield model.make((n - (1 if n > 0 else -1), tier))
        if tier == "V":
            yield model.make((n, "D"))
    elif isinstance(model, SemilocalPidModel):
        a, b = shape
        for na, nb in ((0 if a else a, b), (a, 0 if b else b)):
            if (na, nb) != (a, b):
                yield model.make((na, nb))
        if a is None:
            yield model.make((0, b))
        if b is None:
            yield model.make((a, 0))


def shrink_witness(descs: tuple, still_fails) -> tuple:
    """Greedy shrink of a failing tuple of descriptors.

    `still_fails(tuple) -> bool` re-evaluates the law; exceptions are
    treated as "does not fail" so error states never replace a witness.
    """
    current = tuple(descs)
    improved = True
    while improved:
        improved = False
        for i, d in enumerate(current):
            if not isinstance(d, IdealDescriptor):
                continue
            for candidate in shrink_shape_candidates(d):
                trial = current[:i] + (candidate,) + current[i + 1 :]
                try:
                    if still_fails(trial):
                        current = trial
                        improved = True
                        break
                except Exception:
                    continue
            if improved:
                break
    return current
