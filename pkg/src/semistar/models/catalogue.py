"""Model registry: construction by kind name, with interning."""

from __future__ import annotations

from ..errors import ParseError
from .base import DomainModel
from .pid import SemilocalPidModel
from .pvd import PvdModel
from .semigroup import SemigroupRingModel, make_semigroup_model
from .staircase import StaircaseModel
from .valuation import DenseRank1Model, DiscreteRank1Model, Rank2LexModel

_KIND_ALIASES = {
    "semigroup": "semigroup",
    "valuation-rank1-discrete": "valuation-rank1-discrete",
    "dvr": "valuation-rank1-discrete",
    "valuation-rank1-dense": "valuation-rank1-dense",
    "dense": "valuation-rank1-dense",
    "valuation-rank2-lex": "valuation-rank2-lex",
    "rank2": "valuation-rank2-lex",
    "pvd": "pvd",
    "semilocal-pid": "semilocal-pid",
    "pid": "semilocal-pid",
    "staircase": "staircase",
}

_singletons: dict[tuple, DomainModel] = {}


def make_model(kind: str, **params) -> DomainModel:
    k = _KIND_ALIASES.get(kind)
    if k is None:
        raise ParseError(f"unknown model kind {kind!r}")
    if k == "semigroup":
        return make_semigroup_model(tuple(params.get("generators", (3, 4, 5))))
    if k == "semilocal-pid":
        key = (k, tuple(params.get("primes", (2, 3))))
    else:
        key = (k,)
    model = _singletons.get(key)
    if model is None:
        if k == "valuation-rank1-discrete":
            model = DiscreteRank1Model()
        elif k == "valuation-rank1-dense":
            model = DenseRank1Model()
        elif k == "valuation-rank2-lex":
            model = Rank2LexModel()
        elif k == "pvd":
            model = PvdModel()
        elif k == "semilocal-pid":
            model = SemilocalPidModel(key[1])
        elif k == "staircase":
            model = StaircaseModel()
        _singletons[key] = model
    return model


def model_from_spec(spec) -> DomainModel:
    """Model from a JSON scenario block, e.g. {"kind": "semigroup", "generators": [3,4,5]}."""
    if isinstance(spec, str):
        return model_from_compact(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError(f"model spec must carry a 'kind': {spec!r}")
    params = {key: value for key, value in spec.items() if key != "kind"}
    if "generators" in params:
        params["generators"] = tuple(int(g) for g in params["generators"])
    if "primes" in params:
        params["primes"] = tuple(int(g) for g in params["primes"])
    return make_model(spec["kind"], **params)


def model_from_compact(text: str) -> DomainModel:
    """Model from a compact CLI literal, e.g. "semigroup:3,4,5" or "pvd"."""
    text = text.strip()
    if ":" in text:
        kind, args = text.split(":", 1)
        numbers = tuple(int(x) for x in args.split(",") if x.strip())
        kind = kind.strip()
        if _KIND_ALIASES.get(kind) == "semilocal-pid":
            return make_model(kind, primes=numbers)
        return make_model(kind, generators=numbers)
    return make_model(text)


def default_models() -> list[DomainModel]:
    """The seven-entry catalogue used by suites and fixtures."""
    return [
        make_model("semigroup", generators=(3, 4, 5)),
        make_model("dvr"),
        make_model("dense"),
        make_model("rank2"),
        make_model("pvd"),
        make_model("pid"),
        make_model("staircase"),
    ]
