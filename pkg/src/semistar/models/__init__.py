from .base import ZERO, DomainModel, IdealDescriptor, PrimeSite, ZeroSignal
from .catalogue import default_models, make_model, model_from_compact, model_from_spec
from .pid import SemilocalPidModel
from .pvd import PvdModel
from .semigroup import NumericalSemigroup, SemigroupRingModel, make_semigroup_model
from .staircase import StaircaseModel
from .valuation import DenseRank1Model, DiscreteRank1Model, Rank2LexModel

__all__ = [
    "ZERO",
    "ZeroSignal",
    "DomainModel",
    "IdealDescriptor",
    "PrimeSite",
    "NumericalSemigroup",
    "SemigroupRingModel",
    "make_semigroup_model",
    "DiscreteRank1Model",
    "DenseRank1Model",
    "Rank2LexModel",
    "PvdModel",
    "SemilocalPidModel",
    "StaircaseModel",
    "default_models",
    "make_model",
    "model_from_compact",
    "model_from_spec",
]
