"""Descriptor families and the model interface.

Every catalogue model represents the nonzero D-submodules of the quotient
field K that admit a finite canonical form (the model's *descriptor
family*), and implements exact add / mul / colon / intersect / leq /
localize on those forms.  Descriptors are immutable values; two equal
submodules always have identical descriptors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from ..errors import ModelMismatch, RawOutsideFamily, ZeroModule

K_SHAPE = "K"


class ZeroSignal:
    """Distinct result of a colon that collapses to (0); never a descriptor."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"


ZERO = ZeroSignal()


@dataclass(frozen=True, eq=False)
class IdealDescriptor:
    """Canonical form of a nonzero D-submodule of K."""

    model: "DomainModel"
    shape: Any
    finitely_generated: bool
    fractional: bool

    @property
    def is_k(self) -> bool:
        return self.shape == K_SHAPE

    def __eq__(self, other):
        return (
            isinstance(other, IdealDescriptor)
            and self.model is other.model
            and self.shape == other.shape
        )

    def __hash__(self):
        return hash((id(self.model), self.shape))

    def __repr__(self):
        return self.model.format_shape(self.shape)


@dataclass(frozen=True, eq=False)
class PrimeSite:
    """A nonzero prime of the model together with its localization recipe."""

    model: "DomainModel"
    name: str
    ideal: IdealDescriptor
    localization_kind: str
    localized_model: "DomainModel"

    def localize(self, desc: IdealDescriptor) -> IdealDescriptor:
        return self.model.localize(desc, self)

    def __repr__(self):
        return f"{self.name}@{self.model.name}"


class DomainModel:
    """Base class for catalogue models.

    Subclasses implement the shape-level operations; this class supplies
    descriptor interning, the quotient-field fast paths, and argument
    checking.  All methods are pure; models and descriptors are safe to
    share between workers.
    """

    kind: str = "?"
    name: str = "?"
    element_support: bool = False

    def __init__(self):
        self._interned: dict[Any, IdealDescriptor] = {}
        self._op_cache: dict[tuple, Any] = {}
        self.primes: list[PrimeSite] = []

    # -- construction -------------------------------------------------

    def make(self, shape: Any) -> IdealDescriptor:
        """Intern the canonical shape as a descriptor."""
        cached = self._interned.get(shape)
        if cached is not None:
            return cached
        if shape == K_SHAPE:
            desc = IdealDescriptor(self, K_SHAPE, False, False)
        else:
            desc = IdealDescriptor(
                self, shape, self._is_fg(shape), self._is_fractional(shape)
            )
        self._interned[shape] = desc
        return desc

    def D(self) -> IdealDescriptor:
        return self.make(self._d_shape())

    def K(self) -> IdealDescriptor:
        return self.make(K_SHAPE)

    def normalize(self, raw: Sequence[Any]) -> IdealDescriptor:
        """Canonical descriptor of the submodule generated by the raw pieces.

        Each piece is a model-specific generator datum; the result is the
        join of the pieces.  Raises ZeroModule on an empty list and
        RawOutsideFamily on pieces the family cannot express.
        """
        if not raw:
            raise ZeroModule("no generators given")
        pieces = [self.make(self._piece_shape(p)) for p in raw]
        out = pieces[0]
        for p in pieces[1:]:
            out = self.add(out, p)
        return out

    # -- operations ----------------------------------------------------

    _MISS = object()

    def _cached(self, tag: str, a: IdealDescriptor, b: IdealDescriptor, fn):
        key = (tag, a.shape, b.shape)
        out = self._op_cache.get(key, DomainModel._MISS)
        if out is DomainModel._MISS:
            out = fn(a.shape, b.shape)
            self._op_cache[key] = out
        return out

    def add(self, a: IdealDescriptor, b: IdealDescriptor) -> IdealDescriptor:
        self._check(a, b)
        if a.is_k or b.is_k:
            return self.K()
        if a is b:
            return a
        return self.make(self._cached("+", a, b, self._add))

    def mul(self, a: IdealDescriptor, b: IdealDescriptor) -> IdealDescriptor:
        self._check(a, b)
        if a.is_k or b.is_k:
            return self.K()
        return self.make(self._cached("*", a, b, self._mul))

    def intersect(self, a: IdealDescriptor, b: IdealDescriptor) -> IdealDescriptor:
        self._check(a, b)
        if a.is_k:
            return b
        if b.is_k:
            return a
        if a is b:
            return a
        return self.make(self._cached("^", a, b, self._intersect))

    def colon(self, a: IdealDescriptor, b: IdealDescriptor):
        """{z in K : zB <= A}, or ZERO when that set is the zero module."""
        self._check(a, b)
        if b.is_k:
            return self.K() if a.is_k else ZERO
        if a.is_k:
            return self.K()
        shape = self._cached(":", a, b, self._colon)
        return ZERO if shape is None else self.make(shape)

    def leq(self, a: IdealDescriptor, b: IdealDescriptor) -> bool:
        self._check(a, b)
        if b.is_k:
            return True
        if a.is_k:
            return False
        return self._leq(a.shape, b.shape)

    def eq(self, a: IdealDescriptor, b: IdealDescriptor) -> bool:
        self._check(a, b)
        return a == b

    def scale(self, desc: IdealDescriptor, value: Any) -> IdealDescriptor:
        """x*E for a principal model element of the given value."""
        if desc.is_k:
            return desc
        return self.make(self._scale(desc.shape, value))

    def localize(self, desc: IdealDescriptor, site: PrimeSite) -> IdealDescriptor:
        if site.model is not self:
            raise ModelMismatch("prime belongs to a different model")
        if desc.model is not self:
            raise ModelMismatch("descriptor belongs to a different model")
        if desc.is_k:
            return site.localized_model.K()
        return self._localize(desc.shape, site)

    def extend_localization(self, desc: IdealDescriptor, site: PrimeSite) -> IdealDescriptor:
        """E*D_P as a descriptor of this model (used by spectral closures)."""
        if desc.is_k:
            return desc
        return self.make(self._extend_localization(desc.shape, site))

    def spectral_closure(self, desc: IdealDescriptor, sites: Sequence[PrimeSite]) -> IdealDescriptor:
        """Intersection of E*D_P over the sites."""
        if desc.is_k:
            return desc
        out = None
        for site in sites:
            part = self.extend_localization(desc, site)
            out = part if out is None else self.intersect(out, part)
        return out

    def fg_cofinal_chain(self, desc: IdealDescriptor, cutoff: int) -> list[IdealDescriptor]:
        """Ascending chain of f.g. sub-descriptors, cofinal in the family."""
        if cutoff < 1:
            raise ValueError("cutoff must be >= 1")
        if desc.is_k:
            return [self.make(s) for s in self._chain_for_k(cutoff)]
        if desc.finitely_generated:
            return [desc]
        return [self.make(s) for s in self._fg_chain(desc.shape, cutoff)]

    def ft_limit(self, closures: list[IdealDescriptor], chain: list[IdealDescriptor], desc: IdealDescriptor):
        """Symbolic limit of a non-stabilizing chain of closures, or None."""
        return None

    def is_principal(self, desc: IdealDescriptor) -> bool:
        if desc.is_k:
            return False
        return self._is_principal(desc.shape)

    def a_principal_subideal(self, desc: IdealDescriptor) -> IdealDescriptor:
        """Some principal descriptor contained in desc."""
        if desc.is_k:
            return self.D()
        return self.make(self._principal_sub(desc.shape))

    def shift_between(self, src: IdealDescriptor, dst: IdealDescriptor):
        """Value x with x*src = dst, or None when no principal shift exists."""
        if src.is_k or dst.is_k:
            return None
        return self._shift_between(src.shape, dst.shape)

    def _shift_between(self, src, dst):
        return None

    def overring_model(self, t: IdealDescriptor):
        """Catalogue model of the overring T, with embed/project maps.

        Returns (model_T, embed, project) where embed maps T-descriptors
        into this family and project inverts it on T-submodules.  Raises
        OverringNotInCatalogue when T has no catalogue model.
        """
        from ..errors import OverringNotInCatalogue

        if t == self.D():
            ident: Callable[[IdealDescriptor], IdealDescriptor] = lambda d: d
            return self, ident, ident
        raise OverringNotInCatalogue(f"no catalogue model for {t!r} over {self.name}")

    # -- model-specific hooks ------------------------------------------

    def _d_shape(self):
        raise NotImplementedError

    def _piece_shape(self, piece):
        raise NotImplementedError

    def _is_fg(self, shape) -> bool:
        raise NotImplementedError

    def _is_fractional(self, shape) -> bool:
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _intersect(self, a, b):
        raise NotImplementedError

    def _colon(self, a, b):
        raise NotImplementedError

    def _leq(self, a, b) -> bool:
        raise NotImplementedError

    def _scale(self, shape, value):
        raise NotImplementedError

    def _localize(self, shape, site):
        raise NotImplementedError

    def _extend_localization(self, shape, site):
        raise NotImplementedError

    def _fg_chain(self, shape, cutoff):
        raise NotImplementedError

    def _chain_for_k(self, cutoff):
        raise NotImplementedError

    def _is_principal(self, shape) -> bool:
        raise NotImplementedError

    def _principal_sub(self, shape):
        raise NotImplementedError

    def format_shape(self, shape) -> str:
        raise NotImplementedError

    # -- helpers --------------------------------------------------------

    def _check(self, a: IdealDescriptor, b: IdealDescriptor):
        if a.model is not self or b.model is not self:
            raise ModelMismatch(
                f"operands of {self.name} given descriptors of "
                f"{a.model.name} and {b.model.name}"
            )

    def _register_primes(self, sites: Iterable[PrimeSite]):
        self.primes = list(sites)
        for site in self.primes:
            self._check_prime(site)

    def _check_prime(self, site: PrimeSite, span: int = 5):
        """Bounded primality audit: products of complement values stay out."""
        outside = [v for v in self._probe_values(span) if not self._value_in(v, site.ideal)]
        for x in outside:
            for y in outside:
                if self._value_in(self._value_mul(x, y), site.ideal):
                    raise RawOutsideFamily(
                        f"{site.name} is not prime: {x} * {y} falls inside"
                    )

    def _probe_values(self, span: int):
        """Small grid of element values used by the primality audit."""
        return []

    def _value_in(self, value, desc: IdealDescriptor) -> bool:
        """Whether an element of the given value lies in the descriptor."""
        raise NotImplementedError

    def _value_mul(self, x, y):
        """Value of the product of two elements (valuations add)."""
        raise NotImplementedError

    def __repr__(self):
        return f"<model {self.name}>"
