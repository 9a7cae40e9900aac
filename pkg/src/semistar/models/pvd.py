"""Pseudo-valuation domain D = k + M sharing its maximal ideal with a DVR.

V = F[[X]] over a field F with a proper subfield k of infinite index,
M = X*V and D = k + M.  The model covers the monomial tier lattice
{X^n D, X^n V : n in Z}, which is a chain

    ... > X^n V > X^n D > X^{n+1} V > ...

closed under add/mul/colon/intersect.  V-tier descriptors are not
finitely generated over D (the index [F:k] is infinite); D-tier ones
are principal.  Residue fields are symbolic tags only.
"""

from __future__ import annotations

from ..errors import OverringNotInCatalogue, RawOutsideFamily
from .base import K_SHAPE, DomainModel, PrimeSite
from .valuation import DiscreteRank1Model

D_TIER = "D"
V_TIER = "V"


class PvdModel(DomainModel):
    kind = "pvd"
    name = "pvd"

    def __init__(self, residue_field: str = "k", hull_field: str = "K"):
        super().__init__()
        self.residue_field = residue_field
        self.hull_field = hull_field
        self.hull_model = DiscreteRank1Model()
        self._register_primes(
            [PrimeSite(self, "M", self.make((1, V_TIER)), "identity (local at M)", self)]
        )

    # shape = (n, tier); X^n D or X^n V

    def _d_shape(self):
        return (0, D_TIER)

    def _piece_shape(self, piece):
        if (
            isinstance(piece, tuple)
            and len(piece) == 2
            and isinstance(piece[0], int)
            and piece[1] in (D_TIER, V_TIER)
        ):
            return piece
        raise RawOutsideFamily(f"PVD generator must be (n, 'D'|'V'): {piece!r}")

    def _is_fg(self, shape):
        return shape[1] == D_TIER

    def _is_fractional(self, shape):
        return True

    @staticmethod
    def _rank(shape):
        """Chain position; smaller rank = larger module."""
        return (shape[0], 0 if shape[1] == V_TIER else 1)

    def _add(self, a, b):
        return min(a, b, key=self._rank)

    def _intersect(self, a, b):
        return max(a, b, key=self._rank)

    def _mul(self, a, b):
        tier = V_TIER if V_TIER in (a[1], b[1]) else D_TIER
        return (a[0] + b[0], tier)

    def _colon(self, a, b):
        # (X^a D : X^b D) = X^{a-b} D      (D:D) = D
        # (X^a D : X^b V) = X^{a-b+1} V    (D:V) = M
        # (X^a V : X^b *) = X^{a-b} V      (V:D) = (V:V) = V
        if a[1] == D_TIER:
            if b[1] == D_TIER:
                return (a[0] - b[0], D_TIER)
            return (a[0] - b[0] + 1, V_TIER)
        return (a[0] - b[0], V_TIER)

    def _leq(self, a, b):
        return self._rank(a) >= self._rank(b)

    def _scale(self, shape, value: int):
        return (shape[0] + value, shape[1])

    def _localize(self, shape, site):
        return self.make(shape)

    def _extend_localization(self, shape, site):
        return shape

    def _fg_chain(self, shape, cutoff):
        # X^n D is the largest family-f.g. submodule of X^n V
        return [(shape[0], D_TIER)]

    def _chain_for_k(self, cutoff):
        return [(-k, D_TIER) for k in range(cutoff)]

    def _is_principal(self, shape):
        return shape[1] == D_TIER

    def _principal_sub(self, shape):
        return (shape[0], D_TIER)

    def _shift_between(self, src, dst):
        if src[1] != dst[1]:
            return None
        return dst[0] - src[0]

    def overring_model(self, t):
        if t == self.D():
            ident = lambda d: d
            return self, ident, ident
        if t.shape == (0, V_TIER):
            dvr = self.hull_model

            def embed(d):
                return self.K() if d.is_k else self.make((d.shape, V_TIER))

            def project(d):
                if d.is_k:
                    return dvr.K()
                if d.shape[1] != V_TIER:
                    raise RawOutsideFamily(f"{d!r} is not a V-module")
                return dvr.make(d.shape[0])

            return dvr, embed, project
        raise OverringNotInCatalogue(f"no catalogue model for {t!r}")

    def format_shape(self, shape):
        if shape == K_SHAPE:
            return "K"
        return f"{shape[1]}@{shape[0]}"

    def _probe_values(self, span):
        # values of elements c*X^n*(unit of D), c in k
        return list(range(0, span))

    def _value_in(self, value, desc):
        return value >= desc.shape[0]

    def _value_mul(self, x, y):
        return x + y
