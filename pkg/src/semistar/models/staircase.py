"""Two-variable local ring with monomial (staircase) fractional ideals.

D = F[X,Y] localized at (X,Y).  Monomial fractional ideals are upward
closed subsets of Z^2 under the componentwise order; the descriptor is
the minimal antichain of generators.  The family is closed under all
four operations (intersection is the componentwise max of generator
pairs, colon is an intersection of translates).

The family-visible primes are the monomial ones: (X), (Y) and the
maximal ideal M = (X,Y).  Localizing at (X) or (Y) inverts the other
variable and lands in a DVR tracked by the matching exponent.
"""

from __future__ import annotations

from ..errors import RawOutsideFamily
from .base import K_SHAPE, DomainModel, PrimeSite
from .valuation import DiscreteRank1Model


def _minimize(points):
    pts = sorted(set(points))
    keep = []
    for p in pts:
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts):
            keep.append(p)
    return tuple(keep)


class StaircaseModel(DomainModel):
    kind = "staircase"
    name = "staircase"

    def __init__(self):
        super().__init__()
        self._dvr_x = DiscreteRank1Model()
        self._dvr_y = DiscreteRank1Model()
        self._register_primes(
            [
                PrimeSite(self, "PX", self.make(_minimize([(1, 0)])), "invert Y", self._dvr_x),
                PrimeSite(self, "PY", self.make(_minimize([(0, 1)])), "invert X", self._dvr_y),
                PrimeSite(self, "M", self.make(_minimize([(1, 0), (0, 1)])), "identity (local at M)", self),
            ]
        )

    # shape: sorted tuple of pairwise-incomparable generator pairs

    def _d_shape(self):
        return ((0, 0),)

    def _piece_shape(self, piece):
        if (
            isinstance(piece, tuple)
            and len(piece) == 2
            and all(isinstance(x, int) for x in piece)
        ):
            return (piece,)
        raise RawOutsideFamily(f"staircase generator must be an integer pair: {piece!r}")

    def _is_fg(self, shape):
        return True

    def _is_fractional(self, shape):
        return True

    def member(self, shape, point) -> bool:
        return any(g[0] <= point[0] and g[1] <= point[1] for g in shape)

    def _add(self, a, b):
        return _minimize(a + b)

    def _mul(self, a, b):
        return _minimize(tuple((g[0] + h[0], g[1] + h[1]) for g in a for h in b))

    def _intersect(self, a, b):
        return _minimize(
            tuple((max(g[0], h[0]), max(g[1], h[1])) for g in a for h in b)
        )

    def _colon(self, a, b):
        out = None
        for h in b:
            translated = tuple((g[0] - h[0], g[1] - h[1]) for g in a)
            out = translated if out is None else self._intersect(out, translated)
        return _minimize(out)

    def _leq(self, a, b):
        return all(self.member(b, g) for g in a)

    def _scale(self, shape, value):
        u, v = value
        return tuple((g[0] + u, g[1] + v) for g in shape)

    def _localize(self, shape, site):
        if site.name == "PX":
            return self._dvr_x.make(min(g[0] for g in shape))
        if site.name == "PY":
            return self._dvr_y.make(min(g[1] for g in shape))
        return self.make(shape)

    def _extend_localization(self, shape, site):
        if site.name == "M":
            return shape
        raise RawOutsideFamily(
            f"E*D_{site.name} has unbounded exponents and leaves the staircase family"
        )

    def spectral_closure(self, desc, sites):
        if desc.is_k:
            return desc
        names = {s.name for s in sites}
        if "M" in names:
            # E*D_M = E and E is contained in every other localization
            return desc
        if names == {"PX", "PY"}:
            a = min(g[0] for g in desc.shape)
            b = min(g[1] for g in desc.shape)
            return self.make(((a, b),))
        raise RawOutsideFamily(
            "spectral closure at a single height-1 monomial prime leaves the family"
        )

    def _fg_chain(self, shape, cutoff):
        return [shape]

    def _chain_for_k(self, cutoff):
        return [((-k, -k),) for k in range(cutoff)]

    def _is_principal(self, shape):
        return len(shape) == 1

    def _principal_sub(self, shape):
        return (shape[0],)

    def _shift_between(self, src, dst):
        if len(src) != len(dst):
            return None
        deltas = {(d[0] - s[0], d[1] - s[1]) for s, d in zip(src, dst)}
        return deltas.pop() if len(deltas) == 1 else None

    def format_shape(self, shape):
        if shape == K_SHAPE:
            return "K"
        return "St{" + ",".join(f"({g[0]},{g[1]})" for g in shape) + "}"

    def _probe_values(self, span):
        return [(a, b) for a in range(0, span) for b in range(0, span)]

    def _value_in(self, value, desc):
        return self.member(desc.shape, value)

    def _value_mul(self, x, y):
        return (x[0] + y[0], x[1] + y[1])
