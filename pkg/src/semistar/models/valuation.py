"""Valuation domains: rank-1 discrete, rank-1 dense (value group Q), rank-2 lex.

In a valuation domain every nonzero D-submodule of K is determined by its
upward-closed set of values, so descriptors are cuts of the value group:

* rank-1 discrete: {v >= n}, n in Z (a DVR; every cut is principal);
* rank-1 dense:    {v >= q} or {v > q}, q in Q (open cuts are not f.g.);
* rank-2 lex:      C(a,b) = {v >=_lex (a,b)} (principal) or
                   Row(a) = {v1 >= a} (not f.g.), values in Z x Z ordered
                   lexicographically.

Cuts are totally ordered, so add/intersect are lattice join/meet, and
mul/colon follow from value arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import RawOutsideFamily
from .base import K_SHAPE, DomainModel, PrimeSite


class DiscreteRank1Model(DomainModel):
    """DVR with value group Z; shape is the integer boundary n of {v >= n}."""

    kind = "valuation-rank1-discrete"
    name = "dvr"

    def __init__(self):
        super().__init__()
        self._register_primes(
            [PrimeSite(self, "M", self.make(1), "identity (local at M)", self)]
        )

    def _d_shape(self):
        return 0

    def _piece_shape(self, piece):
        if isinstance(piece, bool) or not isinstance(piece, int):
            raise RawOutsideFamily(f"DVR generator must be an integer value: {piece!r}")
        return piece

    def _is_fg(self, shape):
        return True

    def _is_fractional(self, shape):
        return True

    def _add(self, a, b):
        return min(a, b)

    def _mul(self, a, b):
        return a + b

    def _intersect(self, a, b):
        return max(a, b)

    def _colon(self, a, b):
        return a - b

    def _leq(self, a, b):
        return a >= b

    def _scale(self, shape, value):
        return shape + value

    def _localize(self, shape, site):
        return self.make(shape)

    def _extend_localization(self, shape, site):
        return shape

    def _fg_chain(self, shape, cutoff):
        return [shape]

    def _chain_for_k(self, cutoff):
        return [-k for k in range(cutoff)]

    def _is_principal(self, shape):
        return True

    def _principal_sub(self, shape):
        return shape

    def _shift_between(self, src, dst):
        return dst - src

    def format_shape(self, shape):
        if shape == K_SHAPE:
            return "K"
        return f"Seg(>={shape})"

    def _probe_values(self, span):
        return list(range(0, span))

    def _value_in(self, value, desc):
        return value >= desc.shape

    def _value_mul(self, x, y):
        return x + y


class DenseRank1Model(DomainModel):
    """Rank-1 valuation domain with dense value group Q.

    Shape is (q, closed) for {v >= q} (closed) or {v > q} (open); open
    cuts are exactly the non-finitely-generated submodules.
    """

    kind = "valuation-rank1-dense"
    name = "dense"

    def __init__(self):
        super().__init__()
        self._register_primes(
            [PrimeSite(self, "M", self.make((Fraction(0), False)), "identity (local at M)", self)]
        )

    def _d_shape(self):
        return (Fraction(0), True)

    def _piece_shape(self, piece):
        if isinstance(piece, tuple) and len(piece) == 2:
            q, closed = piece
            return (Fraction(q), bool(closed))
        try:
            return (Fraction(piece), True)
        except (TypeError, ValueError):
            raise RawOutsideFamily(f"dense-model generator must be a rational value: {piece!r}")

    def _is_fg(self, shape):
        return shape[1]

    def _is_fractional(self, shape):
        return True

    def _contains(self, a, b) -> bool:
        """Module a contains module b (smaller cut contains larger)."""
        (qa, ca), (qb, cb) = a, b
        if qa != qb:
            return qa < qb
        return ca or not cb

    def _add(self, a, b):
        return a if self._contains(a, b) else b

    def _intersect(self, a, b):
        return b if self._contains(a, b) else a

    def _mul(self, a, b):
        return (a[0] + b[0], a[1] and b[1])

    def _colon(self, a, b):
        # open only when the target is open and the source is closed
        return (a[0] - b[0], not (not a[1] and b[1]))

    def _leq(self, a, b):
        return self._contains(b, a)

    def _scale(self, shape, value):
        return (shape[0] + Fraction(value), shape[1])

    def _localize(self, shape, site):
        return self.make(shape)

    def _extend_localization(self, shape, site):
        return shape

    def _fg_chain(self, shape, cutoff):
        q = shape[0]
        return [(q + Fraction(1, 2**k), True) for k in range(cutoff)]

    def _chain_for_k(self, cutoff):
        return [(Fraction(-k), True) for k in range(cutoff)]

    def ft_limit(self, closures, chain, desc):
        # Principal chain boundaries fall strictly to q; if the closure
        # boundaries track them at a constant offset, the union is the
        # open cut at q + offset.
        offsets = set()
        for c, j in zip(closures, chain):
            if c.is_k or j.is_k:
                return None
            offsets.add(c.shape[0] - j.shape[0])
        if len(offsets) == 1 and not desc.is_k:
            return self.make((desc.shape[0] + offsets.pop(), False))
        return None

    def _is_principal(self, shape):
        return shape[1]

    def _principal_sub(self, shape):
        q, closed = shape
        return shape if closed else (q + 1, True)

    def _shift_between(self, src, dst):
        if src[1] != dst[1]:
            return None
        return dst[0] - src[0]

    def format_shape(self, shape):
        if shape == K_SHAPE:
            return "K"
        q, closed = shape
        return f"Seg({'>=' if closed else '>'}{q})"

    def _probe_values(self, span):
        return [Fraction(n, 2) for n in range(0, 2 * span)]

    def _value_in(self, value, desc):
        q, closed = desc.shape
        return value >= q if closed else value > q

    def _value_mul(self, x, y):
        return x + y


class Rank2LexModel(DomainModel):
    """Rank-2 valuation domain, value group Z x Z with lex order.

    Shapes: ("C", a, b) for {v >= (a,b)} and ("Row", a) for {v1 >= a}.
    Primes: the height-1 prime P = Row(1) (localization coarsens the
    value group to its first coordinate) and the maximal M = C(0,1).
    """

    kind = "valuation-rank2-lex"
    name = "rank2"

    def __init__(self):
        super().__init__()
        self.residue_dvr = DiscreteRank1Model()
        self._register_primes(
            [
                PrimeSite(self, "P", self.make(("Row", 1)), "coarsen to first coordinate", self.residue_dvr),
                PrimeSite(self, "M", self.make(("C", 0, 1)), "identity (local at M)", self),
            ]
        )

    def _d_shape(self):
        return ("C", 0, 0)

    def _piece_shape(self, piece):
        if isinstance(piece, tuple):
            if len(piece) == 2 and all(isinstance(x, int) for x in piece):
                return ("C", piece[0], piece[1])
            if len(piece) == 3 and piece[0] in ("C", "Row"):
                return piece
            if len(piece) == 2 and piece[0] == "Row":
                return piece
        raise RawOutsideFamily(f"rank-2 generator must be a value pair: {piece!r}")

    def _is_fg(self, shape):
        return shape[0] == "C"

    def _is_fractional(self, shape):
        return True

    def _contains(self, a, b) -> bool:
        """Module a contains module b."""
        if a[0] == "C" and b[0] == "C":
            return (a[1], a[2]) <= (b[1], b[2])
        if a[0] == "C" and b[0] == "Row":
            return b[1] >= a[1] + 1
        if a[0] == "Row" and b[0] == "C":
            return b[1] >= a[1]
        return a[1] <= b[1]

    def _add(self, a, b):
        return a if self._contains(a, b) else b

    def _intersect(self, a, b):
        return b if self._contains(a, b) else a

    def _mul(self, a, b):
        if a[0] == "C" and b[0] == "C":
            return ("C", a[1] + b[1], a[2] + b[2])
        return ("Row", a[1] + b[1])

    def _colon(self, a, b):
        if a[0] == "C":
            if b[0] == "C":
                return ("C", a[1] - b[1], a[2] - b[2])
            # rows have values unbounded below in the second coordinate
            return ("Row", a[1] - b[1] + 1)
        return ("Row", a[1] - b[1])

    def _leq(self, a, b):
        return self._contains(b, a)

    def _scale(self, shape, value):
        x, y = value
        if shape[0] == "C":
            return ("C", shape[1] + x, shape[2] + y)
        return ("Row", shape[1] + x)

    def _localize(self, shape, site):
        if site.name == "P":
            return self.residue_dvr.make(shape[1])
        return self.make(shape)

    def _extend_localization(self, shape, site):
        if site.name == "P":
            return ("Row", shape[1])
        return shape

    def _fg_chain(self, shape, cutoff):
        a = shape[1]
        return [("C", a, -k) for k in range(cutoff)]

    def _chain_for_k(self, cutoff):
        return [("C", -k, 0) for k in range(cutoff)]

    def ft_limit(self, closures, chain, desc):
        firsts = set()
        seconds = []
        for c in closures:
            if c.is_k or c.shape[0] != "C":
                return None
            firsts.add(c.shape[1])
            seconds.append(c.shape[2])
        if len(firsts) == 1 and all(x > y for x, y in zip(seconds, seconds[1:])):
            return self.make(("Row", firsts.pop()))
        return None

    def _is_principal(self, shape):
        return shape[0] == "C"

    def _principal_sub(self, shape):
        if shape[0] == "C":
            return shape
        return ("C", shape[1], 0)

    def _shift_between(self, src, dst):
        if src[0] != dst[0]:
            return None
        if src[0] == "C":
            return (dst[1] - src[1], dst[2] - src[2])
        return (dst[1] - src[1], 0)

    def overring_model(self, t):
        if t == self.D():
            ident = lambda d: d
            return self, ident, ident
        if t.shape == ("Row", 0):
            dvr = self.residue_dvr

            def embed(d):
                return self.K() if d.is_k else self.make(("Row", d.shape))

            def project(d):
                if d.is_k:
                    return dvr.K()
                if d.shape[0] != "Row":
                    raise RawOutsideFamily(f"{d!r} is not a module over D_P")
                return dvr.make(d.shape[1])

            return dvr, embed, project
        from ..errors import OverringNotInCatalogue

        raise OverringNotInCatalogue(f"no catalogue model for {t!r}")

    def format_shape(self, shape):
        if shape == K_SHAPE:
            return "K"
        if shape[0] == "C":
            return f"C({shape[1]},{shape[2]})"
        return f"Row({shape[1]})"

    def _probe_values(self, span):
        # integral values only: (a,b) >=_lex (0,0)
        return [
            (a, b)
            for a in range(0, span)
            for b in range(-span, span)
            if a > 0 or b >= 0
        ]

    def _value_in(self, value, desc):
        s = desc.shape
        if s[0] == "C":
            return value >= (s[1], s[2])
        return value[0] >= s[1]

    def _value_mul(self, x, y):
        return (x[0] + y[0], x[1] + y[1])
