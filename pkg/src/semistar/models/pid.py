"""Semilocal PID with two maximal ideals (p) and (q), default Z_(2) ∩ Z_(3).

Every nonzero D-submodule of K = Q is the intersection of its two
localizations, so the shape is a pair of lower bounds (a, b) on the two
valuations, with None standing for "unbounded below".  (a, b) finite is
the principal ideal p^a q^b D; (a, None) is p^a D_(p); (None, None) is K.
Elements are rationals whose denominators avoid p and q.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import OverringNotInCatalogue, RawOutsideFamily
from .base import K_SHAPE, DomainModel, PrimeSite
from .valuation import DiscreteRank1Model


def _padic(value: Fraction, p: int) -> int:
    v = 0
    num, den = value.numerator, value.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class SemilocalPidModel(DomainModel):
    kind = "semilocal-pid"
    element_support = True

    def __init__(self, primes=(2, 3)):
        super().__init__()
        p, q = primes
        if p == q or p < 2 or q < 2:
            raise RawOutsideFamily("need two distinct primes")
        self.p, self.q = int(p), int(q)
        self.name = f"pid({self.p},{self.q})"
        self._dvr_p = DiscreteRank1Model()
        self._dvr_q = DiscreteRank1Model()
        self._register_primes(
            [
                PrimeSite(self, f"P{self.p}", self.make((1, 0)), f"invert complement of ({self.p})", self._dvr_p),
                PrimeSite(self, f"P{self.q}", self.make((0, 1)), f"invert complement of ({self.q})", self._dvr_q),
            ]
        )

    def make(self, shape):
        if shape == (None, None):
            shape = K_SHAPE
        return super().make(shape)

    def _d_shape(self):
        return (0, 0)

    def _piece_shape(self, piece):
        if isinstance(piece, tuple) and len(piece) == 2:
            a, b = piece
            if (a is None or isinstance(a, int)) and (b is None or isinstance(b, int)):
                return (a, b)
        raise RawOutsideFamily(f"PID generator must be an exponent pair: {piece!r}")

    def _is_fg(self, shape):
        return shape[0] is not None and shape[1] is not None

    def _is_fractional(self, shape):
        return self._is_fg(shape)

    @staticmethod
    def _min(x, y):
        if x is None or y is None:
            return None
        return min(x, y)

    @staticmethod
    def _max(x, y):
        if x is None:
            return y
        if y is None:
            return x
        return max(x, y)

    def _add(self, a, b):
        return (self._min(a[0], b[0]), self._min(a[1], b[1]))

    def _intersect(self, a, b):
        return (self._max(a[0], b[0]), self._max(a[1], b[1]))

    def _mul(self, a, b):
        x = None if (a[0] is None or b[0] is None) else a[0] + b[0]
        y = None if (a[1] is None or b[1] is None) else a[1] + b[1]
        return (x, y)

    def _colon(self, a, b):
        out = []
        for t, s in zip(a, b):
            if t is None:
                out.append(None)
            elif s is None:
                return None  # zero module: source unbounded, target bounded
            else:
                out.append(t - s)
        return tuple(out)

    @staticmethod
    def _coord_leq(x, y) -> bool:
        # lower bound x is at least as strong as y (None = -oo)
        if y is None:
            return True
        return x is not None and x >= y

    def _leq(self, a, b):
        return self._coord_leq(a[0], b[0]) and self._coord_leq(a[1], b[1])

    def _scale(self, shape, value):
        e, f = value
        x = None if shape[0] is None else shape[0] + e
        y = None if shape[1] is None else shape[1] + f
        return (x, y)

    def _localize(self, shape, site):
        model = site.localized_model
        n = shape[0] if site.name == f"P{self.p}" else shape[1]
        return model.K() if n is None else model.make(n)

    def _extend_localization(self, shape, site):
        if site.name == f"P{self.p}":
            return (shape[0], None)
        return (None, shape[1])

    def _fg_chain(self, shape, cutoff):
        a, b = shape
        if a is None and b is None:
            return self._chain_for_k(cutoff)
        if a is None:
            return [(-k, b) for k in range(cutoff)]
        return [(a, -k) for k in range(cutoff)]

    def _chain_for_k(self, cutoff):
        return [(-k, -k) for k in range(cutoff)]

    def ft_limit(self, closures, chain, desc):
        firsts, seconds = [], []
        for c in closures:
            if c.is_k:
                return None
            firsts.append(c.shape[0])
            seconds.append(c.shape[1])

        def settle(seq):
            if len(set(seq)) == 1:
                return seq[0], True
            if None in seq:
                return None, False
            if all(x > y for x, y in zip(seq, seq[1:])):
                return None, True
            return None, False

        x, okx = settle(firsts)
        y, oky = settle(seconds)
        if okx and oky:
            return self.make((x, y))
        return None

    def _is_principal(self, shape):
        return self._is_fg(shape)

    def _principal_sub(self, shape):
        return (shape[0] if shape[0] is not None else 0, shape[1] if shape[1] is not None else 0)

    def _shift_between(self, src, dst):
        out = []
        for s, d in zip(src, dst):
            if (s is None) != (d is None):
                return None
            out.append(0 if s is None else d - s)
        return tuple(out)

    def overring_model(self, t):
        if t == self.D():
            ident = lambda d: d
            return self, ident, ident
        for site, spot in ((self.primes[0], 0), (self.primes[1], 1)):
            if t == self.extend_localization(self.D(), site):
                dvr = site.localized_model

                def embed(d, spot=spot):
                    if d.is_k:
                        return self.K()
                    pair = [None, None]
                    pair[spot] = d.shape
                    return self.make(tuple(pair))

                def project(d, spot=spot):
                    if d.is_k:
                        return dvr.K()
                    if d.shape[1 - spot] is not None:
                        raise RawOutsideFamily(f"{d!r} is not a module over the localization")
                    return dvr.make(d.shape[spot])

                return dvr, embed, project
        raise OverringNotInCatalogue(f"no catalogue model for {t!r}")

    def format_shape(self, shape):
        if shape == K_SHAPE:
            return "K"

        def part(base, e):
            return f"{base}^{'-oo' if e is None else e}"

        return f"({part(self.p, shape[0])} {part(self.q, shape[1])})"

    def _probe_values(self, span):
        return [(e, f) for e in range(0, span) for f in range(0, span)]

    def _value_in(self, value, desc):
        return self._coord_leq(value[0], desc.shape[0]) and self._coord_leq(value[1], desc.shape[1])

    def _value_mul(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    # -- elements: rationals with denominator prime to p*q -----------

    def element(self, value) -> Fraction:
        x = Fraction(value)
        if x == 0:
            raise RawOutsideFamily("zero is not an element value")
        return x

    def element_valuations(self, x: Fraction):
        return (_padic(x, self.p), _padic(x, self.q))

    def element_in_ideal(self, x: Fraction, desc) -> bool:
        if desc.is_k:
            return True
        return self._value_in(self.element_valuations(x), desc)

    def element_principal(self, x: Fraction):
        if x == 0:
            raise RawOutsideFamily("zero element")
        return self.make(self.element_valuations(x))

    def element_is_integral(self, x: Fraction) -> bool:
        v = self.element_valuations(x)
        return v[0] >= 0 and v[1] >= 0

    def format_element(self, x: Fraction) -> str:
        return str(x)
