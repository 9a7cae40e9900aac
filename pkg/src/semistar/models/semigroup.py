"""Power-series ring of a numerical semigroup, with monomial relative ideals.

D = F[[X^s : s in S]] for a numerical semigroup S = <g1,...,gk> with
gcd 1 over a symbolic coefficient field F.  Monomial D-submodules of
K = F((X)) correspond to relative ideals of S: subsets E of Z with
E + S <= E, bounded below.  The descriptor is the (unique) minimal
generating set of E under the S-action.  The conductor c of S makes
everything finite: E contains [min E + c, oo) and all minimal
generators lie in [min E, min E + c).
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import RawOutsideFamily
from .base import K_SHAPE, DomainModel, PrimeSite


class NumericalSemigroup:
    """<g1,...,gk> with gcd 1; conductor computed at construction."""

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise RawOutsideFamily("semigroup generators must be positive")
        if math.gcd(*gens) != 1:
            raise RawOutsideFamily("semigroup generators must have gcd 1")
        self.generators = tuple(gens)
        bound = (gens[0] - 1) * (gens[-1] - 1) + gens[-1] + 1
        member = [False] * (bound + 1)
        member[0] = True
        for n in range(1, bound + 1):
            member[n] = any(n >= g and member[n - g] for g in gens)
        conductor = 0
        for n in range(bound, -1, -1):
            if not member[n]:
                conductor = n + 1
                break
        self.conductor = conductor
        self._small = frozenset(n for n in range(conductor + 1) if member[n])
        # positive elements up to the conductor; enough to detect redundancy
        self.positive_steps = tuple(
            n for n in range(1, max(conductor, gens[0]) + 1) if self.contains(n)
        )

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.conductor or n in self._small

    def __repr__(self):
        return "<" + ",".join(str(g) for g in self.generators) + ">"


class SemigroupRingModel(DomainModel):
    kind = "semigroup"
    element_support = True

    def __init__(self, generators=(3, 4, 5)):
        super().__init__()
        self.semigroup = NumericalSemigroup(generators)
        self.name = "semigroup" + repr(self.semigroup)
        m = self.make(tuple(self.semigroup.generators))
        self._register_primes(
            [PrimeSite(self, "M", m, "identity (local at M)", self)]
        )

    # -- shapes: sorted tuples of minimal generators ----------------

    def _d_shape(self):
        return (0,)

    def _piece_shape(self, piece):
        if isinstance(piece, bool) or not isinstance(piece, int):
            raise RawOutsideFamily(f"semigroup generator must be an integer: {piece!r}")
        return (piece,)

    def _is_fg(self, shape) -> bool:
        return True

    def _is_fractional(self, shape) -> bool:
        return True

    def member(self, shape, n: int) -> bool:
        """n in the relative ideal with the given minimal generators."""
        S = self.semigroup
        return any(S.contains(n - g) for g in shape)

    def _canonical(self, mem, lo: int):
        """Minimal generators of a relative ideal given its membership test.

        `lo` is a lower bound for the minimum; the ideal is guaranteed
        nonempty within [lo, lo + conductor].
        """
        S = self.semigroup
        c = S.conductor
        m = None
        n = lo
        while m is None:
            for k in range(n, n + c + 1):
                if mem(k):
                    m = k
                    break
            n += c + 1
            if n > lo + 10 * (c + 1) + 10:
                raise RawOutsideFamily("relative ideal appears empty")
        gens = []
        for k in range(m, m + max(c, 1)):
            if mem(k) and not any(s <= k - m and mem(k - s) for s in S.positive_steps):
                gens.append(k)
        if not gens:
            gens = [m]
        return tuple(gens)

    def _add(self, a, b):
        merged = tuple(sorted(set(a) | set(b)))
        return self._canonical(lambda n: self.member(merged, n), min(merged))

    def _mul(self, a, b):
        prods = tuple(sorted({i + j for i in a for j in b}))
        return self._canonical(lambda n: self.member(prods, n), min(prods))

    def _intersect(self, a, b):
        lo = max(min(a), min(b))
        return self._canonical(
            lambda n: self.member(a, n) and self.member(b, n), lo
        )

    def _colon(self, a, b):
        # z X^n * B <= A iff n + g in A for every generator g of B
        # (S-closedness of A absorbs the rest of B).
        lo = min(a) - min(b)
        return self._canonical(
            lambda n: all(self.member(a, n + g) for g in b), lo
        )

    def _leq(self, a, b) -> bool:
        return all(self.member(b, g) for g in a)

    def _scale(self, shape, value: int):
        return tuple(g + value for g in shape)

    def _localize(self, shape, site):
        return self.make(shape)

    def _extend_localization(self, shape, site):
        return shape

    def _fg_chain(self, shape, cutoff):
        return [shape]

    def _chain_for_k(self, cutoff):
        g = self.semigroup.generators[0]
        return [(-k * g,) for k in range(cutoff)]

    def _is_principal(self, shape) -> bool:
        return len(shape) == 1

    def _principal_sub(self, shape):
        return (shape[0],)

    def _shift_between(self, src, dst):
        if len(src) != len(dst):
            return None
        deltas = {d - s for s, d in zip(src, dst)}
        return deltas.pop() if len(deltas) == 1 else None

    def format_shape(self, shape) -> str:
        if shape == K_SHAPE:
            return "K"
        return "Id{" + ",".join(str(g) for g in shape) + "}"

    def overring_model(self, t):
        if t == self.D():
            ident = lambda d: d
            return self, ident, ident
        # monomial overrings are the numerical semigroups containing S
        if min(t.shape) != 0:
            from ..errors import OverringNotInCatalogue

            raise OverringNotInCatalogue(f"{t!r} is not a monomial overring")
        mem = lambda n: self.member(t.shape, n) or n == 0
        m0 = min(n for n in range(1, self.semigroup.conductor + 2) if mem(n))
        bound = self.semigroup.conductor + m0 + max(t.shape) + 2
        monoid_gens = [
            n
            for n in range(1, bound)
            if mem(n) and not any(mem(k) and mem(n - k) for k in range(1, n))
        ]
        sub = make_semigroup_model(tuple(monoid_gens))

        def embed(d):
            if d.is_k:
                return self.K()
            return self.make(
                self._canonical(lambda n: sub.member(d.shape, n), min(d.shape))
            )

        def project(d):
            if d.is_k:
                return sub.K()
            for g in d.shape:
                for s in sub.semigroup.generators:
                    if not self.member(d.shape, g + s):
                        raise RawOutsideFamily(f"{d!r} is not a module over {sub.name}")
            return sub.make(
                sub._canonical(lambda n: self.member(d.shape, n), min(d.shape))
            )

        return sub, embed, project

    def _probe_values(self, span: int):
        return [n for n in range(0, self.semigroup.conductor + span) if self.semigroup.contains(n)]

    def _value_in(self, value, desc) -> bool:
        return self.member(desc.shape, value)

    def _value_mul(self, x, y):
        return x + y

    # -- elements: finite monomial sums  c * X^e ---------------------

    def element(self, terms) -> dict[int, Fraction]:
        """Element of K as {exponent: coefficient}, coefficients in Q."""
        out: dict[int, Fraction] = {}
        for e, c in terms:
            c = Fraction(c)
            if c:
                out[int(e)] = out.get(int(e), Fraction(0)) + c
        return {e: c for e, c in out.items() if c}

    def element_mul(self, f: dict, g: dict) -> dict:
        out: dict[int, Fraction] = {}
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return {e: c for e, c in out.items() if c}

    def element_in_ideal(self, elem: dict, desc) -> bool:
        """Support containment: monomial modules are support-closed."""
        return all(self.member(desc.shape, e) for e in elem)

    def element_principal(self, elem: dict):
        """Principal descriptor of a single-monomial element."""
        if len(elem) != 1:
            raise RawOutsideFamily(
                "principal ideal of a multi-monomial element is not monomial"
            )
        (e,) = elem.keys()
        return self.make((e,))

    def element_is_integral(self, elem: dict) -> bool:
        return all(self.semigroup.contains(e) for e in elem)

    def format_element(self, elem: dict) -> str:
        parts = []
        for e in sorted(elem):
            c = elem[e]
            parts.append(f"X^{e}" if c == 1 else f"{c}*X^{e}")
        return " + ".join(parts) if parts else "0"


_SEMIGROUP_CACHE: dict[tuple, SemigroupRingModel] = {}


def make_semigroup_model(generators) -> SemigroupRingModel:
    key = tuple(sorted(set(int(g) for g in generators)))
    model = _SEMIGROUP_CACHE.get(key)
    if model is None:
        model = SemigroupRingModel(key)
        _SEMIGROUP_CACHE[key] = model
    return model
