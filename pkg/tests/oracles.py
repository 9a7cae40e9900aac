"""Independent brute-force oracles used to validate model arithmetic.

Each oracle recomputes an operation from first principles (element or
value semantics on a bounded window) without touching the production
shape rules, and reports results in a form comparable to descriptors.
"""

from __future__ import annotations

import math
from fractions import Fraction


# -- numerical semigroup oracle (membership sets on the spec window) ----


class SemigroupOracle:
    """Relative-ideal arithmetic via explicit membership sets.

    Window rule: computations run on [m - 2c, m + 2c + g_max] around the
    relevant minimum m; beyond the window relative ideals are eventually
    full, with threshold max(raw) + c.
    """

    def __init__(self, generators):
        gens = sorted(set(generators))
        self.gens = gens
        bound = (gens[0] - 1) * (gens[-1] - 1) + 2 * gens[-1] + 2
        member = [False] * (bound + 1)
        member[0] = True
        for n in range(1, bound + 1):
            member[n] = any(n >= g and member[n - g] for g in gens)
        self.sg_members = [n for n in range(bound + 1) if member[n]]
        self.conductor = max(
            (n + 1 for n in range(bound + 1) if not member[n]), default=0
        )

    def ideal_set(self, raw, hi):
        out = set()
        for g in raw:
            for s in self.sg_members:
                if g + s <= hi:
                    out.add(g + s)
            # eventual fullness
            for n in range(max(g, g + self.conductor), hi + 1):
                out.add(n)
        return out

    def window(self, raw):
        c, g = self.conductor, self.gens[-1]
        return min(raw) - 2 * c, min(raw) + 2 * c + g

    def min_gens(self, members, lo, hi):
        pos = [s for s in self.sg_members if 0 < s <= hi - lo]
        return sorted(
            n
            for n in members
            if not any(n - s in members for s in pos if n - s >= lo)
        )

    def add(self, raw_a, raw_b):
        lo, hi = self.window(list(raw_a) + list(raw_b))
        hi += max(self.gens)
        members = self.ideal_set(raw_a, hi) | self.ideal_set(raw_b, hi)
        return self.min_gens(members, lo, hi - max(self.gens))

    def mul(self, raw_a, raw_b):
        raw = [a + b for a in raw_a for b in raw_b]
        lo, hi = self.window(raw)
        hi2 = hi + max(raw_a) + max(raw_b) + self.conductor
        sa = self.ideal_set(raw_a, hi2)
        sb = self.ideal_set(raw_b, hi2)
        members = {a + b for a in sa for b in sb if lo <= a + b <= hi}
        return self.min_gens(members, lo, hi - max(self.gens))

    def intersect(self, raw_a, raw_b):
        lo = max(min(raw_a), min(raw_b)) - 1
        hi = max(max(raw_a), max(raw_b)) + 3 * self.conductor + 2 * max(self.gens)
        members = self.ideal_set(raw_a, hi) & self.ideal_set(raw_b, hi)
        members = {n for n in members if n >= lo}
        return self.min_gens(members, lo, hi - max(self.gens))

    def colon(self, raw_a, raw_b):
        lo = min(raw_a) - max(raw_b) - 2 * self.conductor - 2
        full_a = max(raw_a) + self.conductor
        hi = min(raw_a) + 2 * self.conductor + max(self.gens) + 2
        hi2 = full_a + hi + max(raw_b) + 2
        sa = self.ideal_set(raw_a, hi2)
        sb = [b for b in self.ideal_set(raw_b, hi2 - lo)]
        members = set()
        for n in range(lo, hi + 1):
            if all((n + b in sa) or (n + b > hi2) for b in sb):
                members.add(n)
        return self.min_gens(members, lo, hi - max(self.gens))

    def member(self, raw, n):
        hi = max(n, max(raw)) + self.conductor + 1
        return n in self.ideal_set(raw, hi)


# -- staircase oracle (explicit point sets on a box) ---------------------


class StaircaseOracle:
    def __init__(self, box=28):
        self.box = box

    def upward(self, raw):
        b = self.box
        return {
            (x, y)
            for g in raw
            for x in range(g[0], b + 1)
            for y in range(g[1], b + 1)
            if x >= -b and y >= -b
        }

    def antichain(self, points):
        return sorted(
            p
            for p in points
            if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in points)
        )

    def add(self, ra, rb):
        return self.antichain(self.upward(ra) | self.upward(rb))

    def mul(self, ra, rb):
        pts = {(a[0] + b[0], a[1] + b[1]) for a in self.upward(ra) for b in self.upward(rb)}
        return self.antichain({p for p in pts if abs(p[0]) <= self.box and abs(p[1]) <= self.box})

    def intersect(self, ra, rb):
        return self.antichain(self.upward(ra) & self.upward(rb))

    def colon(self, ra, rb):
        # quantifying over B-points inside a box containing all B
        # generators suffices: every other point dominates one of them
        lo = min(min(g) for g in rb) - 1
        hi = max(max(g) for g in rb) + 2
        bpts = [
            (x, y)
            for x in range(lo, hi + 1)
            for y in range(lo, hi + 1)
            if any(g[0] <= x and g[1] <= y for g in rb)
        ]

        def mem_a(p):
            return any(g[0] <= p[0] and g[1] <= p[1] for g in ra)

        b = self.box // 2
        out = set()
        for x in range(-b, b + 1):
            for y in range(-b, b + 1):
                if all(mem_a((x + q[0], y + q[1])) for q in bpts):
                    out.add((x, y))
        return self.antichain(out)


# -- value-semantics oracle for the valuation-style models ---------------


def lex_ge(u, v):
    return u[0] > v[0] or (u[0] == v[0] and u[1] >= v[1])


class Rank2Oracle:
    """Final segments of Z x Z (lex) tested pointwise on a box."""

    def __init__(self, box=20):
        self.box = box
        self.grid = [
            (a, b) for a in range(-box, box + 1) for b in range(-box, box + 1)
        ]

    @staticmethod
    def member(shape, v):
        if shape[0] == "C":
            return lex_ge(v, (shape[1], shape[2]))
        return v[0] >= shape[1]

    def test_values(self, span=6):
        return [
            (a, b) for a in range(-span, span + 1) for b in (-self.box, -3, -1, 0, 1, 3, self.box)
        ]

    def mul_member(self, sa, sb, v):
        b = self.box
        for x1 in range(-b, b + 1):
            for y1 in range(-b, b + 1):
                u = (x1, y1)
                w = (v[0] - x1, v[1] - y1)
                if abs(w[0]) > b or abs(w[1]) > b:
                    continue
                if self.member(sa, u) and self.member(sb, w):
                    return True
        return False

    def colon_member(self, sa, sb, z):
        for y in self.grid:
            if self.member(sb, y):
                if not self.member(sa, (z[0] + y[0], z[1] + y[1])):
                    return False
        return True


class PidOracle:
    """Valuation-pair semantics for the semilocal PID."""

    def __init__(self, p=2, q=3, box=20):
        self.p, self.q, self.box = p, q, box

    @staticmethod
    def vp(x: Fraction, p: int) -> int:
        v, num, den = 0, x.numerator, x.denominator
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        return v

    def member(self, shape, val):
        a, b = shape
        return (a is None or val[0] >= a) and (b is None or val[1] >= b)

    def test_values(self, span=6):
        lows = (-self.box, -3, -1, 0, 1, 3, self.box)
        return [(a, b) for a in lows for b in lows] + [
            (a, b) for a in range(-span, span + 1) for b in range(-span, span + 1)
        ]

    def mul_member(self, sa, sb, v):
        b = self.box
        for x1 in range(-b, b + 1):
            for y1 in range(-b, b + 1):
                u, w = (x1, y1), (v[0] - x1, v[1] - y1)
                if abs(w[0]) > b or abs(w[1]) > b:
                    continue
                if self.member(sa, u) and self.member(sb, w):
                    return True
        return False

    def colon_member(self, sa, sb, z):
        b = self.box
        for x in range(-b, b + 1):
            for y in range(-b, b + 1):
                if self.member(sb, (x, y)) and not self.member(sa, (z[0] + x, z[1] + y)):
                    return False
        return True


class DenseOracle:
    """Rational-cut semantics on a 1/16 grid."""

    GRID = [Fraction(n, 16) for n in range(-16 * 12, 16 * 12 + 1)]

    @staticmethod
    def member(shape, v: Fraction):
        q, closed = shape
        return v >= q if closed else v > q

    def test_values(self):
        return [Fraction(n, 4) for n in range(-4 * 10, 4 * 10 + 1)]

    def mul_member(self, sa, sb, v):
        return any(
            self.member(sa, x) and self.member(sb, v - x)
            for x in self.GRID
            if abs(v - x) <= 12
        )

    def colon_member(self, sa, sb, z):
        return all(
            self.member(sa, z + y) for y in self.GRID if self.member(sb, y)
        )


# -- PVD oracle: exact linear algebra over GF(2) for k=F2 in K=F4 --------
#
# The operation table of the monomial tier lattice does not depend on the
# index [K:k] being infinite, so a finite proper extension gives an exact
# oracle: modules X^n D and X^n V become F2-subspaces of truncated
# F4-series, and sum/product/colon/intersection are computed by explicit
# linear algebra over F2 (bitmask rows).

F4_MUL = {}  # elements 0,1,2,3 with 2=w, 3=w+1=w^2; w^2 = w+1
for _a in range(4):
    for _b in range(4):
        def _tobits(e):
            return (e & 1, e >> 1)

        a0, a1 = _tobits(_a)
        b0, b1 = _tobits(_b)
        # (a0 + a1 w)(b0 + b1 w) = a0b0 + (a0b1+a1b0) w + a1b1 w^2
        c0 = (a0 & b0) ^ (a1 & b1)
        c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1)
        F4_MUL[(_a, _b)] = c0 | (c1 << 1)


class PvdOracle:
    """Window of exponents [lo, hi]; vectors are bitmasks with two F2
    coordinates (the 1- and w-components) per exponent."""

    def __init__(self, lo=-6, hi=9):
        self.lo, self.hi = lo, hi
        self.dim = 2 * (hi - lo + 1)

    def _bitpos(self, exp, comp):
        return 2 * (exp - self.lo) + comp

    def series_mul(self, u: int, v: int) -> int:
        out = 0
        for e1 in range(self.lo, self.hi + 1):
            c1 = ((u >> self._bitpos(e1, 0)) & 1) | (((u >> self._bitpos(e1, 1)) & 1) << 1)
            if not c1:
                continue
            for e2 in range(self.lo, self.hi + 1):
                if e1 + e2 > self.hi or e1 + e2 < self.lo:
                    continue
                c2 = ((v >> self._bitpos(e2, 0)) & 1) | (((v >> self._bitpos(e2, 1)) & 1) << 1)
                if not c2:
                    continue
                c = F4_MUL[(c1, c2)]
                if c & 1:
                    out ^= 1 << self._bitpos(e1 + e2, 0)
                if c & 2:
                    out ^= 1 << self._bitpos(e1 + e2, 1)
        return out

    @staticmethod
    def rref(rows):
        basis = []
        for r in rows:
            for b in basis:
                r = min(r, r ^ b)
            if r:
                basis.append(r)
                basis.sort(reverse=True)
        return basis

    @staticmethod
    def in_span(basis, v):
        for b in basis:
            v = min(v, v ^ b)
        return v == 0

    def module_basis(self, shape):
        """Basis of (X^n D) or (X^n V) intersected with the window."""
        n, tier = shape
        rows = []
        start = max(n, self.lo)
        for e in range(start, self.hi + 1):
            if e == n and tier == "D":
                rows.append(1 << self._bitpos(e, 0))  # only k-multiples of X^n
            else:
                rows.append(1 << self._bitpos(e, 0))
                rows.append(1 << self._bitpos(e, 1))
        return self.rref(rows)

    def identify(self, basis):
        """Match a subspace against the family table."""
        for n in range(self.lo, self.hi + 1):
            for tier in ("V", "D"):
                cand = self.module_basis((n, tier))
                if len(cand) == len(basis) and all(self.in_span(basis, r) for r in cand):
                    return (n, tier)
        raise AssertionError("subspace is not a family member on this window")

    def add(self, sa, sb):
        return self.identify(self.rref(self.module_basis(sa) + self.module_basis(sb)))

    def mul(self, sa, sb):
        prods = [
            self.series_mul(u, v)
            for u in self.module_basis(sa)
            for v in self.module_basis(sb)
        ]
        return self.identify(self.rref([p for p in prods if p]))

    def intersect(self, sa, sb):
        # Zassenhaus: rows (u|u) for u in A, (w|0) for w in B; the
        # intersection is read off rows whose left half vanished
        ba, bb = self.module_basis(sa), self.module_basis(sb)
        width = self.dim
        rows = [(u << width) | u for u in ba] + [(w << width) for w in bb]
        basis = self.rref(rows)
        inter = [r & ((1 << width) - 1) for r in basis if (r >> width) == 0]
        return self.identify(self.rref([r for r in inter if r]))

    def colon(self, sa, sb):
        """{z in window : z*b in A for all b in B}, via linear constraints."""
        ba, bb = self.module_basis(sa), self.module_basis(sb)
        # constraint matrix: columns = window basis vectors e_j of z
        cols = []
        for j in range(self.dim):
            z = 1 << j
            stacked = 0
            for idx, b in enumerate(bb):
                prod = self.series_mul(z, b)
                # reduce modulo A; what remains must be zero
                for a in ba:
                    prod = min(prod, prod ^ a)
                stacked |= prod << (idx * self.dim)
            cols.append(stacked)
        # kernel of sum_j z_j cols[j] = 0 over F2; a combination bitmask
        # over the z-basis indices is itself the window vector
        pivots: dict[int, tuple[int, int]] = {}
        kernel = []
        for j, c in enumerate(cols):
            v, comb = c, 1 << j
            changed = True
            while changed and v:
                changed = False
                pv = v.bit_length() - 1
                if pv in pivots:
                    bv, bc = pivots[pv]
                    v ^= bv
                    comb ^= bc
                    changed = True
            if v:
                pivots[v.bit_length() - 1] = (v, comb)
            else:
                kernel.append(comb)
        return self.identify(self.rref(kernel))
