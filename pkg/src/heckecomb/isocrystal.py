"""Newton points of GL_n, basic classes and vector bundles on the Fargues-Fontaine curve.

A class in B(GL_n) is identified with its Newton point: a weakly
decreasing vector of rationals whose partial sums are integers wherever
the slope changes (and at the end).  The bundle attached to b has slope
multiset -nu_b, so deg E_b = -kappa(b).  This is the one sign convention of
the library.

>>> b = make_newton([Fraction(3, 2), Fraction(3, 2)])
>>> newton_invariants(b).kappa
3
>>> bundle_invariants(bundle_of(b)).degree
-3
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import BlockMismatch, InvalidBundle, LengthMismatch, NonIntegralBreakpoint, NotDecreasing
from .root_data import as_levi, is_dominant


@dataclass(frozen=True)
class NewtonPoint:
    slopes: tuple

    def __post_init__(self):
        s = tuple(Fraction(x) for x in self.slopes)
        if not s:
            raise LengthMismatch("empty Newton point")
        if not is_dominant(s):
            raise NotDecreasing(f"slopes not weakly decreasing: {_show(s)}")
        total = Fraction(0)
        for i, x in enumerate(s):
            total += x
            if (i == len(s) - 1 or s[i + 1] != x) and total.denominator != 1:
                raise NonIntegralBreakpoint(f"partial sum {total} at break point {i + 1} of {_show(s)}")
        object.__setattr__(self, "slopes", s)

    @property
    def n(self) -> int:
        return len(self.slopes)

    @property
    def kappa(self) -> int:
        return int(sum(self.slopes))

    @property
    def basic(self) -> bool:
        return len(set(self.slopes)) == 1

    def __iter__(self):
        return iter(self.slopes)

    def __len__(self):
        return len(self.slopes)


def _show(s) -> str:
    return "(" + ", ".join(str(x) for x in s) + ")"


def make_newton(slopes: Iterable) -> NewtonPoint:
    return slopes if isinstance(slopes, NewtonPoint) else NewtonPoint(tuple(slopes))


def is_newton(slopes: Sequence) -> bool:
    try:
        make_newton(slopes)
    except (NotDecreasing, NonIntegralBreakpoint, LengthMismatch):
        return False
    return True


@dataclass(frozen=True)
class NewtonInvariants:
    kappa: int
    basic: bool
    hn: tuple


def newton_invariants(b) -> NewtonInvariants:
    b = make_newton(b)
    return NewtonInvariants(b.kappa, b.basic, tuple(sorted((-x for x in b.slopes), reverse=True)))


def basic_class(N: int, n: int) -> NewtonPoint:
    """The basic class of GL_n with Kottwitz invariant N."""
    if n < 1:
        raise LengthMismatch(f"rank must be positive, got {n}")
    return NewtonPoint((Fraction(N, n),) * n)


@dataclass(frozen=True)
class LeviNewtonPoint:
    """One Newton point per block of a standard Levi subgroup."""

    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(make_newton(b) for b in self.blocks))

    @property
    def parts(self) -> tuple:
        return tuple(b.n for b in self.blocks)

    def flat(self) -> tuple:
        return sum((b.slopes for b in self.blocks), ())

    def kappas(self) -> tuple:
        return tuple(b.kappa for b in self.blocks)


def make_levi_newton(blocks) -> LeviNewtonPoint:
    return blocks if isinstance(blocks, LeviNewtonPoint) else LeviNewtonPoint(tuple(blocks))


def check_blocks(bL: LeviNewtonPoint, L) -> None:
    L = as_levi(L)
    if bL.parts != L.parts:
        raise BlockMismatch(f"block sizes {bL.parts} do not match the composition {L.parts}")


def levi_embed(bL, L) -> NewtonPoint:
    """Image of a class of B(L) in B(G): concatenate the blocks and sort."""
    bL = make_levi_newton(bL)
    check_blocks(bL, L)
    return NewtonPoint(tuple(sorted(bL.flat(), reverse=True)))


# -- bundles ---------------------------------------------------------------


@dataclass(frozen=True)
class FFBundle:
    """Direct sum of O(d/h)^mult, summands (d, h, mult) with gcd(d, h) = 1, by slope descending."""

    summands: tuple

    def __post_init__(self):
        acc = Counter()
        for item in self.summands:
            try:
                d, h, mult = item
            except (TypeError, ValueError):
                raise InvalidBundle(f"summand must be (d, h, mult): {item!r}") from None
            if any(isinstance(x, bool) or not isinstance(x, int) for x in (d, h, mult)):
                raise InvalidBundle(f"summand entries must be integers: {item!r}")
            if h < 1 or mult < 1:
                raise InvalidBundle(f"rank and multiplicity must be positive: {item!r}")
            if gcd(d, h) != 1:
                raise InvalidBundle(f"degree and rank must be coprime: {item!r}")
            acc[(d, h)] += mult
        if not acc:
            raise InvalidBundle("the zero bundle is not allowed")
        ordered = sorted(acc.items(), key=lambda kv: Fraction(kv[0][0], kv[0][1]), reverse=True)
        object.__setattr__(self, "summands", tuple((d, h, m) for (d, h), m in ordered))

    @classmethod
    def from_slopes(cls, slopes: Iterable) -> "FFBundle":
        """Group a slope multiset (one entry per unit of rank) into stable summands."""
        counts = Counter(Fraction(s) for s in slopes)
        out = []
        for lam, c in counts.items():
            h = lam.denominator
            if c % h:
                raise InvalidBundle(f"slope {lam} occurs {c} times, not a multiple of {h}")
            out.append((lam.numerator, h, c // h))
        return cls(tuple(out))

    @classmethod
    def line(cls, d: int, mult: int = 1) -> "FFBundle":
        return cls(((d, 1, mult),))

    @property
    def rank(self) -> int:
        return sum(h * m for _, h, m in self.summands)

    @property
    def degree(self) -> int:
        return sum(d * m for d, _, m in self.summands)

    @property
    def slopes(self) -> tuple:
        """Slope multiset, one entry per unit of rank, descending."""
        return tuple(Fraction(d, h) for d, h, m in self.summands for _ in range(h * m))

    @property
    def semistable(self) -> bool:
        return len(self.summands) == 1

    def __str__(self):
        def one(d, h, m):
            s = f"O({d})" if h == 1 else f"O({d}/{h})"
            return s if m == 1 else f"{s}^{m}"

        return " + ".join(one(*t) for t in self.summands)


@dataclass(frozen=True)
class BundleInvariants:
    rank: int
    degree: int
    semistable: bool
    hn_polygon: tuple


def hn_polygon(E: FFBundle) -> tuple:
    """Vertices (rank, degree) of the HN polygon, slopes in decreasing order."""
    pts = [(0, 0)]
    r = deg = 0
    for d, h, m in E.summands:
        r += h * m
        deg += d * m
        pts.append((r, deg))
    return tuple(pts)


def bundle_invariants(E: FFBundle) -> BundleInvariants:
    return BundleInvariants(E.rank, E.degree, E.semistable, hn_polygon(E))


def bundle_of(b) -> FFBundle:
    """E_b, with slope multiset -nu_b."""
    return FFBundle.from_slopes(-x for x in make_newton(b).slopes)


def newton_polygon(b) -> tuple:
    """Break points (i, nu_1 + ... + nu_i) of the Newton polygon, including both ends."""
    s = make_newton(b).slopes
    pts = [(0, Fraction(0))]
    total = Fraction(0)
    for i, x in enumerate(s):
        total += x
        if i == len(s) - 1 or s[i + 1] != x:
            pts.append((i + 1, total))
    return tuple(pts)
