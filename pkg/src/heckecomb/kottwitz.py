"""Twisted Kottwitz sets, HN-reducibility and the numerology of parabolic induction.

``b`` and ``bp`` are Newton points of GL_n, ``mu`` a dominant cocharacter.
b lies in B(G, mu, [bp]) when it is acceptable (nu_b - nu_bp <= mu in the
dominance order) and neutral (kappa(b) - kappa(bp) = mu_1 + ... + mu_n).

>>> [tuple(map(str, b.slopes)) for b in enumerate_bmu((0, 0), (1, 0))]
[('1/2', '1/2'), ('1', '0')]
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, floor
from typing import Optional, Sequence

from .errors import (
    LengthMismatch,
    NonIntegralDimension,
    NotDominant,
    NotLCentral,
    PreconditionFailed,
)
from .isocrystal import (
    FFBundle,
    LeviNewtonPoint,
    NewtonPoint,
    check_blocks,
    is_newton,
    make_levi_newton,
    make_newton,
)
from .root_data import (
    LeviDatum,
    as_levi,
    block_assignments,
    compositions,
    dominance_leq,
    galois_average,
    half_sums,
    is_dominant,
    l_dominant_conjugates,
    pairing,
    rho,
)


def _cocharacter(mu: Sequence) -> tuple:
    mu = tuple(mu)
    if not mu:
        raise LengthMismatch("empty cocharacter")
    if any(isinstance(x, bool) or Fraction(x).denominator != 1 for x in mu):
        raise NotDominant(f"cocharacter must be integral: {mu!r}")
    return tuple(int(x) for x in mu)


def _dominant(mu: Sequence) -> tuple:
    mu = _cocharacter(mu)
    if not is_dominant(mu):
        raise NotDominant(f"cocharacter {mu} is not dominant")
    return mu


@dataclass(frozen=True)
class BmuMembership:
    acceptable: bool
    neutral: bool

    @property
    def member(self) -> bool:
        return self.acceptable and self.neutral


def membership(b, bp, mu) -> BmuMembership:
    b, bp = make_newton(b), make_newton(bp)
    mu = _dominant(mu)
    if not (b.n == bp.n == len(mu)):
        raise LengthMismatch(f"lengths {b.n}, {bp.n}, {len(mu)} differ")
    diff = tuple(x - y for x, y in zip(b.slopes, bp.slopes))
    return BmuMembership(
        acceptable=dominance_leq(diff, galois_average(mu)),
        neutral=b.kappa - bp.kappa == sum(mu),
    )


def enumerate_bmu(bp, mu) -> list:
    """All b in B(G, mu, [bp]), sorted lexicographically (ascending).

    Every acceptable b has entries in [bp_n + mu_n, bp_1 + mu_1] and partial
    sums bounded by those of bp + mu; the search walks Newton polygons one
    maximal constant run at a time inside those bounds.
    """
    bp = make_newton(bp)
    mu = _dominant(mu)
    n = bp.n
    if len(mu) != n:
        raise LengthMismatch(f"lengths {n} and {len(mu)} differ")
    lo = bp.slopes[-1] + mu[-1]
    hi = bp.slopes[0] + mu[0]
    upper = [Fraction(0)]
    for x, y in zip(bp.slopes, mu):
        upper.append(upper[-1] + x + y)
    target = upper[-1]
    found = []

    def walk(i, prev, total, acc):
        if i == n:
            if total == target:
                found.append(tuple(acc))
            return
        for h in range(1, n - i + 1):
            d_hi = floor(hi * h)
            if prev is not None:
                d_hi = min(d_hi, ceil(prev * h) - 1)
            for d in range(ceil(lo * h), d_hi + 1):
                lam = Fraction(d, h)
                if all(total + t * lam <= upper[i + t] for t in range(1, h + 1)):
                    walk(i + h, lam, total + d, acc + [lam] * h)

    walk(0, None, Fraction(0), [])
    out = [NewtonPoint(v) for v in sorted(found)]
    return [b for b in out if membership(b, bp, mu).member]


def _blockwise_member(b0: LeviNewtonPoint, b0p: LeviNewtonPoint, mu_prime: tuple, L: LeviDatum) -> bool:
    return all(
        membership(x, y, m).member for x, y, m in zip(b0.blocks, b0p.blocks, L.split(mu_prime))
    )


def i_set(b0, b0p, mu, L) -> list:
    """L-dominant Weyl conjugates mu' of mu with b0 in B(L, mu', [b0p]) blockwise.

    Conjugates are generated once each (as distributions of the multiset of
    mu over the blocks), in decreasing lexicographic order.
    """
    L = as_levi(L)
    b0, b0p = make_levi_newton(b0), make_levi_newton(b0p)
    check_blocks(b0, L)
    check_blocks(b0p, L)
    mu = _dominant(mu)
    if len(mu) != L.n:
        raise LengthMismatch(f"cocharacter of length {len(mu)} for composition of {L.n}")
    return [m for m in l_dominant_conjugates(mu, L) if _blockwise_member(b0, b0p, m, L)]


@dataclass(frozen=True)
class HNWitness:
    levi: LeviDatum
    b0: LeviNewtonPoint
    b0p: LeviNewtonPoint
    mu_prime: tuple
    proper: bool  # L is a proper Levi subgroup
    contains_newton_centralizer: bool  # L contains the centralizer of nu_b, b0 in dominant position


def levi_lifts(b, L) -> list:
    """Classes of B(L) mapping to b: distributions of the slopes of b over the blocks.

    Each block must itself be a Newton point; decreasing lexicographic order
    of the concatenated blocks.
    """
    b = make_newton(b)
    L = as_levi(L)
    return [
        LeviNewtonPoint(blocks)
        for blocks in block_assignments(b.slopes, L.parts)
        if all(is_newton(blk) for blk in blocks)
    ]


def _contains_centralizer(b: NewtonPoint, b0: LeviNewtonPoint) -> bool:
    if b0.flat() != b.slopes:
        return False
    firsts = [blk.slopes[0] for blk in b0.blocks]
    lasts = [blk.slopes[-1] for blk in b0.blocks]
    return all(lasts[r] != firsts[r + 1] for r in range(len(firsts) - 1))


def hn_reducible(b, bp, mu, proper_levi: bool = False, conjugate_mu: bool = True) -> Optional[HNWitness]:
    """First witness of HN-reducibility in a fixed search order, or None.

    Search order: compositions by decreasing number of blocks (finest
    first), lexicographically within a size; then lifts of b, lifts of bp
    (both in decreasing lexicographic order); then mu' among the L-dominant
    conjugates of mu in decreasing lexicographic order (mu itself first).
    With ``conjugate_mu=False`` only mu' = mu is tried.  With
    ``proper_levi=True`` the improper Levi (n) is skipped.
    """
    b, bp = make_newton(b), make_newton(bp)
    mu = _dominant(mu)
    if not membership(b, bp, mu).member:
        raise PreconditionFailed("b is not in B(G, mu, [bp])")
    n = b.n
    comps = sorted(compositions(n), key=lambda c: (-len(c), c))
    for parts in comps:
        L = LeviDatum(parts)
        if proper_levi and not L.proper:
            continue
        lifts_b = levi_lifts(b, L)
        if not lifts_b:
            continue
        lifts_bp = levi_lifts(bp, L)
        mus = l_dominant_conjugates(mu, L) if conjugate_mu else [mu]
        for b0 in lifts_b:
            for b0p in lifts_bp:
                for m in mus:
                    if _blockwise_member(b0, b0p, m, L):
                        return HNWitness(L, b0, b0p, m, L.proper, _contains_centralizer(b, b0))
    return None


def _l_central(nu: Sequence, L) -> tuple:
    L = as_levi(L)
    nu = tuple(Fraction(x) for x in nu)
    blocks = L.split(nu)
    for r, blk in enumerate(blocks):
        if len(set(blk)) > 1:
            raise NotLCentral(f"block {r} of {tuple(map(str, nu))} is not constant")
    return nu


def dimension_NUb(nu_b, L) -> Fraction:
    """<2 rho_U, nu_b> for nu_b constant on the blocks of L."""
    L = as_levi(L)
    nu = _l_central(nu_b, L)
    return pairing(half_sums(L.n, L).two_rho_U, nu)


@dataclass(frozen=True)
class InductionNumerology:
    degree_shift: int
    tate_twist: int


def induction_numerology(nu_b, L) -> InductionNumerology:
    N = dimension_NUb(nu_b, L)
    if N.denominator != 1:
        raise NonIntegralDimension(f"N = {N} is not an integer")
    return InductionNumerology(2 * int(N), int(N))


@dataclass(frozen=True)
class IcShift:
    twist: Fraction
    shift: int


def ic_shift(mu) -> IcShift:
    """(<rho, mu>, <2 rho, mu>) for dominant mu."""
    mu = _dominant(mu)
    t = pairing(rho(len(mu)), mu)
    return IcShift(t, int(2 * t))


@dataclass(frozen=True)
class GradedPiece:
    slopes: tuple  # the alpha's, descending
    bundle: FFBundle  # sum of O(-alpha)
    degree: int


def graded_slopes(nu_b0, L) -> dict:
    """Slopes of Lie(U) graded by block distance.

    For i in block r and j in block s > r the root e_i - e_j sits in level
    s - r and contributes alpha = nu_j - nu_i (coordinates taken block by
    block from nu_b0); the level-l bundle is the sum of O(-alpha).
    """
    L = as_levi(L)
    b0 = make_levi_newton(nu_b0)
    check_blocks(b0, L)
    blocks = [blk.slopes for blk in b0.blocks]
    levels = {}
    for r, s in combinations(range(L.m), 2):
        levels.setdefault(s - r, []).extend(y - x for x in blocks[r] for y in blocks[s])
    out = {}
    for lvl in sorted(levels):
        alphas = tuple(sorted(levels[lvl], reverse=True))
        out[lvl] = GradedPiece(alphas, FFBundle.from_slopes(-a for a in alphas), int(-sum(alphas)))
    return out
