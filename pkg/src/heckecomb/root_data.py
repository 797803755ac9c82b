"""Root datum combinatorics for split GL_n.

Coordinates are with respect to the diagonal torus.  Positive roots are
``e_i - e_j`` with ``i < j`` (upper triangular Borel), dominant vectors are
weakly decreasing, and a standard Levi subgroup is given by a composition
``(n_1, ..., n_m)`` of n (block diagonal, inside the block lower triangular
parabolic).

>>> dominance_leq((Fraction(1, 2), Fraction(1, 2)), (1, 0))
True
>>> half_sums(3, LeviDatum((1, 2))).two_rho_U
(Fraction(2, 1), Fraction(-1, 1), Fraction(-1, 1))
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate, combinations
from typing import Iterator, Sequence

from .errors import InvalidComposition, LengthMismatch


@dataclass(frozen=True)
class LeviDatum:
    """Ordered composition of n fixing L (block diagonal) inside P (block lower triangular)."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts or any(isinstance(k, bool) or not isinstance(k, int) or k < 1 for k in parts):
            raise InvalidComposition(f"not a composition: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def full(cls, n: int) -> "LeviDatum":
        return cls((n,))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def proper(self) -> bool:
        return self.m > 1

    def offsets(self) -> tuple:
        """(N_0, N_1, ..., N_m) with N_l = n_1 + ... + n_l."""
        return (0,) + tuple(accumulate(self.parts))

    def blocks(self) -> list:
        off = self.offsets()
        return [range(off[r], off[r + 1]) for r in range(self.m)]

    def block_index(self) -> tuple:
        return tuple(r for r, k in enumerate(self.parts) for _ in range(k))

    def split(self, vec: Sequence) -> tuple:
        if len(vec) != self.n:
            raise LengthMismatch(f"vector of length {len(vec)} against composition of {self.n}")
        return tuple(tuple(vec[i] for i in blk) for blk in self.blocks())


def as_levi(L) -> LeviDatum:
    return L if isinstance(L, LeviDatum) else LeviDatum(tuple(L))


def compositions(n: int) -> Iterator[tuple]:
    """All compositions of n in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def _check_lengths(*vecs):
    if len({len(v) for v in vecs}) != 1:
        raise LengthMismatch("vectors of different lengths: " + ", ".join(str(len(v)) for v in vecs))
    if len(vecs[0]) == 0:
        raise LengthMismatch("empty vector")


def is_dominant(v: Sequence) -> bool:
    return all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def sort_descending(v: Sequence) -> tuple:
    return tuple(sorted(v, reverse=True))


def dominance_leq(x: Sequence, y: Sequence) -> bool:
    """x <= y: y - x is a non-negative combination of the simple coroots e_i - e_{i+1}."""
    _check_lengths(x, y)
    sx = sy = Fraction(0)
    for a, b in zip(x, y):
        sx += a
        sy += b
        if sx > sy:
            return False
    return sx == sy


def weyl_conjugate(mu: Sequence, mu2: Sequence) -> bool:
    _check_lengths(mu, mu2)
    return Counter(mu) == Counter(mu2)


def l_dominant(mu: Sequence, L) -> bool:
    """Weakly decreasing inside every block of L."""
    return all(is_dominant(blk) for blk in as_levi(L).split(mu))


@dataclass(frozen=True)
class HalfSums:
    rho: tuple
    two_rho_U: tuple


def rho(n: int) -> tuple:
    return tuple(Fraction(n + 1 - 2 * i, 2) for i in range(1, n + 1))


def half_sums(n: int, L) -> HalfSums:
    """rho of GL_n and the sum of the roots e_i - e_j, block(i) < block(j).

    The second convention makes the pairing with a dominant, block-constant
    Newton point non-negative.
    """
    L = as_levi(L)
    if L.n != n:
        raise InvalidComposition(f"{L.parts} is not a composition of {n}")
    off = L.offsets()
    two_rho_U = []
    for r, k in enumerate(L.parts):
        later = n - off[r + 1]
        earlier = off[r]
        two_rho_U.extend([Fraction(later - earlier)] * k)
    return HalfSums(rho(n), tuple(two_rho_U))


def pairing(chi: Sequence, x: Sequence) -> Fraction:
    _check_lengths(chi, x)
    return sum((Fraction(a) * Fraction(b) for a, b in zip(chi, x)), Fraction(0))


def pi1_levi_class(mu: Sequence, L) -> tuple:
    """Class in pi_1(L) = Z^m: blockwise coordinate sums."""
    return tuple(sum(blk) for blk in as_levi(L).split(tuple(mu)))


def galois_average(mu: Sequence) -> tuple:
    # trivial Galois action in the split case
    return tuple(Fraction(x) for x in mu)


def mu_natural(mu: Sequence, L) -> tuple:
    return pi1_levi_class(mu, L)


def sub_multisets(values: Sequence, k: int) -> Iterator[tuple]:
    """Distinct size-k sub-multisets of ``values``, each weakly decreasing, in decreasing lex order."""
    vals = sorted(values, reverse=True)
    seen = set()
    for combo in combinations(vals, k):
        if combo not in seen:
            seen.add(combo)
            yield combo


def block_assignments(values: Sequence, parts: Sequence) -> Iterator[tuple]:
    """Ordered distributions of a multiset over blocks of the given sizes.

    Each block is weakly decreasing; the tuples of blocks come out in
    decreasing lexicographic order of their concatenation.
    """
    if not parts:
        if values:
            raise LengthMismatch("multiset larger than the composition")
        yield ()
        return
    if len(values) != sum(parts):
        raise LengthMismatch(f"{len(values)} values for composition of {sum(parts)}")
    for first in sub_multisets(values, parts[0]):
        rest = list((Counter(values) - Counter(first)).elements())
        for tail in block_assignments(rest, parts[1:]):
            yield (first,) + tail


def l_dominant_conjugates(mu: Sequence, L) -> list:
    """The L-dominant members of the Weyl orbit of mu, each once, in decreasing lex order."""
    L = as_levi(L)
    if len(mu) != L.n:
        raise LengthMismatch(f"cocharacter of length {len(mu)} against composition of {L.n}")
    return [sum(blocks, ()) for blocks in block_assignments(tuple(mu), L.parts)]
