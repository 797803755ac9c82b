"""Exact linear algebra over the local ring Z_(p).

Matrices hold Fractions; an entry is integral when its p-adic valuation is
non-negative.  The type of an invertible matrix g is the vector of
exponents (k_1 >= ... >= k_n) with g in GL_n(Z_(p)) diag(p^{k_i}) GL_n(Z_(p)).

>>> matrix_type(DvrMatrix.from_rows([[1, 2], [2, 8]], 2))
(2, 0)
>>> quotient_length_bound(ModuleShape((3, 3, 1)), 2)
6
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BudgetExceeded,
    IndexOutOfRange,
    InvalidShape,
    LengthMismatch,
    NotDecreasing,
    NotInParabolic,
    NotPrime,
    SingularMatrix,
)
from .finite_modules import orbit_data
from .root_data import as_levi


def is_prime(p) -> bool:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def valuation(x, p: int):
    """p-adic valuation of a rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class DvrMatrix:
    """Square matrix of rationals, viewed over Z_(p)."""

    entries: tuple
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p!r} is not a prime")
        rows = tuple(tuple(Fraction(a) for a in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise LengthMismatch("matrix must be square and non-empty")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows, p: int) -> "DvrMatrix":
        return cls(tuple(tuple(r) for r in rows), p)

    @property
    def n(self) -> int:
        return len(self.entries)

    def submatrix(self, start: int, stop: int) -> "DvrMatrix":
        return DvrMatrix(tuple(r[start:stop] for r in self.entries[start:stop]), self.p)

    def is_integral(self) -> bool:
        return all(valuation(a, self.p) >= 0 for r in self.entries for a in r)

    def det(self) -> Fraction:
        return _det([list(r) for r in self.entries])


@dataclass(frozen=True)
class ModuleShape:
    """Exponents of M = Z/p^{k_1} + ... + Z/p^{k_n}, weakly decreasing and non-negative."""

    exponents: tuple

    def __post_init__(self):
        k = tuple(self.exponents)
        if any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in k):
            raise InvalidShape(f"exponents must be non-negative integers: {k!r}")
        if any(k[i] < k[i + 1] for i in range(len(k) - 1)):
            raise InvalidShape(f"exponents must be weakly decreasing: {k!r}")
        object.__setattr__(self, "exponents", k)

    @property
    def n(self) -> int:
        return len(self.exponents)


def _as_shape(shape) -> ModuleShape:
    return shape if isinstance(shape, ModuleShape) else ModuleShape(tuple(shape))


def _det(a) -> Fraction:
    n = len(a)
    a = [list(r) for r in a]
    det = Fraction(1)
    for t in range(n):
        piv = next((i for i in range(t, n) if a[i][t] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != t:
            a[t], a[piv] = a[piv], a[t]
            det = -det
        det *= a[t][t]
        for i in range(t + 1, n):
            f = a[i][t] / a[t][t]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
    return det


def _inverse(a) -> list:
    """Gauss-Jordan inverse over Q; raises SingularMatrix."""
    n = len(a)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for t in range(n):
        piv = next((i for i in range(t, n) if m[i][t] != 0), None)
        if piv is None:
            raise SingularMatrix("block is singular")
        m[t], m[piv] = m[piv], m[t]
        c = m[t][t]
        m[t] = [x / c for x in m[t]]
        for i in range(n):
            if i != t and m[i][t] != 0:
                f = m[i][t]
                m[i] = [x - f * y for x, y in zip(m[i], m[t])]
    return [r[n:] for r in m]


def _matmul(a, b) -> list:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in a]


def elementary_exponents(rows: Sequence[Sequence], p: int) -> tuple:
    """Smith normal form exponents over Z_(p), weakly decreasing.

    Pivot: entry of minimal valuation, ties to the smallest (row, column).
    """
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    exps = []
    for t in range(n):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                if a[i][j] != 0:
                    v = valuation(a[i][j], p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            raise SingularMatrix("determinant is zero")
        v, i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        piv = a[t][t]
        # row operations with integral multipliers (valuation of a[i][t] >= v)
        for i in range(t + 1, n):
            f = a[i][t] / piv
            if f:
                a[i] = a[i][:t] + [x - f * y for x, y in zip(a[i][t:], a[t][t:])]
        # the pivot column is now clear below the pivot, so clearing the
        # pivot row by column operations touches nothing else
        for j in range(t + 1, n):
            a[t][j] = Fraction(0)
        exps.append(v)
    return tuple(sorted(exps, reverse=True))


def matrix_type(g: DvrMatrix) -> tuple:
    """Elementary divisor exponents of g over Z_(p), weakly decreasing."""
    return elementary_exponents(g.entries, g.p)


def quotient_length_bound(shape, j: int) -> int:
    """k_1 + ... + k_j: the largest length of a j-generated quotient of M."""
    shape = _as_shape(shape)
    if isinstance(j, bool) or not isinstance(j, int) or j < 0 or j > shape.n:
        raise IndexOutOfRange(f"j={j!r} outside [0, {shape.n}]")
    return sum(shape.exponents[:j])


@dataclass(frozen=True)
class QuotientLemmaReport:
    shape: tuple
    j: int
    p: int
    bound: int
    orbits: int  # Aut(M)-orbit representatives of submodules examined
    quotients_checked: int  # of those, quotients M/K generated by <= j elements
    submodules_checked: int  # of those, submodules K generated by <= j elements
    max_quotient_length: int
    maximal_quotient_types: tuple
    max_submodule_length: int
    violations: tuple
    passed: bool


DEFAULT_MAX_ORDER = 3**8


def verify_quotient_lemma(shape, j: int, p: int, max_order: int = DEFAULT_MAX_ORDER) -> QuotientLemmaReport:
    """Exhaustively check the quotient length bound on M = sum Z/p^{k_i}.

    For every submodule K (one per Aut(M)-orbit; all checked quantities are
    orbit invariants) with N = M/K generated by at most j elements:
    l(N) <= k_1 + ... + k_j, and if equality holds then K is a direct summand
    (so N is one too).  The dual statement for j-generated submodules K is
    checked as well.  ``max_order`` caps |M|.
    """
    shape = _as_shape(shape)
    bound = quotient_length_bound(shape, j)
    if not is_prime(p):
        raise NotPrime(f"{p!r} is not a prime")
    if p ** sum(shape.exponents) > max_order:
        raise BudgetExceeded(f"|M| = {p}^{sum(shape.exponents)} exceeds the cap {max_order}")
    data = orbit_data(tuple(e for e in shape.exponents if e > 0), p)
    violations = []
    nq = ns = 0
    max_q = max_s = 0
    max_types = set()
    for d in data:
        if d.quotient_rank <= j:
            nq += 1
            if d.quotient_length > bound:
                violations.append(f"quotient of type {d.quotient_type} has length {d.quotient_length} > {bound}")
            if d.quotient_length == bound and not d.pure:
                violations.append(f"maximal quotient of type {d.quotient_type} is not a direct summand")
            if d.quotient_length > max_q:
                max_q, max_types = d.quotient_length, set()
            if d.quotient_length == max_q:
                max_types.add(d.quotient_type)
        if d.rank <= j:
            ns += 1
            if d.length > bound:
                violations.append(f"submodule of type {d.type} has length {d.length} > {bound}")
            if d.length == bound and not d.pure:
                violations.append(f"maximal submodule of type {d.type} is not a direct summand")
            max_s = max(max_s, d.length)
    return QuotientLemmaReport(
        shape=shape.exponents,
        j=j,
        p=p,
        bound=bound,
        orbits=len(data),
        quotients_checked=nq,
        submodules_checked=ns,
        max_quotient_length=max_q,
        maximal_quotient_types=tuple(sorted(max_types, reverse=True)),
        max_submodule_length=max_s,
        violations=tuple(violations),
        passed=not violations,
    )


def _blocks_of(g: DvrMatrix, L):
    L = as_levi(L)
    if L.n != g.n:
        raise LengthMismatch(f"composition of {L.n} for a {g.n}x{g.n} matrix")
    return L, L.offsets()


def levi_projection(g: DvrMatrix, L) -> DvrMatrix:
    """Block diagonal part of g, which must be block lower triangular with invertible diagonal blocks."""
    L, off = _blocks_of(g, L)
    e = g.entries
    out = [[Fraction(0)] * g.n for _ in range(g.n)]
    for r in range(L.m):
        lo, hi = off[r], off[r + 1]
        if any(e[i][j] != 0 for i in range(lo, hi) for j in range(hi, g.n)):
            raise NotInParabolic(f"nonzero entry above diagonal block {r}")
        block = [list(row[lo:hi]) for row in e[lo:hi]]
        if _det(block) == 0:
            raise NotInParabolic(f"diagonal block {r} is singular")
        for i in range(lo, hi):
            out[i][lo:hi] = e[i][lo:hi]
    return DvrMatrix(tuple(tuple(r) for r in out), g.p)


@dataclass(frozen=True)
class GlgVerdict:
    hypothesis_holds: bool
    conclusion_holds: bool


def glg_check(g: DvrMatrix, L, type: Sequence[int]) -> GlgVerdict:
    """Test whether g_L^{-1} g is in P(Z_(p)) and whether the trailing-type hypothesis holds.

    hypothesis: for each l < m the trailing submatrix starting at N_l has
    type (k_{N_l+1}, ..., k_n).  conclusion: g_L^{-1} g has integral
    entries, is block lower triangular and its diagonal blocks are
    invertible over Z_(p).
    """
    k = tuple(type)
    if len(k) != g.n:
        raise LengthMismatch(f"type of length {len(k)} for a {g.n}x{g.n} matrix")
    if any(isinstance(x, bool) or not isinstance(x, int) for x in k):
        raise NotDecreasing(f"type must be integers: {k!r}")
    if any(k[i] < k[i + 1] for i in range(len(k) - 1)):
        raise NotDecreasing(f"type must be weakly decreasing: {k!r}")
    gL = levi_projection(g, L)
    L, off = _blocks_of(g, L)
    # scale so the smallest exponent is 0; this changes neither side
    c = k[-1]
    scale = Fraction(g.p) ** (-c)
    gs = DvrMatrix(tuple(tuple(a * scale for a in r) for r in g.entries), g.p)
    ks = tuple(x - c for x in k)
    hypothesis = all(
        matrix_type(gs.submatrix(off[l], g.n)) == ks[off[l]:] for l in range(L.m)
    )
    h = _matmul(_inverse([list(r) for r in gL.entries]), [list(r) for r in g.entries])
    hm = DvrMatrix(tuple(tuple(r) for r in h), g.p)
    conclusion = hm.is_integral()
    if conclusion:
        for r in range(L.m):
            lo, hi = off[r], off[r + 1]
            if any(h[i][j] != 0 for i in range(lo, hi) for j in range(hi, g.n)):
                conclusion = False
                break
            if valuation(hm.submatrix(lo, hi).det(), g.p) != 0:
                conclusion = False
                break
    return GlgVerdict(hypothesis, conclusion)
