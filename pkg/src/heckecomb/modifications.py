"""Degree bookkeeping for modifications of bundles on the Fargues-Fontaine curve.

A modification of type mu = (k_1 >= ... >= k_n) is oriented as an injection
f: E -> E' whose torsion cokernel has length k_1 + ... + k_n, so
deg E' = deg E + sum(mu).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import NonIntegralDegree, RankOutOfRange, SemistableInput, Unsupported
from .isocrystal import FFBundle, basic_class, bundle_of, make_newton
from .kottwitz import _cocharacter, _dominant, membership


def modified_degree(source_degree: int, mu) -> int:
    return source_degree + sum(_dominant(mu))


@dataclass(frozen=True)
class Rank2Classification:
    source_shape: bool  # E = O(m) + O(m-1)
    m: Optional[int]
    target: Optional[FFBundle]


def classify_rank2(E: FFBundle) -> Rank2Classification:
    """Semistable targets of degree-one modifications of a non-semistable rank 2 bundle.

    Such an E is O(a) + O(b) with a > b.  Only a = b + 1 admits one, namely
    O(a)^2; m = a.
    """
    if E.rank != 2:
        raise RankOutOfRange(f"rank {E.rank} bundle, expected rank 2")
    if E.semistable:
        raise SemistableInput(f"{E} is semistable")
    (a, _, _), (b, _, _) = E.summands
    if a - b == 1:
        return Rank2Classification(True, a, FFBundle.line(a, 2))
    return Rank2Classification(False, None, None)


@dataclass(frozen=True)
class LubinTateTarget:
    source: FFBundle
    target: FFBundle
    source_degree: int
    target_degree: int
    degree_identity: bool  # deg target = modified_degree(deg source, (1, 0, ..., 0))
    target_semistable: bool
    target_slope: Fraction

    @property
    def checks_pass(self) -> bool:
        return self.degree_identity and self.target_semistable


def lubin_tate_target(n: int, m: int) -> LubinTateTarget:
    """Source O(-(mn+1)/n) and target O(-m)^n of the minuscule modification."""
    if n < 1:
        raise RankOutOfRange(f"rank must be positive, got {n}")
    source = bundle_of(basic_class(m * n + 1, n))
    target = bundle_of(basic_class(m * n, n))
    mu = (1,) + (0,) * (n - 1)
    slopes = set(target.slopes)
    return LubinTateTarget(
        source=source,
        target=target,
        source_degree=source.degree,
        target_degree=target.degree,
        degree_identity=target.degree == modified_degree(source.degree, mu),
        target_semistable=target.semistable and slopes == {Fraction(-m)},
        target_slope=Fraction(target.degree, target.rank),
    )


@dataclass(frozen=True)
class SubbundlePrediction:
    accepted: bool
    rank: int
    slope: Fraction
    defect: Fraction  # deg_plus + k_n + ... + k_{n+1-r} - r s


def induced_subbundle_check(mu, r: int, deg_plus: int, s) -> SubbundlePrediction:
    """Check deg_plus + (sum of the r smallest k_i) = r s.

    When it holds, the induced sub-bundle of the modified bundle is
    predicted semistable of rank r and slope s.
    """
    mu = _dominant(mu)
    n = len(mu)
    if isinstance(r, bool) or not isinstance(r, int) or not 1 <= r <= n:
        raise RankOutOfRange(f"r={r!r} outside [1, {n}]")
    s = Fraction(s)
    if (r * s).denominator != 1:
        raise NonIntegralDegree(f"r s = {r * s} is not an integer")
    defect = deg_plus + sum(mu[n - j] for j in range(1, r + 1)) - r * s
    return SubbundlePrediction(defect == 0, r, s, Fraction(defect))


def stratum_nonempty_rank2(b, bp, mu) -> bool:
    """Whether a type (1,0) modification E_b -> E_bp can exist, for GL_2 and basic bp.

    Basic b: decided by membership (the Lubin-Tate type cases).  Non-basic
    b: E_b is not semistable and E_bp must be the target found by
    classify_rank2; membership is required as well.
    """
    b, bp, mu = make_newton(b), make_newton(bp), _cocharacter(mu)
    if b.n != 2 or bp.n != 2 or mu != (1, 0):
        raise Unsupported("only GL_2 with mu = (1, 0) is supported")
    if not bp.basic:
        raise Unsupported("bp must be basic")
    if not membership(b, bp, mu).member:
        return False
    if b.basic:
        return True
    cls = classify_rank2(bundle_of(b))
    return cls.target is not None and cls.target == bundle_of(bp)
