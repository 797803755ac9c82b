from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckecomb.errors import NonIntegralDegree, RankOutOfRange, SemistableInput, Unsupported
from heckecomb.isocrystal import FFBundle, basic_class, bundle_of
from heckecomb.kottwitz import enumerate_bmu, membership
from heckecomb.modifications import (
    classify_rank2,
    induced_subbundle_check,
    lubin_tate_target,
    modified_degree,
    stratum_nonempty_rank2,
)
from oracles import rank2_semistable_targets

h = F(1, 2)


def test_modified_degree():
    assert modified_degree(-3, (1, 0)) == -2
    assert modified_degree(7, (0, 0, 0)) == 7
    assert modified_degree(0, (2, 1, 0)) == 3


def test_classify_rank2_examples():
    c = classify_rank2(FFBundle(((0, 1, 1), (-1, 1, 1))))
    assert c.source_shape and c.m == 0 and c.target == FFBundle.line(0, 2)
    c = classify_rank2(FFBundle(((1, 1, 1), (0, 1, 1))))
    assert c.source_shape and c.m == 1 and c.target == FFBundle.line(1, 2)
    c = classify_rank2(FFBundle(((2, 1, 1), (0, 1, 1))))
    assert not c.source_shape and c.target is None
    with pytest.raises(SemistableInput):
        classify_rank2(FFBundle(((1, 2, 1),)))
    with pytest.raises(SemistableInput):
        classify_rank2(FFBundle.line(3, 2))
    with pytest.raises(RankOutOfRange):
        classify_rank2(FFBundle(((1, 1, 1), (0, 1, 2))))


def test_classify_rank2_against_slope_oracle():
    for a in range(-3, 4):
        for b in range(-3, a):
            E = FFBundle(((a, 1, 1), (b, 1, 1)))
            c = classify_rank2(E)
            expected = rank2_semistable_targets((F(a), F(b)))
            got = [] if c.target is None else [c.target.slopes]
            assert got == expected
            if c.target is not None:
                assert c.target.degree == modified_degree(E.degree, (1, 0))
                assert c.target.semistable


def test_lubin_tate_examples():
    r = lubin_tate_target(2, 0)
    assert r.source == FFBundle(((-1, 2, 1),)) and r.source_degree == -1
    assert r.target == FFBundle.line(0, 2) and r.target_degree == 0
    r = lubin_tate_target(2, 1)
    assert r.source == FFBundle(((-3, 2, 1),)) and r.source_degree == -3
    assert r.target == FFBundle.line(-1, 2) and r.target_degree == -2
    r = lubin_tate_target(3, 1)
    assert r.source == FFBundle(((-4, 3, 1),)) and r.target == FFBundle.line(-1, 3)
    assert r.checks_pass


@given(st.integers(1, 6), st.integers(-3, 3))
def test_lubin_tate_checks(n, m):
    r = lubin_tate_target(n, m)
    assert r.checks_pass
    assert r.source_degree == -(m * n + 1) and r.target_degree == -m * n
    assert r.target_slope == -m


def test_induced_subbundle_examples():
    r = induced_subbundle_check((1, 0), 1, 0, 0)
    assert r.accepted and (r.rank, r.slope) == (1, 0)
    r = induced_subbundle_check((1, 0), 2, -1, 0)
    assert r.accepted and (r.rank, r.slope) == (2, 0)
    r = induced_subbundle_check((1, 0), 1, 1, 0)
    assert not r.accepted and r.defect == 1
    with pytest.raises(RankOutOfRange):
        induced_subbundle_check((1, 0), 3, 0, 0)
    with pytest.raises(RankOutOfRange):
        induced_subbundle_check((1, 0), 0, 0, 0)
    with pytest.raises(NonIntegralDegree):
        induced_subbundle_check((1, 0), 1, 0, h)


@given(
    st.lists(st.integers(-3, 3), min_size=1, max_size=5).map(lambda v: tuple(sorted(v, reverse=True))),
    st.data(),
)
def test_induced_subbundle_identity(mu, data):
    n = len(mu)
    r = data.draw(st.integers(1, n))
    s = F(data.draw(st.integers(-6, 6)), r)
    deg_plus = data.draw(st.integers(-8, 8))
    # rearranged: deg_plus = r s - (k_n + ... + k_{n-r+1})
    smallest = sorted(mu)[:r]
    assert induced_subbundle_check(mu, r, deg_plus, s).accepted == (deg_plus == r * s - sum(smallest))


def test_stratum_examples():
    assert stratum_nonempty_rank2((1, 0), (0, 0), (1, 0))
    assert not stratum_nonempty_rank2((1, 1), (0, 0), (1, 0))
    assert stratum_nonempty_rank2((h, h), (0, 0), (1, 0))
    with pytest.raises(Unsupported):
        stratum_nonempty_rank2((1, 0, 0), (0, 0, 0), (1, 0, 0))
    with pytest.raises(Unsupported):
        stratum_nonempty_rank2((1, 0), (0, 0), (2, 0))
    with pytest.raises(Unsupported):
        stratum_nonempty_rank2((2, 0), (1, 0), (1, 0))


def test_stratum_agrees_with_enumeration():
    for N in range(-4, 5):
        bp = basic_class(N, 2)
        members = set(b.slopes for b in enumerate_bmu(bp, (1, 0)))
        for a in range(-4, 6):
            for d in range(1, 3):
                for c in range(-4, 6):
                    v = tuple(sorted((F(a, d), F(c, d)), reverse=True))
                    try:
                        b = bundle_of(v)
                    except ValueError:
                        continue
                    got = stratum_nonempty_rank2(v, bp, (1, 0))
                    assert got == (v in members)
                    if got:
                        assert membership(v, bp, (1, 0)).member
