from math import gcd

import pytest

from lensfill.errors import ConsistencyViolated
from lensfill.fillings import invariants, make_params, zset
from lensfill.lattice import (
    StringConfiguration,
    build_string,
    complement_homology,
    dot,
    minimal_si_counts,
    orthogonal_minus_one_classes,
    validate_hom_classes,
    validate_string_lemma,
)


def coprime_pairs(pmax):
    for p in range(2, pmax + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


def test_dot_is_the_standard_form():
    assert dot((1, 0, 0), (1, 0, 0)) == 1
    assert dot((0, 1, 0), (0, 1, 0)) == -1
    assert dot((1, 1, 0), (0, 1, 1)) == -1
    assert dot((1, -1, -1), (1, -1, -1)) == -1


def test_build_string_k1():
    cfg = build_string((2,), (0,))
    assert cfg.m_total == 2
    assert cfg.classes == ((1, 0, 0), (1, -1, -1))
    assert dot(cfg.classes[1], cfg.classes[1]) == -1


def test_build_string_examples():
    cfg = build_string((2, 2, 2), (1, 2, 1))
    # two strict blowups plus one extra on each end curve
    assert cfg.m_total == 4
    types = [dot(c, c) for c in cfg.classes]
    assert types == [1, -1, -2, -2]

    cfg = build_string((2, 2, 2), (2, 1, 2))
    assert cfg.m_total == 3
    assert [dot(c, c) for c in cfg.classes] == [1, -1, -2, -2]


def test_build_string_rejects_bad_input():
    with pytest.raises(ValueError):
        build_string((2, 2), (1, 2, 1))
    with pytest.raises(ValueError):
        build_string((2, 2, 2), (3, 1, 2))
    with pytest.raises(ValueError):
        build_string((2, 2, 2), (2, 2, 2))  # not a zero tuple


def test_validate_hom_classes_on_builds():
    for p, q in coprime_pairs(25):
        pr = make_params(p, q)
        for n in zset(pr):
            assert validate_hom_classes(build_string(pr.b, n))


def test_validate_hom_classes_rejects_corruptions():
    good = build_string((2, 2, 2), (1, 2, 1))
    # a class with two positive exceptional coefficients
    bad = StringConfiguration(
        b=good.b,
        n=good.n,
        m_total=good.m_total,
        classes=good.classes[:2] + ((0, 1, 1, 0, 0),) + good.classes[3:],
    )
    assert not validate_hom_classes(bad)
    # a repeated exceptional class inside one curve (coefficient -2)
    bad = StringConfiguration(
        b=good.b,
        n=good.n,
        m_total=good.m_total,
        classes=((1, 0, 0, 0, 0), (1, -2, 0, 0, 0)) + good.classes[2:],
    )
    assert not validate_hom_classes(bad)


def test_validate_string_lemma_on_builds():
    for p, q in coprime_pairs(25):
        pr = make_params(p, q)
        for n in zset(pr):
            assert validate_string_lemma(build_string(pr.b, n))


def test_validate_string_lemma_rejects_counterexamples_to_checker():
    # shape-valid configurations that are not genuine strings, to exercise
    # the checker itself
    cfg = StringConfiguration(
        b=(2, 2),
        n=(1, 1),
        m_total=3,
        classes=((1, 0, 0, 0), (1, -1, -1, 0), (0, 0, -1, 1)),
    )
    # C_2 leads with f_3, which lies in no earlier tail: claim (1) fails
    assert not validate_string_lemma(cfg)

    cfg = StringConfiguration(
        b=(2, 3),
        n=(1, 1),
        m_total=4,
        classes=((1, 0, 0, 0, 0), (1, -1, -1, 0, 0), (0, 1, -1, -1, 0)),
    )
    # A^1 cap A^2 = {2} and f_2 is not a leading class: claim (2) fails
    assert not validate_string_lemma(cfg)


def test_complement_homology_examples():
    b2, div = complement_homology(build_string((2, 2, 2, 3), (2, 2, 1, 3)))
    assert b2 == 0 and div == [3]

    b2, div = complement_homology(build_string((2, 2, 2), (1, 2, 1)))
    assert b2 == 1 and div == []

    b2, div = complement_homology(build_string((2, 2, 2), (2, 1, 2)))
    assert b2 == 0 and div == [2]  # the conic complement side of L(4,1)

    b2, div = complement_homology(build_string((2,), (0,)))
    assert b2 == 1 and div == []


def test_complement_b2_matches_handle_count():
    for p, q in coprime_pairs(30):
        pr = make_params(p, q)
        for n in zset(pr):
            cfg = build_string(pr.b, n)
            b2, _ = complement_homology(cfg)
            assert b2 == invariants(pr, n).b2


def test_rational_ball_torsion_squares_to_p():
    # fillings with b2 = 0 have |H_1|^2 = p
    for p, q in coprime_pairs(60):
        pr = make_params(p, q)
        for n in zset(pr):
            b2, div = complement_homology(build_string(pr.b, n))
            if b2 == 0:
                order = 1
                for d in div:
                    order *= d
                assert order * order == p, (p, q, n)


def test_minimal_si_counts_examples():
    cfg = build_string((2, 2, 2), (1, 2, 1))
    assert minimal_si_counts(cfg) == (1, 0, 1)
    # a configuration with no extra blowups at all: every count is zero
    cfg = build_string((1, 1), (1, 1))
    assert minimal_si_counts(cfg) == (0, 0)
    cfg = build_string((2, 1, 2), (2, 1, 2))
    assert minimal_si_counts(cfg) == (0, 0, 0)


def test_minimal_si_counts_recovery_sweep():
    for p, q in coprime_pairs(40):
        pr = make_params(p, q)
        for n in zset(pr):
            cfg = build_string(pr.b, n)
            s = minimal_si_counts(cfg)
            assert tuple(b - x for b, x in zip(pr.b, s)) == n


def test_no_minus_one_class_orthogonal_to_string():
    for p, q in coprime_pairs(40):
        pr = make_params(p, q)
        for n in zset(pr):
            assert orthogonal_minus_one_classes(build_string(pr.b, n)) == []
