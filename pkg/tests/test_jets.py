"""Jet relation series, graded quotients, kernel membership."""

from fractions import Fraction

import pytest

from veronese_jets.jets import (
    JetRingSpec,
    kernel_membership,
    leading_term_relations,
    quadratic_relations,
    quotient_character,
    relation_dump,
    relation_index_set,
    relation_series_count,
    verify_reduced,
)
from veronese_jets.poly import SparsePoly, leading_prime_part, multidegree


def test_spec_validation():
    spec = JetRingSpec.make(2, 3, 4)
    assert spec.tmax == 4  # tmax defaults to qmax
    assert JetRingSpec.make(2, 3, 4, tmax=6).tmax == 6
    with pytest.raises(ValueError):
        JetRingSpec.make(0, 1, 2)
    with pytest.raises(ValueError):
        JetRingSpec.make(2, -1, 2)
    with pytest.raises(ValueError):
        JetRingSpec.make(2, 1, 4, tmax=3)


def test_relation_index_set():
    assert relation_index_set(1) == []
    assert relation_index_set(2) == [(0, 2, 0)]
    assert relation_index_set(3) == [(0, 2, 0), (0, 3, 0), (0, 3, 1), (1, 3, 0)]
    for l in range(1, 6):
        idx = relation_index_set(l)
        assert len(idx) == relation_series_count(l)
        assert all(r - s >= 2 and 0 <= w <= r - s - 2 for s, r, w in idx)
    assert relation_series_count(4) == 10


def test_quadratic_relation_gradings():
    spec = JetRingSpec.make(3, 2, 4)
    gens = quadratic_relations(spec)
    assert {(g.s, g.r, g.w) for g in gens} == set(relation_index_set(3))
    for g in gens:
        md = multidegree(g.poly, 3)
        assert md.deg1 == 2
        assert md.deg2 == g.k + g.w
        assert md.deg3 == 2 * (g.r + g.s) - 2 * 3


def test_relation_dump_golden():
    spec = JetRingSpec.make(2, 2, 2)
    dump = relation_dump(spec, "quadratic")
    assert dump[0] == {
        "s": 0,
        "r": 2,
        "w": 0,
        "k": 0,
        "polynomial": "-x1[0]^2 + x0[0]*x2[0]",
    }
    assert dump[1]["polynomial"] == "-2*x1[0]*x1[1] + x0[1]*x2[0] + x0[0]*x2[1]"
    lead = relation_dump(spec, "leading")
    assert lead[0]["polynomial"] == "x0[0]*x2[0]"


def test_derivative_relation_for_degree_three():
    # the (0, 3, 1) series starts with x0'x3 - 2 x1'x2 + x2'x1
    spec = JetRingSpec.make(3, 2, 2)
    gens = [g for g in quadratic_relations(spec) if (g.s, g.r, g.w) == (0, 3, 1)]
    k0 = next(g for g in gens if g.k == 0)
    x = lambda j, i: SparsePoly.variable(("x", j, i))
    expected = x(0, 1) * x(3, 0) - x(1, 1) * x(2, 0) * 2 + x(2, 1) * x(1, 0)
    assert k0.poly == expected


def test_leading_part_law():
    # deg_prime-leading part of each quadratic coefficient is (-1)^s times
    # the matching monomial-pair coefficient
    for l in (2, 3, 4):
        spec = JetRingSpec.make(l, 2, 3)
        lead = {(g.s, g.r, g.w, g.k): g.poly for g in leading_term_relations(spec)}
        for g in quadratic_relations(spec):
            expected = lead[(g.s, g.r, g.w, g.k)] * Fraction((-1) ** g.s)
            assert leading_prime_part(g.poly) == expected


def test_kernel_membership():
    x = lambda j, i: SparsePoly.variable(("x", j, i))
    p = x(0, 0) * x(2, 0) - x(1, 0) * x(1, 0)
    assert kernel_membership(p, 2, 4)
    assert not kernel_membership(x(0, 0) * x(1, 0), 2, 4)
    assert not kernel_membership(x(0, 0) * x(2, 0), 3, 4)
    assert kernel_membership(p, 3, 4)  # consecutive-coordinate quadric holds at any degree
    for g in quadratic_relations(JetRingSpec.make(3, 2, 3)):
        assert kernel_membership(g.poly, 3, 3 + g.w + 1)


def test_quotient_character_trivial_cases():
    ch = quotient_character(JetRingSpec.make(2, 0, 3))
    assert sorted(ch.weights()) == [0]
    assert ch.series(0).as_ints() == [1, 0, 0, 0]
    ch1 = quotient_character(JetRingSpec.make(3, 1, 4))
    assert sorted(ch1.weights()) == [-3, -1, 1, 3]
    for w in ch1.weights():
        assert ch1.series(w).as_ints() == [1, 1, 1, 1, 1]


def test_quotient_character_frozen():
    spec = JetRingSpec.make(2, 2, 3)
    ch = quotient_character(spec, "quadratic")
    table = {w: ch.series(w).as_ints() for w in sorted(ch.weights())}
    assert table == {
        -4: [1, 1, 2, 2],
        -2: [1, 2, 3, 4],
        0: [1, 2, 4, 5],
        2: [1, 2, 3, 4],
        4: [1, 1, 2, 2],
    }
    assert quotient_character(spec, "kernel") == ch
    assert quotient_character(spec, "leading") == ch


def test_quotient_ideal_name_validation():
    spec = JetRingSpec.make(2, 1, 2)
    with pytest.raises(ValueError):
        quotient_character(spec, "bogus")


def test_verify_reduced_small():
    report = verify_reduced(2, 2, 3)
    assert report["ok"]
    assert [r["n"] for r in report["results"]] == [0, 1, 2]
    for r in report["results"]:
        assert r["ok"]
        for entry in r["compared"]:
            assert entry["match"]
            assert (
                entry["quadratic"]
                == entry["kernel"]
                == entry["global_demazure"]
                == entry["hilbert_leading"]
            )
    # spot check one known value
    n2 = {(e["weight"], e["k"]): e["quadratic"] for e in report["results"][2]["compared"]}
    assert n2[(0, 2)] == 4
