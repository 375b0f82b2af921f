from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triperi import (
    STAR,
    CapacityError,
    FiniteSpace,
    PaperSpaceParams,
    Triple,
    UnknownPointError,
    WindowError,
    distance,
    is_between,
    make_paper_space,
    perimeter,
    verify_metric_axioms,
)
from triperi.metric import ComputableSpace


def test_distance_examples(equilateral, paper):
    x, y, z = 0, 1, 2
    assert distance(equilateral, x, y) == 1
    assert distance(equilateral, z, z) == 0
    space, _ = paper
    assert distance(space, 4, 5) == Fraction(1, 4)
    assert distance(space, STAR, STAR) == 0
    assert distance(space, 5, 4) == distance(space, 4, 5)


def test_distance_unknown_point(equilateral, paper):
    with pytest.raises(UnknownPointError):
        distance(equilateral, 0, 3)
    with pytest.raises(UnknownPointError):
        distance(paper[0], -1, 2)
    with pytest.raises(UnknownPointError):
        distance(equilateral, "x", 1)


def test_star_sorts_last():
    assert sorted([STAR, 3, 0]) == [0, 3, STAR]
    assert 10**9 < STAR and not STAR < 0


def test_verify_examples(equilateral):
    assert verify_metric_axioms(equilateral).passed
    space, _ = make_paper_space(PaperSpaceParams(window=16))
    assert verify_metric_axioms(space, 16).passed


def test_verify_triangle_witness(equilateral):
    bad = FiniteSpace(["x", "y", "z"], [[0, 3, 1], [3, 0, 1], [1, 1, 0]])
    report = verify_metric_axioms(bad)
    assert not report.passed
    assert report.axiom == "triangle"
    assert [bad.name(p) for p in report.witness] == ["x", "z", "y"]


@pytest.mark.parametrize(
    "matrix, axiom, witness",
    [
        ([[0, 1, 1], [2, 0, 1], [1, 1, 0]], "symmetry", (0, 1)),
        ([[0, 1, 1], [1, 1, 1], [1, 1, 0]], "identity", (1,)),
        ([[0, 0, 1], [0, 0, 1], [1, 1, 0]], "identity", (0, 1)),
        ([[0, -1, 1], [-1, 0, 1], [1, 1, 0]], "nonnegativity", (0, 1)),
    ],
)
def test_verify_pair_axioms(matrix, axiom, witness):
    report = verify_metric_axioms(FiniteSpace(["x", "y", "z"], matrix))
    assert (report.passed, report.axiom, report.witness) == (False, axiom, witness)


def test_window_rules():
    space, _ = make_paper_space()

    class Bare(ComputableSpace):
        def _distance(self, p, q):
            return Fraction(1)

    with pytest.raises(WindowError):
        verify_metric_axioms(Bare())
    with pytest.raises(CapacityError):
        space.points(201)
    assert space.points(3) == [0, 1, 2, 3, STAR]


def test_perimeter_examples(equilateral, paper):
    assert perimeter(equilateral, Triple(0, 1, 2)) == 3
    assert perimeter(paper[0], Triple(0, 1, 2)) == 4
    assert perimeter(equilateral.scaled(2), Triple(0, 1, 2)) == 6
    with pytest.raises(ValueError):
        Triple(0, 0, 1)


def test_is_between(equilateral, paper):
    space, _ = paper
    assert is_between(space, 0, 1, 2)
    # d(x1, x*) = 3 = d(x1, x3) + d(x3, x*) = 3/2 + 3/2
    assert is_between(space, 1, 3, STAR)
    assert not any(is_between(equilateral, *p) for p in permutations(range(3)))
    with pytest.raises(ValueError):
        is_between(space, 1, 1, 2)


def test_betweenness_totality_on_window():
    space, _ = make_paper_space(PaperSpaceParams(window=24))
    for a, b, c in combinations(space.points(), 3):
        hits = [is_between(space, a, b, c), is_between(space, b, a, c), is_between(space, a, c, b)]
        assert sum(hits) == 1, (a, b, c)


@st.composite
def small_spaces(draw):
    import numpy as np

    from triperi.random_spaces import random_finite_space

    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(3, 8))
    return random_finite_space(np.random.default_rng(seed), n)


@settings(max_examples=60, deadline=None)
@given(small_spaces(), st.data())
def test_perimeter_permutation_invariant(space, data):
    t = data.draw(st.permutations(range(len(space))))[:3]
    values = {perimeter(space, Triple(*p)) for p in permutations(t)}
    assert len(values) == 1


@settings(max_examples=60, deadline=None)
@given(small_spaces())
def test_random_spaces_are_metric(space):
    assert verify_metric_axioms(space).passed


def test_exact_matches_float_mode():
    exact, _ = make_paper_space(PaperSpaceParams(window=20))
    flt, _ = make_paper_space(PaperSpaceParams(scale=1.0, window=20, exact=False))
    assert verify_metric_axioms(flt).passed
    for p, q in combinations(exact.points(), 2):
        assert float(exact.distance(p, q)) == pytest.approx(flt.distance(p, q), rel=1e-9, abs=1e-12)
    for t in combinations(exact.points(), 3):
        assert float(perimeter(exact, Triple(*t))) == pytest.approx(perimeter(flt, Triple(*t)), rel=1e-9)
