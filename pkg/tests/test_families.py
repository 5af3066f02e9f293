"""Families, pair orderings, and the structure checkers."""

import pytest

import lanterns as L


def test_validate_ordering_examples():
    assert L.validate_ordering(L.PairOrdering(3, ((1, 2), (1, 3), (2, 3))))
    assert not L.validate_ordering(L.PairOrdering(3, ((1, 3), (1, 2), (2, 3))))
    assert L.validate_ordering(
        L.PairOrdering(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
    )


def test_validate_ordering_malformed():
    with pytest.raises(L.MalformedOrdering):
        L.validate_ordering(L.PairOrdering(3, ((1, 2), (1, 2), (2, 3))))
    with pytest.raises(L.MalformedOrdering):
        L.validate_ordering(L.PairOrdering(3, ((1, 2), (1, 3))))


def test_realize_wajnryb_family():
    for n in (3, 4, 5, 6):
        arr = L.realize_wajnryb(n)
        ordering = L.extract_pair_ordering(arr)
        lex = tuple(
            (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
        )
        assert ordering.pairs == lex
        assert L.validate_ordering(ordering)
        relation = L.lantern_relation(arr)
        assert relation.lhs == ((0, 1),) + tuple((k, n - 2) for k in range(1, n + 1))
        assert L.verify_relation(relation).verified


def test_realize_wajnryb_range():
    with pytest.raises(ValueError):
        L.realize_wajnryb(2)


def test_realize_ordering_lex_round_trip():
    ordering = L.PairOrdering(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
    arr = L.realize_ordering(ordering)
    assert isinstance(arr, L.Arrangement)
    assert L.extract_pair_ordering(arr).pairs == ordering.pairs
    assert L.extract_pair_ordering(arr).pairs == L.extract_pair_ordering(
        L.realize_wajnryb(4)
    ).pairs


def test_realize_ordering_lantern():
    arr = L.realize_ordering(L.PairOrdering(3, ((1, 2), (1, 3), (2, 3))))
    assert isinstance(arr, L.Arrangement)
    relation = L.lantern_relation(arr)
    # rank order (1,2) > (1,3) > (2,3), so the temporal display reads back
    # from the leftmost point
    assert L.export_relation(relation, "text") == "d0 d1 d2 d3 = a23 a13 a12\n"
    assert L.verify_relation(relation).verified


def test_realize_ordering_nonlex_feasible():
    # admissible and realizable: line 4 crosses everything left of the
    # triangle of lines 1..3
    ordering = L.PairOrdering(4, ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)))
    arr = L.realize_ordering(ordering)
    assert isinstance(arr, L.Arrangement)
    assert L.extract_pair_ordering(arr).pairs == ordering.pairs


def test_realize_ordering_rejects_invalid():
    with pytest.raises(ValueError):
        L.realize_ordering(L.PairOrdering(3, ((1, 3), (1, 2), (2, 3))))


def test_realize_ordering_honest_unrealized():
    # Admissible, but x(1,3) always lies strictly between x(1,2) and
    # x(2,3), so no real arrangement puts (1,3) after both.
    ordering = L.PairOrdering(3, ((1, 2), (2, 3), (1, 3)))
    assert L.validate_ordering(ordering)
    result = L.realize_ordering(ordering)
    assert isinstance(result, L.Unrealized)
    assert result.candidate is not None
    assert result.realized is not None
    assert result.realized.pairs[0] == ordering.pairs[0]
    assert result.first_mismatch == 1
    assert "prefix" in result.message


def test_make_daisy_combinatorics():
    arr = L.make_daisy(4)
    points = L.intersections(arr)
    assert [set(p.lines) for p in points] == [{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}]
    mu = L.line_multiplicities(arr, points)
    assert mu == {1: 3, 2: 2, 3: 2, 4: 2}

    arr6 = L.make_daisy(6)
    points6 = L.intersections(arr6)
    assert len(points6) == 6
    assert [set(p.lines) for p in points6[:5]] == [{1, k} for k in range(2, 7)]
    assert set(points6[5].lines) == {2, 3, 4, 5, 6}


def test_daisy_is_lantern_at_three():
    check = L.check_daisy(3)
    assert check.ok
    # same boundary powers as the classical lantern; the crossings of the
    # three-petal daisy rank (1,2) first, so its display runs the other way
    assert L.export_relation(check.relation, "text") == "d0 d1 d2 d3 = a23 a13 a12\n"
    assert check.relation.lhs == ((0, 1), (1, 1), (2, 1), (3, 1))


def test_check_daisy_range():
    for n in range(3, 9):
        check = L.check_daisy(n)
        assert check.ok, check.problems
        assert check.relation.lhs == ((0, 1), (1, n - 2)) + tuple(
            (k, 1) for k in range(2, n + 1)
        )
        rank_sets = [d.enclosed for d in reversed(check.relation.rhs)]
        assert rank_sets == [frozenset({1, k}) for k in range(2, n + 1)] + [
            frozenset(range(2, n + 1))
        ]


def test_daisy_negative_control_reordered_crossings():
    # Mirror the daisy: crossings now sit left of the center, so the rank
    # order departs from the daisy pattern while the relation still holds.
    n = 5
    coefficients = [(n, 1)] + [(n + 1 - i, 0) for i in range(2, n + 1)]
    arr = L.validate_arrangement(coefficients)
    check = L.check_daisy_arrangement(arr)
    assert check.verification.verified
    assert not check.rhs_ok
    assert not check.ok
    assert any("rank-1 factor" in p for p in check.problems)


def test_make_daisy_range():
    with pytest.raises(ValueError):
        L.make_daisy(2)


def test_doubled_daisy_combinatorics():
    arr = L.make_doubled_daisy(5)
    points = L.intersections(arr)
    assert len(points) == 2 * 5 - 2
    sets = [set(p.lines) for p in points]
    assert sets == [
        {1, 2}, {1, 3}, {1, 4}, {1, 5},
        {2, 3, 4},
        {2, 5}, {3, 5}, {4, 5},
    ]
    mu = L.line_multiplicities(arr, points)
    assert mu == {1: 4, 2: 3, 3: 3, 4: 3, 5: 4}


def test_check_doubled_daisy():
    for n in (5, 6):
        check = L.check_doubled_daisy(n)
        assert check.ok, check.problems
        assert check.display_ok
        assert check.relation.lhs == (
            ((0, 1), (1, n - 2))
            + tuple((k, 2) for k in range(2, n))
            + ((n, n - 2),)
        )
        assert len(check.relation.rhs) == 2 * n - 2


def test_doubled_daisy_range():
    with pytest.raises(ValueError):
        L.make_doubled_daisy(4)


def test_pencil_range():
    with pytest.raises(ValueError):
        L.make_pencil(1)
