"""Partition values, statistics, and diagram surgery."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kerovpoly.partitions import (
    Partition,
    add_node,
    dominates,
    down_part,
    enumerate_partitions,
    remove_part,
    stats,
    surgery,
    union_part,
    up_part,
)

P = Partition

partition_strategy = st.lists(st.integers(1, 9), max_size=7).map(
    lambda xs: P(tuple(sorted(xs, reverse=True)))
)


def brute_force_partitions(n, min_part):
    # independent oracle: filter the full rev-lex list
    return [p for p in enumerate_partitions(n) if all(x >= min_part for x in p)]


class TestEnumeration:
    def test_standard_order(self):
        assert enumerate_partitions(4) == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]

    def test_empty(self):
        assert enumerate_partitions(0) == [P(())]

    def test_min_part_against_brute_force(self):
        assert enumerate_partitions(6, 2) == [P((6,)), P((4, 2)), P((3, 3)), P((2, 2, 2))]
        for n in range(9):
            for mp in (1, 2, 3):
                assert enumerate_partitions(n, mp) == brute_force_partitions(n, mp)

    def test_counts(self):
        counts = [len(enumerate_partitions(n)) for n in range(11)]
        assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_validation(self):
        with pytest.raises(ValueError):
            P((1, 2))
        with pytest.raises(ValueError):
            P((2, 0))


class TestConjugate:
    def test_example(self):
        assert P((4, 3, 3, 3, 1)).conjugate() == P((5, 4, 4, 1))

    def test_empty(self):
        assert P(()).conjugate() == P(())

    @given(partition_strategy)
    @settings(max_examples=80, deadline=None)
    def test_involution_and_weight(self, lam):
        conj = lam.conjugate()
        assert conj.conjugate() == lam
        assert conj.weight == lam.weight

    def test_conjugate_multiplicities(self):
        for n in range(13):
            for lam in enumerate_partitions(n):
                conj = lam.conjugate()
                for i in range(1, len(lam) + 1):
                    nxt = lam[i] if i < len(lam) else 0
                    assert conj.multiplicity(i) == lam[i - 1] - nxt


class TestStats:
    def test_two_two(self):
        s = stats(P((2, 2)))
        assert (s.z, s.u, s.v, s.w) == (8, 1, 1, 4)

    def test_three_two(self):
        s = stats(P((3, 2)))
        assert s.v == 2 and s.w == 7

    def test_u(self):
        assert stats(P((2, 1, 1))).u == 3

    def test_class_size_identity(self):
        # sum over cycle types of the class sizes is n!
        for n in range(1, 11):
            total = sum(Fraction(math.factorial(n), stats(mu).z) for mu in enumerate_partitions(n))
            assert total == math.factorial(n)


class TestSurgery:
    def test_add_node(self):
        assert add_node(P((2, 2)), 1) == P((3, 2))
        assert add_node(P((2, 2)), 3) == P((2, 2, 1))
        with pytest.raises(ValueError):
            add_node(P((2, 2)), 2)

    def test_kinds(self):
        assert surgery(P((3, 2)), "down", 3) == P((2, 2))
        assert surgery(P((3, 2)), "up", 2) == P((3, 3))
        assert surgery(P((3, 2)), "union", 2) == P((3, 2, 2))
        assert surgery(P((3, 2)), "remove", 2) == P((3,))
        with pytest.raises(ValueError):
            surgery(P((3, 2)), "remove", 5)
        with pytest.raises(ValueError):
            surgery(P((3, 2)), "shear", 2)

    @given(partition_strategy, st.integers(2, 9))
    @settings(max_examples=80, deadline=None)
    def test_down_then_up_restores(self, mu, r):
        if mu.multiplicity(r):
            assert up_part(down_part(mu, r), r - 1) == mu

    def test_down_drops_ones(self):
        assert down_part(P((2, 1)), 1) == P((2,))


class TestText:
    def test_round_trip(self):
        for n in range(8):
            for lam in enumerate_partitions(n):
                assert P.from_text(lam.text()) == lam
        assert P(()).text() == "[]"
        assert P((3, 2)).text() == "[3,2]"


def test_dominance():
    assert dominates(P((4,)), P((2, 2)))
    assert not dominates(P((2, 2)), P((3, 1)))
    assert dominates(P((3, 1)), P((2, 2)))
