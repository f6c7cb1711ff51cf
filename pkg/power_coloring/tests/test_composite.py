# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
import unittest

import numpy as np

from ..analysis.sampling import (
    finite_independence_split,
    sample_dependency_bound,
    sample_proper,
)
from ..construct import (
    composite_coloring,
    composite_partition,
    dependence_witness,
    in_trace,
    rank_in_trace,
)
from ..construct.composite import witness_outside
from ..exceptions import UserError, ValidationError
from ..models import ColorCode, FinitePoint, TailPoint, constant, delta
from ..tools import config
from ..tools.pairing import pair, unfold, unpair


def folds_tail(g, length):
    for _i in range(length - 1):
        if g < 2:
            break
        g = unpair(g)[1]
    return g < 2


def count_trace_codes_below(target):
    count = 0
    tag = 0
    while pair(tag, pair(tag, 0)) < target:
        g = 0
        while pair(tag, pair(tag, g)) < target:
            count += folds_tail(g, 2 * tag + 1)
            g += 1
        tag += 1
    return count


def smallest_trace_codes(count):
    found = []
    n = 0
    while len(found) < count:
        tag, folded = unpair(n)
        code = ColorCode(tag, unfold(folded, 2 * tag + 2))
        if in_trace(code):
            found.append(code)
        n += 1
    return found


class TestCompositeColoring(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.coloring = composite_coloring()

    def test_constant_zero(self):
        self.assertEqual(self.coloring(constant(0)), ColorCode(0, (0, 0)))
        self.assertEqual(self.coloring.bound(constant(0)), 1)

    def test_formula(self):
        x = TailPoint((5, 3, 2, 7, 1), 4)
        self.assertEqual(self.coloring(x), ColorCode(2, (2, 1, 1, 3, 0, 0)))
        self.assertEqual(self.coloring.bound(x), 5)
        self.assertEqual(self.coloring(FinitePoint((2, 0, 1))), ColorCode(1, (1, 0, 0, 1)))
        with self.assertRaises(ValidationError):
            self.coloring(FinitePoint((2, 0)))

    def test_dependence_witnesses(self):
        for index in range(1, 9):
            x, y = dependence_witness(index)
            self.assertEqual(delta(x, y).exceptions, frozenset({2 * index}))
            self.assertTrue(delta(x, y).is_finite)
            self.assertNotEqual(self.coloring(x), self.coloring(y))
        with self.assertRaises(ValidationError):
            dependence_witness(0)

    def test_not_determined_by_finite_support(self):
        for support in ({0}, {0, 1, 2, 3}, {0, 5, 9}, set()):
            x, y = witness_outside(support)
            self.assertTrue(all(x[i] == y[i] for i in support))
            self.assertNotEqual(self.coloring(x), self.coloring(y))

    def test_sampled_properness(self):
        self.assertTrue(sample_proper(self.coloring, np.random.default_rng(4), 10 ** 4))

    def test_sampled_dependency_bound(self):
        self.assertTrue(
            sample_dependency_bound(self.coloring, np.random.default_rng(5), 10 ** 4)
        )

    def test_not_finite_independent(self):
        verdict = finite_independence_split(self.coloring, dependence_witness(1))
        self.assertFalse(verdict)

    def test_partition_window(self):
        points = [TailPoint((v, w), t) for v in range(8) for w in range(2) for t in range(2)]
        partition = composite_partition()
        self.assertEqual(partition.check(points, range(4)), [])
        self.assertEqual(partition.piece_of(TailPoint((7,), 0))[0], 3)

    def test_normalized(self):
        normalized = composite_coloring(normalize=True)
        self.assertEqual(normalized(constant(0)), 0)
        self.assertEqual(normalized(constant(1)), 2)
        self.assertEqual(normalized(FinitePoint((2, 0, 0))), 1)


class TestRank(unittest.TestCase):
    def test_smallest_codes(self):
        self.assertEqual(rank_in_trace(ColorCode(0, (0, 0))), 0)
        self.assertEqual(rank_in_trace(ColorCode(1, (1, 0, 0, 0))), 1)
        self.assertEqual(rank_in_trace(ColorCode(0, (0, 1))), 2)
        self.assertEqual(rank_in_trace(ColorCode(2, (2, 0, 0, 0, 0, 0))), 3)

    def test_ranks_have_no_gaps(self):
        codes = smallest_trace_codes(16)
        self.assertEqual([rank_in_trace(code) for code in codes], list(range(16)))

    def test_rank_monotone(self):
        codes = smallest_trace_codes(40)
        ranks = [rank_in_trace(code) for code in codes]
        self.assertEqual(ranks, sorted(ranks))
        self.assertEqual(ranks, list(range(40)))

    def test_rank_rejects_foreign_codes(self):
        for code in (ColorCode(1, (0, 0, 0, 0)), ColorCode(0, (0, 2)), ColorCode(1, (1, 0))):
            self.assertFalse(in_trace(code))
            with self.assertRaises(ValidationError):
                rank_in_trace(code)

    def test_rank_matches_count_below_two_thousand(self):
        codes = []
        for n in range(2000):
            tag, folded = unpair(n)
            code = ColorCode(tag, unfold(folded, 2 * tag + 2))
            if in_trace(code):
                codes.append(code)
        self.assertEqual([rank_in_trace(code) for code in codes], list(range(len(codes))))

    def test_rank_of_wide_points(self):
        coloring = composite_coloring()
        code = coloring(TailPoint((6,), 0))
        self.assertEqual(code.int_code, 51)
        self.assertEqual(rank_in_trace(code), 5)
        for prefix in ((6, 0, 0, 0, 0, 2), (6, 2, 2), (8, 4), (12, 6), (9, 3, 1, 0, 2, 1)):
            code = coloring(TailPoint(prefix, 0))
            self.assertEqual(
                rank_in_trace(code), count_trace_codes_below(code.int_code), prefix
            )

    def test_rank_of_huge_codes(self):
        coloring = composite_coloring()
        prefixes = ((6,), (6, 1), (6, 3), (5, 7, 7, 7, 7), (6, 0, 0, 0, 0, 2))
        points = [TailPoint(prefix, 0) for prefix in prefixes]
        codes = sorted((coloring(x) for x in points), key=lambda code: code.int_code)
        ranks = [rank_in_trace(code) for code in codes]
        self.assertEqual(ranks, sorted(set(ranks)))
        self.assertGreater(codes[-1].int_code.bit_length(), 100)
        normalized = composite_coloring(normalize=True)
        x = TailPoint((6, 1), 0)
        self.assertEqual(normalized(x), rank_in_trace(coloring(x)))

    def test_rank_refuses_oversized_codes(self):
        code = composite_coloring()(TailPoint((14, 1), 0))
        with self.assertRaises(UserError):
            rank_in_trace(code)

    def test_rank_through_diagonal_decomposition(self):
        coloring = composite_coloring()
        prefixes = ((6, 0, 0, 0, 0, 2), (9, 3, 1, 0, 2, 1))
        codes = [coloring(TailPoint(prefix, 0)) for prefix in prefixes]
        expected = [count_trace_codes_below(code.int_code) for code in codes]
        config["space_limit"] = 60
        try:
            self.assertEqual([rank_in_trace(code) for code in codes], expected)
        finally:
            config.reset()
