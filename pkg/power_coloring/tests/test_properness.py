# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
import itertools

from ..analysis import (
    classes_maximal_lawful,
    is_lawful,
    is_maximal_lawful,
    is_proper,
    is_tight,
    lawful_classes,
)
from ..models import SpaceSig
from .common import TestPowerColoringCommon


class TestProperness(TestPowerColoringCommon):
    def test_trivial_is_proper(self):
        verdict = is_proper(self.trivial_0)
        self.assertTrue(verdict)
        self.assertIsNone(verdict.witness)

    def test_constant_is_not_proper(self):
        verdict = is_proper(self.constant_0)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (self.point(0, 0), self.point(1, 1)))

    def test_single_point_space(self):
        sig = SpaceSig(1, 1, 1)
        self.assertTrue(is_proper(self.table_of(sig, lambda x: 0)))

    def test_lawful(self):
        self.assertTrue(is_lawful([self.point(0, 0), self.point(0, 1), self.point(0, 2)]))
        verdict = is_lawful([self.point(1, 1), self.point(0, 0), self.point(0, 1)])
        self.assertEqual(verdict.witness, (self.point(0, 0), self.point(1, 1)))

    def test_maximal_lawful(self):
        column = [self.point(0, 0), self.point(0, 1), self.point(0, 2)]
        self.assertTrue(is_maximal_lawful(column, self.sig_233))
        verdict = is_maximal_lawful(column[:2], self.sig_233)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (self.point(0, 2),))
        verdict = is_maximal_lawful([self.point(0, 0), self.point(1, 1)], self.sig_233)
        self.assertEqual(verdict.witness, (self.point(0, 0), self.point(1, 1)))

    def test_lawful_classes(self):
        verdicts = lawful_classes(self.trivial_1)
        self.assertEqual(sorted(verdicts), [0, 1, 2])
        self.assertTrue(all(verdicts.values()))
        self.assertTrue(classes_maximal_lawful(self.parity_1_2))
        shifted = self.trivial_0.with_colors([0, 1, 2, 0, 1, 2, 0, 1, 3], mu=4)
        verdict = classes_maximal_lawful(shifted)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness[0], 2)

    def test_tight_iff_classes_maximal_lawful(self):
        for table in self.oracle_233 + self.oracle_322:
            self.assertEqual(
                bool(is_proper(table) and is_tight(table)),
                bool(classes_maximal_lawful(table)),
                table,
            )

    def test_maximal_lawful_subsets_of_a_line(self):
        sig = SpaceSig(1, 3, 3)
        points = list(sig.points())
        maximal = [
            subset
            for size in range(len(points) + 1)
            for subset in itertools.combinations(points, size)
            if is_maximal_lawful(subset, sig)
        ]
        self.assertEqual(maximal, [(self.point(0),), (self.point(1),), (self.point(2),)])

    def test_column_is_maximal_lawful(self):
        for sig in (SpaceSig(3, 2, 2), SpaceSig(3, 3, 3)):
            column = [x for x in sig.points() if x[0] == 0]
            self.assertTrue(is_maximal_lawful(column, sig))
            self.assertFalse(is_maximal_lawful(column[1:], sig))
