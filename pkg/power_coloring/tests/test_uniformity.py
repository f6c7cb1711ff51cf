# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
from ..analysis import (
    PrincipalUltrafilter,
    corresponding_ultrafilter,
    is_strongly_uniform,
    is_weakly_uniform,
    range_closure_check,
    satisfies_switch_condition,
    weak_uniformity_search,
)
from ..analysis.properness import is_lawful
from ..construct import recolor, trivial_coloring
from ..exceptions import ValidationError
from ..models import totally_different
from .common import TestPowerColoringCommon


class TestUniformity(TestPowerColoringCommon):
    def test_strong_uniformity(self):
        self.assertTrue(is_strongly_uniform(self.trivial_0))
        swapped = recolor(self.trivial_0, [1, 0, 2])
        verdict = is_strongly_uniform(swapped)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, self.point(0, 0))
        with self.assertRaises(ValidationError):
            is_strongly_uniform(self.constant_0)

    def test_weak_uniformity_of_proper_colorings(self):
        for table in self.oracle_233:
            witness = is_weakly_uniform(table)
            self.assertEqual(len(witness), 3)
            self.assertEqual([table(r) for r in witness], [0, 1, 2])
            for n, x in enumerate(witness):
                for y in witness[n + 1:]:
                    self.assertTrue(totally_different(x, y))

    def test_weak_uniformity_failure(self):
        column = self.table_of(self.sig_233.with_mu(3), lambda x: 0 if x[0] == 0 else 1)
        witness, deepest = weak_uniformity_search(column)
        self.assertIsNone(witness)
        self.assertEqual(len(deepest), 2)
        self.assertFalse(is_lawful(deepest))

    def test_corresponding_ultrafilter(self):
        self.assertEqual(
            corresponding_ultrafilter(self.trivial_1), PrincipalUltrafilter(1, 2)
        )
        self.assertIsNone(corresponding_ultrafilter(recolor(self.trivial_1, [2, 0, 1])))
        self.assertIsNone(corresponding_ultrafilter(self.parity_1_2))

    def test_switch_condition(self):
        for coordinate in range(2):
            for permutation in ([0, 1, 2], [2, 0, 1]):
                table = trivial_coloring(self.sig_233, coordinate, permutation)
                ultrafilter = PrincipalUltrafilter(coordinate, 2)
                self.assertTrue(satisfies_switch_condition(table, ultrafilter, permutation))
                other = PrincipalUltrafilter(1 - coordinate, 2)
                self.assertFalse(satisfies_switch_condition(table, other, permutation))

    def test_ultrafilter_factor(self):
        ultrafilter = PrincipalUltrafilter(0, 3)
        self.assertIn({0, 2}, ultrafilter)
        self.assertNotIn({1, 2}, ultrafilter)
        self.assertTrue(ultrafilter.same_class(self.point(1, 0, 2), self.point(1, 2, 0)))
        self.assertEqual(ultrafilter.class_key(self.point(2, 0, 1)), 2)
        with self.assertRaises(ValidationError):
            PrincipalUltrafilter(3, 3)

    def test_range_closure(self):
        for table in self.oracle_233:
            if is_strongly_uniform(table):
                self.assertTrue(range_closure_check(table, self.point(0, 2), {0, 2}))
        with self.assertRaises(ValidationError):
            range_closure_check(self.trivial_0, self.point(1, 2), {0, 2})
