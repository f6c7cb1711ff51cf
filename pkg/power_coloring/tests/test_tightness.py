# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
import itertools

import numpy as np

from ..analysis import (
    is_c_tight,
    is_minimal,
    is_nu_tight,
    is_proper,
    is_tight,
    mix_closure_check,
    oracle_enumerate_proper,
)
from ..analysis.tightness import mixes
from ..construct import trivial_coloring
from ..exceptions import ValidationError
from ..models import ColoringTable, FinitePoint, SpaceSig
from .common import TestPowerColoringCommon


class TestTightness(TestPowerColoringCommon):
    def test_trivial_is_tight_and_minimal(self):
        self.assertTrue(is_tight(self.trivial_0))
        self.assertTrue(is_minimal(self.trivial_0))
        self.assertTrue(is_nu_tight(self.trivial_0, 2))

    def test_unused_color_breaks_tightness(self):
        widened = self.trivial_0.with_colors(self.trivial_0.colors, mu=4)
        verdict = is_tight(widened)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (self.point(0, 0), 3))
        self.assertTrue(is_c_tight(widened, {0, 1, 2}))
        self.assertTrue(is_minimal(widened))

    def test_c_tight_range_check(self):
        verdict = is_c_tight(self.trivial_0, {0, 1})
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (self.point(2, 0), 2))

    def test_shifted_is_not_minimal(self):
        sig = SpaceSig(1, 3, 4)
        shifted = self.table_of(sig, lambda x: x[0] + 1)
        verdict = is_minimal(shifted)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, (self.point(0), 0))

    def test_parity_not_2_tight(self):
        self.assertTrue(is_tight(self.parity_1_2))
        verdict = is_nu_tight(self.parity_1_2, 2)
        self.assertFalse(verdict)
        self.assertEqual(verdict.witness, ((self.point(0, 0, 0), self.point(1, 1, 0)), 1))
        with self.assertRaises(ValidationError):
            is_nu_tight(self.parity_1_2, 0)

    def test_nu_tight_one_is_tight(self):
        for table in self.oracle_322:
            self.assertEqual(bool(is_nu_tight(table, 1)), bool(is_tight(table)))

    def test_proper_tight_colorings_are_2_tight(self):
        for table in self.oracle_233:
            self.assertTrue(is_proper(table) and is_tight(table))
            self.assertTrue(is_nu_tight(table, 2))

    def test_mix_closure(self):
        x, y = self.point(0, 1), self.point(2, 0)
        found = list(mixes([x, y]))
        self.assertEqual(len(found), 4)
        for table in self.oracle_233:
            for mix in found:
                self.assertTrue(mix_closure_check(table, [x, y], mix))
        with self.assertRaises(ValidationError):
            mix_closure_check(self.trivial_0, [x, y], self.point(1, 1))

    def lowering_is_proper(self, table):
        colors = table.colors.tolist()
        for n, color in enumerate(colors):
            for beta in range(color):
                lowered = colors[:n] + [beta] + colors[n + 1:]
                if is_proper(ColoringTable(table.sig, lowered)):
                    return True
        return False

    def test_minimal_iff_no_proper_lowering(self):
        tables = self.oracle_233 + self.oracle_322
        tables += list(oracle_enumerate_proper(SpaceSig(2, 2, 3)))
        tables += list(oracle_enumerate_proper(SpaceSig(1, 3, 4)))
        self.assertTrue(any(not is_minimal(table) for table in tables))
        for table in tables:
            self.assertEqual(bool(is_minimal(table)), not self.lowering_is_proper(table), table)

    def test_nu_tight_monotone(self):
        for table in self.oracle_233 + self.oracle_322:
            verdicts = [bool(is_nu_tight(table, nu)) for nu in (1, 2, 3)]
            for weaker, stronger in zip(verdicts, verdicts[1:]):
                self.assertTrue(weaker or not stronger, (table, verdicts))

    def test_recolored_mix_is_not_2_tight(self):
        table = self.mix_recolored(2, 3, 0, 1, (0, 1))
        self.assertTrue(is_proper(table))
        self.assertEqual(table.eval(self.point(0, 1)), 2)
        self.assertFalse(is_nu_tight(table, 2))
        ends = [self.point(0, 0), self.point(1, 1)]
        self.assertFalse(mix_closure_check(table, ends, self.point(0, 1)))

    def test_mix_closure_on_all_pairs(self):
        tables = [t for t in self.oracle_233 + self.oracle_322 if is_nu_tight(t, 2)]
        self.assertTrue(tables)
        for table in tables:
            for x, y in itertools.combinations(list(table.sig.points()), 2):
                for mix in mixes([x, y]):
                    self.assertTrue(mix_closure_check(table, [x, y], mix), (table, x, y, mix))

    def test_mix_closure_random(self):
        sig = SpaceSig(3, 4, 4)
        rng = np.random.default_rng(11)
        tables = [
            trivial_coloring(sig, i, [int(v) for v in rng.permutation(4)]) for i in range(3)
        ]
        for table in tables:
            self.assertTrue(is_nu_tight(table, 2))
        for _i in range(1000):
            table = tables[int(rng.integers(3))]
            x, y = (FinitePoint(tuple(int(v) for v in row)) for row in rng.integers(4, size=(2, 3)))
            pick = rng.integers(2, size=3)
            mix = FinitePoint(tuple(x[i] if pick[i] else y[i] for i in range(3)))
            self.assertTrue(mix_closure_check(table, [x, y], mix), (x, y, mix))
