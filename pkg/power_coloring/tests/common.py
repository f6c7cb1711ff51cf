# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
import unittest

from ..analysis import oracle_enumerate_proper
from ..construct import extend_partial, parity_table, trivial_coloring
from ..models import ColoringTable, FinitePoint, SpaceSig
from ..tools import config


class TestPowerColoringCommon(unittest.TestCase):
    @classmethod
    def table_of(cls, sig, function):
        return ColoringTable.from_function(sig, function)

    @classmethod
    def point(cls, *coords):
        return FinitePoint(coords)

    @classmethod
    def mix_recolored(cls, lambda_, kappa, a, b, mix):
        """Proper table where ``mix`` (coordinates in {a, b}) gets a color
        neither c_a nor c_b has."""
        return extend_partial(
            SpaceSig(lambda_, kappa, kappa),
            {
                FinitePoint((a,) * lambda_): 0,
                FinitePoint((b,) * lambda_): 1,
                FinitePoint(mix): 2,
            },
        )

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.sig_233 = SpaceSig(2, 3, 3)
        cls.sig_322 = SpaceSig(3, 2, 2)
        cls.trivial_0 = trivial_coloring(cls.sig_233, 0)
        cls.trivial_1 = trivial_coloring(cls.sig_233, 1)
        cls.constant_0 = ColoringTable(SpaceSig(2, 3, 1), [0] * 9)
        cls.parity_1_2 = parity_table(1, 2)
        cls.oracle_233 = list(oracle_enumerate_proper(cls.sig_233))
        cls.oracle_322 = list(oracle_enumerate_proper(cls.sig_322))

    def tearDown(self):
        config.reset()
        super().tearDown()
