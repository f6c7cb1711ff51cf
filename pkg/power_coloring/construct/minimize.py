# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import logging

import numpy as np

from ..analysis.properness import is_proper
from ..exceptions import ValidationError

_logger = logging.getLogger(__name__)


def minimize(table):
    """A minimal proper coloring G <= ``table`` pointwise.

    Points are swept in enc order; each is moved to the smallest color no
    totally different point carries, when that color is below its own.
    Sweeps repeat until none changes anything.
    """
    verdict = is_proper(table)
    if not verdict:
        raise ValidationError(
            "Only proper colorings can be minimized: %s and %s share a color."
            % verdict.witness
        )
    adjacency = table.sig.total_difference
    colors = table.colors.copy()
    sweeps = 0
    changed = True
    while changed:
        changed = False
        sweeps += 1
        for index in range(colors.size):
            taken = np.zeros(table.sig.mu, dtype=bool)
            taken[colors[adjacency[index]]] = True
            lowest = int(np.argmin(taken))
            if not taken[lowest] and lowest < colors[index]:
                colors[index] = lowest
                changed = True
    _logger.debug(
        "Minimized %s in %s sweeps, %s entries lowered",
        table.sig,
        sweeps,
        int(np.count_nonzero(colors != table.colors)),
    )
    return table.with_colors(colors)


def lowered_entries(table, minimized):
    return int(np.count_nonzero(minimized.colors != table.colors))
