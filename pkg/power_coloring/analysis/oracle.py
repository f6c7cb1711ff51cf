# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Brute-force enumeration of every proper coloring of a small space."""

import logging

from ..exceptions import BudgetExceeded
from ..models.coloring_table import ColoringTable
from ..tools import config

_logger = logging.getLogger(__name__)


def oracle_enumerate_proper(sig, budget=None):
    """Yield each proper coloring ^λκ -> μ exactly once.

    Backtracking over points in enc order, colors tried in increasing order;
    a color is skipped when an earlier totally different point already has
    it. Raises :class:`BudgetExceeded` after ``budget`` search nodes
    (default ``config["oracle_budget"]``).
    """
    if budget is None:
        budget = config["oracle_budget"]
    size = sig.size
    adjacency = sig.total_difference
    earlier = [[int(m) for m in range(n) if adjacency[n, m]] for n in range(size)]
    assigned = [0] * size
    trial = [0] * size
    nodes = 0
    emitted = 0
    n = 0
    while n >= 0:
        if n == size:
            emitted += 1
            yield ColoringTable(sig, assigned)
            n -= 1
            continue
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(
                "Oracle for %s went over its budget of %s nodes." % (sig, budget)
            )
        blocked = {assigned[m] for m in earlier[n]}
        color = trial[n]
        while color < sig.mu and color in blocked:
            color += 1
        if color < sig.mu:
            assigned[n] = color
            trial[n] = color + 1
            n += 1
            if n < size:
                trial[n] = 0
        else:
            n -= 1
    _logger.debug("Oracle for %s: %s tables, %s nodes", sig, emitted, nodes)
