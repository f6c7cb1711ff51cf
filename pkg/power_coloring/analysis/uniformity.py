# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import logging

import numpy as np

from ..exceptions import ValidationError
from .verdict import Verdict

_logger = logging.getLogger(__name__)


def _check_palette(table):
    if table.sig.mu < table.sig.kappa:
        raise ValidationError(
            "Uniformity needs colors 0..%s, the table has mu=%s."
            % (table.sig.kappa - 1, table.sig.mu)
        )


def is_strongly_uniform(table):
    """F(c_α) = α for every α < κ; the witness is the first failing c_α."""
    _check_palette(table)
    sig = table.sig
    for alpha in range(sig.kappa):
        point = sig.constant(alpha)
        if table.eval(point) != alpha:
            return Verdict.failed(point)
    return Verdict.passed()


def weak_uniformity_search(table):
    """Backtracking search for pairwise totally different r_0, ..., r_{κ-1}
    with F(r_α) = α.

    Colors are assigned in increasing order and candidates for each color
    tried in enc order. Returns (witness, deepest): the first witness found
    or None, and the longest partial sequence reached.
    """
    _check_palette(table)
    sig = table.sig
    adjacency = sig.total_difference
    candidates = [np.flatnonzero(table.colors == alpha) for alpha in range(sig.kappa)]
    deepest = []
    visited = 0

    def extend(chosen, allowed):
        nonlocal deepest, visited
        visited += 1
        if len(chosen) > len(deepest):
            deepest = list(chosen)
        if len(chosen) == sig.kappa:
            return chosen
        for n in candidates[len(chosen)]:
            if allowed[n]:
                found = extend(chosen + [int(n)], allowed & adjacency[n])
                if found is not None:
                    return found
        return None

    found = extend([], np.ones(sig.size, dtype=bool))
    _logger.debug("Weak uniformity search on %s visited %s nodes", sig, visited)
    witness = None if found is None else tuple(sig.dec(n) for n in found)
    return witness, tuple(sig.dec(n) for n in deepest)


def is_weakly_uniform(table):
    """The witness sequence (r_0, ..., r_{κ-1}), or None when none exists."""
    witness, _deepest = weak_uniformity_search(table)
    return witness


def range_closure_check(table, point, values):
    """For a strongly uniform proper table, a point with every coordinate in
    ``values`` gets a color in ``values``."""
    values = set(values)
    if any(v not in values for v in point):
        raise ValidationError("Point %s has coordinates outside %s." % (point, sorted(values)))
    return table.eval(point) in values
