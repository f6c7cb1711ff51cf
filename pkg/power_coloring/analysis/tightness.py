# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Tightness, C-tightness, ν-tightness and minimality of tables.

All of them ask, for a point x and a color β, whether some y totally
different from x carries β. ``reach[x, β]`` answers that for every pair
at once.
"""

import itertools
import logging

import numpy as np

from ..exceptions import ValidationError
from ..models.point import FinitePoint
from .graph import onehot
from .verdict import Verdict

_logger = logging.getLogger(__name__)


def _reach(table, palette):
    """reach[n, j]: some point totally different from dec(n) has palette[j]."""
    carriers = onehot(table.colors, palette).astype(np.int64)
    return (table.sig.total_difference.astype(np.int64) @ carriers) > 0


def _first_gap(table, needed, palette):
    """First (x, β) in enc order with ``needed`` set and no reach."""
    gaps = needed & ~_reach(table, palette)
    found = np.argwhere(gaps)
    if not len(found):
        return Verdict.passed()
    n, j = found[0]
    return Verdict.failed((table.sig.dec(int(n)), int(palette[j])))


def is_tight(table):
    """For every x and every β ≠ F(x) in μ some y ≢ x has F(y) = β.

    Colors of μ that the table never uses make this fail. The witness is
    (x, β).
    """
    palette = np.arange(table.sig.mu)
    needed = table.colors[:, None] != palette[None, :]
    verdict = _first_gap(table, needed, palette)
    _logger.debug("Tightness of %s: %s", table.sig, verdict.holds)
    return verdict


def is_c_tight(table, colors):
    """Tightness quantified over the colors of ``colors`` only.

    Requires the range of the table inside ``colors``; a point colored
    outside is returned as the witness (x, F(x)).
    """
    palette = np.array(sorted(set(colors)), dtype=np.int64)
    outside = ~np.isin(table.colors, palette)
    if outside.any():
        n = int(np.argmax(outside))
        return Verdict.failed((table.sig.dec(n), int(table.colors[n])))
    needed = table.colors[:, None] != palette[None, :]
    return _first_gap(table, needed, palette)


def is_minimal(table):
    """For every x and every β < F(x) some y ≢ x has F(y) = β."""
    palette = np.arange(table.sig.mu)
    needed = palette[None, :] < table.colors[:, None]
    return _first_gap(table, needed, palette)


def is_nu_tight(table, nu):
    """For any ν points and any β none of them carries, some y totally
    different from all of them carries β.

    Sequences may repeat points. Only sorted sequences are scanned: the
    condition does not depend on order, and the lexicographically first
    failing sequence is always sorted. The witness is (points, β).
    """
    if nu < 1:
        raise ValidationError("nu must be at least 1, got %s." % nu)
    sig = table.sig
    mu = sig.mu
    carriers = onehot(table.colors, range(mu))
    adjacency = sig.total_difference
    colors = table.colors.tolist()
    scanned = 0

    def descend(start, chosen, common, missing):
        nonlocal scanned
        if len(chosen) == nu:
            scanned += 1
            available = carriers[common].any(axis=0)
            gaps = missing & ~available
            if gaps.any():
                return tuple(sig.dec(n) for n in chosen), int(np.argmax(gaps))
            return None
        for n in range(start, sig.size):
            narrowed = missing.copy()
            narrowed[colors[n]] = False
            found = descend(n, chosen + [n], common & adjacency[n], narrowed)
            if found is not None:
                return found
        return None

    found = descend(0, [], np.ones(sig.size, dtype=bool), np.ones(mu, dtype=bool))
    _logger.debug("%s-tightness of %s: %s sequences scanned", nu, sig, scanned)
    if found is None:
        return Verdict.passed()
    return Verdict.failed(found)


def mix_closure_check(table, points, y):
    """A coordinatewise mix y of the points gets one of their colors.

    Holds for 2-tight proper tables. Raises when some y(i) is not among the
    x_j(i).
    """
    points = list(points)
    if not points:
        raise ValidationError("A mix needs at least one point.")
    for i, value in enumerate(y):
        if all(x[i] != value for x in points):
            raise ValidationError(
                "Coordinate %s of %s is not taken from the points." % (i, y)
            )
    return table.eval(y) in {table.eval(x) for x in points}


def mixes(points):
    """Every coordinatewise mix of ``points``."""
    choices = [sorted({x[i] for x in points}) for i in range(len(points[0]))]
    for coords in itertools.product(*choices):
        yield FinitePoint(coords)
