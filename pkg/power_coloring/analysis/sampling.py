# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Seeded sampling checks for lazy colorings of ^ωω.

Lazy colorings cannot be scanned exhaustively; these helpers draw tail
points from a ``numpy.random.Generator`` and report the first failure.
"""

import logging

from ..models.point import TailPoint, almost_equal, totally_different
from ..tools import config
from .verdict import Verdict

_logger = logging.getLogger(__name__)


def random_tail_point(rng, max_prefix=12, max_value=24):
    length = int(rng.integers(0, max_prefix + 1))
    prefix = tuple(int(v) for v in rng.integers(0, max_value, size=length))
    return TailPoint(prefix, int(rng.integers(0, max_value)))


def totally_different_partner(rng, point, max_prefix=12, max_value=24):
    """A random tail point differing from ``point`` at every coordinate."""
    length = max(len(point.prefix), int(rng.integers(0, max_prefix + 1)))

    def other(value):
        drawn = int(rng.integers(0, max_value - 1))
        return drawn if drawn < value else drawn + 1

    prefix = tuple(other(point[i]) for i in range(length))
    return TailPoint(prefix, other(point.tail))


def check_proper_on_pairs(coloring, pairs):
    """No totally different pair among ``pairs`` shares a color."""
    for x, y in pairs:
        if totally_different(x, y) and coloring(x) == coloring(y):
            return Verdict.failed((x, y))
    return Verdict.passed()


def sample_proper(coloring, rng, count=None):
    count = config["sample_count"] if count is None else count

    def pairs():
        for _i in range(count):
            x = random_tail_point(rng)
            yield x, totally_different_partner(rng, x)

    verdict = check_proper_on_pairs(coloring, pairs())
    _logger.debug("Sampled properness on %s pairs: %s", count, verdict.holds)
    return verdict


def sample_dependency_bound(coloring, rng, count=None, max_value=24):
    """Changing coordinates at or above the declared bound keeps the color
    and the bound."""
    count = config["sample_count"] if count is None else count
    for _i in range(count):
        x = random_tail_point(rng, max_value=max_value)
        bound = coloring.bound(x)
        extra = int(rng.integers(0, 8))
        tail = tuple(int(v) for v in rng.integers(0, max_value, size=extra))
        y = TailPoint(x.head(bound) + tail, int(rng.integers(0, max_value)))
        if coloring(x) != coloring(y) or coloring.bound(y) != bound:
            return Verdict.failed((x, y))
    return Verdict.passed()


def finite_independence_split(coloring, points):
    """First almost equal pair among ``points`` with different colors.

    A finite independent coloring has none.
    """
    points = list(points)
    for n, x in enumerate(points):
        for y in points[n + 1:]:
            if almost_equal(x, y) and coloring(x) != coloring(y):
                return Verdict.failed((x, y))
    return Verdict.passed()
