# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Extension of a partial proper coloring to the whole space.

Points of A keep the pattern of G through a dense relabelling h1 of Ran(G)
into [0, block); every other point x gets block + x(0). The two color
blocks are disjoint, so the result is proper whenever G is proper on A.
"""

import logging

from ..exceptions import ValidationError
from ..models.coloring_table import ColoringTable
from ..models.point import FinitePoint, totally_different

_logger = logging.getLogger(__name__)


def _partial_items(sig, partial):
    items = {}
    for point, color in dict(partial).items():
        point = FinitePoint(tuple(point))
        sig.check_point(point)
        if not isinstance(color, int) or isinstance(color, bool) or color < 0:
            raise ValidationError("Partial colors must be naturals, got %r." % (color,))
        items[point] = color
    return items


def check_partial_proper(items):
    """First totally different pair of A sharing a G-color, in enc order, or None."""
    points = list(items)
    for n, x in enumerate(points):
        for y in points[n + 1:]:
            if items[x] == items[y] and totally_different(x, y):
                return x, y
    return None


def extend_partial(sig, partial):
    """Extend ``partial`` (a mapping point -> color on A) to a proper table.

    The output space keeps λ and κ of ``sig``; its μ is 2·max(|Ran G|, κ).
    """
    items = _partial_items(sig, partial)
    ordered = dict(sorted(items.items(), key=lambda item: sig.enc(item[0])))
    clash = check_partial_proper(ordered)
    if clash:
        raise ValidationError(
            "The partial coloring is not proper: %s and %s are totally "
            "different and share color %s." % (clash[0], clash[1], items[clash[0]])
        )
    relabel = {color: n for n, color in enumerate(sorted(set(items.values())))}
    block = max(len(relabel), sig.kappa)
    colors = [
        relabel[items[point]] if point in items else block + point[0]
        for point in sig.points()
    ]
    _logger.debug(
        "Extended a partial coloring on %s points, block size %s", len(items), block
    )
    return ColoringTable(sig.with_mu(2 * block), colors)
