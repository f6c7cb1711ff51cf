# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import logging

from ..models.coloring_table import ColoringTable
from ..models.color_code import color_key
from ..models.space import SpaceSig

_logger = logging.getLogger(__name__)


def tabulate_with_palette(coloring, lambda_, kappa):
    """Truncate ``coloring`` to ^λκ.

    Used colors are relabelled 0, 1, ... in increasing canonical order;
    ``palette[c]`` is the original color behind table color c.
    """
    probe = SpaceSig(lambda_, kappa, 1)
    raw = [coloring(point) for point in probe.points()]
    palette = sorted(set(raw), key=color_key)
    label = {color: n for n, color in enumerate(palette)}
    table = ColoringTable(probe.with_mu(len(palette)), [label[c] for c in raw])
    _logger.debug("Tabulated %r on %s: %s colors", coloring, probe, len(palette))
    return table, tuple(palette)


def tabulate_coloring(coloring, lambda_, kappa):
    table, _palette = tabulate_with_palette(coloring, lambda_, kappa)
    return table
