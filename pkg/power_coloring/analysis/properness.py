# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Properness of tables and lawfulness of point sets.

Witnesses are the first ones in enc order, so reports stay stable.
"""

import itertools
import logging

import networkx as nx
import numpy as np

from ..models.point import totally_different
from .graph import power_graph
from .verdict import Verdict

_logger = logging.getLogger(__name__)


def is_proper(table):
    """No two totally different points share a color.

    The witness is the enc-order-first offending pair (x, y).
    """
    sig = table.sig
    colors = table.colors
    clash = sig.total_difference & (colors[:, None] == colors[None, :])
    bad = np.argwhere(clash)
    _logger.debug("Properness scan of %s points: %s clashing pairs", sig.size, len(bad))
    if not len(bad):
        return Verdict.passed()
    x, y = bad[0]
    return Verdict.failed((sig.dec(int(x)), sig.dec(int(y))))


def is_lawful(points):
    """No two points of the set are totally different."""
    ordered = sorted(points, key=lambda p: tuple(reversed(p.coords)))
    for x, y in itertools.combinations(ordered, 2):
        if totally_different(x, y):
            return Verdict.failed((x, y))
    return Verdict.passed()


def is_maximal_lawful(points, sig):
    """Lawful, and every point outside is totally different from a member.

    Lawful sets are the independent sets of the power graph and maximal
    lawful sets the independent dominating ones. A failing witness is either
    a pair inside the set or a point that could be added.
    """
    graph = power_graph(sig)
    nodes = {sig.enc(point) for point in points}
    inner = graph.subgraph(nodes)
    if inner.number_of_edges():
        x, y = min(tuple(sorted(edge)) for edge in inner.edges())
        return Verdict.failed((sig.dec(x), sig.dec(y)))
    if nodes and nx.is_dominating_set(graph, nodes):
        return Verdict.passed()
    for node in sorted(graph):
        if node not in nodes and not any(n in nodes for n in graph[node]):
            return Verdict.failed((sig.dec(node),))
    return Verdict.passed()


def lawful_classes(table):
    """Maximal-lawful verdict of every color class, keyed by color."""
    return {
        color: is_maximal_lawful(points, table.sig)
        for color, points in sorted(table.color_classes().items())
    }


def classes_maximal_lawful(table):
    """Every color class is maximal lawful; witness is (color, class witness)."""
    for color, verdict in lawful_classes(table).items():
        if not verdict:
            return Verdict.failed((color, verdict.witness))
    return Verdict.passed()
