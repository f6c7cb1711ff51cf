# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""The λ-th power of the complete graph K_κ.

Nodes are enc indices; two nodes are adjacent when their points are totally
different. Proper colorings of ^λκ are the proper vertex colorings of this
graph and lawful sets are its independent sets.
"""

from functools import lru_cache

import networkx as nx
import numpy as np

from ..models.space import SpaceSig


@lru_cache(maxsize=32)
def _power_graph(lambda_, kappa):
    sig = SpaceSig(lambda_, kappa, 1)
    return nx.from_numpy_array(sig.total_difference.astype(np.uint8))


def power_graph(sig):
    return _power_graph(sig.lambda_, sig.kappa)


def onehot(colors, palette):
    """(N, len(palette)) boolean matrix: point n carries palette[j]."""
    return np.asarray(colors)[:, None] == np.asarray(list(palette))[None, :]
