# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from ..models.coloring_table import ColoringTable
from ..models.lazy_coloring import LazyColoring


def _coloring_bound(coloring, point):
    if isinstance(coloring, ColoringTable):
        return coloring.sig.lambda_
    return coloring.bound(point)


def partition_induced(partition, arity=None, name="partition"):
    """Glue the piece colorings of ``partition``: F(x) = F_i(x) for x in A_i."""

    def evaluate(point):
        _index, piece = partition.piece_of(point)
        return piece.coloring(point)

    def dependency_bound(point):
        _index, piece = partition.piece_of(point)
        return max(piece.membership_bound, _coloring_bound(piece.coloring, point))

    return LazyColoring(evaluate, dependency_bound, arity=arity, name=name)
