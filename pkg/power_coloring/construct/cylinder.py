# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import numpy as np

from ..exceptions import ValidationError
from ..models.coloring_table import ColoringTable
from ..models.lazy_coloring import LazyColoring
from ..models.point import restrict
from ..models.space import SpaceSig


def cylinder_extend(coloring, coordinates, lambda_=None):
    """G(x) = F(x|_X): lift a coloring of ^Xκ to the whole product.

    Coordinate j of F reads the j-th smallest index of X. Tables need the
    target length ``lambda_``; lazy colorings extend to ^ωω when it is
    omitted.
    """
    coordinates = sorted(set(coordinates))
    if not coordinates:
        raise ValidationError("Cannot extend from an empty set of coordinates.")
    if lambda_ is not None and coordinates[-1] >= lambda_:
        raise ValidationError(
            "Coordinate %s is outside [0, %s)." % (coordinates[-1], lambda_)
        )
    if isinstance(coloring, ColoringTable):
        return _extend_table(coloring, coordinates, lambda_)
    if coloring.arity is not None and coloring.arity != len(coordinates):
        raise ValidationError(
            "%s reads %s coordinates, X has %s." % (coloring.name, coloring.arity, len(coordinates))
        )
    bound = coordinates[-1] + 1
    return LazyColoring(
        lambda point: coloring(restrict(point, coordinates)),
        lambda point: bound,
        arity=lambda_,
        name="cylinder(%s)" % coloring.name,
    )


def _extend_table(table, coordinates, lambda_):
    if lambda_ is None:
        raise ValidationError("Extending a table needs the target length.")
    base = table.sig
    if base.lambda_ != len(coordinates):
        raise ValidationError(
            "The table reads %s coordinates, X has %s." % (base.lambda_, len(coordinates))
        )
    sig = SpaceSig(lambda_, base.kappa, base.mu)
    radix = np.int64(base.kappa) ** np.arange(base.lambda_, dtype=np.int64)
    index = sig.coordinates[:, coordinates] @ radix
    return ColoringTable(sig, table.colors[index])
