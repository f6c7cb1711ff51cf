# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import numpy as np

from ..exceptions import ValidationError
from ..models.coloring_table import ColoringTable
from ..models.lazy_coloring import LazyColoring
from .trivial import check_permutation


def recolor(coloring, bijection):
    """h ∘ F for a bijection h of the colors.

    For tables h is a permutation of [0, μ) given as a sequence. For lazy
    colorings h is a mapping (checked to be injective) or a callable
    trusted to be one.
    """
    if isinstance(coloring, ColoringTable):
        permutation = np.array(check_permutation(bijection, coloring.sig.mu))
        return ColoringTable(coloring.sig, permutation[coloring.colors])
    if isinstance(bijection, dict):
        if len(set(bijection.values())) != len(bijection):
            raise ValidationError("The color map is not injective.")
        mapping = bijection.__getitem__
    else:
        mapping = bijection
    return LazyColoring(
        lambda point: mapping(coloring(point)),
        coloring.dependency_bound,
        arity=coloring.arity,
        name="recolor(%s)" % coloring.name,
    )
