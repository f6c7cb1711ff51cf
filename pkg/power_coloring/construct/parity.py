# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Tight colorings of ^{2k+1}ω with finite color classes.

x gets the code of (⌊x(0)/2⌋, ..., ⌊x(2k)/2⌋, Σ x(j) mod 2). A class is the
even-sum or odd-sum half of a box Π {2l_j, 2l_j + 1}, which is a maximal
lawful set with 2^{2k} elements.
"""

from ..exceptions import ValidationError
from ..models.color_code import ColorCode
from ..models.lazy_coloring import LazyColoring
from .tabulate import tabulate_coloring


def parity_code(point, k, tag=0):
    width = 2 * k + 1
    floors = tuple(point[j] // 2 for j in range(width))
    parity = sum(point[j] for j in range(width)) % 2
    return ColorCode(tag, floors + (parity,))


def parity_coloring(k, tag=0):
    if k < 0:
        raise ValidationError("k must be a natural, got %s." % k)
    width = 2 * k + 1
    return LazyColoring(
        lambda point: parity_code(point, k, tag),
        lambda point: width,
        arity=width,
        name="parity(k=%s)" % k,
    )


def parity_table(k, m):
    """Truncation of :func:`parity_coloring` to ^{2k+1}m.

    m must be even so that no box {2l, 2l + 1} is cut.
    """
    if m < 2 or m % 2:
        raise ValidationError("The truncation m must be even and positive, got %s." % m)
    return tabulate_coloring(parity_coloring(k), 2 * k + 1, m)
