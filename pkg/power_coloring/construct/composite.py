# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""A proper tight coloring of ^ωω into ω that is not finitely determined.

Piece i holds the points with x(0) in {2i, 2i + 1} and is colored by the
parity coloring of the first 2i + 1 coordinates, tagged i. Its trace B_i is
the set of codes (i, (i, l_1, ..., l_{2i}, e)) with e in {0, 1}; the union
of the traces is ranked onto ω by :func:`rank_in_trace`.
"""

import logging
from functools import lru_cache
from math import isqrt

import numpy as np

from ..exceptions import UserError, ValidationError
from ..models.color_code import ColorCode
from ..models.lazy_coloring import LazyColoring
from ..models.partition import PartitionSpec, Piece
from ..models.point import TailPoint
from ..tools import config
from ..tools.pairing import diagonal, pair, unpair
from .cylinder import cylinder_extend
from .parity import parity_coloring
from .partition import partition_induced

_logger = logging.getLogger(__name__)


def in_trace(code, index=None):
    """Whether ``code`` is a color the composite coloring takes (on piece ``index``)."""
    if not isinstance(code, ColorCode):
        return False
    tag = code.tag
    if index is not None and tag != index:
        return False
    payload = code.payload
    return len(payload) == 2 * tag + 2 and payload[0] == tag and payload[-1] in (0, 1)


@lru_cache(maxsize=64)
def _piece(index):
    return Piece(
        membership=lambda point: point[0] // 2 == index,
        coloring=cylinder_extend(parity_coloring(index, tag=index), range(2 * index + 1)),
        piece_range=lambda code: code.tag == index,
        trace_range=lambda code: in_trace(code, index),
        membership_bound=1,
    )


def composite_partition():
    return PartitionSpec(_piece, locate=lambda point: point[0] // 2)


def composite_coloring(normalize=False):
    """The glued coloring; ``normalize`` maps colors to naturals by rank."""
    induced = partition_induced(composite_partition(), name="composite")
    if not normalize:
        return induced
    return LazyColoring(
        lambda point: rank_in_trace(induced(point)),
        induced.dependency_bound,
        name="composite(normalized)",
    )


def dependence_witness(index):
    """Two points of piece ``index`` >= 1 that agree off coordinate 2·index
    but get different colors."""
    if index < 1:
        raise ValidationError("Dependence witnesses start at piece 1, got %s." % index)
    x = TailPoint((2 * index,), 0)
    return x, x.replace(2 * index, 1)


def witness_outside(support):
    """A witness pair agreeing on the finite index set ``support``."""
    support = set(support)
    index = max(1, max(support, default=0) // 2 + 1)
    return dependence_witness(index)


def _unpair_seconds(index):
    """Vectorised second component of unpair over an int64 array."""
    diag = ((np.sqrt(8.0 * index + 1.0) - 1.0) // 2).astype(np.int64)
    diag -= (diag * (diag + 1) // 2 > index).astype(np.int64)
    diag += ((diag + 1) * (diag + 2) // 2 <= index).astype(np.int64)
    return index - diag * (diag + 1) // 2


def _tail_depths(size):
    """depth[g] for g < size: the number of unpair steps taking g into {0, 1}.

    A tail of length L folds to g exactly when depth[g] < L.
    """
    sizes = [size]
    while sizes[-1] > 2:
        sizes.append(diagonal(sizes[-1] - 1) + 1)
    depth = np.zeros(2, dtype=np.int8)
    for n in reversed(sizes):
        if n <= depth.size:
            continue
        index = np.arange(n, dtype=np.int64)
        depth = np.where(index < 2, 0, depth[_unpair_seconds(index)] + 1).astype(np.int8)
    return depth[:size]


def _depth(g):
    depth = 0
    while g > 1:
        g = unpair(g)[1]
        depth += 1
    return depth


def _depth_limit(bound):
    """Smallest k with depth(g) < k for every g < ``bound``."""
    k, smallest = 1, 2
    while smallest < bound:
        smallest = pair(0, smallest)
        k += 1
    return k


def _count_valid(length, bound, depths):
    """Number of g < ``bound`` folding ``length`` naturals ending in 0 or 1."""
    if length == 1:
        return max(0, min(bound, 2))
    if bound <= depths.size:
        return int(np.count_nonzero(depths[:bound] < length))
    # g = pair(a, h) < s(s + 1)/2 + r with h folding length - 1 naturals
    s = diagonal(bound)
    rest = bound - s * (s + 1) // 2
    inner = np.flatnonzero(depths[:s] < length - 1)
    return (
        s * inner.size
        - int(inner.sum())
        + int(np.count_nonzero(depths[:rest] < length - 1))
    )


def _width(upper):
    """Number of w >= 0 with w(w + 3)/2 < ``upper``."""
    w = (isqrt(9 + 8 * upper) - 3) // 2
    while w * (w + 3) // 2 < upper:
        w += 1
    while w > 0 and (w - 1) * (w + 2) // 2 >= upper:
        w -= 1
    return w


def rank_in_trace(code):
    """Position of ``code`` among all trace codes ordered by int_code.

    Trace codes are pair(t, pair(t, g)) with g a valid tail of length
    2t + 1, and t + pair(t, g) = w(w + 3)/2 for w = t + g. A code is below
    the target when w is below ``width``, or on the target's own diagonal
    with a smaller second component. Only tags below the depth limit can
    carry invalid tails, so the count is a triangle minus a few corrections.
    """
    if not in_trace(code):
        raise ValidationError("%r is not a color of the composite coloring." % (code,))
    target = code.int_code
    upper = diagonal(target)
    offset = target - upper * (upper + 1) // 2
    width = _width(upper)
    size = width if width <= config["space_limit"] else diagonal(width) + 1
    if size > config["space_limit"]:
        raise UserError(
            "Color code of %s bits is too large to rank." % target.bit_length()
        )
    depths = _tail_depths(size)
    rank = width * (width + 1) // 2
    for tag in range(min(width, _depth_limit(width))):
        bound = width - tag
        rank -= bound - _count_valid(2 * tag + 1, bound, depths)
    if width * (width + 3) // 2 == upper:
        reach = min(width + 1, offset - width * (width + 1) // 2)
        if reach > 0:
            rank += reach
            for tag in range(min(width + 1, _depth_limit(width + 1))):
                g = width - tag
                if g < reach and _depth(g) > 2 * tag:
                    rank -= 1
    _logger.debug("Ranked code %s at %s", target, rank)
    return rank
