# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Coloring partitions: pieces of the domain each carried by its own coloring.

A piece is (membership, coloring, piece_range, trace_range): ``membership``
decides the piece A_i, ``coloring`` is F_i, ``piece_range`` decides the
codomain C_i and ``trace_range`` decides B_i, the colors F_i takes on A_i.
A partition is valid when the pieces are disjoint and cover the domain,
no F_i splits its piece, B_i is the range of F_i on A_i and the B_i are
pairwise disjoint.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional

from ..exceptions import ValidationError

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Piece:
    membership: Callable[[Any], bool]
    coloring: Any
    piece_range: Callable[[Any], bool]
    trace_range: Callable[[Any], bool]
    # coordinates read by ``membership``
    membership_bound: int = 1


class PartitionSpec(object):
    """An indexed family of pieces.

    Finite families are built with :meth:`from_pieces` and locate a point by
    scanning every piece. Infinite families give ``piece_at(i)`` and a
    ``locate(x)`` returning the only candidate index; membership of x in
    that piece is still checked on evaluation.
    """

    def __init__(self, piece_at, locate=None, count=None):
        if locate is None and count is None:
            raise ValidationError("An infinite partition needs a locate function.")
        self.piece_at = piece_at
        self.locate = locate
        self.count = count

    @classmethod
    def from_pieces(cls, pieces):
        pieces = tuple(pieces)
        if not pieces:
            raise ValidationError("A partition needs at least one piece.")
        return cls(pieces.__getitem__, count=len(pieces))

    @property
    def is_finite(self):
        return self.count is not None

    def indices(self):
        return range(self.count) if self.is_finite else None

    def piece_of(self, point):
        """(index, piece) of the only piece holding ``point``."""
        if self.is_finite:
            found = [i for i in range(self.count) if self.piece_at(i).membership(point)]
            if not found:
                raise ValidationError("Point %s lies in no piece." % (point,))
            if len(found) > 1:
                raise ValidationError(
                    "Point %s lies in pieces %s." % (point, ", ".join(map(str, found)))
                )
            return found[0], self.piece_at(found[0])
        index = self.locate(point)
        piece = self.piece_at(index)
        if not piece.membership(point):
            raise ValidationError(
                "Point %s is located in piece %s but is not a member." % (point, index)
            )
        return index, piece

    def check(self, points, indices=None):
        """Violations of the partition properties among ``points``.

        For infinite families ``indices`` is the window of pieces examined;
        points located outside the window are only checked for not belonging
        to a piece inside it. Returns a list of messages, empty when valid.
        """
        if indices is None:
            if not self.is_finite:
                raise ValidationError("Checking an infinite partition needs indices.")
            indices = range(self.count)
        indices = list(indices)
        pieces = {i: self.piece_at(i) for i in indices}
        points = list(points)
        violations = []
        members = {i: [] for i in indices}
        for point in points:
            found = [i for i in indices if pieces[i].membership(point)]
            expected = 1
            if not self.is_finite and self.locate(point) not in pieces:
                expected = 0
            if len(found) != expected:
                violations.append(
                    "point %s lies in pieces %s" % (point, found or "none")
                )
            for i in found:
                members[i].append(point)
        for i in indices:
            piece = pieces[i]
            inside = set(members[i])
            for x in members[i]:
                color = piece.coloring(x)
                if not piece.piece_range(color):
                    violations.append("color %s of %s leaves C_%s" % (color, x, i))
                if not piece.trace_range(color):
                    violations.append("color %s of %s leaves B_%s" % (color, x, i))
                for j in indices:
                    if j != i and pieces[j].trace_range(color):
                        violations.append(
                            "color %s of %s is shared by B_%s and B_%s" % (color, x, i, j)
                        )
                for y in points:
                    if y not in inside and piece.coloring(y) == color:
                        violations.append(
                            "coloring %s splits its piece at %s and %s" % (i, x, y)
                        )
        _logger.debug(
            "Checked partition on %s points and %s pieces: %s violations",
            len(points),
            len(indices),
            len(violations),
        )
        return violations
