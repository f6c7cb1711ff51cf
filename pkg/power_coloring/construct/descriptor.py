# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Build colorings from construction descriptors.

A descriptor is a JSON object ``{"kind": ..., ...}``:

* ``trivial``: ``lambda``, ``kappa``, ``coordinate``, optional ``permutation``
* ``parity``: ``k`` and an even truncation ``m``; without ``m`` the lazy
  coloring of ^{2k+1}ω
* ``cylinder``: ``base`` descriptor, ``coordinates`` and ``lambda`` (omit
  ``lambda`` to extend a lazy base to ^ωω)
* ``recolor``: table ``base`` descriptor and ``permutation``
* ``partition``: ``lambda``, ``kappa``, ``coordinate`` and ``pieces``, a
  list of ``{"values": [...], "base": descriptor}``; piece p holds the
  points whose ``coordinate`` takes one of its values
* ``composite``: optional ``normalize``; optional ``lambda`` and ``kappa``
  truncate it to a table
"""

import logging

from ..exceptions import UserError, ValidationError
from ..models.color_code import ColorCode
from ..models.coloring_table import ColoringTable
from ..models.lazy_coloring import LazyColoring
from ..models.partition import PartitionSpec, Piece
from ..models.space import SpaceSig
from .composite import composite_coloring
from .cylinder import cylinder_extend
from .parity import parity_coloring, parity_table
from .partition import partition_induced
from .recolor import recolor
from .tabulate import tabulate_coloring
from .trivial import trivial_coloring

_logger = logging.getLogger(__name__)


def _field(descriptor, name, default=KeyError):
    if name in descriptor:
        return descriptor[name]
    if default is KeyError:
        raise UserError(
            "Descriptor of kind %s misses the field %s." % (descriptor.get("kind"), name)
        )
    return default


def _natural(descriptor, name, default=KeyError):
    value = _field(descriptor, name, default)
    if value is None:
        return value
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise UserError("Field %s must be a natural, got %r." % (name, value))
    return value


def _build_trivial(descriptor):
    kappa = _natural(descriptor, "kappa")
    sig = SpaceSig(_natural(descriptor, "lambda"), kappa, kappa)
    return trivial_coloring(
        sig, _natural(descriptor, "coordinate"), _field(descriptor, "permutation", None)
    )


def _build_parity(descriptor):
    k = _natural(descriptor, "k")
    m = _natural(descriptor, "m", None)
    if m is None:
        return parity_coloring(k)
    return parity_table(k, m)


def _build_cylinder(descriptor):
    base = build(_field(descriptor, "base"))
    return cylinder_extend(
        base, _field(descriptor, "coordinates"), _natural(descriptor, "lambda", None)
    )


def _build_recolor(descriptor):
    base = build(_field(descriptor, "base"))
    if not isinstance(base, ColoringTable):
        raise ValidationError("Descriptors only recolor tables.")
    return recolor(base, _field(descriptor, "permutation"))


def _partition_piece(index, coordinate, values, base, points):
    values = frozenset(values)

    def membership(point):
        return point[coordinate] in values

    def color(point):
        return ColorCode(index, (point[coordinate], base(point)))

    trace = frozenset(color(point) for point in points if membership(point))
    return Piece(
        membership=membership,
        coloring=LazyColoring(color, lambda point: base.sig.lambda_, arity=base.sig.lambda_),
        piece_range=lambda code: code.tag == index,
        trace_range=trace.__contains__,
        membership_bound=coordinate + 1,
    )


def _build_partition(descriptor):
    kappa = _natural(descriptor, "kappa")
    sig = SpaceSig(_natural(descriptor, "lambda"), kappa, kappa)
    coordinate = _natural(descriptor, "coordinate")
    if coordinate >= sig.lambda_:
        raise ValidationError("Coordinate %s is outside [0, %s)." % (coordinate, sig.lambda_))
    points = list(sig.points())
    pieces = []
    for index, entry in enumerate(_field(descriptor, "pieces")):
        base = build(_field(entry, "base"))
        if (
            not isinstance(base, ColoringTable)
            or base.sig.lambda_ != sig.lambda_
            or base.sig.kappa != kappa
        ):
            raise ValidationError("Piece %s needs a table on %s^%s." % (index, kappa, sig.lambda_))
        pieces.append(_partition_piece(index, coordinate, _field(entry, "values"), base, points))
    partition = PartitionSpec.from_pieces(pieces)
    violations = partition.check(points)
    if violations:
        raise ValidationError("Invalid partition: %s." % violations[0])
    return tabulate_coloring(
        partition_induced(partition, arity=sig.lambda_), sig.lambda_, kappa
    )


def _build_composite(descriptor):
    coloring = composite_coloring(normalize=bool(_field(descriptor, "normalize", False)))
    lambda_ = _natural(descriptor, "lambda", None)
    kappa = _natural(descriptor, "kappa", None)
    if lambda_ is None and kappa is None:
        return coloring
    if lambda_ is None or kappa is None:
        raise UserError("Truncating the composite coloring needs lambda and kappa.")
    return tabulate_coloring(coloring, lambda_, kappa)


BUILDERS = {
    "trivial": _build_trivial,
    "parity": _build_parity,
    "cylinder": _build_cylinder,
    "recolor": _build_recolor,
    "partition": _build_partition,
    "theorem10": _build_composite,
    "composite": _build_composite,
}


def build(descriptor):
    """The coloring described by ``descriptor``: a table or a lazy coloring."""
    if not isinstance(descriptor, dict):
        raise UserError("A descriptor must be a JSON object.")
    kind = descriptor.get("kind")
    if kind not in BUILDERS:
        raise UserError(
            "Unknown descriptor kind %r, expected one of %s."
            % (kind, ", ".join(sorted(BUILDERS)))
        )
    _logger.debug("Building a %s coloring", kind)
    return BUILDERS[kind](descriptor)
