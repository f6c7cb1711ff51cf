# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Exhaustive colorings F: ^λκ -> μ stored as a dense array in enc order.

The interchange document is
``{"lambda": L, "kappa": K, "mu": M, "colors": [c_0, ..., c_{K^L-1}]}``
with c_j = F(dec(j)).
"""

import json
import logging
from os import PathLike

import numpy as np

from ..exceptions import UserError, ValidationError
from ..tools import config
from .space import SpaceSig

_logger = logging.getLogger(__name__)

INT64_MAX = int(np.iinfo(np.int64).max)


def _is_natural(value):
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


class ColoringTable(object):
    def __init__(self, sig, colors):
        if sig.size > config["space_limit"]:
            raise ValidationError(
                "Space of %s points is over the exhaustive limit %s."
                % (sig.size, config["space_limit"])
            )
        colors = np.array(colors, dtype=np.int64)
        if colors.shape != (sig.size,):
            raise ValidationError(
                "A table on %s^%s needs %s colors, got %s."
                % (sig.kappa, sig.lambda_, sig.size, colors.size)
            )
        if colors.size and (colors.min() < 0 or colors.max() >= sig.mu):
            raise ValidationError("Colors must lie in [0, %s)." % sig.mu)
        colors.flags.writeable = False
        self.sig = sig
        self.colors = colors

    @classmethod
    def from_function(cls, sig, function):
        """Tabulate ``function`` over every point of ``sig`` in enc order."""
        return cls(sig, [function(point) for point in sig.points()])

    def __eq__(self, other):
        if not isinstance(other, ColoringTable):
            return NotImplemented
        return self.sig == other.sig and np.array_equal(self.colors, other.colors)

    def __hash__(self):
        return hash((self.sig, self.colors.tobytes()))

    def __repr__(self):
        return "ColoringTable(%s, %s)" % (self.sig, self.colors.tolist())

    def eval(self, point):
        return int(self.colors[self.sig.enc(point)])

    __call__ = eval

    @property
    def used_colors(self):
        return frozenset(int(c) for c in np.unique(self.colors))

    def color_classes(self):
        """Map each used color to the frozenset of points carrying it."""
        classes = {}
        for index, color in enumerate(self.colors.tolist()):
            classes.setdefault(color, []).append(self.sig.dec(index))
        return {color: frozenset(points) for color, points in classes.items()}

    def with_colors(self, colors, mu=None):
        sig = self.sig if mu is None else self.sig.with_mu(mu)
        return ColoringTable(sig, colors)

    def to_dict(self):
        return {
            "lambda": self.sig.lambda_,
            "kappa": self.sig.kappa,
            "mu": self.sig.mu,
            "colors": self.colors.tolist(),
        }

    @classmethod
    def from_dict(cls, document):
        if not isinstance(document, dict):
            raise UserError("A table document must be a JSON object.")
        try:
            lambda_ = document["lambda"]
            kappa = document["kappa"]
            mu = document["mu"]
            colors = document["colors"]
        except KeyError as err:
            raise UserError("Table document misses the key %s." % err)
        if not all(_is_natural(v) for v in (lambda_, kappa, mu)):
            raise UserError("lambda, kappa and mu must be exact naturals.")
        if max(lambda_, kappa, mu) > INT64_MAX:
            raise UserError("lambda, kappa and mu must not exceed %s." % INT64_MAX)
        if not isinstance(colors, list) or not all(_is_natural(c) for c in colors):
            raise UserError("colors must be a list of exact naturals.")
        sig = SpaceSig(lambda_, kappa, mu)
        if len(colors) != sig.size:
            raise ValidationError(
                "colors holds %s entries, %s^%s needs %s."
                % (len(colors), kappa, lambda_, sig.size)
            )
        out_of_range = [c for c in colors if c >= mu]
        if out_of_range:
            raise ValidationError(
                "Color %s is out of range for mu=%s." % (out_of_range[0], mu)
            )
        return cls(sig, colors)


def color_classes(table):
    return table.color_classes()


def save(table, destination):
    """Write ``table`` to a path or a text stream."""
    text = json.dumps(table.to_dict(), separators=(", ", ": "))
    if isinstance(destination, (str, PathLike)):
        with open(destination, "w") as stream:
            stream.write(text + "\n")
    else:
        destination.write(text + "\n")
    _logger.debug("Saved table %s", table.sig)


def load(source):
    """Read a table from a path or a text stream."""
    try:
        if isinstance(source, (str, PathLike)):
            with open(source) as stream:
                document = json.load(stream)
        else:
            document = json.load(source)
    except (OSError, ValueError) as err:
        raise UserError("Couldn't load table data: %s" % err)
    return ColoringTable.from_dict(document)
