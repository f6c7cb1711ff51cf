# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Command line point syntax: ``a,b,c`` for points of ^λκ and
``a,b;t`` for eventually constant points of ^ωω (``;t`` is the constant t).
"""

from ..models.point import FinitePoint, TailPoint
from .base_parser import BaseParser, parse_chain


def _natural(text):
    value = int(text.strip())
    if value < 0:
        raise ValueError("negative coordinate %s" % value)
    return value


def _naturals(text):
    return tuple(_natural(part) for part in text.split(","))


class TailPointParser(BaseParser):
    name = "tail point"

    def parse(self, data):
        head, separator, tail = data.strip().partition(";")
        if not separator:
            raise ValueError("no tail separator")
        prefix = _naturals(head) if head.strip() else ()
        return TailPoint(prefix, _natural(tail))


class FinitePointParser(BaseParser):
    name = "finite point"

    def parse(self, data):
        text = data.strip()
        if not text or ";" in text:
            raise ValueError("not a coordinate list")
        return FinitePoint(_naturals(text))


def parse_point(data):
    return parse_chain(
        (TailPointParser(), FinitePointParser()),
        data,
        "Could not read %r as a point, expected a,b,c or a,b;t." % data,
    )
