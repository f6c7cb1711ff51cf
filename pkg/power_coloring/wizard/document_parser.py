# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""JSON inputs of the command line: coloring tables and construction
descriptors."""

import json

from ..construct.descriptor import build
from ..exceptions import UserError
from ..models.coloring_table import ColoringTable
from .base_parser import BaseParser, parse_chain


class TableParser(BaseParser):
    name = "coloring table"

    def parse(self, data):
        if "colors" not in data:
            raise ValueError("no colors")
        return ColoringTable.from_dict(data)


class DescriptorParser(BaseParser):
    name = "construction descriptor"

    def parse(self, data):
        if "kind" not in data:
            raise ValueError("no kind")
        return build(data)


def read_json(stream):
    try:
        document = json.load(stream)
    except ValueError as err:
        raise UserError("Couldn't load file data: %s" % err)
    if not isinstance(document, dict):
        raise UserError("Expected a JSON object.")
    return document


def parse_coloring(stream):
    """A table or the coloring built from a descriptor."""
    return parse_chain(
        (TableParser(), DescriptorParser()),
        read_json(stream),
        "Could not make sense of the given file: neither a coloring table "
        "nor a construction descriptor.",
    )


def parse_table(stream):
    coloring = parse_coloring(stream)
    if not isinstance(coloring, ColoringTable):
        raise UserError("%s is not a table, truncate it first." % coloring.name)
    return coloring
