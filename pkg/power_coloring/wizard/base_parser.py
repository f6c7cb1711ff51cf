# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import logging

from ..exceptions import UserError

_logger = logging.getLogger(__name__)


class BaseParser(object):
    """Reads one input syntax.

    ``parse`` raises ValueError on input it does not recognise so that
    :func:`parse_chain` can fall back on the next parser.
    """

    name = "base"

    def parse(self, data):
        raise NotImplementedError()


def parse_chain(parsers, data, failure):
    """Try each parser in turn and return the first result."""
    for parser in parsers:
        try:
            _logger.debug("Try parsing %.40r as %s.", data, parser.name)
            return parser.parse(data)
        except ValueError:
            _logger.debug("Input is not a %s.", parser.name, exc_info=True)
    raise UserError(failure)
