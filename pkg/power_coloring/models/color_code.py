# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from dataclasses import dataclass

from ..exceptions import ValidationError
from ..tools.pairing import fold, pair, unfold, unpair


@dataclass(frozen=True)
class ColorCode:
    """A color of a lazy coloring: a piece tag and a finite payload.

    ``int_code`` = pair(tag, fold(payload)) is the canonical natural for the
    color. The payload length is not recoverable from ``int_code`` alone, so
    decoding takes it as an argument.
    """

    tag: int
    payload: tuple

    def __post_init__(self):
        payload = tuple(self.payload)
        for value in (self.tag,) + payload:
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValidationError("Color codes hold naturals, got %r." % (value,))
        object.__setattr__(self, "payload", payload)

    @property
    def int_code(self):
        return pair(self.tag, fold(self.payload))

    @classmethod
    def from_int(cls, n, length):
        tag, folded = unpair(n)
        return cls(tag, unfold(folded, length))

    def to_dict(self):
        return {"tag": self.tag, "payload": list(self.payload), "int_code": self.int_code}

    def __str__(self):
        return str(self.int_code)


def color_key(color):
    """Sort key shared by integer colors and color codes."""
    if isinstance(color, ColorCode):
        return color.int_code
    return color
