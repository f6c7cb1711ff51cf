# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..models.color_code import ColorCode
from ..models.point import FinitePoint, TailPoint


def jsonable(value):
    """Points become coordinate lists (tail points their ``a,b;t`` text)."""
    if isinstance(value, FinitePoint):
        return list(value.coords)
    if isinstance(value, TailPoint):
        return str(value)
    if isinstance(value, ColorCode):
        return value.to_dict()
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, np.integer):
        return int(value)
    return value


@dataclass
class RunReport:
    """Verdicts of one command run; false verdicts keep their witness."""

    command: str
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    timing_ms: Optional[float] = None

    def add(self, name, verdict, witness=None):
        holds = bool(verdict)
        self.verdicts[name] = holds
        if not holds:
            witness = getattr(verdict, "witness", witness)
            self.witnesses[name] = jsonable(witness)

    @property
    def all_true(self):
        return all(self.verdicts.values())

    @property
    def exit_code(self):
        return 0 if self.all_true else 1

    def to_dict(self):
        document = {
            "command": self.command,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
        }
        if self.details:
            document["details"] = jsonable(self.details)
        if self.timing_ms is not None:
            document["timing_ms"] = round(self.timing_ms, 3)
        return document

    def render(self):
        return json.dumps(self.to_dict(), separators=(", ", ": "))
