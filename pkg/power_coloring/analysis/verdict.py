# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker: ``holds`` plus the first counterexample found.

    Truthiness follows ``holds``; ``witness`` is None exactly when it holds.
    """

    holds: bool
    witness: Any = None

    def __bool__(self):
        return self.holds

    @classmethod
    def passed(cls):
        return cls(True)

    @classmethod
    def failed(cls, witness):
        return cls(False, witness)
