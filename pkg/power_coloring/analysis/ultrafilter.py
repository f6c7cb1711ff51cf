# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Principal ultrafilters on a finite index set λ."""

from dataclasses import dataclass

from ..exceptions import ValidationError
from .classification import extract_principal_form
from .properness import is_proper
from .uniformity import is_strongly_uniform
from .verdict import Verdict


@dataclass(frozen=True)
class PrincipalUltrafilter:
    """All subsets of range(lambda_) containing ``index``."""

    index: int
    lambda_: int

    def __post_init__(self):
        if not 0 <= self.index < self.lambda_:
            raise ValidationError(
                "Index %s is outside [0, %s)." % (self.index, self.lambda_)
            )

    def __contains__(self, indices):
        return self.index in indices

    def agreement(self, x, y):
        return frozenset(i for i in range(self.lambda_) if x[i] == y[i])

    def same_class(self, x, y):
        """x and y are identified in the factor ^λκ/U."""
        return self.agreement(x, y) in self

    def class_key(self, point):
        return point[self.index]


def corresponding_ultrafilter(table):
    """The ultrafilter U with F(x) = α ⇔ {i : x(i) = α} ∈ U.

    Defined for strongly uniform proper tables; None otherwise.
    """
    if not is_proper(table) or not is_strongly_uniform(table):
        return None
    form = extract_principal_form(table)
    if form is None:
        return None
    return PrincipalUltrafilter(form.coordinate, table.sig.lambda_)


def satisfies_switch_condition(table, ultrafilter, permutation):
    """F(x) = π(k) ⇔ {i : x(i) = k} ∈ U for every point x and k < κ.

    The witness is the first (x, k) where the two sides disagree.
    """
    sig = table.sig
    for point in sig.points():
        color = table.eval(point)
        for k in range(sig.kappa):
            level = frozenset(i for i, v in enumerate(point) if v == k)
            if (color == permutation[k]) != (level in ultrafilter):
                return Verdict.failed((point, k))
    return Verdict.passed()
