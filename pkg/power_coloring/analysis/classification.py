# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Recognising colorings that only read one coordinate.

Over a finite index set every ultrafilter is principal, so the
ultrafilter forms of proper and 2-tight colorings come down to
"F(x) is a function of x(i) for one coordinate i".
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..exceptions import ValidationError
from .properness import is_proper

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrincipalForm:
    """F(x) = permutation[x(coordinate)]."""

    coordinate: int
    permutation: tuple

    def __post_init__(self):
        permutation = tuple(int(v) for v in self.permutation)
        if sorted(permutation) != list(range(len(permutation))):
            raise ValidationError("%s is not a permutation." % (permutation,))
        object.__setattr__(self, "permutation", permutation)

    def __call__(self, point):
        return self.permutation[point[self.coordinate]]

    def to_dict(self):
        return {"coordinate": self.coordinate, "permutation": list(self.permutation)}


@dataclass(frozen=True)
class FactorClassification:
    """F(x) = class_map[x(coordinate)]: the factor of ^λκ by the principal
    ultrafilter at ``coordinate`` has one class per value of that coordinate,
    and class_map is a bijection from those classes onto the used colors."""

    coordinate: int
    class_map: tuple

    def __post_init__(self):
        class_map = tuple(int(v) for v in self.class_map)
        if len(set(class_map)) != len(class_map):
            raise ValidationError("%s is not injective." % (class_map,))
        object.__setattr__(self, "class_map", class_map)

    def __call__(self, point):
        return self.class_map[point[self.coordinate]]

    def to_dict(self):
        return {"coordinate": self.coordinate, "class_map": list(self.class_map)}


@dataclass(frozen=True)
class ClassificationFailure:
    """For each coordinate i, the first pair (x, y) with
    F(x) = F(y) not matching x(i) = y(i)."""

    witnesses: tuple

    def to_dict(self):
        return {
            "witnesses": [
                {"coordinate": i, "pair": [str(x), str(y)]} for i, x, y in self.witnesses
            ]
        }


def _value_map(table, coordinate):
    """The color map of ``coordinate`` if F only reads it, else None."""
    sig = table.sig
    values = sig.coordinates[:, coordinate]
    firsts = [int(np.argmax(values == v)) for v in range(sig.kappa)]
    mapping = table.colors[firsts]
    if np.array_equal(mapping[values], table.colors):
        return tuple(int(c) for c in mapping)
    return None


def extract_principal_form(table):
    """The first (i, π) with F(x) = π(x(i)) for all x, or None.

    Requires μ = κ.
    """
    sig = table.sig
    if sig.mu != sig.kappa:
        raise ValidationError(
            "Principal forms need mu = kappa, got mu=%s kappa=%s." % (sig.mu, sig.kappa)
        )
    for coordinate in range(sig.lambda_):
        mapping = _value_map(table, coordinate)
        if mapping is not None and len(set(mapping)) == sig.kappa:
            return PrincipalForm(coordinate, mapping)
    _logger.debug("No principal form for %s", sig)
    return None


def classify_2tight(table):
    """Find i with F(x) = F(y) ⇔ x(i) = y(i) for all x, y.

    Returns a :class:`FactorClassification` or a
    :class:`ClassificationFailure` carrying one violating pair per
    coordinate. The table must be proper.
    """
    if not is_proper(table):
        raise ValidationError("Only proper colorings can be classified.")
    sig = table.sig
    same_color = table.colors[:, None] == table.colors[None, :]
    witnesses = []
    for coordinate in range(sig.lambda_):
        mapping = _value_map(table, coordinate)
        if mapping is not None and len(set(mapping)) == sig.kappa:
            return FactorClassification(coordinate, mapping)
        values = sig.coordinates[:, coordinate]
        same_value = values[:, None] == values[None, :]
        x, y = np.argwhere(same_color != same_value)[0]
        witnesses.append((coordinate, sig.dec(int(x)), sig.dec(int(y))))
    return ClassificationFailure(tuple(witnesses))
