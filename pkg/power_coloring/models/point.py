# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Points of function spaces and the difference relations between them.

A :class:`FinitePoint` is an element of ^λκ for a finite λ. A
:class:`TailPoint` is an eventually constant element of ^ωω, stored as a
finite prefix followed by a constant tail. Difference sets of tail points
are finite or cofinite, which :class:`CoSet` represents exactly.
"""

import enum
from dataclasses import dataclass, field

from ..exceptions import ValidationError


def _check_naturals(values):
    for value in values:
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValidationError("Coordinates must be naturals, got %r." % (value,))


@dataclass(frozen=True)
class FinitePoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        _check_naturals(coords)
        object.__setattr__(self, "coords", coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return ",".join(str(v) for v in self.coords)


@dataclass(frozen=True)
class TailPoint:
    """x(i) = prefix[i] for i < len(prefix), x(i) = tail otherwise.

    The prefix is trimmed on construction so that it is empty or its last
    entry differs from the tail; equal functions are then equal objects.
    """

    prefix: tuple = ()
    tail: int = 0

    def __post_init__(self):
        prefix = list(self.prefix)
        _check_naturals(prefix + [self.tail])
        while prefix and prefix[-1] == self.tail:
            prefix.pop()
        object.__setattr__(self, "prefix", tuple(prefix))

    def __getitem__(self, index):
        if index < 0:
            raise IndexError("Tail points have no negative coordinates")
        if index < len(self.prefix):
            return self.prefix[index]
        return self.tail

    def head(self, length):
        """The first ``length`` coordinates as a tuple."""
        return tuple(self[i] for i in range(length))

    def replace(self, index, value):
        """Copy of the point with coordinate ``index`` set to ``value``."""
        prefix = list(self.head(max(len(self.prefix), index + 1)))
        prefix[index] = value
        return TailPoint(tuple(prefix), self.tail)

    def __str__(self):
        return "%s;%s" % (",".join(str(v) for v in self.prefix), self.tail)


@dataclass(frozen=True)
class CoSet:
    """A finite set of indices, or the complement in ω of a finite set."""

    FINITE = "finite"
    COFINITE = "cofinite"

    kind: str
    exceptions: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in (self.FINITE, self.COFINITE):
            raise ValidationError("Unknown index set kind %r." % (self.kind,))
        object.__setattr__(self, "exceptions", frozenset(self.exceptions))

    @classmethod
    def finite(cls, indices=()):
        return cls(cls.FINITE, frozenset(indices))

    @classmethod
    def cofinite(cls, exceptions=()):
        return cls(cls.COFINITE, frozenset(exceptions))

    @classmethod
    def everything(cls):
        return cls.cofinite()

    @property
    def is_finite(self):
        return self.kind == self.FINITE

    def is_empty(self):
        return self.is_finite and not self.exceptions

    def __contains__(self, index):
        if self.is_finite:
            return index in self.exceptions
        return index not in self.exceptions

    def complement(self):
        kind = self.COFINITE if self.is_finite else self.FINITE
        return CoSet(kind, self.exceptions)

    def intersection(self, other):
        if self.is_finite and other.is_finite:
            return CoSet.finite(self.exceptions & other.exceptions)
        if self.is_finite:
            return CoSet.finite(self.exceptions - other.exceptions)
        if other.is_finite:
            return CoSet.finite(other.exceptions - self.exceptions)
        return CoSet.cofinite(self.exceptions | other.exceptions)

    def issubset(self, other):
        if self.is_finite:
            return all(index in other for index in self.exceptions)
        if other.is_finite:
            return False
        return other.exceptions <= self.exceptions


class Relation(enum.Enum):
    COINCIDE = "coincide"
    TOTALLY_DIFFERENT_ON = "totally_different_on"
    NEITHER = "neither"


def _same_kind(x, y):
    if isinstance(x, FinitePoint) and isinstance(y, FinitePoint):
        if len(x) != len(y):
            raise ValidationError(
                "Points live in different spaces: lengths %s and %s." % (len(x), len(y))
            )
        return FinitePoint
    if isinstance(x, TailPoint) and isinstance(y, TailPoint):
        return TailPoint
    raise ValidationError(
        "Cannot compare %s with %s." % (type(x).__name__, type(y).__name__)
    )


def delta(x, y):
    """The set of coordinates where x and y differ.

    A frozenset for finite points, a :class:`CoSet` for tail points.
    """
    if _same_kind(x, y) is FinitePoint:
        return frozenset(i for i, (a, b) in enumerate(zip(x, y)) if a != b)
    length = max(len(x.prefix), len(y.prefix))
    if x.tail == y.tail:
        return CoSet.finite(i for i in range(length) if x[i] != y[i])
    return CoSet.cofinite(i for i in range(length) if x[i] == y[i])


def totally_different(x, y):
    difference = delta(x, y)
    if isinstance(difference, CoSet):
        return not difference.is_finite and not difference.exceptions
    return len(difference) == len(x)


def _index_set(x, indices):
    if isinstance(x, TailPoint):
        return indices if isinstance(indices, CoSet) else CoSet.finite(indices)
    if isinstance(indices, CoSet):
        raise ValidationError("Finite points take explicit finite index sets.")
    indices = frozenset(indices)
    outside = [i for i in indices if not 0 <= i < len(x)]
    if outside:
        raise ValidationError(
            "Indices %s are outside a space of length %s." % (sorted(outside), len(x))
        )
    return indices


def relation_on(x, y, indices):
    """How x and y compare on the index set ``indices``.

    COINCIDE when they agree on every index of the set, TOTALLY_DIFFERENT_ON
    when they differ on every index of it, NEITHER otherwise. The empty set
    is reported as COINCIDE.
    """
    difference = delta(x, y)
    indices = _index_set(x, indices)
    if isinstance(difference, CoSet):
        if difference.intersection(indices).is_empty():
            return Relation.COINCIDE
        if indices.issubset(difference):
            return Relation.TOTALLY_DIFFERENT_ON
        return Relation.NEITHER
    if not difference & indices:
        return Relation.COINCIDE
    if indices <= difference:
        return Relation.TOTALLY_DIFFERENT_ON
    return Relation.NEITHER


def almost_equal(x, y):
    """x ≡* y: the difference set is finite, i.e. the tails agree."""
    if _same_kind(x, y) is not TailPoint:
        raise ValidationError("Almost equality is defined on tail points.")
    return x.tail == y.tail


def almost_totally_different(x, y):
    """x ≢* y: the agreement set is finite, i.e. the tails differ."""
    if _same_kind(x, y) is not TailPoint:
        raise ValidationError("Almost total difference is defined on tail points.")
    return x.tail != y.tail


def constant(alpha, length=None):
    """c_α: a finite point of the given length, or a tail point when omitted."""
    if length is None:
        return TailPoint((), alpha)
    return FinitePoint((alpha,) * length)


def restrict(x, indices):
    """x|_X as a finite point, coordinates taken in increasing index order."""
    return FinitePoint(tuple(x[i] for i in sorted(indices)))
