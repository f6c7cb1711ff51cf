# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

from ..exceptions import ValidationError
from .point import FinitePoint, TailPoint


class LazyColoring(object):
    """A coloring evaluated point by point, never tabulated.

    ``evaluator(x)`` returns the color of x and ``dependency_bound(x)`` an
    index d such that the color of x only reads coordinates < d: any y that
    agrees with x below d gets the same color and the same bound.

    ``arity`` is λ for colorings of ^λω and None for colorings of ^ωω; the
    latter also accept finite points long enough to cover their bound.
    """

    def __init__(self, evaluator, dependency_bound, arity=None, name="lazy"):
        self.evaluator = evaluator
        self.dependency_bound = dependency_bound
        self.arity = arity
        self.name = name

    def __repr__(self):
        return "LazyColoring(%s, arity=%s)" % (self.name, self.arity)

    def _check(self, point):
        if isinstance(point, TailPoint):
            if self.arity is not None:
                raise ValidationError(
                    "%s colors ^%sω, not tail points." % (self.name, self.arity)
                )
            return point
        if not isinstance(point, FinitePoint):
            raise ValidationError("Cannot color %r." % (point,))
        if self.arity is not None and len(point) != self.arity:
            raise ValidationError(
                "%s colors points of length %s, got %s." % (self.name, self.arity, len(point))
            )
        return point

    def bound(self, point):
        return self.dependency_bound(self._check(point))

    def __call__(self, point):
        point = self._check(point)
        if self.arity is None and isinstance(point, FinitePoint):
            needed = self.dependency_bound(point)
            if len(point) < needed:
                raise ValidationError(
                    "%s reads %s coordinates of %s." % (self.name, needed, point)
                )
        return self.evaluator(point)

    eval = __call__
