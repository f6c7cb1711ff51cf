# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Finite function spaces ^λκ with a color budget μ and their mixed-radix index.

Points are numbered with coordinate 0 least significant:
enc(x) = Σ_j x(j)·κ^j.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..exceptions import ValidationError
from .point import FinitePoint


@dataclass(frozen=True)
class SpaceSig:
    lambda_: int
    kappa: int
    mu: int

    def __post_init__(self):
        for name, value in (("lambda", self.lambda_), ("kappa", self.kappa), ("mu", self.mu)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValidationError("%s must be a natural >= 1, got %r." % (name, value))
        if self.kappa ** self.lambda_ > np.iinfo(np.intp).max:
            raise ValidationError(
                "Space %s^%s does not fit the index range." % (self.kappa, self.lambda_)
            )

    @classmethod
    def parse(cls, text):
        """Read ``"L,K,M"``."""
        try:
            lambda_, kappa, mu = (int(part) for part in text.split(","))
        except ValueError:
            raise ValidationError("Signature must read L,K,M, got %r." % (text,))
        return cls(lambda_, kappa, mu)

    def __str__(self):
        return "%s,%s,%s" % (self.lambda_, self.kappa, self.mu)

    @property
    def size(self):
        return self.kappa ** self.lambda_

    def with_mu(self, mu):
        return SpaceSig(self.lambda_, self.kappa, mu)

    def check_point(self, point):
        if len(point) != self.lambda_:
            raise ValidationError(
                "Point %s has length %s, the space has length %s."
                % (point, len(point), self.lambda_)
            )
        if any(v >= self.kappa for v in point):
            raise ValidationError(
                "Point %s has a coordinate outside [0, %s)." % (point, self.kappa)
            )
        return point

    @property
    def shape(self):
        return (self.kappa,) * self.lambda_

    def enc(self, point):
        self.check_point(point)
        return int(np.ravel_multi_index(tuple(point), self.shape, order="F"))

    def dec(self, index):
        if not 0 <= index < self.size:
            raise ValidationError(
                "Index %s is outside [0, %s)." % (index, self.size)
            )
        coords = np.unravel_index(index, self.shape, order="F")
        return FinitePoint(tuple(int(v) for v in coords))

    def points(self):
        """All points, in enc order."""
        for coords in itertools.product(range(self.kappa), repeat=self.lambda_):
            yield FinitePoint(coords[::-1])

    def constant(self, alpha):
        if not 0 <= alpha < self.kappa:
            raise ValidationError("Constant %s is outside [0, %s)." % (alpha, self.kappa))
        return FinitePoint((alpha,) * self.lambda_)

    @cached_property
    def coordinates(self):
        """(κ^λ, λ) array whose row n holds dec(n)."""
        index = np.arange(self.size, dtype=np.int64)[:, None]
        radix = np.int64(self.kappa) ** np.arange(self.lambda_, dtype=np.int64)
        return (index // radix) % self.kappa

    @cached_property
    def total_difference(self):
        """(κ^λ, κ^λ) boolean matrix of the totally-different relation."""
        coords = self.coordinates
        return np.all(coords[:, None, :] != coords[None, :, :], axis=2)


def enc(point, sig):
    return sig.enc(point)


def dec(index, sig):
    return sig.dec(index)
