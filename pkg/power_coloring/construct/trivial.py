# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).

import numpy as np

from ..exceptions import ValidationError
from ..models.coloring_table import ColoringTable


def check_permutation(permutation, size):
    permutation = tuple(permutation)
    if sorted(permutation) != list(range(size)):
        raise ValidationError(
            "%s is not a permutation of [0, %s)." % (list(permutation), size)
        )
    return permutation


def trivial_coloring(sig, coordinate, permutation=None):
    """F(x) = π(x(i)); μ must equal κ and π defaults to the identity."""
    if sig.mu != sig.kappa:
        raise ValidationError(
            "Trivial colorings need mu = kappa, got mu=%s kappa=%s." % (sig.mu, sig.kappa)
        )
    if not 0 <= coordinate < sig.lambda_:
        raise ValidationError(
            "Coordinate %s is outside [0, %s)." % (coordinate, sig.lambda_)
        )
    if permutation is None:
        permutation = range(sig.kappa)
    permutation = np.array(check_permutation(permutation, sig.kappa))
    return ColoringTable(sig, permutation[sig.coordinates[:, coordinate]])
