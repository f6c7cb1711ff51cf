# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Finite shadows of an almost totally different family of ^ωω.

Each binary branch r yields x_r with x_r(n) the code 2^n + value of the
first n bits of r, read most significant bit first. Codes are equal exactly
when the prefixes are, so two outputs agree up to and including the first
position where their branches split and differ after it.
"""

import itertools

from ..exceptions import ValidationError


def _prefix_code(bits):
    value = 0
    for bit in bits:
        value = 2 * value + bit
    return (1 << len(bits)) + value


def default_branches(depth, count):
    """``count`` distinct bit strings of length ``depth`` in lexicographic order.

    While ``count`` <= 2^(depth - 1) they are the smallest (depth - 1)-bit
    strings followed by 0, so no two of them split only at the last bit.
    """
    if count <= 2 ** (depth - 1):
        heads = itertools.islice(itertools.product((0, 1), repeat=depth - 1), count)
        return [head + (0,) for head in heads]
    return list(itertools.islice(itertools.product((0, 1), repeat=depth), count))


def almost_disjoint_family(depth, count=None, branches=None):
    if depth < 1:
        raise ValidationError("The depth must be at least 1, got %s." % depth)
    if branches is None:
        if count is None:
            raise ValidationError("Give either a count or explicit branches.")
        if count > 2 ** depth:
            raise ValidationError(
                "Only %s branches of depth %s exist, %s requested." % (2 ** depth, depth, count)
            )
        branches = default_branches(depth, count)
    branches = [tuple(branch) for branch in branches]
    for branch in branches:
        if len(branch) != depth or any(bit not in (0, 1) for bit in branch):
            raise ValidationError("Branch %s is not a bit string of length %s." % (branch, depth))
    if len(set(branches)) != len(branches):
        raise ValidationError("Branches must be distinct.")
    if count is not None and count != len(branches):
        raise ValidationError("%s branches given, count says %s." % (len(branches), count))
    return [
        tuple(_prefix_code(branch[:n]) for n in range(depth)) for branch in branches
    ]


def disagreement(x, y):
    """Sorted positions where two vectors of the family differ."""
    return [n for n, (a, b) in enumerate(zip(x, y)) if a != b]


def is_final_segment(positions, depth):
    return bool(positions) and positions == list(range(positions[0], depth))
