# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""Cantor pairing and its right-to-left fold over finite sequences."""

from math import isqrt


def pair(a, b):
    """Cantor pairing (a + b)(a + b + 1) / 2 + b, a bijection N x N -> N."""
    if a < 0 or b < 0:
        raise ValueError("pair() is only defined on naturals, got (%s, %s)" % (a, b))
    s = a + b
    return s * (s + 1) // 2 + b


def diagonal(n):
    """The s with s(s + 1)/2 <= n < (s + 1)(s + 2)/2."""
    return (isqrt(8 * n + 1) - 1) // 2


def unpair(n):
    """Inverse of :func:`pair`."""
    if n < 0:
        raise ValueError("unpair() is only defined on naturals, got %s" % n)
    s = diagonal(n)
    b = n - s * (s + 1) // 2
    return s - b, b


def fold(values):
    """Right-to-left iterated pairing: (v0, v1, v2) -> pair(v0, pair(v1, v2)).

    A single value folds to itself and the empty sequence folds to 0.
    """
    values = tuple(values)
    if not values:
        return 0
    acc = values[-1]
    for value in reversed(values[:-1]):
        acc = pair(value, acc)
    return acc


def unfold(n, length):
    """Inverse of :func:`fold` for sequences of a known length."""
    if length < 1:
        raise ValueError("unfold() needs a positive length, got %s" % length)
    values = []
    for _i in range(length - 1):
        head, n = unpair(n)
        values.append(head)
    values.append(n)
    return tuple(values)

