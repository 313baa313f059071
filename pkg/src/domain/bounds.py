"""Separation Bounds.

This module holds the conjectured upper bound on block sensitivity in terms
of sensitivity and the separation rows known for n <= 12.
"""

# (n, s, bs): bs is the largest block sensitivity for sensitivity s, first
# reached at n variables. Pairs with bs = s are omitted.
KNOWN_SEPARATIONS: frozenset[tuple[int, int, int]] = frozenset(
    {
        (4, 2, 3),
        (5, 3, 4),
        (6, 4, 5),
        (7, 3, 5),
        (7, 5, 6),
        (8, 4, 6),
        (8, 6, 7),
        (9, 3, 6),
        (9, 5, 7),
        (9, 7, 8),
        (10, 4, 7),
        (10, 6, 8),
        (10, 8, 9),
        (11, 5, 8),
        (11, 7, 9),
        (11, 9, 10),
        (12, 4, 8),
        (12, 6, 9),
        (12, 8, 10),
        (12, 10, 11),
    }
)

KNOWN_SEPARATIONS_MAX_N = 12


def separation_bound(s: int) -> int:
    """Return (s^2 + s) / 2, the largest bs seen for sensitivity s."""
    return (s * s + s) // 2


def within_separation_bound(s: int, bs: int) -> bool:
    return bs <= separation_bound(s)
