"""Maximum Disjoint Packing.

Exact branch and bound over sets encoded as integer bit masks.
"""

from collections.abc import Iterable


def max_disjoint_packing(blocks: Iterable[int]) -> list[int]:
    """Return a largest family of pairwise-disjoint masks drawn from ``blocks``.

    Branches on the lowest element still coverable: either one of the
    candidate blocks containing it is taken, or the element is dropped.
    A branch is cut when the taken count plus (coverable elements //
    smallest candidate size) cannot beat the best packing found so far.

    Args:
        blocks: Non-zero bit masks. Supplying only inclusion-minimal blocks
            keeps the search small and does not change the optimum size.

    Returns:
        The packing, ordered by lowest set bit. Ties are broken by the
        first packing found in (size, mask) order, so results are stable.
    """
    candidates = sorted({b for b in blocks if b}, key=lambda b: (b.bit_count(), b))
    best: list[int] = []
    chosen: list[int] = []

    def search(pool: list[int]) -> None:
        nonlocal best
        if not pool:
            if len(chosen) > len(best):
                best = chosen.copy()
            return
        coverable = 0
        for block in pool:
            coverable |= block
        # pool stays sorted by size, so pool[0] is a smallest block
        if len(chosen) + coverable.bit_count() // pool[0].bit_count() <= len(best):
            return
        pivot = coverable & -coverable
        for block in pool:
            if block & pivot:
                chosen.append(block)
                search([c for c in pool if not c & block])
                chosen.pop()
        search([c for c in pool if not c & pivot])

    search(candidates)
    return sorted(best, key=lambda b: b & -b)
