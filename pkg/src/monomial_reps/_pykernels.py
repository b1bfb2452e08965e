"""Pure-Python counting kernels.

Each function counts leaves of an exhaustive enumeration.  ``_ckernels.pyx``
implements the same search trees in C; the two must agree exactly.
"""

from __future__ import annotations


def count_ssyt(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of ``shape`` with the given content.

    The value ``i`` is placed as a horizontal strip; rows are filled bottom-up
    so the row above still holds its previous length when we read it.
    """
    content = tuple(c for c in content if c)
    if sum(shape) != sum(content) or any(c < 0 for c in content):
        return 0
    rows = len(shape)
    if rows == 0:
        return 1
    cur = [0] * rows
    nvals = len(content)

    def place(i: int, r: int, left: int) -> int:
        if r < 0:
            if left:
                return 0
            return 1 if i + 1 == nvals else place(i + 1, rows - 1, content[i + 1])
        cap = shape[0] if r == 0 else min(shape[r], cur[r - 1])
        room = cap - cur[r]
        total = 0
        for t in range(min(room, left) + 1):
            cur[r] += t
            total += place(i, r - 1, left - t)
            cur[r] -= t
        return total

    return place(0, rows - 1, content[0])


def count_sized_multiset_partitions(mults: tuple[int, ...], sizes: tuple[int, ...]) -> int:
    """Number of multiset partitions of the multiset with multiplicity vector
    ``mults`` whose block sizes are exactly ``sizes`` (as a multiset).

    Blocks of equal size are generated in lexicographically non-increasing
    order, so every partition is visited once.
    """
    rem = [m for m in mults if m]
    sizes = sorted(sizes, reverse=True)
    if sum(rem) != sum(sizes) or any(s <= 0 for s in sizes):
        return 0
    if not sizes:
        return 1
    m = len(rem)
    nb = len(sizes)
    blocks = [[0] * m for _ in range(nb)]

    def block(b: int) -> int:
        if b == nb:
            return 1
        tight = b > 0 and sizes[b - 1] == sizes[b]
        return entry(b, 0, sizes[b], tight)

    def entry(b: int, j: int, left: int, tight: bool) -> int:
        if j == m:
            return block(b + 1) if left == 0 else 0
        hi = min(rem[j], left)
        if tight:
            hi = min(hi, blocks[b - 1][j])
        tail = sum(rem[j + 1:])
        total = 0
        for v in range(hi, -1, -1):
            if left - v > tail:
                break
            blocks[b][j] = v
            rem[j] -= v
            total += entry(b, j + 1, left - v, tight and v == blocks[b - 1][j])
            rem[j] += v
        blocks[b][j] = 0
        return total

    return block(0)


def count_balanced_set_partitions(k: int) -> int:
    """Number of set partitions of {1..k} u {1'..k'} in which every block
    meets both halves in the same number of points.

    Restricted-growth enumeration: elements 0..k-1 are unprimed, k..2k-1
    primed.  A primed element may only join a block that still owes primed
    points, which prunes every branch that cannot end balanced.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return 1
    owed: list[int] = []

    def assign(e: int, open_debt: int) -> int:
        if e == 2 * k:
            return 1 if open_debt == 0 else 0
        total = 0
        if e < k:
            for b in range(len(owed)):
                owed[b] += 1
                total += assign(e + 1, open_debt + 1)
                owed[b] -= 1
            owed.append(1)
            total += assign(e + 1, open_debt + 1)
            owed.pop()
        else:
            if open_debt > 2 * k - e:
                return 0
            for b in range(len(owed)):
                if owed[b] > 0:
                    owed[b] -= 1
                    total += assign(e + 1, open_debt - 1)
                    owed[b] += 1
        return total

    return assign(0, 0)
