"""Partition and tableau combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order;
``partition()`` canonicalizes arbitrary input.  Compositions are tuples of
non-negative integers and are never reordered implicitly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from . import kernels

Partition = tuple[int, ...]
Composition = tuple[int, ...]


class ParseError(ValueError):
    """Malformed text input; ``position`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def partition(parts: Iterable[int]) -> Partition:
    """Canonical partition from any iterable of non-negative integers."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(parts: tuple) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def normalize_composition(parts: Iterable[int]) -> tuple[Composition, tuple[int, ...]]:
    """Drop zero parts; return the survivors and their original positions."""
    kept = [(p, i) for i, p in enumerate(parts) if p]
    return tuple(p for p, _ in kept), tuple(i for _, i in kept)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def addable_cells(lam: Partition) -> list[Partition]:
    """Partitions obtained by adding one box to ``lam``."""
    out = []
    for r in range(len(lam) + 1):
        row = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > row:
            out.append(lam[:r] + (row + 1,) + lam[r + 1:])
    return out


def removable_cells(lam: Partition) -> list[Partition]:
    """Partitions obtained by removing one box from ``lam``."""
    out = []
    for r in range(len(lam)):
        if r == len(lam) - 1 or lam[r] > lam[r + 1]:
            out.append(partition(lam[:r] + (lam[r] - 1,) + lam[r + 1:]))
    return out


def parse_partition(text: str) -> Partition:
    """Parse ``[3,1]`` (or ``(3,1)``); ``[]`` is the empty partition."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s or s[0] not in "[(":
        raise ParseError("expected '[' or '('", text, offset)
    close = "]" if s[0] == "[" else ")"
    if s[-1] != close:
        missing = s[-1].isdigit() or s[-1] in ", "
        raise ParseError(f"expected '{close}'", text, offset + len(s) - (0 if missing else 1))
    body = s[1:-1]
    if not body.strip():
        return ()
    parts = []
    pos = offset + 1
    for tok in body.split(","):
        lead = len(tok) - len(tok.lstrip())
        stripped = tok.strip()
        if not stripped.isdigit() or int(stripped) == 0:
            raise ParseError(f"bad part {stripped!r}", text, pos + lead)
        parts.append(int(stripped))
        pos += len(tok) + 1
    lam = tuple(parts)
    if not is_partition(lam):
        raise ParseError("parts are not weakly decreasing", text, offset)
    return lam


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


# --- Kostka numbers ---------------------------------------------------------


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: Composition) -> int:
    return kernels.count_ssyt(shape, content)


def kostka(shape: Iterable[int], content: Iterable[int]) -> int:
    """Number of semistandard Young tableaux of ``shape`` with ``content``.

    The content is used as given (zero entries dropped), not sorted.
    """
    shape = partition(shape)
    content = tuple(c for c in content if c)
    if sum(shape) != sum(content):
        return 0
    return _kostka(shape, content)


def iter_ssyt(shape: Partition, content: Composition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Explicit semistandard tableaux, as tuples of rows with entries 1, 2, ...

    Cells are filled in row-reading order; this is an independent enumeration
    from the horizontal-strip kernel behind :func:`kostka`.
    """
    shape = tuple(shape)
    if sum(shape) != sum(content):
        return
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    left = list(content)

    def fill(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, len(left) + 1):
            if left[v - 1]:
                left[v - 1] -= 1
                grid[r][c] = v
                yield from fill(idx + 1)
                left[v - 1] += 1
        grid[r][c] = 0

    yield from fill(0)


# --- Littlewood-Richardson --------------------------------------------------


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    # reading order: rows top to bottom, each row right to left
    cells = []
    for r, length in enumerate(nu):
        start = lam[r] if r < len(lam) else 0
        cells.extend((r, c) for c in range(length - 1, start - 1, -1))
    grid: dict[tuple[int, int], int] = {}
    used = [0] * (len(mu) + 1)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(mu)
        right = grid.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = grid.get((r - 1, c))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if used[v] >= mu[v - 1]:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            used[v] += 1
            grid[(r, c)] = v
            total += fill(idx + 1)
            used[v] -= 1
        grid.pop((r, c), None)
        return total

    return fill(0)


def littlewood_richardson(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^nu_{lam,mu}, counted as LR skew tableaux of shape nu/lam, content mu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _lr_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    terms = ((nu, littlewood_richardson(lam, mu, nu)) for nu in partitions_of(sum(lam) + sum(mu)))
    return tuple((nu, c) for nu, c in terms if c)


def lr_product(lam: Iterable[int], mu: Iterable[int]) -> dict[Partition, int]:
    """Schur expansion of s_lam * s_mu (zero coefficients omitted)."""
    return dict(_lr_product(partition(lam), partition(mu)))


def schur_product(shapes: Iterable[Partition]) -> dict[Partition, int]:
    """Schur expansion of a product of Schur functions."""
    acc: dict[Partition, int] = {(): 1}
    for shape in shapes:
        shape = partition(shape)
        nxt: dict[Partition, int] = {}
        for nu, c in acc.items():
            for rho, d in lr_product(nu, shape).items():
                nxt[rho] = nxt.get(rho, 0) + c * d
        acc = nxt
    return acc


# --- dimensions and characters ----------------------------------------------


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def specht_dimension(lam: Iterable[int]) -> int:
    """f^lam by the hook length formula."""
    lam = partition(lam)
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def weyl_dimension(lam: Iterable[int], n: int) -> int:
    """Dimension of the irreducible polynomial GL_n module of highest weight lam."""
    lam = partition(lam)
    if len(lam) > n:
        return 0
    num = prod(n + j - i for i in range(len(lam)) for j in range(lam[i]))
    return num // prod(hook_lengths(lam))


def centralizer_order(cls: Partition) -> int:
    """z_cls = prod i^{m_i} m_i!  for a cycle type cls."""
    z = 1
    for i, m in _multiplicities(cls).items():
        z *= i**m * factorial(m)
    return z


def class_size(cls: Partition) -> int:
    return factorial(sum(cls)) // centralizer_order(cls)


def class_sign(cls: Partition) -> int:
    return -1 if sum(c - 1 for c in cls) % 2 else 1


def _multiplicities(parts: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, cls: Partition) -> int:
    if not cls:
        return 1
    r, rest = cls[0], cls[1:]
    # beta numbers: removing an r-rim hook moves one bead down by r
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in beads:
            height = sum(1 for x in beads if b - r < x < b)
            new_beta = sorted((beads - {b}) | {b - r}, reverse=True)
            mu = partition(new_beta[i] - (ell - 1 - i) for i in range(ell))
            total += (-1) ** height * _mn(mu, rest)
    return total


def mn_character(lam: Iterable[int], cls: Iterable[int]) -> int:
    """chi^lam at the class of cycle type cls (Murnaghan-Nakayama rule)."""
    lam, cls = partition(lam), partition(cls)
    if sum(lam) != sum(cls):
        raise ValueError(f"size mismatch: |{lam}| != |{cls}|")
    return _mn(lam, cls)


# --- Jacobi-Trudi -----------------------------------------------------------


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _jacobi_trudi(lam: Partition) -> tuple[tuple[int, Composition], ...]:
    ell = len(lam)
    terms = []
    for perm in itertools.permutations(range(ell)):
        degrees = [lam[i] - i + perm[i] for i in range(ell)]
        if any(d < 0 for d in degrees):
            continue
        terms.append((_perm_sign(perm), tuple(d for d in degrees if d)))
    return tuple(terms)


def jacobi_trudi(lam: Iterable[int]) -> list[tuple[int, Composition]]:
    """s_lam = det(h_{lam_i - i + j}) as a list of (sign, degrees).

    One entry per surviving permutation, identity first; h_0 factors are
    dropped from ``degrees``.
    """
    return list(_jacobi_trudi(partition(lam)))
