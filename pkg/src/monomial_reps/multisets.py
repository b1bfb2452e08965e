"""Multisets, multiset partitions and multitabloids.

A multiset over {1..m} is stored as its multiplicity vector.  Multiset
partitions keep their blocks in a canonical sorted order so that structural
equality is multiset-of-multisets equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import kernels
from .labels import PartitionSequence, sequence
from .partitions import ParseError, Partition, partition


@dataclass(frozen=True, order=True)
class Multiset:
    """Multiset over positive integer symbols, ``counts[i]`` copies of i+1.

    Trailing zero counts are stripped, so ``{2}`` is ``counts == (0, 1)``.
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValueError(f"negative multiplicity in {counts}")
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_items(cls, items: Mapping[int, int] | Iterable[tuple[int, int]]) -> "Multiset":
        items = dict(items)
        if any(s < 1 for s in items):
            raise ValueError("symbols are positive integers")
        top = max(items, default=0)
        return cls(tuple(items.get(s, 0) for s in range(1, top + 1)))

    @classmethod
    def of(cls, *symbols: int) -> "Multiset":
        """Multiset from a flat list of symbols, e.g. ``Multiset.of(1, 1, 2)``."""
        items: dict[int, int] = {}
        for s in symbols:
            items[s] = items.get(s, 0) + 1
        return cls.from_items(items)

    @property
    def size(self) -> int:
        return sum(self.counts)

    def items(self) -> list[tuple[int, int]]:
        return [(i + 1, c) for i, c in enumerate(self.counts) if c]

    def padded(self, m: int) -> tuple[int, ...]:
        return self.counts + (0,) * (m - len(self.counts))

    def __str__(self) -> str:
        return "{" + ",".join(f"{s}^{c}" for s, c in self.items()) + "}"

    @classmethod
    def parse(cls, text: str) -> "Multiset":
        """Parse ``{1^2,2^1}``; a bare symbol ``3`` means ``3^1``."""
        s = text.strip()
        start = len(text) - len(text.lstrip())
        if len(s) < 2 or s[0] != "{" or s[-1] != "}":
            raise ParseError("expected '{...}'", text, start)
        body = s[1:-1]
        items: dict[int, int] = {}
        if not body.strip():
            return cls(())
        pos = start + 1
        for tok in body.split(","):
            sym, _, mult = tok.strip().partition("^")
            mult = mult or "1"
            if not sym.isdigit() or not mult.isdigit() or int(sym) == 0:
                raise ParseError(f"bad item {tok.strip()!r}", text, pos)
            items[int(sym)] = items.get(int(sym), 0) + int(mult)
            pos += len(tok) + 1
        return cls.from_items({s: c for s, c in items.items() if c})


def _block_key(block: Multiset, m: int) -> tuple:
    # smaller blocks first, then blocks heavier in small symbols
    return (block.size, tuple(-c for c in block.padded(m)))


@dataclass(frozen=True)
class MultisetPartition:
    """Multiset of non-empty blocks; blocks sorted by size, then with small symbols first."""

    blocks: tuple[Multiset, ...]

    def __post_init__(self):
        if any(b.size == 0 for b in self.blocks):
            raise ValueError("blocks must be non-empty")
        m = max((len(b.counts) for b in self.blocks), default=0)
        object.__setattr__(
            self, "blocks", tuple(sorted(self.blocks, key=lambda b: _block_key(b, m)))
        )

    @property
    def part_count(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def union(self) -> Multiset:
        m = max((len(b.counts) for b in self.blocks), default=0)
        return Multiset(tuple(sum(b.padded(m)[j] for b in self.blocks) for j in range(m)))

    def block_multiplicities(self) -> dict[Multiset, int]:
        out: dict[Multiset, int] = {}
        for b in self.blocks:
            out[b] = out.get(b, 0) + 1
        return out

    def __str__(self) -> str:
        return "{" + "|".join(str(b) for b in self.blocks) + "}"


def type_of(p: MultisetPartition) -> PartitionSequence:
    """Type(P): i-th entry is the partition of multiplicities of the distinct
    blocks of size i."""
    by_size: dict[int, list[int]] = {}
    for block, mult in p.block_multiplicities().items():
        by_size.setdefault(block.size, []).append(mult)
    top = max(by_size, default=0)
    return sequence(by_size.get(i, ()) for i in range(1, top + 1))


def utype_of(p: MultisetPartition) -> Partition:
    """UType(P): multiplicities of the distinct blocks, as one partition."""
    return partition(p.block_multiplicities().values())


def utype_padded(p: MultisetPartition, n: int) -> Partition:
    """UType(P)[n]: UType(P) plus a part n - |P|, re-sorted."""
    if p.part_count > n:
        raise ValueError(f"{p.part_count} blocks exceed n={n}")
    return partition(utype_of(p) + (n - p.part_count,))


# --- enumeration ------------------------------------------------------------


def _sub_vectors_desc(rem: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Vectors v <= rem with sum(v) == size, lexicographically decreasing."""
    if not rem:
        if size == 0:
            yield ()
        return
    tail = sum(rem[1:])
    for v in range(min(rem[0], size), -1, -1):
        if size - v > tail:
            break
        for rest in _sub_vectors_desc(rem[1:], size - v):
            yield (v,) + rest


def enumerate_multiset_partitions(
    ms: Multiset, max_parts: int | None = None
) -> Iterator[MultisetPartition]:
    """Stream every multiset partition of ``ms`` with at most ``max_parts`` blocks.

    Blocks are chosen largest-first in the canonical (size, vector) order, so
    each partition is produced once and the output order is deterministic.
    """
    m = len(ms.counts)
    limit = ms.size if max_parts is None else max_parts
    chosen: list[tuple[int, ...]] = []

    def rec(rem: tuple[int, ...], bound: tuple | None) -> Iterator[MultisetPartition]:
        left = sum(rem)
        if left == 0:
            yield MultisetPartition(tuple(Multiset(v) for v in chosen))
            return
        if len(chosen) >= limit:
            return
        top = left if bound is None else min(left, bound[0])
        for size in range(top, 0, -1):
            for vec in _sub_vectors_desc(rem, size):
                if bound is not None and (size, vec) > bound:
                    continue
                chosen.append(vec)
                yield from rec(tuple(r - v for r, v in zip(rem, vec)), (size, vec))
                chosen.pop()

    yield from rec(ms.padded(m), None)


def count_partitions_with_part_sizes(ms: Multiset, sizes: Iterable[int]) -> int:
    """Number of multiset partitions of ``ms`` whose block sizes are ``sizes``."""
    sizes = tuple(sizes)
    if sum(sizes) != ms.size:
        return 0
    return kernels.count_sized_multiset_partitions(ms.counts, sizes)


# --- multitabloids ----------------------------------------------------------


@dataclass(frozen=True)
class Multitabloid:
    """Stable multitabloid: sparse array b over index tuples 0 <= i_j <= k_j,
    the all-zero index excluded, with sum_I I_j * b_I == k_j for each j."""

    ks: tuple[int, ...]
    entries: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        entries = tuple(sorted((tuple(idx), int(b)) for idx, b in self.entries if b))
        m = len(self.ks)
        for idx, b in entries:
            if len(idx) != m or not any(idx) or b < 0:
                raise ValueError(f"bad entry {idx}: {b}")
            if any(not 0 <= i <= k for i, k in zip(idx, self.ks)):
                raise ValueError(f"index {idx} out of bounds {self.ks}")
        for j in range(m):
            if sum(idx[j] * b for idx, b in entries) != self.ks[j]:
                raise ValueError(f"marginal {j} does not equal {self.ks[j]}")
        object.__setattr__(self, "entries", entries)

    @property
    def order(self) -> int:
        return len(self.ks)

    @property
    def total(self) -> int:
        return sum(b for _, b in self.entries)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return dict(self.entries)


def enumerate_multitabloids(ks: Iterable[int], n: int | None = None) -> Iterator[Multitabloid]:
    """All stable multitabloids with marginals ``ks`` and entry total <= n.

    Solves the weighted-marginal equations directly, one index tuple at a
    time; this does not go through multiset partitions.
    """
    ks = tuple(ks)
    m = len(ks)
    indices = [idx for idx in itertools.product(*(range(k + 1) for k in ks)) if any(idx)]
    limit = sum(ks) if n is None else n
    chosen: list[tuple[tuple[int, ...], int]] = []

    def rec(pos: int, rem: list[int], used: int) -> Iterator[Multitabloid]:
        if not any(rem):
            yield Multitabloid(ks, tuple(chosen))
            return
        if pos == len(indices):
            return
        idx = indices[pos]
        cap = limit - used
        for j in range(m):
            if idx[j]:
                cap = min(cap, rem[j] // idx[j])
        for b in range(cap, -1, -1):
            if b:
                chosen.append((idx, b))
                for j in range(m):
                    rem[j] -= idx[j] * b
            yield from rec(pos + 1, rem, used + b)
            if b:
                for j in range(m):
                    rem[j] += idx[j] * b
                chosen.pop()

    yield from rec(0, list(ks), 0)


def multitabloid_to_perm_label(tab: Multitabloid) -> PartitionSequence:
    """lam_l collects the entries b_I with i_1 + ... + i_m == l."""
    diag: dict[int, list[int]] = {}
    for idx, b in tab.entries:
        diag.setdefault(sum(idx), []).append(b)
    top = max(diag, default=0)
    return sequence(diag.get(ell, ()) for ell in range(1, top + 1))


def array_to_multiset_partition(tab: Multitabloid) -> MultisetPartition:
    """Block {1^{i_1}, ..., m^{i_m}} appears b_I times."""
    blocks = []
    for idx, b in tab.entries:
        blocks.extend([Multiset(idx)] * b)
    return MultisetPartition(tuple(blocks))


def multiset_partition_to_array(p: MultisetPartition, ks: Iterable[int]) -> Multitabloid:
    ks = tuple(ks)
    entries = [(b.padded(len(ks)), c) for b, c in p.block_multiplicities().items()]
    return Multitabloid(ks, tuple(entries))
