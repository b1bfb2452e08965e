"""Tensor products of symmetric powers of the defining representation.

Sym^{k1}(V) x ... x Sym^{km}(V) splits into polynomial permutation modules
M~(Type(P)), one per multiset partition P of {1^k1, ..., m^km} with at most n
blocks; each of those splits into irreducibles by Kostka numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .labels import (
    PartitionSequence,
    WeightedPermLabel,
    decompose_perm_module,
    restrict_sequence,
    sequence,
    sorted_map,
)
from .multisets import (
    Multiset,
    count_partitions_with_part_sizes,
    enumerate_multiset_partitions,
    enumerate_multitabloids,
    multitabloid_to_perm_label,
    type_of,
    utype_padded,
)
from .partitions import Partition, iter_ssyt, kostka, partition, partitions_of


def _check_ks(ks: Iterable[int]) -> tuple[int, ...]:
    ks = tuple(int(k) for k in ks)
    if any(k <= 0 for k in ks):
        raise ValueError(f"symmetric power degrees must be positive: {ks}")
    return ks


def _add(acc: dict, key, c: int = 1) -> None:
    acc[key] = acc.get(key, 0) + c


def a_k(k: int, n: int | None = None) -> list[tuple[int, ...]]:
    """A_k^n: tuples (a_1..a_k) with sum i*a_i == k and sum a_i <= n."""
    out = []
    for lam in partitions_of(k):
        if n is not None and len(lam) > n:
            continue
        a = [0] * k
        for part in lam:
            a[part - 1] += 1
        out.append(tuple(a))
    return out


def decompose_sym_power(k: int, n: int) -> list[PartitionSequence]:
    """Sym^k(V) as a list of labels M~((a_1), (a_2), ..., (a_k)), one per A_k^n."""
    return sorted(
        (sequence((a,) if a else () for a in t) for t in a_k(k, n)),
        key=lambda s: (len(s), s),
    )


# --- weighted permutation modules -------------------------------------------


def _tabloids(rows: tuple[int, ...], cols: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Non-negative integer matrices with the given row and column sums."""
    if not rows:
        if not any(cols):
            yield ()
        return
    first, rest = rows[0], rows[1:]

    def row_fill(j: int, left: int, cols_left: list[int]) -> Iterator[tuple[int, ...]]:
        if j == len(cols_left):
            if left == 0:
                yield ()
            return
        for v in range(min(left, cols_left[j]), -1, -1):
            for tail in row_fill(j + 1, left - v, cols_left):
                yield (v,) + tail

    for row in row_fill(0, first, list(cols)):
        remaining = tuple(c - v for c, v in zip(cols, row))
        for below in _tabloids(rest, remaining):
            yield (row,) + below


def tensor_weighted_perm(a: WeightedPermLabel, b: WeightedPermLabel) -> list[WeightedPermLabel]:
    """M(a) x M(b): one summand per tabloid, entry (i, j) weighted k_i + k'_j."""
    if a.n != b.n:
        raise ValueError(f"ambient mismatch: {a.n} != {b.n}")
    out = []
    for t in _tabloids(a.parts, b.parts):
        parts, weights = [], []
        for i, row in enumerate(t):
            for j, v in enumerate(row):
                if v:
                    parts.append(v)
                    weights.append(a.weights[i] + b.weights[j])
        out.append(WeightedPermLabel(tuple(parts), tuple(weights)).canonical())
    return sorted(out, key=lambda w: (w.weights, w.parts))


def perm_summands_via_tabloids(ks: Iterable[int], n: int) -> dict[PartitionSequence, int]:
    """Permutation-module decomposition by iterating pairwise tabloid tensoring
    of the Sym^k(V) summands at fixed ambient n."""
    ks = _check_ks(ks)
    acc: dict[WeightedPermLabel, int] = {WeightedPermLabel((n,), (0,)).canonical(): 1}
    for k in ks:
        factor = [WeightedPermLabel.from_poly(s, n) for s in decompose_sym_power(k, n)]
        nxt: dict[WeightedPermLabel, int] = {}
        for left, c in acc.items():
            for right in factor:
                for w in tensor_weighted_perm(left, right):
                    _add(nxt, w, c)
        acc = nxt
    out: dict[PartitionSequence, int] = {}
    for w, c in acc.items():
        _add(out, w.to_poly(), c)
    return sorted_map(out)


def sym_multiset(ks: Iterable[int]) -> Multiset:
    """{1^k1, 2^k2, ..., m^km}."""
    return Multiset(tuple(ks))


def decompose_sym_product_to_perm(ks: Iterable[int], n: int) -> dict[PartitionSequence, int]:
    """Sym^{k1}(V) x ... as polynomial permutation modules, one per stable
    multitabloid with entry total <= n."""
    ks = _check_ks(ks)
    out: dict[PartitionSequence, int] = {}
    for tab in enumerate_multitabloids(ks, n):
        _add(out, multitabloid_to_perm_label(tab))
    return sorted_map(out)


def perm_summands_via_multiset_partitions(ks: Iterable[int], n: int) -> dict[PartitionSequence, int]:
    """Same decomposition, indexed by multiset partitions: one M~(Type(P)) per P."""
    ks = _check_ks(ks)
    out: dict[PartitionSequence, int] = {}
    for p in enumerate_multiset_partitions(sym_multiset(ks), n):
        _add(out, type_of(p))
    return sorted_map(out)


# --- irreducible decomposition ----------------------------------------------


def _route_a(ks: tuple[int, ...], n: int) -> dict[PartitionSequence, int]:
    out: dict[PartitionSequence, int] = {}
    for label, c in decompose_sym_product_to_perm(ks, n).items():
        for irrep, k in decompose_perm_module(label, n).items():
            _add(out, irrep, c * k)
    return sorted_map(out)


def _tableau_counts(content: Partition) -> dict[Partition, int]:
    counts: dict[Partition, int] = {}
    for shape in partitions_of(sum(content)):
        c = sum(1 for _ in iter_ssyt(shape, content))
        if c:
            counts[shape] = c
    return counts


def _route_b(ks: tuple[int, ...], n: int) -> dict[PartitionSequence, int]:
    out: dict[PartitionSequence, int] = {}
    cache: dict[Partition, dict[Partition, int]] = {}
    for p in enumerate_multiset_partitions(sym_multiset(ks), n):
        t = type_of(p)
        columns = []
        for content in t:
            if content not in cache:
                cache[content] = _tableau_counts(content)
            columns.append(list(cache[content].items()))
        for choice in itertools.product(*columns):
            mult = 1
            for _, c in choice:
                mult *= c
            _add(out, sequence(shape for shape, _ in choice), mult)
    return sorted_map(out)


def decompose_sym_product_to_irreps(
    ks: Iterable[int], n: int, route: str = "A"
) -> dict[PartitionSequence, int]:
    """Multiplicities of each V^{lam1,...} in Sym^{k1}(V) x ... x Sym^{km}(V).

    Route "A" decomposes the permutation modules from multitabloids by Kostka
    numbers.  Route "B" counts tuples (P, T_1, ..., T_j) directly: P a
    multiset partition with at most n blocks and T_i an explicit SSYT of
    shape lam_i and content Type(P)_i.
    """
    ks = _check_ks(ks)
    if route == "A":
        return _route_a(ks, n)
    if route == "B":
        return _route_b(ks, n)
    raise ValueError(f"unknown route {route!r}")


def sym_product_specht_multiplicities(ks: Iterable[int], n: int) -> dict[Partition, int]:
    """S_n multiplicities: sum over P of K(lam, UType(P)[n])."""
    ks = _check_ks(ks)
    out: dict[Partition, int] = {}
    for p in enumerate_multiset_partitions(sym_multiset(ks), n):
        content = utype_padded(p, n)
        for lam in partitions_of(n):
            c = kostka(lam, content)
            if c:
                _add(out, lam, c)
    return {lam: out[lam] for lam in sorted(out, reverse=True)}


def specht_via_irreps(ks: Iterable[int], n: int, route: str = "A") -> dict[Partition, int]:
    """Restrict each irreducible summand to S_n and add up."""
    out: dict[Partition, int] = {}
    for seq, c in decompose_sym_product_to_irreps(ks, n, route).items():
        for lam, k in restrict_sequence(seq, n).items():
            _add(out, lam, c * k)
    return {lam: out[lam] for lam in sorted(out, reverse=True)}


# --- invariants -------------------------------------------------------------


def invariant_dimension(ks: Iterable[int], n: int) -> int:
    """dim of S_n-invariants: multiset partitions with at most n blocks."""
    ks = _check_ks(ks)
    return sum(1 for _ in enumerate_multiset_partitions(sym_multiset(ks), n))


def invariant_dimension_in_weight(ks: Iterable[int], n: int, mu: Iterable[int]) -> int:
    """S_n-invariants in the symmetrized weight space of mu: multiset
    partitions with block sizes mu."""
    ks = _check_ks(ks)
    mu = partition(mu)
    if sum(mu) != sum(ks) or len(mu) > n:
        return 0
    return count_partitions_with_part_sizes(sym_multiset(ks), mu)


# --- weak Foulkes -----------------------------------------------------------


def weak_foulkes_counts(ms: Multiset, a: int, b: int) -> tuple[int, int]:
    """(partitions into b blocks of size a, partitions into a blocks of size b)."""
    if ms.size != a * b:
        raise ValueError(f"|M| = {ms.size} != a*b = {a * b}")
    return (
        count_partitions_with_part_sizes(ms, (a,) * b),
        count_partitions_with_part_sizes(ms, (b,) * a),
    )


@dataclass
class FoulkesReport:
    a: int
    b: int
    alphabet_bound: int
    checked: int = 0
    counterexamples: list[tuple[Multiset, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _multiplicity_vectors(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _multiplicity_vectors(total - first, slots - 1):
            yield (first,) + rest


def weak_foulkes_scan(a: int, b: int, alphabet_bound: int | None = None) -> FoulkesReport:
    """Check the weak Foulkes inequality on every multiset of size ab over
    {1..alphabet_bound} (default ab)."""
    if not 0 < a < b:
        raise ValueError(f"need 0 < a < b, got a={a}, b={b}")
    bound = a * b if alphabet_bound is None else alphabet_bound
    report = FoulkesReport(a, b, bound)
    for counts in _multiplicity_vectors(a * b, bound):
        ms = Multiset(counts)
        small, large = weak_foulkes_counts(ms, a, b)
        report.checked += 1
        if small < large:
            report.counterexamples.append((ms, small, large))
    return report
