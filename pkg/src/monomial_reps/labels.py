"""Labels for representations of the monomial group T x| S_n.

A *partition sequence* ``(lam1, lam2, ..., lam_l)`` is a tuple of partitions
with trailing empty partitions stripped.  It names the polynomial irreducible
V^{lam1,...,lam_l}, where lam_i carries torus weight i and an implicit one-row
block of size n - sum|lam_i| carries weight 0.  The same tuple also names the
polynomial permutation module M~(lam1, ..., lam_l); which one is meant is
always clear from the function that produced it.

Multiplicity maps are plain dicts with no zero values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping

from .partitions import (
    ParseError,
    Partition,
    addable_cells,
    kostka,
    partition,
    partitions_of,
    removable_cells,
    schur_product,
    specht_dimension,
)

PartitionSequence = tuple[Partition, ...]


def sequence(parts: Iterable[Iterable[int]]) -> PartitionSequence:
    """Canonical partition sequence: each entry a partition, no trailing empties."""
    seq = [partition(p) for p in parts]
    while seq and not seq[-1]:
        seq.pop()
    return tuple(seq)


def degree(seq: PartitionSequence) -> int:
    return sum(i * sum(lam) for i, lam in enumerate(seq, start=1))


def boxes(seq: PartitionSequence) -> int:
    """Total number of boxes, i.e. the part of n not absorbed by weight 0."""
    return sum(sum(lam) for lam in seq)


def check_valid(seq: PartitionSequence, n: int) -> None:
    if n < 0:
        raise ValueError(f"ambient n must be non-negative, got {n}")
    if boxes(seq) > n:
        raise ValueError(f"label {format_sequence(seq)} has {boxes(seq)} boxes > n={n}")


def sort_key(seq: PartitionSequence) -> tuple:
    """Degree-major, then lexicographic on the canonical tuple."""
    return (degree(seq), seq)


def sorted_map(d: Mapping[PartitionSequence, int]) -> dict[PartitionSequence, int]:
    return {k: d[k] for k in sorted(d, key=sort_key) if d[k]}


# --- text and JSON forms ----------------------------------------------------


def format_sequence(seq: PartitionSequence) -> str:
    """``((1)|-|(1))`` style; the trivial label is ``()``."""
    inner = "|".join("(" + ",".join(map(str, lam)) + ")" if lam else "-" for lam in seq)
    return "(" + inner + ")"


def parse_sequence(text: str) -> PartitionSequence:
    """Inverse of :func:`format_sequence`; ``[...]`` entries are also accepted."""
    s = text.rstrip()
    start = len(s) - len(s.lstrip())
    s = s.strip()
    if len(s) < 2 or s[0] != "(" or s[-1] != ")":
        raise ParseError("expected a parenthesised sequence", text, start)
    body = s[1:-1]
    if not body.strip():
        return ()
    out = []
    pos = start + 1
    for tok in body.split("|"):
        lead = len(tok) - len(tok.lstrip())
        item = tok.strip()
        if item == "-":
            out.append(())
        else:
            if len(item) < 2 or item[0] not in "([" or item[-1] not in ")]":
                raise ParseError(f"bad partition {item!r}", text, pos + lead)
            parts = []
            col = pos + lead + 1
            for p in item[1:-1].split(","):
                if not p.strip().isdigit() or int(p) == 0:
                    raise ParseError(f"bad part {p.strip()!r}", text, col)
                parts.append(int(p))
                col += len(p) + 1
            if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
                raise ParseError("parts are not weakly decreasing", text, pos + lead)
            out.append(tuple(parts))
        pos += len(tok) + 1
    return sequence(out)


def sequence_to_json(seq: PartitionSequence) -> list[list[int]]:
    return [list(lam) for lam in seq]


def sequence_from_json(obj: list) -> PartitionSequence:
    return sequence(obj)


# --- algebraic irreducibles -------------------------------------------------


class NotWeaklyPolynomial(ValueError):
    """A label carries a negative torus weight."""


@dataclass(frozen=True)
class AlgebraicIrrepLabel:
    """Irreducible algebraic representation of C^x wr S_n.

    ``entries`` holds ``(weight, shape)`` pairs with distinct weights and
    non-empty shapes, stored in increasing weight order.
    """

    entries: tuple[tuple[int, Partition], ...]
    n: int

    def __post_init__(self):
        entries = tuple(sorted((int(k), partition(lam)) for k, lam in self.entries))
        weights = [k for k, _ in entries]
        if len(set(weights)) != len(weights):
            raise ValueError(f"repeated weight in {entries}")
        if any(not lam for _, lam in entries):
            raise ValueError("shapes must be non-empty")
        if sum(sum(lam) for _, lam in entries) != self.n:
            raise ValueError(f"shapes do not have total size n={self.n}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_sequence(cls, seq: PartitionSequence, n: int) -> "AlgebraicIrrepLabel":
        check_valid(seq, n)
        entries = [(i, lam) for i, lam in enumerate(seq, start=1) if lam]
        if n - boxes(seq):
            entries.append((0, (n - boxes(seq),)))
        return cls(tuple(entries), n)

    @property
    def degree(self) -> int:
        return sum(k * sum(lam) for k, lam in self.entries)

    def to_sequence(self) -> PartitionSequence:
        if not is_polynomial_irrep(self):
            raise ValueError(f"{self} is not polynomial")
        top = max((k for k, _ in self.entries), default=0)
        shapes = dict(self.entries)
        return sequence(shapes.get(i, ()) for i in range(1, top + 1))


def is_polynomial_irrep(label: AlgebraicIrrepLabel) -> bool:
    """True iff the minimal weight is nonzero, or is zero on a one-row shape."""
    if any(k < 0 for k, _ in label.entries):
        raise NotWeaklyPolynomial(f"negative weight in {label.entries}")
    if not label.entries:
        return True
    k1, lam1 = label.entries[0]
    return k1 != 0 or len(lam1) == 1


def restrict_to_symmetric_group(label: AlgebraicIrrepLabel) -> dict[Partition, int]:
    """Specht multiplicities of the restriction to S_n: the Schur expansion of
    the product of the shapes."""
    return schur_product(lam for _, lam in label.entries)


def restrict_sequence(seq: PartitionSequence, n: int) -> dict[Partition, int]:
    """Restriction of V^seq at ambient n to S_n."""
    return restrict_to_symmetric_group(AlgebraicIrrepLabel.from_sequence(seq, n))


# --- weighted permutation modules -------------------------------------------


@dataclass(frozen=True)
class WeightedPermLabel:
    """M(parts, weights): induced from trivial blocks with torus weights."""

    parts: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.weights):
            raise ValueError("parts and weights differ in length")
        if any(p < 0 for p in self.parts):
            raise ValueError("negative part")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def canonical(self) -> "WeightedPermLabel":
        """Drop empty blocks and sort (weight, part) pairs, weight-major."""
        pairs = sorted((k, p) for p, k in zip(self.parts, self.weights) if p)
        return WeightedPermLabel(tuple(p for _, p in pairs), tuple(k for k, _ in pairs))

    @classmethod
    def from_poly(cls, seq: PartitionSequence, n: int) -> "WeightedPermLabel":
        """M~(seq) at ambient n."""
        check_valid(seq, n)
        parts = [n - boxes(seq)]
        weights = [0]
        for i, lam in enumerate(seq, start=1):
            parts.extend(lam)
            weights.extend([i] * len(lam))
        return cls(tuple(parts), tuple(weights)).canonical()

    def to_poly(self) -> PartitionSequence:
        c = self.canonical()
        if any(k < 0 for k in c.weights) or c.weights.count(0) > 1:
            raise ValueError(f"{self} is not a polynomial permutation module")
        top = max(c.weights, default=0)
        return sequence(
            [p for p, k in zip(c.parts, c.weights) if k == i] for i in range(1, top + 1)
        )


# --- dimensions and decompositions ------------------------------------------


def dimension(seq: PartitionSequence, n: int) -> int:
    """dim V^seq = multinomial(n; n-m, |lam1|, ...) * prod f^{lam_i}."""
    check_valid(seq, n)
    sizes = [n - boxes(seq)] + [sum(lam) for lam in seq]
    multinomial = factorial(n) // prod(factorial(s) for s in sizes)
    return multinomial * prod(specht_dimension(lam) for lam in seq)


def perm_dimension(seq: PartitionSequence, n: int) -> int:
    """dim M~(seq) at ambient n."""
    check_valid(seq, n)
    parts = [n - boxes(seq)] + [p for lam in seq for p in lam]
    return factorial(n) // prod(factorial(p) for p in parts)


def decompose_perm_module(seq: PartitionSequence, n: int) -> dict[PartitionSequence, int]:
    """M~(lam1, ...) = sum over shapes mu_i of prod K_{mu_i, lam_i} V^{mu1, ...}."""
    check_valid(seq, n)
    out: dict[PartitionSequence, int] = {(): 1}
    for lam in seq:
        column = [(mu, kostka(mu, lam)) for mu in partitions_of(sum(lam))]
        nxt = {}
        for prefix, c in out.items():
            for mu, k in column:
                if k:
                    nxt[prefix + (mu,)] = c * k
        out = nxt
    return sorted_map({sequence(key): c for key, c in out.items()})


def tensor_with_defining(seq: PartitionSequence, n: int) -> dict[PartitionSequence, int]:
    """V^(1) tensor V^seq: move one box from lam_i to lam_{i+1}, or, below
    saturation, add one box to lam_1."""
    check_valid(seq, n)
    out: dict[PartitionSequence, int] = {}
    padded = list(seq) + [()]
    for i in range(len(seq)):
        for smaller in removable_cells(padded[i]):
            for bigger in addable_cells(padded[i + 1]):
                new = padded[:i] + [smaller, bigger] + padded[i + 2:]
                key = sequence(new)
                out[key] = out.get(key, 0) + 1
    if boxes(seq) < n:
        for bigger in addable_cells(padded[0]):
            key = sequence([bigger] + padded[1:])
            out[key] = out.get(key, 0) + 1
    return sorted_map(out)


@lru_cache(maxsize=None)
def _bratteli_level(d: int, n: int) -> tuple[tuple[PartitionSequence, int], ...]:
    if d == 0:
        return (((), 1),)
    acc: dict[PartitionSequence, int] = {}
    for seq, walks in _bratteli_level(d - 1, n):
        for nxt, c in tensor_with_defining(seq, n).items():
            acc[nxt] = acc.get(nxt, 0) + walks * c
    return tuple(sorted_map(acc).items())


def bratteli_level(d: int, n: int) -> dict[PartitionSequence, int]:
    """Multiplicities of every irreducible summand of V^{tensor d} at ambient n."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return dict(_bratteli_level(d, n))


def tensor_power_multiplicity(target: PartitionSequence, d: int, n: int) -> int:
    """Number of length-d Bratteli walks from the empty sequence to ``target``."""
    target = sequence(target)
    if degree(target) != d or boxes(target) > n:
        return 0
    return bratteli_level(d, n).get(target, 0)
