"""Balanced set partitions and the dimension form of Schur-Weyl duality for
T x| S_n.

Only dimensions are checked: the balanced subspace of the partition algebra
is counted, not multiplied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .labels import bratteli_level

DEFAULT_BUDGET = 7


class BudgetExceeded(RuntimeError):
    """Refusal to run an enumeration larger than the configured budget."""


@dataclass(frozen=True)
class SetPartitionDiagram:
    """Set partition of {1..k} u {1'..k'}; ``i`` is unprimed, ``-i`` primed."""

    k: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        seen = [x for b in blocks for x in b]
        expected = set(range(1, self.k + 1)) | set(range(-self.k, 0))
        if any(not b for b in blocks) or len(seen) != len(set(seen)) or set(seen) != expected:
            raise ValueError(f"not a set partition of the 2k-set for k={self.k}: {blocks}")
        key = lambda b: sorted((abs(x), x < 0) for x in b)  # noqa: E731
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=key)))

    def __str__(self) -> str:
        def name(x):
            return f"{x}" if x > 0 else f"{-x}'"

        inner = ",".join(
            "{" + ",".join(name(x) for x in sorted(b, key=lambda x: (x < 0, abs(x)))) + "}"
            for b in self.blocks
        )
        return "{" + inner + "}"


def is_balanced(d: SetPartitionDiagram) -> bool:
    """Every block meets the unprimed and primed halves equally."""
    return all(sum(1 for x in b if x > 0) == sum(1 for x in b if x < 0) for b in d.blocks)


def iter_set_partitions(elements: Iterable) -> Iterator[list[list]]:
    """All set partitions of ``elements`` by restricted growth strings."""
    elements = list(elements)
    if not elements:
        yield []
        return
    blocks: list[list] = []

    def rec(i: int) -> Iterator[list[list]]:
        if i == len(elements):
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(elements[i])
            yield from rec(i + 1)
            b.pop()
        blocks.append([elements[i]])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def iter_diagrams(k: int) -> Iterator[SetPartitionDiagram]:
    elements = list(range(1, k + 1)) + [-i for i in range(1, k + 1)]
    for blocks in iter_set_partitions(elements):
        yield SetPartitionDiagram(k, tuple(frozenset(b) for b in blocks))


def balanced_dimension(k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of balanced set partitions of {1..k} u {1'..k'}."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > budget:
        raise BudgetExceeded(f"balanced_dimension({k}) exceeds the enumeration budget k <= {budget}")
    return kernels.count_balanced_set_partitions(k)


def endomorphism_dimension(k: int, n: int) -> int:
    """dim End_{T x| S_n}(V^{tensor k}): sum of squared multiplicities."""
    return sum(c * c for c in bratteli_level(k, n).values())


@dataclass
class SchurWeylReport:
    k: int
    n: int
    balanced: int
    endomorphisms: int

    @property
    def expected(self) -> str:
        return "equal" if self.n >= self.k else "surjective"

    @property
    def ok(self) -> bool:
        if self.n >= self.k:
            return self.balanced == self.endomorphisms
        return self.balanced >= self.endomorphisms


def schur_weyl_check(k: int, n: int, budget: int = DEFAULT_BUDGET) -> SchurWeylReport:
    """Equality of dimensions for n >= k; surjectivity bound for n < k."""
    return SchurWeylReport(k, n, balanced_dimension(k, budget), endomorphism_dimension(k, n))
