"""Grid comparison of the combinatorial routes against the character oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .oracle import specht_decomposition_oracle
from .partitions import Partition
from .symprod import specht_via_irreps, sym_product_specht_multiplicities


@dataclass
class GridPoint:
    ks: tuple[int, ...]
    n: int
    oracle: dict[Partition, int]
    utype_kostka: dict[Partition, int]
    route_a: dict[Partition, int]
    route_b: dict[Partition, int]

    @property
    def ok(self) -> bool:
        return self.oracle == self.utype_kostka == self.route_a == self.route_b


@dataclass
class VerificationReport:
    points: list[GridPoint] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.points)

    @property
    def failures(self) -> list[GridPoint]:
        return [p for p in self.points if not p.ok]


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered sequences of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def default_grid(max_degree: int, max_n: int) -> list[tuple[tuple[int, ...], int]]:
    """Every ks with 1 <= sum(ks) <= max_degree, every n in 1..max_n."""
    return [
        (ks, n)
        for d in range(1, max_degree + 1)
        for ks in compositions(d)
        for n in range(1, max_n + 1)
    ]


def check_point(ks: Iterable[int], n: int) -> GridPoint:
    ks = tuple(ks)
    return GridPoint(
        ks,
        n,
        specht_decomposition_oracle(ks, n),
        sym_product_specht_multiplicities(ks, n),
        specht_via_irreps(ks, n, route="A"),
        specht_via_irreps(ks, n, route="B"),
    )


def oracle_compare(grid: Iterable[tuple[Iterable[int], int]]) -> VerificationReport:
    report = VerificationReport()
    for ks, n in grid:
        report.points.append(check_point(ks, n))
    return report
