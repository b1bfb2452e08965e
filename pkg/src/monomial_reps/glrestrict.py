"""Restriction of polynomial GL_n irreducibles W(lam) to T x| S_n.

W(lam) is a signed sum of tensor products of symmetric powers by the
Jacobi-Trudi determinant; each product is decomposed combinatorially and the
signed terms must cancel to a genuine (non-negative) decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .labels import PartitionSequence, format_sequence, sorted_map
from .oracle import normalizer_multiplicity_oracle
from .partitions import Partition, jacobi_trudi, partition, partitions_of
from .symprod import decompose_sym_product_to_irreps, invariant_dimension_in_weight

# every lam with |lam| <= 4, smallest degree first
TABLE_ROWS: tuple[Partition, ...] = (
    (),
    (1,),
    (2,),
    (1, 1),
    (3,),
    (2, 1),
    (1, 1, 1),
    (4,),
    (3, 1),
    (2, 2),
    (2, 1, 1),
    (1, 1, 1, 1),
)


class NegativeMultiplicityError(RuntimeError):
    """An alternating sum left a negative coefficient; carries the term dump."""


@dataclass
class VirtualDecomposition:
    """Signed multiplicities over partition sequences; zeros are never stored."""

    terms: dict[PartitionSequence, int] = field(default_factory=dict)

    def add(self, decomposition: dict[PartitionSequence, int], sign: int = 1) -> None:
        for key, c in decomposition.items():
            v = self.terms.get(key, 0) + sign * c
            if v:
                self.terms[key] = v
            else:
                self.terms.pop(key, None)

    @property
    def is_effective(self) -> bool:
        return all(v >= 0 for v in self.terms.values())

    def as_dict(self) -> dict[PartitionSequence, int]:
        return sorted_map(self.terms)


def restrict_gl_irrep(lam: Iterable[int], n: int) -> dict[PartitionSequence, int]:
    """Decomposition of W(lam) restricted to T x| S_n."""
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"W({lam}) needs n >= {len(lam)}, got n={n}")
    virtual = VirtualDecomposition()
    contributions = []
    for sign, degrees in jacobi_trudi(lam):
        part = decompose_sym_product_to_irreps(degrees, n)
        contributions.append((sign, degrees, part))
        virtual.add(part, sign)
    if not virtual.is_effective:
        lines = [f"negative residual restricting W({lam}) at n={n}:"]
        for key, v in virtual.as_dict().items():
            if v < 0:
                lines.append(f"  {format_sequence(key)}: {v}")
        for sign, degrees, part in contributions:
            body = ", ".join(f"{format_sequence(k)}:{c}" for k, c in part.items())
            lines.append(f"  {'+' if sign > 0 else '-'}h{list(degrees)} -> {body}")
        raise NegativeMultiplicityError("\n".join(lines))
    return virtual.as_dict()


def symmetrized_weight_invariants(lam: Iterable[int], mu: Iterable[int], n: int) -> int:
    """S_n-invariants in the symmetrized weight space of mu inside W(lam)."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|lam| = {sum(lam)} != |mu| = {sum(mu)}")
    if len(lam) > n or len(mu) > n:
        raise ValueError(f"lengths of {lam} and {mu} must not exceed n={n}")
    total = 0
    for sign, degrees in jacobi_trudi(lam):
        total += sign * invariant_dimension_in_weight(degrees, n, mu)
    if total < 0:
        raise NegativeMultiplicityError(f"negative invariant count {total} for W({lam}), weight {mu}")
    return total


def induced_normalizer_multiplicity(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Multiplicity of S^lam in Ind_{N(mu)}^{S_|mu|}(1), N(mu) the normalizer of
    the Young subgroup S_mu."""
    return normalizer_multiplicity_oracle(lam, mu)


@dataclass
class GayReport:
    degree: int
    n: int
    checked: int = 0
    failures: list[tuple[Partition, Partition, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def gay_check(d: int, n: int) -> GayReport:
    """Compare both sides of Gay's identity for every lam, mu of size d."""
    if n < d:
        raise ValueError(f"need n >= d, got n={n}, d={d}")
    report = GayReport(d, n)
    for lam in partitions_of(d):
        for mu in partitions_of(d):
            if len(lam) > n or len(mu) > n:
                continue
            left = symmetrized_weight_invariants(lam, mu, n)
            right = induced_normalizer_multiplicity(lam, mu)
            report.checked += 1
            if left != right:
                report.failures.append((lam, mu, left, right))
    return report


def restriction_table(n: int | None = None) -> list[tuple[Partition, dict[PartitionSequence, int]]]:
    """The degree <= 4 table; by default each row at n = degree + 1."""
    rows = []
    for lam in TABLE_ROWS:
        rows.append((lam, restrict_gl_irrep(lam, sum(lam) + 1 if n is None else n)))
    return rows
