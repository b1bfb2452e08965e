"""Brute-force character oracle.

Traces come from counting fixed points (monomials, set partitions) under a
representative permutation of each cycle type; multiplicities come from
Frobenius inner products against Murnaghan-Nakayama characters.  Nothing here
touches the multiset-partition or tabloid machinery that it is used to check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator

from .partitions import (
    Partition,
    centralizer_order,
    class_size,
    jacobi_trudi,
    mn_character,
    partition,
    partitions_of,
)

# brute-force monomial iteration below this n * sum(ks)
MONOMIAL_THRESHOLD = 30


class OracleError(ArithmeticError):
    """An inner product came out non-integral or negative."""


def permutation_of_type(cls: Iterable[int]) -> tuple[int, ...]:
    """A permutation of {0..n-1} with the given cycle type (consecutive cycles)."""
    perm = []
    start = 0
    for c in partition(cls):
        perm.extend(start + (i + 1) % c for i in range(c))
        start += c
    return tuple(perm)


def _cycles(cls: Partition) -> list[int]:
    return list(partition(cls))


def _monomials(k: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if k == 0:
            yield ()
        return
    for first in range(k, -1, -1):
        for rest in _monomials(k - first, n - 1):
            yield (first,) + rest


def _weight_of(total: Iterable[int]) -> Partition:
    return partition(total)


def _trace_by_monomials(ks, n, cls, weight_filter):
    perm = permutation_of_type(cls)
    fixed = []
    for k in ks:
        fixed.append([e for e in _monomials(k, n) if all(e[perm[i]] == e[i] for i in range(n))])
    if weight_filter is None:
        count = 1
        for f in fixed:
            count *= len(f)
        return count
    count = 0
    for combo in itertools.product(*fixed):
        total = [sum(col) for col in zip(*combo)] if combo else [0] * n
        if _weight_of(total) == weight_filter:
            count += 1
    return count


def _cycle_assignments(k: int, lengths: list[int]) -> Iterator[tuple[int, ...]]:
    if not lengths:
        if k == 0:
            yield ()
        return
    first, rest = lengths[0], lengths[1:]
    for e in range(k // first, -1, -1):
        for tail in _cycle_assignments(k - e * first, rest):
            yield (e,) + tail


def _trace_by_cycles(ks, n, cls, weight_filter):
    lengths = _cycles(cls)
    if weight_filter is None:
        count = 1
        for k in ks:
            count *= sum(1 for _ in _cycle_assignments(k, lengths))
        return count
    states = {tuple(0 for _ in lengths): 1}
    for k in ks:
        options = list(_cycle_assignments(k, lengths))
        nxt: dict[tuple[int, ...], int] = {}
        for state, c in states.items():
            for opt in options:
                key = tuple(s + o for s, o in zip(state, opt))
                nxt[key] = nxt.get(key, 0) + c
        states = nxt
    count = 0
    for state, c in states.items():
        weight = partition(e for e, length in zip(state, lengths) for _ in range(length))
        if weight == weight_filter:
            count += c
    return count


def sym_product_trace(
    ks: Iterable[int],
    n: int,
    cls: Iterable[int],
    weight_filter: Iterable[int] | None = None,
    method: str = "auto",
) -> int:
    """Trace of a permutation of cycle type ``cls`` on Sym^{k1}(V) x ... x Sym^{km}(V),
    optionally restricted to the symmetrized weight space of ``weight_filter``.

    The trace on a monomial basis is the number of fixed basis tuples.
    ``method`` is "monomials", "cycles" or "auto".
    """
    ks = tuple(ks)
    cls = partition(cls)
    if sum(cls) != n:
        raise ValueError(f"cycle type {cls} is not a partition of n={n}")
    wf = None if weight_filter is None else partition(weight_filter)
    if method == "auto":
        method = "monomials" if n * sum(ks) <= MONOMIAL_THRESHOLD else "cycles"
    if method == "monomials":
        return _trace_by_monomials(ks, n, cls, wf)
    if method == "cycles":
        return _trace_by_cycles(ks, n, cls, wf)
    raise ValueError(f"unknown method {method!r}")


def inner_product(trace_fn, target: Partition, n: int) -> int:
    """<chi, chi^target> for a class function given by ``trace_fn(cls)``."""
    total = Fraction(0)
    for cls in partitions_of(n):
        total += Fraction(class_size(cls) * trace_fn(cls) * mn_character(target, cls))
    total /= factorial(n)
    if total.denominator != 1 or total < 0:
        raise OracleError(f"inner product with chi^{target} is {total}")
    return int(total)


def specht_multiplicity_oracle(ks: Iterable[int], n: int, target: Iterable[int]) -> int:
    """Multiplicity of S^target in Sym^{k1}(V) x ... restricted to S_n."""
    ks = tuple(ks)
    return inner_product(lambda cls: sym_product_trace(ks, n, cls), partition(target), n)


def specht_decomposition_oracle(ks: Iterable[int], n: int) -> dict[Partition, int]:
    ks = tuple(ks)
    traces = {cls: sym_product_trace(ks, n, cls) for cls in partitions_of(n)}
    out = {}
    for lam in partitions_of(n):
        c = inner_product(traces.__getitem__, lam, n)
        if c:
            out[lam] = c
    return out


# --- set partitions fixed by a permutation ----------------------------------


def _set_partitions_with_sizes(d: int, sizes: Partition) -> Iterator[list[frozenset[int]]]:
    wanted = sorted(sizes)

    def rec(rest: list[int], blocks: list[frozenset[int]]) -> Iterator[list[frozenset[int]]]:
        if not rest:
            if sorted(len(b) for b in blocks) == wanted:
                yield list(blocks)
            return
        first, others = rest[0], rest[1:]
        for size in sorted(set(sizes)):
            for mates in itertools.combinations(others, size - 1):
                block = frozenset((first,) + mates)
                blocks.append(block)
                yield from rec([x for x in others if x not in block], blocks)
                blocks.pop()

    yield from rec(list(range(d)), [])


def normalizer_trace(mu: Iterable[int], cls: Iterable[int]) -> int:
    """Set partitions of {1..|mu|} with block sizes mu, fixed as partitions by a
    permutation of cycle type ``cls``."""
    mu, cls = partition(mu), partition(cls)
    if sum(mu) != sum(cls):
        raise ValueError(f"size mismatch: |{mu}| != |{cls}|")
    perm = permutation_of_type(cls)
    count = 0
    for blocks in _set_partitions_with_sizes(sum(mu), mu):
        image = {frozenset(perm[x] for x in b) for b in blocks}
        if image == set(blocks):
            count += 1
    return count


def normalizer_multiplicity_oracle(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Multiplicity of S^lam in the permutation action on set partitions of type mu."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return inner_product(lambda cls: normalizer_trace(mu, cls), lam, sum(mu))


# --- GL_n irreducibles and V^{tensor k} ---------------------------------------


def _power_sum_at(k: int, cls: Partition) -> int:
    # p_k of the eigenvalues of a permutation: each c-cycle contributes c if c | k
    return sum(c for c in cls if k % c == 0)


def gl_trace(lam: Iterable[int], n: int, cls: Iterable[int]) -> Fraction:
    """Trace of a permutation on W(lam): s_lam = sum_nu chi^lam(nu) p_nu / z_nu."""
    lam, cls = partition(lam), partition(cls)
    if len(lam) > n:
        return Fraction(0)
    total = Fraction(0)
    for nu in partitions_of(sum(lam)):
        p = 1
        for part in nu:
            p *= _power_sum_at(part, cls)
        total += Fraction(mn_character(lam, nu) * p, centralizer_order(nu))
    return total


def gl_specht_oracle(lam: Iterable[int], n: int) -> dict[Partition, int]:
    """S_n decomposition of W(lam) restricted from GL_n."""
    lam = partition(lam)
    traces = {cls: gl_trace(lam, n, cls) for cls in partitions_of(n)}
    out = {}
    for mu in partitions_of(n):
        c = inner_product(traces.__getitem__, mu, n)
        if c:
            out[mu] = c
    return out


def sn_endomorphism_dimension(k: int, n: int) -> int:
    """dim End_{S_n}(V^{tensor k}) = <chi_V^{2k}, 1>."""
    total = Fraction(0)
    for cls in partitions_of(n):
        fixed = sum(1 for c in cls if c == 1)
        total += class_size(cls) * fixed ** (2 * k)
    total /= factorial(n)
    if total.denominator != 1:
        raise OracleError(f"non-integral endomorphism dimension {total}")
    return int(total)


def gl_symmetrized_invariants_oracle(lam: Iterable[int], mu: Iterable[int], n: int) -> int:
    """S_n-invariants in the symmetrized weight space of mu inside W(lam),
    from the Jacobi-Trudi alternating sum of fixed-monomial traces."""
    lam, mu = partition(lam), partition(mu)

    def trace(cls):
        return sum(sign * sym_product_trace(degrees, n, cls, mu) for sign, degrees in jacobi_trudi(lam))

    return inner_product(trace, (n,), n)
