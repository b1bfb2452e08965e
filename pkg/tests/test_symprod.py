import itertools
from math import comb

import pytest

from monomial_reps.labels import WeightedPermLabel, dimension, perm_dimension
from monomial_reps.multisets import Multiset
from monomial_reps.oracle import specht_decomposition_oracle
from monomial_reps.schur_weyl import iter_set_partitions
from monomial_reps.symprod import (
    decompose_sym_power,
    decompose_sym_product_to_irreps,
    decompose_sym_product_to_perm,
    invariant_dimension,
    invariant_dimension_in_weight,
    perm_summands_via_multiset_partitions,
    perm_summands_via_tabloids,
    specht_via_irreps,
    sym_product_specht_multiplicities,
    tensor_weighted_perm,
    weak_foulkes_counts,
    weak_foulkes_scan,
)

# the corrected nine-term list for Sym^2 x Sym^2
SYM22_PERM = {
    ((2, 2),): 1,
    ((1, 1), (1,)): 1,
    ((), (2,)): 1,
    ((), (1, 1)): 1,
    ((1,), (), (1,)): 2,
    ((2,), (1,)): 2,
    ((), (), (), (1,)): 1,
}

# the same list without M~(-|(1,1)), which is one array short
SYM22_EIGHT = {k: v for k, v in SYM22_PERM.items() if k != ((), (1, 1))}


def sym_dim(ks, n):
    out = 1
    for k in ks:
        out *= comb(n + k - 1, k)
    return out


class TestSymPower:
    def test_examples(self):
        assert sorted(decompose_sym_power(2, 3)) == sorted([((2,),), ((), (1,))])
        assert sorted(decompose_sym_power(3, 3)) == sorted([((3,),), ((1,), (1,)), ((), (), (1,))])
        assert decompose_sym_power(1, 4) == [((1,),)]

    @pytest.mark.parametrize("k", range(1, 6))
    @pytest.mark.parametrize("n", range(1, 6))
    def test_dimension(self, k, n):
        assert sum(perm_dimension(s, n) for s in decompose_sym_power(k, n)) == comb(n + k - 1, k)


class TestWeightedTensor:
    def test_worked_example(self):
        a = WeightedPermLabel((3, 2), (0, 2))
        b = WeightedPermLabel((3, 2), (1, 4))
        got = sorted(tensor_weighted_perm(a, b), key=lambda w: (w.parts, w.weights))
        want = [
            WeightedPermLabel((3, 2), (1, 6)).canonical(),
            WeightedPermLabel((2, 1, 1, 1), (1, 3, 4, 6)).canonical(),
            WeightedPermLabel((1, 2, 2), (1, 3, 4)).canonical(),
        ]
        assert got == sorted(want, key=lambda w: (w.parts, w.weights))

    def test_trivial_factor(self):
        b = WeightedPermLabel((2, 1, 2), (0, 1, 5)).canonical()
        assert tensor_weighted_perm(WeightedPermLabel((5,), (0,)), b) == [b]

    def test_two_by_two(self):
        a = WeightedPermLabel((1, 1), (0, 1))
        got = set(tensor_weighted_perm(a, a))
        assert got == {WeightedPermLabel((1, 1), (0, 2)).canonical(), WeightedPermLabel((1, 1), (1, 1)).canonical()}

    def test_mismatch(self):
        with pytest.raises(ValueError):
            tensor_weighted_perm(WeightedPermLabel((2,), (0,)), WeightedPermLabel((3,), (0,)))


class TestPermDecomposition:
    @pytest.mark.parametrize("n", [4, 5, 8])
    def test_sym22_corrected(self, n):
        assert decompose_sym_product_to_perm((2, 2), n) == SYM22_PERM

    def test_eight_term_list_fails_dimension_identity(self):
        full = sum(c * perm_dimension(k, 4) for k, c in SYM22_PERM.items())
        eight = sum(c * perm_dimension(k, 4) for k, c in SYM22_EIGHT.items())
        assert full == sym_dim((2, 2), 4) == 100
        assert eight != 100

    def test_tensor_square(self):
        assert decompose_sym_product_to_perm((1, 1), 3) == {((1, 1),): 1, ((), (1,)): 1}

    def test_single_factor(self):
        for k in range(1, 6):
            assert decompose_sym_product_to_perm((k,), 6) == {s: 1 for s in decompose_sym_power(k, 6)}

    @pytest.mark.parametrize("ks", [(1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (1, 1, 1), (2, 1, 1)])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_three_routes_agree(self, ks, n):
        a = decompose_sym_product_to_perm(ks, n)
        assert a == perm_summands_via_tabloids(ks, n)
        assert a == perm_summands_via_multiset_partitions(ks, n)
        assert sum(c * perm_dimension(k, n) for k, c in a.items()) == sym_dim(ks, n)


class TestIrreducibles:
    def test_sym22(self):
        want = {
            ((4,),): 1,
            ((3, 1),): 1,
            ((2, 2),): 1,
            ((2,), (1,)): 3,
            ((1, 1), (1,)): 1,
            ((), (2,)): 2,
            ((), (1, 1)): 1,
            ((1,), (), (1,)): 2,
            ((), (), (), (1,)): 1,
        }
        for n in (4, 5, 8):
            for route in ("A", "B"):
                assert decompose_sym_product_to_irreps((2, 2), n, route=route) == want

    def test_single_power_is_multiplicity_free(self):
        for k in range(1, 6):
            got = decompose_sym_product_to_irreps((k,), k)
            assert got == {s: 1 for s in decompose_sym_power(k, k)}

    def test_saturated(self):
        assert decompose_sym_product_to_irreps((1, 1), 1) == {((), (1,)): 1}

    def test_empty_product(self):
        assert decompose_sym_product_to_irreps((), 3) == {(): 1}

    def test_bad_route(self):
        with pytest.raises(ValueError):
            decompose_sym_product_to_irreps((1,), 2, route="C")

    @pytest.mark.parametrize("ks", [(2, 1), (1, 2), (3, 1), (1, 1, 1), (2, 2)])
    @pytest.mark.parametrize("n", range(1, 7))
    def test_dimension(self, ks, n):
        got = decompose_sym_product_to_irreps(ks, n)
        assert sum(c * dimension(k, n) for k, c in got.items()) == sym_dim(ks, n)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_order_of_factors_irrelevant(self, n):
        for ks in [(2, 1, 1), (3, 1), (2, 2, 1)]:
            base = decompose_sym_product_to_irreps(ks, n)
            for perm in set(itertools.permutations(ks)):
                assert decompose_sym_product_to_irreps(perm, n) == base


class TestSpecht:
    def test_examples(self):
        assert sym_product_specht_multiplicities((2,), 2)[(2,)] == 2
        for n in range(1, 7):
            assert sym_product_specht_multiplicities((1,), n)[(n,)] == 1
        assert sym_product_specht_multiplicities((2, 2), 4)[(4,)] == 9

    @pytest.mark.parametrize("ks", [(2, 2), (3, 1), (1, 1, 1)])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_oracle(self, ks, n):
        oracle = specht_decomposition_oracle(ks, n)
        assert sym_product_specht_multiplicities(ks, n) == oracle
        assert specht_via_irreps(ks, n, "A") == oracle
        assert specht_via_irreps(ks, n, "B") == oracle


def bell(m):
    return sum(1 for _ in iter_set_partitions(range(m)))


class TestInvariants:
    def test_bell(self):
        assert invariant_dimension((1, 1, 1), 3) == 5
        assert invariant_dimension((1,) * 5, 5) == 52 == bell(5)

    def test_weight_space(self):
        assert invariant_dimension_in_weight((2, 2), 4, (2, 2)) == 2
        assert invariant_dimension_in_weight((2, 2), 4, (3, 1)) == 2
        assert invariant_dimension_in_weight((2, 2), 4, (5,)) == 0

    def test_weight_spaces_sum_to_total(self):
        from monomial_reps.partitions import partitions_of

        for ks, n in [((2, 2), 4), ((1, 1, 1), 2), ((3, 1), 3)]:
            parts = [mu for mu in partitions_of(sum(ks)) if len(mu) <= n]
            assert sum(invariant_dimension_in_weight(ks, n, mu) for mu in parts) == invariant_dimension(ks, n)


class TestFoulkes:
    def test_counts(self):
        assert weak_foulkes_counts(Multiset.of(1, 1), 1, 2) == (1, 1)
        assert weak_foulkes_counts(Multiset((6,)), 2, 3) == (1, 1)
        assert weak_foulkes_counts(Multiset.of(1, 1, 2, 2), 2, 2) == (2, 2)

    def test_scans(self):
        r = weak_foulkes_scan(1, 2, 2)
        assert r.ok and r.checked == 3
        r = weak_foulkes_scan(2, 3, 6)
        assert r.ok and r.checked == comb(6 + 6 - 1, 6)

    def test_requires_a_below_b(self):
        with pytest.raises(ValueError):
            weak_foulkes_scan(3, 2)

    def test_wrong_size(self):
        with pytest.raises(ValueError):
            weak_foulkes_counts(Multiset.of(1, 2, 3), 2, 2)
