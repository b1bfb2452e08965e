import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monomial_reps.multisets import (
    Multiset,
    MultisetPartition,
    Multitabloid,
    array_to_multiset_partition,
    count_partitions_with_part_sizes,
    enumerate_multiset_partitions,
    enumerate_multitabloids,
    multiset_partition_to_array,
    multitabloid_to_perm_label,
    type_of,
    utype_of,
    utype_padded,
)
from monomial_reps.partitions import partitions_of
from monomial_reps.schur_weyl import iter_set_partitions


def brute_multiset_partitions(ms: Multiset):
    """Set partitions of the underlying word, forgotten down to multisets."""
    word = [s for s, c in ms.items() for _ in range(c)]
    seen = set()
    for blocks in iter_set_partitions(range(len(word))):
        seen.add(MultisetPartition(tuple(Multiset.of(*(word[i] for i in b)) for b in blocks)))
    return seen


small_multisets = st.lists(st.integers(0, 3), min_size=1, max_size=3).map(Multiset).filter(
    lambda m: 0 < m.size <= 6
)


class TestMultiset:
    def test_text(self):
        m = Multiset.of(1, 1, 2)
        assert str(m) == "{1^2,2^1}"
        assert Multiset.parse(str(m)) == m
        assert Multiset.parse("{3}") == Multiset((0, 0, 1))

    def test_trailing_zero_stripped(self):
        assert Multiset((1, 0, 0)) == Multiset((1,))

    def test_negative(self):
        with pytest.raises(ValueError):
            Multiset((1, -1))


class TestEnumeration:
    def test_examples(self):
        assert len(list(enumerate_multiset_partitions(Multiset.of(1, 1)))) == 2
        assert len(list(enumerate_multiset_partitions(Multiset.of(1, 2, 3)))) == 5
        assert len(list(enumerate_multiset_partitions(Multiset.of(1), 1))) == 1

    @given(small_multisets)
    @settings(max_examples=60, deadline=None)
    def test_against_set_partitions(self, ms):
        got = list(enumerate_multiset_partitions(ms))
        assert len(got) == len(set(got))
        assert set(got) == brute_multiset_partitions(ms)

    def test_part_bound(self):
        ms = Multiset.of(1, 1, 2, 2)
        for bound in range(1, 5):
            got = list(enumerate_multiset_partitions(ms, bound))
            assert all(p.part_count <= bound for p in got)
            assert len(got) == sum(1 for p in brute_multiset_partitions(ms) if p.part_count <= bound)

    def test_bell_numbers(self):
        bell = [1, 1, 2, 5, 15, 52, 203]
        for m in range(1, 7):
            ms = Multiset((1,) * m)
            assert len(list(enumerate_multiset_partitions(ms))) == bell[m]


class TestTypes:
    def test_type_examples(self):
        p = MultisetPartition((Multiset.of(1), Multiset.of(1), Multiset.of(2)))
        assert type_of(p) == ((2, 1),)
        assert utype_of(p) == (2, 1)
        assert utype_padded(p, 5) == (2, 2, 1)
        q = MultisetPartition((Multiset.of(1, 1, 2),))
        assert type_of(q) == ((), (), (1,))
        assert utype_of(q) == (1,)
        assert utype_of(MultisetPartition((Multiset.of(1), Multiset.of(1)))) == (2,)

    def test_distinct_singletons(self):
        p = MultisetPartition(tuple(Multiset.of(i) for i in range(1, 5)))
        assert type_of(p) == ((1, 1, 1, 1),)

    def test_padding_too_small(self):
        p = MultisetPartition(tuple(Multiset.of(i) for i in range(1, 5)))
        with pytest.raises(ValueError):
            utype_padded(p, 3)


class TestPartSizes:
    def test_examples(self):
        assert count_partitions_with_part_sizes(Multiset.of(1, 1, 2, 2), (2, 2)) == 2
        assert count_partitions_with_part_sizes(Multiset((5,)), (5,)) == 1
        assert count_partitions_with_part_sizes(Multiset.of(1, 2, 3), (1, 1, 1)) == 1

    def test_listing_for_the_two_pairs(self):
        got = {
            str(p)
            for p in enumerate_multiset_partitions(Multiset.of(1, 1, 2, 2))
            if sorted(b.size for b in p.blocks) == [2, 2]
        }
        assert got == {"{{1^2}|{2^2}}", "{{1^1,2^1}|{1^1,2^1}}"}

    @given(small_multisets)
    @settings(max_examples=60, deadline=None)
    def test_matches_enumeration(self, ms):
        parts = list(enumerate_multiset_partitions(ms))
        for sizes in partitions_of(ms.size):
            expect = sum(1 for p in parts if tuple(sorted((b.size for b in p.blocks), reverse=True)) == sizes)
            assert count_partitions_with_part_sizes(ms, sizes) == expect


def brute_multitabloids(ks):
    """Every array over the index box, checked against the marginals."""
    indices = [i for i in itertools.product(*(range(k + 1) for k in ks)) if any(i)]
    total = sum(ks)
    out = 0
    for values in itertools.product(range(total + 1), repeat=len(indices)):
        if all(sum(i[j] * v for i, v in zip(indices, values)) == ks[j] for j in range(len(ks))):
            out += 1
    return out


class TestMultitabloids:
    def test_nine_arrays_for_two_squares(self):
        tabs = list(enumerate_multitabloids((2, 2)))
        assert len(tabs) == 9
        assert any(t.as_dict() == {(2, 0): 1, (0, 2): 1} for t in tabs)

    @pytest.mark.parametrize("ks", [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1), (2, 2)])
    def test_brute_force(self, ks):
        assert len(list(enumerate_multitabloids(ks))) == brute_multitabloids(ks)

    @pytest.mark.parametrize("k", range(1, 8))
    def test_single_factor(self, k):
        assert len(list(enumerate_multitabloids((k,)))) == len(list(partitions_of(k)))

    def test_labels(self):
        assert multitabloid_to_perm_label(Multitabloid((2, 2), (((0, 1), 2), ((1, 0), 2)))) == ((2, 2),)
        assert multitabloid_to_perm_label(Multitabloid((2, 2), (((2, 2), 1),))) == ((), (), (), (1,))
        assert multitabloid_to_perm_label(Multitabloid((2, 2), (((2, 0), 1), ((0, 2), 1)))) == ((), (1, 1))

    def test_to_multiset_partition(self):
        p = array_to_multiset_partition(Multitabloid((2, 2), (((1, 1), 2),)))
        assert str(p) == "{{1^1,2^1}|{1^1,2^1}}"
        assert str(array_to_multiset_partition(Multitabloid((2, 2), (((2, 2), 1),)))) == "{{1^2,2^2}}"
        assert str(array_to_multiset_partition(Multitabloid((1,), (((1,), 1),)))) == "{{1^1}}"

    @pytest.mark.parametrize("ks", [(2, 2), (3, 1, 1), (2, 1, 2)])
    def test_bijection(self, ks):
        tabs = list(enumerate_multitabloids(ks))
        parts = list(enumerate_multiset_partitions(Multiset(ks)))
        assert len(tabs) == len(parts)
        assert {array_to_multiset_partition(t) for t in tabs} == set(parts)
        for p in parts:
            assert array_to_multiset_partition(multiset_partition_to_array(p, ks)) == p

    def test_bad_marginal(self):
        with pytest.raises(ValueError):
            Multitabloid((2, 2), (((1, 1), 1),))
