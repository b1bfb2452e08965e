import pytest

from monomial_reps.oracle import sn_endomorphism_dimension
from monomial_reps.schur_weyl import (
    BudgetExceeded,
    SetPartitionDiagram,
    balanced_dimension,
    endomorphism_dimension,
    is_balanced,
    iter_diagrams,
    iter_set_partitions,
    schur_weyl_check,
)


def diagram(k, *blocks):
    return SetPartitionDiagram(k, tuple(frozenset(b) for b in blocks))


class TestDiagrams:
    def test_balanced_examples(self):
        assert is_balanced(diagram(1, {1, -1}))
        assert not is_balanced(diagram(1, {1}, {-1}))
        assert is_balanced(diagram(2, {1, -2}, {2, -1}))

    def test_invalid(self):
        with pytest.raises(ValueError):
            diagram(2, {1, -1}, {2})

    def test_str(self):
        assert str(diagram(2, {2, -1}, {1, -2})) == "{{1,2'},{2,1'}}"

    def test_bell_numbers(self):
        assert [sum(1 for _ in iter_set_partitions(range(m))) for m in range(9)] == [
            1, 1, 2, 5, 15, 52, 203, 877, 4140,
        ]


class TestDimensions:
    @pytest.mark.parametrize("k", range(1, 5))
    def test_balanced_by_enumeration(self, k):
        assert balanced_dimension(k) == sum(1 for d in iter_diagrams(k) if is_balanced(d))

    def test_examples(self):
        assert [balanced_dimension(k) for k in (1, 2, 3)] == [1, 3, 16]
        assert endomorphism_dimension(2, 2) == 3
        assert endomorphism_dimension(3, 3) == 16
        assert endomorphism_dimension(1, 1) == 1

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            balanced_dimension(8)
        assert balanced_dimension(5, budget=5) == 1496

    @pytest.mark.parametrize("k", range(1, 5))
    def test_below_sn_endomorphisms(self, k):
        # T x| S_n-maps are among the S_n-maps
        for n in range(1, 7):
            assert endomorphism_dimension(k, n) <= sn_endomorphism_dimension(k, n)


class TestReports:
    def test_equal(self):
        r = schur_weyl_check(3, 3)
        assert r.ok and r.balanced == r.endomorphisms == 16

    def test_surjective(self):
        r = schur_weyl_check(3, 2)
        assert r.ok and r.balanced > r.endomorphisms

    def test_trivial(self):
        assert schur_weyl_check(1, 1).ok

    @pytest.mark.parametrize("k", [5, 6, 7])
    def test_equality_up_to_budget(self, k):
        assert schur_weyl_check(k, k).ok
