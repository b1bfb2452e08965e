import pytest

from monomial_reps.oracle import (
    OracleError,
    gl_specht_oracle,
    inner_product,
    normalizer_multiplicity_oracle,
    normalizer_trace,
    permutation_of_type,
    sn_endomorphism_dimension,
    specht_decomposition_oracle,
    specht_multiplicity_oracle,
    sym_product_trace,
)
from monomial_reps.partitions import partitions_of, specht_dimension, weyl_dimension


def test_permutation_of_type():
    assert permutation_of_type((3, 1)) == (1, 2, 0, 3)


class TestTraces:
    def test_identity_is_dimension(self):
        for n in range(1, 6):
            assert sym_product_trace((1,), n, (1,) * n) == n
        assert sym_product_trace((2, 2), 4, (1, 1, 1, 1)) == 100

    def test_swap(self):
        assert sym_product_trace((2,), 2, (2,)) == 1

    @pytest.mark.parametrize("ks", [(1,), (2,), (2, 1), (1, 1, 1), (3, 2)])
    @pytest.mark.parametrize("n", range(1, 5))
    def test_methods_agree(self, ks, n):
        for cls in partitions_of(n):
            a = sym_product_trace(ks, n, cls, method="monomials")
            assert a == sym_product_trace(ks, n, cls, method="cycles")
            for mu in partitions_of(sum(ks)):
                if len(mu) <= n:
                    assert sym_product_trace(ks, n, cls, mu, "monomials") == sym_product_trace(
                        ks, n, cls, mu, "cycles"
                    )

    def test_bad_class(self):
        with pytest.raises(ValueError):
            sym_product_trace((1,), 3, (2,))


class TestInnerProducts:
    def test_examples(self):
        for n in range(1, 6):
            assert specht_multiplicity_oracle((1,), n, (n,)) == 1
        assert specht_multiplicity_oracle((2, 2), 4, (4,)) == 9
        assert specht_multiplicity_oracle((1, 1, 1), 3, (3,)) == 5

    def test_decomposition_dimension(self):
        dec = specht_decomposition_oracle((2, 1), 4)
        assert sum(c * specht_dimension(lam) for lam, c in dec.items()) == 10 * 4

    def test_rejects_non_character(self):
        with pytest.raises(OracleError):
            inner_product(lambda cls: 1 if cls == (1, 1) else 0, (2,), 2)


class TestNormalizer:
    def test_traces(self):
        assert normalizer_trace((2, 2), (1, 1, 1, 1)) == 3
        assert normalizer_trace((2, 2), (4,)) == 1
        for cls in partitions_of(5):
            assert normalizer_trace((5,), cls) == 1

    def test_matchings(self):
        assert normalizer_multiplicity_oracle((4,), (2, 2)) == 1
        assert normalizer_multiplicity_oracle((2, 2), (2, 2)) == 1
        assert normalizer_multiplicity_oracle((3, 1), (2, 2)) == 0


class TestGL:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_dimension(self, n):
        for d in range(5):
            for lam in partitions_of(d):
                dec = gl_specht_oracle(lam, n)
                assert sum(c * specht_dimension(mu) for mu, c in dec.items()) == weyl_dimension(lam, n)

    def test_endomorphisms(self):
        # dim End_{S_n}(V^{x k}) is the Bell number B_{2k} once n >= 2k
        assert sn_endomorphism_dimension(1, 2) == 2
        assert sn_endomorphism_dimension(2, 4) == 15
