"""Feature maps: monomial bases, symmetric embeddings, and D^H D = G."""

import numpy as np
import pytest

from helpers import random_vectors
from welchkit.errors import CombinatorialOverflowError, UnsupportedKernelError
from welchkit.features import (
    BASIS_CAP,
    binomial,
    embed_homogeneous,
    embed_shifted,
    embedding_dim,
    feature_matrix,
    monomial_basis,
    multinomial,
)
from welchkit.kernels import KernelSpec, VectorSet, eval_kernel, gram_matrix
from welchkit.linalg import hermitian_eigenvalues, numerical_rank


class TestBinomial:
    def test_small_values(self):
        assert binomial(2, 1) == 2
        assert binomial(4, 2) == 6
        assert binomial(0, 0) == 1

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            binomial(2, 3)
        with pytest.raises(ValueError):
            binomial(2, -1)
        with pytest.raises(ValueError):
            binomial(2.0, 1)

    def test_overflow_past_int64(self):
        with pytest.raises(CombinatorialOverflowError):
            binomial(200, 100)

    def test_multinomial(self):
        assert multinomial(2, (2, 0)) == 1
        assert multinomial(2, (1, 1)) == 2
        assert multinomial(3, (1, 1, 1)) == 6
        with pytest.raises(ValueError):
            multinomial(3, (1, 1))


class TestMonomialBasis:
    def test_degree_one(self):
        assert monomial_basis(2, 1) == [(1, 0), (0, 1)]

    def test_degree_two(self):
        assert monomial_basis(2, 2) == [(2, 0), (1, 1), (0, 2)]

    def test_three_variables_degree_two_length(self):
        assert len(monomial_basis(3, 2)) == 6

    def test_lengths_match_dimension_formula(self):
        for n in range(1, 6):
            for p in range(1, 5):
                basis = monomial_basis(n, p)
                assert len(basis) == binomial(n + p - 1, p)
                assert all(sum(alpha) == p for alpha in basis)
                assert len(set(basis)) == len(basis)

    def test_lexicographic_descending(self):
        basis = monomial_basis(4, 3)
        assert basis == sorted(basis, reverse=True)

    def test_cap_enforced(self):
        with pytest.raises(CombinatorialOverflowError):
            monomial_basis(50, 5, cap=100)
        assert BASIS_CAP == 10**6

    def test_rejects_degenerate_arguments(self):
        with pytest.raises(ValueError):
            monomial_basis(0, 2)
        with pytest.raises(ValueError):
            monomial_basis(2, 0)


class TestEmbedHomogeneous:
    def test_basis_vector_survives_single_monomial(self):
        got = embed_homogeneous(np.array([1.0, 0.0]), 2)
        assert np.allclose(got, [1.0, 0.0, 0.0])

    def test_degree_two_closed_form(self):
        # (a, b) -> (a^2, sqrt(2) a b, b^2)
        a, b = 2.0, 3.0
        got = embed_homogeneous(np.array([a, b]), 2)
        want = np.array([a**2, np.sqrt(2) * a * b, b**2])
        assert np.allclose(got, want, atol=1e-14)

    def test_matches_kernel_n4_p3(self):
        rng = np.random.default_rng(31)
        spec = KernelSpec.homogeneous(3)
        for _ in range(20):
            x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            y = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            lhs = np.vdot(embed_homogeneous(x, 3), embed_homogeneous(y, 3))
            k = eval_kernel(spec, x, y)
            assert abs(lhs - k) < 1e-10 * max(1.0, abs(k))

    def test_length_is_dimension_formula(self):
        for n in (1, 2, 4):
            for p in (1, 3):
                x = np.arange(1, n + 1, dtype=float)
                assert embed_homogeneous(x, p).shape == (binomial(n + p - 1, p),)


class TestEmbedShifted:
    def test_zero_shift_appends_zero(self):
        z = 0.3 + 0.4j
        got = embed_shifted(np.array([z]), 1, 0.0)
        assert np.allclose(got, [z, 0.0])

    def test_unit_shift_appends_one(self):
        z = 0.3 + 0.4j
        got = embed_shifted(np.array([z]), 1, 1.0)
        assert np.allclose(got, [z, 1.0])

    def test_matches_kernel_n3_p2(self):
        rng = np.random.default_rng(32)
        spec = KernelSpec.shifted(2, 0.7)
        for _ in range(20):
            x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            lhs = np.vdot(embed_shifted(x, 2, 0.7), embed_shifted(y, 2, 0.7))
            k = eval_kernel(spec, x, y)
            assert abs(lhs - k) < 1e-10 * max(1.0, abs(k))

    def test_length_is_augmented_dimension_formula(self):
        x = np.array([1.0, 2.0, 3.0])
        assert embed_shifted(x, 2, 0.5).shape == (binomial(5, 2),)

    def test_rejects_negative_shift(self):
        with pytest.raises(ValueError):
            embed_shifted(np.ones(2), 1, -0.5)


class TestKernelMapEquivalence:
    def test_thousand_random_pairs(self):
        # Both polynomial variants, n <= 6, p <= 4.
        rng = np.random.default_rng(33)
        for trial in range(1000):
            n = int(rng.integers(1, 7))
            p = int(rng.integers(1, 5))
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            if trial % 2 == 0:
                spec = KernelSpec.homogeneous(p)
                fx, fy = embed_homogeneous(x, p), embed_homogeneous(y, p)
            else:
                c = float(rng.uniform(0.0, 2.0))
                spec = KernelSpec.shifted(p, c)
                fx, fy = embed_shifted(x, p, c), embed_shifted(y, p, c)
            k = eval_kernel(spec, x, y)
            assert abs(np.vdot(fx, fy) - k) <= 1e-10 * max(1.0, abs(k))

    def test_norm_consistency(self):
        rng = np.random.default_rng(34)
        for _ in range(50):
            n = int(rng.integers(1, 6))
            p = int(rng.integers(1, 5))
            c = float(rng.uniform(0.0, 2.0))
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            for spec, phi in (
                (KernelSpec.homogeneous(p), embed_homogeneous(x, p)),
                (KernelSpec.shifted(p, c), embed_shifted(x, p, c)),
            ):
                nrm = float(np.vdot(phi, phi).real)
                k = eval_kernel(spec, x, x).real
                assert abs(nrm - k) <= 1e-12 * max(1.0, k)


class TestEmbeddingDim:
    def test_polynomial_dimensions(self):
        assert embedding_dim(KernelSpec.homogeneous(2), 3) == 6
        assert embedding_dim(KernelSpec.shifted(2, 1.0), 2) == 6
        assert embedding_dim(KernelSpec.linear(), 7) == 7

    def test_gaussian_unsupported(self):
        with pytest.raises(UnsupportedKernelError):
            embedding_dim(KernelSpec.gaussian(1.0), 3)


class TestFeatureMatrix:
    def test_orthonormal_basis_identity(self):
        vs = VectorSet(vectors=np.eye(3), field="real")
        fm = feature_matrix(KernelSpec.linear(), vs)
        assert np.array_equal(fm.matrix, np.eye(3))
        assert np.array_equal(fm.reconstructed_gram(), np.eye(3))

    def test_reproduces_gram_for_polynomial_variants(self):
        rng = np.random.default_rng(35)
        vs = random_vectors(rng, 7, 3)
        for spec in (
            KernelSpec.linear(),
            KernelSpec.homogeneous(2),
            KernelSpec.shifted(2, 1.0),
            KernelSpec.shifted(3, 0.5),
        ):
            fm = feature_matrix(spec, vs)
            g = gram_matrix(spec, vs).matrix
            scale = max(1.0, float(np.max(np.abs(g))))
            assert np.max(np.abs(fm.reconstructed_gram() - g)) < 1e-10 * scale
            assert fm.feature_dim == embedding_dim(spec, vs.n)

    def test_three_unit_vectors_generic_rank(self):
        rng = np.random.default_rng(36)
        vs = random_vectors(rng, 3, 2, unit=True)
        fm = feature_matrix(KernelSpec.homogeneous(2), vs)
        assert fm.matrix.shape == (3, 3)
        spec = hermitian_eigenvalues(fm.reconstructed_gram())
        assert numerical_rank(spec) == 3

    def test_rank_ceiling_random_sets(self):
        rng = np.random.default_rng(37)
        for _ in range(20):
            m = int(rng.integers(2, 15))
            n = int(rng.integers(1, 5))
            p = int(rng.integers(1, 4))
            spec = (
                KernelSpec.homogeneous(p)
                if rng.integers(2) == 0
                else KernelSpec.shifted(p, float(rng.uniform(0, 2)))
            )
            vs = random_vectors(rng, m, n)
            g = gram_matrix(spec, vs)
            assert g.rank() <= embedding_dim(spec, n)

    def test_generic_rank_saturates_with_gap(self):
        # m >= dim + spare rows: rank hits the formula with a clean spectral gap.
        rng = np.random.default_rng(38)
        for trial in range(50):
            if trial % 2 == 0:
                n, p, spec = 2, 2, KernelSpec.homogeneous(2)
            else:
                n, p, spec = 2, 1, KernelSpec.shifted(1, 1.0)
            dim = embedding_dim(spec, n)
            vs = random_vectors(rng, dim + 5, n)
            g = gram_matrix(spec, vs)
            vals = g.spectrum().values
            assert g.rank() == dim
            assert vals[dim] <= 1e-6 * vals[dim - 1]

    def test_forty_vectors_dimension_six(self):
        rng = np.random.default_rng(39)
        vs = random_vectors(rng, 40, 3)
        g = gram_matrix(KernelSpec.homogeneous(2), vs)
        assert g.rank() == 6

    def test_gaussian_rejected(self):
        vs = VectorSet(vectors=np.eye(2), field="real")
        with pytest.raises(UnsupportedKernelError):
            feature_matrix(KernelSpec.gaussian(1.0), vs)
