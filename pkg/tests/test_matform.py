import math

import numpy as np
import pytest

from vecellipse import (
    MatrixRoot,
    PlanePair,
    VectorSignal,
    canonical_root,
    generalized_exp,
    matrix_dft,
    matrix_idft,
    root_from_planes,
    unitary_dft,
)


def literal_matrix_dft(f, root, sign=-1):
    """Sum of exp(sign J 2 pi m u / M) f[m] term by term, via generalized_exp."""
    m = f.shape[0]
    out = np.zeros_like(f)
    for u in range(m):
        for k in range(m):
            out[u] += generalized_exp(root, sign * 2 * math.pi * k * u / m) @ f[k]
    return out / math.sqrt(m)


def random_root(rng, n):
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    return root_from_planes([PlanePair(q[:, 2 * k], q[:, 2 * k + 1]) for k in range(n // 2)])


class TestRoots:
    def test_canonical_2(self):
        np.testing.assert_array_equal(canonical_root(2).J, [[0, -1], [1, 0]])

    @pytest.mark.parametrize("n", [2, 4, 6, 16])
    def test_canonical_is_exact(self, n):
        J = canonical_root(n).J
        assert np.max(np.abs(J @ J + np.eye(n))) == 0.0

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_odd_dimension(self, n):
        with pytest.raises(ValueError, match="odd dimension"):
            canonical_root(n)

    @pytest.mark.parametrize("n", [0, -2])
    def test_nonpositive(self, n):
        with pytest.raises(ValueError):
            canonical_root(n)

    def test_matrix_root_validates(self):
        with pytest.raises(ValueError, match="odd"):
            MatrixRoot(np.eye(3))
        with pytest.raises(ValueError, match="root of -1"):
            MatrixRoot(np.eye(2))

    def test_planes_reproduce_canonical(self):
        e = np.eye(4)
        e2 = np.eye(2)
        np.testing.assert_array_equal(root_from_planes([PlanePair(e2[0], e2[1])]).J, canonical_root(2).J)
        np.testing.assert_array_equal(
            root_from_planes([PlanePair(e[0], e[1]), PlanePair(e[2], e[3])]).J, canonical_root(4).J
        )

    def test_planes_not_orthonormal(self):
        e = np.eye(2)
        with pytest.raises(ValueError, match="orthonormal"):
            root_from_planes([PlanePair(e[0], e[0])])

    def test_planes_incomplete_span(self):
        e = np.eye(4)
        with pytest.raises(ValueError, match="span"):
            root_from_planes([PlanePair(e[0], e[1])])

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_random_planes(self, rng, n):
        q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        pairs = [PlanePair(q[:, 2 * k], q[:, 2 * k + 1]) for k in range(n // 2)]
        J = root_from_planes(pairs).J
        assert np.max(np.abs(J @ J + np.eye(n))) <= 1e-12
        np.testing.assert_allclose(J.T, -J, atol=1e-15)
        for p in pairs:
            np.testing.assert_allclose(J @ p.u, p.v, atol=1e-12)
            np.testing.assert_allclose(J @ p.v, -p.u, atol=1e-12)


class TestExponential:
    def test_special_angles(self):
        root = canonical_root(4)
        np.testing.assert_array_equal(generalized_exp(root, 0.0), np.eye(4))
        np.testing.assert_allclose(generalized_exp(root, math.pi / 2), root.J, atol=1e-15)
        np.testing.assert_allclose(generalized_exp(root, math.pi), -np.eye(4), atol=1e-15)

    def test_rotation_and_homomorphism(self, rng):
        root = random_root(rng, 6)
        for _ in range(20):
            a, b = rng.uniform(-7, 7, 2)
            ea, eb = generalized_exp(root, a), generalized_exp(root, b)
            np.testing.assert_allclose(ea @ eb, generalized_exp(root, a + b), atol=1e-12)
            np.testing.assert_allclose(ea.T @ ea, np.eye(6), atol=1e-12)
            assert np.linalg.det(ea) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("m", [1, 2, 5, 8, 32])
    def test_kernel_orthogonality(self, rng, m):
        root = random_root(rng, 4)
        for u in range(m):
            for v in range(m):
                acc = sum(generalized_exp(root, 2 * math.pi * k * (u - v) / m) for k in range(m)) / m
                expected = np.eye(4) if u == v else np.zeros((4, 4))
                np.testing.assert_allclose(acc, expected, atol=1e-12)


class TestMatrixDFT:
    def test_delta(self):
        x = np.array([1.0, -2.0])
        f = np.zeros((4, 2))
        f[0] = x
        F = matrix_dft(VectorSignal(f), canonical_root(2))
        np.testing.assert_allclose(F, np.tile(x / 2, (4, 1)), atol=1e-15)

    def test_constant(self):
        x = np.array([1.0, -2.0, 0.5, 3.0])
        root = canonical_root(4)
        F = matrix_dft(np.tile(x, (4, 1)), root)
        # oracle: direct summation of exp(J theta m) over one period vanishes for u != 0
        for u in range(1, 4):
            geo = sum(generalized_exp(root, -2 * math.pi * k * u / 4) for k in range(4))
            np.testing.assert_allclose(geo, 0, atol=1e-15)
        np.testing.assert_allclose(F[0], 2 * x, atol=1e-15)
        np.testing.assert_allclose(F[1:], 0, atol=1e-15)

    def test_n2_equals_complex_dft(self, rng):
        f = rng.standard_normal((37, 2))
        F = matrix_dft(f, canonical_root(2))
        z = unitary_dft(f[:, 0] + 1j * f[:, 1])
        np.testing.assert_allclose(F, np.column_stack([z.real, z.imag]), atol=1e-12)

    @pytest.mark.parametrize("m", [1, 4, 7])
    def test_matches_literal_sum(self, rng, m):
        root = random_root(rng, 4)
        f = rng.standard_normal((m, 4))
        np.testing.assert_allclose(matrix_dft(f, root), literal_matrix_dft(f, root), atol=1e-12)
        np.testing.assert_allclose(
            matrix_idft(f, root).samples, literal_matrix_dft(f, root, sign=+1), atol=1e-12
        )

    @pytest.mark.parametrize("m", [5, 8, 32])
    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_round_trip_and_isometry(self, rng, m, n):
        root = random_root(rng, n)
        f = rng.standard_normal((m, n))
        F = matrix_dft(f, root)
        assert np.sum(F * F) == pytest.approx(np.sum(f * f), rel=1e-10)
        np.testing.assert_allclose(matrix_idft(F, root).samples, f, atol=1e-10)

    def test_inverse_examples(self):
        root = canonical_root(2)
        np.testing.assert_array_equal(matrix_idft(np.zeros((4, 2)), root).samples, 0)
        F = np.zeros((4, 2))
        F[0] = [3.0, 1.0]
        np.testing.assert_allclose(matrix_idft(F, root).samples, np.tile([1.5, 0.5], (4, 1)), atol=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            matrix_dft(np.zeros((4, 3)), canonical_root(2))
        with pytest.raises(ValueError, match="dimension"):
            matrix_idft(np.zeros((4, 2)), canonical_root(4))
