import warnings

import numpy as np
import pytest

from chebmono.approx_error import select_degree_exact
from chebmono.chebyshev import clenshaw_eval, monomial_expansion, truncate
from chebmono.exact_combinatorics import DomainError, p_exact
from chebmono.matpow import (
    MatVecCounter,
    SpectrumWarning,
    SymMatrix,
    auto_matpow,
    cheb_apply,
    cheb_matpow,
    monomial_coeffs,
    read_vector,
    repeated_matpow,
)

from oracles import rotated_diagonal

# rotated test matrices have row sums above 1 while their spectrum stays in [-1, 1]
pytestmark = pytest.mark.filterwarnings("ignore::chebmono.matpow.SpectrumWarning")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


class TestSymMatrix:
    def test_rejects_asymmetric(self):
        with pytest.raises(DomainError):
            SymMatrix(np.array([[0.0, 0.1], [0.2, 0.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(DomainError):
            SymMatrix(np.zeros((2, 3)))

    def test_spectrum_warning(self):
        with pytest.warns(SpectrumWarning):
            SymMatrix(np.array([[0.8, 0.5], [0.5, 0.8]]))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            SymMatrix(np.eye(3))

    def test_immutable(self):
        A = SymMatrix(np.eye(2))
        with pytest.raises(ValueError):
            A.entries[0, 0] = 3.0

    def test_file_formats(self, tmp_path):
        (tmp_path / "a.txt").write_text("2\n0.5 0.1\n0.1 -0.25\n")
        (tmp_path / "v1.txt").write_text("1 2\n")
        (tmp_path / "v2.txt").write_text("1\n2\n")
        A = SymMatrix.from_file(tmp_path / "a.txt")
        assert A.dim == 2 and A.entries[1, 1] == -0.25
        np.testing.assert_array_equal(read_vector(tmp_path / "v1.txt"), [1.0, 2.0])
        np.testing.assert_array_equal(read_vector(tmp_path / "v2.txt"), [1.0, 2.0])

    def test_bad_file(self, tmp_path):
        (tmp_path / "a.txt").write_text("3\n1 0\n0 1\n")
        with pytest.raises(ValueError):
            SymMatrix.from_file(tmp_path / "a.txt")


class TestChebMatpow:
    def test_untruncated_diagonal(self):
        A = np.diag([0.5, -0.25])
        y, m = cheb_matpow(A, [1.0, 1.0], 3, 3)
        np.testing.assert_allclose(y, [0.125, -0.015625], atol=1e-16)
        assert m == 3

    def test_identity_truncated(self):
        y, m = cheb_matpow(np.eye(2), [1.0, 1.0], 4, 2)
        # phi_2(1) = 1 - p(4, 2) = 7/8
        assert 1 - p_exact(4, 2) == 0.875
        np.testing.assert_allclose(y, [0.875, 0.875], atol=1e-15)
        assert m == 2

    @pytest.mark.parametrize("n", [1, 3, 9, 75])
    def test_zero_matrix_odd_power(self, n):
        for k in range(0, n + 1, max(1, n // 5)):
            y, _ = cheb_matpow(np.zeros((3, 3)), [1.0, -2.0, 3.0], n, k)
            np.testing.assert_array_equal(y, 0.0)

    def test_matvec_budget(self, rng):
        A, _ = rotated_diagonal(rng, 6)
        v = rng.standard_normal(6)
        for k in range(0, 21):
            _, m = cheb_matpow(A, v, 20, k)
            assert m == k

    def test_diagonal_reduction(self, rng):
        d = np.linspace(-1, 1, 100)
        v = rng.standard_normal(100)
        A = np.diag(d)
        for n, k in [(20, 6), (75, 25), (75, 41), (31, 0)]:
            y, _ = cheb_matpow(A, v, n, k)
            ref = clenshaw_eval(truncate(monomial_expansion(n), k), d) * v
            np.testing.assert_allclose(y, ref, rtol=0, atol=1e-10)

    def test_error_certificate(self, rng):
        for trial in range(10):
            dim = int(rng.integers(1, 51))
            A, _ = rotated_diagonal(rng, dim)
            v = rng.standard_normal(dim)
            for n in (20, 75):
                ref, _ = repeated_matpow(A, v, n)
                for k in range(n + 1):
                    y, _ = cheb_matpow(A, v, n, k)
                    bound = float(p_exact(n, k)) * np.linalg.norm(v) + 1e-8
                    assert np.linalg.norm(y - ref) <= bound

    def test_linearity(self, rng):
        A, _ = rotated_diagonal(rng, 40)
        u, w = rng.standard_normal(40), rng.standard_normal(40)
        a, b = 0.7, -1.3
        lhs, _ = cheb_matpow(A, a * u + b * w, 75, 33)
        ru, _ = cheb_matpow(A, u, 75, 33)
        rw, _ = cheb_matpow(A, w, 75, 33)
        np.testing.assert_allclose(lhs, a * ru + b * rw, rtol=0, atol=1e-10)

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            cheb_matpow(np.eye(3), [1.0, 2.0], 4, 2)
        with pytest.raises(DomainError):
            repeated_matpow(np.eye(3), [1.0, 2.0], 4)

    def test_k_above_n(self):
        with pytest.raises(DomainError):
            cheb_matpow(np.eye(2), [1.0, 1.0], 3, 4)

    def test_callback_entry_point(self, rng):
        A, _ = rotated_diagonal(rng, 12)
        v = rng.standard_normal(12)
        y1, m1 = cheb_apply(lambda x: A @ x, v, monomial_coeffs(30, 14))
        y2, m2 = cheb_matpow(A, v, 30, 14)
        np.testing.assert_array_equal(y1, y2)
        assert m1 == m2 == 14

    def test_counter(self):
        c = MatVecCounter(lambda x: 2 * x)
        c(np.ones(2))
        c(np.ones(2))
        assert c.count == 2


class TestRepeatedAndAuto:
    def test_repeated_examples(self, rng):
        y, m = repeated_matpow(np.diag([0.5, -0.25]), [1.0, 1.0], 3)
        np.testing.assert_array_equal(y, [0.125, -0.015625])
        assert m == 3
        v = rng.standard_normal(4)
        y, _ = repeated_matpow(np.eye(4), v, 17)
        np.testing.assert_array_equal(y, v)

    def test_auto_unit_tolerance(self):
        v = np.array([1.0, 2.0])
        y, k, m = auto_matpow(np.diag([0.3, -0.6]), v, 8, 1.0)
        c0 = float(monomial_expansion(8).coeffs[0])
        assert (k, m) == (0, 0)
        np.testing.assert_allclose(y, 0.5 * c0 * v)

    def test_auto_eigenvalue_grid(self):
        d = np.linspace(-1, 1, 101)
        v = np.ones(101)
        y, k, m = auto_matpow(np.diag(d), v, 75, 1e-6)
        ref, _ = repeated_matpow(np.diag(d), v, 75)
        assert np.linalg.norm(y - ref) <= 1e-6 * np.linalg.norm(v) + 1e-12
        assert k == m == select_degree_exact(75, 1e-6).k

    def test_auto_identity(self):
        v = np.array([1.0, -3.0, 0.5])
        y, k, _ = auto_matpow(np.eye(3), v, 75, 1e-3)
        p = p_exact(75, k)
        assert p <= 1e-3
        np.testing.assert_allclose(y, (1 - float(p)) * v, rtol=0, atol=1e-14)
