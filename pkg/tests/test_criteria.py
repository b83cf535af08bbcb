from math import sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from concurrence_bound import states
from concurrence_bound.criteria import criteria_scores, is_ppt, partial_transpose_a, realign
from concurrence_bound.linalg import hermitian_eigenvalues, trace_norm
from concurrence_bound.states import BipartiteState, density_from_pure, pure_from_schmidt

from _helpers import random_density, random_product_mixture, random_spectrum, rotate_locally

seeds = st.integers(min_value=0, max_value=2**32 - 1)
small = st.integers(min_value=2, max_value=4)


def brute_partial_transpose(rho):
    m, n = rho.dims
    out = np.zeros_like(rho.matrix)
    for i, k, j, l in np.ndindex(m, n, m, n):
        out[i * n + k, j * n + l] = rho.matrix[j * n + k, i * n + l]
    return out


def brute_realign(rho):
    m, n = rho.dims
    out = np.zeros((m * m, n * n), dtype=complex)
    for i, j, k, l in np.ndindex(m, m, n, n):
        out[i * m + j, k * n + l] = rho.matrix[i * n + k, j * n + l]
    return out


def bell():
    return density_from_pure(states.maximally_entangled(2))


class TestPartialTranspose:
    def test_matches_index_definition(self, rng):
        rho = random_density(rng, 2, 3)
        np.testing.assert_array_equal(partial_transpose_a(rho), brute_partial_transpose(rho))

    def test_real_product_unchanged(self):
        rho_a = np.array([[0.7, 0.2], [0.2, 0.3]])
        rho = states.product_state(rho_a, np.array([[0.5, 0.1j], [-0.1j, 0.5]]))
        np.testing.assert_allclose(partial_transpose_a(rho), rho.matrix)

    def test_bell(self):
        pt = partial_transpose_a(bell())
        assert hermitian_eigenvalues(pt)[-1] == pytest.approx(-0.5)
        assert trace_norm(pt) == pytest.approx(2.0)

    def test_involution_and_hermiticity(self, rng):
        rho = random_density(rng, 3, 2)
        pt = partial_transpose_a(rho)
        np.testing.assert_array_equal(pt, pt.conj().T)
        # the PT of an NPT state is not a state, so apply the map a second time by hand
        twice = pt.reshape(3, 2, 3, 2).transpose(2, 1, 0, 3).reshape(6, 6)
        np.testing.assert_array_equal(twice, rho.matrix)
        ppt = random_product_mixture(rng, 3, 2)
        np.testing.assert_array_equal(
            partial_transpose_a(BipartiteState(partial_transpose_a(ppt), 3, 2)), ppt.matrix
        )

    def test_trace_preserved(self, rng):
        rho = random_density(rng, 3, 3)
        assert np.trace(partial_transpose_a(rho)).real == pytest.approx(1.0)

    def test_b_side_transpose_has_same_norm(self, rng):
        rho = random_density(rng, 2, 3, rank=2)
        pt_b = rho.matrix.reshape(2, 3, 2, 3).transpose(0, 3, 2, 1).reshape(6, 6)
        assert trace_norm(pt_b) == pytest.approx(trace_norm(partial_transpose_a(rho)), rel=1e-10)


class TestRealign:
    def test_matches_index_definition(self, rng):
        rho = random_density(rng, 2, 3)
        np.testing.assert_array_equal(realign(rho), brute_realign(rho))

    def test_shape(self, rng):
        assert realign(random_density(rng, 2, 4)).shape == (4, 16)

    def test_maximally_mixed_two_qubits(self):
        # R(I/4) = vec(I) vec(I)^T / 4: one singular value |vec I|^2 / 4 = 1/2
        r = realign(states.maximally_mixed(2, 2))
        np.testing.assert_allclose(np.linalg.svd(r, compute_uv=False), [0.5, 0, 0, 0], atol=1e-15)
        assert trace_norm(r) == pytest.approx(0.5, abs=1e-14)

    def test_product_state_norm_is_sqrt_purities(self, rng):
        ra = random_density(rng, 1, 3).matrix
        rb = random_density(rng, 1, 2).matrix
        rho = states.product_state(ra, rb)
        expected = sqrt(np.vdot(ra, ra).real * np.vdot(rb, rb).real)
        assert trace_norm(realign(rho)) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("d, f", [(2, 0.8), (3, 0.5), (4, 0.9)])
    def test_isotropic(self, d, f):
        assert trace_norm(realign(states.isotropic(d, f))) == pytest.approx(d * f, abs=1e-12)


class TestScores:
    def test_tiles(self):
        s = criteria_scores(states.tiles_upb())
        assert s.negativity == pytest.approx(0.0, abs=1e-9)
        assert s.ccnr_violation == pytest.approx(0.087, abs=5e-3)

    def test_isotropic_separability_boundary(self):
        s = criteria_scores(states.isotropic(3, 1 / 3))
        assert s.negativity == pytest.approx(0.0, abs=1e-12)
        assert s.ccnr_violation == pytest.approx(0.0, abs=1e-12)

    def test_horodecki_free_entangled_ppt_norm(self):
        # direct matrix value agrees with the closed form (2 + sqrt(32)) / 7
        s = criteria_scores(states.horodecki_3x3(4.5))
        assert s.ppt_norm == pytest.approx((2 + sqrt(32)) / 7, abs=1e-12)
        assert s.ppt_norm == pytest.approx(1.0938, abs=1e-4)

    def test_fields_consistent(self, rng):
        s = criteria_scores(random_density(rng, 2, 3, rank=2))
        assert s.negativity == s.ppt_norm - 1.0
        assert s.ccnr_violation == s.realignment_norm - 1.0
        assert s.ppt_norm >= 1.0 - 1e-9
        assert s.realignment_norm > 0
        assert set(s.as_dict()) == {"ppt_norm", "realignment_norm", "negativity", "ccnr_violation", "min_pt_eigenvalue"}


class TestPPT:
    def test_separable_mixtures_are_ppt(self, rng):
        for _ in range(10):
            assert is_ppt(random_product_mixture(rng, 2, 3))

    def test_bell_not_ppt(self):
        assert not is_ppt(bell())

    def test_tiles_ppt(self):
        assert is_ppt(states.tiles_upb())


@settings(max_examples=40, deadline=None)
@given(small, small, seeds)
def test_local_unitary_invariance(m, n, seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, m, n, rank=int(rng.integers(1, 3)))
    a, b = criteria_scores(rho), criteria_scores(rotate_locally(rng, rho))
    assert b.ppt_norm == pytest.approx(a.ppt_norm, abs=1e-8)
    assert b.realignment_norm == pytest.approx(a.realignment_norm, abs=1e-8)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(2, 8), seeds)
def test_pure_state_identity(m, n, seed):
    rng = np.random.default_rng(seed)
    mu = random_spectrum(rng, min(m, n))
    rho = rotate_locally(rng, density_from_pure(pure_from_schmidt(mu, m, n)))
    expected = np.sum(np.sqrt(mu.coefficients)) ** 2
    s = criteria_scores(rho)
    assert s.ppt_norm == pytest.approx(expected, abs=1e-8)
    assert s.realignment_norm == pytest.approx(expected, abs=1e-8)


@settings(max_examples=30, deadline=None)
@given(small, small, seeds)
def test_separable_bounds(m, n, seed):
    rng = np.random.default_rng(seed)
    s = criteria_scores(random_product_mixture(rng, m, n))
    assert s.realignment_norm <= 1.0 + 1e-8
    assert s.ppt_norm == pytest.approx(1.0, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(small, small, st.floats(0.0, 1.0), seeds)
def test_convexity_of_norms(m, n, a, seed):
    rng = np.random.default_rng(seed)
    rho, tau = random_density(rng, m, n, rank=1), random_density(rng, m, n, rank=2)
    mix = states.mixture([rho, tau], [a, 1 - a])
    s, sr, st_ = criteria_scores(mix), criteria_scores(rho), criteria_scores(tau)
    assert s.ppt_norm <= a * sr.ppt_norm + (1 - a) * st_.ppt_norm + 1e-9
    assert s.realignment_norm <= a * sr.realignment_norm + (1 - a) * st_.realignment_norm + 1e-9
