import json

import numpy as np
import pytest
import scipy.linalg

from unitary_digraphs import fourier_matrix, generate, pattern_of
from unitary_digraphs.errors import NotWellFormedError, PreconditionError, RankDeficientError
from unitary_digraphs.oracle import (
    Feasible,
    Infeasible,
    OracleParams,
    Unknown,
    decide,
    nearest_unitary,
    pattern_projection,
    random_unitary,
    verdict_from_dict,
)
from unitary_digraphs.patterns import check_witness
from unitary_digraphs.synthesis import verify

from conftest import QUAD_NOT_SQ, TRIANGLE


class TestNearestUnitary:
    def test_identity(self):
        np.testing.assert_allclose(nearest_unitary(np.eye(3)), np.eye(3), atol=1e-15)

    def test_scaled_fourier(self):
        np.testing.assert_allclose(nearest_unitary(2 * fourier_matrix(2)), fourier_matrix(2),
                                   atol=1e-12)

    def test_positive_diagonal(self):
        np.testing.assert_allclose(nearest_unitary(np.diag([2, 0.5])), np.eye(2), atol=1e-15)

    def test_matches_scipy_polar(self, rng):
        for n in (2, 3, 5, 8):
            M = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            U, _ = scipy.linalg.polar(M)
            np.testing.assert_allclose(nearest_unitary(M), U, atol=1e-12)

    def test_idempotent(self, rng):
        U = random_unitary(5, rng)
        np.testing.assert_allclose(nearest_unitary(U), U, atol=1e-12)

    def test_rank_deficient(self):
        with pytest.raises(RankDeficientError):
            nearest_unitary(np.ones((3, 3)))


class TestPatternProjection:
    def test_full_pattern_unchanged(self):
        F = fourier_matrix(2)
        np.testing.assert_array_equal(pattern_projection(F, np.ones((2, 2), dtype=int), 1e-3), F)

    def test_identity_on_antidiagonal(self):
        M = pattern_projection(np.eye(2), [[0, 1], [1, 0]], 1e-3)
        assert M[0, 0] == 0 and M[1, 1] == 0
        np.testing.assert_allclose(np.abs(M[[0, 1], [1, 0]]), 1e-3, rtol=1e-12)

    def test_phase_preserved(self):
        M = np.array([[1e-5j, 1], [1, 1]])
        out = pattern_projection(M, np.ones((2, 2), dtype=int), 1e-3)
        assert out[0, 0] == pytest.approx(1e-3j)

    def test_deterministic_random_phase(self):
        a = pattern_projection(np.eye(3), np.ones((3, 3), dtype=int), 1e-3,
                               np.random.default_rng(1))
        b = pattern_projection(np.eye(3), np.ones((3, 3), dtype=int), 1e-3,
                               np.random.default_rng(1))
        np.testing.assert_array_equal(a, b)

    def test_size_mismatch(self):
        with pytest.raises(PreconditionError):
            pattern_projection(np.eye(2), np.ones((3, 3), dtype=int), 1e-3)


class TestParams:
    def test_floor_above_zero_tol(self):
        with pytest.raises(PreconditionError):
            OracleParams(support_floor=1e-9, zero_tol=1e-8)

    def test_positive(self):
        with pytest.raises(PreconditionError):
            OracleParams(unitary_tol=0)


class TestDecide:
    def test_triangle(self):
        v = decide(TRIANGLE)
        assert isinstance(v, Infeasible) and len(v.witness.S) == 2
        assert check_witness(TRIANGLE, v.witness)

    def test_all_ones(self):
        v = decide(np.ones((4, 4), dtype=int))
        assert isinstance(v, Feasible)
        assert verify(v.certificate.matrix, np.ones((4, 4), dtype=int), 1e-10, 1e-8).valid

    def test_c4(self):
        v = decide(pattern_of(generate("cycle", 4)))
        assert isinstance(v, Feasible)

    def test_quad_not_sq(self):
        v = decide(QUAD_NOT_SQ)
        assert isinstance(v, Infeasible) and len(v.witness.S) == 3

    def test_row_forced_into_two_columns(self):
        P = [[1, 1, 1], [1, 1, 1], [0, 0, 1]]
        v = decide(P)
        assert isinstance(v, Infeasible) and check_witness(P, v.witness)

    def test_non_well_formed_without_witness(self):
        # directed path: no violating set, but a zero row
        with pytest.raises(NotWellFormedError):
            decide([[0, 1, 0], [0, 0, 1], [0, 0, 0]])

    def test_non_well_formed_with_witness(self):
        v = decide([[0, 1, 1], [0, 0, 0], [0, 0, 0]])
        assert isinstance(v, Infeasible)

    def test_unknown_is_honest(self):
        # feasible pattern, but a single iteration is not enough to certify it
        P = np.array([[1, 1, 0], [1, 1, 1], [1, 1, 1]])
        v = decide(P, OracleParams(restarts=1, max_iters=1))
        assert isinstance(v, Unknown)
        assert v.best_residual > 1e-10 and v.best_min_on_support >= 1e-3

    def test_non_specular_feasible(self):
        # strongly quadrangular but not specular: only the iteration can certify it
        P = np.array([[1, 1, 0], [1, 1, 1], [1, 1, 1]])
        v = decide(P)
        assert isinstance(v, Feasible)
        assert v.certificate.valid and v.certificate.support_exact

    def test_deterministic_bytes(self):
        P = np.array([[1, 1, 0], [1, 1, 1], [1, 1, 1]])
        a = json.dumps(decide(P, OracleParams(seed=5)).to_dict(), sort_keys=True)
        b = json.dumps(decide(P, OracleParams(seed=5)).to_dict(), sort_keys=True)
        assert a == b

    def test_verdict_json_round_trip(self):
        for P in (TRIANGLE, np.ones((3, 3), dtype=int)):
            v = decide(P)
            back = verdict_from_dict(json.loads(json.dumps(v.to_dict())))
            assert back.kind == v.kind
            if isinstance(back, Feasible):
                assert back.certificate.valid
        u = Unknown(0.5, 1e-3)
        assert verdict_from_dict(u.to_dict()) == u
