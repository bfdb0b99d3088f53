import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetrafermat import (
    AngleSextuple,
    angle_sextuple,
    bisectors,
    bisectors_from_units,
    canonical_frame,
    check_cosine_sum,
    check_opposite_angles,
    direction_config,
    solve,
    verify_fundamental_property,
)
from tetrafermat.sampling import (
    balanced_quadruple,
    canonical_config,
    random_rotation,
    random_tetrahedron,
    random_unit_quadruple,
)

from conftest import ARCCOS_THIRD


def regular_config():
    v = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1.0]])
    return canonical_frame(*(v / math.sqrt(3.0)))


class TestAngleSextuple:
    def test_regular_directions(self):
        s = angle_sextuple(regular_config())
        assert np.allclose(s.as_tuple(), ARCCOS_THIRD, atol=1e-12)

    def test_axes_plus_diagonal(self):
        u4 = -np.ones(3) / math.sqrt(3.0)
        cfg = canonical_frame((1, 0, 0), (0, 1, 0), (0, 0, 1), u4)
        s = angle_sextuple(cfg)
        right = math.pi / 2
        diag = math.acos(-1.0 / math.sqrt(3.0))
        # field order a102, a103, a104, a203, a204, a304
        assert np.allclose(
            s.as_tuple(), (right, right, diag, right, diag, diag), atol=1e-12
        )

    def test_solution_pipeline_satisfies_invariants(self):
        t = random_tetrahedron(17, 4)
        sol = solve(t)
        assert sol.kind == "interior"
        s = angle_sextuple(direction_config(t, sol.point))
        assert all(0.0 < a < math.pi for a in s.as_tuple())
        assert max(check_opposite_angles(s)) <= 1e-6
        assert check_cosine_sum(s) <= 1e-6


class TestChecks:
    def test_opposite_angles_zero_for_regular(self):
        s = AngleSextuple(*(ARCCOS_THIRD,) * 6)
        assert check_opposite_angles(s) == (0.0, 0.0, 0.0)

    def test_opposite_angles_detects_perturbation(self):
        s = AngleSextuple(*(ARCCOS_THIRD,) * 5, ARCCOS_THIRD + 0.1)
        res = check_opposite_angles(s)
        expected = abs(math.cos(ARCCOS_THIRD) - math.cos(ARCCOS_THIRD + 0.1))
        assert res[0] == pytest.approx(expected, abs=1e-15)
        assert res[0] > 0
        assert res[1] == res[2] == 0.0

    def test_cosine_sum_regular(self):
        s = AngleSextuple(*(ARCCOS_THIRD,) * 6)
        assert check_cosine_sum(s) <= 1e-15

    def test_cosine_sum_right_angles(self):
        s = AngleSextuple(*(math.pi / 2,) * 6)
        assert check_cosine_sum(s) == pytest.approx(1.0, abs=1e-15)


class TestBisectors:
    def test_sum_of_axes(self):
        cfg = canonical_frame((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0))
        b = bisectors(cfg)
        assert np.allclose(b.d102, [1.0, 1.0, 0.0], atol=1e-12)

    def test_canonical_120_degree_pair(self):
        a = 2.0 * math.pi / 3.0
        cfg = canonical_frame(
            (1, 0, 0), (math.cos(a), math.sin(a), 0), (0, 0, 1), (0, 1, 0)
        )
        b = bisectors(cfg)
        assert np.allclose(b.d102, [0.5, math.sqrt(3.0) / 2.0, 0.0], atol=1e-12)

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=50, deadline=None)
    def test_squared_norm_identity(self, seed):
        u = random_unit_quadruple(seed, 0)
        cfg = canonical_config(u)
        s = angle_sextuple(cfg)
        b = bisectors(cfg)
        for d, a in zip(b.as_tuple(), s.as_tuple()):
            assert float(d @ d) == pytest.approx(
                2.0 * (1.0 + math.cos(a)), abs=1e-12
            )

    def test_rotation_equivariance(self):
        for i in range(30):
            u = random_unit_quadruple(55, i)
            r = random_rotation(np.random.default_rng(i))
            rotated = bisectors_from_units(u @ r.T)
            base = bisectors_from_units(u)
            for dr, d in zip(rotated.as_tuple(), base.as_tuple()):
                assert np.allclose(dr, r @ d, atol=1e-12)


class TestFundamentalProperty:
    def test_regular_directions_pass_tightly(self):
        report = verify_fundamental_property(regular_config(), tol=1e-10)
        assert report.passed
        assert max(report.opposite_angle_residuals) <= 1e-10
        assert report.cosine_sum_residual <= 1e-10
        assert max(report.bisector_dot_residuals) <= 1e-10
        assert max(report.antiparallel_residuals) <= 1e-10

    def test_balanced_quadruples_pass(self):
        for i in range(50):
            u = balanced_quadruple(23, i)
            report = verify_fundamental_property(canonical_config(u))
            assert report.passed, (i, report)

    def test_solver_pipeline_passes(self):
        checked = 0
        for i in range(60):
            t = random_tetrahedron(0, i)
            sol = solve(t)
            if sol.kind != "interior":
                continue
            report = verify_fundamental_property(direction_config(t, sol.point))
            assert report.passed
            checked += 1
        assert checked >= 40

    def test_unbalanced_quadruple_fails(self):
        # the check must not be vacuous
        u = random_unit_quadruple(123, 0)
        report = verify_fundamental_property(canonical_config(u))
        assert not report.passed
        worst = max(
            max(report.opposite_angle_residuals),
            report.cosine_sum_residual,
            max(report.bisector_dot_residuals),
            max(report.antiparallel_residuals),
        )
        assert worst > 0.01

    def test_orthogonality_equals_cosine_combination(self):
        # d102 . d203 = 1 + cos a102 + cos a103 + cos a203 for any directions
        for i in range(30):
            u = random_unit_quadruple(66, i)
            cfg = canonical_config(u)
            s = angle_sextuple(cfg)
            b = bisectors(cfg)
            expected = 1 + math.cos(s.a102) + math.cos(s.a103) + math.cos(s.a203)
            assert float(b.d102 @ b.d203) == pytest.approx(expected, abs=1e-12)
            assert float(b.d102 @ b.d103) == pytest.approx(expected, abs=1e-12)

    def test_degenerate_bisector_is_flagged(self):
        cfg = canonical_frame((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1))
        report = verify_fundamental_property(cfg)
        assert report.flags
        assert any(math.isnan(r) for r in report.antiparallel_residuals)
        assert not report.passed

    def test_non_isogonality_witness_exists_in_corpus(self):
        # the interior minimizer is not isogonal in general: some corpus
        # instance has a102, a103, a203 pairwise apart by > 0.01 rad
        for i in range(200):
            t = random_tetrahedron(0, i)
            sol = solve(t)
            if sol.kind != "interior":
                continue
            s = angle_sextuple(direction_config(t, sol.point))
            trio = (s.a102, s.a103, s.a203)
            gaps = [abs(a - b) for a in trio for b in trio if a is not b]
            if min(gaps) > 0.01:
                return
        pytest.fail("no non-isogonal interior instance found in 200 draws")
