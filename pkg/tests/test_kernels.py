"""Backend parity and behavior of the numeric kernels."""

import math

import numpy as np
import pytest

from tetrafermat import _pykernels, kernels
from tetrafermat.sampling import random_tetrahedron

try:
    from tetrafermat import _native
except ImportError:
    _native = None

needs_native = pytest.mark.skipif(
    _native is None, reason="compiled kernel not built"
)


def corpus(n=40, seed=11):
    out = []
    for i in range(n):
        t = random_tetrahedron(seed, i)
        c = t.centroid()
        out.append((np.asarray(t.vertices), (float(c[0]), float(c[1]), float(c[2]))))
    return out


@needs_native
class TestBackendParity:
    def test_scalar_kernels(self):
        for v, c in corpus():
            assert _native.distance_sum(v, *c) == pytest.approx(
                _pykernels.distance_sum(v, *c), abs=1e-13
            )
            assert _native.resultant_norm(v, *c) == pytest.approx(
                _pykernels.resultant_norm(v, *c), abs=1e-13
            )
            for i in range(4):
                assert _native.pull_norm(v, i) == pytest.approx(
                    _pykernels.pull_norm(v, i), abs=1e-13
                )

    def test_weiszfeld_matches(self):
        for v, c in corpus():
            a = _native.weiszfeld(v, *c, 1e-10, 10000, 1e-9, 1e-8, 1e-9)
            b = _pykernels.weiszfeld(v, *c, 1e-10, 10000, 1e-9, 1e-8, 1e-9)
            assert a[4:] == b[4:]  # iterations, status, vertex index
            assert np.allclose(a[:4], b[:4], atol=1e-12)

    def test_nelder_mead_matches(self):
        for v, c in corpus():
            a = _native.nelder_mead(v, *c, 0.2, 1e-10, 1e-13, 600)
            b = _pykernels.nelder_mead(v, *c, 0.2, 1e-10, 1e-13, 600)
            assert a[4] == b[4]
            assert np.allclose(a[:4], b[:4], atol=1e-11)


class TestWeiszfeldKernel:
    def test_monotone_descent(self):
        # objective never increases along the iteration (within rounding)
        for v, c in corpus(20, seed=13):
            x, y, z = c
            prev = kernels.distance_sum(v, x, y, z)
            for _ in range(60):
                x, y, z = kernels.weiszfeld_step(v, x, y, z)
                cur = kernels.distance_sum(v, x, y, z)
                assert cur <= prev + 1e-12
                prev = cur

    def test_converged_status(self):
        v, c = corpus(1)[0]
        x, y, z, res, it, status, vidx = kernels.weiszfeld(
            v, *c, 1e-10, 10000, 1e-12, 1e-11, 1e-9
        )
        assert status == kernels.CONVERGED
        assert res <= 1e-10
        assert vidx == -1

    def test_maxiter_status(self):
        v = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1.0]])
        x, y, z, res, it, status, vidx = kernels.weiszfeld(
            v, 0.25, 0.25, 0.25, 1e-10, 1, 1e-12, 1e-11, 1e-9
        )
        assert status == kernels.MAXITER
        assert it == 1

    def test_vertex_status_when_started_on_optimal_vertex(self):
        # shallow apex configuration: vertex 0 absorbs the minimizer
        v = np.array(
            [
                [0.0, 0.0, 0.1],
                [1.0, 0.0, 0.0],
                [-0.5, 0.8660254, 0.0],
                [-0.5, -0.8660254, 0.0],
            ]
        )
        x, y, z, res, it, status, vidx = kernels.weiszfeld(
            v, 0.0, 0.0, 0.1, 1e-10, 10000, 1e-9, 1e-8, 1e-9
        )
        assert status == kernels.VERTEX
        assert vidx == 0
        assert (x, y, z) == (0.0, 0.0, 0.1)
        assert res == pytest.approx(_pykernels.pull_norm(v, 0), abs=1e-15)


class TestNelderMeadKernel:
    def test_minimizes_right_corner(self):
        v = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1.0]])
        x, y, z, fv, it = kernels.nelder_mead(
            v, 0.3, 0.2, 0.4, 0.2, 1e-12, 1e-14, 2000
        )
        assert np.allclose([x, y, z], 1.0 / 6.0, atol=1e-7)
        assert fv == pytest.approx(5.0 * math.sqrt(3.0) / 3.0, abs=1e-12)

    def test_deterministic(self):
        v, c = corpus(1)[0]
        a = kernels.nelder_mead(v, *c, 0.2, 1e-10, 1e-13, 600)
        b = kernels.nelder_mead(v, *c, 0.2, 1e-10, 1e-13, 600)
        assert a == b
