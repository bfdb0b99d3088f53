"""Distance-sum minimization over a tetrahedron.

Two routes to the minimizer are provided and kept independent on purpose:
``solve`` runs the reweighted-average (Weiszfeld) iteration with a vertex
test up front, and ``oracle_solve`` runs a derivative-free simplex search
with seeded restarts.  Tests cross-validate one against the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ClassificationConflict, NonConvergence
from .geometry import Tetrahedron, as_point

#: a vertex wins the optimality test when its pull norm is <= 1 + BOUNDARY_EPS
BOUNDARY_EPS = 1e-9
#: |pull - 1| below this marks the vertex/interior decision as a near-tie
TIE_BAND = 1e-6

INTERIOR = "interior"
VERTEX = "vertex"


@dataclass(frozen=True)
class SolverConfig:
    """Iteration controls.  ``vertex_eps`` is relative to the tetrahedron
    scale; ``seed`` drives the oracle restarts."""

    grad_tol: float = 1e-10
    max_iter: int = 10000
    vertex_eps: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if not self.grad_tol > 0:
            raise ValueError("grad_tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


@dataclass(frozen=True)
class Classification:
    """Outcome of the vertex-optimality test at each vertex."""

    kind: str
    vertex_index: int | None
    pull_norms: tuple[float, float, float, float]
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class FermatSolution:
    """Minimizer of the four-point distance sum.

    ``residual`` is the norm of the summed unit vectors toward the vertices:
    all four legs for an interior solution, the three defined legs (the pull
    norm) for a vertex solution.
    """

    kind: str
    point: np.ndarray
    vertex_index: int | None
    residual: float
    iterations: int
    objective_value: float
    flags: tuple[str, ...] = ()


def objective(tetra: Tetrahedron, point) -> float:
    """Sum of distances from a point to the four vertices."""
    p = as_point(point)
    return float(kernels.distance_sum(tetra.vertices, p[0], p[1], p[2]))


def pull_norm(tetra: Tetrahedron, i: int) -> float:
    """Norm of the summed unit vectors from the other vertices toward
    vertex i (1-based)."""
    if not 1 <= i <= 4:
        raise ValueError(f"vertex label must be 1..4, got {i}")
    return float(kernels.pull_norm(tetra.vertices, i - 1))


def balancing_residual(tetra: Tetrahedron, point) -> float:
    """Norm of the summed unit vectors from a non-vertex point toward the
    four vertices; zero exactly at an interior minimizer."""
    p = as_point(point)
    return float(kernels.resultant_norm(tetra.vertices, p[0], p[1], p[2]))


def classify(tetra: Tetrahedron) -> Classification:
    """Split into the interior case and the vertex case.

    A vertex whose pull norm is <= 1 + BOUNDARY_EPS absorbs the minimizer.
    At most one vertex can qualify on non-degenerate input; two or more
    raise ClassificationConflict.
    """
    pulls = tuple(pull_norm(tetra, i) for i in (1, 2, 3, 4))
    winners = [i for i, p in zip((1, 2, 3, 4), pulls) if p <= 1.0 + BOUNDARY_EPS]
    if len(winners) > 1:
        raise ClassificationConflict(
            f"vertices {winners} all pass the optimality test; "
            "input is numerically degenerate"
        )
    if winners:
        i = winners[0]
        flags = ()
        if abs(pulls[i - 1] - 1.0) < TIE_BAND:
            flags = ("boundary_tie",)
        return Classification(VERTEX, i, pulls, flags)
    return Classification(INTERIOR, None, pulls)


def _vertex_solution(tetra: Tetrahedron, i: int, pulls, flags) -> FermatSolution:
    point = tetra.vertex(i).copy()
    return FermatSolution(
        kind=VERTEX,
        point=point,
        vertex_index=i,
        residual=pulls[i - 1],
        iterations=0,
        objective_value=objective(tetra, point),
        flags=tuple(flags),
    )


def solve(tetra: Tetrahedron, config: SolverConfig | None = None) -> FermatSolution:
    """Minimize the distance sum over the tetrahedron.

    Vertex case: returns the winning vertex exactly.  Interior case: runs
    the reweighted-average iteration from the centroid until the balancing
    residual drops below ``grad_tol``; iterates landing on a vertex are
    nudged off along the descent ray.  Raises NonConvergence when the
    iteration budget runs out.
    """
    cfg = config or SolverConfig()
    cls = classify(tetra)
    if cls.kind == VERTEX:
        return _vertex_solution(tetra, cls.vertex_index, cls.pull_norms, cls.flags)
    start = tetra.centroid()
    scale = tetra.scale
    x, y, z, res, iters, status, vidx = kernels.weiszfeld(
        tetra.vertices,
        float(start[0]),
        float(start[1]),
        float(start[2]),
        cfg.grad_tol,
        cfg.max_iter,
        cfg.vertex_eps * scale,
        10.0 * cfg.vertex_eps * scale,
        BOUNDARY_EPS,
    )
    if status == kernels.MAXITER:
        raise NonConvergence(np.array([x, y, z]), res, iters)
    if status == kernels.VERTEX:
        # An iterate reached a vertex that passes the optimality test even
        # though the up-front classification said interior: a numerical
        # near-tie.  Report the vertex.
        return _vertex_solution(
            tetra, vidx + 1, cls.pull_norms, ("vertex_capture",)
        )
    point = np.array([x, y, z])
    flags = ()
    if not tetra.contains(point, tol=0.0):
        flags = ("outside_hull",)
    return FermatSolution(
        kind=INTERIOR,
        point=point,
        vertex_index=None,
        residual=res,
        iterations=iters,
        objective_value=objective(tetra, point),
        flags=flags,
    )


def hull_points(tetra: Tetrahedron, count: int, rng: np.random.Generator) -> np.ndarray:
    """Random points inside the hull (uniform barycentric weights)."""
    w = rng.dirichlet(np.ones(4), size=count)
    return w @ tetra.vertices


def oracle_solve(tetra: Tetrahedron, seed: int = 0) -> np.ndarray:
    """Derivative-free cross-check: simplex search with seeded restarts.

    Runs the simplex minimizer from the centroid and from 20 random points
    inside the hull, keeps the best, then polishes it with two small-simplex
    passes.  Deterministic for a fixed seed.
    """
    rng = np.random.default_rng(seed)
    v = tetra.vertices
    scale = tetra.scale
    starts = np.vstack([tetra.centroid(), hull_points(tetra, 20, rng)])
    best = None
    for s in starts:
        x, y, z, fv, _ = kernels.nelder_mead(
            v, float(s[0]), float(s[1]), float(s[2]),
            0.2 * scale, 1e-9 * scale, 1e-12 * scale, 600,
        )
        if best is None or fv < best[3]:
            best = (x, y, z, fv)
    for step in (1e-3 * scale, 1e-5 * scale):
        x, y, z, fv, _ = kernels.nelder_mead(
            v, best[0], best[1], best[2],
            step, 1e-12 * scale, 1e-14 * scale, 500,
        )
        if fv < best[3]:
            best = (x, y, z, fv)
    return np.array(best[:3])
