"""Seeded random inputs for verification sweeps.

Every generator derives its stream from (seed, index) so corpora are
reproducible instance by instance, independent of evaluation order.
"""

from __future__ import annotations

import math

import numpy as np

from .formula import resolve_branch, FiveAngles
from .geometry import DirectionConfig, Tetrahedron, canonical_frame

#: unit-cube tetrahedra flatter than this volume are rejected
MIN_VOLUME = 1e-3
#: resampling guard for pairwise |cos| between generated directions
MAX_PAIR_COS = 0.99
#: minimal |Gram determinant| of the leg-1/2/i triples kept in sweeps
MIN_GRAM = 1e-3
#: target resultant norm for balanced quadruples
BALANCE_TOL = 1e-10


def instance_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for one corpus instance, derived from (seed, index)."""
    return np.random.default_rng([seed, index])


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random rotation from the QR of a Gaussian matrix."""
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 2] = -q[:, 2]
    return q


def random_tetrahedron(seed: int, index: int) -> Tetrahedron:
    """Vertices uniform in the unit cube, rejecting volume < MIN_VOLUME."""
    rng = instance_rng(seed, index)
    while True:
        v = rng.random((4, 3))
        if abs(np.linalg.det(v[1:] - v[0])) / 6.0 >= MIN_VOLUME:
            return Tetrahedron(v)


def tetrahedron_corpus(seed: int, count: int) -> list[Tetrahedron]:
    return [random_tetrahedron(seed, i) for i in range(count)]


def _unit_rows(rng: np.random.Generator, n: int = 4) -> np.ndarray:
    u = rng.normal(size=(n, 3))
    return u / np.linalg.norm(u, axis=1, keepdims=True)


def _frame_ok(units: np.ndarray) -> bool:
    """Reject quadruples whose frame or radical factors are near-degenerate."""
    c = units @ units.T
    if np.abs(c[np.triu_indices(4, 1)]).max() > MAX_PAIR_COS:
        return False
    g3 = np.linalg.det(c[np.ix_((0, 1, 2), (0, 1, 2))])
    g4 = np.linalg.det(c[np.ix_((0, 1, 3), (0, 1, 3))])
    return min(abs(g3), abs(g4)) >= MIN_GRAM


def random_unit_quadruple(seed: int, index: int) -> np.ndarray:
    """Four generic unit directions (not balanced), degeneracy-rejected."""
    rng = instance_rng(seed, index)
    while True:
        u = _unit_rows(rng)
        if _frame_ok(u):
            return u


def balanced_quadruple(seed: int, index: int) -> np.ndarray:
    """Four unit directions summing to (numerically) zero.

    Project-and-renormalize fixed point: subtract the mean and rescale rows
    until the resultant norm drops below BALANCE_TOL; collapsing rows or
    degenerate frames trigger a resample.
    """
    rng = instance_rng(seed, index)
    while True:
        u = _unit_rows(rng)
        for _ in range(5000):
            resultant = u.sum(axis=0)
            if np.linalg.norm(resultant) < BALANCE_TOL:
                break
            w = u - resultant / 4.0
            norms = np.linalg.norm(w, axis=1)
            if norms.min() < 0.3:
                break
            u = w / norms[:, None]
        if np.linalg.norm(u.sum(axis=0)) < BALANCE_TOL and _frame_ok(u):
            return u


def canonical_config(units: np.ndarray) -> DirectionConfig:
    return canonical_frame(units[0], units[1], units[2], units[3])


def random_five_angles(seed: int, index: int) -> tuple[FiveAngles, int, DirectionConfig]:
    """A realizable five-angle set with its radical branch and the canonical
    configuration that realizes it."""
    rng = instance_rng(seed, index)
    while True:
        u = _unit_rows(rng)
        if not _frame_ok(u):
            continue
        config = canonical_config(u)
        branch = resolve_branch(config)
        if branch == 0:
            continue
        c = config.units @ config.units.T
        a = np.arccos(np.clip(c, -1.0, 1.0))
        fa = FiveAngles(
            a102=float(a[0, 1]),
            a103=float(a[0, 2]),
            a104=float(a[0, 3]),
            a203=float(a[1, 2]),
            a204=float(a[1, 3]),
        )
        if math.sin(fa.a102) <= 1e-6:
            continue
        return fa, branch, config
