"""3D primitives: points, unit directions, tetrahedron validation, and the
canonical frame that aligns a direction quadruple with the x-axis and the
xy-plane.

All angles are radians.  Points and directions are float64 numpy arrays of
shape (3,); any sequence of three finite numbers is accepted on input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints, DegenerateFrame, DegenerateInput

#: relative volume threshold below which four points are rejected as flat
VOLUME_EPS = 1e-12
#: |u1.u2| above 1 - FRAME_EPS means the anchor pair is (anti-)parallel
FRAME_EPS = 1e-12
#: relative distance below which two points cannot define a direction
COINCIDENT_EPS = 1e-12
#: tolerated deviation of a unit vector's squared norm from 1
UNIT_NORM_EPS = 1e-12
#: |z| below this puts a leg in the xy-plane for the mirror convention
INPLANE_EPS = 1e-12


def as_point(p) -> np.ndarray:
    """Coerce to a (3,) float64 array of finite coordinates."""
    a = np.asarray(p, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected 3 coordinates, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("coordinates must be finite")
    return a


def as_unit(u) -> np.ndarray:
    """Coerce to a (3,) float64 array and check it has unit norm."""
    a = as_point(u)
    if abs(a @ a - 1.0) > UNIT_NORM_EPS:
        raise ValueError(f"not a unit vector (|v|^2 = {a @ a!r})")
    return a


def unit_vector(origin, target) -> np.ndarray:
    """Unit vector pointing from ``origin`` to ``target``.

    Raises CoincidentPoints when the separation underflows the relative
    threshold.
    """
    a = as_point(origin)
    b = as_point(target)
    d = b - a
    n = float(np.linalg.norm(d))
    scale = max(float(np.linalg.norm(a)), float(np.linalg.norm(b)))
    if n <= COINCIDENT_EPS * scale or n == 0.0:
        raise CoincidentPoints(f"points {a.tolist()} and {b.tolist()} coincide")
    return d / n


def angle_between(u, v) -> float:
    """Angle in [0, pi] between two unit vectors (argument clamped)."""
    a = as_unit(u)
    b = as_unit(v)
    return math.acos(min(1.0, max(-1.0, float(a @ b))))


@dataclass(frozen=True)
class Tetrahedron:
    """Four labeled points, validated non-collinear and non-coplanar.

    Rows of ``vertices`` are the points A1..A4.  The volume test is relative:
    |det of edge matrix| must exceed VOLUME_EPS times the cube of the longest
    pairwise distance.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.shape != (4, 3):
            raise DegenerateInput(f"expected 4 points in 3D, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise DegenerateInput("vertex coordinates must be finite")
        v = np.ascontiguousarray(v)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        d = self.scale
        det = abs(float(np.linalg.det(v[1:] - v[0])))
        if det <= VOLUME_EPS * d ** 3:
            raise DegenerateInput(
                f"points are collinear or coplanar (|det| = {det:.3e}, "
                f"scale = {d:.3e})"
            )

    @property
    def scale(self) -> float:
        """Longest pairwise distance between vertices."""
        v = self.vertices
        return max(
            float(np.linalg.norm(v[i] - v[j]))
            for i in range(4)
            for j in range(i + 1, 4)
        )

    @property
    def volume(self) -> float:
        v = self.vertices
        return abs(float(np.linalg.det(v[1:] - v[0]))) / 6.0

    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    def vertex(self, i: int) -> np.ndarray:
        """Vertex by 1-based label A1..A4."""
        if not 1 <= i <= 4:
            raise ValueError(f"vertex label must be 1..4, got {i}")
        return self.vertices[i - 1]

    def barycentric(self, point) -> np.ndarray:
        """Barycentric coordinates of a point with respect to the vertices."""
        p = as_point(point)
        v = self.vertices
        m = np.vstack([v.T, np.ones(4)])
        rhs = np.concatenate([p, [1.0]])
        return np.linalg.solve(m, rhs)

    def contains(self, point, tol: float = 0.0) -> bool:
        """True when the point lies inside the hull (tol relaxes the faces)."""
        return bool(self.barycentric(point).min() >= -tol)


@dataclass(frozen=True)
class DirectionConfig:
    """Four unit directions in the canonical frame.

    Leg 1 is (1, 0, 0) exactly; leg 2 lies in the xy-plane with positive y;
    leg 3 has non-negative z (the mirror convention; applied to leg 4 when
    leg 3 is in-plane).  ``a102`` is the angle between legs 1 and 2, and
    (lat, lon) are the latitude/longitude of legs 3 and 4, so that each leg
    is (cos lat cos lon, cos lat sin lon, sin lat).
    """

    units: np.ndarray
    a102: float
    lat3: float
    lon3: float
    lat4: float
    lon4: float

    def __post_init__(self):
        u = np.ascontiguousarray(np.asarray(self.units, dtype=float))
        if u.shape != (4, 3):
            raise ValueError(f"expected 4 direction rows, got shape {u.shape}")
        u.setflags(write=False)
        object.__setattr__(self, "units", u)
        if not (u[0] == np.array([1.0, 0.0, 0.0])).all():
            raise ValueError("leg 1 must be exactly (1, 0, 0)")
        if abs(u[1, 2]) > 1e-9 or u[1, 1] < -1e-9:
            raise ValueError("leg 2 must lie in the xy-plane with y >= 0")

    @property
    def u1(self) -> np.ndarray:
        return self.units[0]

    @property
    def u2(self) -> np.ndarray:
        return self.units[1]

    @property
    def u3(self) -> np.ndarray:
        return self.units[2]

    @property
    def u4(self) -> np.ndarray:
        return self.units[3]


def direction_from_latlon(lat: float, lon: float) -> np.ndarray:
    """Unit vector at the given latitude (from the xy-plane) and longitude."""
    return np.array(
        [
            math.cos(lat) * math.cos(lon),
            math.cos(lat) * math.sin(lon),
            math.sin(lat),
        ]
    )


def _config_from_canonical_rows(u: np.ndarray) -> DirectionConfig:
    """Extract frame parameters from rows already in canonical position and
    snap the rows to the exact parameterized form."""
    a102 = math.atan2(float(u[1, 1]), float(u[1, 0]))
    lat3 = math.asin(min(1.0, max(-1.0, float(u[2, 2]))))
    lon3 = math.atan2(float(u[2, 1]), float(u[2, 0])) if abs(lat3) < math.pi / 2 else 0.0
    lat4 = math.asin(min(1.0, max(-1.0, float(u[3, 2]))))
    lon4 = math.atan2(float(u[3, 1]), float(u[3, 0])) if abs(lat4) < math.pi / 2 else 0.0
    snapped = np.vstack(
        [
            np.array([1.0, 0.0, 0.0]),
            np.array([math.cos(a102), math.sin(a102), 0.0]),
            direction_from_latlon(lat3, lon3),
            direction_from_latlon(lat4, lon4),
        ]
    )
    return DirectionConfig(
        units=snapped, a102=a102, lat3=lat3, lon3=lon3, lat4=lat4, lon4=lon4
    )


def canonical_frame(u1, u2, u3, u4) -> DirectionConfig:
    """Rigidly move four unit directions into the canonical frame.

    The rotation maps leg 1 to (1, 0, 0) and leg 2 into the xy-plane with
    positive y.  If leg 3 then points below the plane it is mirrored back
    (z -> -z), which preserves every pairwise angle; when leg 3 is in-plane
    the mirror convention falls through to leg 4.  The result is a
    deterministic function of the input.

    Raises DegenerateFrame when legs 1 and 2 are (anti-)parallel.
    """
    u = np.vstack([as_unit(u1), as_unit(u2), as_unit(u3), as_unit(u4)])
    c12 = float(u[0] @ u[1])
    if abs(c12) >= 1.0 - FRAME_EPS:
        raise DegenerateFrame("legs 1 and 2 are parallel or anti-parallel")
    e1 = u[0] / np.linalg.norm(u[0])
    perp = u[1] - (u[1] @ e1) * e1
    e2 = perp / np.linalg.norm(perp)
    e3 = np.cross(e1, e2)
    rotated = u @ np.vstack([e1, e2, e3]).T
    if rotated[2, 2] < -INPLANE_EPS or (
        abs(rotated[2, 2]) <= INPLANE_EPS and rotated[3, 2] < -INPLANE_EPS
    ):
        rotated[:, 2] = -rotated[:, 2]
    return _config_from_canonical_rows(rotated)


def leg_directions(tetra: Tetrahedron, point) -> np.ndarray:
    """Unit vectors from a point toward each vertex, as rows."""
    p = as_point(point)
    return np.vstack([unit_vector(p, tetra.vertices[i]) for i in range(4)])


def direction_config(tetra: Tetrahedron, point) -> DirectionConfig:
    """Canonical direction configuration seen from a point inside a
    tetrahedron."""
    u = leg_directions(tetra, point)
    return canonical_frame(u[0], u[1], u[2], u[3])
