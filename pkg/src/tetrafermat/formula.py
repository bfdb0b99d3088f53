"""The sixth angle from five: four rays meeting at a point are pinned, up to
rigid motion and one mirror, by five of their six pairwise angles.

The missing cosine follows from a closed expression with a square-root
ambiguity: the radical's sign encodes whether legs 3 and 4 lie on the same
side of the plane spanned by legs 1 and 2.  ``sixth_angle`` evaluates both
branches; ``resolve_branch`` reads the correct sign off an actual
configuration; ``config_from_five_angles`` rebuilds the rays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBaseAngle, InfeasiblePair, UnrealizableTriple
from .geometry import DirectionConfig, _config_from_canonical_rows

#: a positive radical factor beyond this margin means an unrealizable triple
GRAM_TOL = 1e-9
#: sin(a102) at or below this leaves the frame equations singular
MIN_BASE_SIN = 1e-9
#: |cos| may exceed 1 by at most this and still count as realizable
REALIZABLE_TOL = 1e-9
#: triple products with product magnitude below this give branch 0
BRANCH_EPS = 1e-12


def _check_range(name: str, value: float) -> float:
    v = float(value)
    if not 0.0 < v < math.pi:
        raise ValueError(f"{name} must lie strictly between 0 and pi, got {v!r}")
    return v


@dataclass(frozen=True)
class FiveAngles:
    """Five of the six leg-pair angles: all pairs except legs 3 and 4."""

    a102: float
    a103: float
    a104: float
    a203: float
    a204: float

    def __post_init__(self):
        for name in ("a102", "a103", "a104", "a203", "a204"):
            _check_range(name, getattr(self, name))


@dataclass(frozen=True)
class SixthAngleResult:
    """Both branches of the leg-3/leg-4 angle cosine.

    ``b_magnitude`` is the non-negative radical; ``cos_plus`` and
    ``cos_minus`` evaluate the formula with +b and -b (so cos_plus >=
    cos_minus always).  Values are reported unclamped; a branch whose
    cosine leaves [-1, 1] by more than a rounding margin is flagged
    unrealizable.
    """

    b_magnitude: float
    cos_plus: float
    cos_minus: float
    realizable_plus: bool
    realizable_minus: bool

    def cosine(self, branch: int) -> float:
        if branch not in (1, -1):
            raise ValueError(f"branch must be +1 or -1, got {branch!r}")
        return self.cos_plus if branch == 1 else self.cos_minus

    def angle(self, branch: int) -> float:
        return math.acos(min(1.0, max(-1.0, self.cosine(branch))))


def radical_factor(a102: float, a10i: float, a20i: float) -> float:
    """One factor under the radical:
    1 + cos 2*a102 + cos 2*a10i + cos 2*a20i - 4 cos a102 cos a10i cos a20i.

    Equals -2 times the Gram determinant of the three unit legs, so it is
    non-positive exactly when the angle triple is realizable.
    """
    return (
        1.0
        + math.cos(2.0 * a102)
        + math.cos(2.0 * a10i)
        + math.cos(2.0 * a20i)
        - 4.0 * math.cos(a102) * math.cos(a10i) * math.cos(a20i)
    )


def sixth_angle(fa: FiveAngles) -> SixthAngleResult:
    """Evaluate the sixth-angle cosine for both signs of the radical.

    Raises UnrealizableTriple when either triple {a102, a10i, a20i} cannot
    come from unit vectors, and DegenerateBaseAngle when sin(a102) vanishes.
    """
    s = math.sin(fa.a102)
    if s <= MIN_BASE_SIN:
        raise DegenerateBaseAngle(
            f"sin(a102) = {s:.3e} is too small for the frame equations"
        )
    f3 = radical_factor(fa.a102, fa.a103, fa.a203)
    f4 = radical_factor(fa.a102, fa.a104, fa.a204)
    if f3 > GRAM_TOL or f4 > GRAM_TOL:
        raise UnrealizableTriple(
            f"radical factors must be non-positive, got {f3:.3e} and {f4:.3e}"
        )
    product = f3 * f4
    if product < 0.0:
        # one factor within the rounding margin of zero on the wrong side
        product = 0.0
    b = math.sqrt(product)
    csc2 = 1.0 / (s * s)

    def evaluate(signed_b: float) -> float:
        return 0.25 * (
            4.0 * math.cos(fa.a103)
            * (math.cos(fa.a104) - math.cos(fa.a102) * math.cos(fa.a204))
            + 2.0 * (
                signed_b
                + 2.0 * math.cos(fa.a203)
                * (-math.cos(fa.a102) * math.cos(fa.a104) + math.cos(fa.a204))
            )
        ) * csc2

    cos_plus = evaluate(b)
    cos_minus = evaluate(-b)
    return SixthAngleResult(
        b_magnitude=b,
        cos_plus=cos_plus,
        cos_minus=cos_minus,
        realizable_plus=abs(cos_plus) <= 1.0 + REALIZABLE_TOL,
        realizable_minus=abs(cos_minus) <= 1.0 + REALIZABLE_TOL,
    )


def resolve_branch(config: DirectionConfig) -> int:
    """Radical sign realized by an actual configuration.

    Returns the sign of the product of the two triple products
    det(u1, u2, u3) and det(u1, u2, u4): +1 when legs 3 and 4 sit on the
    same side of the leg-1/leg-2 plane, -1 on opposite sides, 0 when either
    is in-plane (within BRANCH_EPS on the product).
    """
    u = config.units
    t3 = float(np.linalg.det(u[[0, 1, 2]]))
    t4 = float(np.linalg.det(u[[0, 1, 3]]))
    p = t3 * t4
    if abs(p) < BRANCH_EPS:
        return 0
    return 1 if p > 0.0 else -1


def _leg_from_angles(a102: float, a10i: float, a20i: float, s: float):
    """Cartesian leg with the two prescribed cosines against legs 1 and 2;
    returns (x, y, z*z) with the z sign left to the caller."""
    x = math.cos(a10i)
    y = (math.cos(a20i) - math.cos(a102) * x) / s
    return x, y, 1.0 - x * x - y * y


def config_from_five_angles(fa: FiveAngles, branch: int) -> DirectionConfig:
    """Rebuild a canonical direction configuration from five angles.

    Leg 3 takes the non-negative z root; leg 4's z sign is set so the
    configuration realizes the requested radical branch.  Raises
    UnrealizableTriple when a z*z comes out negative beyond tolerance.
    """
    if branch not in (1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch!r}")
    s = math.sin(fa.a102)
    if s <= MIN_BASE_SIN:
        raise DegenerateBaseAngle(
            f"sin(a102) = {s:.3e} is too small for the frame equations"
        )
    x3, y3, z3sq = _leg_from_angles(fa.a102, fa.a103, fa.a203, s)
    x4, y4, z4sq = _leg_from_angles(fa.a102, fa.a104, fa.a204, s)
    if z3sq < -GRAM_TOL or z4sq < -GRAM_TOL:
        raise UnrealizableTriple(
            f"no real z component: z3^2 = {z3sq:.3e}, z4^2 = {z4sq:.3e}"
        )
    z3 = math.sqrt(max(z3sq, 0.0))
    z4 = branch * math.sqrt(max(z4sq, 0.0))
    rows = np.array(
        [
            [1.0, 0.0, 0.0],
            [math.cos(fa.a102), s, 0.0],
            [x3, y3, z3],
            [x4, y4, z4],
        ]
    )
    # clamped roots can leave a row marginally short of unit length
    rows[2] /= np.linalg.norm(rows[2])
    rows[3] /= np.linalg.norm(rows[3])
    return _config_from_canonical_rows(rows)


def ft_substitution_residual(a102: float, a203: float) -> float:
    """How far an angle pair is from satisfying the closed sixth-angle
    relation after the interior-minimizer substitutions.

    The opposite-angle identities collapse the six angles to (a102, a203)
    plus an induced a103 from the cosine-sum identity; the residual is the
    smaller branch distance |cos(sixth) - cos(a102)|.  Pairs realized by an
    actual interior minimizer give (numerically) zero, which exhibits the
    implicit relation between a102 and a203.

    Raises InfeasiblePair when no induced a103 exists.
    """
    a102 = _check_range("a102", a102)
    a203 = _check_range("a203", a203)
    c = -(1.0 + math.cos(a102) + math.cos(a203))
    if not -1.0 < c < 1.0:
        raise InfeasiblePair(
            f"induced cosine {c:.6f} is outside (-1, 1); the pair admits no "
            "third angle under the cosine-sum identity"
        )
    a103 = math.acos(c)
    fa = FiveAngles(a102=a102, a103=a103, a104=a203, a203=a203, a204=a103)
    result = sixth_angle(fa)
    target = math.cos(a102)
    return min(abs(result.cos_plus - target), abs(result.cos_minus - target))
