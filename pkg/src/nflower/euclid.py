"""Euclidean circle primitives, n-flower layout, and inversion in the unit circle.

An n-flower is a central circle with n petal circles externally tangent to it
in cyclic order, each petal also tangent to its two neighbours.  The central
radius is pinned down by the petal radii alone: the angles subtended at the
central center by consecutive petal pairs must sum to a full turn.  That
angle-sum function is strictly decreasing in the central radius, so a bisection
finds the unique solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

TWO_PI = 2.0 * math.pi

# Absolute tolerance on center-distance residuals for O(1)-scale flowers.
TANGENCY_TOL = 1e-9

_MAX_BRACKET_DOUBLINGS = 1000


class NumericFailure(ArithmeticError):
    """A numerical procedure lost its bracket, failed to converge, or
    produced a result that violates a cross-check."""


@dataclass(frozen=True)
class Circle:
    """Circle in the Euclidean plane by center (cx, cy) and radius r > 0."""

    cx: float
    cy: float
    r: float

    def __post_init__(self):
        if not (math.isfinite(self.cx) and math.isfinite(self.cy) and math.isfinite(self.r)):
            raise ValueError("circle parameters must be finite")
        if self.r <= 0.0:
            raise ValueError(f"circle radius must be positive, got {self.r}")

    @property
    def curvature(self) -> float:
        return 1.0 / self.r

    def center_distance(self, other: "Circle") -> float:
        return math.hypot(self.cx - other.cx, self.cy - other.cy)


@dataclass(frozen=True)
class FlowerSpec:
    """Curvature data of an n-flower: n petal curvatures, optionally the
    central curvature.

    Petal curvature 0 (a straight-line petal, as in the Ford configuration)
    is admitted here for the algebraic layer; the geometric layout functions
    work with radii and therefore need strictly positive curvatures.
    """

    petal_curvatures: tuple[float, ...]
    central_curvature: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "petal_curvatures", tuple(float(k) for k in self.petal_curvatures))
        if len(self.petal_curvatures) < 3:
            raise ValueError("a flower needs at least 3 petals")
        for k in self.petal_curvatures:
            if not math.isfinite(k) or k < 0.0:
                raise ValueError(f"petal curvatures must be finite and >= 0, got {k}")
        if self.central_curvature is not None:
            kc = float(self.central_curvature)
            if not math.isfinite(kc) or kc <= 0.0:
                raise ValueError(f"central curvature must be positive, got {kc}")
            object.__setattr__(self, "central_curvature", kc)

    @property
    def n(self) -> int:
        return len(self.petal_curvatures)


@dataclass(frozen=True)
class FlowerLayout:
    """A realized flower: central circle, petals in cyclic order, and the
    central angles between consecutive petal centers."""

    central: Circle
    petals: tuple[Circle, ...]
    gap_angles: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "petals", tuple(self.petals))
        object.__setattr__(self, "gap_angles", tuple(float(a) for a in self.gap_angles))
        if len(self.petals) < 3:
            raise ValueError("a flower needs at least 3 petals")
        if len(self.gap_angles) != len(self.petals):
            raise ValueError("need one gap angle per petal")

    @property
    def n(self) -> int:
        return len(self.petals)


def angle_gap(R: float, r_a: float, r_b: float) -> float:
    """Central angle between the centers of two petals of radii r_a, r_b,
    both tangent to a central circle of radius R and to each other.

    Law of cosines on the triangle with sides R+r_a, R+r_b, r_a+r_b.
    """
    if R <= 0.0 or r_a <= 0.0 or r_b <= 0.0:
        raise ValueError("angle_gap needs positive radii")
    sa = R + r_a
    sb = R + r_b
    c = (sa * sa + sb * sb - (r_a + r_b) ** 2) / (2.0 * sa * sb)
    # Rounding can push the ratio a hair outside [-1, 1] at extreme R.
    c = min(1.0, max(-1.0, c))
    return math.acos(c)


def angle_sum(R: float, petal_radii: Sequence[float]) -> float:
    """Sum of angle_gap over consecutive petal pairs (cyclic)."""
    n = len(petal_radii)
    return sum(angle_gap(R, petal_radii[j], petal_radii[(j + 1) % n]) for j in range(n))


def solve_central_radius(petal_radii: Sequence[float], tol: float = 1e-12) -> float:
    """Radius of the central circle around which the given petals close up.

    Bisection on the strictly decreasing angle-sum function, starting from the
    bracket [min(r) * 1e-6, sum(r) * 1e6] and run down to machine precision.
    `tol` is the accepted residual of the angle sum against a full turn.
    """
    radii = [float(r) for r in petal_radii]
    if len(radii) < 3:
        raise ValueError("a flower needs at least 3 petals")
    if any(not math.isfinite(r) or r <= 0.0 for r in radii):
        raise ValueError("petal radii must be positive and finite")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    lo = min(radii) * 1e-6
    hi = sum(radii) * 1e6
    flo = angle_sum(lo, radii) - TWO_PI
    fhi = angle_sum(hi, radii) - TWO_PI
    if not (math.isfinite(flo) and math.isfinite(fhi)):
        raise NumericFailure("angle sum is not finite; NaN propagation in the bracket")
    doublings = 0
    while flo <= 0.0:
        lo *= 0.5
        flo = angle_sum(lo, radii) - TWO_PI
        doublings += 1
        if doublings > _MAX_BRACKET_DOUBLINGS:
            raise NumericFailure("bracket expansion failed at the lower end")
    while fhi >= 0.0:
        hi *= 2.0
        fhi = angle_sum(hi, radii) - TWO_PI
        doublings += 1
        if doublings > _MAX_BRACKET_DOUBLINGS:
            raise NumericFailure("bracket expansion failed at the upper end")

    for _ in range(300):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # interval exhausted at float resolution
        if angle_sum(mid, radii) - TWO_PI > 0.0:
            lo = mid
        else:
            hi = mid
    R = 0.5 * (lo + hi)
    residual = angle_sum(R, radii) - TWO_PI
    if not abs(residual) <= tol:  # also catches NaN
        raise NumericFailure(f"angle sum residual {residual:.3e} exceeds tol {tol:.3e}")
    return R


def layout_flower(petal_radii: Sequence[float], tol: float = 1e-12) -> FlowerLayout:
    """Lay out the flower with the central circle at the origin.

    Petal j sits at polar angle sum(gap_angles[:j]) and distance R + r_j.
    """
    radii = [float(r) for r in petal_radii]
    R = solve_central_radius(radii, tol)
    n = len(radii)
    gaps = [angle_gap(R, radii[j], radii[(j + 1) % n]) for j in range(n)]
    petals = []
    theta = 0.0
    for j in range(n):
        d = R + radii[j]
        petals.append(Circle(d * math.cos(theta), d * math.sin(theta), radii[j]))
        theta += gaps[j]
    return FlowerLayout(Circle(0.0, 0.0, R), tuple(petals), tuple(gaps))


def tangency_residuals(central: Circle, petals: Sequence[Circle]) -> tuple[list[float], list[float]]:
    """Center-distance residuals of a purported flower.

    Returns (central tangency residuals, consecutive petal tangency residuals
    including the wrap-around pair); all are zero for an exact flower.
    """
    n = len(petals)
    cen = [central.center_distance(p) - (central.r + p.r) for p in petals]
    adj = [
        petals[j].center_distance(petals[(j + 1) % n]) - (petals[j].r + petals[(j + 1) % n].r)
        for j in range(n)
    ]
    return cen, adj


def validate_flower(layout: FlowerLayout, tol: float = TANGENCY_TOL) -> bool:
    """Check the adjacency tangencies and the gap-angle sum of a layout."""
    cen, adj = tangency_residuals(layout.central, layout.petals)
    if any(abs(x) > tol for x in cen) or any(abs(x) > tol for x in adj):
        return False
    return abs(sum(layout.gap_angles) - TWO_PI) <= tol


def invert_in_unit_circle(c: Circle) -> Circle:
    """Image of a circle under inversion in the unit circle at the origin.

    The image circle has center c/(|c|^2 - r^2) and radius r/||c|^2 - r^2|.
    Circles through the origin map to lines and are rejected.
    """
    d = c.cx * c.cx + c.cy * c.cy - c.r * c.r
    if abs(d) <= 1e-15 * (c.cx * c.cx + c.cy * c.cy + c.r * c.r):
        raise ValueError("circle passes through the origin; image is a line")
    return Circle(c.cx / d, c.cy / d, c.r / abs(d))


def inverted_flower(layout: FlowerLayout, tol: float = TANGENCY_TOL) -> list[Circle]:
    """Invert the petals of a unit-central layout in the central circle.

    Each image is internally tangent to the unit circle, with curvature equal
    to the petal curvature plus 2.  The caller rescales the layout so that the
    central circle is the unit circle at the origin.
    """
    cen = layout.central
    if abs(cen.r - 1.0) > tol or math.hypot(cen.cx, cen.cy) > tol:
        raise ValueError("layout must be normalized to a unit central circle at the origin")
    return [invert_in_unit_circle(p) for p in layout.petals]


def classic_descartes_residual(k_inf: float, k1: float, k2: float, k3: float) -> float:
    """Residual of the Descartes circle relation for a 3-flower:
    (k_inf + k1 + k2 + k3)^2 - 2 (k_inf^2 + k1^2 + k2^2 + k3^2)."""
    s = k_inf + k1 + k2 + k3
    return s * s - 2.0 * (k_inf * k_inf + k1 * k1 + k2 * k2 + k3 * k3)


def classic_descartes_scale(k_inf: float, k1: float, k2: float, k3: float) -> float:
    """Magnitude of the terms of the Descartes relation, for relative checks."""
    s = abs(k_inf) + abs(k1) + abs(k2) + abs(k3)
    return s * s + 2.0 * (k_inf * k_inf + k1 * k1 + k2 * k2 + k3 * k3)


def four_flower_poly_residual(k_inf: float, k1: float, k2: float, k3: float, k4: float) -> float:
    """Residual of the degree-4 curvature relation for a 4-flower."""
    return (
        16.0 * k_inf**4
        - 8.0 * k_inf**2 * (k1 * k2 + k2 * k3 + k3 * k4 + k4 * k1 + 2.0 * k1 * k3 + 2.0 * k2 * k4)
        + (k1 * k1 + k3 * k3) * (k2 * k2 + k4 * k4)
        - 16.0 * k_inf * (k1 * k2 * k3 + k2 * k3 * k4 + k3 * k4 * k1 + k4 * k1 * k2)
        - 12.0 * k1 * k2 * k3 * k4
        - 2.0 * (k1 * k2 + k3 * k4) * (k2 * k3 + k4 * k1)
    )


def four_flower_poly_scale(k_inf: float, k1: float, k2: float, k3: float, k4: float) -> float:
    """Magnitude of the terms of the 4-flower relation, for relative checks."""
    a1, a2, a3, a4 = abs(k1), abs(k2), abs(k3), abs(k4)
    return (
        16.0 * k_inf**4
        + 8.0 * k_inf**2 * (a1 * a2 + a2 * a3 + a3 * a4 + a4 * a1 + 2.0 * a1 * a3 + 2.0 * a2 * a4)
        + (a1 * a1 + a3 * a3) * (a2 * a2 + a4 * a4)
        + 16.0 * abs(k_inf) * (a1 * a2 * a3 + a2 * a3 * a4 + a3 * a4 * a1 + a4 * a1 * a2)
        + 12.0 * a1 * a2 * a3 * a4
        + 2.0 * (a1 * a2 + a3 * a4) * (a2 * a3 + a4 * a1)
    )
