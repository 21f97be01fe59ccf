"""Regions that contain every zero of a monic quaternionic polynomial.

All radii depend only on coefficient norms, so they hold for both
coefficient sides.  Coefficients are indexed in ascending powers
(``a_0`` constant) except in :func:`feasible_r` and :func:`rather_region`,
which use the descending convention ``b_k = a_{n-k}``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .oracle import ZeroClass, ZeroKind
from .polynomial import QPolynomial
from .quaternion import ZERO, Quaternion, norm, similarity_data, unit_pure_samples

__all__ = [
    "HolderPair",
    "RegionKind",
    "BoundRegion",
    "Verdict",
    "cauchy_bound",
    "kmt_bound",
    "kmt_bound_simplified",
    "euclidean_bound",
    "montel_bound",
    "feasible_r",
    "rather_region",
    "region_contains",
    "ball_contains",
    "sphere_max_distance",
    "proof_lower_bound",
    "all_origin_bounds",
]

CONTAIN_RTOL = 1e-9
SPLIT_SPHERE_SAMPLES = 1024
FEASIBLE_R_FLOOR = 1e-9


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents ``r, s > 1`` with ``1/r + 1/s = 1``."""

    r: float
    s: float

    def __post_init__(self):
        if not (self.r > 1.0 and self.s > 1.0):
            raise ValueError(f"Hölder exponents must exceed 1, got ({self.r}, {self.s})")
        if abs(1.0 / self.r + 1.0 / self.s - 1.0) > 1e-12:
            raise ValueError(f"1/r + 1/s must equal 1, got ({self.r}, {self.s})")

    @classmethod
    def from_r(cls, r: float) -> HolderPair:
        return cls(r, r / (r - 1.0))

    @classmethod
    def parse(cls, text: str) -> HolderPair:
        r, s = (float(t) for t in text.split(","))
        return cls(r, s)

    def __str__(self):
        return f"{self.r:g},{self.s:g}"


class RegionKind(enum.Enum):
    ORIGIN_BALL = "origin_ball"
    UNION_TWO_BALLS = "union"


@dataclass(frozen=True)
class BoundRegion:
    """Closed origin ball, or the union of an origin ball and a shifted ball."""

    kind: RegionKind
    label: str
    radius: float = 0.0
    center2: Quaternion | None = None
    radius2: float = 0.0

    def __post_init__(self):
        if self.radius < 0.0 or self.radius2 < 0.0 or math.isnan(self.radius):
            raise ValueError("radii must be non-negative")
        if self.kind is RegionKind.UNION_TWO_BALLS and self.center2 is None:
            raise ValueError("a union region needs center2")

    @classmethod
    def ball(cls, radius: float, label: str) -> BoundRegion:
        return cls(RegionKind.ORIGIN_BALL, label, float(radius))

    @classmethod
    def union(cls, radius1: float, center2: Quaternion, radius2: float,
              label: str = "theorem_e") -> BoundRegion:
        return cls(RegionKind.UNION_TWO_BALLS, label, float(radius1),
                   Quaternion.from_any(center2), float(radius2))

    @property
    def radius1(self) -> float:
        return self.radius

    def to_json(self) -> dict:
        if self.kind is RegionKind.ORIGIN_BALL:
            return {"label": self.label, "kind": "origin_ball", "radius": self.radius}
        return {"label": self.label, "kind": "union", "radius1": self.radius,
                "center2": list(self.center2), "radius2": self.radius2}

    @classmethod
    def from_json(cls, obj: dict) -> BoundRegion:
        if obj["kind"] == "origin_ball":
            return cls.ball(obj["radius"], obj["label"])
        if obj["kind"] == "union":
            return cls.union(obj["radius1"], obj["center2"], obj["radius2"], obj["label"])
        raise ValueError(f"unknown region kind {obj['kind']!r}")


class Verdict(enum.Enum):
    CONTAINED = "contained"
    SAMPLED_CONTAINED = "sampled_contained"
    NOT_CONTAINED = "not_contained"

    @property
    def ok(self) -> bool:
        return self is not Verdict.NOT_CONTAINED


# ---------------------------------------------------------------------------
# origin-centred balls

def _lp_norm(values, r):
    # (sum v^r)^(1/r) without overflow for large r
    top = max(values, default=0.0)
    if top == 0.0:
        return 0.0
    return top * math.fsum((v / top) ** r for v in values) ** (1.0 / r)


def cauchy_bound(p: QPolynomial) -> BoundRegion:
    return BoundRegion.ball(1.0 + max(p.coeff_norms()), "cauchy")


def kmt_bound(p: QPolynomial, h: HolderPair = HolderPair(2.0, 2.0)) -> BoundRegion:
    """Ball of radius ``(1 + (sum_v |a_v|^r)^(s/r))^(1/s)``.

    The ``r``-norm is evaluated with the largest coefficient factored out,
    so very large ``r`` (approaching the Cauchy radius) does not overflow.
    """
    a_r = _lp_norm(p.coeff_norms(), h.r)
    radius = (1.0 + a_r ** h.s) ** (1.0 / h.s)
    return BoundRegion.ball(radius, f"kmt({h})")


def kmt_bound_simplified(p: QPolynomial, h: HolderPair = HolderPair(2.0, 2.0)) -> BoundRegion:
    """Coarser ball of radius ``(1 + n^(s/r) M^s)^(1/s)``, ``M`` the largest coefficient norm."""
    m = max(p.coeff_norms())
    radius = (1.0 + p.degree ** (h.s / h.r) * m ** h.s) ** (1.0 / h.s)
    return BoundRegion.ball(radius, f"kmt_simplified({h})")


def euclidean_bound(p: QPolynomial) -> BoundRegion:
    # same arithmetic as kmt_bound at (2, 2), so the radii agree bit for bit
    return BoundRegion.ball(kmt_bound(p, HolderPair(2.0, 2.0)).radius, "euclidean")


def montel_bound(p: QPolynomial) -> BoundRegion:
    """Ball of radius ``max(L, L^(1/n))`` with ``L`` the sum of coefficient norms.

    ``p = q^n`` gives ``L = 0`` and the degenerate radius 0.
    """
    total = math.fsum(p.coeff_norms())
    return BoundRegion.ball(max(total, total ** (1.0 / p.degree)), "montel")


# ---------------------------------------------------------------------------
# union of two balls

def _descending_norms(p):
    # |b_k| for k = 0..n with b_k = a_{n-k}
    return [norm(a) for a in reversed(p.coeffs)]


def feasible_r(p: QPolynomial) -> float | None:
    """Smallest ``r`` making ``|b_k| / r^k`` non-increasing for ``k = 2..n``.

    Returns ``None`` when no ``r`` works, which happens exactly when some
    ``b_k`` (``k >= 2``) vanishes while ``b_{k+1}`` does not.  A run of zero
    trailing coefficients is admissible.  The result is floored at ``1e-9``.
    """
    n = p.degree
    if n < 2:
        raise ValueError("the two-ball region needs degree >= 2")
    b = _descending_norms(p)
    r = FEASIBLE_R_FLOOR
    for k in range(2, n):
        if b[k] == 0.0:
            if b[k + 1] != 0.0:
                return None
            continue
        r = max(r, b[k + 1] / b[k])
    return r


def _ordering_holds(b, r):
    alphas = [b[k] / r ** k for k in range(2, len(b))]
    return all(x >= y * (1.0 - 1e-12) for x, y in zip(alphas, alphas[1:]))


def rather_region(p: QPolynomial, r: float) -> BoundRegion:
    """Union of ``|q| <= r (1 + |b_2| / r^2)`` and ``|q + b_1| <= r``.

    Raises
    ------
    ValueError
        If ``r <= 0`` or the ratios ``|b_k| / r^k`` are not non-increasing.
    """
    if p.degree < 2:
        raise ValueError("the two-ball region needs degree >= 2")
    if not r > 0.0:
        raise ValueError(f"r must be positive, got {r}")
    b = _descending_norms(p)
    if not _ordering_holds(b, r):
        raise ValueError(f"r={r} violates the required ordering of |b_k|/r^k")
    b1 = p.coeffs[-2]
    radius1 = r * (1.0 + b[2] / (r * r))
    return BoundRegion.union(radius1, -b1, r)


# ---------------------------------------------------------------------------
# membership

def _tol(radius, rtol):
    return rtol * (1.0 + radius)


def sphere_max_distance(d: Quaternion, im_radius: float) -> float:
    """``max_u |d + im_radius u|`` over unit pure ``u``, in closed form."""
    re, im = similarity_data(d)
    return math.hypot(re, im + im_radius)


def ball_contains(center: Quaternion, radius: float, zc: ZeroClass,
                  rtol: float = CONTAIN_RTOL) -> bool:
    """Whether the whole zero class lies in one closed ball."""
    tol = _tol(radius, rtol)
    if zc.kind is ZeroKind.ISOLATED:
        return norm(zc.point - center) <= radius + tol
    return sphere_max_distance(Quaternion(zc.re) - center, zc.im_radius) <= radius + tol


def region_contains(reg: BoundRegion, zc: ZeroClass, rtol: float = CONTAIN_RTOL) -> Verdict:
    """Check a zero class against a region.

    Origin balls and isolated zeros are decided exactly.  A sphere that fits
    in neither ball of a union on its own is probed at 1024 fixed points;
    all inside gives ``SAMPLED_CONTAINED``.
    """
    if reg.kind is RegionKind.ORIGIN_BALL:
        ok = zc.norm <= reg.radius + _tol(reg.radius, rtol)
        return Verdict.CONTAINED if ok else Verdict.NOT_CONTAINED

    if ball_contains(ZERO, reg.radius, zc, rtol) or ball_contains(reg.center2, reg.radius2, zc, rtol):
        return Verdict.CONTAINED
    if zc.kind is ZeroKind.ISOLATED:
        return Verdict.NOT_CONTAINED
    lim1 = reg.radius + _tol(reg.radius, rtol)
    lim2 = reg.radius2 + _tol(reg.radius2, rtol)
    for pt in zc.points(SPLIT_SPHERE_SAMPLES):
        if norm(pt) > lim1 and norm(pt - reg.center2) > lim2:
            return Verdict.NOT_CONTAINED
    return Verdict.SAMPLED_CONTAINED


# ---------------------------------------------------------------------------

def proof_lower_bound(p: QPolynomial, q: Quaternion, h: HolderPair) -> float:
    """Lower bound ``|q|^n (1 - A_r / (|q|^s - 1)^(1/s))`` on ``|p(q)|``, for ``|q| > 1``.

    ``A_r`` is the ``r``-norm of the coefficient norms.  Where the value is
    positive it certifies that ``q`` is not a zero.
    """
    m = norm(Quaternion.from_any(q))
    if not m > 1.0:
        raise ValueError("the estimate needs |q| > 1")
    a_r = _lp_norm(p.coeff_norms(), h.r)
    return m ** p.degree * (1.0 - a_r / (m ** h.s - 1.0) ** (1.0 / h.s))


def all_origin_bounds(p: QPolynomial, holder_pairs=(HolderPair(2.0, 2.0),)) -> list[BoundRegion]:
    """Every origin-centred ball, one kmt pair per Hölder pair."""
    out = [cauchy_bound(p)]
    for h in holder_pairs:
        out.append(kmt_bound(p, h))
        out.append(kmt_bound_simplified(p, h))
    out.append(euclidean_bound(p))
    out.append(montel_bound(p))
    return out
