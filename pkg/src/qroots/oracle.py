"""Zeros of one-sided quaternionic polynomials.

The zeros are found independently of every bound: the real companion
polynomial is solved with a simultaneous Aberth-Ehrlich iteration, and each
complex root ``alpha + i beta`` is then resolved into the quaternionic zeros
lying in its similarity class ``{alpha + beta u : u unit pure}``.  On that
class ``q**2 = 2 alpha q - (alpha**2 + beta**2)``, so every power reduces to
``A_v + B_v q`` with real ``A_v, B_v`` and a RIGHT polynomial collapses to
``c + q d``.  Either ``d`` is invertible and the class holds the single zero
``-c d^-1``, or ``c = d = 0`` and the whole class (a sphere) is zero.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .polynomial import (
    COMPANION_RTOL,
    CompanionError,
    QPolynomial,
    RealPolynomial,
    Side,
    companion_with_defect,
    evaluate,
    to_side,
)
from .quaternion import Quaternion, conj, inverse, mul, norm, similarity_data, unit_pure_samples

__all__ = [
    "ZeroKind",
    "ZeroClass",
    "ComplexRoot",
    "ConvergenceError",
    "OracleInconsistency",
    "OracleResult",
    "real_poly_roots",
    "class_to_zero",
    "all_zeros",
    "solve",
    "eval_tolerance",
    "sphere_residual",
]

MAX_ITER = 1000
RESIDUAL_RTOL = 1e-12
CLUSTER_TOL = 1e-7
SIMILARITY_TOL = 1e-6
SPHERE_CHECK_POINTS = 16
MAX_DEGREE = 16


class ConvergenceError(RuntimeError):
    """The Aberth iteration hit its iteration cap.

    ``failed`` holds the approximations that never met the residual test.
    """

    def __init__(self, failed, iterations):
        self.failed = list(failed)
        self.iterations = iterations
        super().__init__(
            f"{len(self.failed)} root(s) unconverged after {iterations} iterations: "
            + ", ".join(f"{z:.6g}" for z in self.failed)
        )


class OracleInconsistency(ArithmeticError):
    """A companion root whose similarity class could not be resolved to zeros."""

    def __init__(self, root, reason):
        self.root = root
        self.reason = reason
        super().__init__(f"root ({root.re:.12g}, {root.im:.12g}): {reason}")


class ZeroKind(enum.Enum):
    ISOLATED = "isolated"
    SPHERICAL = "spherical"


@dataclass(frozen=True)
class ComplexRoot:
    re: float
    im: float
    multiplicity: int = 1

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


@dataclass(frozen=True)
class ZeroClass:
    """An isolated zero or a whole sphere of zeros.

    A spherical class is ``{re + im_radius * u : u unit pure quaternion}``.
    For an isolated zero ``re``/``im_radius`` carry the point's similarity
    data.  ``residual`` is the largest evaluation norm observed.
    """

    kind: ZeroKind
    re: float
    im_radius: float
    point: Quaternion | None = None
    residual: float = 0.0

    def __post_init__(self):
        if self.kind is ZeroKind.SPHERICAL and not self.im_radius > 0.0:
            raise ValueError("a spherical zero needs im_radius > 0")
        if self.kind is ZeroKind.ISOLATED and self.point is None:
            raise ValueError("an isolated zero needs a point")

    @classmethod
    def isolated(cls, point: Quaternion, residual: float = 0.0) -> ZeroClass:
        point = Quaternion.from_any(point)
        re, im = similarity_data(point)
        return cls(ZeroKind.ISOLATED, re, im, point, residual)

    @classmethod
    def spherical(cls, re: float, im_radius: float, residual: float = 0.0) -> ZeroClass:
        return cls(ZeroKind.SPHERICAL, float(re), float(im_radius), None, residual)

    @property
    def norm(self) -> float:
        """Norm shared by every point of the class."""
        if self.kind is ZeroKind.ISOLATED:
            return norm(self.point)
        return math.hypot(self.re, self.im_radius)

    def points(self, count: int = SPHERE_CHECK_POINTS) -> list[Quaternion]:
        if self.kind is ZeroKind.ISOLATED:
            return [self.point]
        return [Quaternion(self.re) + u * self.im_radius for u in unit_pure_samples(count)]

    def conjugated(self) -> ZeroClass:
        if self.kind is ZeroKind.ISOLATED:
            return ZeroClass.isolated(conj(self.point), self.residual)
        return self

    def to_json(self) -> dict:
        if self.kind is ZeroKind.ISOLATED:
            return {"kind": "isolated", "point": list(self.point), "residual": self.residual}
        return {"kind": "spherical", "re": self.re, "im_radius": self.im_radius,
                "residual": self.residual}

    @classmethod
    def from_json(cls, obj: dict) -> ZeroClass:
        kind = obj["kind"]
        if kind == "isolated":
            return cls.isolated(obj["point"], obj.get("residual", 0.0))
        if kind == "spherical":
            return cls.spherical(obj["re"], obj["im_radius"], obj.get("residual", 0.0))
        raise ValueError(f"unknown zero kind {kind!r}")


# ---------------------------------------------------------------------------
# real polynomial roots

def _scale(coeffs_desc_abs, r):
    # sum |b_m| max(1, |z|)^m, vectorized over |z|
    return np.polyval(coeffs_desc_abs, np.maximum(1.0, r))


def _aberth(desc, angle_offset):
    """Simultaneous Aberth-Ehrlich iteration on a monic polynomial (descending)."""
    n = len(desc) - 1
    ddesc = np.polyder(desc)
    absdesc = np.abs(desc)
    radius = 1.0 + np.max(np.abs(desc[1:]))  # Cauchy bound of the monic polynomial
    angles = 2.0 * np.pi * np.arange(n) / n + np.pi / (2.0 * n) + angle_offset
    z = radius * np.exp(1j * angles)
    active = np.ones(n, dtype=bool)
    for it in range(1, MAX_ITER + 1):
        pz = np.polyval(desc, z)
        done = np.abs(pz) <= RESIDUAL_RTOL * _scale(absdesc, np.abs(z))
        active &= ~done
        if not active.any():
            return z, it
        idx = np.flatnonzero(active)
        dpz = np.polyval(ddesc, z[idx])
        diff = z[idx, None] - z[None, :]
        diff[np.arange(len(idx)), idx] = 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            recip = 1.0 / diff
            recip[np.arange(len(idx)), idx] = 0.0
            s = recip.sum(axis=1)
            w = pz[idx] / dpz
            step = w / (1.0 - w * s)
        bad = ~np.isfinite(step)
        if bad.any():
            # stationary point or coincident estimates: nudge off it
            step[bad] = -1e-3 * (1.0 + np.abs(z[idx][bad])) * np.exp(1j * (it + 0.5))
        z[idx] = z[idx] - step
    pz = np.polyval(desc, z)
    failed = z[np.abs(pz) > RESIDUAL_RTOL * _scale(absdesc, np.abs(z))]
    raise ConvergenceError(failed, MAX_ITER)


def _clusters(desc, z):
    """Group approximations whose inclusion discs overlap or which nearly coincide."""
    n = len(z)
    pz = np.abs(np.polyval(desc, z))
    rho = np.empty(n)
    for k in range(n):
        others = np.delete(z, k)
        prod = np.prod(np.abs(z[k] - others)) if n > 1 else 1.0
        # 2x the Weierstrass inclusion radius: a double root's two estimates
        # otherwise sit exactly on the boundary of overlap
        rho[k] = 2.0 * n * pz[k] / prod if prod > 0.0 else np.inf
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(n):
        for b in range(a + 1, n):
            gap = abs(z[a] - z[b])
            near = CLUSTER_TOL * max(1.0, abs(z[a]), abs(z[b]))
            if gap <= near or gap <= rho[a] + rho[b]:
                parent[find(a)] = find(b)
    groups = {}
    for k in range(n):
        groups.setdefault(find(k), []).append(k)
    return [np.array(g) for g in groups.values()]


def _newton_polish(desc, z0, steps=4):
    """Newton on ``desc`` from ``z0``; keeps the best point by residual."""
    ddesc = np.polyder(desc)
    best, best_res = z0, abs(np.polyval(desc, z0))
    z = z0
    for _ in range(steps):
        d = np.polyval(ddesc, z)
        if d == 0:
            break
        z = z - np.polyval(desc, z) / d
        res = abs(np.polyval(desc, z))
        if res < best_res:
            best, best_res = z, res
    return best


def real_poly_roots(b: RealPolynomial, angle_offset: float = 0.0) -> list[ComplexRoot]:
    """All complex roots of a real polynomial, conjugate pairs folded.

    Parameters
    ----------
    b : RealPolynomial
        Ascending coefficients; the leading one must be nonzero.
    angle_offset : float
        Extra rotation of the initial circle of guesses.  The default gives
        the canonical deterministic run; change it only to retry after a
        :class:`ConvergenceError`.

    Returns
    -------
    list of ComplexRoot
        Roots with ``im >= 0``; a root with ``im > 0`` stands for the pair
        ``re +- i im``.  Approximations closer than ``1e-7`` (relative to
        ``max(1, |z|)``) or with overlapping inclusion discs are merged into
        one root whose multiplicity is the cluster size.

    Notes
    -----
    Exact zero roots (vanishing low-order coefficients) are split off before
    iterating.  A cluster's centre is its mean, refined by Newton steps on
    the derivative of order ``multiplicity - 1``, of which a genuine
    multiple root is a simple root.
    """
    coeffs = [float(c) for c in b.coeffs]
    if len(coeffs) < 2 or coeffs[-1] == 0.0:
        raise ValueError("need degree >= 1 and a nonzero leading coefficient")
    roots: list[ComplexRoot] = []
    zero_mult = 0
    while coeffs[zero_mult] == 0.0:
        zero_mult += 1
    if zero_mult:
        roots.append(ComplexRoot(0.0, 0.0, zero_mult))
    coeffs = coeffs[zero_mult:]
    if len(coeffs) == 1:
        return roots

    desc = np.array(coeffs[::-1]) / coeffs[-1]
    if len(desc) == 2:
        approx = np.array([-desc[1] + 0j])
    else:
        approx, _ = _aberth(desc, angle_offset)

    centres = []
    for group in _clusters(desc, approx):
        m = len(group)
        c = approx[group].mean()
        if m == 1:
            c = _newton_polish(desc, c)
        else:
            deriv = desc
            for _ in range(m - 1):
                deriv = np.polyder(deriv)
            refined = _newton_polish(deriv, c)
            spread = np.max(np.abs(approx[group] - c))
            if abs(refined - c) <= max(spread, CLUSTER_TOL * max(1.0, abs(c))):
                c = refined
        centres.append((complex(c), m))

    upper, lower = [], []
    for c, m in centres:
        tol = CLUSTER_TOL * max(1.0, abs(c))
        if abs(c.imag) <= tol:
            roots.append(ComplexRoot(c.real, 0.0, m))
        elif c.imag > 0:
            upper.append((c, m))
        else:
            lower.append((c, m))
    for c, m in upper:
        roots.append(ComplexRoot(c.real, c.imag, m))
    for c, m in lower:
        tol = CLUSTER_TOL * max(1.0, abs(c))
        if not any(abs(c.conjugate() - u) <= tol for u, _ in upper):
            roots.append(ComplexRoot(c.real, -c.imag, m))
    roots.sort(key=lambda r: (r.re, r.im))
    return roots


# ---------------------------------------------------------------------------
# similarity classes -> zeros

def eval_tolerance(p: QPolynomial) -> float:
    """Residual allowance ``1e-8 (1 + max_v |a_v|)`` over the non-leading coefficients."""
    return 1e-8 * (1.0 + max(p.coeff_norms()))


def sphere_residual(p: QPolynomial, re: float, im_radius: float,
                    count: int = SPHERE_CHECK_POINTS) -> float:
    """Largest ``|p(q)|`` over ``count`` fixed points of the sphere ``(re, im_radius)``."""
    base = Quaternion(re)
    return max(norm(evaluate(p, base + u * im_radius)) for u in unit_pure_samples(count))


def _power_reduction(alpha, beta, n):
    # q^v = A_v + B_v q on the class Re q = alpha, |q|^2 = alpha^2 + beta^2
    modsq = alpha * alpha + beta * beta
    A, B = [1.0], [0.0]
    for _ in range(n):
        a, b = A[-1], B[-1]
        A.append(-modsq * b)
        B.append(a + 2.0 * alpha * b)
    return A, B


def class_to_zero(p: QPolynomial, root: ComplexRoot) -> ZeroClass:
    """Resolve the similarity class of one companion root into zeros of ``p``.

    ``p`` must be a RIGHT polynomial; :func:`all_zeros` handles LEFT ones by
    conjugation.

    Raises
    ------
    OracleInconsistency
        If the class holds no zero consistent with the tolerances, for
        instance ``d`` vanishes while ``c`` does not.
    """
    if p.side is not Side.RIGHT:
        raise ValueError("class_to_zero expects a RIGHT polynomial")
    tol_eval = eval_tolerance(p)
    alpha, beta = float(root.re), float(root.im)
    if beta == 0.0:
        point = Quaternion(alpha)
        residual = norm(evaluate(p, point))
        if residual > tol_eval:
            raise OracleInconsistency(root, f"real candidate has residual {residual:.3g}")
        return ZeroClass.isolated(point, residual)

    A, B = _power_reduction(alpha, beta, p.degree)
    c = Quaternion()
    d = Quaternion()
    for a_v, x, y in zip(p.coeffs, A, B):
        c = c + a_v * x
        d = d + a_v * y
    tol_sing = 1e-9 * sum(abs(x) + abs(y) for x, y in zip(A, B)) * p.max_coeff_norm()
    if norm(d) > tol_sing:
        point = -mul(c, inverse(d))
        re, im = similarity_data(point)
        if abs(re - alpha) > SIMILARITY_TOL or abs(im - beta) > SIMILARITY_TOL:
            raise OracleInconsistency(
                root, f"recovered point {point} has similarity data ({re:.12g}, {im:.12g})")
        residual = norm(evaluate(p, point))
        if residual > tol_eval:
            raise OracleInconsistency(root, f"isolated candidate has residual {residual:.3g}")
        return ZeroClass.isolated(point, residual)
    if norm(c) <= tol_sing:
        residual = sphere_residual(p, alpha, beta)
        return ZeroClass.spherical(alpha, beta, residual)
    raise OracleInconsistency(root, f"d vanishes (|d|={norm(d):.3g}) but |c|={norm(c):.3g}")


@dataclass
class OracleResult:
    """Everything the oracle learned about one polynomial."""

    zeros: list[ZeroClass]
    roots: list[ComplexRoot]
    inconsistencies: list[OracleInconsistency] = field(default_factory=list)
    companion: RealPolynomial | None = None
    companion_defect: float = 0.0


def solve(p: QPolynomial, retries: int = 2) -> OracleResult:
    """Run the full pipeline and keep the bookkeeping.

    Every folded companion root ends up either as one :class:`ZeroClass` or
    as one entry of ``inconsistencies``.  On a :class:`ConvergenceError`
    the iteration is restarted from rotated initial guesses up to
    ``retries`` times before the error propagates.
    """
    if p.degree > MAX_DEGREE:
        raise ValueError(f"degree {p.degree} exceeds the supported maximum {MAX_DEGREE}")
    work = to_side(p, Side.RIGHT) if p.side is Side.LEFT else p
    b, defect = companion_with_defect(work)
    if defect > COMPANION_RTOL:
        raise CompanionError(f"companion coefficient not real (relative defect {defect:.3g})")

    for attempt in range(retries + 1):
        try:
            roots = real_poly_roots(b, angle_offset=0.37 * attempt)
            break
        except ConvergenceError:
            if attempt == retries:
                raise

    zeros, bad = [], []
    for root in roots:
        try:
            zc = class_to_zero(work, root)
        except OracleInconsistency as exc:
            bad.append(exc)
            continue
        if p.side is Side.LEFT:
            zc = zc.conjugated()
        zeros.append(zc)
    return OracleResult(_dedupe(zeros), roots, bad, b, defect)


def _dedupe(zeros):
    kept = []
    for zc in zeros:
        if any(zc.kind is k.kind
               and abs(zc.re - k.re) <= CLUSTER_TOL and abs(zc.im_radius - k.im_radius) <= CLUSTER_TOL
               for k in kept):
            continue
        kept.append(zc)
    return kept


def all_zeros(p: QPolynomial) -> list[ZeroClass]:
    """Zero classes of ``p``: isolated points and spheres.

    LEFT polynomials are solved through their conjugate RIGHT twin, whose
    zeros are the conjugates of the original ones.
    """
    return solve(p).zeros
