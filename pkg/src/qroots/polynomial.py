"""One-sided monic quaternionic polynomials.

Coefficients are stored in ascending powers, ``coeffs[0]`` being the
constant term.  A RIGHT polynomial is ``sum(q**v * a[v])`` (coefficients to
the right of the powers), a LEFT polynomial is ``sum(a[v] * q**v)``.
"""
from __future__ import annotations

import enum
import json
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .quaternion import ONE, ZERO, Quaternion, conj, inverse, mul, norm

__all__ = [
    "Side",
    "QPolynomial",
    "RealPolynomial",
    "CompanionError",
    "monic_normalize",
    "evaluate",
    "evaluate_naive",
    "companion",
    "to_side",
    "poly_from_json",
    "poly_to_json",
]

log = logging.getLogger(__name__)

# realness tolerance for companion coefficients, relative to sum |a_j||a_k|
COMPANION_RTOL = 1e-12


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> Side:
        return Side.RIGHT if self is Side.LEFT else Side.LEFT

    @classmethod
    def parse(cls, value) -> Side:
        if isinstance(value, Side):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"side must be 'left' or 'right', got {value!r}") from None


@dataclass(frozen=True)
class QPolynomial:
    """Monic polynomial with quaternion coefficients on one side.

    Build through :func:`monic_normalize` (or :meth:`from_coeffs`) unless the
    coefficients are already monic.
    """

    coeffs: tuple[Quaternion, ...]
    side: Side = Side.RIGHT

    def __post_init__(self):
        coeffs = tuple(Quaternion.from_any(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError("polynomial degree must be at least 1")
        if coeffs[-1] != ONE:
            raise ValueError("leading coefficient must be exactly 1; use monic_normalize")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "side", Side.parse(self.side))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, side=Side.RIGHT) -> QPolynomial:
        return monic_normalize([Quaternion.from_any(c) for c in coeffs], Side.parse(side))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lower(self) -> tuple[Quaternion, ...]:
        """Non-leading coefficients ``a_0 .. a_{n-1}``."""
        return self.coeffs[:-1]

    def coeff_norms(self) -> list[float]:
        """Norms of ``a_0 .. a_{n-1}``."""
        return [norm(a) for a in self.lower]

    def max_coeff_norm(self) -> float:
        """Largest coefficient norm including the leading 1."""
        return max(norm(a) for a in self.coeffs)

    def is_real(self) -> bool:
        return all(a[1] == a[2] == a[3] == 0.0 for a in self.coeffs)

    def __call__(self, q) -> Quaternion:
        return evaluate(self, Quaternion.from_any(q))

    def __str__(self):
        terms = []
        for v, a in enumerate(self.coeffs):
            if a == ZERO:
                continue
            power = "" if v == 0 else ("q" if v == 1 else f"q^{v}")
            if a == ONE and power:
                terms.append(power)
            elif not power:
                terms.append(f"({a})")
            elif self.side is Side.RIGHT:
                terms.append(f"{power}({a})")
            else:
                terms.append(f"({a}){power}")
        return " + ".join(reversed(terms))


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial, ascending powers."""

    coeffs: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0.0
        for b in reversed(self.coeffs):
            acc = acc * z + b
        return acc


class CompanionError(ArithmeticError):
    """A companion coefficient came out with a non-negligible imaginary part."""


def monic_normalize(coeffs: Sequence[Quaternion], side: Side = Side.RIGHT) -> QPolynomial:
    """Scale a polynomial so its leading coefficient is 1.

    RIGHT polynomials are multiplied on the right by the inverse of the
    leading coefficient, LEFT polynomials on the left.  Either way the zero
    set is unchanged.

    Raises
    ------
    ValueError
        If the leading coefficient is zero or the degree is below 1.
    """
    side = Side.parse(side)
    coeffs = [Quaternion.from_any(c) for c in coeffs]
    if len(coeffs) < 2:
        raise ValueError("polynomial degree must be at least 1")
    lead = coeffs[-1]
    if lead == ZERO:
        raise ValueError("leading coefficient is zero")
    if lead == ONE:
        return QPolynomial(tuple(coeffs), side)
    inv = inverse(lead)
    if side is Side.RIGHT:
        scaled = [mul(a, inv) for a in coeffs[:-1]]
    else:
        scaled = [mul(inv, a) for a in coeffs[:-1]]
    return QPolynomial(tuple(scaled) + (ONE,), side)


def evaluate(p: QPolynomial, q: Quaternion) -> Quaternion:
    """Horner evaluation respecting the coefficient side."""
    coeffs = p.coeffs
    acc = coeffs[-1]
    if p.side is Side.RIGHT:
        for a in reversed(coeffs[:-1]):
            acc = mul(q, acc) + a
    else:
        for a in reversed(coeffs[:-1]):
            acc = mul(acc, q) + a
    return acc


def evaluate_naive(p: QPolynomial, q: Quaternion) -> Quaternion:
    """Power-sum evaluation: form each ``q**v`` then multiply on the declared side."""
    total = ZERO
    power = ONE
    for a in p.coeffs:
        total = total + (mul(power, a) if p.side is Side.RIGHT else mul(a, power))
        power = mul(power, q)
    return total


def companion_with_defect(p: QPolynomial) -> tuple[RealPolynomial, float]:
    """Companion polynomial plus its worst relative imaginary defect."""
    a = p.coeffs
    n = p.degree
    norms = [norm(c) for c in a]
    conjs = [conj(c) for c in a]
    out = []
    worst = 0.0
    for m in range(2 * n + 1):
        acc = ZERO
        scale = 0.0
        for j in range(max(0, m - n), min(m, n) + 1):
            acc = acc + mul(conjs[j], a[m - j])
            scale += norms[j] * norms[m - j]
        imag = math.sqrt(acc[1] ** 2 + acc[2] ** 2 + acc[3] ** 2)
        if imag > 0.0:
            worst = max(worst, imag / scale)
        out.append(acc[0])
    return RealPolynomial(tuple(out)), worst


def companion(p: QPolynomial) -> RealPolynomial:
    """Real companion polynomial of degree ``2n``.

    ``b[m] = sum over j+k=m of conj(a_j) a_k``.  The pairs ``(j, k)`` and
    ``(k, j)`` contribute conjugate-symmetric terms, so the imaginary parts
    cancel; the cancellation is checked before they are dropped.  Every zero
    of ``p`` is similar to a complex root of the result.

    Raises
    ------
    CompanionError
        If a coefficient keeps an imaginary part above ``1e-12`` relative to
        ``sum |a_j||a_k|``.
    """
    b, defect = companion_with_defect(p)
    if defect > COMPANION_RTOL:
        raise CompanionError(f"companion coefficient not real (relative defect {defect:.3g})")
    return b


def to_side(p: QPolynomial, target: Side) -> QPolynomial:
    """Conjugate every coefficient and move it to ``target``.

    ``q`` is a zero of ``p`` iff ``conj(q)`` is a zero of the result, since
    conjugation reverses products.  Asking for the current side returns ``p``.
    """
    target = Side.parse(target)
    if target is p.side:
        return p
    return QPolynomial(tuple(conj(a) for a in p.coeffs), target)


# ---------------------------------------------------------------------------
# JSON form {"side": "right", "coeffs": [[w,x,y,z], ...]}

def poly_to_json(p: QPolynomial) -> dict:
    return {"side": p.side.value, "coeffs": [list(a) for a in p.coeffs]}


def poly_from_json(obj: dict) -> QPolynomial:
    """Build a polynomial from its JSON object, normalizing to monic.

    A warning is logged when the leading coefficient was not already 1.
    """
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError("polynomial JSON must be an object with a 'coeffs' list")
    side = Side.parse(obj.get("side", "right"))
    raw = obj["coeffs"]
    if not isinstance(raw, list):
        raise ValueError("'coeffs' must be a list")
    coeffs = []
    for idx, c in enumerate(raw):
        try:
            if isinstance(c, (list, tuple)) and len(c) != 4:
                raise ValueError("expected 4 components")
            coeffs.append(Quaternion.from_any(c))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"coefficient {idx}: {exc}") from None
    if len(coeffs) >= 2 and coeffs[-1] != ONE and coeffs[-1] != ZERO:
        log.warning("leading coefficient %s is not 1; normalizing to monic", coeffs[-1])
    return monic_normalize(coeffs, side)


def dumps(p: QPolynomial) -> str:
    return json.dumps(poly_to_json(p))
