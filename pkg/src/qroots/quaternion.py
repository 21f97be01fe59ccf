"""Quaternion arithmetic in double precision.

Quaternions are immutable 4-tuples ``(w, x, y, z)`` standing for
``w + x i + y j + z k`` with ``i^2 = j^2 = k^2 = ijk = -1``.
"""
from __future__ import annotations

import math
import re
from typing import NamedTuple

__all__ = [
    "Quaternion",
    "ONE",
    "ZERO",
    "I",
    "J",
    "K",
    "mul",
    "conj",
    "norm",
    "inverse",
    "similarity_data",
    "isclose",
    "format_quaternion",
    "parse_quaternion",
    "unit_pure_samples",
]


class Quaternion(NamedTuple):
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    # tuple defines + and * as concatenation / repetition; override both.
    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self):
        return norm(self)

    def __str__(self):
        return format_quaternion(self)

    @property
    def real(self) -> float:
        return self.w

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def conj(self) -> Quaternion:
        return conj(self)

    def norm(self) -> float:
        return norm(self)

    def inverse(self) -> Quaternion:
        return inverse(self)

    @classmethod
    def from_any(cls, value) -> Quaternion:
        """Coerce a real, a length-4 sequence or a quaternion literal."""
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, (int, float)):
            return cls(float(value))
        if isinstance(value, str):
            return parse_quaternion(value)
        w, x, y, z = value
        return cls(float(w), float(x), float(y), float(z))


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b``."""
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return Quaternion(
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(q[0], -q[1], -q[2], -q[3])


def norm(q: Quaternion) -> float:
    return math.hypot(q[0], q[1], q[2], q[3])


def inverse(q: Quaternion) -> Quaternion:
    """Multiplicative inverse ``conj(q) / |q|^2``.

    Raises
    ------
    ZeroDivisionError
        If ``q`` is the zero quaternion.
    """
    n2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]
    if n2 == 0.0:
        raise ZeroDivisionError("the zero quaternion has no inverse")
    return Quaternion(q[0] / n2, -q[1] / n2, -q[2] / n2, -q[3] / n2)


def similarity_data(q: Quaternion) -> tuple[float, float]:
    """Return ``(Re q, |Im q|)``; equal pairs mean similar quaternions."""
    return q[0], math.hypot(q[1], q[2], q[3])


def isclose(a: Quaternion, b: Quaternion, rtol: float = 1e-12, atol: float = 1e-12) -> bool:
    return all(math.isclose(u, v, rel_tol=rtol, abs_tol=atol) for u, v in zip(a, b))


# ---------------------------------------------------------------------------
# text form "w+xi+yj+zk"

def format_quaternion(q: Quaternion) -> str:
    w, x, y, z = q
    return f"{w:.17g}{x:+.17g}i{y:+.17g}j{z:+.17g}k"


_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_TERM = re.compile(rf"\s*([+-]?)\s*({_NUM})?\s*([ijk]?)\s*")
_SLOT = {"": 0, "i": 1, "j": 2, "k": 3}


def parse_quaternion(text: str) -> Quaternion:
    """Parse ``"w+xi+yj+zk"``-style text.

    Terms may appear in any order, coefficients may be omitted for a unit
    (``"-j"``), and a bare real such as ``"2.5"`` is accepted.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty quaternion literal")
    parts = [0.0, 0.0, 0.0, 0.0]
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, unit = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (num is None and not unit):
            raise ValueError(f"cannot parse quaternion {text!r} at position {pos}")
        if not sign and not first:
            raise ValueError(f"missing sign before term at position {pos} in {text!r}")
        value = float(num) if num is not None else 1.0
        parts[_SLOT[unit]] += -value if sign == "-" else value
        pos = m.end()
        first = False
    return Quaternion(*parts)


def unit_pure_samples(count: int) -> list[Quaternion]:
    """Deterministic, nearly uniform points on the sphere of unit pure quaternions.

    Uses a Fibonacci lattice, so the same ``count`` always gives the same points.
    """
    golden = math.pi * (3.0 - math.sqrt(5.0))
    pts = []
    for t in range(count):
        zc = 1.0 - (2.0 * t + 1.0) / count
        rho = math.sqrt(max(0.0, 1.0 - zc * zc))
        phi = golden * t
        pts.append(Quaternion(0.0, rho * math.cos(phi), rho * math.sin(phi), zc))
    return pts
