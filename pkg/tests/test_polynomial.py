import json

import numpy as np
import pytest

from qroots.oracle import all_zeros
from qroots.polynomial import (
    CompanionError, QPolynomial, RealPolynomial, Side, companion, evaluate, evaluate_naive,
    monic_normalize, poly_from_json, poly_to_json, to_side,
)
from qroots.quaternion import ONE, ZERO, I, J, K, Quaternion, conj, norm

from conftest import random_quaternion


def rand_poly(rng, side=Side.RIGHT, max_degree=8):
    n = int(rng.integers(1, max_degree + 1))
    coeffs = [random_quaternion(rng, rng.uniform(0, 5)) for _ in range(n)] + [ONE]
    return QPolynomial(tuple(coeffs), side)


def test_monic_normalize_examples():
    p = monic_normalize([Quaternion(2), ZERO, Quaternion(2)], Side.RIGHT)
    assert p.coeffs == (ONE, ZERO, ONE)
    q = monic_normalize([ONE, ONE], Side.LEFT)
    assert q.coeffs == (ONE, ONE)
    # k * k^-1 = k * (-k) = 1
    r = monic_normalize([K, ZERO, K], Side.RIGHT)
    assert r.coeffs == (ONE, ZERO, ONE)


def test_monic_normalize_side_matters():
    lead = Quaternion(0, 0, 2, 0)  # 2j, inverse -j/2
    right = monic_normalize([I, lead], Side.RIGHT)
    left = monic_normalize([I, lead], Side.LEFT)
    assert right.coeffs[0] == Quaternion(0, 0, 0, -0.5)  # i (-j/2) = -k/2
    assert left.coeffs[0] == Quaternion(0, 0, 0, 0.5)    # (-j/2) i = k/2


def test_normalization_preserves_zeros(rng):
    for side in Side:
        for _ in range(20):
            p = rand_poly(rng, side, max_degree=4)
            c = random_quaternion(rng) + 0.5
            if side is Side.RIGHT:
                scaled = [a * c for a in p.coeffs]
            else:
                scaled = [c * a for a in p.coeffs]
            back = monic_normalize(scaled, side)
            for z in all_zeros(p):
                for pt in z.points(4):
                    assert norm(evaluate(back, pt)) <= 1e-8 * (1 + max(back.coeff_norms()))


def test_construction_rejects():
    with pytest.raises(ValueError):
        monic_normalize([ONE], Side.RIGHT)
    with pytest.raises(ValueError):
        monic_normalize([ONE, ZERO], Side.RIGHT)
    with pytest.raises(ValueError):
        QPolynomial((ONE, Quaternion(2)))


def test_evaluate_examples():
    p = QPolynomial((ONE, ZERO, ONE), Side.RIGHT)
    assert evaluate(p, I) == ZERO
    a0 = Quaternion(1, 0, 0, -1)
    right = QPolynomial((a0, J, ONE), Side.RIGHT)
    left = QPolynomial((a0, J, ONE), Side.LEFT)
    assert evaluate(right, I) == ZERO
    assert evaluate(left, I) == Quaternion(0, 0, 0, -2)


def test_horner_matches_power_sum(rng):
    for _ in range(1000):
        p = rand_poly(rng, Side.RIGHT if rng.random() < 0.5 else Side.LEFT)
        q = random_quaternion(rng, rng.uniform(0.1, 3))
        h, s = evaluate(p, q), evaluate_naive(p, q)
        scale = sum(norm(a) * norm(q) ** v for v, a in enumerate(p.coeffs))
        assert max(abs(x - y) for x, y in zip(h, s)) <= 1e-11 * scale


def test_real_coefficients_side_independent(rng):
    for _ in range(200):
        n = int(rng.integers(1, 7))
        coeffs = tuple(Quaternion(float(x)) for x in rng.normal(size=n)) + (ONE,)
        q = random_quaternion(rng)
        left = evaluate(QPolynomial(coeffs, Side.LEFT), q)
        right = evaluate(QPolynomial(coeffs, Side.RIGHT), q)
        # q commutes with every partial sum; only rounding order differs
        scale = sum(norm(a) * norm(q) ** v for v, a in enumerate(coeffs))
        assert max(abs(x - y) for x, y in zip(left, right)) <= 1e-14 * scale


def test_companion_examples():
    assert companion(QPolynomial((ONE, ZERO, ONE))).coeffs == (1.0, 0.0, 2.0, 0.0, 1.0)
    assert companion(QPolynomial((Quaternion(1, 1), ONE))).coeffs == (2.0, 2.0, 1.0)
    for n in (1, 3, 5):
        b = companion(QPolynomial((ZERO,) * n + (ONE,)))
        assert b.coeffs == (0.0,) * (2 * n) + (1.0,)


def test_companion_matches_norm_squared(rng):
    # on the real axis the companion equals |p(x)|^2
    for _ in range(100):
        p = rand_poly(rng)
        b = companion(p)
        assert b.degree == 2 * p.degree and b.coeffs[-1] == 1.0
        x = float(rng.uniform(-2, 2))
        val = norm(evaluate(p, Quaternion(x))) ** 2
        assert abs(b(x) - val) <= 1e-10 * (1 + sum(abs(c) * max(1, abs(x)) ** m for m, c in enumerate(b.coeffs)))


def test_companion_realness_random(rng):
    from qroots.polynomial import companion_with_defect
    worst = max(companion_with_defect(rand_poly(rng))[1] for _ in range(1000))
    assert worst <= 1e-12


def test_companion_rejects_nonreal(monkeypatch):
    import qroots.polynomial as poly
    monkeypatch.setattr(poly, "COMPANION_RTOL", -1.0)
    with pytest.raises(CompanionError):
        poly.companion(QPolynomial((Quaternion(1, 1), ONE)))


def test_to_side_examples():
    p = QPolynomial((ZERO, J, ONE), Side.RIGHT)
    left = to_side(p, Side.LEFT)
    assert left.side is Side.LEFT and left.coeffs == (ZERO, -J, ONE)
    assert to_side(left, Side.RIGHT) == p
    assert to_side(p, Side.RIGHT) is p


def test_conjugation_duality_hand_example():
    p = QPolynomial((Quaternion(1, 0, 0, -1), J, ONE), Side.RIGHT)
    assert evaluate(p, I) == ZERO
    assert evaluate(to_side(p, Side.LEFT), conj(I)) == ZERO


def test_conjugation_duality_random(rng):
    for _ in range(1000):
        p = rand_poly(rng, max_degree=5)
        left = to_side(p, Side.LEFT)
        tol = 1e-8 * (1 + max(p.coeff_norms()))
        for z in all_zeros(p):
            for pt in z.points(4):
                assert norm(evaluate(left, conj(pt))) <= tol


def test_json_round_trip_and_normalization(caplog):
    p = QPolynomial((Quaternion(1, 2, 3, 4), J, ONE), Side.LEFT)
    assert poly_from_json(json.loads(json.dumps(poly_to_json(p)))) == p
    with caplog.at_level("WARNING"):
        q = poly_from_json({"side": "right", "coeffs": [[1, 0, 0, 0], [2, 0, 0, 0]]})
    assert q.coeffs == (Quaternion(0.5), ONE)
    assert "not 1" in caplog.text


@pytest.mark.parametrize("obj", [
    {"side": "up", "coeffs": [[1, 0, 0, 0], [1, 0, 0, 0]]},
    {"coeffs": [[1, 0, 0], [1, 0, 0, 0]]},
    {"coeffs": [[1, 0, 0, 0], [0, 0, 0, 0]]},
    {"coeffs": [[1, 0, 0, 0]]},
    [1, 2],
])
def test_json_rejects(obj):
    with pytest.raises(ValueError):
        poly_from_json(obj)


def test_real_polynomial_call():
    b = RealPolynomial((2.0, 2.0, 1.0))
    assert b(-1 + 1j) == 0
