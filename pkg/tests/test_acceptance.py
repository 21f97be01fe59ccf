"""Exit criteria.  Each test appends one PASS/FAIL line, shown in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import math
import time

import numpy as np
import pytest

from qroots.bounds import (
    HolderPair, Verdict, cauchy_bound, kmt_bound, montel_bound, proof_lower_bound, region_contains,
    sphere_max_distance,
)
from qroots.harness import CampaignConfig, gen_random_poly, run_campaign, trial_rng, verify_one
from qroots.oracle import ZeroKind, all_zeros, eval_tolerance, solve
from qroots.polynomial import QPolynomial, Side, evaluate
from qroots.quaternion import ONE, I, J, Quaternion, norm, similarity_data

from conftest import ACCEPTANCE_LINES, brute_sphere_max, random_quaternion
from test_oracle import closed_form_roots

CAMPAIGN = CampaignConfig(
    seed=1, trials=1000, degree_min=1, degree_max=8, coeff_norm_max=10.0, side="both",
    holder_pairs=(HolderPair(2.0, 2.0), HolderPair(3.0, 1.5), HolderPair(1.5, 3.0)),
    include_theorem_e=True,
)


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def campaign():
    start = time.perf_counter()
    report = run_campaign(CAMPAIGN)
    return report, time.perf_counter() - start


def test_1_containment_campaign(campaign):
    report, elapsed = campaign
    s = report["summary"]
    expected = {"cauchy", "euclidean", "montel", "theorem_e"} | {
        f"{kind}({h})" for kind in ("kmt", "kmt_simplified") for h in CAMPAIGN.holder_pairs}
    ok = (s["not_contained"] == 0 and s["oracle_failures"] == 0 and s["oracle_inconsistencies"] == 0
          and set(s["bounds"]) == expected and elapsed < 60.0)
    record(1, "containment campaign", ok,
           f"{s['trials']} trials, {s['not_contained']} not contained, "
           f"{s['bounds']['theorem_e']['contained'] + s['bounds']['theorem_e']['sampled_contained']} "
           f"two-ball checks, {s['theorem_e_infeasible']} infeasible, "
           f"{s['oracle_failures']} oracle failures, {elapsed:.1f}s")


def test_2_large_r_limit():
    worst = 0.0
    for t in range(100):
        p = gen_random_poly(trial_rng(2, t), int(trial_rng(2, t + 1000).integers(1, 9)), 10.0)
        c = cauchy_bound(p).radius
        k = kmt_bound(p, HolderPair.from_r(1e6)).radius
        worst = max(worst, abs(k - c) / c)
    record(2, "r -> infinity limit", worst <= 1e-3, f"max relative gap {worst:.3g} (tol 1e-3)")


def test_3_bound_ordering(campaign):
    report, _ = campaign
    worst = 0.0
    for rec in report["trials"]:
        radii = {b["label"]: b["region"]["radius"] for b in rec["bounds"] if "radius" in b["region"]}
        for h in CAMPAIGN.holder_pairs:
            worst = max(worst, radii[f"kmt({h})"] / radii[f"kmt_simplified({h})"] - 1.0)
    record(3, "kmt <= kmt_simplified", worst <= 1e-12, f"max excess ratio {worst:.3g} (rtol 1e-12)")


def test_4_oracle_soundness(campaign):
    report, _ = campaign
    campaign_ratio = report["summary"]["max_residual_ratio"]

    # spheres do not occur in random draws; plant them with a real quadratic factor
    rng = np.random.default_rng(4)
    sphere_ratio = 0.0
    for _ in range(200):
        a, b = rng.uniform(-3, 3), rng.uniform(0.2, 3)
        g = [random_quaternion(rng, 3) for _ in range(int(rng.integers(0, 6)))] + [ONE]
        coeffs = [Quaternion()] * (len(g) + 2)
        for i, si in enumerate((a * a + b * b, -2 * a, 1.0)):
            for j, gj in enumerate(g):
                coeffs[i + j] = coeffs[i + j] + gj * si
        p = QPolynomial(tuple(coeffs), Side.RIGHT if rng.random() < 0.5 else Side.LEFT)
        tol = eval_tolerance(p)
        for z in all_zeros(p):
            sphere_ratio = max(sphere_ratio, max(norm(evaluate(p, pt)) for pt in z.points(16)) / tol)

    closed_gap = 0.0
    for _ in range(300):
        n = int(rng.integers(1, 4))
        coeffs = list(rng.uniform(-5, 5, n)) + [1.0]
        p = QPolynomial(tuple(Quaternion(c) for c in coeffs), Side.RIGHT if rng.random() < 0.5 else Side.LEFT)
        expected = sorted({(round(z.real, 9), round(abs(z.imag), 9)): (z.real, abs(z.imag))
                           for z in closed_form_roots(coeffs)}.values())
        got = sorted((z.re, z.im_radius) for z in all_zeros(p))
        if len(got) != len(expected):
            closed_gap = math.inf
            break
        closed_gap = max([closed_gap] + [max(abs(x - y), abs(u - v)) for (x, u), (y, v) in zip(got, expected)])

    ok = campaign_ratio <= 1.0 and sphere_ratio <= 1.0 and closed_gap <= 1e-10
    record(4, "oracle soundness", ok,
           f"residual/tol {campaign_ratio:.3g} (campaign), {sphere_ratio:.3g} (planted spheres, 16 samples); "
           f"closed-form similarity gap {closed_gap:.3g} (tol 1e-10)")


def test_5_companion_realness(campaign):
    report, _ = campaign
    worst = report["summary"]["max_companion_defect"]
    record(5, "companion realness", worst <= 1e-12, f"max relative imaginary part {worst:.3g} (tol 1e-12)")


def test_6_proof_inequality():
    rng = np.random.default_rng(6)
    pairs = [HolderPair(2.0, 2.0), HolderPair(3.0, 1.5), HolderPair(1.5, 3.0)]
    failures = 0
    min_margin = math.inf
    for t in range(1000):
        p = gen_random_poly(rng, int(rng.integers(1, 9)), 10.0, zero_prob=0.2)
        h = pairs[t % 3] if t % 2 else HolderPair.from_r(float(rng.uniform(1.05, 20)))
        radius = kmt_bound(p, h).radius
        q = random_quaternion(rng)
        q = q * (radius * float(rng.uniform(1.0 + 1e-9, 4.0)) / norm(q))
        m = norm(q)
        scale = sum(x * m ** v for v, x in enumerate(p.coeff_norms())) + m ** p.degree
        lower = proof_lower_bound(p, q, h)
        actual = norm(evaluate(p, q))
        if not (0.0 < lower <= actual + 1e-9 * scale):
            failures += 1
        min_margin = min(min_margin, (actual - lower) / scale)
    record(6, "proof lower bound", failures == 0,
           f"{failures}/1000 violations, min (|p(q)| - bound)/scale {min_margin:.3g}")


def test_7_sphere_maximum_formula():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(50):
        d = random_quaternion(rng, float(rng.uniform(0.1, 5)))
        im_radius = float(rng.uniform(0.05, 5))
        exact = sphere_max_distance(d, im_radius)
        worst = max(worst, abs(brute_sphere_max(d, im_radius, rng) - exact) / exact)
    record(7, "sphere maximum formula", worst <= 1e-6, f"max relative gap {worst:.3g} (tol 1e-6)")


def test_8_worked_examples():
    sphere_poly = QPolynomial((ONE, Quaternion(), ONE))
    (s,) = all_zeros(sphere_poly)
    sphere_ok = (s.kind is ZeroKind.SPHERICAL and abs(s.re) < 1e-12 and abs(s.im_radius - 1) < 1e-12
                 and cauchy_bound(sphere_poly).radius == 2.0 and montel_bound(sphere_poly).radius == 1.0)

    p = QPolynomial((Quaternion(1, 0, 0, -1), J, ONE))
    result = solve(p)
    hits = [z for z in result.zeros if z.kind is ZeroKind.ISOLATED
            and max(abs(a - b) for a, b in zip(z.point, I)) < 1e-12]
    iso_ok = False
    if hits:
        z = hits[0]
        re, im = similarity_data(z.point)
        rec = verify_one(p, CAMPAIGN)
        iso_ok = (abs(re) < 1e-12 and abs(im - 1) < 1e-12 and z.residual <= 1e-10
                  and all(b["verdict"] == Verdict.CONTAINED.value for b in rec["bounds"])
                  and all(region_contains(cauchy_bound(p), zz).ok for zz in result.zeros))
    record(8, "worked examples", sphere_ok and iso_ok,
           f"q^2+1 -> sphere (0,1), radii cauchy 2 / montel 1: {sphere_ok}; "
           f"q^2+qj+(1-k) -> isolated i, residual "
           f"{hits[0].residual if hits else float('nan'):.3g}, all bounds contain: {iso_ok}")
