"""Seeded verification campaigns.

Each trial draws a random monic polynomial, finds its zeros with the oracle
and checks every bound against every zero class.  A single NOT_CONTAINED
verdict fails the campaign.
"""
from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .bounds import (
    CONTAIN_RTOL,
    HolderPair,
    RegionKind,
    Verdict,
    all_origin_bounds,
    feasible_r,
    rather_region,
    region_contains,
)
from .oracle import ConvergenceError, ZeroKind, eval_tolerance, solve, sphere_residual
from .polynomial import CompanionError, QPolynomial, Side, poly_to_json
from .quaternion import Quaternion

__all__ = [
    "DEFAULT_HOLDER_PAIRS",
    "CampaignConfig",
    "gen_random_poly",
    "trial_rng",
    "verify_one",
    "summarize",
    "run_campaign",
    "report_to_csv",
]

DEFAULT_HOLDER_PAIRS = (HolderPair(2.0, 2.0), HolderPair(3.0, 1.5), HolderPair(1.5, 3.0))


@dataclass
class CampaignConfig:
    seed: int = 1
    trials: int = 100
    degree_min: int = 1
    degree_max: int = 8
    coeff_norm_max: float = 10.0
    side: str = "both"  # "left", "right" or "both"
    holder_pairs: tuple[HolderPair, ...] = DEFAULT_HOLDER_PAIRS
    include_theorem_e: bool = True
    zero_prob: float = 0.2
    rtol: float = CONTAIN_RTOL
    workers: int = 1

    def __post_init__(self):
        self.holder_pairs = tuple(
            h if isinstance(h, HolderPair) else HolderPair(*h) for h in self.holder_pairs)
        self.side = str(self.side).lower()
        if self.side not in ("left", "right", "both"):
            raise ValueError(f"side must be left, right or both, got {self.side!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 1 <= self.degree_min <= self.degree_max <= 8:
            raise ValueError("need 1 <= degree_min <= degree_max <= 8")
        if not self.coeff_norm_max > 0:
            raise ValueError("coeff_norm_max must be positive")
        if not 0.0 <= self.zero_prob < 1.0:
            raise ValueError("zero_prob must lie in [0, 1)")

    def to_json(self) -> dict:
        d = asdict(self)
        d["holder_pairs"] = [[h.r, h.s] for h in self.holder_pairs]
        del d["workers"]
        return d

    @classmethod
    def from_json(cls, obj: dict) -> CampaignConfig:
        return cls(**obj)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, keyed on ``(seed, trial)``."""
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), trial]))


def gen_random_poly(rng: np.random.Generator, degree: int, coeff_norm_max: float,
                    side: Side = Side.RIGHT, zero_prob: float = 0.0) -> QPolynomial:
    """Random monic polynomial.

    Each lower coefficient gets a direction from ``U[-1, 1]^4`` and a norm
    from ``U[0, coeff_norm_max]``; with probability ``zero_prob`` it is
    replaced by zero.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    coeffs = []
    for _ in range(degree):
        v = rng.uniform(-1.0, 1.0, 4)
        length = float(np.linalg.norm(v))
        radius = rng.uniform(0.0, coeff_norm_max)
        drop = rng.random() < zero_prob
        if drop or length == 0.0:
            coeffs.append(Quaternion())
        else:
            coeffs.append(Quaternion(*((radius / length) * v)))
    coeffs.append(Quaternion(1.0))
    return QPolynomial(tuple(coeffs), side)


def _tightness(radius, zeros):
    top = max((z.norm for z in zeros), default=0.0)
    if radius == 0.0:
        return 1.0
    return top / radius


def verify_one(p: QPolynomial, cfg: CampaignConfig | None = None,
               theorem_e_r: float | None = None) -> dict:
    """Check every configured bound against every zero class of ``p``.

    The two-ball region uses the smallest admissible ``r`` unless
    ``theorem_e_r`` is given (an inadmissible value raises ``ValueError``).
    Oracle failures never raise: the trial is marked ``unverified`` and the
    reason recorded.
    """
    cfg = cfg or CampaignConfig()
    record = {
        "degree": p.degree,
        "side": p.side.value,
        "polynomial": poly_to_json(p),
        "status": "verified",
        "zeros": [],
        "bounds": [],
        "inconsistencies": [],
    }
    if theorem_e_r is not None and p.degree >= 2:
        rather_region(p, theorem_e_r)  # validate before the expensive part
    try:
        result = solve(p)
    except (ConvergenceError, CompanionError) as exc:
        record["status"] = "unverified"
        record["error"] = str(exc)
        return record

    zeros = result.zeros
    record["zeros"] = [z.to_json() for z in zeros]
    record["inconsistencies"] = [str(e) for e in result.inconsistencies]
    record["companion_defect"] = result.companion_defect
    record["max_zero_norm"] = max((z.norm for z in zeros), default=0.0)
    tol_eval = eval_tolerance(p)
    record["residual_ratio"] = max(
        [z.residual / tol_eval for z in zeros]
        + [sphere_residual(p, z.re, z.im_radius) / tol_eval for z in zeros if z.kind is ZeroKind.SPHERICAL],
        default=0.0)

    regions = all_origin_bounds(p, cfg.holder_pairs)
    if cfg.include_theorem_e:
        if p.degree < 2:
            record["theorem_e"] = "not_applicable"
        else:
            r = theorem_e_r if theorem_e_r is not None else feasible_r(p)
            if r is None:
                record["theorem_e"] = "infeasible"
            else:
                record["theorem_e"] = "feasible"
                record["theorem_e_r"] = r
                regions.append(rather_region(p, r))

    for reg in regions:
        verdicts = [region_contains(reg, z, cfg.rtol) for z in zeros]
        entry = {"region": reg.to_json(), "label": reg.label,
                 "verdict": _worst(verdicts).value}
        if reg.kind is RegionKind.ORIGIN_BALL:
            entry["tightness"] = _tightness(reg.radius, zeros)
        record["bounds"].append(entry)
    return record


def _worst(verdicts):
    if any(v is Verdict.NOT_CONTAINED for v in verdicts):
        return Verdict.NOT_CONTAINED
    if any(v is Verdict.SAMPLED_CONTAINED for v in verdicts):
        return Verdict.SAMPLED_CONTAINED
    return Verdict.CONTAINED


def _run_trial(args):
    cfg, trial = args
    rng = trial_rng(cfg.seed, trial)
    degree = int(rng.integers(cfg.degree_min, cfg.degree_max + 1))
    if cfg.side == "both":
        side = Side.RIGHT if rng.random() < 0.5 else Side.LEFT
    else:
        side = Side(cfg.side)
    p = gen_random_poly(rng, degree, cfg.coeff_norm_max, side, cfg.zero_prob)
    record = verify_one(p, cfg)
    record["trial"] = trial
    return record


def summarize(records: list[dict]) -> dict:
    """Aggregate trial records; the result does not depend on their order."""
    per_bound: dict[str, dict] = {}
    tight: dict[str, list[float]] = {}
    for rec in records:
        for b in rec["bounds"]:
            stats = per_bound.setdefault(b["label"], {v.value: 0 for v in Verdict})
            stats[b["verdict"]] += 1
            if "tightness" in b:
                tight.setdefault(b["label"], []).append(b["tightness"])
    for label, values in tight.items():
        per_bound[label]["mean_tightness"] = math.fsum(values) / len(values)
        per_bound[label]["max_tightness"] = max(values)
    failures = sum(s[Verdict.NOT_CONTAINED.value] for s in per_bound.values())
    verified = [r for r in records if r["status"] == "verified"]
    summary = {
        "trials": len(records),
        "bounds": dict(sorted(per_bound.items())),
        "not_contained": failures,
        "theorem_e_infeasible": sum(r.get("theorem_e") == "infeasible" for r in records),
        "theorem_e_not_applicable": sum(r.get("theorem_e") == "not_applicable" for r in records),
        "oracle_failures": len(records) - len(verified),
        "oracle_inconsistencies": sum(len(r["inconsistencies"]) for r in records),
        "max_companion_defect": max((r["companion_defect"] for r in verified), default=0.0),
        "max_residual_ratio": max((r["residual_ratio"] for r in verified), default=0.0),
    }
    summary["status"] = "FAILED" if failures else "PASSED"
    return summary


def run_campaign(cfg: CampaignConfig) -> dict:
    """Run ``cfg.trials`` independent trials and return the full report.

    With ``workers > 1`` the trials are spread over processes; since each
    trial owns its generator and records are sorted by trial index the
    report is identical either way, apart from ``meta.elapsed_seconds``.
    """
    start = time.perf_counter()
    jobs = [(cfg, t) for t in range(cfg.trials)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            records = list(pool.map(_run_trial, jobs, chunksize=16))
    else:
        records = [_run_trial(j) for j in jobs]
    records.sort(key=lambda r: r["trial"])
    return {
        "config": cfg.to_json(),
        "summary": summarize(records),
        "trials": records,
        "meta": {"elapsed_seconds": time.perf_counter() - start},
    }


CSV_FIELDS = ["trial", "degree", "side", "bound", "radius", "max_zero_norm", "tightness", "verdict"]


def report_to_csv(report: dict) -> str:
    """One row per (trial, bound).  Union regions report their origin-ball radius."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in report["trials"]:
        for b in rec["bounds"]:
            reg = b["region"]
            radius = reg.get("radius", reg.get("radius1"))
            writer.writerow([
                rec.get("trial", 0), rec["degree"], rec["side"], b["label"], repr(radius),
                repr(rec.get("max_zero_norm", float("nan"))),
                repr(b["tightness"]) if "tightness" in b else "",
                b["verdict"],
            ])
    return buf.getvalue()


def dumps(report: dict) -> str:
    return json.dumps(report, indent=1)
