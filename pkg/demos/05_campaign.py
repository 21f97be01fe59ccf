# %% [markdown]
# # A verification campaign
#
# A campaign draws seeded random polynomials, finds every zero and checks
# every bound.  The same seed always gives the same report.

# %%
from qroots.harness import CampaignConfig, report_to_csv, run_campaign

cfg = CampaignConfig(seed=1, trials=200)
report = run_campaign(cfg)
summary = report["summary"]
print("status:", summary["status"], "in", round(report["meta"]["elapsed_seconds"], 2), "s")
for label, stats in summary["bounds"].items():
    mean = stats.get("mean_tightness")
    print(f"{label:<26} contained {stats['contained'] + stats['sampled_contained']:4d}"
          + (f"  mean tightness {mean:.3f}" if mean is not None else ""))
print("two-ball infeasible:", summary["theorem_e_infeasible"],
      " not applicable:", summary["theorem_e_not_applicable"])

# %% The CSV export has one row per trial and bound
print("\n".join(report_to_csv(report).splitlines()[:6]))
