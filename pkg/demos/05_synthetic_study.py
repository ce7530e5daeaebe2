# %% [markdown]
# # When does warping-invariance help?
#
# Two classes of flat series carrying one block of height c at a random
# position. If the classes differ in base level only, dtw accumulates
# that difference over the whole plateau while twi sees it once. If they
# differ in block height, plateau length is a nuisance that only twi
# ignores, provided the plateau actually condenses.

# %%
import os

from warpinv.experiments import CYLINDER_ROWS, SynthConfig, run_synth_study, synth_summary

repeats = int(os.environ.get("DEMO_REPEATS", "3"))
summary = synth_summary(run_synth_study(repeats=repeats, seed=0))
for row, errs in sorted(summary.items()):
    print(row, {m: round(v, 1) for m, v in errs.items()})

# %% [markdown]
# Drawing the noise once per plateau instead of per element keeps
# plateaus flat, so they condense to single values.

# %%
flat = {k: SynthConfig(**{**cfg.__dict__, "noise_per": "series"}) for k, cfg in CYLINDER_ROWS.items()}
summary = synth_summary(run_synth_study(["E1", "E3"], repeats=repeats, seed=0, configs=flat))
for row, errs in sorted(summary.items()):
    print(row, "(flat plateaus)", {m: round(v, 1) for m, v in errs.items()})
