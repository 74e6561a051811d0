"""The whole experiment at toy scale, in a temporary directory.

Same stages as the command line tool: simulate, nudge, train, correct,
report.  Takes about a minute.
"""
import csv
import tempfile
from pathlib import Path

from qgdebias import pipeline
from qgdebias.config import config_from_dict

out = Path(tempfile.mkdtemp()) / "toy"
cfg = config_from_dict({
    "fine_nx": 32, "coarse_nx": 16,
    "solver": {"kd2": 16.0, "dt_fine": 0.01, "dt_coarse": 0.01},
    "spin_up": 50.0, "train_horizon": 50.0, "test_horizon": 100.0, "tau": 5.0,
    "ensemble_size": 2, "seed": 5,
    "nets": {"hidden_dim": 16, "latent_dim": 8, "epochs": 20, "window": 25},
    "report": {"gamma_window": 10.0, "max_lag_time": 10.0, "psd_nperseg": 64},
    "out": str(out),
})

# %%
for stage in (pipeline.cmd_simulate, pipeline.cmd_nudge, pipeline.cmd_train, pipeline.cmd_correct, pipeline.cmd_report):
    stage(cfg)
    print("done:", stage.__name__)

# %%
with open(out / "report" / "summary.csv") as fh:
    for row in csv.DictReader(fh):
        print(f"{row['model']:8s} mean KL {float(row['mean_DKL']):.4f}")
print("artifacts under", out)
