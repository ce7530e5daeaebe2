"""Data loading, synthetic data, statistics, timing and the study drivers."""

from .io import DataFormatError, ExperimentRecord, load_series, load_ucr, load_ucr_dataset, segment_meter_log
from .stats import BayesResult, bayes_sign_test, correlations, reducibility_stats
from .studies import run_cv_study, run_split_study, run_synth_study, synth_summary
from .synth import CYLINDER_ROWS, SynthConfig, generate_synthetic
from .timing import timing_bench

__all__ = [
    "DataFormatError",
    "ExperimentRecord",
    "load_series",
    "load_ucr",
    "load_ucr_dataset",
    "segment_meter_log",
    "BayesResult",
    "bayes_sign_test",
    "correlations",
    "reducibility_stats",
    "run_cv_study",
    "run_split_study",
    "run_synth_study",
    "synth_summary",
    "CYLINDER_ROWS",
    "SynthConfig",
    "generate_synthetic",
    "timing_bench",
]
