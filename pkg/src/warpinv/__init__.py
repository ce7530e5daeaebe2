"""Dynamic time warping and its warping-invariant variant.

The twi-distance compares two time series by the dtw-distance of their
condensed forms, i.e. after collapsing every run of repeated values to a
single value. It ignores how long a series dwells on a value, is cheaper
to compute on reducible data, and defines a proper semi-metric on
equivalence classes of series.
"""

from .clustering import Clustering, cluster_cohesion, cluster_separation, dba, dba_mean, frechet, kmeans
from .core import LabeledDataset, as_series, condense_series, is_irreducible, resample_linear, z_normalize
from .distances import (
    BandConfig,
    DtwResult,
    compression_ratio,
    dtw,
    dtw_banded,
    dtw_early_abandon,
    dtw_sq,
    envelope,
    euclidean,
    lb_keogh,
    lb_lemire,
    series_space_saving,
    space_saving_ratio,
    speedup_factors,
    twi,
)
from .nn import NnConfig, Prediction, classify_1nn, classify_many, cross_validate, error_rate

__version__ = "0.1.0"

__all__ = [
    "Clustering",
    "cluster_cohesion",
    "cluster_separation",
    "dba",
    "dba_mean",
    "frechet",
    "kmeans",
    "LabeledDataset",
    "as_series",
    "condense_series",
    "is_irreducible",
    "resample_linear",
    "z_normalize",
    "BandConfig",
    "DtwResult",
    "compression_ratio",
    "dtw",
    "dtw_banded",
    "dtw_early_abandon",
    "dtw_sq",
    "envelope",
    "euclidean",
    "lb_keogh",
    "lb_lemire",
    "series_space_saving",
    "space_saving_ratio",
    "speedup_factors",
    "twi",
    "NnConfig",
    "Prediction",
    "classify_1nn",
    "classify_many",
    "cross_validate",
    "error_rate",
]
