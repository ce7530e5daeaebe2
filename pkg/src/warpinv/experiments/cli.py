"""Command-line entry point: ``warpinv <subcommand> ...``.

Exit status is 0 on success, 2 for invalid input (bad flags, unreadable
or malformed files, out-of-range parameters) and 1 for anything else.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from ..clustering import separation_growth_demo
from ..core import condense_series
from ..distances import BandConfig, DtwResult, dtw, dtw_banded, euclidean
from .io import (
    ExperimentRecord,
    iter_ucr_archive,
    load_series,
    load_ucr_dataset,
    segment_meter_log,
    write_records_csv,
    write_records_json,
    write_ucr,
)
from .stats import bayes_sign_test, correlations, pooled_reducibility, reducibility_stats
from .studies import run_cv_study, run_split_study, run_synth_study, synth_summary
from .synth import CYLINDER_ROWS
from .timing import timing_bench

__all__ = ["main", "build_parser"]


class InvalidInput(ValueError):
    pass


def _band(value: float | None) -> BandConfig | None:
    return None if value is None else BandConfig(fraction=value)


def _emit(records, args) -> None:
    if getattr(args, "json", False):
        write_records_json(records, args.out or sys.stdout)
    else:
        write_records_csv(records, args.out or sys.stdout)


def _datasets(root, merge: bool = True):
    return [load_ucr_dataset(d, merge=merge) for d in iter_ucr_archive(root)]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_dist(args) -> None:
    a, b = load_series(args.a), load_series(args.b)
    band = _band(args.band)
    if args.method == "euc":
        value = euclidean(a, b)
        path = tuple((i, i) for i in range(1, a.size + 1))
    else:
        if args.method == "twi":  # path refers to the condensed forms
            a, b = condense_series(a), condense_series(b)
        if band is None:
            res = dtw(a, b, want_path=args.path)
        else:
            res = dtw_banded(a, b, band, want_path=True) if args.path else DtwResult(dtw_banded(a, b, band))
        value, path = res.distance, res.path
    print(repr(float(value)))
    if args.path:
        print(" ".join(f"({i},{j})" for i, j in path))


def cmd_stats(args) -> None:
    datasets = _datasets(args.data)
    records, lengths, preds = [], [], []
    for d in datasets:
        st = reducibility_stats(d)
        mean_len = float(d.lengths.mean())
        lengths.append(mean_len)
        preds.append(st.p_red)
        for metric, v in (("n_series", st.n_series), ("length", mean_len),
                          ("p_red", st.p_red), ("mean_shortening", st.mean_shortening)):
            records.append(ExperimentRecord(d.name, "condense", metric, float(v)))
    pooled = pooled_reducibility(datasets)
    records.append(ExperimentRecord("ALL", "condense", "n_series", float(pooled.n_series)))
    records.append(ExperimentRecord("ALL", "condense", "p_red", pooled.p_red))
    records.append(ExperimentRecord("ALL", "condense", "mean_shortening", pooled.mean_shortening))
    if len(datasets) >= 2 and np.ptp(lengths) > 0 and np.ptp(preds) > 0:
        for name, v in zip(("pearson", "spearman", "kendall"), correlations(lengths, preds)):
            records.append(ExperimentRecord("ALL", "length_vs_p_red", name, v))
    _emit(records, args)


def cmd_bench(args) -> None:
    records = []
    for d in _datasets(args.data):
        records += timing_bench(d, args.methods, pairs=args.pairs, reps=args.reps, seed=args.seed)
    _emit(records, args)


def cmd_knn(args) -> None:
    method = args.method
    if args.opt:
        if method not in ("dtw", "twi"):
            raise InvalidInput("--opt applies to dtw and twi only")
        method = f"opt-{method}"
    band = _band(args.band)
    if args.merge:
        records = run_cv_study(_datasets(args.data), [method], folds=args.folds, seed=args.seed,
                               band=band, n_jobs=args.jobs)
    else:
        records = []
        for d in iter_ucr_archive(args.data):
            train, test = load_ucr_dataset(d, merge=False)
            records += run_split_study(train, test, [method], band=band, n_jobs=args.jobs)
    _emit(records, args)


def cmd_synth(args) -> None:
    records = run_synth_study(args.row, repeats=args.repeats, seed=args.seed, n_jobs=args.jobs)
    summary = synth_summary(records)
    records += [ExperimentRecord(row, m, "mean_error_pct", v, seed=args.seed)
                for row, ms in summary.items() for m, v in ms.items()]
    _emit(records, args)


def cmd_kmeans_demo(args) -> None:
    rows = separation_growth_demo(args.rmax)
    fh = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    finally:
        if args.out:
            fh.close()


def cmd_bayes(args) -> None:
    diffs = load_series(args.diffs)
    res = bayes_sign_test(diffs, rope=args.rope, prior_strength=args.prior, mc_samples=args.samples, seed=args.seed)
    print(f"# {res.test}, rope={args.rope}")
    print("p_left,p_rope,p_right")
    print(f"{res.p_left!r},{res.p_rope!r},{res.p_right!r}")


def cmd_segment(args) -> None:
    train, test = segment_meter_log(args.data, args.days, columns=args.columns)
    out = Path(args.out) / train.name
    out.mkdir(parents=True, exist_ok=True)
    write_ucr(train, out / f"{train.name}_TRAIN.tsv")
    write_ucr(test, out / f"{train.name}_TEST.tsv")
    print(f"{len(train)} train / {len(test)} test series of length {train.series[0].size} -> {out}")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _nonneg_float(s: str) -> float:
    v = float(s)
    if not v >= 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _pos_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="warpinv", description="dtw and warping-invariant distances")
    sub = p.add_subparsers(dest="command", required=True)

    def output(sp, json_ok=True):
        sp.add_argument("--out", help="write to this file instead of stdout")
        if json_ok:
            sp.add_argument("--json", action="store_true", help="JSON instead of CSV")

    sp = sub.add_parser("dist", help="distance between two series files")
    sp.add_argument("--method", choices=("euc", "dtw", "twi"), default="dtw")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--band", type=_nonneg_float, help="Sakoe-Chiba band as a fraction of the longer length")
    sp.add_argument("--path", action="store_true", help="also print an optimal warping path")
    sp.set_defaults(func=cmd_dist)

    sp = sub.add_parser("stats", help="reducibility per dataset and length correlations")
    sp.add_argument("--data", required=True, help="UCR archive root or single dataset directory")
    output(sp)
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("bench", help="time euc/dtw/twi on random pairs")
    sp.add_argument("--data", required=True)
    sp.add_argument("--pairs", type=_pos_int, default=100)
    sp.add_argument("--reps", type=_pos_int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--methods", nargs="+", choices=("euc", "dtw", "twi"), default=["euc", "dtw", "twi"])
    output(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("knn", help="1-NN accuracy by cross-validation")
    sp.add_argument("--data", required=True)
    sp.add_argument("--method", choices=("euc", "dtw", "twi", "opt-dtw", "opt-twi"), default="dtw")
    sp.add_argument("--folds", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--band", type=_nonneg_float)
    sp.add_argument("--opt", action="store_true", help="use the banded, lower-bounded search")
    sp.add_argument("--no-merge", dest="merge", action="store_false",
                    help="evaluate on the given train/test split instead of cross-validating the union")
    sp.add_argument("--jobs", type=_pos_int, default=1)
    output(sp)
    sp.set_defaults(func=cmd_knn)

    sp = sub.add_parser("synth", help="error rates on the synthetic cylinder data")
    sp.add_argument("--row", nargs="+", choices=sorted(CYLINDER_ROWS), default=sorted(CYLINDER_ROWS))
    sp.add_argument("--repeats", type=_pos_int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=_pos_int, default=1)
    output(sp)
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("kmeans-demo", help="cohesion and separation as a mean is expanded")
    sp.add_argument("--rmax", type=_pos_int, default=10)
    output(sp, json_ok=False)
    sp.set_defaults(func=cmd_kmeans_demo)

    sp = sub.add_parser("bayes", help="Bayesian sign test on accuracy differences")
    sp.add_argument("--diffs", required=True, help="file of differences, one per line or comma separated")
    sp.add_argument("--rope", type=_nonneg_float, default=0.005)
    sp.add_argument("--prior", type=_nonneg_float, default=1.0)
    sp.add_argument("--samples", type=_pos_int, default=50_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_bayes)

    sp = sub.add_parser("segment", help="cut a meter log into d-day windows (UCR format)")
    sp.add_argument("--data", required=True, help="CSV with one column per meter")
    sp.add_argument("--days", type=_pos_int, default=1)
    sp.add_argument("--columns", nargs="+")
    sp.add_argument("--out", required=True, help="output directory")
    sp.set_defaults(func=cmd_segment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors, 0 for --help
        return int(exc.code or 0)
    try:
        args.func(args)
    except (ValueError, OSError) as exc:  # DataFormatError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
