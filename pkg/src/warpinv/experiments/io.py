"""Reading UCR-format data and AMPds2-style meter logs, writing results."""

from __future__ import annotations

import csv
import json
import math
import re
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, Iterator, TextIO

import numpy as np

from ..core import LabeledDataset

__all__ = [
    "DataFormatError",
    "ExperimentRecord",
    "load_ucr",
    "load_series",
    "load_ucr_dataset",
    "iter_ucr_archive",
    "write_ucr",
    "segment_meter_log",
    "write_records_csv",
    "write_records_json",
    "RECORD_COLUMNS",
]


class DataFormatError(ValueError):
    """Raised for unreadable or malformed input files."""


RECORD_COLUMNS = ("dataset", "method", "metric", "value", "fold", "seed", "wall_ms")


@dataclass(frozen=True)
class ExperimentRecord:
    """One measured value. ``fold`` doubles as repeat or pair index."""

    dataset: str
    method: str
    metric: str
    value: float
    fold: int | None = None
    seed: int | None = None
    wall_ms: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"non-finite value for {self.dataset}/{self.method}/{self.metric}")

    def row(self) -> list:
        return ["" if v is None else v for v in (getattr(self, c) for c in RECORD_COLUMNS)]


# ---------------------------------------------------------------------------
# UCR
# ---------------------------------------------------------------------------

_SPLIT = {"\t": lambda s: s.split("\t"), ",": lambda s: s.split(","), None: str.split}


def _detect_delimiter(line: str) -> str | None:
    if "\t" in line:
        return "\t"
    if "," in line:
        return ","
    return None


def _label_token(tok: str) -> str:
    # the 2015 archive writes labels as floats ("1.0000000e+00")
    tok = tok.strip()
    try:
        v = float(tok)
    except ValueError:
        return tok
    if math.isfinite(v) and v == int(v):
        return str(int(v))
    return tok


def _parse_values(fields: list[str], where: str) -> np.ndarray:
    try:
        vals = np.array([float(f) for f in fields], dtype=np.float64)
    except ValueError as exc:
        raise DataFormatError(f"{where}: {exc}") from None
    nan = np.isnan(vals)
    if nan.any():
        last = vals.size - int(np.argmax(~nan[::-1])) if (~nan).any() else 0
        if nan[:last].any():
            raise DataFormatError(f"{where}: NaN inside the series")
        vals = vals[:last]
    if vals.size == 0:
        raise DataFormatError(f"{where}: no values")
    if np.isinf(vals).any():
        raise DataFormatError(f"{where}: infinite value")
    return vals


def load_ucr(path, name: str | None = None) -> LabeledDataset:
    """Read a UCR-format file: one series per line, class label first.

    Fields may be separated by tabs, commas or whitespace (detected from
    the first line). Trailing NaN padding of variable-length series is
    dropped.

    Raises
    ------
    DataFormatError
        For an empty file, a row without values, a non-numeric field or a
        NaN inside a series.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc}") from None
    lines = [(k, ln) for k, ln in enumerate(text.splitlines(), 1) if ln.strip()]
    if not lines:
        raise DataFormatError(f"{path} is empty")
    split = _SPLIT[_detect_delimiter(lines[0][1])]
    series, labels = [], []
    for k, ln in lines:
        fields = [f.strip() for f in split(ln.strip())]
        if len(fields) < 2 or any(f == "" for f in fields):
            raise DataFormatError(f"{path}:{k}: malformed row")
        labels.append(_label_token(fields[0]))
        series.append(_parse_values(fields[1:], f"{path}:{k}"))
    return LabeledDataset(series, labels, name=name or path.stem)


def load_series(path) -> np.ndarray:
    """Read a single unlabeled series: numbers separated by commas, tabs or whitespace."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc}") from None
    fields = [f for f in re.split(r"[,\s]+", text.strip()) if f]
    if not fields:
        raise DataFormatError(f"{path} is empty")
    return _parse_values(fields, str(path))


def _split_files(directory: Path) -> tuple[Path, Path] | None:
    name = directory.name
    for suffix in (".tsv", ".txt", ".csv", ""):
        tr, te = directory / f"{name}_TRAIN{suffix}", directory / f"{name}_TEST{suffix}"
        if tr.is_file() and te.is_file():
            return tr, te
    return None


def load_ucr_dataset(directory, merge: bool = True):
    """Load a UCR dataset directory ``Name/`` holding ``Name_TRAIN*`` and ``Name_TEST*``.

    Returns the merged dataset (train first), or ``(train, test)`` when
    ``merge`` is false.
    """
    directory = Path(directory)
    files = _split_files(directory)
    if files is None:
        raise DataFormatError(f"{directory} holds no {directory.name}_TRAIN/_TEST pair")
    train = load_ucr(files[0], name=directory.name)
    test = load_ucr(files[1], name=directory.name)
    return train.concat(test) if merge else (train, test)


def iter_ucr_archive(root) -> Iterator[Path]:
    """Dataset directories below ``root``, sorted by name.

    ``root`` may itself be a single dataset directory.
    """
    root = Path(root)
    if not root.is_dir():
        raise DataFormatError(f"{root} is not a directory")
    if _split_files(root) is not None:
        yield root
        return
    found = False
    for sub in sorted(p for p in root.iterdir() if p.is_dir()):
        if _split_files(sub) is not None:
            found = True
            yield sub
    if not found:
        raise DataFormatError(f"no UCR datasets found under {root}")


def write_ucr(data: LabeledDataset, path) -> None:
    """Write tab-separated UCR format."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for lab, s in zip(data.labels, data.series):
            fh.write("\t".join([lab, *(repr(float(v)) for v in s)]) + "\n")


# ---------------------------------------------------------------------------
# meter logs
# ---------------------------------------------------------------------------

_TIME_COLUMNS = {"ts", "time", "timestamp", "date", "datetime", "unix_ts"}


def segment_meter_log(
    path, days: int, columns: Iterable[str] | None = None, samples_per_day: int = 1440
) -> tuple[LabeledDataset, LabeledDataset]:
    """Cut each meter column of a CSV log into windows of ``days`` days.

    Every selected column is one long series labeled by its header.
    Windows hold ``samples_per_day * days`` readings; an incomplete final
    window is dropped. Windows with odd 1-based index go to the training
    set, the others to the test set. Time-stamp columns are skipped unless
    named in ``columns``.
    """
    if days < 1:
        raise ValueError("days must be at least 1")
    path = Path(path)
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc}") from None
    if len(rows) < 2:
        raise DataFormatError(f"{path} needs a header and at least one row")
    header = [h.strip() for h in rows[0]]
    if columns is None:
        wanted = [h for h in header if h.lower() not in _TIME_COLUMNS]
    else:
        wanted = list(columns)
        missing = set(wanted) - set(header)
        if missing:
            raise DataFormatError(f"columns not in {path}: {sorted(missing)}")
    width = samples_per_day * days
    tr_s, tr_l, te_s, te_l = [], [], [], []
    for col in wanted:
        k = header.index(col)
        try:
            vals = np.array([float(r[k]) for r in rows[1:]], dtype=np.float64)
        except (ValueError, IndexError):
            raise DataFormatError(f"{path}: column {col!r} is not numeric") from None
        if not np.isfinite(vals).all():
            raise DataFormatError(f"{path}: column {col!r} has missing values")
        for w in range(vals.size // width):
            seg = vals[w * width:(w + 1) * width]
            if w % 2 == 0:  # 1-based index w + 1 is odd
                tr_s.append(seg)
                tr_l.append(col)
            else:
                te_s.append(seg)
                te_l.append(col)
    if not tr_s or not te_s:
        raise DataFormatError(f"{path}: too few readings for {days}-day windows")
    name = f"{path.stem}_{days}d"
    return LabeledDataset(tr_s, tr_l, name=name), LabeledDataset(te_s, te_l, name=name)


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------


def write_records_csv(records: Iterable[ExperimentRecord], out: TextIO | str | Path) -> None:
    """CSV with a header row and LF line endings."""
    if isinstance(out, (str, Path)):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            write_records_csv(records, fh)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(RECORD_COLUMNS)
    for r in records:
        w.writerow(r.row())


def write_records_json(records: Iterable[ExperimentRecord], out: TextIO | str | Path) -> None:
    payload = [asdict(r) for r in records]
    if isinstance(out, (str, Path)):
        Path(out).write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    else:
        json.dump(payload, out, indent=1)
        out.write("\n")
