import os
from collections import OrderedDict

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion
# ---------------------------------------------------------------------------

_RESULTS: "OrderedDict[str, str]" = OrderedDict()
_RANK = {"PASS": 0, "SKIP": 1, "FAIL": 2}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            item.user_properties.append(("criterion", marker.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.skipped or report.failed:
        status = "SKIP" if report.skipped else "FAIL" if report.failed else "PASS"
        prev = _RESULTS.get(crit)
        if prev is None or _RANK[status] > _RANK[prev]:
            _RESULTS[crit] = status


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_RESULTS, key=_criterion_key):
        terminalreporter.write_line(f"{_RESULTS[crit]:4}  {crit}")


def _criterion_key(name: str):
    head = name.split()[0].rstrip(":")
    num = "".join(ch for ch in head.split("-")[0] if ch.isdigit())
    return (int(num) if num else 99, head)
