import re

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from monoext import Extension, FinitePoset, UtilityDataset

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion, capture-proof."""
    rows = {}
    for outcome, status in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m and (outcome == "error" or rep.when == "call"):
                label = m.group(2).replace("_", " ")
                rows[int(m.group(1))] = f"ACCEPTANCE {int(m.group(1)):02d} {status} — {label}"
    if rows:
        terminalreporter.section("acceptance checklist")
        for num in sorted(rows):
            terminalreporter.write_line(rows[num])


@pytest.fixture
def d1():
    """Two comparable samples: (0,0) -> 0 and (2,2) -> 10."""
    return UtilityDataset.from_points([[0.0, 0.0], [2.0, 2.0]], [0.0, 10.0])


@pytest.fixture
def d1_ext(d1):
    return Extension(d1)


@pytest.fixture
def pareto_ds():
    """Antichain: (0,1) -> 5 and (1,0) -> -3."""
    return UtilityDataset.from_points([[0.0, 1.0], [1.0, 0.0]], [5.0, -3.0])


@pytest.fixture
def chain_poset():
    """Chain a < b < c plus an isolated element d."""
    return FinitePoset(["a", "b", "c", "d"], [("a", "b"), ("b", "c")])


@pytest.fixture
def chain_ds(chain_poset):
    """Samples a -> 0 and c -> 1 on the chain poset."""
    return UtilityDataset.from_poset_samples(chain_poset, [("a", 0.0), ("c", 1.0)])


@pytest.fixture
def rng():
    return np.random.default_rng(20260813)
