from __future__ import annotations

import os
import sys

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# filled by tests/test_acceptance.py: criterion -> (name, passed, seconds, limit)
ACCEPTANCE: dict[int, tuple[str, bool, float, float]] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        name, ok, secs, limit = ACCEPTANCE[n]
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'} criterion {n}: {name} ({secs:.1f}s, limit {limit:.0f}s)")
