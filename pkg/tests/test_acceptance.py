"""Acceptance criteria 1-9 at full settings.

Each test prints one ``[PASS]`` or ``[FAIL]`` line.  The file also runs as a
script: ``python3 tests/test_acceptance.py``.
"""

import sys

import pytest

from spectop.verify import CRITERIA, criterion_options, run_criterion

OPTIONS = criterion_options()


def _run(k):
    r = run_criterion(k, **OPTIONS[k])
    return r, r.line()


@pytest.mark.slow
@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    r, line = _run(k)
    with capsys.disabled():
        print("\n" + line)
    assert r.passed, r.detail


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        r, line = _run(k)
        print(line, flush=True)
        failed += not r.passed
    sys.exit(1 if failed else 0)
