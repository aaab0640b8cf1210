"""Acceptance criteria, one test per row; each prints its pass/fail line."""

import pytest

from tenfold import verify


@pytest.fixture(scope="module")
def results():
    return {name: (ok, detail) for name, ok, detail in verify.run()}


@pytest.mark.parametrize("name", [name for name, _ in verify.CRITERIA])
def test_criterion(results, name):
    ok, detail = results[name]
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail
