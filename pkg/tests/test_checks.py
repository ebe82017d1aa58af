import pytest

from btableaux import checks, signedperm


@pytest.mark.parametrize("name", checks.SUITE_NAMES)
def test_suite_passes_at_small_bound(name):
    bound = 3 if name not in ("schroeder",) else 6
    rep = checks.run_suite(name, bound)
    assert rep.ok, rep.line()
    assert rep.param_range == f"n <= {bound}"


def test_failure_carries_counterexample(monkeypatch):
    monkeypatch.setattr(signedperm, "crossings", lambda p: 0)
    rep = checks.run_suite("cro-al", 3)
    assert rep.status == "fail"
    assert rep.counterexample and "intersecting pairs" in rep.counterexample
    assert "FAIL" in rep.line()


def test_bounds_under_all():
    assert checks.bound_for("narayana", 5, in_all=True) == 7
    assert checks.bound_for("narayana", 5) == 5
    assert checks.bound_for("zigzag", None) == 5
    assert checks.bound_for("distribution", 9, in_all=True) == 9


def test_type_b_eulerian_triangle():
    assert [checks.eulerian_b_number(3, k) for k in range(4)] == [1, 23, 23, 1]
