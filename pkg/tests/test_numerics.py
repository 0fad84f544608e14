import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from airywell import ConvergenceError, DomainError, find_roots, integrate, refine_root, scan_brackets
from airywell.maf import _sho_condition
from airywell.numerics import Bracket
from airywell.wkb import dwp_wkb_condition


def test_cos_brackets():
    # zeros of cos inside [0, 7] are pi/2 and 3pi/2; 5pi/2 = 7.85 lies outside
    brs = scan_brackets(math.cos, 0.0, 7.0, 100)
    assert len(brs) == 2
    for br, root in zip(brs, (math.pi / 2, 3 * math.pi / 2)):
        assert br.lo < root < br.hi
    assert [b.lo for b in brs] == sorted(b.lo for b in brs)


def test_cos_brackets_extended_range():
    brs = scan_brackets(math.cos, 0.0, 8.0, 100)
    assert len(brs) == 3 and brs[2].lo < 5 * math.pi / 2 < brs[2].hi


def test_double_root_is_invisible():
    assert scan_brackets(lambda z: (z - 1) ** 2, 0.0, 2.0, 100) == []


def test_odd_wkb_condition_has_two_brackets_below_barrier():
    z0 = 2.0
    brs = scan_brackets(lambda e: dwp_wkb_condition(e, z0, "odd"), 1e-9, 4 - 1e-9, 2000)
    assert len(brs) == 2
    assert brs[0].lo < 1.039081813 < brs[0].hi
    assert brs[1].lo < 3.240818000 < brs[1].hi


def test_pole_is_not_a_root():
    brs = scan_brackets(lambda x: 1 / math.tan(x), 0.1, 3.0, 50)
    assert len(brs) == 1 and brs[0].lo < math.pi / 2 < brs[0].hi
    assert len(scan_brackets(lambda x: math.tan(x), 0.1, 3.0, 50, reject_poles=False)) == 1
    # a pole whose sign change slips past the midpoint test is caught after refinement
    assert find_roots(math.tan, 0.1, 3.0, 50) == []


def test_non_finite_points_are_skipped():
    f = lambda x: math.nan if abs(x - 0.5) < 0.05 else x - 0.8  # noqa: E731
    brs = scan_brackets(f, 0.0, 1.0, 101)
    assert len(brs) == 1 and len(brs.skipped) > 0
    with pytest.raises(DomainError):
        scan_brackets(lambda x: math.nan, 0.0, 1.0, 10)


def test_root_on_grid_node():
    brs = scan_brackets(lambda x: x - 0.5, 0.0, 1.0, 11)
    assert len(brs) == 1 and brs[0].lo < 0.5 < brs[0].hi


@pytest.mark.parametrize("lo,hi,n", [(1.0, 1.0, 10), (2.0, 1.0, 10), (0.0, 1.0, 1)])
def test_scan_preconditions(lo, hi, n):
    with pytest.raises(DomainError):
        scan_brackets(math.sin, lo, hi, n)


def test_bracket_invariants():
    with pytest.raises(DomainError):
        Bracket(1.0, 0.0, -1.0, 1.0)
    with pytest.raises(DomainError):
        Bracket(0.0, 1.0, 1.0, 1.0)


def test_refine_cos():
    r = refine_root(math.cos, Bracket(1.0, 2.0, math.cos(1.0), math.cos(2.0)), tol=1e-12)
    assert r == pytest.approx(math.pi / 2, abs=1e-12)


def test_refine_linear_in_one_step():
    calls = []

    def f(x):
        calls.append(x)
        return x - 0.3

    r = refine_root(f, Bracket(0.0, 1.0, -0.3, 0.7))
    assert r == 0.3 and len(calls) == 1


def test_refine_sho_odd_maf_condition():
    f = lambda e: _sho_condition(e, "odd")  # noqa: E731
    r = refine_root(f, Bracket(2.5, 3.5, f(2.5), f(3.5)))
    assert round(r, 3) == 3.035


def test_refine_reports_non_finite():
    f = lambda x: math.inf if x > 0.4 else x - 0.6  # noqa: E731
    with pytest.raises(ConvergenceError) as info:
        refine_root(f, Bracket(0.0, 1.0, -0.6, 0.4))
    lo, hi = info.value.partial
    assert lo < hi


def test_refine_rejects_bad_tolerance():
    with pytest.raises(DomainError):
        refine_root(math.cos, Bracket(1.0, 2.0, math.cos(1.0), math.cos(2.0)), tol=0)


@settings(max_examples=60, deadline=None)
@given(c=st.floats(min_value=-1e6, max_value=1e6).filter(lambda c: abs(c) > 1e-6),
       a=st.floats(min_value=0.05, max_value=0.95))
def test_refine_invariant_under_rescaling(c, a):
    f = lambda x: math.tanh(4 * (x - a)) + 0.1 * (x - a) ** 3  # noqa: E731
    g = lambda x: c * f(x)  # noqa: E731
    r1 = refine_root(f, Bracket(0.0, 1.0, f(0.0), f(1.0)))
    r2 = refine_root(g, Bracket(0.0, 1.0, g(0.0), g(1.0)))
    assert r1 == pytest.approx(a, abs=1e-12)
    assert r2 == pytest.approx(r1, abs=1e-12)


def test_find_roots_discards_poles():
    roots = find_roots(lambda x: 1 / math.tan(x) - 0.5, 0.1, 6.0, 500)
    want = [math.atan(2.0), math.atan(2.0) + math.pi]
    assert roots == pytest.approx(want, abs=1e-12)


def test_integrate_sin():
    res = integrate(np.sin, 0.0, math.pi)
    assert res.value == pytest.approx(2.0, abs=1e-10)
    assert res.converged and res.error_estimate >= 0 and res.evaluations >= 15


def test_integrate_endpoint_singularity():
    res = integrate(lambda x: x**-0.5, 0.0, 1.0)
    assert res.value == pytest.approx(2.0, abs=1e-6)


def test_integrate_gaussian_ground_state():
    psi0 = lambda z: math.pi**-0.25 * np.exp(-z * z / 2)  # noqa: E731
    res = integrate(lambda z: psi0(z) ** 2, -12.0, 12.0)
    assert res.value == pytest.approx(1.0, abs=1e-10)


def test_integrate_reversed_and_empty():
    assert integrate(np.cos, 1.0, 0.0).value == pytest.approx(-math.sin(1.0), abs=1e-12)
    assert integrate(np.cos, 1.0, 1.0).value == 0.0


def test_integrate_flags_non_convergence():
    res = integrate(lambda x: np.sin(1 / x), 1e-6, 1.0, tol=1e-14, limit=3)
    assert not res.converged and math.isfinite(res.value)


def test_integrate_rejects_non_finite_integrand():
    with pytest.raises(DomainError):
        integrate(lambda x: np.where(x > 0.5, np.nan, x), 0.0, 1.0)


@settings(max_examples=40, deadline=None)
@given(a=st.floats(-3, 0), b=st.floats(0, 2), c=st.floats(2, 5))
def test_integrate_additivity(a, b, c):
    f = lambda x: np.exp(-x * x) * np.cos(3 * x)  # noqa: E731
    whole = integrate(f, a, c).value
    parts = integrate(f, a, b).value + integrate(f, b, c).value
    assert whole == pytest.approx(parts, abs=3e-10)
