from __future__ import annotations

from fractions import Fraction
import math

from misbench.bounds import (
    admissible_witness,
    binary_entropy,
    binomial_tail_check,
    bounds_report,
    check_term_monotonicity,
    corollary1,
    corollary1_induction_identity,
    corollary2_step,
    curve_export,
    curves_to_csv,
    eppstein,
    eq3_sum,
    monotonicity_conditions,
    moon_moser,
    nielsen,
    nu_witness,
    solve_eps_delta,
    solve_eta,
    theorem1_exponent,
)
from misbench.const import ENTROPY_EPS_MAX
from misbench.exception import PreconditionViolation

from hypothesis import given, strategies as st
import pytest


def test_exact_values():
    assert eppstein(4, 1).exact == 4
    assert eppstein(3, 1).exact == 3
    assert eppstein(5, 2).exact == Fraction(27, 4)
    assert eppstein(5, 2).to_model().exact == "27/4"
    assert nielsen(5, 1).exact == 5
    assert nielsen(9, 2).exact == 20
    assert moon_moser(6).exact == 9
    assert not moon_moser(4).is_exact
    assert moon_moser(4).value == pytest.approx(4.3267487, rel=1e-6)


def test_corollary1_anchor():
    assert corollary1(4, 1, 0.4).value == pytest.approx(3.97086, rel=1e-5)


@given(
    st.integers(1, 60).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(0, n))
    )
)
def test_corollary1_interpolates(nk: tuple[int, int]):
    n, k = nk
    assert corollary1(n, k, 0).log_value == pytest.approx(
        nielsen(n, k).log_value, abs=1e-9
    )
    assert corollary1(n, k, 1).log_value == pytest.approx(
        eppstein(n, k).log_value, abs=1e-9
    )


@given(
    st.integers(6, 60),
    st.integers(1, 12),
    st.floats(0, 1, allow_nan=False),
)
def test_induction_identity(n: int, k: int, eta: float):
    assert corollary1_induction_identity(n, min(k, n), eta) < 1e-9


def test_preconditions():
    with pytest.raises(PreconditionViolation):
        eppstein(3, 4)
    with pytest.raises(PreconditionViolation):
        nielsen(-1, 0)
    with pytest.raises(PreconditionViolation):
        corollary1(4, 1, 1.5)
    with pytest.raises(PreconditionViolation):
        theorem1_exponent(0.05)
    with pytest.raises(PreconditionViolation):
        eq3_sum(10, 11)


def test_huge_bound_has_no_float_value():
    bound = eppstein(3000, 750)
    assert bound.is_exact
    assert bound.value == math.inf
    assert bound.to_model().value is None


def test_monotonicity_constants():
    c1, c2 = monotonicity_conditions(0)
    assert c1 == pytest.approx(0.441604, abs=1e-6)
    assert c2 == pytest.approx(-0.130638, abs=1e-6)
    report = check_term_monotonicity(40)
    assert report.mibs1_nondecreasing
    assert report.mibs2_nonincreasing


def test_eq3_at_quarter_cut():
    result = eq3_sum(40, 10)
    assert result.reference_log == pytest.approx(10 * math.log(12))
    assert result.mibs1_max_log == pytest.approx(result.reference_log)
    assert result.mibs2_max_log is not None
    assert result.mibs2_max_log < result.reference_log
    assert result.argmax == 10


def test_eq3_empty_second_sum():
    result = eq3_sum(8, 8)
    assert result.mibs2_log is None
    assert result.mibs2_max_log is None
    assert result.mibs1_log is not None


def test_entropy():
    assert binary_entropy(0.25) == pytest.approx(0.811278, abs=1e-6)
    assert binary_entropy(0) == 0
    assert binary_entropy(0.5) == pytest.approx(1)


@pytest.mark.parametrize("N", [10, 20, 30])
@pytest.mark.parametrize("alpha", [0.1, 0.25, 0.5])
def test_binomial_tail(N: int, alpha: float):
    assert binomial_tail_check(N, alpha).holds


def test_theorem1_exponent():
    assert theorem1_exponent(0) == pytest.approx(0.9943914, abs=1e-6)
    eps, delta = solve_eps_delta()
    assert 0 < eps < 1 / 23
    assert theorem1_exponent(eps) < 1
    assert theorem1_exponent(eps + 1e-6) >= 1
    assert delta == pytest.approx(4 - 4 ** theorem1_exponent(eps))
    assert delta > 0


def test_margin_shrinks_eps():
    assert solve_eps_delta(1e-3)[0] < solve_eps_delta(0)[0]
    with pytest.raises(PreconditionViolation):
        solve_eps_delta(0.01)


def test_solve_eta():
    eps, delta = solve_eps_delta(1e-3)
    eta = solve_eta(eps, delta)
    assert 0 <= eta < 1


def test_admissible_witness():
    witness = admissible_witness()
    assert witness.solve.f_eps < 1
    assert witness.solve.eta is not None
    assert witness.witness.n == 40
    assert all(check.holds for check in witness.tail_checks)


def test_corollary2_step():
    assert corollary2_step(1.0, 40)
    assert not corollary2_step(7.0, 40)
    with pytest.raises(PreconditionViolation):
        corollary2_step(12.0, 40)


def test_nu_witness_cut():
    report = nu_witness(40, 0.0, 0.0)
    assert report.p_cut == 10
    assert report.nu2 is not None
    assert report.nu2 > 0


def test_bounds_report():
    report = bounds_report(4, 1, 0.4)
    assert report.eppstein.exact == "4"
    assert report.nielsen.exact == "4"
    assert report.corollary1.exact is None
    assert report.corollary1.value == pytest.approx(3.97086, rel=1e-5)
    assert report.identity_residual < 1e-9
    assert report.identity_holds


def test_curves():
    rows = curve_export(0.5)
    assert len(rows) == 81
    by_x = {round(row.x, 9): row for row in rows}
    quarter = by_x[0.25]
    assert quarter.eppstein == pytest.approx(math.log(4) / 4)
    assert quarter.interp == pytest.approx(math.log(4) / 4)
    assert by_x[0.2].nielsen == pytest.approx(math.log(5) / 5)
    third = by_x[round(1 / 3, 9)]
    assert third.eppstein == pytest.approx(math.log(3) / 3)
    assert third.interp == pytest.approx(math.log(3) / 3)


def test_curves_csv():
    text = curves_to_csv(curve_export(0, resolution=3))
    lines = text.splitlines()
    assert lines[0] == "x,eppstein,nielsen,interp,corollary1_eta"
    assert len(lines) == 4
    assert lines[1].startswith("0.2,")


def test_curve_preconditions():
    with pytest.raises(PreconditionViolation):
        curve_export(0, resolution=1)
    with pytest.raises(PreconditionViolation):
        curve_export(0, x_min=Fraction(1, 10))


def test_interpolated_curve_dips_below_both_near_quarter():
    rows = curve_export(
        0.1, resolution=3, x_min=Fraction(248, 1000), x_max=Fraction(252, 1000)
    )
    for row in rows:
        assert row.corollary1_eta < min(row.eppstein, row.nielsen)


def test_first_sum_growth_is_positive():
    assert all(monotonicity_conditions(i / 1000)[0] > 0 for i in range(1001))


@pytest.mark.parametrize("eta", [0.0, 0.5, 1.0])
def test_term_monotonicity_up_to_200(eta: float):
    for n in range(1, 201):
        report = check_term_monotonicity(n, eta)
        assert report.mibs1_nondecreasing, n
        assert report.mibs2_nonincreasing, n


def test_exponent_strictly_increasing():
    grid = [ENTROPY_EPS_MAX * i / 1000 for i in range(1001)]
    values = [theorem1_exponent(eps) for eps in grid]
    assert all(b > a for a, b in zip(values, values[1:]))


@given(
    st.integers(0, 60).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(0, n))
    )
)
def test_exact_and_log_paths_agree(nk: tuple[int, int]):
    n, k = nk
    for bound, log_value in [
        (eppstein(n, k), (4 * k - n) * math.log(3) + (n - 3 * k) * math.log(4)),
        (nielsen(n, k), (5 * k - n) * math.log(4) + (n - 4 * k) * math.log(5)),
    ]:
        assert bound.is_exact
        assert bound.log_value == pytest.approx(
            math.log(float(bound.exact)), rel=1e-12, abs=1e-12
        )
        assert bound.log_value == pytest.approx(log_value, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("t", [0, 1, 5, 20])
def test_moon_moser_exact_matches_log(t: int):
    bound = moon_moser(3 * t)
    assert bound.exact == 3**t
    assert bound.log_value == pytest.approx(t * math.log(3), rel=1e-12, abs=1e-12)
