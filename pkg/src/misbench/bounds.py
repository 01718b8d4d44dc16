from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
import io
import math
from typing import Optional

from .const import (
    BISECTION_TOLERANCE,
    ENTROPY_EPS_MAX,
    FLOAT_DIGITS,
    IDENTITY_TOLERANCE,
    LOG_TOLERANCE,
    SQUARE_PACKING_RATIO,
)
from .exception import PreconditionViolation
from .log import log
from .models.bounds import (
    AdmissibleWitness,
    BoundsReport,
    BoundValue,
    CurveRow,
    Eq3Result,
    MonotonicityReport,
    SolveReport,
    TailCheck,
    WitnessReport,
)
from .utils import fraction_str

LN3 = math.log(3)
LN4 = math.log(4)
LN5 = math.log(5)
LN12 = math.log(12)
LOG2_3 = math.log2(3)

# loss per square-packed cell: 1 - log2(3)/2
CELL_SAVING = 1 - LOG2_3 / 2


@dataclass(frozen=True)
class ExactBound:
    """A bound kept as an exact rational when its exponents are integral."""

    log_value: float
    exact: Optional[Fraction] = None

    @classmethod
    def from_fraction(cls, value: Fraction) -> "ExactBound":
        return cls(_log_fraction(value), value)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def value(self) -> float:
        """Float value; ``inf`` when it does not fit a double."""
        try:
            if self.exact is not None:
                return float(self.exact)
            return math.exp(self.log_value)
        except OverflowError:
            return math.inf

    def to_model(self) -> BoundValue:
        value = self.value
        return BoundValue(
            exact=None if self.exact is None else fraction_str(self.exact),
            log=self.log_value,
            value=None if math.isinf(value) else value,
        )


def _log_fraction(value: Fraction) -> float:
    return math.log(value.numerator) - math.log(value.denominator)


def _check_order(n: int, k: int) -> None:
    if n < 0 or not 0 <= k <= n:
        raise PreconditionViolation("expected 0 <= k <= n", (n, k))


def _check_eta(eta: float) -> None:
    if not 0 <= eta <= 1:
        raise PreconditionViolation("eta must lie in [0, 1]", eta)


def _two_base(a: int, ea: int, b: int, eb: int) -> ExactBound:
    return ExactBound.from_fraction(Fraction(a) ** ea * Fraction(b) ** eb)


def moon_moser(n: int) -> ExactBound:
    """``3^(n/3)``, exact when ``3 | n``."""
    if n < 0:
        raise PreconditionViolation("order must be nonnegative", n)
    if n % 3 == 0:
        return ExactBound.from_fraction(Fraction(3 ** (n // 3)))
    return ExactBound(n / 3 * LN3)


def eppstein(n: int, k: int) -> ExactBound:
    """``3^(4k-n) 4^(n-3k)``, bound on mis_{<=k}."""
    _check_order(n, k)
    return _two_base(3, 4 * k - n, 4, n - 3 * k)


def nielsen(n: int, k: int) -> ExactBound:
    """``4^(5k-n) 5^(n-4k)``, bound on mis_k."""
    _check_order(n, k)
    return _two_base(4, 5 * k - n, 5, n - 4 * k)


def _corollary1_log(n: float, k: float, eta: float) -> float:
    a, b = 4 - eta, 5 - eta
    return (b * k - n) * math.log(a) + (n - a * k) * math.log(b)


def _eppstein_log(n: float, k: float) -> float:
    return (4 * k - n) * LN3 + (n - 3 * k) * LN4


def corollary1(n: int, k: int, eta: float) -> ExactBound:
    """``(4-eta)^((5-eta)k-n) (5-eta)^(n-(4-eta)k)``.

    Interpolates between Nielsen's bound (``eta = 0``) and Eppstein's
    (``eta = 1``).
    """
    _check_order(n, k)
    _check_eta(eta)
    return ExactBound(_corollary1_log(n, k, eta))


def corollary1_induction_identity(n: int, k: int, eta: float) -> float:
    """Relative residual of ``T1 + T2 = RHS`` for branching on a vertex of degree
    ``4 - eta``: ``T1`` bounds ``G - u`` and ``T2`` bounds ``G - N[u]``."""
    _check_eta(eta)
    rhs = _corollary1_log(n, k, eta)
    t1 = _corollary1_log(n - 1, k, eta)
    t2 = _corollary1_log(n - (5 - eta), k - 1, eta)
    return abs(math.exp(t1 - rhs) + math.exp(t2 - rhs) - 1)


def _logsumexp(values: list[float]) -> Optional[float]:
    if not values:
        return None
    top = max(values)
    return top + math.log(math.fsum(math.exp(v - top) for v in values))


def _eq3_terms(
    n: int, p_cut: int, eta: float, eps: Optional[float] = None
) -> tuple[list[float], list[float]]:
    """Log terms of both sums, indexed by ``|A| = k``."""
    first = []
    for k in range(p_cut + 1):
        if eta > 0 and (eps is None or k <= (1 + eps) * n / 4):
            options_a = _corollary1_log(n, k, eta)
        else:
            options_a = _eppstein_log(n, k)
        first.append(options_a + _eppstein_log(n - k, k))
    second = [
        _eppstein_log(n, k) + (n - k) / 3 * LN3 for k in range(p_cut + 1, n + 1)
    ]
    return first, second


def eq3_sum(
    n: int, p_cut: int, eta: float = 0.0, eps: Optional[float] = None
) -> Eq3Result:
    """Evaluate both sums of the two-sum estimate in the log domain.

    The first runs over ``k <= p_cut`` and bounds the options for ``B`` by
    Eppstein's bound on ``n - k`` vertices, the second over ``k > p_cut`` by
    ``3^((n-k)/3)``. Options for ``A`` use :func:`corollary1` when ``eta > 0``
    (only up to ``k <= (1 + eps) n / 4`` when ``eps`` is given), Eppstein's
    bound otherwise.
    """
    if not 0 <= p_cut <= n:
        raise PreconditionViolation("expected 0 <= p_cut <= n", (n, p_cut))
    _check_eta(eta)
    first, second = _eq3_terms(n, p_cut, eta, eps)
    terms = first + second
    argmax = max(range(len(terms)), key=lambda i: (terms[i], -i))
    return Eq3Result(
        n=n,
        p_cut=p_cut,
        eta=eta,
        eps=eps,
        mibs1_log=_logsumexp(first),
        mibs2_log=_logsumexp(second),
        mibs1_max_log=max(first, default=None),
        mibs2_max_log=max(second, default=None),
        max_term_log=terms[argmax],
        argmax=argmax,
        reference_log=n / 4 * LN12,
    )


def monotonicity_conditions(eta: float) -> tuple[float, float]:
    """Per-step log growth of the terms of the first and second sum."""
    _check_eta(eta)
    c1 = (
        (5 - eta) * math.log(4 - eta)
        - (4 - eta) * math.log(5 - eta)
        + 5 * LN3
        - 4 * LN4
    )
    c2 = 4 * LN3 - 3 * LN4 - LN3 / 3
    return c1, c2


def check_term_monotonicity(n: int, eta: float = 0.0) -> MonotonicityReport:
    """Check term by term that the first sum grows and the second shrinks in ``k``."""
    c1, c2 = monotonicity_conditions(eta)
    first, _ = _eq3_terms(n, n, eta)
    _, second = _eq3_terms(n, -1, eta)
    return MonotonicityReport(
        eta=eta,
        c1=c1,
        c2=c2,
        n_checked=n,
        mibs1_nondecreasing=all(
            b >= a - LOG_TOLERANCE for a, b in zip(first, first[1:])
        ),
        mibs2_nonincreasing=all(
            b <= a + LOG_TOLERANCE for a, b in zip(second, second[1:])
        ),
    )


def binary_entropy(alpha: float) -> float:
    if not 0 <= alpha <= 1:
        raise PreconditionViolation("alpha must lie in [0, 1]", alpha)
    if alpha in (0, 1):
        return 0.0
    return -alpha * math.log2(alpha) - (1 - alpha) * math.log2(1 - alpha)


def binomial_tail_check(N: int, alpha: float) -> TailCheck:
    """Compare ``sum_{s <= floor(alpha N)} C(N, s)`` with ``2^{h(alpha) N}``."""
    if not 0 < alpha <= 0.5:
        raise PreconditionViolation("alpha must lie in (0, 1/2]", alpha)
    top = math.floor(Fraction(alpha) * N)
    lhs = sum(math.comb(N, s) for s in range(top + 1))
    rhs_log2 = binary_entropy(alpha) * N
    return TailCheck(
        N=N,
        alpha=alpha,
        lhs=lhs,
        rhs_log2=rhs_log2,
        holds=math.log2(lhs) <= rhs_log2 + BISECTION_TOLERANCE,
    )


def theorem1_exponent(eps: float) -> float:
    """Exponent ``f(eps)``: ``|MIS_k| <= (4^f(eps))^(n/4)`` for ``k`` near ``n/4``."""
    if not 0 <= eps <= ENTROPY_EPS_MAX:
        raise PreconditionViolation(
            f"eps must lie in [0, {ENTROPY_EPS_MAX:.6g}]", eps
        )
    return (
        1
        + binary_entropy(12 * eps / (1 + eps)) * (1 + eps) / 2
        + 35 * eps
        - CELL_SAVING * (1 - 112 * eps) / SQUARE_PACKING_RATIO
    )


def solve_eps_delta(margin: float = 0.0) -> tuple[float, float]:
    """Largest ``eps`` with ``f(eps) < 1 - margin`` and ``delta = 4 - 4^f(eps)``.

    Bisection keeps ``f(lo) < 1 - margin``, so the returned pair is admissible.
    """
    target = 1 - margin
    lo, hi = 0.0, ENTROPY_EPS_MAX
    if theorem1_exponent(lo) >= target:
        raise PreconditionViolation("margin leaves no admissible eps", margin)
    if theorem1_exponent(hi) < target:
        lo = hi
    while hi - lo > BISECTION_TOLERANCE:
        mid = (lo + hi) / 2
        if theorem1_exponent(mid) < target:
            lo = mid
        else:
            hi = mid
    delta = 4 - 4 ** theorem1_exponent(lo)
    log("DEBUG", f"solved eps={lo:.6g} delta={delta:.6g} at margin {margin}")
    return lo, delta


def _eta_admissible(eta: float, eps: float, delta: float) -> bool:
    # corollary line over the horizontal bound at x = 1/4, over Eppstein's at (1+eps)/4
    at_quarter = (1 - eta) * math.log(4 - eta) + eta * math.log(5 - eta)
    x = (1 + eps) / 4
    return at_quarter >= math.log(4 - delta) and _corollary1_log(
        1, x, eta
    ) >= _eppstein_log(1, x)


def solve_eta(eps: float, delta: float, steps: int = 1000) -> float:
    """Largest ``eta`` in ``[0, 1)`` for which the interpolated line dominates
    ``(4 - delta)^(n/4)`` on ``[1/4, (1+eps)/4]`` and Eppstein's bound beyond."""
    if not _eta_admissible(0.0, eps, delta):
        raise PreconditionViolation("no admissible eta", (eps, delta))
    lo, hi = 0.0, 1.0
    for i in range(1, steps):
        eta = i / steps
        if not _eta_admissible(eta, eps, delta):
            hi = eta
            break
        lo = eta
    else:
        return lo
    while hi - lo > BISECTION_TOLERANCE:
        mid = (lo + hi) / 2
        if _eta_admissible(mid, eps, delta):
            lo = mid
        else:
            hi = mid
    return lo


def corollary2_step(nu: float, n: int) -> bool:
    """``6 (12 - nu)^((n-4)/4) < (12 - nu)^(n/4)`` in the log domain."""
    if not 0 < nu < 12:
        raise PreconditionViolation("nu must lie in (0, 12)", nu)
    base = math.log(12 - nu)
    return math.log(6) + (n - 4) / 4 * base < n / 4 * base


def nu_witness(
    n: int, eta: float, xi: float, eps: Optional[float] = None
) -> WitnessReport:
    """Effective bases of both sums at ``p = floor((1 + xi) n / 4)``."""
    if n <= 0:
        raise PreconditionViolation("order must be positive", n)
    p_cut = min(n, math.floor((1 + xi) * n / 4))
    result = eq3_sum(n, p_cut, eta, eps)
    reference = result.reference_log

    def nu(max_log: Optional[float]) -> Optional[float]:
        if max_log is None:
            return None
        return 12 - math.exp(4 * max_log / n)

    holds = all(
        m is None or m < reference
        for m in (result.mibs1_max_log, result.mibs2_max_log)
    )
    nus = [nu(result.mibs1_max_log), nu(result.mibs2_max_log)]
    smallest = min((v for v in nus if v is not None), default=0.0)
    return WitnessReport(
        n=n,
        eta=eta,
        xi=xi,
        eps=eps,
        p_cut=p_cut,
        nu1=nu(result.mibs1_max_log),
        nu2=nu(result.mibs2_max_log),
        holds=holds,
        step_holds=holds and 0 < smallest < 12 and corollary2_step(smallest, n),
    )


def admissible_witness(margin: float = 1e-3, n: int = 40) -> AdmissibleWitness:
    """Chain the solvers: ``(eps*, delta*)``, then ``eta*``, then ``nu`` at order ``n``.

    ``xi`` is taken equal to ``eps*`` so the first sum stops at ``floor(n/4)``
    for moderate ``n``.
    """
    eps, delta = solve_eps_delta(margin)
    eta = solve_eta(eps, delta)
    solve = SolveReport(
        margin=margin,
        eps=eps,
        delta=delta,
        f_eps=theorem1_exponent(eps),
        f_zero=theorem1_exponent(0.0),
        eta=eta,
    )
    witness = nu_witness(n, eta, eps, eps)
    if not witness.holds:
        log("WARNING", f"witness at n={n} is not strictly below 12^(n/4)")
    tails = [
        binomial_tail_check(N, alpha)
        for N in (10, 20, 30)
        for alpha in (0.1, 0.25, 0.5)
    ]
    return AdmissibleWitness(solve=solve, witness=witness, tail_checks=tails)


def bounds_report(n: int, k: int, eta: float) -> BoundsReport:
    residual = corollary1_induction_identity(n, k, eta)
    return BoundsReport(
        n=n,
        k=k,
        eta=eta,
        moon_moser=moon_moser(n).to_model(),
        eppstein=eppstein(n, k).to_model(),
        nielsen=nielsen(n, k).to_model(),
        corollary1=corollary1(n, k, eta).to_model(),
        identity_residual=residual,
        identity_holds=residual < IDENTITY_TOLERANCE,
    )


def curve_export(
    eta: float,
    resolution: int = 81,
    x_min: Fraction = Fraction(1, 5),
    x_max: Fraction = Fraction(1, 3),
) -> list[CurveRow]:
    """Per-vertex exponents ``ln(bound) / n`` on an even grid of ``x = k / n``.

    The default grid contains ``1/5``, ``1/4`` and ``1/3``.
    """
    _check_eta(eta)
    if resolution < 2:
        raise PreconditionViolation("resolution must be at least 2", resolution)
    if not Fraction(1, 5) <= x_min < x_max <= Fraction(1, 3):
        raise PreconditionViolation("x range must lie in [1/5, 1/3]", (x_min, x_max))
    rows = []
    for i in range(resolution):
        x = float(x_min + (x_max - x_min) * Fraction(i, resolution - 1))
        rows.append(
            CurveRow(
                x=x,
                eppstein=_eppstein_log(1, x),
                nielsen=(5 * x - 1) * LN4 + (1 - 4 * x) * LN5,
                interp=x * math.log(1 / x),
                corollary1_eta=_corollary1_log(1, x, eta),
            )
        )
    return rows


def curves_to_csv(rows: list[CurveRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    fields = ["x", "eppstein", "nielsen", "interp", "corollary1_eta"]
    writer.writerow(fields)
    for row in rows:
        writer.writerow(f"{getattr(row, name):.{FLOAT_DIGITS}g}" for name in fields)
    return out.getvalue()
