"""Rate bounds per symbol for k-th power difference-free sets: the
digit-sum exponent of the polynomial-method upper bound, a refined upper
rate from direct minimization, and the construction lower rates, all
reported as per-symbol bases so that a set size reads base^n."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotUnimodal, SolverTimeout
from .indep import alpha_product
from .rings import RingSpec, factor_prime_power, make_ring
from .solver import DEFAULT_BUDGET_S

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = (3 - math.sqrt(5)) / 2


def digit_sum(k: int, q: int) -> int:
    """Sum of the base-q digits of k."""
    if k < 1 or q < 2:
        raise ValueError("need k >= 1 and q >= 2")
    total = 0
    while k:
        total += k % q
        k //= q
    return total


@dataclass(frozen=True)
class GreenBound:
    exponent: float  # c with |A| <= q^(n(1-c))
    base: float  # q^(1-c)


def green_exponent(q: int, k: int) -> GreenBound:
    """Polynomial-method upper-bound exponent 1/(2 k^2 D_q(k)^2 ln q),
    with natural log, and the per-symbol base q^(1-c)."""
    c = 1.0 / (2 * k * k * digit_sum(k, q) ** 2 * math.log(q))
    return GreenBound(exponent=c, base=q ** (1 - c))


@dataclass(frozen=True)
class RateMin:
    t_star: float
    value: float


def minimize_rate(q: int, gamma: float, tol: float = 1e-10) -> RateMin:
    """Minimize f(t) = (1 - t^q) / ((1 - t) t^((q-1) gamma)) over (0,1) by
    golden-section search; unimodality is checked on a 1000-point grid
    first and violations raise NotUnimodal."""
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie in (0,1)")
    expo = (q - 1) * gamma

    def f(t: float) -> float:
        return (1 - t**q) / ((1 - t) * t**expo)

    lo, hi = 1e-6, 1 - 1e-6
    samples = [f(lo + (hi - lo) * i / 999) for i in range(1000)]
    descending = True
    for a, b in zip(samples, samples[1:]):
        if descending:
            if b > a:
                descending = False
        elif b < a:
            raise NotUnimodal("sampled pattern is not descent-then-ascent")

    a, b = lo, hi
    h = b - a
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    yc, yd = f(c), f(d)
    while h > tol:
        h *= INV_PHI
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + INV_PHI * h
            yd = f(d)
    t_star = (a + b) / 2
    return RateMin(t_star=t_star, value=f(t_star))


@dataclass(frozen=True)
class BoundsLedger:
    q: int
    k: int
    n: int
    green_exponent: float
    green_rate: float
    refined_rate: float | None
    lower_thm_base: float  # q^(1 - 1/(2k)), unconditional construction
    lower_improved: float | None  # (r_{k,2})^(1/(2k)) * q^(1-1/k)
    method_limit: float  # q^(1 - 1/k^2), ceiling of this method
    greedy: float | None
    r_k2: int | None
    conjectured_tight: bool  # the method limit is only conjectured optimal

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "k": self.k,
            "n": self.n,
            "green_exponent": self.green_exponent,
            "green_rate_base": self.green_rate,
            "refined_rate_base": self.refined_rate,
            "lower_base": self.lower_thm_base,
            "lower_improved_base": self.lower_improved,
            "method_limit_base": self.method_limit,
            "greedy_base": self.greedy,
            "r_k2": self.r_k2,
            "conjectured_tight": self.conjectured_tight,
        }


def bounds_report(
    q: int,
    k: int,
    n: int,
    gamma: float | None = None,
    budget_s: float = DEFAULT_BUDGET_S,
    solver_cap: int = 400,
) -> BoundsLedger:
    """Assemble the per-symbol rate ledger for one (q, k, n).

    The improved lower base needs the exact two-fold product independence
    number, so it is filled only when q^2 fits under the solver cap.  The
    method_limit base is also the conjectured optimum; it is reported as
    a marker, never as a proven bound on constructions.
    """
    green = green_exponent(q, k)
    refined = minimize_rate(q, gamma).value if gamma is not None else None
    lower_thm = q ** (1 - 1 / (2 * k))
    r_k2 = None
    lower_improved = None
    if math.gcd(k, q - 1) > 1 and q * q <= solver_cap:
        R = make_ring(RingSpec.field(*factor_prime_power(q)))
        try:
            r_k2 = alpha_product(R, k, 2, budget_s=budget_s)
            lower_improved = r_k2 ** (1 / (2 * k)) * q ** (1 - 1 / k)
        except SolverTimeout:
            pass
    method_limit = q ** (1 - 1 / (k * k))
    greedy = q ** ((n - 1 - (n - 1) // k) / n) if n >= 1 else None
    ledger = BoundsLedger(
        q=q, k=k, n=n,
        green_exponent=green.exponent, green_rate=green.base,
        refined_rate=refined,
        lower_thm_base=lower_thm, lower_improved=lower_improved,
        method_limit=method_limit, greedy=greedy, r_k2=r_k2,
        conjectured_tight=True,
    )
    if lower_improved is not None:
        assert lower_thm <= lower_improved + 1e-9
        assert lower_improved <= method_limit + 1e-9
    assert method_limit <= green.base + 1e-9
    return ledger
