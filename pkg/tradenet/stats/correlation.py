"""Pearson correlation with a two-sided t-test on n - 2 degrees of freedom."""

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.special import betaln

from tradenet.constants import (
    BETACF_EPSILON,
    BETACF_FPMIN,
    BETACF_MAX_ITERATIONS,
    DEFAULT_ALPHA,
    MIN_SAMPLES,
    ZERO_VARIANCE_RELATIVE_SPREAD,
)
from tradenet.errors import (
    DomainError,
    LengthMismatch,
    NoConvergence,
    TooFewSamples,
    ZeroVariance,
)


def check_alpha(alpha: float) -> float:
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"alpha must lie strictly between 0 and 1, got {alpha!r}")
    return float(alpha)


@dataclass(frozen=True)
class CorrelationResult:
    """
    Outcome of one correlation test.

    ``n`` and ``t_stat`` are None for results transcribed from published
    tables, where only r and p are known.
    """

    r: float
    p: float
    n: Optional[int] = None
    t_stat: Optional[float] = None
    alpha: float = DEFAULT_ALPHA
    significant: bool = field(init=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r) and -1.0 <= self.r <= 1.0):
            raise DomainError(f"Correlation must lie in [-1, 1], got {self.r!r}")
        if not (0.0 <= self.p <= 1.0):
            raise DomainError(f"p-value must lie in [0, 1], got {self.p!r}")
        if self.n is not None and self.n < MIN_SAMPLES:
            raise TooFewSamples(f"Correlation needs at least {MIN_SAMPLES} samples, got {self.n}")
        check_alpha(self.alpha)
        object.__setattr__(self, "significant", self.p < self.alpha)

    @classmethod
    def from_reported(cls, r: float, p: float, alpha: float = DEFAULT_ALPHA) -> "CorrelationResult":
        """Result known only by its published (r, p) pair."""
        return cls(r=float(r), p=float(p), alpha=alpha)

    def with_alpha(self, alpha: float) -> "CorrelationResult":
        return CorrelationResult(self.r, self.p, self.n, self.t_stat, alpha)


def pearson(x: Sequence[float], y: Sequence[float], alpha: float = DEFAULT_ALPHA) -> CorrelationResult:
    """
    Sample correlation of two paired series and its two-sided p-value.

    Raises:
        LengthMismatch: If the series differ in length.
        TooFewSamples: If fewer than three pairs are given.
        ZeroVariance: If either series is constant.
    """
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise LengthMismatch(f"Series lengths differ: {xs.size} vs {ys.size}")
    n = xs.size
    if n < MIN_SAMPLES:
        raise TooFewSamples(f"Correlation needs at least {MIN_SAMPLES} samples, got {n}")
    if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
        raise DomainError("Series contain non-finite values")
    for name, values in (("first", xs), ("second", ys)):
        # Shares of a proportionally growing total differ only by rounding
        if np.ptp(values) <= ZERO_VARIANCE_RELATIVE_SPREAD * np.max(np.abs(values)):
            raise ZeroVariance(f"The {name} series is constant; correlation is undefined")

    dx = xs - math.fsum(xs) / n
    dy = ys - math.fsum(ys) / n
    sxy = math.fsum(dx * dy)
    sxx = math.fsum(dx * dx)
    syy = math.fsum(dy * dy)
    r = sxy / math.sqrt(sxx * syy)
    r = min(1.0, max(-1.0, r))

    t_stat, p = p_value(r, n)
    return CorrelationResult(r=r, p=p, n=n, t_stat=t_stat, alpha=check_alpha(alpha))


def p_value(r: float, n: int) -> Tuple[float, float]:
    """
    Two-sided p-value of a sample correlation under the null of no correlation.

    t = r * sqrt((n - 2) / (1 - r^2)) and p = I_x(df / 2, 1 / 2) with
    x = df / (df + t^2) = 1 - r^2.

    Raises:
        DomainError: If |r| > 1 or n < 3.
    """
    if not (math.isfinite(r) and abs(r) <= 1.0):
        raise DomainError(f"Correlation must lie in [-1, 1], got {r!r}")
    if n < MIN_SAMPLES:
        raise DomainError(f"p-value needs at least {MIN_SAMPLES} samples, got {n}")

    df = n - 2
    if abs(r) == 1.0:
        return math.copysign(math.inf, r), 0.0

    # (1 - r)(1 + r) keeps precision when |r| is close to 1
    x = (1.0 - r) * (1.0 + r)
    t_stat = r * math.sqrt(df / x)
    p = regularized_incomplete_beta(x, df / 2.0, 0.5)
    return t_stat, min(1.0, max(0.0, p))


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:
    """I_x(a, b) by continued fraction, switching to 1 - I_{1-x}(b, a) past the mean."""
    if a <= 0 or b <= 0:
        raise DomainError(f"Beta parameters must be positive, got a={a!r}, b={b!r}")
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"I_x(a, b) needs 0 <= x <= 1, got {x!r}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0

    # Prefactor x^a (1-x)^b / B(a, b) in log space
    log_front = a * math.log(x) + b * math.log1p(-x) - float(betaln(a, b))
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(log_front) * _betacf(a, b, x) / a
    return 1.0 - math.exp(log_front) * _betacf(b, a, 1.0 - x) / b


def _betacf(a: float, b: float, x: float) -> float:
    # Modified Lentz evaluation of the incomplete beta continued fraction
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < BETACF_FPMIN:
        d = BETACF_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, BETACF_MAX_ITERATIONS + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < BETACF_FPMIN:
            d = BETACF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < BETACF_FPMIN:
            c = BETACF_FPMIN
        d = 1.0 / d
        h *= d * c

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < BETACF_FPMIN:
            d = BETACF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < BETACF_FPMIN:
            c = BETACF_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < BETACF_EPSILON:
            return h
    raise NoConvergence(
        f"Incomplete beta continued fraction did not converge for a={a}, b={b}, x={x}",
        last_change=abs(delta - 1.0),
        iterations=BETACF_MAX_ITERATIONS,
    )
