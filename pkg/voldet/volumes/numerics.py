"""
Arbitrary-precision constants: gamma (1/gamma is the root of x^3 (x+1)^2 = 1 in (0, 1)),
the regular ideal tetrahedron volume v_tet, xi = exp(5 v_tet / pi) and the golden ratio.
All values are computed with GUARD_DIGITS extra digits of working precision.
"""
from functools import lru_cache

import mpmath
from mpmath import mpf
from pydantic import BaseModel, ConfigDict, Field

GUARD_DIGITS = 10
DEFAULT_DIGITS = 50
MIN_DIGITS = 10


class PrecisionContext(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    working_digits: int = Field(default=DEFAULT_DIGITS, ge=MIN_DIGITS)
    gamma: mpf
    v_tet: mpf
    xi: mpf
    phi: mpf
    provenance: dict[str, str]

    def workdps(self):
        return mpmath.workdps(self.working_digits + GUARD_DIGITS)

    @property
    def guard_margin(self) -> mpf:
        """differences smaller than this are treated as ties"""
        return mpf(10) ** (5 - self.working_digits)

    def fmt(self, x) -> str:
        return mpmath.nstr(x, self.working_digits, strip_zeros=False)

    def describe(self) -> dict:
        return {
            'working_digits': self.working_digits,
            'gamma': self.fmt(self.gamma),
            'v_tet': self.fmt(self.v_tet),
            'xi': self.fmt(self.xi),
            'phi': self.fmt(self.phi),
            'provenance': dict(self.provenance),
        }


def _check_digits(digits):
    if digits < MIN_DIGITS:
        raise ValueError(f'working precision must be at least {MIN_DIGITS} digits, got {digits}')


def lobachevsky_at(theta, digits: int) -> mpf:
    """
    Lobachevsky function by its Bernoulli series on [-pi/2, pi/2], reduced there using
    oddness and period pi. Summation stops once the geometric majorant of the tail,
    from |B_2n| < 4 (2n)! / (2 pi)^2n, is below the working precision.
    """
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        theta = mpf(theta)
        pi = +mpmath.pi
        theta = theta - pi * mpmath.nint(theta / pi)
        if theta == 0:
            return mpf(0)
        sign = 1
        if theta < 0:
            theta, sign = -theta, -1

        tol = mpf(10) ** (-(digits + GUARD_DIGITS))
        ratio = (theta / pi) ** 2
        total = theta - theta * mpmath.log(2 * theta)
        n = 1
        while True:
            m = 2 * n
            total += abs(mpmath.bernoulli(m)) * mpf(2) ** m * theta ** (m + 1) / (m * mpmath.factorial(m + 1))
            tail = 4 * theta * ratio ** (n + 1) / ((m + 2) * (m + 3) * (1 - ratio))
            if tail < tol:
                break
            n += 1
        return sign * total


def lobachevsky(theta, ctx: PrecisionContext) -> mpf:
    return lobachevsky_at(theta, ctx.working_digits)


def _gamma_polynomial(x):
    # x^3 (x+1)^2 - 1 vanishes at 1/gamma
    return x ** 3 * (x + 1) ** 2 - 1


def _bracket_root(lo, hi, width):
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _gamma_polynomial(mid) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi


@lru_cache(maxsize=8)
def compute_constants(digits: int = DEFAULT_DIGITS) -> PrecisionContext:
    _check_digits(digits)
    with mpmath.workdps(digits + GUARD_DIGITS):
        lo, hi = _bracket_root(mpf(0), mpf(1), mpf('1e-6'))
        root = mpmath.findroot(_gamma_polynomial, (lo + hi) / 2, solver='newton')
        if not lo <= root <= hi:
            root = mpmath.findroot(_gamma_polynomial, (lo, hi), solver='anderson')
        gamma = 1 / root

        pi = +mpmath.pi
        v_tet = 3 * lobachevsky_at(pi / 3, digits)
        xi = mpmath.exp(5 * v_tet / pi)
        phi = (1 + mpmath.sqrt(5)) / 2

    return PrecisionContext(
        working_digits=digits,
        gamma=gamma,
        v_tet=v_tet,
        xi=xi,
        phi=phi,
        provenance={
            'gamma': 'bisection bracket in (0, 1), Newton polish of x^3 (x+1)^2 = 1, inverted',
            'v_tet': '3 * Lobachevsky(pi/3), Bernoulli series with bounded tail',
            'xi': 'exp(5 v_tet / pi)',
            'phi': '(1 + sqrt 5) / 2',
            'guard_digits': str(GUARD_DIGITS),
        },
    )


def fibonacci(n: int) -> int:
    if n < 1:
        raise ValueError(f'Fibonacci index must be >= 1, got {n}')
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def binet_estimate(n: int, ctx: PrecisionContext) -> mpf:
    if n < 1:
        raise ValueError(f'Fibonacci index must be >= 1, got {n}')
    with ctx.workdps():
        return (ctx.phi ** n - (-1) ** n * ctx.phi ** (-n)) / mpmath.sqrt(5)
