"""
Determinant lower bounds, volume upper bounds and crossing-number thresholds as
pure functions of the twist number t, crossing number c and determinant det.
Every function expects the PrecisionContext that fixes the working precision;
logarithms are natural.
"""
from fractions import Fraction
from typing import Literal, Optional

import mpmath
from mpmath import mpf
from pydantic import BaseModel, ConfigDict

from voldet.errors import HypothesisError
from voldet.volumes.numerics import PrecisionContext, fibonacci

Variant = Literal['standard', 'borromean_8_17']

BORROMEAN_FACTOR = Fraction(8, 17)

# published rounded constants of the thm2 bound, kept to report how they differ from the symbolic ones
PRINTED_THM2_REMARK = {'A': '28.639760', 'B': '15.791802', 'C': '19.851568'}

THM3_INTERPRETATION = 'thm3 hypothesis read as "reduced alternating twist-reduced arborescent diagram"'


def _need(condition, hypothesis):
    if not condition:
        raise HypothesisError(hypothesis)


def det_lb_stoimenow(t: int, ctx: PrecisionContext) -> mpf:
    _need(t >= 1, 't >= 1')
    with ctx.workdps():
        return 2 * ctx.gamma ** (t - 1)


def det_lb_burton(t: int, c: int, ctx: PrecisionContext) -> mpf:
    _need(t >= 1, 't >= 1')
    _need(c >= t, 'c >= t')
    with ctx.workdps():
        return 2 * ctx.gamma ** (t - 1) + (c - t)


def det_lb_ito(t: int, c: int, ctx: PrecisionContext) -> mpf:
    _need(t >= 2, 't >= 2')
    _need(c >= t, 'c >= t')
    with ctx.workdps():
        g = ctx.gamma
        return 2 / g * (g ** t + (c - t) * g ** (mpf(t - 1) / 2))


def det_lb_ito_expanded(t: int, c: int, ctx: PrecisionContext) -> mpf:
    """the form used by the thm1 threshold: 2 gamma^(t-1) + 2 (c-t) gamma^((t-3)/2)"""
    _need(t >= 2, 't >= 2')
    _need(c >= t, 'c >= t')
    with ctx.workdps():
        g = ctx.gamma
        return 2 * g ** (t - 1) + 2 * (c - t) * g ** (mpf(t - 3) / 2)


def vol_ub_lat(t: int, ctx: PrecisionContext) -> mpf:
    _need(t >= 1, 't >= 1')
    with ctx.workdps():
        return 10 * ctx.v_tet * (t - 1)


def vol_ub_ve(t: int, ctx: PrecisionContext) -> mpf:
    _need(t > 8, 't > 8')
    with ctx.workdps():
        return 10 * ctx.v_tet * (t - mpf(7) / 5)


class Threshold(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    t: int
    value: mpf
    minimal_c: int


def threshold_burton(t: int, ctx: PrecisionContext) -> Threshold:
    _need(t >= 2, 't >= 2')
    with ctx.workdps():
        value = t + ctx.xi ** (t - 1) - 2 * ctx.gamma ** (t - 1)
        return Threshold(name='burton_eqn6', t=t, value=value, minimal_c=int(mpmath.ceil(value)))


def threshold_thm1(t: int, ctx: PrecisionContext) -> Threshold:
    _need(t > 8, 't > 8')
    with ctx.workdps():
        g = ctx.gamma
        value = (t + ctx.xi ** (t - mpf(7) / 5) / (2 * g ** (mpf(t - 3) / 2))
                 - g ** (mpf(t + 1) / 2))
        return Threshold(name='thm1', t=t, value=value, minimal_c=int(mpmath.ceil(value)))


class Thm2Coefficients(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    A: mpf
    B: mpf  # stoimenow_eqn2 constant, A log 2
    C: mpf  # B + 4 v_tet


class Thm3Coefficients(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    variant: Variant
    A: mpf
    D: mpf
    E: mpf


class Eqn5Coefficients(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    A: mpf
    B: mpf
    C: mpf


def thm2_coefficients(ctx: PrecisionContext) -> Thm2Coefficients:
    with ctx.workdps():
        a = 10 * ctx.v_tet / mpmath.log(ctx.gamma)
        b = a * mpmath.log(2)
        return Thm2Coefficients(A=a, B=b, C=b + 4 * ctx.v_tet)


def _golden_a(ctx):
    return 10 * ctx.v_tet / mpmath.log(ctx.phi)


def thm3_coefficients(ctx: PrecisionContext, variant: Variant = 'standard') -> Thm3Coefficients:
    with ctx.workdps():
        a = _golden_a(ctx)
        scale = 1 / mpmath.sqrt(5)
        if variant == 'borromean_8_17':
            scale = scale * BORROMEAN_FACTOR.numerator / BORROMEAN_FACTOR.denominator
        elif variant != 'standard':
            raise ValueError(f'unknown variant {variant!r}')
        d = scale * (1 / ctx.phi) ** 12
        e = 44 * ctx.v_tet + a * mpmath.log(scale)
        return Thm3Coefficients(variant=variant, A=a, D=d, E=e)


def eqn5_coefficients(ctx: PrecisionContext) -> Eqn5Coefficients:
    with ctx.workdps():
        a = _golden_a(ctx)
        scale = 1 / mpmath.sqrt(5)
        return Eqn5Coefficients(A=a, B=scale * (1 / ctx.phi) ** 6, C=40 * ctx.v_tet + a * mpmath.log(scale))


def remark_discrepancy(ctx: PrecisionContext) -> dict:
    """
    published constants of the thm2 bound against the symbolic ones: the printed
    B and C both equal the symbolic value minus 4 v_tet
    """
    co = thm2_coefficients(ctx)
    with ctx.workdps():
        four_v = 4 * ctx.v_tet
        res = {}
        for name, symbolic in (('A', co.A), ('B', co.B), ('C', co.C)):
            printed = mpf(PRINTED_THM2_REMARK[name])
            res[name] = {
                'printed': PRINTED_THM2_REMARK[name],
                'symbolic': mpmath.nstr(symbolic, 12),
                'difference': mpmath.nstr(symbolic - printed, 12),
                'differs_by_4_v_tet': bool(abs(symbolic - printed - four_v) < mpf('1e-5')),
            }
        return res


def _need_det(det, minimum=1):
    _need(det >= minimum, f'det >= {minimum}')


def vol_ub_thm2(det: int, ctx: PrecisionContext) -> mpf:
    _need_det(det)
    co = thm2_coefficients(ctx)
    with ctx.workdps():
        return co.A * mpmath.log(det) - co.C


def vol_ub_stoimenow_eqn2(det: int, ctx: PrecisionContext) -> mpf:
    _need_det(det)
    co = thm2_coefficients(ctx)
    with ctx.workdps():
        return co.A * mpmath.log(det) - co.B


def det_lb_fibonacci(t: int, variant: Variant = 'standard') -> Fraction:
    _need(t >= 1, 't >= 1')
    f = Fraction(fibonacci(t + 3))
    if variant == 'borromean_8_17':
        return BORROMEAN_FACTOR * f
    if variant != 'standard':
        raise ValueError(f'unknown variant {variant!r}')
    return f


def vol_ub_thm3(det: int, ctx: PrecisionContext, variant: Variant = 'standard') -> mpf:
    _need_det(det)
    co = thm3_coefficients(ctx, variant)
    with ctx.workdps():
        return co.A * mpmath.log(det + co.D) - co.E


def vol_ub_stoimenow_eqn5(det: int, ctx: PrecisionContext) -> mpf:
    _need_det(det)
    co = eqn5_coefficients(ctx)
    with ctx.workdps():
        return co.A * mpmath.log(det + co.B) - co.C


def voldet_rhs(det: int, ctx: PrecisionContext) -> mpf:
    _need_det(det, 2)
    with ctx.workdps():
        return 2 * mpmath.pi * mpmath.log(det)


class BoundValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: Optional[str] = None
    applicable: bool
    hypotheses: list[str] = []
    reason: Optional[str] = None
    below_voldet_rhs: Optional[bool] = None


class BoundReport(BaseModel):
    t: int
    c: int
    det: Optional[int] = None
    working_digits: int
    det_lower_bounds: dict[str, BoundValue]
    volume_upper_bounds: dict[str, BoundValue]
    thresholds: dict[str, BoundValue]
    best_volume_bound: Optional[str] = None
    voldet_rhs: Optional[str] = None
    exception_graph: Optional[str] = None
    notes: list[str] = []

    def applicable(self, group: str) -> dict[str, BoundValue]:
        return {k: v for k, v in getattr(self, group).items() if v.applicable}


def bound_report(t: int, c: int, ctx: PrecisionContext, det: Optional[int] = None,
                 arborescent: Optional[bool] = None, exception: Optional[str] = None,
                 arborescent_link: bool = False) -> BoundReport:
    """
    every bound evaluated at (t, c, det) with the hypotheses under which it holds.
    `arborescent` is the diagram check (None when unknown), `exception` the name of a
    matched exception Tait graph, `arborescent_link` a caller assertion that enables
    the 8/17 variants.
    """
    _need(t >= 1, 't >= 1')
    _need(c >= t, 'c >= t')
    raw = {}

    def evaluate(fn, *args, hypotheses=(), blocked=None):
        if blocked:
            return None, BoundValue(applicable=False, hypotheses=list(hypotheses), reason=blocked)
        try:
            x = fn(*args)
        except HypothesisError as e:
            return None, BoundValue(applicable=False, hypotheses=list(hypotheses), reason=e.hypothesis)
        if isinstance(x, Threshold):
            return x.value, BoundValue(value=ctx.fmt(x.value), applicable=True,
                                       hypotheses=list(hypotheses) + [f'minimal c = {x.minimal_c}'])
        if isinstance(x, Fraction):
            return x, BoundValue(value=str(x), applicable=True, hypotheses=list(hypotheses))
        return x, BoundValue(value=ctx.fmt(x), applicable=True, hypotheses=list(hypotheses))

    no_det = None if det is not None else 'det not supplied'
    not_arb = None
    if arborescent is False:
        not_arb = 'diagram is not arborescent'
    elif arborescent is None:
        not_arb = 'arborescence unknown'
    excluded = f'exception Tait graph {exception}' if exception else None
    few_twists = None if t > 8 else 't <= 8'
    base = ['non-trivial non-split alternating', 'hyperbolic (caller-asserted)']

    det_lbs = {}
    for name, fn, args, hyp in (
            ('stoimenow', det_lb_stoimenow, (t, ctx), base + ['reduced alternating diagram']),
            ('burton', det_lb_burton, (t, c, ctx), base + ['reduced alternating diagram']),
            ('ito', det_lb_ito, (t, c, ctx), base + ['reduced alternating diagram']),
    ):
        _, det_lbs[name] = evaluate(fn, *args, hypotheses=hyp)
    _, det_lbs['fibonacci'] = evaluate(det_lb_fibonacci, t, hypotheses=['arborescent diagram', 'Tait graph not T2, T2*T2'],
                                       blocked=not_arb or excluded)
    _, det_lbs['fibonacci_8_17'] = evaluate(
        det_lb_fibonacci, t, 'borromean_8_17', hypotheses=['alternating arborescent link (caller-asserted)'],
        blocked=None if arborescent_link or arborescent else 'arborescent link not asserted')

    vols = {}
    twist_reduced = base + ['twist-reduced diagram']
    raw['lat'], vols['lat'] = evaluate(vol_ub_lat, t, ctx, hypotheses=twist_reduced)
    raw['ve'], vols['ve'] = evaluate(vol_ub_ve, t, ctx, hypotheses=twist_reduced + ['t > 8'], blocked=few_twists)
    raw['thm2'], vols['thm2'] = evaluate(vol_ub_thm2, det, ctx, hypotheses=twist_reduced + ['t > 8'],
                                         blocked=no_det or few_twists)
    raw['stoimenow_eqn2'], vols['stoimenow_eqn2'] = evaluate(vol_ub_stoimenow_eqn2, det, ctx, hypotheses=base,
                                                             blocked=no_det)
    arb_hyp = twist_reduced + ['arborescent diagram', 'Tait graph not T2, T2*T2']
    raw['thm3'], vols['thm3'] = evaluate(vol_ub_thm3, det, ctx, hypotheses=arb_hyp + ['t > 8'],
                                         blocked=no_det or few_twists or not_arb or excluded)
    raw['thm3_8_17'], vols['thm3_8_17'] = evaluate(
        vol_ub_thm3, det, ctx, 'borromean_8_17',
        hypotheses=twist_reduced + ['alternating arborescent link (caller-asserted)', 't > 8'],
        blocked=no_det or few_twists or (None if arborescent_link or arborescent else 'arborescent link not asserted'))
    raw['stoimenow_eqn5'], vols['stoimenow_eqn5'] = evaluate(
        vol_ub_stoimenow_eqn5, det, ctx, hypotheses=base + ['arborescent diagram', 'Tait graph not T2, T2*T2'],
        blocked=no_det or not_arb or excluded)

    thresholds = {}
    _, thresholds['burton_eqn6'] = evaluate(threshold_burton, t, ctx, hypotheses=base + ['reduced alternating diagram'])
    _, thresholds['thm1'] = evaluate(threshold_thm1, t, ctx, hypotheses=twist_reduced + ['t > 8'])

    candidates = {k: v for k, v in raw.items() if v is not None}
    rhs = None
    if det is not None and det >= 2:
        rhs = voldet_rhs(det, ctx)
        for name, value in candidates.items():
            vols[name] = vols[name].model_copy(update={'below_voldet_rhs': bool(value < rhs)})

    report = BoundReport(t=t, c=c, det=det, working_digits=ctx.working_digits, det_lower_bounds=det_lbs,
                         volume_upper_bounds=vols, thresholds=thresholds, exception_graph=exception,
                         voldet_rhs=ctx.fmt(rhs) if rhs is not None else None,
                         best_volume_bound=min(candidates, key=candidates.get) if candidates else None)

    if vols['thm3'].applicable or vols['thm3_8_17'].applicable:
        report.notes.append(THM3_INTERPRETATION)
    if vols['thm2'].applicable or vols['stoimenow_eqn2'].applicable:
        report.notes.append('published thm2 constants B and C are the symbolic ones minus 4 v_tet; symbolic constants are used')
    return report


def sweep(t_values, ctx: PrecisionContext) -> list[dict]:
    rows = []
    for t in t_values:
        if t < 2:
            continue
        rows.append({
            't': t,
            'threshold_burton': ctx.fmt(threshold_burton(t, ctx).value),
            'threshold_thm1': ctx.fmt(threshold_thm1(t, ctx).value) if t > 8 else '',
            'vol_ub_lat': ctx.fmt(vol_ub_lat(t, ctx)),
            'vol_ub_ve': ctx.fmt(vol_ub_ve(t, ctx)) if t > 8 else '',
        })
    return rows
