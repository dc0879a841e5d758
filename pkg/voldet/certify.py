"""
Vol-Det certificates: the inequality vol < 2 pi log det, either checked directly
against a supplied volume or implied by a crossing-number threshold. Hyperbolicity is
never checked; it is listed as a caller-asserted hypothesis.
"""
from typing import Literal, Optional

import mpmath
from mpmath import mpf
from pydantic import BaseModel

from voldet.errors import HypothesisError
from voldet.links.diagram import Diagram, faces, is_alternating, is_prime, is_reduced, split_components
from voldet.links.tait import detect_exceptions, is_series_parallel, shade
from voldet.links.twist import decompose, twist_reduced_heuristic
from voldet.volumes.bounds import (
    BoundReport, bound_report, threshold_burton, threshold_thm1,
)
from voldet.volumes.numerics import PrecisionContext, compute_constants

Method = Literal['direct', 'thm1_threshold', 'burton_eqn6', 'bound_chain']
Verdict = Literal['certified', 'inconclusive', 'hypothesis_failed']
Status = Literal['machine_checked', 'caller_asserted', 'heuristic', 'failed']

REPLAY_EXTRA_DIGITS = 10


class Hypothesis(BaseModel):
    name: str
    status: Status


class Certificate(BaseModel):
    method: Method
    verdict: Verdict
    witnesses: dict[str, str] = {}
    comparison: Optional[str] = None
    margin: Optional[str] = None
    violation: bool = False
    hypotheses: list[Hypothesis] = []
    caveats: list[str] = []
    failed_hypothesis: Optional[str] = None
    working_digits: int

    @property
    def certified(self) -> bool:
        return self.verdict == 'certified'


def _direct_margin(det, volume, ctx):
    with ctx.workdps():
        rhs = 2 * mpmath.pi * mpmath.log(det)
        return rhs, rhs - volume


def certify_direct(det: int, volume, ctx: PrecisionContext) -> Certificate:
    if det <= 1:
        raise HypothesisError('det >= 2', f'direct check needs det >= 2, got {det}')
    with ctx.workdps():
        vol = mpf(str(volume))
    if vol <= 0:
        raise HypothesisError('volume > 0', f'volume must be positive, got {volume}')

    rhs, margin = _direct_margin(det, vol, ctx)
    guard = ctx.guard_margin
    certified = margin > guard
    return Certificate(
        method='direct',
        verdict='certified' if certified else 'inconclusive',
        witnesses={'det': str(det), 'volume': str(volume), 'lhs': ctx.fmt(vol), 'rhs': ctx.fmt(rhs)},
        comparison='volume < 2*pi*log(det)',
        margin=ctx.fmt(margin),
        violation=bool(margin < -guard),
        hypotheses=[Hypothesis(name='alternating', status='caller_asserted'),
                    Hypothesis(name='hyperbolic', status='caller_asserted')],
        caveats=[] if certified else (
            ['violation of the tested inequality, review the input data'] if margin < -guard
            else ['margin within the guard band']),
        working_digits=ctx.working_digits,
    )


def certify_counts(t: int, c: int, ctx: PrecisionContext, hypotheses: Optional[list[Hypothesis]] = None,
                   caveats: Optional[list[str]] = None) -> Certificate:
    """
    threshold decision on (t, c) alone: the thm1 threshold when t > 8, then
    the burton_eqn6 threshold
    """
    hypotheses = list(hypotheses or [])
    caveats = list(caveats or [])
    hypotheses.append(Hypothesis(name='hyperbolic', status='caller_asserted'))
    base = {'t': str(t), 'c': str(c)}

    if t < 2:
        return Certificate(method='burton_eqn6', verdict='inconclusive', witnesses=base,
                           hypotheses=hypotheses,
                           caveats=caveats + ['t = 1: (2, n) torus type diagram, not hyperbolic'],
                           working_digits=ctx.working_digits)

    tries = []
    if t > 8:
        tries.append(('thm1_threshold', threshold_thm1(t, ctx)))
    tries.append(('burton_eqn6', threshold_burton(t, ctx)))

    for method, th in tries:
        with ctx.workdps():
            margin = c - th.value
        if c >= th.minimal_c and margin > ctx.guard_margin:
            return Certificate(
                method=method, verdict='certified',
                witnesses={**base, 'lhs': str(c), 'rhs': ctx.fmt(th.value), 'minimal_c': str(th.minimal_c)},
                comparison=f'c >= ceil(threshold_{th.name})', margin=ctx.fmt(margin),
                hypotheses=hypotheses, caveats=caveats, working_digits=ctx.working_digits)

    method, th = tries[0]
    with ctx.workdps():
        margin = c - th.value
    return Certificate(
        method=method, verdict='inconclusive',
        witnesses={**base, 'lhs': str(c), 'rhs': ctx.fmt(th.value), 'minimal_c': str(th.minimal_c)},
        comparison=f'c >= ceil(threshold_{th.name})', margin=ctx.fmt(margin),
        hypotheses=hypotheses, caveats=caveats, working_digits=ctx.working_digits)


def _failed(name, checked, ctx):
    return Certificate(method='bound_chain', verdict='hypothesis_failed', failed_hypothesis=name,
                       hypotheses=checked + [Hypothesis(name=name, status='failed')],
                       working_digits=ctx.working_digits)


def certify_combinatorial(d: Diagram, ctx: PrecisionContext) -> Certificate:
    checked = []
    if d.c < 2:
        return _failed('c >= 2', checked, ctx)
    if split_components(d) != 1:
        return _failed('non-split', checked, ctx)
    checked.append(Hypothesis(name='non-split', status='machine_checked'))
    fs = faces(d)
    for name, predicate in (('alternating', is_alternating), ('prime', lambda x: is_prime(x, fs)),
                            ('reduced', lambda x: is_reduced(x, fs))):
        if not predicate(d):
            return _failed(name, checked, ctx)
        checked.append(Hypothesis(name=name, status='machine_checked'))

    td = decompose(d, fs)
    audit = twist_reduced_heuristic(d, td, fs)
    checked.append(Hypothesis(name='twist-reduced', status='heuristic'))
    caveats = [f'twist-reduced heuristic: {audit.outcome}'
               + (f' (region pairs {list(audit.pairs)})' if audit.pairs else '')]

    return certify_counts(td.t, d.c, ctx, hypotheses=checked, caveats=caveats)


def volume_bound_chain(d: Diagram, det: int, ctx: PrecisionContext, arborescent_link: bool = False) -> BoundReport:
    if split_components(d) != 1:
        raise HypothesisError('non-split')
    if not is_alternating(d):
        raise HypothesisError('alternating')
    fs = faces(d)
    td = decompose(d, fs)

    arborescent = False
    exception = None
    for color in ('black', 'white'):
        tg = shade(d, color, fs)
        if is_series_parallel(tg):
            arborescent = True
            match = detect_exceptions(tg)
            if match.matched:
                exception = f'{match.kind} ({match.pattern})'
    return bound_report(td.t, d.c, ctx, det=det, arborescent=arborescent, exception=exception,
                        arborescent_link=arborescent_link)


def verify_certificate(cert: Certificate, digits: Optional[int] = None) -> bool:
    """
    replays the decisive comparison at higher precision. Returns True when the
    recorded verdict still stands.
    """
    digits = digits or cert.working_digits + REPLAY_EXTRA_DIGITS
    ctx = compute_constants(digits)
    w = cert.witnesses

    if cert.method == 'direct':
        replay = certify_direct(int(w['det']), w['volume'], ctx)
        return replay.verdict == cert.verdict
    if cert.verdict == 'hypothesis_failed':
        return True
    if 't' in w and 'c' in w:
        replay = certify_counts(int(w['t']), int(w['c']), ctx)
        return replay.verdict == cert.verdict and replay.method == cert.method
    return False
