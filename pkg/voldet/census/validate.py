from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from mpmath import mpf
from pydantic import BaseModel, Field

from voldet.cache import CachedInvariants, InvariantCache
from voldet.census import CensusRow, CensusTable, RowError
from voldet.certify import Certificate, certify_combinatorial, certify_direct
from voldet.errors import VoldetError
from voldet.links.determinant import BRACKET_LIMIT, TREE_LIMIT, determinant
from voldet.links.diagram import (
    Diagram, build, faces, is_alternating, is_prime, is_reduced, link_components, split_components,
)
from voldet.links.notation import braid_closure
from voldet.links.tait import is_arborescent
from voldet.links.twist import decompose, twist_reduced_heuristic
from voldet.volumes.bounds import vol_ub_ve
from voldet.volumes.numerics import PrecisionContext, compute_constants


class Discrepancy(BaseModel):
    field: str
    computed: int
    tabulated: int
    method: str


class RowResult(BaseModel):
    line: int
    name: str
    digest: Optional[str] = None
    c: Optional[int] = None
    t: Optional[int] = None
    det: Optional[int] = None
    link_components: Optional[int] = None
    classifications: dict[str, Optional[bool]] = {}
    twist_audit: Optional[str] = None
    det_routes: dict[str, int] = {}
    tabulated_det: Optional[int] = None
    discrepancies: list[Discrepancy] = []
    certificate: Optional[Certificate] = None
    ve_bound: Optional[str] = None
    ve_exceeded: Optional[bool] = None  # None unless t > 8 and a volume is given
    cached: bool = Field(default=False, exclude=True)
    error: Optional[str] = None


class Summary(BaseModel):
    rows: int = 0
    certified: int = 0
    inconclusive: int = 0
    hypothesis_failed: int = 0
    violations: int = 0
    discrepancies: int = 0
    ve_exceeded: int = 0
    errors: int = 0


class ValidationReport(BaseModel):
    constants: dict
    results: list[RowResult]
    ingest_errors: list[RowError] = []
    summary: Summary

    def exit_code(self) -> int:
        s = self.summary
        if self.ingest_errors or s.errors:
            return 2
        if s.discrepancies or s.violations or s.ve_exceeded:
            return 1
        return 0


class RowOptions(BaseModel):
    digits: int
    oracle: bool = False
    bracket_limit: int = BRACKET_LIMIT
    tree_limit: int = TREE_LIMIT


def diagram_of(row: CensusRow) -> Diagram:
    pd = row.pd if row.pd is not None else braid_closure(row.braid)
    return build(pd)


def invariants_of(d: Diagram, digest: str, options: RowOptions) -> tuple[CachedInvariants, dict, Optional[str]]:
    """computed invariants, the determinant routes used, and the twist audit outcome"""
    classifications = {'non_split': split_components(d) == 1, 'alternating': is_alternating(d)}
    record = CachedInvariants(digest=digest, c=d.c, link_components=link_components(d),
                              classifications=classifications)
    if not classifications['non_split'] or d.c == 0:
        return record, {}, None

    fs = faces(d)
    classifications['prime'] = is_prime(d, fs)
    classifications['reduced'] = is_reduced(d, fs)
    classifications['arborescent'] = is_arborescent(d, fs) if classifications['alternating'] else None

    audit = None
    t = None
    if d.c >= 2:
        td = decompose(d, fs)
        t = td.t
        audit = twist_reduced_heuristic(d, td, fs).outcome
        classifications['twist_reduced_heuristic'] = audit == 'pass'

    det = determinant(d, oracle=options.oracle, bracket_limit=options.bracket_limit,
                      tree_limit=options.tree_limit, fs=fs)
    record = record.model_copy(update={'t': t, 'det': det.value, 'classifications': classifications})
    return record, det.routes, audit


def validate_row(row: CensusRow, options: RowOptions, cached: Optional[CachedInvariants] = None) -> RowResult:
    ctx = compute_constants(options.digits)
    res = RowResult(line=row.line, name=row.name, tabulated_det=row.det)
    try:
        d = diagram_of(row)
        digest = d.to_pd().digest()
        if cached is not None and cached.digest == digest:
            record, routes, res.cached = cached, {'goeritz': cached.det}, True
            audit = cached.classifications.get('twist_reduced_heuristic')
            audit = None if audit is None else ('pass' if audit else 'suspect')
        else:
            record, routes, audit = invariants_of(d, digest, options)

        res.digest = digest
        res.c, res.t, res.det = record.c, record.t, record.det
        res.link_components = record.link_components
        res.classifications = dict(record.classifications)
        res.twist_audit = audit
        res.det_routes = {k: v for k, v in routes.items() if v is not None}

        if row.det is not None and record.det is not None and row.det != record.det:
            res.discrepancies.append(Discrepancy(field='det', computed=record.det, tabulated=row.det,
                                                 method='+'.join(sorted(res.det_routes)) or 'goeritz'))

        if row.volume is not None and record.t is not None and record.t > 8:
            bound = vol_ub_ve(record.t, ctx)
            res.ve_bound = ctx.fmt(bound)
            with ctx.workdps():
                res.ve_exceeded = bool(mpf(str(row.volume)) - bound > ctx.guard_margin)

        if row.volume is not None and record.det is not None and record.det >= 2 and row.volume > 0:
            res.certificate = certify_direct(record.det, row.volume, ctx)
        else:
            res.certificate = certify_combinatorial(d, ctx)
    except VoldetError as e:
        res.error = f'{e.__class__.__name__}: {e}'
    return res


def _digest_or_none(row: CensusRow) -> Optional[str]:
    try:
        return diagram_of(row).to_pd().digest()
    except VoldetError:
        return None


def _run(job):
    row, options, cached = job
    return validate_row(row, options, cached)


def validate_table(table: CensusTable, ctx: PrecisionContext, oracle: bool = False,
                   bracket_limit: int = BRACKET_LIMIT, tree_limit: int = TREE_LIMIT,
                   cache: Optional[InvariantCache] = None, metrics=None, workers: int = 1) -> ValidationReport:
    """
    rows are processed independently (optionally in worker processes) and assembled
    in input order, so that parallel and sequential runs give identical reports.
    The cache only stores the goeritz route, so it is bypassed when `oracle` is set.
    """
    options = RowOptions(digits=ctx.working_digits, oracle=oracle, bracket_limit=bracket_limit,
                         tree_limit=tree_limit)

    jobs = []
    for row in table.rows:
        cached = None
        if cache is not None and not oracle:
            digest = _digest_or_none(row)
            cached = cache.get(digest) if digest else None
            if metrics:
                metrics.send_event('cache_hit' if cached else 'cache_miss', 'census', {'name': row.name})
        jobs.append((row, options, cached))

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run, jobs))
    else:
        results = [_run(job) for job in jobs]

    summary = Summary(rows=len(results), errors=len(table.errors))
    for res in results:
        if cache is not None and res.error is None and not res.cached and res.digest:
            cache.put(CachedInvariants(digest=res.digest, c=res.c, t=res.t, det=res.det,
                                       link_components=res.link_components,
                                       classifications=res.classifications))
        if res.error:
            summary.errors += 1
        if res.discrepancies:
            summary.discrepancies += len(res.discrepancies)
        if res.ve_exceeded:
            summary.ve_exceeded += 1
        cert = res.certificate
        if cert is not None:
            if cert.verdict == 'certified':
                summary.certified += 1
            elif cert.verdict == 'inconclusive':
                summary.inconclusive += 1
            else:
                summary.hypothesis_failed += 1
            if cert.violation:
                summary.violations += 1
        if metrics:
            metrics.send_event('row_validated', 'census', {
                'name': res.name, 'verdict': cert.verdict if cert else None, 'error': res.error,
            })

    return ValidationReport(constants=ctx.describe(), results=results, ingest_errors=list(table.errors),
                            summary=summary)
