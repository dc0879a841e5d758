from voldet.cache import CachedInvariants
from voldet.commands import BaseCommand, DiagramPrompt, EXIT_OK, emit, load_diagram
from voldet.links.determinant import determinant
from voldet.links.diagram import (
    faces, is_alternating, is_prime, is_reduced, link_components, split_components,
)
from voldet.links.notation import render_pd
from voldet.links.tait import is_arborescent
from voldet.links.twist import decompose, twist_reduced_heuristic


class Invariants(BaseCommand):

    def __init__(self):
        super().__init__(
            command='invariants',
            name="invariants",
            description="Crossings, twist regions, classifications and determinant of a diagram",
            examples=[
                "voldet invariants '[[1,4,2,5],[3,6,4,1],[5,2,6,3]]'",
                "voldet invariants 4: 1 1 -2 -2 -2 3 3 1 -2 -2 3 --notation braid --oracle on",
            ],
            prompt_class=DiagramPrompt,
        )

    def run(self, parsed, invocation, toolkit):
        d = load_diagram(parsed)
        pd = d.to_pd()
        digest = pd.digest()
        settings = toolkit.settings
        oracle = settings.oracle if parsed.oracle is None else parsed.oracle

        data = {
            'pd': render_pd(pd),
            'digest': digest,
            'c': d.c,
            'link_components': link_components(d),
            'split_components': split_components(d),
            'alternating': is_alternating(d),
        }

        cached = toolkit.cache.get(digest)
        toolkit.metrics.send_event('cache_hit' if cached else 'cache_miss', 'invariants', {'digest': digest})

        if split_components(d) == 1 and d.c > 0:
            fs = faces(d)
            data['faces'] = len(fs)
            data['prime'] = is_prime(d, fs)
            data['reduced'] = is_reduced(d, fs)
            if data['alternating']:
                data['arborescent'] = is_arborescent(d, fs)
            if d.c >= 2:
                td = decompose(d, fs)
                audit = twist_reduced_heuristic(d, td, fs)
                data['t'] = td.t
                data['twist_regions'] = [list(r) for r in td.regions]
                data['region_kinds'] = list(td.region_kinds)
                data['twist_reduced_heuristic'] = audit.model_dump()
            if cached and cached.det is not None and not oracle:
                data['det'] = cached.det
                data['det_routes'] = {'goeritz': cached.det}
            else:
                report = determinant(d, oracle=oracle, bracket_limit=settings.bracket_limit,
                                     tree_limit=settings.tree_limit, fs=fs)
                data['det'] = report.value
                data['det_routes'] = report.routes
                if report.skipped:
                    data['det_skipped'] = report.skipped

        if not cached:
            keys = ('prime', 'reduced', 'arborescent', 'alternating')
            toolkit.cache.put(CachedInvariants(
                digest=digest, c=d.c, t=data.get('t'), det=data.get('det'),
                link_components=data['link_components'],
                classifications={'non_split': data['split_components'] == 1,
                                 **{k: data[k] for k in keys if k in data}},
            ))

        emit(toolkit.writer, data, self.output_format(parsed, toolkit))
        return EXIT_OK
