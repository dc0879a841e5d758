from decimal import Decimal
from typing import Optional

from pydantic import Field

from voldet.certify import certify_combinatorial, certify_direct, verify_certificate, volume_bound_chain
from voldet.commands import BaseCommand, DiagramPrompt, EXIT_FINDINGS, EXIT_OK, emit, load_diagram
from voldet.links.determinant import determinant
from voldet.links.diagram import faces, is_alternating, split_components


class CertifyPrompt(DiagramPrompt):
    volume: Optional[Decimal] = Field(default=None, gt=0)
    arborescent_link: bool = False


class Certify(BaseCommand):

    def __init__(self):
        super().__init__(
            command='certify',
            name="certify",
            description="Vol-Det certificate for a diagram, directly from a volume or from its crossing counts",
            examples=[
                "voldet certify 4: 1 1 -2 -2 -2 3 3 1 -2 -2 3 --notation braid --volume 15.597714",
                "voldet certify diagram.pd",
            ],
            prompt_class=CertifyPrompt,
        )

    def run(self, parsed, invocation, toolkit):
        ctx = self.constants(parsed, toolkit)
        settings = toolkit.settings
        oracle = settings.oracle if parsed.oracle is None else parsed.oracle
        d = load_diagram(parsed)

        det = None
        if split_components(d) == 1 and d.c > 0:
            det = determinant(d, oracle=oracle, bracket_limit=settings.bracket_limit,
                              tree_limit=settings.tree_limit, fs=faces(d)).value

        if parsed.volume is not None and det is not None and det >= 2:
            cert = certify_direct(det, parsed.volume, ctx)
        else:
            cert = certify_combinatorial(d, ctx)

        data = {
            'det': det,
            'certificate': cert.model_dump(),
            'replay_at_extra_digits': verify_certificate(cert),
        }
        if det is not None and det >= 2 and is_alternating(d) and d.c >= 2:
            data['bounds'] = volume_bound_chain(d, det, ctx, arborescent_link=parsed.arborescent_link).model_dump()

        emit(toolkit.writer, data, self.output_format(parsed, toolkit))
        return EXIT_FINDINGS if cert.violation else EXIT_OK
