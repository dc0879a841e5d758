from typing import Optional

from pydantic import Field

from voldet.commands import BasePrompt, BaseCommand, EXIT_OK, emit
from voldet.volumes.bounds import bound_report


class BoundsPrompt(BasePrompt):
    t: int = Field(ge=1)
    c: int = Field(ge=1)
    det: Optional[int] = Field(default=None, ge=1)
    arborescent: Optional[bool] = None
    exception: Optional[str] = None
    arborescent_link: bool = False


class Bounds(BaseCommand):

    def __init__(self):
        super().__init__(
            command='bounds',
            name="bounds",
            description="Evaluates every determinant bound, volume bound and threshold at (t, c, det)",
            examples=[
                "voldet bounds --t 9 --c 40000",
                "voldet bounds --t 6 --c 11 --det 117",
            ],
            prompt_class=BoundsPrompt,
        )

    def run(self, parsed, invocation, toolkit):
        ctx = self.constants(parsed, toolkit)
        report = bound_report(parsed.t, parsed.c, ctx, det=parsed.det, arborescent=parsed.arborescent,
                              exception=parsed.exception, arborescent_link=parsed.arborescent_link)
        if parsed.t > 8:
            toolkit.metrics.send_event('threshold_logged', 'bounds', {
                't': parsed.t, 'threshold_thm1': report.thresholds['thm1'].value,
            })
        emit(toolkit.writer, report.model_dump(), self.output_format(parsed, toolkit))
        return EXIT_OK
