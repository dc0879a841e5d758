from pydantic import field_validator

from voldet.commands import BasePrompt, BaseCommand, EXIT_OK, emit
from voldet.volumes.bounds import sweep


class SweepPrompt(BasePrompt):
    t_range: tuple[int, int] = (2, 60)
    emit_csv: bool = False

    @field_validator('t_range', mode='before')
    @classmethod
    def parse_range(cls, v):
        if isinstance(v, str):
            lo, sep, hi = v.partition('..')
            if not sep:
                raise ValueError('expected a range like 2..60')
            v = (int(lo), int(hi))
        lo, hi = v
        if lo < 2 or hi < lo:
            raise ValueError('range must satisfy 2 <= start <= end')
        return v


class Sweep(BaseCommand):

    def __init__(self):
        super().__init__(
            command='sweep',
            name="sweep",
            description="Thresholds and volume bounds over a range of twist numbers, plot-ready",
            examples=[
                "voldet sweep --t-range 2..60 --emit-csv",
            ],
            prompt_class=SweepPrompt,
        )

    def run(self, parsed, invocation, toolkit):
        ctx = self.constants(parsed, toolkit)
        lo, hi = parsed.t_range
        rows = sweep(range(lo, hi + 1), ctx)
        for row in rows:
            if row['threshold_thm1']:
                toolkit.metrics.send_event('threshold_logged', 'sweep', {
                    't': row['t'], 'threshold_thm1': row['threshold_thm1'],
                })
        fmt = 'csv' if parsed.emit_csv else self.output_format(parsed, toolkit)
        emit(toolkit.writer, rows, fmt)
        return EXIT_OK
