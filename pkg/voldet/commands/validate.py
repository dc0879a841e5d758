from typing import Optional

from pydantic import Field

from voldet.census.ingest import ingest_csv
from voldet.census.report import write_csv, write_json
from voldet.census.validate import validate_table
from voldet.commands import BasePrompt, BaseCommand


class ValidatePrompt(BasePrompt):
    prompt: str
    workers: Optional[int] = Field(default=None, ge=1)


class ValidateTable(BaseCommand):

    def __init__(self):
        super().__init__(
            command='validate-table',
            name="validate_table",
            description="Recomputes determinants of a census table and certifies every row",
            examples=[
                "voldet validate-table census.csv --format csv",
            ],
            prompt_class=ValidatePrompt,
        )

    def run(self, parsed, invocation, toolkit):
        ctx = self.constants(parsed, toolkit)
        settings = toolkit.settings
        table = ingest_csv(parsed.prompt)
        report = validate_table(
            table, ctx,
            oracle=settings.oracle if parsed.oracle is None else parsed.oracle,
            bracket_limit=settings.bracket_limit,
            tree_limit=settings.tree_limit,
            cache=toolkit.cache,
            metrics=toolkit.metrics,
            workers=parsed.workers or settings.workers,
        )
        if self.output_format(parsed, toolkit) == 'csv':
            write_csv(report, toolkit.writer.stream)
        else:
            write_json(report, toolkit.writer.stream)
        return report.exit_code()
