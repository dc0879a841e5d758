from voldet.commands import BaseCommand, EXIT_OK, emit
from voldet.volumes.bounds import eqn5_coefficients, remark_discrepancy, thm2_coefficients, thm3_coefficients


class Constants(BaseCommand):

    def __init__(self):
        super().__init__(
            command='constants',
            name="constants",
            description="Prints gamma, v_tet, xi, phi and the bound coefficients with their provenance",
            examples=[
                "voldet constants",
                "voldet constants --digits 32 --format csv",
            ],
        )

    def run(self, parsed, invocation, toolkit):
        ctx = self.constants(parsed, toolkit)
        data = ctx.describe()
        coefficients = {}
        for name, co in (('thm2', thm2_coefficients(ctx)),
                         ('thm3', thm3_coefficients(ctx)),
                         ('thm3_8_17', thm3_coefficients(ctx, 'borromean_8_17')),
                         ('eqn5', eqn5_coefficients(ctx))):
            coefficients[name] = {k: ctx.fmt(v) for k, v in co.model_dump().items() if k != 'variant'}
        data['coefficients'] = coefficients
        data['thm2_remark'] = remark_discrepancy(ctx)
        emit(toolkit.writer, data, self.output_format(parsed, toolkit))
        return EXIT_OK
