from i18n import t

from voldet.commands import BaseCommand, EXIT_OK


def help_commands_str(commands):
    lines = []
    for k in commands:
        lines.append(f'{k.command} - {k.description}')
        lines.extend(f'    {ex}' for ex in k.examples)
    return '\n'.join(lines)


class Help(BaseCommand):

    def __init__(self, commands):
        super().__init__(
            command='help',
            name="help",
            description="Shows this help message",
            examples=[
                "voldet help",
            ],
            prompt_class=None,
        )
        self.commands = commands

    def run(self, parsed, invocation, toolkit):
        toolkit.writer.send_message(t('instructions.help', commands=help_commands_str(self.commands)))
        return EXIT_OK
