import traceback
from typing import Optional

from i18n import t

from voldet.cli import Invocation
from voldet.commands import BaseCommand, EXIT_INPUT


class CommandHandler:
    """
    dispatches an invocation to the subcommand named by its first token
    """

    def __init__(self, commands, fallback_command='help'):
        self.commands = commands
        self.command_handlers = {c.command: c for c in commands}
        self.fallback_command = fallback_command

    def infer_command(self, invocation: Invocation) -> Optional[BaseCommand]:
        if 'command' in invocation.metadata:
            return self.command_handlers[invocation.metadata.get('command')]

        if not invocation.tokens:
            return None

        txt = invocation.tokens[0].lower()
        if txt.startswith('/'):
            txt = txt[1:]
        return self.command_handlers.get(txt)

    def exec(self, command: BaseCommand, invocation: Invocation, toolkit) -> int:
        try:
            return command.process(invocation, toolkit)
        except Exception as e:
            traceback.print_exc()
            toolkit.metrics.capture_exception(e, command.command)
            return EXIT_INPUT

    def process(self, invocation: Invocation, toolkit) -> int:
        inf = self.infer_command(invocation)
        if inf is not None:
            toolkit.metrics.send_event(
                event="command",
                source='cli',
                params={'command': inf.command},
            )
            return self.exec(inf, invocation, toolkit)

        fallback = self.command_handlers.get(self.fallback_command)
        if invocation.tokens:
            toolkit.writer.send_error(t('errors.unknown_command', command=invocation.tokens[0]))
        if fallback is not None:
            self.exec(fallback, Invocation([fallback.command]), toolkit)
        return EXIT_INPUT if invocation.tokens else 0
