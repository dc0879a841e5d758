import csv
import io
import sys
from typing import Optional

from voldet.volumes.numerics import PrecisionContext, compute_constants


class Invocation:
    def __init__(self, tokens, metadata=None):
        self.tokens = list(tokens)
        self.metadata = metadata or {}  # transient, survives the current run only

    @property
    def text(self):
        return ' '.join(self.tokens)

    def __str__(self):
        return f"Invocation({self.text})"

    def __repr__(self):
        return self.__str__()


class OutputWriter:
    """results go to `stream`, diagnostics to `err`"""

    def __init__(self, stream=None, err=None):
        self.stream = stream or sys.stdout
        self.err = err or sys.stderr

    def send_message(self, text):
        self.stream.write(text)
        if not text.endswith('\n'):
            self.stream.write('\n')

    def send_error(self, text):
        self.err.write(f"{text}\n")

    def send_csv(self, rows):
        if not rows:
            return
        writer = csv.DictWriter(self.stream, fieldnames=list(rows[0].keys()), lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)


class CapturingWriter(OutputWriter):

    def __init__(self):
        super().__init__(io.StringIO(), io.StringIO())

    @property
    def output(self):
        return self.stream.getvalue()

    @property
    def errors(self):
        return self.err.getvalue()


class Toolkit:
    """
    everything a command needs for one run: settings, cache, metrics and the output writer
    """

    def __init__(self, settings, cache, metrics, writer, handler_fn):
        self.settings = settings
        self.cache = cache
        self.metrics = metrics
        self.writer = writer
        self.handler = handler_fn()

    def constants(self, digits: Optional[int] = None) -> PrecisionContext:
        digits = digits or self.settings.digits
        ctx = compute_constants(digits)
        self.metrics.send_event('constants_computed', 'numerics', {'digits': digits})
        return ctx

    def run(self, argv) -> int:
        return self.handler.process(Invocation(argv), self)
