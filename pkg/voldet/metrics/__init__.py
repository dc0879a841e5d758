import sys


class BaseMetrics:
    """
    events go to stderr so stdout stays machine-readable (reports, CSV)
    """

    def __init__(self, error_handler, quiet=False):
        self.error_handler = error_handler
        self.quiet = quiet

    def capture_exception(self, exception, source='anonymous'):
        if self.error_handler:
            self.error_handler.capture_exception(exception)
        self.send_event('error', source, {'error': str(exception)})

    def send_event(self, event, source='anonymous', params=None):
        if self.quiet:
            return
        print(f"EVENT: {event} / {source} / {params or {}}", file=sys.stderr)


class RecordingMetrics(BaseMetrics):
    # keeps events in memory; used by tests and by batch runs that attach events to reports

    def __init__(self, error_handler=None):
        super().__init__(error_handler, quiet=True)
        self.events = []

    def send_event(self, event, source='anonymous', params=None):
        self.events.append((event, source, params or {}))

    def named(self, event):
        return [e for e in self.events if e[0] == event]
