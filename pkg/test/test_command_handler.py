import unittest
from unittest import mock

from pydantic_core._pydantic_core import ValidationError

from voldet.cli import CapturingWriter, Invocation
from voldet.commands import BaseCommand, EXIT_FINDINGS, EXIT_INPUT, notify_errors, to_params
from voldet.config import ConfigLoader
from voldet.errors import DeterminantMismatch, NotationError
from voldet.metrics import RecordingMetrics


def inv(txt):
    return Invocation(txt.split())


class Exploding(BaseCommand):

    def __init__(self):
        super().__init__(command='explode', name='explode', description='raises', examples=[])

    def run(self, parsed, invocation, toolkit):
        raise RuntimeError('boom')


class TestCommandHandler(unittest.TestCase):

    def setUp(self):
        self.writer = CapturingWriter()
        self.toolkit = ConfigLoader('does-not-exist.yml', writer=self.writer).build()
        self.toolkit.metrics = RecordingMetrics()

    def test_parse_invocation(self):
        valid_res = to_params(inv("/test hello world ! --bla abc def"))
        self.assertEqual(valid_res['command'], 'test')
        self.assertEqual(valid_res['prompt'], 'hello world !')
        self.assertEqual(valid_res['bla'], 'abc def')
        self.assertIsNone(valid_res.get('ble'))

        valid_res = to_params(inv("bounds --t 9 --c 40000 --arborescent-link"))
        self.assertEqual(valid_res, {'command': 'bounds', 't': '9', 'c': '40000', 'arborescent_link': 'true'})

        self.assertEqual(to_params(Invocation([])), {'command': None})

    def test_notify_errors(self):
        err = mock.Mock(ValidationError)
        err.errors.return_value = [
            {'loc': ('bla',), 'msg': 'foo'}
        ]
        writer = mock.Mock(CapturingWriter)

        self.assertEqual(notify_errors(err, writer), EXIT_INPUT)

        writer.send_error.assert_called_once_with('Whoops!\nbla: foo')
        err.errors.assert_called_once()

    def test_notify_domain_errors(self):
        writer = mock.Mock(CapturingWriter)
        self.assertEqual(notify_errors(NotationError('empty braid word'), writer), EXIT_INPUT)
        writer.send_error.assert_called_once_with('NotationError: empty braid word')

        self.assertEqual(notify_errors(DeterminantMismatch({'goeritz': 3, 'bracket': 5}), writer), EXIT_FINDINGS)

        with self.assertRaises(KeyError):
            notify_errors(KeyError('x'), writer)

    def test_unknown_command(self):
        self.assertEqual(self.toolkit.run(['frobnicate']), EXIT_INPUT)
        self.assertIn('Unknown command: frobnicate', self.writer.errors)
        self.assertIn('validate-table - ', self.writer.output)

    def test_empty_invocation_shows_help(self):
        self.assertEqual(self.toolkit.run([]), 0)
        self.assertIn('Usage: voldet', self.writer.output)
        self.assertEqual(self.writer.errors, '')

    def test_metadata_names_the_command(self):
        invocation = Invocation([], metadata={'command': 'help'})
        self.assertEqual(self.toolkit.handler.process(invocation, self.toolkit), 0)
        self.assertEqual(self.toolkit.metrics.named('command')[0][2], {'command': 'help'})

    def test_unexpected_exception(self):
        handler = self.toolkit.handler
        handler.command_handlers['explode'] = Exploding()
        with mock.patch('traceback.print_exc'):
            self.assertEqual(self.toolkit.run(['explode']), EXIT_INPUT)

        errors = self.toolkit.metrics.named('error')
        self.assertEqual(len(errors), 1)
        self.assertEqual(errors[0][1], 'explode')
        self.assertEqual(errors[0][2], {'error': 'boom'})
