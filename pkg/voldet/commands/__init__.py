import json
import os
from typing import Literal, Optional

from i18n import t
from pydantic import BaseModel, Field, ValidationError

from voldet.errors import DeterminantMismatch, VoldetError
from voldet.links.diagram import Diagram, build, mirror
from voldet.links.notation import braid_closure, mirror_braid, parse_braid, parse_pd

EXIT_OK = 0
EXIT_FINDINGS = 1  # discrepancies or violations
EXIT_INPUT = 2


class BasePrompt(BaseModel):
    command: str
    prompt: Optional[str] = None
    digits: Optional[int] = Field(default=None, ge=10)
    oracle: Optional[bool] = None
    format: Optional[Literal['json', 'csv']] = None


class DiagramPrompt(BasePrompt):
    prompt: str
    notation: Literal['pd', 'braid'] = 'pd'
    mirror: bool = False


def to_params(invocation) -> dict:
    """
    `command [prompt words] [--key value words] [--flag]`: a flag with no value reads as true,
    keys use underscores for dashes
    """
    tokens = invocation.tokens

    command = None
    if len(tokens) > 0:
        command = tokens[0]
        if command.startswith('/'):
            command = command[1:]

    prompt_words = []
    for tok in tokens[1:]:
        if tok.startswith('--'):
            break
        prompt_words.append(tok)

    params = {'command': command}
    if prompt_words:
        params['prompt'] = ' '.join(prompt_words)

    i = 1
    while i < len(tokens):
        if tokens[i].startswith('--') and len(tokens[i]) > 2:
            key = tokens[i][2:].replace('-', '_')
            words = []
            while i + 1 < len(tokens) and not tokens[i + 1].startswith('--'):
                words.append(tokens[i + 1])
                i += 1
            params[key] = ' '.join(words) if words else 'true'
        i += 1

    return params


def notify_errors(exc, writer) -> int:
    if isinstance(exc, ValidationError):
        errors = []
        for e in exc.errors():
            loc = e['loc'][0] if e['loc'] else 'input'
            errors.append(f'{loc}: {e["msg"]}')
        writer.send_error(t('errors.whoops', details='\n'.join(errors)))
        return EXIT_INPUT
    if isinstance(exc, DeterminantMismatch):
        writer.send_error(t('errors.mismatch', details=str(exc)))
        return EXIT_FINDINGS
    if isinstance(exc, VoldetError):
        writer.send_error(t('errors.input', kind=exc.__class__.__name__, details=str(exc)))
        return EXIT_INPUT
    raise exc


def read_input(text: str) -> str:
    # an existing file name stands for its contents
    if text and os.path.isfile(text):
        with open(text, 'r', encoding='utf-8') as f:
            return f.read().strip()
    return text


def load_diagram(parsed: DiagramPrompt) -> Diagram:
    text = read_input(parsed.prompt)
    if parsed.notation == 'braid':
        b = parse_braid(text)
        if parsed.mirror:
            b = mirror_braid(b)
        return build(braid_closure(b))
    d = build(parse_pd(text))
    return mirror(d) if parsed.mirror else d


def emit(writer, data, fmt):
    if fmt == 'csv':
        rows = data if isinstance(data, list) else [{'key': k, 'value': _flat(v)} for k, v in data.items()]
        writer.send_csv(rows)
    else:
        writer.send_message(json.dumps(data, indent=2, default=str))


def _flat(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, default=str)
    return v


class BaseCommand:
    def __init__(self, command, name, description, examples, prompt_class=BasePrompt):
        self.command = command
        self.name = name
        self.description = description
        self.examples = examples
        self.prompt_class = prompt_class

    def process(self, invocation, toolkit) -> int:
        """
        parses the invocation and runs the command, returning the process exit code
        """
        params = to_params(invocation)
        if self.prompt_class:
            try:
                parsed = self.prompt_class(**params)
            except ValidationError as e:
                return notify_errors(e, toolkit.writer)
        else:
            parsed = params

        try:
            return self.run(parsed, invocation, toolkit)
        except (ValidationError, VoldetError) as e:
            return notify_errors(e, toolkit.writer)

    def run(self, parsed, invocation, toolkit) -> int:
        raise NotImplementedError()

    def output_format(self, parsed, toolkit):
        return parsed.format or toolkit.settings.format

    def constants(self, parsed, toolkit):
        return toolkit.constants(parsed.digits)
