import os
import re
from typing import Literal, Optional

import i18n
import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

from voldet.cli import OutputWriter, Toolkit
from voldet.cli.command_handler import CommandHandler
from voldet.commands.bounds import Bounds
from voldet.commands.certify import Certify
from voldet.commands.constants import Constants
from voldet.commands.help import Help
from voldet.commands.invariants import Invariants
from voldet.commands.sweep import Sweep
from voldet.commands.validate import ValidateTable
from voldet.errors import BaseErrorHandler
from voldet.metrics import BaseMetrics
from voldet.utils import abs_path

DIGITS_ENV = 'VOLDET_DIGITS'


def substitute_env_vars(data):
    if isinstance(data, dict):
        for key, value in data.items():
            data[key] = substitute_env_vars(value)

    elif isinstance(data, list):
        for i, value in enumerate(data):
            data[i] = substitute_env_vars(value)

    elif isinstance(data, str):
        for match in re.findall(r'\$([A-Za-z_][A-Za-z0-9_]*)', data):
            data = data.replace(f"${match}", os.environ.get(match, f"${match}"))

    return data


def load_config(filename):
    load_dotenv(
        dotenv_path=abs_path('.env'),
    )

    path = filename if os.path.isabs(filename) else abs_path(filename)
    if not os.path.exists(path):
        return {}

    with open(path) as f:
        config = yaml.safe_load(f) or {}

    return substitute_env_vars(config)


class CacheSettings(BaseModel):
    driver: str = 'inmemory'
    file: str = 'data/invariants.jsonl'


class ErrorSettings(BaseModel):
    driver: str = 'print'
    dsn: Optional[str] = None


class Settings(BaseModel):
    digits: int = Field(default=50, ge=10)
    oracle: bool = False
    bracket_limit: int = Field(default=16, ge=0)
    tree_limit: int = Field(default=20, ge=0)
    format: Literal['json', 'csv'] = 'json'
    workers: int = Field(default=1, ge=1)
    locale: str = 'en'
    quiet: bool = False
    cache: CacheSettings = CacheSettings()
    errors: ErrorSettings = ErrorSettings()

    @classmethod
    def from_config(cls, config: dict) -> 'Settings':
        config = dict(config or {})
        if os.environ.get(DIGITS_ENV):
            config['digits'] = os.environ[DIGITS_ENV]
        return cls(**config)


class ConfigLoader:
    # prepares a Toolkit based on a config.yml file; a missing file means defaults

    def __init__(self, configPath='config.yml', writer=None):
        self.config = load_config(configPath)
        self.settings = Settings.from_config(self.config)
        self.writer = writer

    def build(self) -> Toolkit:
        settings = self.settings

        error_driver = settings.errors.driver
        if error_driver == 'print':
            error_handler = BaseErrorHandler()
        elif error_driver == 'sentry':
            from voldet.errors.sentry import SentryHandler
            error_handler = SentryHandler(settings.errors.dsn)
        else:
            raise Exception('unsupported errors driver:', error_driver)

        metrics = BaseMetrics(error_handler, quiet=settings.quiet)

        cache_driver = settings.cache.driver
        if cache_driver == 'inmemory':
            from voldet.cache.inmemory import InMemoryCache
            cache = InMemoryCache()
        elif cache_driver == 'jsonl':
            from voldet.cache.jsonl import JsonlCache
            file = settings.cache.file
            cache = JsonlCache(file if os.path.isabs(file) else abs_path(file), metrics=metrics)
        else:
            raise Exception('unsupported cache driver:', cache_driver)

        if abs_path('i18n') not in i18n.load_path:
            i18n.load_path.append(abs_path('i18n'))
        i18n.set('filename_format', '{locale}.{format}')
        i18n.set('locale', settings.locale)
        i18n.set('fallback', 'en')

        commands = [
            Constants(),
            Invariants(),
            Bounds(),
            Certify(),
            Sweep(),
            ValidateTable(),
        ]
        commands.append(Help(commands))

        return Toolkit(
            settings=settings,
            cache=cache,
            metrics=metrics,
            writer=self.writer or OutputWriter(),
            handler_fn=lambda: CommandHandler(commands=commands),
        )
