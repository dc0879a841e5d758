import json
import os

from pydantic import ValidationError

from voldet.cache import CachedInvariants, InvariantCache
from voldet.errors import CacheCorrupt


class JsonlCache(InvariantCache):
    """
    append-only file, one JSON record per line. A file with unreadable lines is
    rewritten from its readable records and a `cache_rebuilt` event is sent.
    """

    def __init__(self, file, metrics=None):
        self.file = file
        self.metrics = metrics
        self.records = {}
        if os.path.exists(file):
            self._load()

    def _load(self):
        bad = 0
        with open(self.file, 'r', encoding='utf-8') as f:
            for line in f:
                if line.strip() == '':
                    continue
                try:
                    record = self._parse(line)
                except CacheCorrupt:
                    bad += 1
                    continue
                self.records.setdefault(record.digest, record)

        if bad:
            self._rewrite()
            if self.metrics:
                self.metrics.send_event('cache_rebuilt', 'cache', {
                    'file': self.file, 'dropped_lines': bad, 'kept': len(self.records),
                })

    @staticmethod
    def _parse(line) -> CachedInvariants:
        try:
            return CachedInvariants(**json.loads(line))
        except (json.JSONDecodeError, ValidationError, TypeError) as e:
            raise CacheCorrupt(f'unreadable cache line: {line[:60]!r}') from e

    def _rewrite(self):
        tmp = self.file + '.tmp'
        with open(tmp, 'w', encoding='utf-8') as f:
            for record in self.records.values():
                f.write(_dump(record) + '\n')
        os.replace(tmp, self.file)

    def get(self, digest):
        return self.records.get(digest)

    def put(self, record: CachedInvariants):
        if record.digest in self.records:
            return self.records[record.digest]
        folder = os.path.dirname(os.path.abspath(self.file))
        os.makedirs(folder, exist_ok=True)
        with open(self.file, 'a', encoding='utf-8') as f:
            f.write(_dump(record) + '\n')
            f.flush()
        self.records[record.digest] = record
        return record

    def __len__(self):
        return len(self.records)


def _dump(record: CachedInvariants) -> str:
    return json.dumps(record.model_dump(), sort_keys=True)
