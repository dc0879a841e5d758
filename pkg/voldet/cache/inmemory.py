from voldet.cache import CachedInvariants, InvariantCache


class InMemoryCache(InvariantCache):

    def __init__(self):
        self.records = {}

    def get(self, digest):
        return self.records.get(digest)

    def put(self, record: CachedInvariants):
        self.records.setdefault(record.digest, record)
        return self.records[record.digest]

    def __len__(self):
        return len(self.records)
