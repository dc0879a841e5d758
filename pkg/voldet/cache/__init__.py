from typing import Optional

from pydantic import BaseModel


class CachedInvariants(BaseModel):
    digest: str
    c: int
    t: Optional[int] = None
    det: Optional[int] = None
    link_components: Optional[int] = None
    classifications: dict[str, Optional[bool]] = {}


class InvariantCache:
    """
    invariants keyed by the digest of a canonical PD code. Single writer, many readers.
    """

    def get(self, digest) -> Optional[CachedInvariants]:
        raise NotImplementedError()

    def put(self, record: CachedInvariants) -> CachedInvariants:
        raise NotImplementedError()

    def __len__(self):
        raise NotImplementedError()
