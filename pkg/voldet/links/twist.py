from typing import Literal

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, model_validator

from voldet.errors import DiagramError
from voldet.links.diagram import Diagram, FaceSet, faces


RegionKind = Literal['chain', 'full_cycle']


class TwistDecomposition(BaseModel):
    """
    maximal chains of crossings joined end to end by bigons. A region with no bigon
    is a single crossing. `full_cycle` marks the one case where bigons close up into
    a cycle through every crossing (eg. the standard (2, n) torus diagram).
    """
    model_config = ConfigDict(frozen=True)

    regions: tuple[tuple[int, ...], ...]
    region_kinds: tuple[RegionKind, ...]

    @model_validator(mode='after')
    def check_partition(self):
        if len(self.regions) != len(self.region_kinds):
            raise ValueError('one kind per region')
        seen = [x for r in self.regions for x in r]
        if sorted(seen) != list(range(len(seen))):
            raise ValueError('regions must partition the crossings')
        return self

    @property
    def t(self) -> int:
        return len(self.regions)

    def sizes(self) -> list[int]:
        return [len(r) for r in self.regions]

    def region_of(self) -> dict[int, int]:
        return {x: i for i, r in enumerate(self.regions) for x in r}


class TwistAudit(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcome: Literal['pass', 'suspect']
    # twist-region index pairs whose crossings see the same two non-bigon faces across opposite corners
    pairs: tuple[tuple[int, int], ...] = ()

    @property
    def passed(self) -> bool:
        return self.outcome == 'pass'


def decompose(d: Diagram, fs: FaceSet = None) -> TwistDecomposition:
    if d.c < 2:
        raise DiagramError(f'twist decomposition needs at least 2 crossings, got {d.c}')
    fs = fs or faces(d)

    uf = UnionFind(range(d.c))
    for i in fs.bigons():
        (x, _), (y, _) = fs.faces[i]
        uf.union(x, y)

    bigon_count = {}
    for i in fs.bigons():
        root = uf[fs.faces[i][0][0]]
        bigon_count[root] = bigon_count.get(root, 0) + 1

    groups = sorted((sorted(g) for g in uf.to_sets()), key=lambda g: g[0])
    regions = []
    kinds = []
    for g in groups:
        n_bigons = bigon_count.get(uf[g[0]], 0)
        regions.append(tuple(g))
        kinds.append('full_cycle' if len(g) == d.c and n_bigons >= len(g) else 'chain')

    return TwistDecomposition(regions=tuple(regions), region_kinds=tuple(kinds))


def opposite_face_pairs(d: Diagram, fs: FaceSet = None) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """per crossing: faces at corners (0, 2) and at corners (1, 3)"""
    fs = fs or faces(d)
    cf = fs.corner_face
    return [((cf[(x, 0)], cf[(x, 2)]), (cf[(x, 1)], cf[(x, 3)])) for x in range(d.c)]


def twist_reduced_heuristic(d: Diagram, td: TwistDecomposition = None, fs: FaceSet = None) -> TwistAudit:
    """
    a flype-reducible pair of twist regions shows up as two crossings from different
    regions sitting between the same two faces (across opposite corners), where
    neither face is a bigon. Any such pair is reported as suspect.
    """
    fs = fs or faces(d)
    td = td or decompose(d, fs)
    region_of = td.region_of()
    bigon_faces = set(fs.bigons())

    seen = {}
    for x, pair in enumerate(opposite_face_pairs(d, fs)):
        for f, g in pair:
            if f == g or f in bigon_faces or g in bigon_faces:
                continue
            seen.setdefault(frozenset((f, g)), set()).add(region_of[x])

    pairs = set()
    for regions in seen.values():
        ordered = sorted(regions)
        for i in range(len(ordered)):
            for j in range(i + 1, len(ordered)):
                pairs.add((ordered[i], ordered[j]))

    if pairs:
        return TwistAudit(outcome='suspect', pairs=tuple(sorted(pairs)))
    return TwistAudit(outcome='pass')
