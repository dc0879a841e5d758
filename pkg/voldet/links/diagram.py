"""
Planar link diagram model.

A crossing is a 4-tuple of edge labels in counterclockwise order with the
under-strand at positions 0 and 2. A dart is (crossing, position). Corner k of a
crossing is the sector between positions k and k+1.
"""
from collections import Counter
from functools import cached_property
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict

from voldet.errors import DiagramError
from voldet.links.notation import (
    Crossing, Dart, PDText, crossing_pieces, other_ends, relabel_along_strands, scan_next,
)


class FaceSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    # each face is the cyclic sequence of darts leaving its corners, face kept on the right
    faces: tuple[tuple[Dart, ...], ...]
    outer_face: int

    def __len__(self):
        return len(self.faces)

    def sizes(self) -> list[int]:
        return [len(f) for f in self.faces]

    @cached_property
    def corner_face(self) -> dict[Dart, int]:
        # leaving crossing y through position k means the face occupies corner k-1 of y
        res = {}
        for i, face in enumerate(self.faces):
            for (y, k) in face:
                res[(y, (k - 1) % 4)] = i
        return res

    @cached_property
    def dart_face(self) -> dict[Dart, int]:
        return {dart: i for i, face in enumerate(self.faces) for dart in face}

    def bigons(self) -> list[int]:
        """faces with exactly two corners, at two distinct crossings"""
        return [i for i, face in enumerate(self.faces)
                if len(face) == 2 and face[0][0] != face[1][0]]


class Diagram:

    def __init__(self, crossings: Iterable[Crossing]):
        self.crossings: tuple[Crossing, ...] = tuple(tuple(c) for c in crossings)
        for i, tup in enumerate(self.crossings):
            if len(tup) != 4:
                raise DiagramError(f'crossing {i} is not 4-valent')

        counts = Counter(label for tup in self.crossings for label in tup)
        bad = sorted(label for label, n in counts.items() if n != 2)
        if bad:
            raise DiagramError(f'edges {bad} do not have exactly two ends')

        self.other: dict[Dart, Dart] = other_ends(self.crossings)

    @property
    def c(self) -> int:
        return len(self.crossings)

    def __len__(self):
        return self.c

    def __repr__(self):
        return f"Diagram(c={self.c})"

    def edges(self) -> list[tuple[Dart, Dart]]:
        seen = set()
        res = []
        for a, b in self.other.items():
            if a in seen:
                continue
            seen.update((a, b))
            res.append((a, b))
        return sorted(res)

    @cached_property
    def pieces(self) -> list[list[int]]:
        return crossing_pieces(self.crossings)

    @cached_property
    def face_cycles(self) -> list[tuple[Dart, ...]]:
        cycles = []
        visited = set()
        for x in range(self.c):
            for p in range(4):
                if (x, p) in visited:
                    continue
                cycle = []
                dart = (x, p)
                while dart not in visited:
                    visited.add(dart)
                    cycle.append(dart)
                    y, j = self.other[dart]
                    dart = (y, (j + 1) % 4)
                if dart != (x, p):
                    raise DiagramError('face traversal fails to close')
                cycles.append(tuple(cycle))
        return cycles

    def to_pd(self) -> PDText:
        """
        oriented PD code: each piece is walked from the under-strand of its lowest crossing,
        remaining components from the first free dart met along the walk. Edges are
        numbered along the walk.
        """
        if self.c == 0:
            return PDText(tuples=())
        tuples = []
        offset = 0
        for piece in self.pieces:
            sub = [self.crossings[x] for x in piece]
            other = other_ends(sub)
            res = relabel_along_strands(sub, [(0, 0)], scan_next(other), offset=offset, other=other)
            tuples.extend(res)
            offset += 2 * len(sub)
        return PDText(tuples=tuple(tuples))


def build(pd: PDText) -> Diagram:
    d = Diagram(pd.tuples)
    _check_euler(d)
    return d


def from_crossings(crossings: Iterable[Crossing]) -> Diagram:
    d = Diagram(crossings)
    _check_euler(d)
    return d


def _check_euler(d: Diagram):
    faces_per_piece = Counter()
    piece_of = {}
    for i, piece in enumerate(d.pieces):
        for x in piece:
            piece_of[x] = i
    for cycle in d.face_cycles:
        faces_per_piece[piece_of[cycle[0][0]]] += 1
    for i, piece in enumerate(d.pieces):
        if faces_per_piece[i] != len(piece) + 2:
            raise DiagramError(
                f'code not realizable as a planar diagram: piece with {len(piece)} crossings '
                f'has {faces_per_piece[i]} faces, expected {len(piece) + 2}')


def split_components(d: Diagram) -> int:
    return max(1, len(d.pieces))


def faces(d: Diagram) -> FaceSet:
    if d.c == 0:
        raise DiagramError('diagram has no crossings')
    if split_components(d) != 1:
        raise DiagramError(f'diagram is split into {split_components(d)} components')
    cycles = tuple(d.face_cycles)
    # no preferred outer face on the sphere: pick the largest, lowest index on ties
    outer = max(range(len(cycles)), key=lambda i: (len(cycles[i]), -i))
    return FaceSet(faces=cycles, outer_face=outer)


def is_alternating(d: Diagram) -> bool:
    # every edge must join an under end (even position) to an over end (odd position)
    for (x, p), (y, q) in d.other.items():
        if p % 2 == q % 2:
            return False
    return True


def link_components(d: Diagram) -> int:
    seen = set()
    count = 0
    for start in d.other:
        if start in seen:
            continue
        count += 1
        dart = start
        while dart not in seen:
            far = d.other[dart]
            seen.update((dart, far))
            y, q = far
            dart = (y, (q + 2) % 4)
    return count


def is_prime(d: Diagram, fs: Optional[FaceSet] = None) -> bool:
    """
    a simple closed curve meeting the diagram in two edges passes through the two
    faces on either side of those edges: the diagram is prime iff no two distinct
    faces share two or more edges
    """
    fs = fs or faces(d)
    shared = Counter()
    for a, b in d.edges():
        f, g = fs.dart_face[a], fs.dart_face[b]
        if f != g:
            shared[frozenset((f, g))] += 1
    return all(n < 2 for n in shared.values())


def is_reduced(d: Diagram, fs: Optional[FaceSet] = None) -> bool:
    fs = fs or faces(d)
    cf = fs.corner_face
    for x in range(d.c):
        if cf[(x, 0)] == cf[(x, 2)] or cf[(x, 1)] == cf[(x, 3)]:
            return False
    return True


def mirror(d: Diagram) -> Diagram:
    # rotating each tuple by one keeps the cyclic order and swaps over with under
    return Diagram(tup[1:] + tup[:1] for tup in d.crossings)


def disjoint_union(*diagrams: Diagram) -> Diagram:
    crossings = []
    offset = 0
    for d in diagrams:
        labels = sorted({label for tup in d.crossings for label in tup})
        remap = {label: offset + i + 1 for i, label in enumerate(labels)}
        crossings.extend(tuple(remap[label] for label in tup) for tup in d.crossings)
        offset += len(labels)
    return Diagram(crossings)


def bigons(d: Diagram, fs: Optional[FaceSet] = None) -> list[int]:
    return (fs or faces(d)).bigons()
