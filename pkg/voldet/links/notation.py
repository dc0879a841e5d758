"""
Text notations for link diagrams: braid words and planar diagram (PD) codes.

PD convention: every crossing is a 4-tuple of edge labels listed counterclockwise,
starting at the incoming under-strand. Positions 0 and 2 are the under-strand,
1 and 3 the over-strand. One convention only, no auto-detection.

Braid convention: letter k > 0 is sigma_k, where the strand at position k passes
over the strand at position k+1; letter -k is its inverse.
"""
import json
import re
from collections import Counter
from typing import Callable, Iterable, Optional

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from voldet.errors import NotationError
from voldet.utils import sha256_hash

Crossing = tuple[int, int, int, int]
Dart = tuple[int, int]  # (crossing index, position 0..3)

_INT = re.compile(r'[+-]?\d+')


def _first_error(exc: ValidationError) -> str:
    err = exc.errors()[0]
    return err['msg'].removeprefix('Value error, ')


class BraidWord(BaseModel):
    model_config = ConfigDict(frozen=True)

    strand_count: int = Field(ge=2)
    letters: tuple[int, ...]

    @model_validator(mode='after')
    def check_letters(self):
        if len(self.letters) == 0:
            raise ValueError('empty braid word')
        for k in self.letters:
            if k == 0:
                raise ValueError('generator index 0 does not exist')
            if abs(k) >= self.strand_count:
                raise ValueError(f'generator index {abs(k)} out of range for {self.strand_count} strands')
        return self

    def permutation(self) -> list[int]:
        # perm[i] = position at the bottom reached by the strand starting at position i
        at = list(range(self.strand_count))  # at[position] = starting strand
        for k in self.letters:
            i = abs(k) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        perm = [0] * self.strand_count
        for pos, strand in enumerate(at):
            perm[strand] = pos
        return perm

    def component_count(self) -> int:
        perm = self.permutation()
        seen = set()
        cycles = 0
        for i in range(self.strand_count):
            if i in seen:
                continue
            cycles += 1
            while i not in seen:
                seen.add(i)
                i = perm[i]
        return cycles

    def __str__(self):
        return f"{self.strand_count}: " + ' '.join(str(k) for k in self.letters)


class PDText(BaseModel):
    model_config = ConfigDict(frozen=True)

    tuples: tuple[Crossing, ...]

    @model_validator(mode='after')
    def check_labels(self):
        counts = Counter(label for tup in self.tuples for label in tup)
        for label, n in sorted(counts.items()):
            if label < 1:
                raise ValueError(f'label {label} is not positive')
            if n != 2:
                raise ValueError(f'label {label} occurs {"once" if n == 1 else f"{n} times"}')
        expected = set(range(1, 2 * len(self.tuples) + 1))
        if set(counts) != expected:
            raise ValueError(f'labels are not the contiguous range 1..{2 * len(self.tuples)}')
        return self

    @property
    def crossing_count(self) -> int:
        return len(self.tuples)

    def canonical(self) -> 'PDText':
        """
        relabels edges independently of the input labelling. Diagrams that differ only
        by edge labels (or by the order of their tuples) map to the same code.
        """
        return PDText(tuples=canonical_tuples(self.tuples))

    def digest(self) -> str:
        return sha256_hash(render_pd(self.canonical()))


def parse_braid(text: str) -> BraidWord:
    if text is None or text.strip() == '':
        raise NotationError('empty braid word')

    head, sep, body = text.partition(':')
    strands = None
    if sep:
        strands = _int_token(head.strip())
    else:
        body = text

    letters = [_int_token(tok) for tok in body.replace(',', ' ').split()]
    if len(letters) == 0:
        raise NotationError('empty braid word')

    if strands is None:
        strands = max(abs(k) for k in letters) + 1

    try:
        return BraidWord(strand_count=strands, letters=tuple(letters))
    except ValidationError as e:
        raise NotationError(_first_error(e)) from e


def _int_token(tok: str) -> int:
    if not _INT.fullmatch(tok):
        raise NotationError(f'malformed token {tok!r}')
    return int(tok)


def parse_pd(text: str) -> PDText:
    if text is None or text.strip() == '':
        raise NotationError('empty PD code')

    cleaned = text.strip().replace('(', '[').replace(')', ']')
    try:
        data = json.loads(cleaned)
    except json.JSONDecodeError as e:
        raise NotationError(f'malformed PD code: {e.msg}') from e

    if not isinstance(data, list):
        raise NotationError('PD code must be a bracketed list of 4-tuples')

    tuples = []
    for i, tup in enumerate(data):
        if not isinstance(tup, list) or len(tup) != 4:
            raise NotationError(f'tuple {i + 1} does not have 4 entries')
        for label in tup:
            if not isinstance(label, int) or isinstance(label, bool):
                raise NotationError(f'malformed token {label!r} in tuple {i + 1}')
        tuples.append(tuple(tup))

    try:
        return PDText(tuples=tuple(tuples))
    except ValidationError as e:
        raise NotationError(_first_error(e)) from e


def render_pd(pd: PDText) -> str:
    return '[' + ','.join('[' + ','.join(str(x) for x in tup) + ']' for tup in pd.tuples) + ']'


def mirror_braid(b: BraidWord) -> BraidWord:
    return BraidWord(strand_count=b.strand_count, letters=tuple(-k for k in b.letters))


def braid_closure(b: BraidWord) -> PDText:
    """
    PD code of the closure of `b`. The braid is drawn top to bottom with the
    closing arcs on the right; edges are numbered along the strands starting at
    the top of position 1, then the lowest unnumbered position.
    """
    n = b.strand_count
    touched = set()
    for k in b.letters:
        touched.update((abs(k) - 1, abs(k)))
    free = [i + 1 for i in range(n) if i not in touched]
    if free:
        raise NotationError(f'strand(s) {free} are never crossed; their closure is a split unknotted circle')

    top = list(range(n))
    current = list(top)
    next_id = n
    raw = []
    incoming = []
    for k in b.letters:
        i = abs(k) - 1
        a, c = current[i], current[i + 1]
        na, nc = next_id, next_id + 1  # a continues as na at position i+1, c as nc at position i
        next_id += 2
        # corners counterclockwise: top-right, top-left, bottom-left, bottom-right
        if k > 0:  # a over, c under (enters top-right)
            raw.append((c, a, nc, na))
            incoming.append((0, 1))
        else:  # c over, a under (enters top-left)
            raw.append((a, nc, na, c))
            incoming.append((0, 3))
        current[i], current[i + 1] = nc, na

    uf = UnionFind(range(next_id))
    for pos in range(n):
        uf.union(top[pos], current[pos])

    tuples = [tuple(uf[s] for s in tup) for tup in raw]

    head = {}  # segment class -> dart where it enters a crossing
    for x, tup in enumerate(tuples):
        for p in incoming[x]:
            head[tup[p]] = (x, p)

    starts = [head[uf[top[pos]]] for pos in range(n)]
    return PDText(tuples=tuple(relabel_along_strands(tuples, starts)))


def other_ends(tuples: Iterable[Crossing]) -> dict[Dart, Dart]:
    seen = {}
    other = {}
    for x, tup in enumerate(tuples):
        for p, label in enumerate(tup):
            if label in seen:
                y, q = seen.pop(label)
                other[(x, p)] = (y, q)
                other[(y, q)] = (x, p)
            else:
                seen[label] = (x, p)
    return other


NextStart = Callable[[list, dict, dict], Optional[Dart]]


def relabel_along_strands(tuples, starts: Iterable[Dart], next_start: Optional[NextStart] = None, offset=0,
                          other: Optional[dict] = None) -> list[Crossing]:
    """
    walks the strands, entering crossing x at position p for each dart (x, p) of `starts`
    that is still unlabelled, numbering edges in walk order. Once `starts` runs out
    `next_start` (if given) picks where the next walk enters, or None to stop. Tuples are
    rotated so that position 0 is the under-strand end the walk enters through; labels
    start at offset + 1. Only crossings reached by the walks are returned, in their
    original order.
    """
    other = other if other is not None else other_ends(tuples)
    labelled = {}
    entry = {}
    under_entry = {}
    order = []
    count = offset
    pending = iter(starts)

    def pick():
        for dart in pending:
            if dart not in labelled:
                return dart
        return next_start(order, entry, labelled) if next_start else None

    target = pick()
    while target is not None:
        while target not in labelled:
            count += 1
            labelled[target] = labelled[other[target]] = count
            x, p = target
            if x not in entry:
                entry[x] = p
                order.append(x)
            if p % 2 == 0:
                under_entry[x] = p
            target = other[(x, (p + 2) % 4)]
        target = pick()

    res = []
    for x in sorted(under_entry):
        r = under_entry[x]
        res.append(tuple(labelled[(x, (r + j) % 4)] for j in range(4)))
    return res


def scan_next(other):
    def scan(order, entry, labelled):
        for x in order:
            for j in range(4):
                q = (entry[x] + j) % 4
                if (x, q) not in labelled:
                    return other[(x, q)]
        return None

    return scan


def crossing_pieces(tuples) -> list[list[int]]:
    """crossing indices grouped by connected piece of the underlying 4-valent graph"""
    uf = UnionFind(range(len(tuples)))
    for (x, _), (y, _) in other_ends(tuples).items():
        uf.union(x, y)
    return sorted((sorted(g) for g in uf.to_sets()), key=lambda g: g[0])


def canonical_tuples(tuples) -> tuple[Crossing, ...]:
    tuples = [tuple(t) for t in tuples]
    if not tuples:
        return ()

    encodings = []
    for piece in crossing_pieces(tuples):
        sub = [tuples[x] for x in piece]
        other = other_ends(sub)
        scan = scan_next(other)
        best = None
        for x in range(len(sub)):
            for p in range(4):
                enc = tuple(sorted(relabel_along_strands(sub, [(x, p)], scan, other=other)))
                if best is None or enc < best:
                    best = enc
        encodings.append(best)

    encodings.sort(key=lambda enc: (len(enc), enc))
    res = []
    offset = 0
    for enc in encodings:
        res.extend(tuple(label + offset for label in tup) for tup in enc)
        offset += 2 * len(enc)
    return tuple(res)
