"""
Checkerboard (Tait) graphs, Goeritz matrices and series-parallel graphs.

A PlaneGraph stores its embedding as a counterclockwise rotation of darts around
every vertex; dart (e, 0) sits at the first endpoint of edge e, (e, 1) at the second.
"""
from typing import Literal, Optional, Sequence, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict

from voldet.errors import DiagramError, HypothesisError
from voldet.links.diagram import Diagram, FaceSet, faces, from_crossings, is_alternating

Shade = Literal['black', 'white']
Rotation = list[tuple[int, int]]

# corners 1 and 3 of a crossing are the A-corners (swept counterclockwise by the over-strand)
A_CORNERS = (1, 3)


class PlaneGraph:

    def __init__(self, vertex_count: int, edges: Sequence[tuple[int, int]],
                 rotation: Optional[Sequence[Rotation]] = None):
        self.vertex_count = vertex_count
        self.edges: list[tuple[int, int]] = [tuple(e) for e in edges]
        if rotation is None:
            rotation = [[] for _ in range(vertex_count)]
            for e, (u, v) in enumerate(self.edges):
                rotation[u].append((e, 0))
                rotation[v].append((e, 1))
        self.rotation: list[Rotation] = [list(r) for r in rotation]

    def copy(self):
        return self.__class__(self.vertex_count, self.edges, self.rotation)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.vertex_count))
        for e, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, key=e)
        return g

    def loops(self) -> list[int]:
        return [e for e, (u, v) in enumerate(self.edges) if u == v]

    def __repr__(self):
        return f"{self.__class__.__name__}(V={self.vertex_count}, E={self.edge_count})"


class TaitGraph(PlaneGraph):
    """plane graph of one colour class of faces; vertex i is face `face_of_vertex[i]`"""

    def __init__(self, vertex_count, edges, rotation, signs: Sequence[int],
                 shade: Shade, face_of_vertex: Sequence[int]):
        super().__init__(vertex_count, edges, rotation)
        self.signs = list(signs)
        self.shade = shade
        self.face_of_vertex = list(face_of_vertex)

    def copy(self):
        return TaitGraph(self.vertex_count, self.edges, self.rotation, self.signs, self.shade,
                         self.face_of_vertex)

    def uniform_sign(self) -> bool:
        return len(set(self.signs)) <= 1


class SPGraph(PlaneGraph):
    """plane graph grown from a single edge by `bisect` and `double` moves"""

    def __init__(self, vertex_count, edges, rotation=None, terminals=(0, 1)):
        super().__init__(vertex_count, edges, rotation)
        self.terminals = tuple(terminals)

    def copy(self):
        return SPGraph(self.vertex_count, self.edges, self.rotation, self.terminals)

    def bisect(self, e: int):
        # e becomes (u, w) and the new edge (w, v) is appended
        u, v = self.edges[e]
        w = self.vertex_count
        f = len(self.edges)
        self.vertex_count += 1
        self.edges[e] = (u, w)
        self.edges.append((w, v))
        self.rotation[v] = [(f, 1) if dart == (e, 1) else dart for dart in self.rotation[v]]
        self.rotation.append([(e, 1), (f, 0)])
        return self

    def double(self, e: int):
        # parallel copy, drawn next to e so that the two bound a bigon face
        u, v = self.edges[e]
        f = len(self.edges)
        self.edges.append((u, v))
        at_u = self.rotation[u]
        at_u.insert(at_u.index((e, 0)) + 1, (f, 0))
        at_v = self.rotation[v]
        at_v.insert(at_v.index((e, 1)), (f, 1))
        return self


class SPOperation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal['bisect', 'double']
    edge: int

    @classmethod
    def parse(cls, text: str) -> 'SPOperation':
        kind, _, edge = text.partition(':')
        return cls(kind=kind.strip(), edge=int(edge))


class GoeritzMatrix(BaseModel):
    model_config = ConfigDict(frozen=True)

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def reduced(self, index: int = 0) -> list[list[int]]:
        """the matrix with row and column `index` deleted"""
        return [[x for j, x in enumerate(row) if j != index]
                for i, row in enumerate(self.entries) if i != index]


def single_edge() -> SPGraph:
    return SPGraph(2, [(0, 1)], [[(0, 0)], [(0, 1)]])


def multi_edge(n: int) -> SPGraph:
    """T_n: two vertices joined by n parallel edges"""
    if n < 1:
        raise ValueError('multi_edge needs n >= 1')
    g = single_edge()
    for _ in range(n - 1):
        g.double(0)
    return g


def theta_graph(lengths: Sequence[int]) -> SPGraph:
    """
    two poles joined by internally disjoint paths with the given edge counts,
    drawn in the listed order
    """
    if not lengths or min(lengths) < 1:
        raise ValueError('theta_graph needs path lengths >= 1')
    edges = []
    vertex_count = 2
    firsts, lasts = [], []
    rotation = [[], []]
    for length in lengths:
        prev = 0
        firsts.append((len(edges), 0))
        for step in range(length):
            if step == length - 1:
                nxt = 1
            else:
                nxt = vertex_count
                vertex_count += 1
                rotation.append([])
            e = len(edges)
            edges.append((prev, nxt))
            rotation[prev].append((e, 0))
            rotation[nxt].append((e, 1))
            prev = nxt
        lasts.append((len(edges) - 1, 1))
    rotation[0] = firsts
    rotation[1] = list(reversed(lasts))
    return SPGraph(vertex_count, edges, rotation)


def cycle_graph(n: int) -> SPGraph:
    return theta_graph([1, n - 1])


def sp_generate(seed: SPGraph, ops: Sequence[Union[SPOperation, str, tuple]]) -> SPGraph:
    g = seed.copy()
    for op in ops:
        if isinstance(op, str):
            op = SPOperation.parse(op)
        elif isinstance(op, tuple):
            op = SPOperation(kind=op[0], edge=op[1])
        if not 0 <= op.edge < g.edge_count:
            raise ValueError(f'{op.kind} on missing edge {op.edge}')
        getattr(g, op.kind)(op.edge)
    return g


def shade(d: Diagram, color: Shade, fs: FaceSet = None) -> TaitGraph:
    """
    Tait graph on the faces of one colour. Black is the colour class of the face at
    corner 1 of crossing 0. An edge gets sign +1 when its faces sit at the A-corners.
    """
    if color not in ('black', 'white'):
        raise ValueError(f'unknown shade {color!r}')
    fs = fs or faces(d)
    cf = fs.corner_face

    colour = {cf[(0, 1)]: 0}
    stack = [cf[(0, 1)]]
    while stack:
        f = stack.pop()
        for (y, k) in fs.faces[f]:
            corner = (k - 1) % 4
            for step in (1, 2, 3):
                g = cf[(y, (corner + step) % 4)]
                want = colour[f] ^ (step % 2)
                if g not in colour:
                    colour[g] = want
                    stack.append(g)
                elif colour[g] != want:
                    raise DiagramError('faces are not two-colourable')

    chosen = 0 if color == 'black' else 1
    face_of_vertex = [f for f in range(len(fs.faces)) if colour[f] == chosen]
    vertex_of = {f: i for i, f in enumerate(face_of_vertex)}

    edges, signs, corner_a = [], [], []
    for x in range(d.c):
        a = 1 if colour[cf[(x, 1)]] == chosen else 0
        edges.append((vertex_of[cf[(x, a)]], vertex_of[cf[(x, a + 2)]]))
        signs.append(1 if a in A_CORNERS else -1)
        corner_a.append(a)

    rotation = []
    for f in face_of_vertex:
        darts = []
        for (y, k) in fs.faces[f]:
            corner = (k - 1) % 4
            darts.append((y, 0 if corner == corner_a[y] else 1))
        # faces are traversed clockwise
        rotation.append(list(reversed(darts)))

    return TaitGraph(len(face_of_vertex), edges, rotation, signs, color, face_of_vertex)


def goeritz(tg: TaitGraph) -> GoeritzMatrix:
    n = tg.vertex_count
    m = [[0] * n for _ in range(n)]
    for (u, v), s in zip(tg.edges, tg.signs):
        if u == v:
            continue
        m[u][v] -= s
        m[v][u] -= s
        m[u][u] += s
        m[v][v] += s
    return GoeritzMatrix(entries=tuple(tuple(row) for row in m))


def is_series_parallel(g: PlaneGraph) -> bool:
    """
    two-terminal series-parallel test: merge parallel edges and suppress degree-2
    vertices until nothing changes; the graph is series-parallel iff one edge remains
    """
    if g.edge_count == 0 or g.loops():
        return False
    simple = nx.Graph(g.to_networkx())
    if not nx.is_connected(simple):
        return False

    queue = [v for v in simple if simple.degree(v) == 2]
    while queue and simple.number_of_nodes() > 2:
        w = queue.pop()
        if w not in simple or simple.degree(w) != 2:
            continue
        a, b = list(simple.neighbors(w))
        simple.remove_node(w)
        simple.add_edge(a, b)
        queue.extend(v for v in (a, b) if simple.degree(v) == 2)

    return simple.number_of_nodes() == 2 and simple.number_of_edges() == 1


def is_arborescent(d: Diagram, fs: FaceSet = None) -> bool:
    if not is_alternating(d):
        raise HypothesisError('alternating', 'arborescence test needs an alternating diagram')
    fs = fs or faces(d)
    return any(is_series_parallel(shade(d, color, fs)) for color in ('black', 'white'))


class ExceptionMatch(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal['none', 'is_T2', 'is_T2_join_T2']
    pattern: Optional[str] = None

    @property
    def matched(self) -> bool:
        return self.kind != 'none'


def detect_exceptions(g: PlaneGraph) -> ExceptionMatch:
    """
    the two Tait graphs excluded from the Fibonacci determinant bound. T2*T2 is
    matched in both readings: two T2 glued at a vertex, and T2 doubled into T4.
    """
    if g.loops():
        return ExceptionMatch(kind='none')
    counts = {}
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        counts[key] = counts.get(key, 0) + 1
    used = {x for key in counts for x in key}
    if len(used) != g.vertex_count:
        return ExceptionMatch(kind='none')
    multiplicities = sorted(counts.values())

    if g.vertex_count == 2 and multiplicities == [2]:
        return ExceptionMatch(kind='is_T2', pattern='T2')
    if g.vertex_count == 2 and multiplicities == [4]:
        return ExceptionMatch(kind='is_T2_join_T2', pattern='parallel')
    if g.vertex_count == 3 and multiplicities == [2, 2]:
        return ExceptionMatch(kind='is_T2_join_T2', pattern='one_point')
    return ExceptionMatch(kind='none')


def medial_diagram(g: PlaneGraph) -> Diagram:
    """
    alternating diagram whose crossing e sits on edge e of `g`, with the faces of `g`
    white and its vertices black (at corners 1 and 3)
    """
    if g.edge_count < 2:
        raise DiagramError('medial diagram needs a graph with at least 2 edges')
    if g.loops():
        raise DiagramError('medial diagram of a graph with loops is not supported')

    # which position of crossing e a strand leaves through, by (end, side)
    position = {(0, 'next'): 1, (0, 'prev'): 2, (1, 'next'): 3, (1, 'prev'): 0}
    tuples = [[0, 0, 0, 0] for _ in g.edges]
    label = 0
    for rot in g.rotation:
        k = len(rot)
        for i in range(k):
            (e1, end1), (e2, end2) = rot[i], rot[(i + 1) % k]
            label += 1
            tuples[e1][position[(end1, 'next')]] = label
            tuples[e2][position[(end2, 'prev')]] = label

    return from_crossings(tuple(t) for t in tuples)


def tait_graph_of_medial(g: PlaneGraph) -> TaitGraph:
    d = medial_diagram(g)
    return shade(d, 'black')
