"""
Link determinant, |H_1| of the double branched cover.

The primary route is the Goeritz matrix, evaluated by fraction-free Bareiss
elimination so that intermediate entries stay integral. Two exponential routes
(the Kauffman bracket at a primitive 8th root of unity and the spanning tree
count of an alternating diagram's Tait graph) serve as test oracles.
"""
from itertools import combinations
from math import isqrt
from typing import Literal, Optional, Sequence

from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict

from voldet.errors import DeterminantMismatch, HypothesisError, LimitExceeded, VoldetError
from voldet.links.diagram import Diagram, FaceSet, faces, is_alternating
from voldet.links.tait import GoeritzMatrix, TaitGraph, goeritz, shade

BRACKET_LIMIT = 16
TREE_LIMIT = 20

Method = Literal['goeritz', 'bracket', 'spanning_trees']


class DeterminantResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    method: Method


class DeterminantReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int
    routes: dict[str, int]
    skipped: dict[str, str] = {}


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, factor = m[i], m[i][k]
            row_k = m[k]
            for j in range(k + 1, n):
                # exact: every minor of an integer matrix is an integer
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_goeritz(gm: GoeritzMatrix) -> DeterminantResult:
    return DeterminantResult(value=abs(bareiss_determinant(gm.reduced(0))), method='goeritz')


class Zeta8:
    """element a0 + a1 z + a2 z^2 + a3 z^3 of Z[z] with z^4 = -1"""

    __slots__ = ('coefs',)

    def __init__(self, coefs=(0, 0, 0, 0)):
        self.coefs = tuple(coefs)

    @classmethod
    def power(cls, k: int) -> 'Zeta8':
        k %= 8
        coefs = [0, 0, 0, 0]
        coefs[k % 4] = 1 if k < 4 else -1
        return cls(coefs)

    def __add__(self, other):
        return Zeta8(a + b for a, b in zip(self.coefs, other.coefs))

    def __neg__(self):
        return Zeta8(-a for a in self.coefs)

    def __mul__(self, other):
        res = [0, 0, 0, 0]
        for i, a in enumerate(self.coefs):
            if a == 0:
                continue
            for j, b in enumerate(other.coefs):
                k = i + j
                if k < 4:
                    res[k] += a * b
                else:
                    res[k - 4] -= a * b
        return Zeta8(res)

    def conjugate(self):
        # z^-k = -z^(4-k)
        a0, a1, a2, a3 = self.coefs
        return Zeta8((a0, -a3, -a2, -a1))

    def is_zero(self):
        return not any(self.coefs)

    def __eq__(self, other):
        return isinstance(other, Zeta8) and self.coefs == other.coefs

    def __repr__(self):
        return f"Zeta8{self.coefs}"


def _join(uf: UnionFind, a, b) -> bool:
    """merges the classes of a and b; False if they were already one class"""
    if uf[a] == uf[b]:
        return False
    uf.union(a, b)
    return True


def bracket_at_zeta8(d: Diagram) -> Zeta8:
    """Kauffman bracket <D> evaluated at A = exp(i pi / 4)"""
    edge_index = {}
    for n, (a, b) in enumerate(d.edges()):
        edge_index[a] = edge_index[b] = n
    n_edges = len(edge_index) // 2 if edge_index else 0
    ends = [tuple(edge_index[(x, p)] for p in range(4)) for x in range(d.c)]

    loop_value = -(Zeta8.power(2) + Zeta8.power(-2))  # -A^2 - A^-2, zero at this root
    powers = [Zeta8.power(0)]
    for _ in range(n_edges):
        powers.append(powers[-1] * loop_value)

    total = Zeta8()
    for state in range(1 << d.c):
        uf = UnionFind(range(n_edges))
        joins = 0
        a_count = 0
        for x in range(d.c):
            e0, e1, e2, e3 = ends[x]
            if state >> x & 1:
                joins += _join(uf, e1, e2) + _join(uf, e3, e0)
            else:
                a_count += 1
                joins += _join(uf, e0, e1) + _join(uf, e2, e3)
        loops = n_edges - joins
        term = Zeta8.power(a_count - (d.c - a_count)) * powers[loops - 1]
        total = total + term
    return total


def det_bracket(d: Diagram, limit: int = BRACKET_LIMIT) -> DeterminantResult:
    if d.c > limit:
        raise LimitExceeded(f'bracket oracle limited to {limit} crossings, diagram has {d.c}')
    if d.c == 0:
        return DeterminantResult(value=1, method='bracket')
    z = bracket_at_zeta8(d)
    norm = (z * z.conjugate()).coefs
    if any(norm[1:]):
        raise VoldetError(f'bracket norm is not rational: {norm}')
    root = isqrt(norm[0])
    if root * root != norm[0]:
        raise VoldetError(f'bracket norm {norm[0]} is not a square')
    return DeterminantResult(value=root, method='bracket')


def spanning_tree_count(tg: TaitGraph, limit: int = TREE_LIMIT) -> int:
    edges = [(u, v) for u, v in tg.edges if u != v]
    if len(edges) > limit:
        raise LimitExceeded(f'spanning tree oracle limited to {limit} edges, graph has {len(edges)}')
    n = tg.vertex_count
    if n <= 1:
        return 1
    count = 0
    for chosen in combinations(edges, n - 1):
        uf = UnionFind(range(n))
        if all(_join(uf, u, v) for u, v in chosen):
            count += 1
    return count


def det_spanning_trees(tg: TaitGraph, limit: int = TREE_LIMIT) -> DeterminantResult:
    if not tg.uniform_sign():
        raise HypothesisError('alternating', 'spanning tree count equals the determinant only for alternating diagrams')
    return DeterminantResult(value=spanning_tree_count(tg, limit), method='spanning_trees')


def determinant(d: Diagram, oracle: bool = False, bracket_limit: int = BRACKET_LIMIT,
                tree_limit: int = TREE_LIMIT, fs: Optional[FaceSet] = None) -> DeterminantReport:
    """
    Goeritz determinant of the white-shaded diagram; with `oracle` the exponential
    routes are run too (when within their limits) and must agree.
    """
    fs = fs or faces(d)
    white = shade(d, 'white', fs)
    value = det_goeritz(goeritz(white)).value
    routes = {'goeritz': value}
    skipped = {}

    if oracle:
        if d.c <= bracket_limit:
            routes['bracket'] = det_bracket(d, bracket_limit).value
        else:
            skipped['bracket'] = f'c > {bracket_limit}'
        if not is_alternating(d):
            skipped['spanning_trees'] = 'not alternating'
        elif d.c <= tree_limit:
            routes['spanning_trees'] = det_spanning_trees(white, tree_limit).value
        else:
            skipped['spanning_trees'] = f'c > {tree_limit}'

        if len(set(routes.values())) > 1:
            raise DeterminantMismatch(routes)

    return DeterminantReport(value=value, routes=routes, skipped=skipped)
