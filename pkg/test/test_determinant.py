import os
import random
import unittest
from itertools import permutations
from unittest import mock

from hypothesis import given, settings, strategies as st

from voldet.census.ingest import ingest_csv
from voldet.census.validate import diagram_of
from voldet.errors import DeterminantMismatch, HypothesisError, LimitExceeded
from voldet.links.determinant import (
    DeterminantResult, Zeta8, bareiss_determinant, det_bracket, det_goeritz, det_spanning_trees, determinant,
    spanning_tree_count,
)
from voldet.links.diagram import Diagram, build, mirror
from voldet.links.notation import braid_closure, parse_braid
from voldet.links.tait import cycle_graph, goeritz, medial_diagram, multi_edge, shade

ALTERNATING = os.path.join(os.path.dirname(__file__), 'res', 'census_alternating.csv')

# (braid, determinant): torus, twist, pretzel-like and composite diagrams
CORPUS = [
    ('2: 1 1', 2),
    ('2: 1 1 1', 3),
    ('2: 1 1 1 1', 4),
    ('2: 1 1 1 1 1', 5),
    ('3: 1 -2 1 -2', 5),
    ('3: 1 -2 1 -2 1 -2', 16),
    ('3: 1 -2 1 -2 1 -2 1 -2', 45),
    ('3: 1 1 1 2 2 2', 9),
    ('3: 1 1 1 -2 -2 -2', 9),
    ('4: 1 1 -2 -2 -2 3 3 1 -2 -2 3', 117),
]


def closure(text):
    return build(braid_closure(parse_braid(text)))


def leibniz(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


class TestBareiss(unittest.TestCase):

    def test_small_matrices(self):
        self.assertEqual(bareiss_determinant([]), 1)
        self.assertEqual(bareiss_determinant([[7]]), 7)
        self.assertEqual(bareiss_determinant([[2, 1], [1, 2]]), 3)
        self.assertEqual(bareiss_determinant([[0, 1], [1, 0]]), -1)
        self.assertEqual(bareiss_determinant([[1, 2], [2, 4]]), 0)
        self.assertEqual(bareiss_determinant([[0, 0], [0, 3]]), 0)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
    def test_matches_leibniz_expansion(self, m):
        self.assertEqual(bareiss_determinant(m), leibniz(m))


class TestZeta8(unittest.TestCase):

    def test_arithmetic(self):
        one = Zeta8.power(0)
        self.assertEqual(Zeta8.power(8), one)
        self.assertEqual(Zeta8.power(4), -one)
        self.assertEqual(Zeta8.power(3) * Zeta8.power(5), one)
        self.assertEqual(Zeta8.power(1) * Zeta8.power(1).conjugate(), one)
        self.assertEqual(Zeta8.power(-1), Zeta8.power(1).conjugate())
        self.assertTrue((Zeta8.power(2) + Zeta8.power(6)).is_zero())


class TestDeterminant(unittest.TestCase):

    def test_corpus(self):
        for text, expected in CORPUS:
            report = determinant(closure(text))
            self.assertEqual(report.value, expected, text)
            self.assertEqual(report.routes, {'goeritz': expected})

    def test_corpus_with_oracles(self):
        for text, expected in CORPUS:
            d = closure(text)
            report = determinant(d, oracle=True)
            self.assertEqual(report.value, expected, text)
            self.assertEqual(report.routes['bracket'], expected, text)
            if 'spanning_trees' in report.routes:
                self.assertEqual(report.routes['spanning_trees'], expected, text)
            else:
                self.assertEqual(report.skipped, {'spanning_trees': 'not alternating'}, text)

    def test_oracles_agree_on_census_codes(self):
        for row in ingest_csv(ALTERNATING).rows:
            report = determinant(diagram_of(row), oracle=True)
            self.assertEqual(report.routes, dict.fromkeys(('goeritz', 'bracket', 'spanning_trees'), row.det), row.name)

    def test_oracles_agree_on_random_sp_diagrams(self):
        rng = random.Random(4242)
        sizes = set()
        for _ in range(200):
            g = multi_edge(2)
            for _ in range(rng.randint(0, 10)):
                getattr(g, rng.choice(('bisect', 'double')))(rng.randrange(g.edge_count))
            d = medial_diagram(g)
            sizes.add(d.c)

            report = determinant(d, oracle=True)
            self.assertEqual(report.routes, dict.fromkeys(('goeritz', 'bracket', 'spanning_trees'), report.value),
                             g.edges)
            self.assertEqual(report.value, spanning_tree_count(g), g.edges)
        self.assertLessEqual(max(sizes), 12)

    def test_shading_independence(self):
        for text, expected in CORPUS:
            d = closure(text)
            for color in ('black', 'white'):
                self.assertEqual(det_goeritz(goeritz(shade(d, color))).value, expected, (text, color))

    def test_mirror_invariance(self):
        for text, expected in CORPUS[:6]:
            self.assertEqual(determinant(mirror(closure(text))).value, expected, text)

    def test_limits(self):
        d = closure('3: 1 -2 1 -2')
        with self.assertRaises(LimitExceeded):
            det_bracket(d, limit=3)

        report = determinant(d, oracle=True, bracket_limit=3, tree_limit=2)
        self.assertEqual(report.routes, {'goeritz': 5})
        self.assertEqual(report.skipped, {'bracket': 'c > 3', 'spanning_trees': 'c > 2'})

        with self.assertRaises(LimitExceeded):
            spanning_tree_count(multi_edge(5), limit=4)

    def test_empty_diagram_bracket(self):
        self.assertEqual(det_bracket(Diagram([])).value, 1)

    def test_spanning_trees(self):
        self.assertEqual(spanning_tree_count(multi_edge(2)), 2)
        self.assertEqual(spanning_tree_count(cycle_graph(3)), 3)
        self.assertEqual(spanning_tree_count(cycle_graph(5)), 5)

        with self.assertRaises(HypothesisError):
            det_spanning_trees(shade(closure('3: 1 1 1 2 2 2'), 'white'))

    def test_mismatch(self):
        wrong = DeterminantResult(value=99, method='bracket')
        with mock.patch('voldet.links.determinant.det_bracket', return_value=wrong):
            with self.assertRaises(DeterminantMismatch) as ctx:
                determinant(closure('2: 1 1 1'), oracle=True)
        self.assertEqual(ctx.exception.values['bracket'], 99)
        self.assertEqual(ctx.exception.values['goeritz'], 3)
