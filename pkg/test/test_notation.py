import unittest

from hypothesis import given, settings, strategies as st

from voldet.errors import NotationError
from voldet.links.diagram import build
from voldet.links.notation import (
    PDText, braid_closure, mirror_braid, parse_braid, parse_pd, render_pd,
)

TREFOIL_PD = '[[1,5,2,4],[3,1,4,6],[5,3,6,2]]'


class TestBraidWords(unittest.TestCase):

    def test_parse_braid(self):
        b = parse_braid('2: 1 1 1')
        self.assertEqual(b.strand_count, 2)
        self.assertEqual(b.letters, (1, 1, 1))

        b = parse_braid('1 -2 1 -2')
        self.assertEqual(b.strand_count, 3)
        self.assertEqual(str(b), '3: 1 -2 1 -2')

        b = parse_braid('4: 1, 1, -2')
        self.assertEqual(b.letters, (1, 1, -2))

    def test_parse_braid_errors(self):
        for text in ['', '   ', '2:', '3: 1 x', '2: 0', '2: 3', '1: 1', 'a: 1']:
            with self.assertRaises(NotationError, msg=text):
                parse_braid(text)

    def test_component_count(self):
        self.assertEqual(parse_braid('2: 1 1 1').component_count(), 1)
        self.assertEqual(parse_braid('2: 1 1').component_count(), 2)
        self.assertEqual(parse_braid('3: 1 -2 1 -2 1 -2').component_count(), 3)

    def test_mirror_braid(self):
        b = mirror_braid(parse_braid('3: 1 -2 1'))
        self.assertEqual(b.letters, (-1, 2, -1))
        self.assertEqual(b.strand_count, 3)

    def test_closure(self):
        pd = braid_closure(parse_braid('2: 1 1 1'))
        self.assertEqual(pd.crossing_count, 3)
        self.assertEqual(render_pd(pd), '[[4,1,5,2],[2,5,3,6],[6,3,1,4]]')

        pd = braid_closure(parse_braid('4: 1 1 -2 -2 -2 3 3 1 -2 -2 3'))
        self.assertEqual(pd.crossing_count, 11)
        build(pd)

    def test_closure_of_uncrossed_strand(self):
        with self.assertRaises(NotationError):
            braid_closure(parse_braid('3: 1 1'))


class TestPDCodes(unittest.TestCase):

    def test_parse_pd(self):
        pd = parse_pd(TREFOIL_PD)
        self.assertEqual(pd.crossing_count, 3)
        self.assertEqual(pd.tuples[0], (1, 5, 2, 4))
        self.assertEqual(render_pd(pd), TREFOIL_PD)

        pd = parse_pd('[(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)]')
        self.assertEqual(render_pd(pd), TREFOIL_PD)

    def test_parse_pd_errors(self):
        cases = {
            '': 'empty PD code',
            '[[1,2,3]]': 'tuple 1 does not have 4 entries',
            '[[1,2,3,4]]': 'label 1 occurs once',
            '[[1,1,1,2]]': 'label 1 occurs 3 times',
            '[[1,1,3,3]]': 'labels are not the contiguous range 1..2',
            '[[1,"a",1,2]]': "malformed token 'a' in tuple 1",
            '[[1,1,2,2]': 'malformed PD code',
            '{"a": 1}': 'PD code must be a bracketed list of 4-tuples',
        }
        for text, message in cases.items():
            with self.assertRaises(NotationError, msg=text) as ctx:
                parse_pd(text)
            self.assertIn(message, str(ctx.exception))

    def test_canonical_is_idempotent(self):
        pd = parse_pd(TREFOIL_PD)
        once = pd.canonical()
        self.assertEqual(once.canonical(), once)
        self.assertEqual(pd.digest(), once.digest())

    def test_digest_separates_diagrams(self):
        trefoil = braid_closure(parse_braid('2: 1 1 1'))
        figure_eight = braid_closure(parse_braid('3: 1 -2 1 -2'))
        self.assertNotEqual(trefoil.digest(), figure_eight.digest())

    @settings(max_examples=40, deadline=None)
    @given(st.permutations(list(range(1, 9))), st.permutations(list(range(4))))
    def test_digest_ignores_labels_and_order(self, labels, order):
        pd = braid_closure(parse_braid('3: 1 -2 1 -2'))
        relabel = {i + 1: label for i, label in enumerate(labels)}
        tuples = [tuple(relabel[x] for x in pd.tuples[i]) for i in order]
        other = PDText(tuples=tuple(tuples))
        self.assertEqual(other.digest(), pd.digest())
