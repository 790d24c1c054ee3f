# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Tests for the poset of primes and the Cohen-Macaulay certificate."""
import json
import os
import unittest
from unittest import mock

from pybei import graph, poset
from pybei.cutsets import CutSetError
from pybei.graph import Graph, SizeBoundError
from pybei.helpers import FIELDS_ENV, vertex_set
from pybei.poset import RadicalIdealRep
from pybei.tests import test_utils

ALL_FIELDS = (0, 2, 3)


def worked_sum():
    """P_{2} + P_{4} of the small Cohen-Macaulay graph."""
    g = test_utils.small_cm_graph()
    return poset.rep_sum(poset.prime_of_cut_set(g, [2]),
                         poset.prime_of_cut_set(g, [4]))


class RadicalIdealRepTest(test_utils.TestCase):
    def test_prime_of_cut_set(self):
        prime = poset.prime_of_cut_set(graph.path_graph(3), [2])
        self.assertEqual(vertex_set([2]), prime.z)
        self.assertEqual([vertex_set([1]), vertex_set([3])],
                         prime.components())
        self.assertTrue(poset.rep_is_prime(prime))
        self.assertEqual(4, prime.dimension)
        self.assertEqual('Z={2} H={1},{3}', prime.describe())

    def test_prime_of_non_cut_set(self):
        self.assertRaises(CutSetError, poset.prime_of_cut_set,
                          graph.path_graph(3), [1])

    def test_h_must_avoid_z(self):
        self.assertRaises(ValueError, RadicalIdealRep, [1],
                          graph.path_graph(2))

    def test_sum_of_two_primes(self):
        total = worked_sum()
        self.assertEqual(
            RadicalIdealRep([2, 4], Graph.from_edges([(1, 3), (3, 5)])),
            total)
        self.assertFalse(poset.rep_is_prime(total))
        self.assertEqual('Z={2,4} H=1-3,3-5', total.describe())

    def test_sum_needs_same_ambient_set(self):
        first = poset.prime_of_cut_set(graph.path_graph(3), [])
        second = poset.prime_of_cut_set(graph.path_graph(2), [])
        self.assertRaises(ValueError, poset.rep_sum, first, second)

    def test_sum_is_idempotent_and_commutative(self):
        g = test_utils.small_cm_graph()
        first = poset.prime_of_cut_set(g, [2])
        second = poset.prime_of_cut_set(g, [4])
        self.assertEqual(first, poset.rep_sum(first, first))
        self.assertEqual(poset.rep_sum(first, second),
                         poset.rep_sum(second, first))

    def test_minimal_primes_of_a_sum(self):
        self.assertEqual([
            RadicalIdealRep([2, 4],
                            Graph.from_edges([(1, 3), (1, 5), (3, 5)])),
            RadicalIdealRep([2, 3, 4], Graph(vertex_set([1, 5]))),
        ], poset.rep_minimal_primes(worked_sum()))

    def test_minimal_primes_of_a_prime(self):
        prime = poset.prime_of_cut_set(graph.path_graph(3), [2])
        self.assertEqual([prime], poset.rep_minimal_primes(prime))

    def test_containment(self):
        g = test_utils.small_cm_graph()
        total = worked_sum()
        for s in ([2], [4]):
            prime = poset.prime_of_cut_set(g, s)
            self.assertTrue(poset.rep_contains(total, prime))
            self.assertFalse(poset.rep_contains(prime, total))
        self.assertTrue(poset.rep_contains(total, total))

    def test_height(self):
        self.assertEqual(6, poset.rep_height(worked_sum()))
        self.assertEqual(2, poset.rep_height(
            poset.prime_of_cut_set(graph.path_graph(3), [])))

    def test_to_dict(self):
        prime = poset.prime_of_cut_set(graph.path_graph(3), [2])
        self.assertEqual({'z': [2], 'components': [[1], [3]], 'edges': []},
                         prime.to_dict())


class BuildPosetTest(test_utils.TestCase):
    def setUp(self):
        self.path_poset = poset.build_poset(graph.path_graph(3))

    def test_path_nodes(self):
        self.assertEqual(
            ['Z={} H={1,2,3}', 'Z={2} H={1},{3}', 'Z={2} H={1,3}'],
            [node.describe() for node in self.path_poset.nodes])
        self.assertEqual([4, 4, 3], [self.path_poset.d(i) for i in range(3)])
        self.assertEqual(3, len(self.path_poset))
        self.assertEqual(4, self.path_poset.size)
        self.assertEqual(3, self.path_poset.top)
        self.assertEqual([0, 1], self.path_poset.minimal_indices)
        self.assertEqual(4, self.path_poset.dimension)

    def test_path_order(self):
        self.assertEqual([[], [], [0, 1]], self.path_poset.below)
        self.assertTrue(self.path_poset.strictly_contains(2, 0))
        self.assertFalse(self.path_poset.strictly_contains(0, 2))
        self.assertEqual([(0, 3), (1, 3), (2, 0), (2, 1)],
                         self.path_poset.hasse_edges())

    def test_complete_graph_has_one_node(self):
        q = poset.build_poset(graph.complete_graph(4))
        self.assertEqual(1, len(q))
        self.assertEqual([(0, 1)], q.hasse_edges())

    def test_small_cohen_macaulay_graph(self):
        q = poset.build_poset(test_utils.small_cm_graph())
        self.assertEqual(11, len(q))
        self.assertEqual([
            'Z={} H={1,2,3,4,5}', 'Z={2} H={1},{3,4,5}',
            'Z={4} H={1,2,3},{5}', 'Z={2,4} H={1},{3},{5}',
            'Z={2} H={1,3,4,5}', 'Z={4} H={1,2,3,5}',
            'Z={2,4} H={1,3},{5}', 'Z={2,4} H={1},{3,5}',
            'Z={2,4} H={1,3,5}', 'Z={2,3,4} H={1},{5}',
            'Z={2,3,4} H={1,5}',
        ], [node.describe() for node in q.nodes])
        self.assertEqual([6, 6, 6, 6, 5, 5, 5, 5, 4, 4, 3],
                         [q.d(i) for i in range(len(q))])
        self.assertEqual([0, 1, 2, 3], q.minimal_indices)
        self.assertEqual([
            (0, 11), (1, 11), (2, 11), (3, 11), (4, 0), (4, 1), (5, 0),
            (5, 2), (6, 2), (6, 3), (7, 1), (7, 3), (8, 4), (8, 5), (8, 6),
            (8, 7), (9, 6), (9, 7), (10, 8), (10, 9),
        ], q.hasse_edges())
        self.assertEqual([1, 2, 3, 6, 7], q.below[9])
        self.assertEqual(6, q.dimension)
        for prime in poset.rep_minimal_primes(worked_sum()):
            self.assertIn(prime, q.index)

    def test_generator_bound(self):
        self.assertRaises(SizeBoundError, poset.build_poset,
                          test_utils.small_cm_graph(), max_generators=2)
        self.assertRaises(SizeBoundError, poset.build_poset,
                          test_utils.accessible_graph())

    def test_to_json(self):
        data = json.loads(self.path_poset.to_json())
        self.assertEqual(3, data['top'])
        self.assertEqual([0, 1], data['minimal'])
        self.assertEqual([[0, 3], [1, 3], [2, 0], [2, 1]], data['hasse'])
        self.assertEqual(4, data['dimension'])
        self.assertEqual({'z': [2], 'components': [[1, 3]],
                          'edges': [[1, 3]], 'd': 3, 'index': 2},
                         data['nodes'][2])

    def test_to_dot(self):
        self.assertEqual(
            'digraph poset {\n'
            '  rankdir=BT;\n'
            '  n3 [label="1"];\n'
            '  n0 [label="Z={} H={1,2,3} d=4"];\n'
            '  n1 [label="Z={2} H={1},{3} d=4"];\n'
            '  n2 [label="Z={2} H={1,3} d=3"];\n'
            '  n0 -> n3;\n'
            '  n1 -> n3;\n'
            '  n2 -> n0;\n'
            '  n2 -> n1;\n'
            '}\n', self.path_poset.to_dot())

    def test_open_interval_complex(self):
        complex_ = poset.open_interval_complex(self.path_poset, 2)
        self.assertEqual([0, 1], complex_.members)
        self.assertEqual([2], complex_.f_vector())
        self.assertTrue(poset.open_interval_complex(
            self.path_poset, 0).is_empty())

    def test_quotient_dimension(self):
        self.assertEqual(4, poset.quotient_dimension(graph.path_graph(3)))
        self.assertEqual(5, poset.quotient_dimension(graph.complete_graph(4)))
        self.assertEqual(6, poset.quotient_dimension(
            test_utils.small_cm_graph()))


class CMCertificateTest(test_utils.TestCase):
    def assert_cohen_macaulay(self, g, fields=(0, 2)):
        certificate = poset.cm_certificate(g, fields=fields)
        self.assertTrue(certificate.cohen_macaulay, repr(g))
        self.assertFalse(certificate.field_dependent)

    def assert_not_cohen_macaulay(self, g, fields=(0, 2)):
        certificate = poset.cm_certificate(g, fields=fields)
        self.assertFalse(certificate.cohen_macaulay, repr(g))
        for field in fields:
            self.assertIsNotNone(certificate.first_failure(field))

    def test_complete_graphs(self):
        for n in range(1, 6):
            self.assert_cohen_macaulay(graph.complete_graph(n))

    def test_paths(self):
        for n in range(2, 7):
            self.assert_cohen_macaulay(graph.path_graph(n), ALL_FIELDS)

    def test_small_cohen_macaulay_graph(self):
        self.assert_cohen_macaulay(test_utils.small_cm_graph(), ALL_FIELDS)

    def test_traceable_accessible_graph(self):
        self.assert_cohen_macaulay(test_utils.traceable_graph(), ALL_FIELDS)

    def test_paths_with_cliques(self):
        for n in range(2, 6):
            for k in range(1, 5):
                self.assert_cohen_macaulay(test_utils.path_with_clique(n, k),
                                           ALL_FIELDS)

    def test_unmixed_graphs_that_are_not_cohen_macaulay(self):
        self.assert_not_cohen_macaulay(test_utils.unmixed_not_cm_graph(),
                                       ALL_FIELDS)
        self.assert_not_cohen_macaulay(test_utils.bipartite_unmixed_graph(),
                                       ALL_FIELDS)

    def test_path_certificate(self):
        certificate = poset.cm_certificate(graph.path_graph(3), fields=[0, 2])
        self.assertTrue(certificate)
        self.assertEqual(4, certificate.dimension)
        self.assertFalse(certificate.convention_sensitive)
        self.assertIsNone(certificate.first_failure(0))
        self.assertEqual({
            'dimension': 4,
            'verdicts': {'Q': True, 'GF(2)': True},
            'alternative': {'Q': True, 'GF(2)': True},
            'failures': {'Q': [], 'GF(2)': []},
        }, certificate.to_dict())

    def test_reuses_given_poset(self):
        g = graph.path_graph(3)
        q = poset.build_poset(g)
        self.assertTrue(poset.cm_certificate(g, fields=[3], poset=q))

    def test_fields_from_environment(self):
        with mock.patch.dict(os.environ, {FIELDS_ENV: 'q,5'}):
            certificate = poset.cm_certificate(graph.path_graph(2))
        self.assertEqual((0, 5), certificate.fields)
        self.assertEqual({'Q': True, 'GF(5)': True},
                         certificate.to_dict()['verdicts'])


if __name__ == '__main__':
    unittest.main()
