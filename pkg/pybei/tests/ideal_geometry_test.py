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

"""Unittests for pybei.ideal_geometry."""
import json
import unittest

from pybei import graph, ideal_geometry
from pybei.cutsets import enumerate_cut_sets
from pybei.helpers import vertex_set
from pybei.tests import test_utils


class MinimalPrimesTest(test_utils.TestCase):
    def test_path(self):
        primes = ideal_geometry.minimal_primes(graph.path_graph(3))
        self.assertEqual([0, vertex_set([2])],
                         [prime.cut_set for prime in primes])
        self.assertEqual([vertex_set([1, 2, 3])],
                         primes[0].completed_components)
        self.assertEqual([vertex_set([1]), vertex_set([3])],
                         primes[1].completed_components)
        self.assertEqual([2, 2], [prime.height for prime in primes])

    def test_complete_graph(self):
        primes = ideal_geometry.minimal_primes(graph.complete_graph(5))
        self.assertEqual(1, len(primes))
        self.assertEqual(4, ideal_geometry.ideal_height(
            graph.complete_graph(5)))

    def test_mixed_heights(self):
        primes = ideal_geometry.minimal_primes(
            test_utils.square_with_whisker())
        self.assertEqual([4, 4, 4, 5], [prime.height for prime in primes])
        self.assertEqual(4, ideal_geometry.ideal_height(
            test_utils.square_with_whisker()))

    def test_height_with_given_family(self):
        g = test_utils.bipartite_unmixed_graph()
        self.assertEqual(6, ideal_geometry.ideal_height(
            g, enumerate_cut_sets(g)))


class DualGraphTest(test_utils.TestCase):
    def test_path(self):
        dual = ideal_geometry.dual_graph(graph.path_graph(3))
        self.assertEqual(2, len(dual))
        self.assertEqual([(0, 1)], dual.edges)
        self.assertEqual([1], dual.neighbors(0))
        self.assertTrue(dual.is_connected())
        self.assertEqual(1, dual.diameter())

    def test_complete_graph_is_hirsch(self):
        self.assertEqual((True, 0, 3, True), ideal_geometry.hirsch_check(
            graph.complete_graph(4)))

    def test_path_is_hirsch(self):
        for n in range(2, 7):
            self.assertTrue(ideal_geometry.hirsch_check(
                graph.path_graph(n)).hirsch)

    def test_mixed_ideal_has_isolated_node(self):
        dual = ideal_geometry.dual_graph(test_utils.square_with_whisker())
        self.assertEqual([4, 4, 4, 5], dual.heights)
        self.assertEqual([], dual.neighbors(3))
        self.assertFalse(dual.is_connected())
        self.assertEqual(float('inf'), dual.diameter())
        result = ideal_geometry.hirsch_check(
            test_utils.square_with_whisker())
        self.assertFalse(result.hirsch)
        self.assertFalse(result.connected)
        self.assertEqual(4, result.height)

    def test_to_dict(self):
        dual = ideal_geometry.dual_graph(graph.path_graph(3))
        self.assertEqual({
            'height': 2,
            'diameter': 1,
            'adjacency': {'[]': [[2]], '[2]': [[]]},
        }, dual.to_dict())
        self.assertEqual(dual.to_dict(), json.loads(dual.to_json()))

    def test_disconnected_diameter_in_json(self):
        dual = ideal_geometry.dual_graph(test_utils.square_with_whisker())
        self.assertEqual(ideal_geometry.INFINITE,
                         json.loads(dual.to_json())['diameter'])

    def test_to_dot(self):
        dual = ideal_geometry.dual_graph(graph.path_graph(3))
        self.assertEqual(
            'graph dual {\n'
            '  n0 [label="{} ht=2"];\n'
            '  n1 [label="{2} ht=2"];\n'
            '  n0 -- n1;\n'
            '}\n', dual.to_dot())


if __name__ == '__main__':
    unittest.main()
