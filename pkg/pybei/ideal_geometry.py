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

"""Minimal primes of J_G, their heights and the dual graph.

The minimal prime of the cut set S has height ``n - c(S) + |S|``. Two
minimal primes of least height are adjacent in the dual graph when their
sum has height one more. The ideal is Hirsch if the dual graph has
diameter at most the height of the ideal.

>>> from pybei import graph, ideal_geometry
>>> path = graph.path_graph(3)
>>> [prime.height for prime in ideal_geometry.minimal_primes(path)]
[2, 2]
>>> ideal_geometry.dual_graph(path).edges
[(0, 1)]
>>> ideal_geometry.hirsch_check(path)
HirschResult(hirsch=True, diameter=1, height=2, connected=True)
"""
import json
from collections import deque, namedtuple

from pybei.cutsets import enumerate_cut_sets
from pybei.helpers import labels_of, popcount
from pybei.poset import prime_of_cut_set, rep_height, rep_sum

INFINITE = 'infinite'

MinimalPrime = namedtuple('MinimalPrime',
                          'cut_set completed_components height')
HirschResult = namedtuple('HirschResult', 'hirsch diameter height connected')


def minimal_primes(g, family=None):
    """Return one `MinimalPrime` per cut set, in cut-set order."""
    if family is None:
        family = enumerate_cut_sets(g)
    n = g.n
    result = []
    for s in family.sets:
        prime = prime_of_cut_set(g, s, family)
        result.append(MinimalPrime(
            s, prime.components(),
            n - family.component_count(s) + popcount(s)))
    return result


def ideal_height(g, family=None):
    """Return ht(J_G), the least height of a minimal prime."""
    return min(prime.height for prime in minimal_primes(g, family))


class DualGraph(object):
    """The dual graph of J_G.

    Attributes:
        nodes: the cut sets, in cut-set order.
        heights: the height of the prime of each node.
        height: ht(J_G).
        edges: index pairs ``(i, j)`` with ``i < j``.
    """

    def __init__(self, nodes, heights, height, edges):
        self.nodes = list(nodes)
        self.heights = list(heights)
        self.height = height
        self.edges = sorted(edges)
        self._neighbors = [set() for _ in self.nodes]
        for i, j in self.edges:
            self._neighbors[i].add(j)
            self._neighbors[j].add(i)

    def __len__(self):
        return len(self.nodes)

    def neighbors(self, i):
        return sorted(self._neighbors[i])

    def _distances(self, source):
        distances = {source: 0}
        queue = deque([source])
        while queue:
            current = queue.popleft()
            for other in self._neighbors[current]:
                if other not in distances:
                    distances[other] = distances[current] + 1
                    queue.append(other)
        return distances

    def is_connected(self):
        return len(self._distances(0)) == len(self.nodes)

    def diameter(self):
        """Return the diameter, ``float('inf')`` if disconnected."""
        longest = 0
        for source in range(len(self.nodes)):
            distances = self._distances(source)
            if len(distances) < len(self.nodes):
                return float('inf')
            longest = max(longest, max(distances.values()))
        return longest

    def to_dict(self):
        diameter = self.diameter()
        return {
            'height': self.height,
            'diameter': INFINITE if diameter == float('inf') else diameter,
            'adjacency': dict(
                (json.dumps(labels_of(node)),
                 [labels_of(self.nodes[j]) for j in self.neighbors(i)])
                for i, node in enumerate(self.nodes)),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dot(self):
        lines = ['graph dual {']
        for i, node in enumerate(self.nodes):
            lines.append('  n%d [label="{%s} ht=%d"];' % (
                i, ','.join(str(label) for label in labels_of(node)),
                self.heights[i]))
        for i, j in self.edges:
            lines.append('  n%d -- n%d;' % (i, j))
        lines.append('}')
        return '\n'.join(lines) + '\n'


def dual_graph(g, family=None):
    """Build the dual graph of J_G.

    Only primes of least height can be adjacent, so for a mixed ideal the
    other nodes are isolated.
    """
    if family is None:
        family = enumerate_cut_sets(g)
    primes = minimal_primes(g, family)
    height = min(prime.height for prime in primes)
    reps = [prime_of_cut_set(g, prime.cut_set, family) for prime in primes]
    lowest = [i for i, prime in enumerate(primes) if prime.height == height]
    edges = []
    for position, i in enumerate(lowest):
        for j in lowest[position + 1:]:
            if rep_height(rep_sum(reps[i], reps[j])) == height + 1:
                edges.append((i, j))
    return DualGraph(family.sets, [prime.height for prime in primes],
                     height, edges)


def hirsch_check(g, family=None):
    """Compare the diameter of the dual graph with ht(J_G).

    A disconnected dual graph has infinite diameter and is not Hirsch.
    """
    dual = dual_graph(g, family)
    diameter = dual.diameter()
    connected = diameter != float('inf')
    return HirschResult(connected and diameter <= dual.height,
                        diameter, dual.height, connected)
