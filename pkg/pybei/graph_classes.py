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

"""Recognition of the graph classes for which accessibility is known to
decide Cohen-Macaulayness: chordal, traceable and bipartite graphs, plus
block structure and decomposability.

>>> from pybei import graph, graph_classes
>>> path = graph.path_graph(3)
>>> graph_classes.is_chordal(path).chordal
True
>>> graph_classes.is_traceable(path).paths
[[1, 2, 3]]
>>> graph_classes.blocks(path).as_lists()
[[1, 2], [2, 3]]
"""
from collections import namedtuple

from pybei.graph import Graph, GraphError, SizeBoundError
from pybei.graph import components_after_removal, induced_subgraph
from pybei.graph import is_clique, is_connected
from pybei.helpers import bit, iter_bits, labels_of, popcount, sorted_sets

MAX_PATH_COMPONENT = 24

ChordalityResult = namedtuple('ChordalityResult',
                              'chordal elimination_ordering')
TraceabilityResult = namedtuple('TraceabilityResult', 'traceable paths')
DecompositionResult = namedtuple('DecompositionResult',
                                 'decomposable vertex sides')


class BlockDecomposition(object):
    """Blocks of a connected graph.

    Attributes:
        blocks: vertex masks of the maximal 2-connected subgraphs and
            bridges, sorted by size and then lexicographically.
        cut_vertex_map: for each block, the mask of cut vertices of G in it.
        block_graph: graph on the block indices 1..len(blocks), two blocks
            adjacent iff they share a cut vertex.
    """

    def __init__(self, blocks, cut_vertices):
        self.blocks = sorted_sets(blocks)
        self.cut_vertex_map = [block & cut_vertices for block in self.blocks]
        edges = []
        for i, first in enumerate(self.blocks):
            for j in range(i + 1, len(self.blocks)):
                if first & self.blocks[j]:
                    edges.append((i + 1, j + 1))
        self.block_graph = Graph.from_edges(
            edges, vertices=range(1, len(self.blocks) + 1))

    def __len__(self):
        return len(self.blocks)

    def as_lists(self):
        return [labels_of(block) for block in self.blocks]

    def to_dict(self):
        return {
            'blocks': self.as_lists(),
            'cut_vertices': [labels_of(cuts) for cuts in self.cut_vertex_map],
            'block_graph': self.block_graph.edges(),
        }


def is_chordal(g):
    """Decide chordality by maximum cardinality search.

    Returns:
        A `ChordalityResult`; for chordal graphs `elimination_ordering` is a
        perfect elimination ordering, otherwise None.
    """
    adjacency = g.adjacency
    weight = dict((label, 0) for label in g.labels)
    unnumbered = g.vertices
    visit_order = []
    while unnumbered:
        chosen = max(labels_of(unnumbered), key=lambda v: (weight[v], -v))
        visit_order.append(chosen)
        unnumbered &= ~bit(chosen)
        for neighbor in labels_of(adjacency[chosen - 1] & unnumbered):
            weight[neighbor] += 1
    ordering = visit_order[::-1]
    later = 0
    for label in visit_order:
        # neighbors eliminated after `label` were visited before it
        if not is_clique(g, adjacency[label - 1] & later):
            return ChordalityResult(False, None)
        later |= bit(label)
    return ChordalityResult(True, ordering)


def _hamiltonian_path(g, component):
    """Return a Hamiltonian path of G[component] or None."""
    labels = labels_of(component)
    n = len(labels)
    if n > MAX_PATH_COMPONENT:
        raise SizeBoundError('Hamiltonian path component', n,
                             MAX_PATH_COMPONENT)
    position = dict((label, index) for index, label in enumerate(labels))
    successors = []
    for label in labels:
        mask = 0
        for other in labels_of(g.adjacency[label - 1] & component):
            mask |= 1 << position[other]
        successors.append(mask)
    full = (1 << n) - 1
    # ends[subset]: positions that end a path covering exactly `subset`
    ends = [0] * (full + 1)
    for index in range(n):
        ends[1 << index] = 1 << index
    for subset in range(1, full + 1):
        current = ends[subset]
        while current:
            low = current & -current
            current ^= low
            step = successors[low.bit_length() - 1] & ~subset
            while step:
                nxt = step & -step
                step ^= nxt
                ends[subset | nxt] |= nxt
    if not ends[full]:
        return None
    end = ends[full] & -ends[full]
    path = [end]
    subset = full
    while subset != end:
        subset ^= end
        previous = ends[subset] & successors[end.bit_length() - 1]
        end = previous & -previous
        path.append(end)
    return [labels[single.bit_length() - 1] for single in path]


def is_traceable(g):
    """Decide whether every connected component has a Hamiltonian path.

    Returns:
        A `TraceabilityResult` with one path per component (ordered by the
        smallest label) when traceable, otherwise paths None.

    Raises:
        SizeBoundError: if a component has more than `MAX_PATH_COMPONENT`
            vertices.
    """
    paths = []
    for component in components_after_removal(g, 0).parts:
        path = _hamiltonian_path(g, component)
        if path is None:
            return TraceabilityResult(False, None)
        paths.append(path)
    return TraceabilityResult(True, paths)


def is_bipartite(g):
    """Return True if `g` admits a proper 2-coloring."""
    adjacency = g.adjacency
    remaining = g.vertices
    while remaining:
        frontier = remaining & -remaining
        sides = [frontier, 0]
        side = 0
        seen = frontier
        while frontier:
            reach = 0
            for single in iter_bits(frontier):
                reach |= adjacency[single.bit_length() - 1]
            if reach & sides[side]:
                return False
            frontier = reach & ~seen
            seen |= frontier
            side = 1 - side
            sides[side] |= frontier
        remaining &= ~seen
    return True


def _check_connected(g, operation):
    if not g.vertices or not is_connected(g):
        raise GraphError('%s needs a connected graph' % operation)


def blocks(g):
    """Compute the blocks of a connected graph from DFS low-links.

    Raises:
        GraphError: if `g` is not connected.
    """
    _check_connected(g, 'blocks')
    adjacency = g.adjacency
    root = g.labels[0]
    if g.n == 1:
        return BlockDecomposition([bit(root)], 0)
    discovery = {root: 0}
    low = {root: 0}
    edge_stack = []
    found = []
    frames = [(root, None, iter(labels_of(adjacency[root - 1])))]
    while frames:
        v, parent, neighbors = frames[-1]
        descended = False
        for w in neighbors:
            if w == parent:
                continue
            if w not in discovery:
                discovery[w] = low[w] = len(discovery)
                edge_stack.append((v, w))
                frames.append((w, v, iter(labels_of(adjacency[w - 1]))))
                descended = True
                break
            if discovery[w] < discovery[v]:
                low[v] = min(low[v], discovery[w])
                edge_stack.append((v, w))
        if descended:
            continue
        frames.pop()
        if frames:
            u = frames[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= discovery[u]:
                block = 0
                while True:
                    a, b = edge_stack.pop()
                    block |= bit(a) | bit(b)
                    if (a, b) == (u, v):
                        break
                found.append(block)
    cut_vertices = 0
    seen = 0
    for block in found:
        cut_vertices |= seen & block
        seen |= block
    return BlockDecomposition(found, cut_vertices)


def block_graph_is_tree(g):
    """Return True if the block graph of the connected graph `g` is a tree.
    """
    block_graph = blocks(g).block_graph
    return (is_connected(block_graph) and
            block_graph.edge_count == block_graph.n - 1)


def traceable_block_bound(g):
    """Return True if every block contains at most two cut vertices of G.

    Disconnected graphs are checked component by component.
    """
    for component in components_after_removal(g, 0).parts:
        decomposition = blocks(induced_subgraph(g, component))
        if any(popcount(cuts) > 2 for cuts in decomposition.cut_vertex_map):
            return False
    return True


def is_decomposable(g):
    """Decide whether G = G_1 + G_2 glued at a vertex free in both parts.

    That is the case iff some cut vertex v leaves exactly two components
    and its neighborhood inside each of them is a clique.

    Returns:
        A `DecompositionResult`; `sides` holds the vertex masks of G_1 and
        G_2, both including v.
    """
    _check_connected(g, 'is_decomposable')
    for v in g.labels:
        parts = components_after_removal(g, bit(v)).parts
        if len(parts) != 2:
            continue
        neighbors = g.adjacency[v - 1]
        if all(is_clique(g, neighbors & part) for part in parts):
            return DecompositionResult(
                True, v, tuple(part | bit(v) for part in parts))
    return DecompositionResult(False, None, None)


def decomposition_sides(g):
    """Return the graphs (G_1, G_2) of a decomposition, or None."""
    result = is_decomposable(g)
    if not result.decomposable:
        return None
    return tuple(induced_subgraph(g, side) for side in result.sides)
