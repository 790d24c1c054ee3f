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

"""Labeled simple graphs on at most 64 vertices.

:Includes:
  * :py:class:`Graph`: an immutable simple graph with per-vertex neighbor
    bit masks.
  * Parsers and writers for the edge-list text format and for graph6.
  * :py:func:`canonical_form`: an isomorphism invariant byte string.
  * The graph transformations used by the decision procedures: vertex
    removal, neighborhood completion, cones and gluing.

:Usage:

>>> from pybei import graph
>>> from pybei.helpers import vertex_set
>>> path = graph.path_graph(3)
>>> path.labels
(1, 2, 3)
>>> path.edges()
[(1, 2), (2, 3)]
>>> graph.components_after_removal(path, vertex_set([2])).count
2
>>> graph.to_graph6(graph.complete_graph(3))
'Bw'
>>> swapped = graph.relabel(path, {1: 2, 2: 1})
>>> swapped.edges()
[(1, 2), (1, 3)]
>>> graph.canonical_form(path) == graph.canonical_form(swapped)
True
"""
import warnings
from collections import namedtuple

from pybei import extra_packages
from pybei.helpers import as_vertex_set, bit, iter_bits, labels_of, popcount

__version__ = '1.0'

MAX_VERTICES = 64

GRAPH6_HEADER = b'>>graph6<<'
_GRAPH6_OFFSET = 63
_GRAPH6_LONG_N = 126

ComponentPartition = namedtuple('ComponentPartition', 'parts count')


class GraphError(Exception):
    """Base class for errors raised on invalid graphs or graph arguments."""


class GraphFormatError(GraphError):
    """Raised if an edge list or a graph6 string cannot be parsed."""


class SizeBoundError(GraphError):
    """Raised if an exponential algorithm is asked to go beyond its bound."""

    def __init__(self, what, size, bound):
        super(SizeBoundError, self).__init__(
            '%s has size %d, the supported maximum is %d' % (what, size, bound))
        self.size = size
        self.bound = bound


class Graph(object):
    """An immutable labeled simple graph.

    Vertices are labels in 1..64. The adjacency is stored as one neighbor
    mask per label, indexed by ``label - 1``.

    Args:
        vertices: the vertex set, as mask or iterable of labels.
        adjacency: sequence of neighbor masks indexed by ``label - 1``;
            entries past the end count as empty.

    Raises:
        GraphError: if the adjacency is not symmetric, has a loop or refers
            to a vertex outside `vertices`.
    """
    __slots__ = ('_vertices', '_adjacency')

    def __init__(self, vertices=0, adjacency=()):
        vertices = as_vertex_set(vertices)
        if vertices >> MAX_VERTICES:
            raise GraphFormatError(
                'Vertex labels must lie in 1..%d, got %d'
                % (MAX_VERTICES, vertices.bit_length()))
        size = vertices.bit_length()
        adjacency = tuple(adjacency[:size]) + (0,) * (size - len(adjacency))
        for single in iter_bits(vertices):
            label = single.bit_length()
            neighbors = adjacency[label - 1]
            if neighbors & single:
                raise GraphError('Vertex %d has a loop' % label)
            if neighbors & ~vertices:
                raise GraphError('Vertex %d has neighbors %s outside the graph'
                                 % (label, labels_of(neighbors & ~vertices)))
            for other in iter_bits(neighbors):
                if not adjacency[other.bit_length() - 1] & single:
                    raise GraphError('Edge %d-%d is not symmetric'
                                     % (label, other.bit_length()))
        for index in range(size):
            if adjacency[index] and not vertices & (1 << index):
                raise GraphError('Vertex %d is not part of the graph'
                                 % (index + 1))
        self._vertices = vertices
        self._adjacency = adjacency

    @classmethod
    def _trusted(cls, vertices, adjacency):
        """Build a graph from data known to be consistent."""
        graph = cls.__new__(cls)
        size = vertices.bit_length()
        adjacency = tuple(adjacency[:size])
        graph._vertices = vertices
        graph._adjacency = adjacency + (0,) * (size - len(adjacency))
        return graph

    @classmethod
    def from_edges(cls, edges, vertices=()):
        """Create a graph from an iterable of label pairs.

        Args:
            edges: iterable of pairs ``(u, v)``.
            vertices: additional (possibly isolated) vertices.
        """
        mask = as_vertex_set(vertices)
        adjacency = [0] * MAX_VERTICES
        for u, v in edges:
            for label in (u, v):
                if not 1 <= label <= MAX_VERTICES:
                    raise GraphFormatError(
                        'Vertex label %d outside 1..%d' % (label, MAX_VERTICES))
            if u == v:
                raise GraphFormatError('Self-loop at vertex %d' % u)
            adjacency[u - 1] |= bit(v)
            adjacency[v - 1] |= bit(u)
            mask |= bit(u) | bit(v)
        return cls(mask, adjacency)

    @property
    def vertices(self):
        """The vertex set as a mask."""
        return self._vertices

    @property
    def n(self):
        return popcount(self._vertices)

    @property
    def labels(self):
        return tuple(labels_of(self._vertices))

    @property
    def adjacency(self):
        """Tuple of neighbor masks indexed by ``label - 1``."""
        return self._adjacency

    @property
    def edge_count(self):
        return sum(popcount(neighbors) for neighbors in self._adjacency) // 2

    def has_vertex(self, label):
        return (isinstance(label, int) and 1 <= label <= MAX_VERTICES and
                bool(self._vertices & bit(label)))

    def neighbors(self, label):
        """Return the neighbor mask of vertex `label`.

        Raises:
            GraphError: if `label` is not a vertex.
        """
        if not self.has_vertex(label):
            raise GraphError('Vertex %r is not in the graph' % (label,))
        return self._adjacency[label - 1]

    def degree(self, label):
        return popcount(self.neighbors(label))

    def has_edge(self, u, v):
        return self.has_vertex(u) and bool(self._adjacency[u - 1] & bit(v))

    def edges(self):
        """Return the edges as sorted pairs ``(u, v)`` with ``u < v``."""
        result = []
        for single in iter_bits(self._vertices):
            label = single.bit_length()
            higher = self._adjacency[label - 1] & ~((single << 1) - 1)
            result.extend((label, other) for other in labels_of(higher))
        return result

    def __contains__(self, label):
        return self.has_vertex(label)

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._vertices == other._vertices and
                self._adjacency == other._adjacency)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._vertices, self._adjacency))

    def __getstate__(self):
        return self._vertices, self._adjacency

    def __setstate__(self, state):
        self._vertices, self._adjacency = state

    def __repr__(self):
        return 'Graph(vertices=%s, edges=%s)' % (list(self.labels),
                                                self.edges())


def _check_vertex(g, label):
    if not g.has_vertex(label):
        raise GraphError('Vertex %r is not in the graph' % (label,))


def _check_subset(g, s):
    s = as_vertex_set(s)
    if s & ~g.vertices:
        raise GraphError('Vertices %s are not in the graph'
                         % labels_of(s & ~g.vertices))
    return s


def empty_graph(n, start=1):
    """Return the graph on ``start..start+n-1`` without edges."""
    return Graph(as_vertex_set(range(start, start + n)))


def complete_graph(n, start=1):
    """Return K_n on the labels ``start..start+n-1``."""
    labels = list(range(start, start + n))
    return Graph.from_edges(
        ((u, v) for i, u in enumerate(labels) for v in labels[i + 1:]),
        vertices=labels)


def path_graph(n, start=1):
    """Return the path ``start - start+1 - ... - start+n-1``."""
    labels = list(range(start, start + n))
    return Graph.from_edges(zip(labels, labels[1:]), vertices=labels)


def cycle_graph(n, start=1):
    if n < 3:
        raise GraphError('A cycle needs at least 3 vertices, got %d' % n)
    labels = list(range(start, start + n))
    return Graph.from_edges(zip(labels, labels[1:] + labels[:1]))


def graph_union(first, second):
    """Return the graph with the union of vertices and edges of both."""
    size = max(len(first.adjacency), len(second.adjacency))
    adjacency = [0] * size
    for graph in (first, second):
        for index, neighbors in enumerate(graph.adjacency):
            adjacency[index] |= neighbors
    return Graph._trusted(first.vertices | second.vertices, adjacency)


def disjoint_union(*graphs):
    """Return the union of graphs with pairwise disjoint vertex sets.

    Raises:
        GraphError: if two graphs share a label.
    """
    result = Graph()
    for graph in graphs:
        shared = result.vertices & graph.vertices
        if shared:
            raise GraphError('Graphs share the vertices %s' % labels_of(shared))
        result = graph_union(result, graph)
    return result


def relabel(g, mapping):
    """Return a copy of `g` with labels replaced through `mapping`.

    Labels missing from `mapping` are kept. The resulting labels must be
    distinct.
    """
    new_label = dict((label, mapping.get(label, label)) for label in g.labels)
    if len(set(new_label.values())) != len(new_label):
        raise GraphError('Relabeling %r is not injective on the graph'
                         % (mapping,))
    vertices = [new_label[label] for label in g.labels]
    edges = [(new_label[u], new_label[v]) for u, v in g.edges()]
    return Graph.from_edges(edges, vertices=vertices)


def shift_labels(g, offset):
    """Return a copy of `g` with every label increased by `offset`."""
    return relabel(g, dict((label, label + offset) for label in g.labels))


def induced_subgraph(g, s):
    """Return the subgraph induced on the vertex set `s` (may be empty)."""
    s = _check_subset(g, s)
    adjacency = [neighbors & s if s & (1 << index) else 0
                 for index, neighbors in enumerate(g.adjacency)]
    return Graph._trusted(s, adjacency)


def delete_vertices(g, s):
    """Return G \\ S, the subgraph induced on V(G) \\ S, labels retained.

    Raises:
        GraphError: if `s` is not a subset of V(G) or contains every vertex.
    """
    s = _check_subset(g, s)
    if s == g.vertices and g.vertices:
        raise GraphError('Cannot delete every vertex of the graph')
    return induced_subgraph(g, g.vertices & ~s)


def _components(adjacency, remaining):
    parts = []
    while remaining:
        part = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for single in iter_bits(frontier):
                reach |= adjacency[single.bit_length() - 1]
            frontier = reach & remaining & ~part
            part |= frontier
        parts.append(part)
        remaining &= ~part
    return parts


def component_count(g, s=0):
    """Return c_G(S), the number of connected components of G \\ S."""
    return len(_components(g.adjacency, g.vertices & ~s))


def components_after_removal(g, s):
    """Return the connected components of G \\ S.

    Args:
        g: the graph.
        s: vertex set to remove, a subset of V(G).

    Returns:
        A `ComponentPartition` with the component vertex sets, ordered by
        their smallest label, and their count.
    """
    s = _check_subset(g, s)
    parts = _components(g.adjacency, g.vertices & ~s)
    return ComponentPartition(parts, len(parts))


def is_connected(g):
    return component_count(g) <= 1


def is_clique(g, s):
    """Return True if the vertex set `s` induces a complete subgraph."""
    adjacency = g.adjacency
    for single in iter_bits(s):
        if (adjacency[single.bit_length() - 1] | single) & s != s:
            return False
    return True


def components_are_complete(g):
    """Return True if every connected component of `g` is a complete graph."""
    return all(is_clique(g, part)
               for part in _components(g.adjacency, g.vertices))


def complete_neighborhood(g, v):
    """Return G_v: `g` with every pair of neighbors of `v` joined."""
    neighbors = g.neighbors(v)
    adjacency = list(g.adjacency)
    for single in iter_bits(neighbors):
        adjacency[single.bit_length() - 1] |= neighbors & ~single
    return Graph._trusted(g.vertices, adjacency)


def cone(v, g):
    """Return the cone of the new vertex `v` on `g`.

    Raises:
        GraphError: if `v` is already a vertex of `g` or not a valid label.
    """
    if not 1 <= v <= MAX_VERTICES:
        raise GraphError('Apex label %d outside 1..%d' % (v, MAX_VERTICES))
    if g.vertices & bit(v):
        raise GraphError('Apex label %d is already a vertex of the graph' % v)
    apex = bit(v)
    size = max(len(g.adjacency), v)
    adjacency = list(g.adjacency) + [0] * (size - len(g.adjacency))
    for single in iter_bits(g.vertices):
        adjacency[single.bit_length() - 1] |= apex
    adjacency[v - 1] = g.vertices
    return Graph._trusted(g.vertices | apex, adjacency)


def is_free_vertex(g, v):
    """Return True if the neighborhood of `v` induces a clique."""
    return is_clique(g, g.neighbors(v))


def glue_at_vertices(g, v, g_side, h, w, h_side):
    """Glue one side of G \\ {v} and one side of H \\ {w} along v = w.

    Takes G[V(G_i) + v], where G_i is the component of G \\ {v} containing
    `g_side`, and H[V(H_j) + w] likewise, and identifies `w` with `v`. The
    result keeps the label `v`.

    Raises:
        GraphError: if a side vertex is not in a component of the deleted
            graph, or if the two pieces share labels besides the glued one.
    """
    left = _side_of(g, v, g_side)
    right = relabel(_side_of(h, w, h_side), {w: v})
    shared = left.vertices & right.vertices
    if shared != bit(v):
        raise GraphError('Glued pieces share the vertices %s besides %d'
                         % (labels_of(shared & ~bit(v)), v))
    return graph_union(left, right)


def _side_of(g, v, side):
    _check_vertex(g, v)
    _check_vertex(g, side)
    for part in components_after_removal(g, bit(v)).parts:
        if part & bit(side):
            return induced_subgraph(g, part | bit(v))
    raise GraphError('Vertex %d is not separated from %d' % (side, v))


def parse_edge_list(text):
    """Parse the edge-list text format.

    One edge ``u v`` per line; a line holding a single label adds an
    isolated vertex; an optional ``n=<count>`` line adds the vertices
    1..count; ``#`` starts a comment.

    Raises:
        GraphFormatError: on self-loops, labels outside 1..64, non-integer
            tokens, or an input without vertices.
    """
    header = None
    mask = 0
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith('n='):
            if header is not None:
                raise GraphFormatError('line %d: second n= header' % lineno)
            header = _parse_label(line[2:].strip(), lineno)
            mask |= (1 << header) - 1
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise GraphFormatError('line %d: expected "u v", got %r'
                                   % (lineno, line))
        labels = [_parse_label(token, lineno) for token in tokens]
        if len(labels) == 1:
            mask |= bit(labels[0])
            continue
        u, v = labels
        if u == v:
            raise GraphFormatError('line %d: self-loop at vertex %d'
                                   % (lineno, u))
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn('line %d: duplicate edge %d-%d ignored'
                          % (lineno, key[0], key[1]), UserWarning)
            continue
        seen.add(key)
        edges.append(key)
        mask |= bit(u) | bit(v)
    if header is not None and mask >> header:
        raise GraphFormatError('Label %d exceeds the header n=%d'
                               % (mask.bit_length(), header))
    if not mask:
        raise GraphFormatError('Edge list defines no vertices')
    return Graph.from_edges(edges, vertices=mask)


def _parse_label(token, lineno):
    try:
        label = int(token)
    except ValueError:
        raise GraphFormatError('line %d: invalid vertex label %r'
                               % (lineno, token))
    if not 1 <= label <= MAX_VERTICES:
        raise GraphFormatError('line %d: vertex label %d outside 1..%d'
                               % (lineno, label, MAX_VERTICES))
    return label


def to_edge_list(g):
    """Return `g` in the edge-list text format."""
    lines = ['%d %d' % edge for edge in g.edges()]
    lines.extend(str(label) for label in g.labels
                 if not g.adjacency[label - 1])
    return '\n'.join(lines) + '\n'


def _graph6_size(n):
    if n <= 62:
        return bytearray([n + _GRAPH6_OFFSET])
    return bytearray([_GRAPH6_LONG_N,
                      (n >> 12 & 63) + _GRAPH6_OFFSET,
                      (n >> 6 & 63) + _GRAPH6_OFFSET,
                      (n & 63) + _GRAPH6_OFFSET])


def _pack_graph6(n, adjacent):
    """Encode the graph with ``adjacent(i, j)`` on positions 0..n-1."""
    data = _graph6_size(n)
    value = 0
    count = 0
    for j in range(1, n):
        for i in range(j):
            value = value << 1 | (1 if adjacent(i, j) else 0)
            count += 1
            if count == 6:
                data.append(value + _GRAPH6_OFFSET)
                value = count = 0
    if count:
        data.append((value << (6 - count)) + _GRAPH6_OFFSET)
    return bytes(data)


def _compact_adjacency(g):
    labels = g.labels
    position = dict((label, index) for index, label in enumerate(labels))
    compact = []
    for label in labels:
        neighbors = 0
        for other in labels_of(g.adjacency[label - 1]):
            neighbors |= 1 << position[other]
        compact.append(neighbors)
    return compact


def to_graph6(g):
    """Return the graph6 encoding of `g`, vertices in ascending label order.

    The decoded graph carries the labels 1..n.
    """
    adjacency = _compact_adjacency(g)
    return _pack_graph6(
        len(adjacency), lambda i, j: adjacency[i] >> j & 1).decode('ascii')


def parse_graph6(data):
    """Decode a graph6 string (bytes or text) into a graph on 1..n.

    An optional ``>>graph6<<`` header and surrounding whitespace are ignored.

    Raises:
        GraphFormatError: on bytes outside 63..126, a truncated or overlong
            payload, or a vertex count outside 1..64.
    """
    if not isinstance(data, bytes):
        try:
            data = data.encode('ascii')
        except UnicodeError:
            raise GraphFormatError('graph6 data must be ASCII: %r' % (data,))
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    values = bytearray(data)
    if not values:
        raise GraphFormatError('Empty graph6 string')
    for offset, value in enumerate(values):
        if not _GRAPH6_OFFSET <= value <= _GRAPH6_LONG_N:
            raise GraphFormatError('Malformed graph6 byte %r at offset %d'
                                   % (chr(value), offset))
    if values[0] == _GRAPH6_LONG_N:
        if len(values) > 1 and values[1] == _GRAPH6_LONG_N:
            raise GraphFormatError('graph6 vertex count exceeds %d'
                                   % MAX_VERTICES)
        if len(values) < 4:
            raise GraphFormatError('Truncated graph6 size header')
        n = 0
        for value in values[1:4]:
            n = n << 6 | (value - _GRAPH6_OFFSET)
        body = values[4:]
    else:
        n = values[0] - _GRAPH6_OFFSET
        body = values[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError('graph6 vertex count %d outside 1..%d'
                               % (n, MAX_VERTICES))
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(body) < expected:
        raise GraphFormatError('Truncated graph6 payload: expected %d bytes, '
                               'got %d' % (expected, len(body)))
    if len(body) > expected:
        raise GraphFormatError('graph6 payload has %d trailing bytes'
                               % (len(body) - expected))
    edges = []
    position = 0
    for j in range(1, n):
        for i in range(j):
            value = body[position // 6] - _GRAPH6_OFFSET
            if value >> (5 - position % 6) & 1:
                edges.append((i + 1, j + 1))
            position += 1
    return Graph.from_edges(edges, vertices=range(1, n + 1))


def iter_graph6(lines):
    """Yield the graphs of a graph6 stream, one encoding per line.

    Blank lines are skipped; errors name the 1-based line number.
    """
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            line = line.decode('ascii', 'replace')
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except GraphFormatError as error:
            raise GraphFormatError('line %d: %s' % (lineno, error))


def _refine(adjacency, colors):
    """Refine a vertex coloring until it is stable.

    Colors are renumbered through the sorted signatures, so equal inputs
    up to relabeling produce equal outputs.
    """
    class_count = len(set(colors))
    while True:
        signatures = []
        for v, neighbors in enumerate(adjacency):
            signatures.append((colors[v], tuple(sorted(
                colors[single.bit_length() - 1]
                for single in iter_bits(neighbors)))))
        ranking = dict((signature, rank) for rank, signature
                       in enumerate(sorted(set(signatures))))
        colors = [ranking[signature] for signature in signatures]
        if len(ranking) == class_count:
            return colors
        class_count = len(ranking)


def _first_nontrivial_cell(colors):
    cells = {}
    for v, color in enumerate(colors):
        cells.setdefault(color, []).append(v)
    for color in sorted(cells):
        if len(cells[color]) > 1:
            return cells[color]
    return None


def _are_twins(adjacency, u, v):
    return adjacency[u] & ~(1 << v) == adjacency[v] & ~(1 << u)


def _best_leaf(adjacency, colors):
    cell = _first_nontrivial_cell(colors)
    if cell is None:
        order = sorted(range(len(colors)), key=colors.__getitem__)
        return _pack_graph6(
            len(order), lambda i, j: adjacency[order[i]] >> order[j] & 1)
    best = None
    tried = []
    for v in cell:
        # twins are exchanged by an automorphism fixing the coloring
        if any(_are_twins(adjacency, u, v) for u in tried):
            continue
        tried.append(v)
        individualized = [2 * color + 1 for color in colors]
        individualized[v] = 2 * colors[v]
        key = _best_leaf(adjacency, _refine(adjacency, individualized))
        if best is None or key > best:
            best = key
    return best


def canonical_form(g):
    """Return a byte string that is equal for two graphs iff they are
    isomorphic.

    The form is the largest graph6 encoding over the relabelings reached by
    color refinement with individualization of one vertex per cell.
    """
    adjacency = _compact_adjacency(g)
    return _best_leaf(adjacency, _refine(adjacency, [0] * len(adjacency)))


def to_networkx(g):
    """Return `g` as a ``networkx.Graph``.

    Raises:
        ImportError: if networkx is not installed.
    """
    networkx = extra_packages.networkx
    if networkx is None:
        raise ImportError('networkx is not installed')
    result = networkx.Graph()
    result.add_nodes_from(g.labels)
    result.add_edges_from(g.edges())
    return result
