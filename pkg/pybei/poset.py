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

"""The poset of iterated sums of minimal primes and the Cohen-Macaulay
certificate derived from it.

No polynomial is ever formed. Every ideal the construction meets has the
shape ``(x_i, y_i : i in Z) + J_H`` for a vertex set Z and a graph H on the
remaining vertices, and such an ideal is stored as a `RadicalIdealRep`.
It is prime exactly if every connected component of H is complete.

The poset holds the primes reached from the minimal primes of J_G by
taking sums, and from the minimal primes of every non-prime sum, ordered
by reverse inclusion with a top element adjoined. J_G is Cohen-Macaulay
iff for every node q the open interval below the top, i.e. the order
complex of the nodes strictly contained in q, has vanishing reduced
cohomology outside degree ``dim(R/J_G) - d_q - 1``.

:Usage:

>>> from pybei import graph, poset
>>> path = graph.path_graph(3)
>>> q = poset.build_poset(path)
>>> [node.describe() for node in q.nodes]
['Z={} H={1,2,3}', 'Z={2} H={1},{3}', 'Z={2} H={1,3}']
>>> [node.dimension for node in q.nodes]
[4, 4, 3]
>>> bool(poset.cm_certificate(path, fields=[0, 2]))
True
"""
import json
import logging
from collections import namedtuple

from pybei import exact_linalg
from pybei.cutsets import CutSetError, enumerate_cut_sets
from pybei.graph import Graph, SizeBoundError, components_after_removal
from pybei.graph import graph_union, induced_subgraph, is_clique
from pybei.helpers import as_vertex_set, field_name, fields_from_environment
from pybei.helpers import format_vertex_set, iter_bits, labels_of, popcount
from pybei.helpers import set_sort_key

logger = logging.getLogger(__name__)

MAX_GENERATORS = 20

CMFailure = namedtuple('CMFailure', 'node degree rank')


class RadicalIdealRep(object):
    """The ideal ``(x_i, y_i : i in Z) + J_H``.

    Args:
        z: the vertex set Z.
        h: a `Graph` on the vertices of the ambient set outside Z.

    Raises:
        ValueError: if `h` has a vertex in `z`.
    """
    __slots__ = ('z', 'h')

    def __init__(self, z, h):
        z = as_vertex_set(z)
        if z & h.vertices:
            raise ValueError('H has the vertices %s of Z'
                             % labels_of(z & h.vertices))
        self.z = z
        self.h = h

    @property
    def ambient(self):
        return self.z | self.h.vertices

    @property
    def dimension(self):
        """d_q: Krull dimension of the quotient by the ideal, for primes."""
        return rep_dimension(self)

    def components(self):
        """Return the vertex sets of the connected components of H."""
        return components_after_removal(self.h, 0).parts

    def __eq__(self, other):
        if not isinstance(other, RadicalIdealRep):
            return NotImplemented
        return self.z == other.z and self.h == other.h

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.z, self.h))

    def sort_key(self):
        return -self.dimension, set_sort_key(self.z), self.h.edges()

    def describe(self):
        """Return a short text such as ``'Z={2,4} H={1,3,5}'``.

        Prime ideals list their cliques, other ideals their edges.
        """
        if rep_is_prime(self):
            graph_text = ','.join(format_vertex_set(part)
                                  for part in self.components())
        else:
            graph_text = ','.join('%d-%d' % edge for edge in self.h.edges())
        return 'Z=%s H=%s' % (format_vertex_set(self.z), graph_text)

    def to_dict(self):
        return {
            'z': labels_of(self.z),
            'components': [labels_of(part) for part in self.components()],
            'edges': self.h.edges(),
        }

    def __repr__(self):
        return 'RadicalIdealRep(%s)' % self.describe()


def prime_of_cut_set(g, s, family=None):
    """Return the minimal prime P_S(G) of the cut set `s`.

    Raises:
        CutSetError: if `s` is not a cut set of `g`.
    """
    s = as_vertex_set(s)
    if family is None:
        family = enumerate_cut_sets(g)
    if s not in family:
        raise CutSetError(s)
    return _completed_rep(induced_subgraph(g, g.vertices & ~s), s)


def _completed_rep(h, z):
    """Return (Z, H with each connected component completed)."""
    adjacency = list(h.adjacency)
    for part in components_after_removal(h, 0).parts:
        for single in iter_bits(part):
            adjacency[single.bit_length() - 1] = part & ~single
    return RadicalIdealRep(z, Graph._trusted(h.vertices, adjacency))


def rep_sum(a, b):
    """Return the sum of two ideals over the same ambient vertex set.

    Raises:
        ValueError: if the ambient vertex sets differ.
    """
    if a.ambient != b.ambient:
        raise ValueError('Ideals live on different vertex sets: %s and %s'
                         % (format_vertex_set(a.ambient),
                            format_vertex_set(b.ambient)))
    z = a.z | b.z
    union = graph_union(a.h, b.h)
    return RadicalIdealRep(z, induced_subgraph(union, union.vertices & ~z))


def rep_is_prime(r):
    """Return True if every connected component of H is a clique."""
    return all(is_clique(r.h, part) for part in r.components())


def rep_minimal_primes(r):
    """Return the minimal primes of `r`: one per cut set U of H.

    Raises:
        SizeBoundError: if H is too large for cut-set enumeration.
    """
    if rep_is_prime(r):
        return [r]
    family = enumerate_cut_sets(r.h)
    return [_completed_rep(induced_subgraph(r.h, r.h.vertices & ~u), r.z | u)
            for u in family.sets]


def rep_contains(a, b):
    """Return True if the ideal `b` is contained in the ideal `a`.

    Both ideals are generated in degrees one and two, so containment holds
    iff Z_b is part of Z_a and every edge of H_b outside Z_a is an edge of
    H_a.
    """
    if b.z & ~a.z:
        return False
    for u, v in b.h.edges():
        if (a.z >> (u - 1) | a.z >> (v - 1)) & 1:
            continue
        if not a.h.has_edge(u, v):
            return False
    return True


def rep_dimension(r):
    """Return 2n - 2|Z| - sum(|C| - 1) over the components C of H."""
    n = popcount(r.ambient)
    return 2 * n - 2 * popcount(r.z) - sum(
        popcount(part) - 1 for part in r.components())


def rep_height(r):
    """Return the height of the ideal, the least height of its primes."""
    n = popcount(r.ambient)
    if rep_is_prime(r):
        return 2 * n - rep_dimension(r)
    family = enumerate_cut_sets(r.h)
    z = popcount(r.z)
    return min(n + z + popcount(u) - family.component_count(u)
               for u in family.sets)


def _subset_sums(generators):
    """Return every sum of a non-empty subset of `generators`.

    Sums are commutative, associative and idempotent, so the subset sums
    are the closure of the generators under pairwise sums.
    """
    if len(generators) > MAX_GENERATORS:
        raise SizeBoundError('number of minimal primes', len(generators),
                             MAX_GENERATORS)
    sums = set(generators)
    frontier = list(sums)
    while frontier:
        produced = []
        for rep in frontier:
            for generator in generators:
                combined = rep_sum(rep, generator)
                if combined not in sums:
                    sums.add(combined)
                    produced.append(combined)
        frontier = produced
    return sums


class PosetQ(object):
    """The poset of primes with a top element.

    Nodes are sorted by decreasing dimension, then by Z and the edges of H.
    The top element has index ``len(poset)``.

    Args:
        graph: the graph G.
        nodes: the prime ideals.
        minimal: the minimal primes of J_G.
    """

    def __init__(self, graph, nodes, minimal):
        self.graph = graph
        self.nodes = sorted(nodes, key=RadicalIdealRep.sort_key)
        self.index = dict((node, i) for i, node in enumerate(self.nodes))
        self.minimal_indices = sorted(self.index[prime] for prime in minimal)
        count = len(self.nodes)
        # below[i]: indices of the nodes whose ideal is strictly inside node i
        self.below = [
            [j for j in range(count)
             if j != i and rep_contains(self.nodes[i], self.nodes[j])]
            for i in range(count)]

    def __len__(self):
        return len(self.nodes)

    @property
    def size(self):
        """Number of elements including the top."""
        return len(self.nodes) + 1

    @property
    def top(self):
        return len(self.nodes)

    @property
    def dimension(self):
        """dim(R/J_G), the largest d_q over the minimal primes."""
        return max(self.nodes[i].dimension for i in self.minimal_indices)

    def d(self, i):
        return self.nodes[i].dimension

    def strictly_contains(self, i, j):
        """Return True if the ideal of node `j` lies strictly in node `i`."""
        return j in self.below[i]

    def hasse_edges(self):
        """Return the covering pairs ``(i, j)``: node j is directly above
        node i in the reverse inclusion order, j being the top or an ideal
        strictly inside i with nothing in between."""
        edges = []
        for i, inside in enumerate(self.below):
            for j in inside:
                if not any(j in self.below[k] for k in inside):
                    edges.append((i, j))
            if not inside:
                edges.append((i, self.top))
        return sorted(edges)

    def to_dict(self):
        return {
            'nodes': [dict(node.to_dict(), d=node.dimension, index=i)
                      for i, node in enumerate(self.nodes)],
            'top': self.top,
            'minimal': self.minimal_indices,
            'hasse': self.hasse_edges(),
            'dimension': self.dimension,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dot(self):
        """Return the Hasse diagram in the DOT language, top drawn above."""
        lines = ['digraph poset {', '  rankdir=BT;',
                 '  n%d [label="1"];' % self.top]
        for i, node in enumerate(self.nodes):
            lines.append('  n%d [label="%s d=%d"];'
                         % (i, node.describe(), node.dimension))
        for lower, upper in self.hasse_edges():
            lines.append('  n%d -> n%d;' % (lower, upper))
        lines.append('}')
        return '\n'.join(lines) + '\n'


def build_poset(g, max_generators=MAX_GENERATORS):
    """Build the poset of primes of J_G.

    Starting from J_G, every non-prime ideal met is processed once: all
    sums of non-empty subsets of its minimal primes are formed, the primes
    among them become nodes and the non-primes are queued.

    Raises:
        SizeBoundError: if some processed ideal has more than
            `max_generators` minimal primes.
    """
    family = enumerate_cut_sets(g)
    minimal = [prime_of_cut_set(g, s, family) for s in family.sets]
    if len(minimal) > max_generators:
        raise SizeBoundError('number of minimal primes', len(minimal),
                             max_generators)
    primes = set()
    seen = set()
    queue = [minimal]
    while queue:
        generators = queue.pop()
        if len(generators) > max_generators:
            raise SizeBoundError('number of minimal primes', len(generators),
                                 max_generators)
        for rep in _subset_sums(generators):
            if rep_is_prime(rep):
                primes.add(rep)
            elif rep not in seen:
                seen.add(rep)
                queue.append(rep_minimal_primes(rep))
    logger.debug('poset of %d primes from %d non-prime sums',
                 len(primes), len(seen))
    return PosetQ(g, primes, minimal)


class OrderComplex(exact_linalg.SimplicialComplex):
    """Order complex of a set of poset nodes: its simplices are the chains.

    Args:
        poset: the `PosetQ`.
        members: node indices spanning the complex.
    """

    def __init__(self, poset, members):
        members = sorted(members)
        member_set = set(members)
        chains = []

        def extend(chain):
            chains.append(tuple(chain))
            for j in poset.below[chain[-1]]:
                if j in member_set:
                    extend(chain + [j])

        for start in members:
            extend([start])
        super(OrderComplex, self).__init__(chains, closed=True)
        self.members = members


def open_interval_complex(poset, q):
    """Return the order complex of the nodes strictly inside node `q`."""
    return OrderComplex(poset, poset.below[q])


class CMCertificate(object):
    """Per-field outcome of the Cohen-Macaulay test.

    Attributes:
        dimension: dim(R/J_G).
        verdicts: field -> bool, empty intervals counting as spheres of
            dimension -1.
        alternative: field -> bool, empty intervals counting as acyclic.
        failures: field -> list of `CMFailure` under the first convention.
    """

    def __init__(self, fields, dimension, verdicts, alternative, failures):
        self.fields = tuple(fields)
        self.dimension = dimension
        self.verdicts = verdicts
        self.alternative = alternative
        self.failures = failures

    @property
    def cohen_macaulay(self):
        return all(self.verdicts[field] for field in self.fields)

    @property
    def field_dependent(self):
        return len(set(self.verdicts.values())) > 1

    @property
    def convention_sensitive(self):
        return any(self.verdicts[field] != self.alternative[field]
                   for field in self.fields)

    def __bool__(self):
        return self.cohen_macaulay

    __nonzero__ = __bool__

    def first_failure(self, field):
        failures = self.failures.get(field)
        return failures[0] if failures else None

    def to_dict(self):
        return {
            'dimension': self.dimension,
            'verdicts': dict((field_name(field), self.verdicts[field])
                             for field in self.fields),
            'alternative': dict((field_name(field), self.alternative[field])
                                for field in self.fields),
            'failures': dict(
                (field_name(field), [failure._asdict()
                                     for failure in self.failures[field]])
                for field in self.fields),
        }


def cm_certificate(g, fields=None, poset=None):
    """Decide Cohen-Macaulayness of J_G over each field from the poset.

    Args:
        g: the graph.
        fields: field characteristics, 0 for the rationals; defaults to
            ``BEI_FIELDS``.
        poset: the poset of `g`, if already built.

    Raises:
        SizeBoundError: if the poset cannot be built within its bounds.
    """
    if fields is None:
        fields = fields_from_environment()
    if poset is None:
        poset = build_poset(g)
    dimension = quotient_dimension(g)
    verdicts = {}
    alternative = {}
    failures = {}
    complexes = [open_interval_complex(poset, q) for q in range(len(poset))]
    for field in fields:
        failures[field] = []
        acyclic_ok = True
        for q, complex_ in enumerate(complexes):
            allowed = dimension - poset.d(q) - 1
            betti = exact_linalg.reduced_betti(complex_, field)
            for degree, value in sorted(betti.nonzero().items()):
                if degree != allowed:
                    failures[field].append(CMFailure(q, degree, value))
                    if not complex_.is_empty():
                        acyclic_ok = False
        verdicts[field] = not failures[field]
        alternative[field] = acyclic_ok
    certificate = CMCertificate(fields, dimension, verdicts, alternative,
                                failures)
    logger.debug('cm certificate for %r: %s', g,
                 dict((field_name(f), v) for f, v in verdicts.items()))
    return certificate


def quotient_dimension(g, family=None):
    """Return dim(R/J_G), the maximum of n + c(S) - |S| over the cut sets.
    """
    if family is None:
        family = enumerate_cut_sets(g)
    return max(popcount(g.vertices) + family.component_count(s) - popcount(s)
               for s in family.sets)
