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

"""Cut sets of a graph and the decision procedures built on them.

A set S of vertices is a cut set if S is empty or if removing any single
element from S lowers the number of connected components of G \\ S. The cut
sets index the minimal primes of the binomial edge ideal of G, which is why
unmixedness, accessibility and strong unmixedness can be decided here
without any polynomial arithmetic.

:Usage:

>>> from pybei import cutsets, graph
>>> square_with_whisker = graph.Graph.from_edges(
...     [(1, 2), (2, 3), (3, 4), (4, 5), (5, 2)])
>>> cutsets.enumerate_cut_sets(square_with_whisker).as_lists()
[[], [2], [2, 4], [3, 5]]
>>> cutsets.is_unmixed(square_with_whisker)
False
>>> completed = graph.complete_neighborhood(square_with_whisker, 3)
>>> cutsets.enumerate_cut_sets(completed).as_lists()
[[], [2], [2, 4]]
>>> bool(cutsets.is_accessible(completed))
True
"""
import hashlib
import json
import logging
from collections import namedtuple

from pybei.graph import GraphError, SizeBoundError
from pybei.graph import complete_neighborhood, component_count
from pybei.graph import components_after_removal, components_are_complete
from pybei.graph import canonical_form, delete_vertices, induced_subgraph
from pybei.graph import is_clique, is_connected, to_edge_list
from pybei.helpers import as_vertex_set, bit, format_vertex_set, iter_bits
from pybei.helpers import labels_of, memo_max_from_environment, popcount
from pybei.helpers import sorted_sets

logger = logging.getLogger(__name__)

MAX_CUT_SET_VERTICES = 24

REASON_COMPLETE = 'complete components'
REASON_MIXED = 'not unmixed'
REASON_CUT_VERTEX = 'admissible cut vertex'
REASON_NO_CUT_VERTEX = 'no admissible cut vertex'
REASON_MEMO = 'memoized'

CutVertexSearch = namedtuple('CutVertexSearch', 'vertex reason')

_NecessaryConditions = namedtuple(
    'NecessaryConditions',
    'cut_vertex_in_every_cut_set cut_vertices_connected '
    'adjacent_to_cut_vertex witness')

_STRONG_UNMIXED_MEMO = {}


class CutSetError(GraphError):
    """Raised if a vertex set that must be a cut set is not one."""

    def __init__(self, s, reason='is not a cut set'):
        super(CutSetError, self).__init__(
            'Vertex set %s %s' % (format_vertex_set(s), reason))
        self.vertex_set = s


class NecessaryConditions(_NecessaryConditions):
    """The three structural conditions every accessible graph satisfies.

    `witness` is the first non-empty cut set without a cut vertex, if any.
    """
    __slots__ = ()

    @property
    def all_hold(self):
        return (self.cut_vertex_in_every_cut_set and
                self.cut_vertices_connected and self.adjacent_to_cut_vertex)


class CutSetFamily(object):
    """The collection C(G) of cut sets of a graph.

    Sets are vertex masks, sorted by size and then lexicographically; this
    is also the order of the JSON serialization.

    Args:
        graph: the graph the family belongs to.
        counts: dictionary mapping each cut set to c_G(S).
    """

    def __init__(self, graph, counts):
        self.graph = graph
        self._counts = dict(counts)
        self.sets = sorted_sets(self._counts)
        self.base_count = self._counts[0]
        self.cut_vertices = 0
        for s in self.sets:
            if popcount(s) == 1:
                self.cut_vertices |= s
        self.fingerprint = hashlib.sha1(
            to_edge_list(graph).encode('ascii')).hexdigest()
        self._reconnect_profiles = {}

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s):
        return as_vertex_set(s) in self._counts

    def __eq__(self, other):
        if not isinstance(other, CutSetFamily):
            return NotImplemented
        return self.sets == other.sets

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __repr__(self):
        return 'CutSetFamily(%s)' % ', '.join(
            format_vertex_set(s) for s in self.sets)

    def component_count(self, s):
        """Return c_G(S); cached for members of the family."""
        s = as_vertex_set(s)
        if s in self._counts:
            return self._counts[s]
        return component_count(self.graph, s)

    def contains_cut_vertex(self, s):
        return bool(as_vertex_set(s) & self.cut_vertices)

    def reconnect_profile(self, s):
        """Return a dictionary mapping each v in S to `reconnect_count`."""
        s = as_vertex_set(s)
        if s not in self._reconnect_profiles:
            self._reconnect_profiles[s] = dict(
                (v, reconnect_count(self.graph, s, v, self))
                for v in labels_of(s))
        return self._reconnect_profiles[s]

    def as_lists(self):
        """Return the cut sets as sorted label lists."""
        return [labels_of(s) for s in self.sets]

    def to_json(self):
        return json.dumps(self.as_lists())


class AccessibilityReport(object):
    """Outcome of `is_accessible`.

    Truth value is the verdict. `witness` is the unmixedness violation if
    the graph is mixed, otherwise the least stuck cut set, or None.
    """

    def __init__(self, unmixed, unmixedness_violation, stuck_sets):
        self.unmixed = unmixed
        self.unmixedness_violation = unmixedness_violation
        self.stuck_sets = stuck_sets

    @property
    def accessible(self):
        return self.unmixed and not self.stuck_sets

    @property
    def witness(self):
        if not self.unmixed:
            return self.unmixedness_violation
        if self.stuck_sets:
            return self.stuck_sets[0]
        return None

    def __bool__(self):
        return self.accessible

    __nonzero__ = __bool__

    def to_dict(self):
        return {
            'accessible': self.accessible,
            'unmixed': self.unmixed,
            'unmixedness_violation': _labels_or_none(
                self.unmixedness_violation),
            'stuck_sets': [labels_of(s) for s in self.stuck_sets],
        }


class StrongUnmixednessTrace(object):
    """One node of the strong unmixedness recursion.

    Truth value is the verdict. For a positive verdict reached through a cut
    vertex, `children` holds the traces of G \\ {v}, G_v and G_v \\ {v}.
    Nodes answered from the memo carry no children.
    """

    def __init__(self, graph, verdict, reason, cut_vertex=None,
                 children=(), rejected=(), memo_hit=False):
        self.graph = graph
        self.verdict = verdict
        self.reason = reason
        self.cut_vertex = cut_vertex
        self.children = list(children)
        self.rejected = list(rejected)
        self.memo_hit = memo_hit
        self.memo_hits = 0

    def __bool__(self):
        return self.verdict

    __nonzero__ = __bool__

    def iter_nodes(self):
        """Yield this node and all nodes below it, depth first."""
        yield self
        for child in self.children:
            for node in child.iter_nodes():
                yield node

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'reason': self.reason,
            'cut_vertex': self.cut_vertex,
            'rejected': self.rejected,
            'memo_hit': self.memo_hit,
            'children': [child.to_dict() for child in self.children],
        }


def _labels_or_none(s):
    return None if s is None else labels_of(s)


def _check_subset(g, s):
    s = as_vertex_set(s)
    if s & ~g.vertices:
        raise GraphError('Vertices %s are not in the graph'
                         % labels_of(s & ~g.vertices))
    return s


def is_cut_set(g, s):
    """Return True if `s` is empty or every element increases c_G.

    Args:
        g: the graph.
        s: a subset of V(G), as mask or iterable of labels.
    """
    s = _check_subset(g, s)
    if not s:
        return True
    count = component_count(g, s)
    return all(component_count(g, s ^ single) < count
               for single in iter_bits(s))


def enumerate_cut_sets(g):
    """Return C(G) by scanning all subsets of V(G).

    Raises:
        SizeBoundError: if G has more than `MAX_CUT_SET_VERTICES` vertices.
    """
    labels = g.labels
    n = len(labels)
    if n > MAX_CUT_SET_VERTICES:
        raise SizeBoundError('cut-set enumeration graph', n,
                             MAX_CUT_SET_VERTICES)
    singles = [bit(label) for label in labels]
    size = 1 << n
    masks = [0] * size
    counts = [0] * size
    counts[0] = component_count(g)
    for index in range(1, size):
        low = index & -index
        masks[index] = masks[index ^ low] | singles[low.bit_length() - 1]
        counts[index] = component_count(g, masks[index])
    members = {0: counts[0]}
    for index in range(1, size):
        count = counts[index]
        rest = index
        while rest:
            low = rest & -rest
            if counts[index ^ low] >= count:
                break
            rest ^= low
        else:
            members[masks[index]] = count
    return CutSetFamily(g, members)


def cut_vertices(g):
    """Return the mask of all v with c_G({v}) > c_G(empty set)."""
    base = component_count(g)
    result = 0
    for single in iter_bits(g.vertices):
        if component_count(g, single) > base:
            result |= single
    return result


def unmixedness_violation(g, family=None):
    """Return the first cut set S with c_G(S) != |S| + c, or None."""
    if family is None:
        family = enumerate_cut_sets(g)
    for s in family.sets:
        if family.component_count(s) != popcount(s) + family.base_count:
            return s
    return None


def is_unmixed(g, family=None):
    """Return True if c_G(S) = |S| + c_G(empty set) for every cut set."""
    return unmixedness_violation(g, family) is None


def stuck_cut_sets(family):
    """Return the non-empty members S with no s such that S - s is a member.
    """
    return [s for s in family.sets
            if s and not any(s ^ single in family._counts
                             for single in iter_bits(s))]


def is_accessible_set_system(family):
    """Return True if every non-empty member can shed an element and stay a
    member."""
    return not stuck_cut_sets(family)


def is_accessible(g, family=None):
    """Decide whether G is accessible.

    Returns:
        An `AccessibilityReport`, true iff G is unmixed and C(G) is an
        accessible set system.
    """
    if family is None:
        family = enumerate_cut_sets(g)
    violation = unmixedness_violation(g, family)
    return AccessibilityReport(violation is None, violation,
                               stuck_cut_sets(family))


def accessible_ordering(g, s, family=None):
    """Order the elements of a cut set so that every prefix is a cut set.

    The search extends prefixes in ascending label order and remembers
    prefixes that led nowhere.

    Args:
        g: the graph.
        s: a cut set of `g`.
        family: C(G), if already computed.

    Returns:
        The ordering as a list of labels, or None if no ordering exists.

    Raises:
        CutSetError: if `s` is not a cut set of `g`.
    """
    s = _check_subset(g, s)
    if family is None:
        family = enumerate_cut_sets(g)
    if s not in family:
        raise CutSetError(s)
    dead = set()

    def extend(prefix, order):
        if prefix == s:
            return order
        for single in iter_bits(s & ~prefix):
            longer = prefix | single
            if longer in dead or longer not in family:
                continue
            found = extend(longer, order + [single.bit_length()])
            if found is not None:
                return found
            dead.add(longer)
        return None

    return extend(0, [])


def is_unit_step_ordering(g, ordering):
    """Return True if adding the vertices of `ordering` one by one raises
    the number of components by exactly one each time."""
    removed = 0
    count = component_count(g)
    for label in ordering:
        removed |= bit(label)
        next_count = component_count(g, removed)
        if next_count != count + 1:
            return False
        count = next_count
    return True


def reconnect_count(g, s, v, family=None):
    """Return the number of components of G \\ S that `v` is adjacent to.

    Raises:
        CutSetError: if `s` is not a cut set or `v` is not in `s`.
    """
    s = _check_subset(g, s)
    if not s & bit(v):
        raise CutSetError(s, 'does not contain vertex %d' % v)
    member = s in family if family is not None else is_cut_set(g, s)
    if not member:
        raise CutSetError(s)
    neighbors = g.neighbors(v)
    return sum(1 for part in components_after_removal(g, s).parts
               if part & neighbors)


def strong_unmixed_memo():
    """Return the process-wide memo of strong unmixedness verdicts."""
    return _STRONG_UNMIXED_MEMO


def clear_memo():
    _STRONG_UNMIXED_MEMO.clear()


def is_strongly_unmixed(g, memo=None, use_memo=True):
    """Run the strong unmixedness recursion on `g`.

    G is strongly unmixed if its components are complete graphs, or if it
    is unmixed and has a cut vertex v such that G \\ {v}, G_v and
    G_v \\ {v} are strongly unmixed. Cut vertices are tried in ascending
    label order. Verdicts are memoized by canonical form; the number of
    stored entries is capped by ``BEI_MEMO_MAX``.

    Args:
        g: the graph.
        memo: dictionary used as memo; defaults to the process-wide one.
        use_memo: set to False to disable memoization.

    Returns:
        The root `StrongUnmixednessTrace`; its `memo_hits` attribute counts
        the memo hits of the whole run.
    """
    if not use_memo:
        memo = None
    elif memo is None:
        memo = _STRONG_UNMIXED_MEMO
    statistics = {'hits': 0, 'cap': memo_max_from_environment()}
    trace = _strongly_unmixed(g, memo, statistics, False)
    trace.memo_hits = statistics['hits']
    return trace


def _strongly_unmixed(g, memo, statistics, known_unmixed):
    key = None
    if memo is not None:
        key = canonical_form(g)
        verdict = memo.get(key)
        if verdict is not None:
            statistics['hits'] += 1
            return StrongUnmixednessTrace(g, verdict, REASON_MEMO,
                                          memo_hit=True)
    trace = _evaluate_strongly_unmixed(g, memo, statistics, known_unmixed)
    if memo is not None:
        cap = statistics['cap']
        if not cap or len(memo) < cap:
            memo.setdefault(key, trace.verdict)
        else:
            logger.debug('strong unmixedness memo full (%d entries)', cap)
    return trace


def _evaluate_strongly_unmixed(g, memo, statistics, known_unmixed):
    if components_are_complete(g):
        return StrongUnmixednessTrace(g, True, REASON_COMPLETE)
    if not known_unmixed and not is_unmixed(g):
        return StrongUnmixednessTrace(g, False, REASON_MIXED)
    connected = is_connected(g)
    rejected = []
    for v in labels_of(cut_vertices(g)):
        children = [_strongly_unmixed(delete_vertices(g, bit(v)), memo,
                                      statistics, False)]
        if children[0].verdict:
            completed = complete_neighborhood(g, v)
            children.append(_strongly_unmixed(completed, memo, statistics,
                                              True))
            if children[1].verdict:
                children.append(_strongly_unmixed(
                    delete_vertices(completed, bit(v)), memo, statistics,
                    connected))
                if children[2].verdict:
                    return StrongUnmixednessTrace(
                        g, True, REASON_CUT_VERTEX, cut_vertex=v,
                        children=children, rejected=rejected)
        rejected.append(v)
    return StrongUnmixednessTrace(g, False, REASON_NO_CUT_VERTEX,
                                  rejected=rejected)


def find_unmixed_cut_vertex(g):
    """Look for a cut vertex v such that G \\ {v} is unmixed.

    Returns:
        A `CutVertexSearch` with the smallest such vertex, or with vertex
        None and the reason why there is none.

    Raises:
        GraphError: if `g` is not connected.
    """
    if not is_connected(g):
        raise GraphError('find_unmixed_cut_vertex needs a connected graph')
    candidates = cut_vertices(g)
    if not candidates:
        if is_clique(g, g.vertices):
            return CutVertexSearch(None, 'complete graph has no cut vertex')
        return CutVertexSearch(None, 'graph has no cut vertex')
    for v in labels_of(candidates):
        if is_unmixed(delete_vertices(g, bit(v))):
            return CutVertexSearch(
                v, 'deleting vertex %d leaves an unmixed graph' % v)
    return CutVertexSearch(None, 'no cut vertex leaves an unmixed graph')


def structural_necessary_conditions(g, family=None):
    """Check the three structural conditions of accessible graphs.

    (1) every non-empty cut set contains a cut vertex, (2) the cut vertices
    induce a connected subgraph, (3) every vertex is a cut vertex or
    adjacent to one. (2) and (3) hold vacuously without cut vertices.

    Raises:
        GraphError: if `g` is not connected.
    """
    if not is_connected(g):
        raise GraphError(
            'structural_necessary_conditions needs a connected graph')
    if family is None:
        family = enumerate_cut_sets(g)
    cuts = family.cut_vertices
    missing = [s for s in family.sets if s and not s & cuts]
    if cuts:
        connected = is_connected(induced_subgraph(g, cuts))
        covered = cuts
        for single in iter_bits(cuts):
            covered |= g.adjacency[single.bit_length() - 1]
        dominated = covered == g.vertices
    else:
        connected = dominated = True
    return NecessaryConditions(not missing, connected, dominated,
                               missing[0] if missing else None)
