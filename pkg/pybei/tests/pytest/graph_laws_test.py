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

"""Property tests for the graph primitives against brute-force oracles
and, where it is installed, networkx."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pybei import extra_packages, graph, graph_classes
from pybei.helpers import bit, labels_of
from pybei.tests import test_utils
from pybei.tests.pytest.graph_strategies import PROPERTY_SETTINGS
from pybei.tests.pytest.graph_strategies import connected_graphs
from pybei.tests.pytest.graph_strategies import graphs_with_vertex

networkx = extra_packages.networkx
requires_networkx = pytest.mark.skipif(networkx is None,
                                       reason='networkx not installed')


def flood_fill_parts(g, removed):
    """Components of G minus `removed` by depth-first search on labels."""
    unseen = set(label for label in g.labels if not removed & bit(label))
    parts = []
    while unseen:
        stack = [min(unseen)]
        part = set()
        while stack:
            label = stack.pop()
            if label in part:
                continue
            part.add(label)
            stack.extend(u for u in labels_of(g.neighbors(label))
                         if u in unseen and u not in part)
        unseen -= part
        parts.append(sorted(part))
    return sorted(parts)


@st.composite
def graphs_with_removed_set(draw, max_n=9):
    g = draw(connected_graphs(max_n=max_n))
    kept = draw(st.sampled_from(g.labels))
    removed = draw(st.integers(min_value=0, max_value=g.vertices))
    return g, removed & g.vertices & ~bit(kept)


@st.composite
def relabeled_graphs(draw, max_n=9):
    g = draw(connected_graphs(max_n=max_n))
    targets = draw(st.permutations(range(1, g.n + 1)))
    return g, graph.relabel(g, dict(zip(g.labels, targets)))


@PROPERTY_SETTINGS
@given(graphs_with_removed_set())
def test_components_match_flood_fill(case):
    g, removed = case
    partition = graph.components_after_removal(g, removed)
    assert partition.count == graph.component_count(g, removed)
    assert sorted(labels_of(part) for part in partition.parts) == \
        flood_fill_parts(g, removed)


@PROPERTY_SETTINGS
@given(graphs_with_vertex(max_n=9))
def test_vertex_is_free_after_completing_its_neighborhood(case):
    g, v = case
    assert graph.is_free_vertex(graph.complete_neighborhood(g, v), v)


@PROPERTY_SETTINGS
@given(relabeled_graphs())
def test_canonical_form_ignores_labels(case):
    g, relabeled = case
    assert graph.canonical_form(g) == graph.canonical_form(relabeled)


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=10))
def test_graph6_decodes_to_the_encoded_graph(g):
    assert graph.parse_graph6(graph.to_graph6(g)) == g


@requires_networkx
@PROPERTY_SETTINGS
@given(connected_graphs(max_n=7), connected_graphs(max_n=7))
def test_canonical_form_agrees_with_networkx_isomorphism(first, second):
    isomorphic = networkx.is_isomorphic(graph.to_networkx(first),
                                        graph.to_networkx(second))
    assert isomorphic == (graph.canonical_form(first) ==
                          graph.canonical_form(second))


@requires_networkx
@PROPERTY_SETTINGS
@given(graphs_with_removed_set())
def test_component_count_agrees_with_networkx(case):
    g, removed = case
    remaining = [label for label in g.labels if not removed & bit(label)]
    subgraph = graph.to_networkx(g).subgraph(remaining)
    assert (networkx.number_connected_components(subgraph) ==
            graph.component_count(g, removed))


@requires_networkx
@PROPERTY_SETTINGS
@given(connected_graphs(max_n=9))
def test_chordality_agrees_with_networkx(g):
    assert (networkx.is_chordal(graph.to_networkx(g)) ==
            graph_classes.is_chordal(g).chordal)


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=8))
def test_chordality_agrees_with_induced_cycles(g):
    assert (graph_classes.is_chordal(g).chordal ==
            (not test_utils.has_long_induced_cycle(g)))


@settings(PROPERTY_SETTINGS, max_examples=200)
@given(connected_graphs(max_n=8))
def test_traceability_agrees_with_permutation_search(g):
    assert (test_utils.has_hamiltonian_path(g) ==
            graph_classes.is_traceable(g).traceable)
