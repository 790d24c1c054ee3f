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

"""Property tests for the cut-set laws on random connected graphs."""
from hypothesis import given

from pybei import cutsets
from pybei.graph import complete_neighborhood, components_after_removal, cone
from pybei.graph import delete_vertices
from pybei.graph import disjoint_union, shift_labels
from pybei.helpers import bit, iter_bits, labels_of
from pybei.tests.pytest.graph_strategies import PROPERTY_SETTINGS
from pybei.tests.pytest.graph_strategies import connected_graphs
from pybei.tests.pytest.graph_strategies import graphs_with_vertex


def submasks(mask):
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


def sides_of_cut_vertices(g, family):
    """Yield v and G minus v for every cut vertex v."""
    for v in labels_of(family.cut_vertices):
        yield v, delete_vertices(g, bit(v))


@PROPERTY_SETTINGS
@given(graphs_with_vertex(max_n=9))
def test_completing_a_neighborhood_keeps_the_cut_sets_avoiding_it(case):
    g, v = case
    family = cutsets.enumerate_cut_sets(g)
    completed = cutsets.enumerate_cut_sets(complete_neighborhood(g, v))
    assert set(completed.sets) == set(s for s in family.sets
                                      if not s & bit(v))
    if cutsets.is_unmixed(g, family):
        assert cutsets.is_unmixed(completed.graph, completed)
        if cutsets.is_accessible(g, family):
            assert cutsets.is_accessible(completed.graph, completed)


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=4), connected_graphs(max_n=4))
def test_cone_over_two_graphs(first, second):
    second = shift_labels(second, first.n)
    apex = first.n + second.n + 1
    g = cone(apex, disjoint_union(first, second))
    first_family = cutsets.enumerate_cut_sets(first)
    second_family = cutsets.enumerate_cut_sets(second)
    expected = set([0])
    for t1 in first_family:
        for t2 in second_family:
            expected.add(t1 | t2 | bit(apex))
    family = cutsets.enumerate_cut_sets(g)
    assert set(family.sets) == expected
    assert (cutsets.is_unmixed(g, family) ==
            (cutsets.is_unmixed(first, first_family) and
             cutsets.is_unmixed(second, second_family)))
    assert (bool(cutsets.is_accessible(g, family)) ==
            (bool(cutsets.is_accessible(first, first_family)) and
             bool(cutsets.is_accessible(second, second_family))))


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=9))
def test_reconnecting_two_components_characterizes_smaller_cut_sets(g):
    family = cutsets.enumerate_cut_sets(g)
    if not cutsets.is_unmixed(g, family):
        return
    for s in family.sets:
        for single in iter_bits(s):
            count = cutsets.reconnect_count(g, s, single.bit_length(),
                                            family)
            assert (s ^ single in family) == (count == 2)


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=8))
def test_deleting_a_cut_vertex_of_an_unmixed_graph(g):
    family = cutsets.enumerate_cut_sets(g)
    if not cutsets.is_unmixed(g, family):
        return
    for v, deleted in sides_of_cut_vertices(g, family):
        deleted_family = cutsets.enumerate_cut_sets(deleted)
        unmixed = cutsets.is_unmixed(deleted, deleted_family)
        lifted = set(s & ~bit(v) for s in family.sets if s & bit(v))
        assert unmixed == (set(deleted_family.sets) == lifted)
        parts = components_after_removal(g, bit(v)).parts
        assert len(parts) == 2
        neighbors = g.neighbors(v)
        avoids_sides = all(
            (neighbors & part) & ~s
            for s in deleted_family.sets for part in parts)
        assert unmixed == avoids_sides


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=8))
def test_deleting_a_cut_vertex_of_an_accessible_graph(g):
    family = cutsets.enumerate_cut_sets(g)
    if not cutsets.is_accessible(g, family):
        return
    for _, deleted in sides_of_cut_vertices(g, family):
        deleted_family = cutsets.enumerate_cut_sets(deleted)
        assert (cutsets.is_unmixed(deleted, deleted_family) ==
                cutsets.is_accessible_set_system(deleted_family))


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=8))
def test_cut_sets_of_completed_graph_without_the_vertex(g):
    family = cutsets.enumerate_cut_sets(g)
    if not cutsets.is_unmixed(g, family):
        return
    for v, deleted in sides_of_cut_vertices(g, family):
        if not cutsets.is_unmixed(deleted):
            continue
        completed = complete_neighborhood(g, v)
        neighbors = g.neighbors(v)
        expected = set(s for s in cutsets.enumerate_cut_sets(completed)
                       if neighbors & ~s)
        actual = cutsets.enumerate_cut_sets(
            delete_vertices(completed, bit(v)))
        assert set(actual.sets) == expected


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=9))
def test_subsets_of_cut_sets_of_cut_vertices(g):
    family = cutsets.enumerate_cut_sets(g)
    if not cutsets.is_unmixed(g, family):
        return
    for s in family.sets:
        if s & ~family.cut_vertices:
            continue
        for sub in submasks(s):
            assert sub in family


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=9))
def test_cut_sets_of_accessible_graphs(g):
    family = cutsets.enumerate_cut_sets(g)
    if not cutsets.is_accessible(g, family):
        return
    for s in family.sets:
        ordering = cutsets.accessible_ordering(g, s, family)
        assert ordering is not None
        assert sorted(ordering) == labels_of(s)
        assert cutsets.is_unit_step_ordering(g, ordering)
        others = s & ~family.cut_vertices
        if others:
            assert any(s ^ single in family for single in iter_bits(others))
    assert cutsets.structural_necessary_conditions(g, family).all_hold


@PROPERTY_SETTINGS
@given(connected_graphs(max_n=4), connected_graphs(max_n=4))
def test_disconnected_graph_splits_into_components(first, second):
    memo = {}
    second = shift_labels(second, first.n)
    g = disjoint_union(first, second)
    family = cutsets.enumerate_cut_sets(g)
    first_family = cutsets.enumerate_cut_sets(first)
    second_family = cutsets.enumerate_cut_sets(second)
    assert set(family.sets) == set(t1 | t2 for t1 in first_family
                                   for t2 in second_family)
    assert (cutsets.is_unmixed(g, family) ==
            (cutsets.is_unmixed(first) and cutsets.is_unmixed(second)))
    assert (bool(cutsets.is_accessible(g, family)) ==
            (bool(cutsets.is_accessible(first)) and
             bool(cutsets.is_accessible(second))))
    assert (bool(cutsets.is_strongly_unmixed(g, memo=memo)) ==
            (bool(cutsets.is_strongly_unmixed(first, memo=memo)) and
             bool(cutsets.is_strongly_unmixed(second, memo=memo))))
