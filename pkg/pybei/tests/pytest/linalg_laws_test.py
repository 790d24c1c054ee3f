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

"""Property tests for exact ranks and reduced homology."""
from hypothesis import given
from hypothesis import strategies as st

from pybei.exact_linalg import SimplicialComplex, SparseMatrix, rank
from pybei.exact_linalg import reduced_betti
from pybei.tests.pytest.graph_strategies import PROPERTY_SETTINGS
from pybei.tests.pytest.graph_strategies import facet_lists
from pybei.tests.pytest.graph_strategies import integer_matrices

PRIMES = (2, 3, 5)
signs = st.sampled_from((-1, 0, 1))


@PROPERTY_SETTINGS
@given(facet_lists(), st.sampled_from((0,) + PRIMES))
def test_betti_numbers_sum_to_euler_characteristic(facets, field):
    complex_ = SimplicialComplex.from_facets(facets)
    assert (reduced_betti(complex_, field).alternating_sum() ==
            complex_.reduced_euler_characteristic())


@PROPERTY_SETTINGS
@given(integer_matrices(entries=signs))
def test_rational_rank_bounds_modular_rank(rows):
    matrix = SparseMatrix.from_rows(rows)
    rational = rank(matrix)
    for p in PRIMES:
        assert rank(matrix, p) <= rational


@PROPERTY_SETTINGS
@given(integer_matrices(), st.sampled_from((0,) + PRIMES))
def test_rank_of_transpose(rows, field):
    matrix = SparseMatrix.from_rows(rows)
    assert rank(matrix, field) == rank(matrix.transpose(), field)
    assert rank(matrix, field) <= min(matrix.rows, matrix.cols)


@PROPERTY_SETTINGS
@given(facet_lists(), st.sampled_from((0,) + PRIMES))
def test_cones_are_acyclic(facets, field):
    cone = SimplicialComplex.from_facets(facets).cone(8)
    assert reduced_betti(cone, field).nonzero() == {}
