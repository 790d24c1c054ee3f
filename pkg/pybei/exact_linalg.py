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

"""Exact linear algebra for reduced (co)homology of simplicial complexes.

Ranks are computed over the rationals by integer-preserving elimination and
over GF(p) by elimination modulo p; no floating point is involved. Over a
field, reduced cohomology and reduced homology have the same dimensions, so
homology of the augmented chain complex is computed.

>>> from pybei.exact_linalg import SimplicialComplex, reduced_betti
>>> triangle_boundary = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
>>> reduced_betti(triangle_boundary, 2).nonzero()
{1: 1}
>>> reduced_betti(SimplicialComplex(), 0).nonzero()
{-1: 1}
"""
import itertools
from functools import reduce
from math import gcd

from pybei.helpers import RATIONALS, field_name, is_prime


class SparseMatrix(object):
    """A matrix storing only its non-zero entries.

    Args:
        rows: number of rows.
        cols: number of columns.
        entries: dictionary mapping ``(row, col)`` to an integer value.

    Raises:
        ValueError: if an entry lies outside the matrix.
    """

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (row, col), value in (entries or {}).items():
            if not (0 <= row < rows and 0 <= col < cols):
                raise ValueError('Entry (%d, %d) outside a %dx%d matrix'
                                 % (row, col, rows, cols))
            if value:
                self.entries[(row, col)] = value

    @classmethod
    def from_rows(cls, rows):
        """Create a matrix from a list of equally long row lists."""
        cols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError('Row %d has length %d, expected %d'
                                 % (i, len(row), cols))
            for j, value in enumerate(row):
                entries[(i, j)] = value
        return cls(len(rows), cols, entries)

    def transpose(self):
        return SparseMatrix(self.cols, self.rows, dict(
            ((col, row), value)
            for (row, col), value in self.entries.items()))

    def row_dicts(self):
        """Return the rows as dictionaries from column to value."""
        result = [{} for _ in range(self.rows)]
        for (row, col), value in self.entries.items():
            result[row][col] = value
        return result

    def __repr__(self):
        return 'SparseMatrix(%d, %d, %r)' % (self.rows, self.cols,
                                             self.entries)


def _primitive(row):
    content = reduce(gcd, (abs(value) for value in row.values()), 0)
    if content > 1:
        return dict((col, value // content) for col, value in row.items())
    return row


def _rank_rational(matrix):
    pivots = {}
    for row in matrix.row_dicts():
        row = _primitive(row)
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = row
                break
            a, b = pivot[col], row[col]
            combined = {}
            for key in set(row) | set(pivot):
                value = a * row.get(key, 0) - b * pivot.get(key, 0)
                if value:
                    combined[key] = value
            row = _primitive(combined)
    return len(pivots)


def _rank_modular(matrix, p):
    pivots = {}
    for row in matrix.row_dicts():
        row = dict((col, value % p) for col, value in row.items()
                   if value % p)
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                inverse = pow(row[col], p - 2, p)
                pivots[col] = dict((key, value * inverse % p)
                                   for key, value in row.items())
                break
            factor = row[col]
            for key, value in pivot.items():
                updated = (row.get(key, 0) - factor * value) % p
                if updated:
                    row[key] = updated
                else:
                    row.pop(key, None)
    return len(pivots)


def rank(matrix, field=RATIONALS):
    """Return the exact rank of `matrix`.

    Args:
        matrix: a `SparseMatrix` with integer entries.
        field: 0 for the rationals or a prime p for GF(p).

    Raises:
        ValueError: if `field` is neither 0 nor a prime.
    """
    if field == RATIONALS:
        return _rank_rational(matrix)
    if not is_prime(field):
        raise ValueError('Field characteristic %r is not a prime' % (field,))
    return _rank_modular(matrix, field)


class SimplicialComplex(object):
    """A finite abstract simplicial complex.

    Simplices are stored as sorted tuples, grouped by dimension.

    Args:
        simplices: iterable of vertex collections.
        closed: set to True if `simplices` is already closed under taking
            non-empty faces; otherwise the closure is computed.
    """

    def __init__(self, simplices=(), closed=False):
        faces = set()
        for simplex in simplices:
            simplex = tuple(sorted(set(simplex)))
            if not simplex:
                continue
            if closed:
                faces.add(simplex)
            else:
                for size in range(1, len(simplex) + 1):
                    faces.update(itertools.combinations(simplex, size))
        self._by_dimension = {}
        for face in faces:
            self._by_dimension.setdefault(len(face) - 1, []).append(face)
        for faces_of_dimension in self._by_dimension.values():
            faces_of_dimension.sort()

    @classmethod
    def from_facets(cls, facets):
        return cls(facets)

    @property
    def dimension(self):
        """Largest simplex dimension, -1 for the empty complex."""
        return max(self._by_dimension) if self._by_dimension else -1

    @property
    def vertices(self):
        return [face[0] for face in self.simplices(0)]

    def is_empty(self):
        return not self._by_dimension

    def simplices(self, dimension):
        return self._by_dimension.get(dimension, [])

    def f_vector(self):
        """Return the numbers of simplices of dimension 0, 1, ..."""
        return [len(self.simplices(d)) for d in range(self.dimension + 1)]

    def reduced_euler_characteristic(self):
        return sum((-1) ** d * count
                   for d, count in enumerate(self.f_vector())) - 1

    def cone(self, apex):
        """Return the cone over this complex with the new vertex `apex`."""
        faces = [(apex,)]
        for d in range(self.dimension + 1):
            for face in self.simplices(d):
                faces.append(face)
                faces.append(face + (apex,))
        return SimplicialComplex(faces, closed=True)

    def __len__(self):
        return sum(len(faces) for faces in self._by_dimension.values())


class BettiVector(object):
    """Reduced Betti numbers in degrees -1 .. dimension over one field."""

    def __init__(self, field, ranks):
        self.field = field
        self.ranks = dict(ranks)

    def __getitem__(self, degree):
        return self.ranks.get(degree, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiVector):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    @property
    def degrees(self):
        return sorted(self.ranks)

    def nonzero(self):
        """Return a dictionary of the degrees with non-zero rank."""
        return dict((degree, value) for degree, value in self.ranks.items()
                    if value)

    def alternating_sum(self):
        return sum((-value if degree % 2 else value)
                   for degree, value in self.ranks.items())

    def __repr__(self):
        return 'BettiVector(%s, %r)' % (field_name(self.field),
                                        self.nonzero())


def boundary_matrix(complex_, dimension):
    """Return the boundary map from `dimension`-simplices to faces.

    For dimension 0 this is the augmentation onto the single (-1)-simplex.
    """
    simplices = complex_.simplices(dimension)
    if dimension == 0:
        return SparseMatrix(1, len(simplices), dict(
            ((0, col), 1) for col in range(len(simplices))))
    faces = complex_.simplices(dimension - 1)
    row_of = dict((face, row) for row, face in enumerate(faces))
    entries = {}
    for col, simplex in enumerate(simplices):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            entries[(row_of[face], col)] = -1 if i % 2 else 1
    return SparseMatrix(len(faces), len(simplices), entries)


def reduced_betti(complex_, field=RATIONALS):
    """Return the reduced Betti numbers of `complex_` over `field`.

    The empty complex has rank 1 in degree -1; every other complex has
    rank 0 there.
    """
    top = complex_.dimension
    boundary_ranks = dict(
        (d, rank(boundary_matrix(complex_, d), field))
        for d in range(top + 1))
    ranks = {}
    for degree in range(-1, top + 1):
        chains = len(complex_.simplices(degree)) if degree >= 0 else 1
        ranks[degree] = (chains - boundary_ranks.get(degree, 0) -
                         boundary_ranks.get(degree + 1, 0))
    return BettiVector(field, ranks)
