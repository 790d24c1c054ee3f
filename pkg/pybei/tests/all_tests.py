#! /usr/bin/env python
#
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

"""A test suite that runs all tests for pybei at once."""

import doctest
import sys
import unittest

from pybei import cutsets, exact_linalg, graph, graph_classes, helpers
from pybei import ideal_geometry, poset
from pybei.tests import cli_test
from pybei.tests import cutsets_test
from pybei.tests import exact_linalg_test
from pybei.tests import graph_classes_test
from pybei.tests import graph_test
from pybei.tests import ideal_geometry_test
from pybei.tests import poset_test
from pybei.tests import survey_test
from pybei.tests import theorem_suite_test


class AllTests(unittest.TestSuite):
    """A test suite that runs all tests for pybei at once."""

    def suite(self):  # pylint: disable-msg=C6409
        loader = unittest.defaultTestLoader
        self.addTests([
            loader.loadTestsFromModule(graph_test),
            loader.loadTestsFromModule(cutsets_test),
            loader.loadTestsFromModule(graph_classes_test),
            loader.loadTestsFromModule(exact_linalg_test),
            loader.loadTestsFromModule(poset_test),
            loader.loadTestsFromModule(ideal_geometry_test),
            loader.loadTestsFromModule(survey_test),
            loader.loadTestsFromModule(cli_test),
            loader.loadTestsFromModule(theorem_suite_test),
        ])
        for module in (helpers, graph, cutsets, graph_classes, exact_linalg,
                       poset, ideal_geometry):
            self.addTests(doctest.DocTestSuite(module))
        return self


if __name__ == '__main__':
    result = unittest.TextTestRunner(verbosity=2).run(AllTests().suite())
    sys.exit(int(not result.wasSuccessful()))
