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

# Fixtures for the property tests.

import pytest

# available without the installed entry point as well
from pybei.pytest_plugin import bei_memo  # noqa: F401


@pytest.fixture
def private_memo():
    """ Strong unmixedness memo that is not shared with other tests. """
    return {}
