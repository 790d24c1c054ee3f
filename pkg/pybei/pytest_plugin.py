"""A pytest plugin for tests relying on the strong unmixedness memo.

When pybei is installed, the "bei_memo" fixture becomes available.

:Usage:

def test_memo_is_used(bei_memo):
    is_strongly_unmixed(path_graph(4))
    assert bei_memo
"""

import pytest

from pybei import cutsets


@pytest.fixture
def bei_memo(request):
    """ Process-wide strong unmixedness memo, empty at test start. """
    cutsets.clear_memo()
    request.addfinalizer(cutsets.clear_memo)
    return cutsets.strong_unmixed_memo()
