import doctest

import pytest

from twistpoly import setsys, widthpoly


@pytest.mark.parametrize("module", [setsys, widthpoly])
def test_docstring_examples(module):
    result = doctest.testmod(module)
    assert result.failed == 0
