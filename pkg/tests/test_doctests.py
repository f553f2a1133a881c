import doctest
import importlib
import pkgutil

import pytest

import holonomica

MODULES = [m.name for m in pkgutil.iter_modules(holonomica.__path__, "holonomica.") if not m.name.endswith("__main__")]


@pytest.mark.parametrize("name", MODULES)
def test_docstring_examples(name):
    result = doctest.testmod(importlib.import_module(name))
    assert result.failed == 0
