import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from mrantipode.algebra import Element  # noqa: E402


@pytest.fixture
def el():
    """Build an Element from ``{"4312": -1, ...}`` style dicts of digit words."""

    def build(terms):
        if isinstance(terms, str):
            terms = {terms: 1}
        return Element({tuple(int(c) for c in k) if k != "e" else (): v for k, v in terms.items()})

    return build
