from __future__ import annotations

import pytest

from corpus import build_corpus
from groupcolor import AbelianGroup

GROUP_SPECS = ("Z2", "Z3", "Z4", "Z2x2", "Z5")


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def groups():
    return tuple(AbelianGroup.parse(spec) for spec in GROUP_SPECS)
