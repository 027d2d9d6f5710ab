import json
from pathlib import Path

import pytest

from dgcyl.semifree import SemiFreePresentation

FIXTURES = Path(__file__).parent / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def presentation_2_1():
    return SemiFreePresentation.from_json(load("presentation_2_1.json"))
