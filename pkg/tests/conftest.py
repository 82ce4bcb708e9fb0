import sys
from pathlib import Path

import pytest
from hypothesis import settings

from itersocle.problem import parse_polynomial

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(Path(__file__).resolve().parent))

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def P(text, names=("x", "y")):
    return parse_polynomial(text, names)


@pytest.fixture
def root():
    return ROOT
