from pathlib import Path

import pytest

from gen_layouts import k4_square, two_segment_cross

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def cross_layout():
    return two_segment_cross()


@pytest.fixture
def k4_layout():
    return k4_square()


@pytest.fixture
def data_dir():
    return DATA_DIR
