import random

import pytest

from rectdist import Barcode, parse_rectangle


def rect(text):
    return parse_rectangle(text)


def barcode(*texts, dim=None):
    return Barcode(tuple(rect(t) for t in texts), dim)


@pytest.fixture
def rng():
    return random.Random(20240611)
