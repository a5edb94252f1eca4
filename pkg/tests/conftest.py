import json
import os
from fractions import Fraction

import pytest

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def load_golden_polynomials(name):
    """Golden polynomial files: {str(n): [{partition, num, den}, ...]}."""
    with open(os.path.join(GOLDEN_DIR, name)) as fh:
        raw = json.load(fh)
    return {
        int(n): {
            tuple(t["partition"]): Fraction(int(t["num"]), int(t["den"]))
            for t in terms
        }
        for n, terms in raw.items()
    }


def load_golden_genus_table():
    with open(os.path.join(GOLDEN_DIR, "genus_table.json")) as fh:
        raw = json.load(fh)
    return {
        (entry["degree"], entry["genus"]): Fraction(int(entry["num"]), int(entry["den"]))
        for entry in raw
    }


@pytest.fixture(scope="session")
def golden_real():
    return load_golden_polynomials("real_connected.json")


@pytest.fixture(scope="session")
def golden_complex():
    return load_golden_polynomials("complex_connected.json")


@pytest.fixture(scope="session")
def golden_genus():
    return load_golden_genus_table()


@pytest.fixture(scope="session")
def real13():
    from origami.series import real_series

    return real_series(13, connected=True)


@pytest.fixture(scope="session")
def complex15():
    from origami.series import complex_series

    return complex_series(15, connected=True)
