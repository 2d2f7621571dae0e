from pathlib import Path

import pytest

from hopfk import formats
from hopfk.galois import crossed_product

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "hopfk" / "fixtures"


def load(name):
    return formats.load(FIXTURES / name).value


def extension(name):
    """The comodule algebra a fixture describes (Hopf algebras over themselves)."""
    v = load(name)
    if isinstance(v, formats.CrossedProductSpec):
        return crossed_product(v, name=name)
    if hasattr(v, "as_comodule_algebra"):
        return v.as_comodule_algebra
    return v


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
