import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from tropcalc.config import Config
from tropcalc.special import PeriodicProfile


@pytest.fixture(autouse=True)
def reset_config():
    """Every test starts from the default configuration."""
    Config.reset()
    yield
    Config.reset()


@pytest.fixture
def cli_runner():
    """Provide a Click CLI test runner."""
    return CliRunner()


@pytest.fixture
def write_doc(tmp_path):
    """Write a JSON document to a temporary file and return its path."""

    def _write(doc, name="f.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)

    return _write


@pytest.fixture
def tent_profile():
    """Profile of the tent wave pi^(1,1): 0 at t=0, peak 1/4 at t=1/2."""
    return PeriodicProfile.sawtooth(1, 1)


@pytest.fixture
def mixed_points():
    """Lattice and non-lattice rationals in [-8, 8]."""
    return (
        [Fraction(k) for k in range(-8, 9)]
        + [Fraction(k, 2) for k in range(-15, 16, 2)]
        + [Fraction(k, 7) for k in range(-50, 51, 9)]
    )
