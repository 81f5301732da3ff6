from pathlib import Path

import pytest

from heliobench import parse_corpus

DATA_DIR = Path(__file__).parent.parent / "data"

SMALL_CSV = """\
journal,category,impact_factor,eigenfactor,immediacy
J Alpha,Biology,2.0,0.01,0.5
J Beta,Biology,,0.02,0.7
J Gamma,Biology,5.5,0.005,1.1
J Delta,Chemistry,1.5,0.003,0.2
J Epsilon,Chemistry,3.25,0.004,0.9
J Alpha,Chemistry,2.0,0.01,0.5
J Zeta,Physics,8.0,0.02,2.5
J Eta,Physics,0.5,0.001,0.1
J Theta,Physics,4.0,0.006,1.3
"""


@pytest.fixture
def small_corpus():
    return parse_corpus(SMALL_CSV)


@pytest.fixture(scope="session")
def demo_csv_path():
    path = DATA_DIR / "demo_corpus.csv"
    assert path.exists(), "committed demo corpus is missing"
    return path
