"""Shared fixtures; puts modules/ and the CLI script on sys.path"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "modules"))
sys.path.insert(0, str(ROOT))

from catcheck_monoidal import FiniteSetCategory, MatrixCategory, ScalarRing  # noqa: E402
from catcheck_schema import load  # noqa: E402
from catcheck_utils import CORPUS_ENV_VAR  # noqa: E402

CORPUS = ROOT / "corpus"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture(autouse=True)
def _no_corpus_override(monkeypatch):
    monkeypatch.delenv(CORPUS_ENV_VAR, raising=False)


@pytest.fixture
def corpus_path():
    def path(name):
        return str(CORPUS / name)
    return path


@pytest.fixture
def description():
    def parsed(name):
        return load(CORPUS / name)
    return parsed


@pytest.fixture
def golden_dir():
    return GOLDEN


@pytest.fixture
def f2():
    return MatrixCategory(ScalarRing.prime_field(2))


@pytest.fixture
def f3():
    return MatrixCategory(ScalarRing.prime_field(3))


@pytest.fixture
def rationals():
    return MatrixCategory(ScalarRing.rationals())


@pytest.fixture
def finset():
    return FiniteSetCategory()
