import sys
from pathlib import Path

import pytest

from leibnizkit.algebra import Algebra, check_left_leibniz

HERE = Path(__file__).parent
CORPUS = HERE / "corpus"
sys.path.insert(0, str(HERE))


def corpus_files():
    return sorted(p for p in CORPUS.glob("*.json") if p.name != "broken.json")


def validated_corpus():
    out = []
    for p in corpus_files():
        a = Algebra.load(p)
        if not check_left_leibniz(a):
            out.append((p.name, a))
    return out


@pytest.fixture
def corpus_dir():
    return CORPUS
