from __future__ import annotations

from pathlib import Path

import pytest

from sentisvm.corpus import load_corpus
from sentisvm.features import build_lexicon, bundled_seed_terms
from sentisvm.svm import SvmParams, train_multiclass
from sentisvm.vectorize import WeightingScheme, vectorize_corpus

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "sentisvm" / "data"


@pytest.fixture(scope="session")
def train_corpus():
    return load_corpus(str(DATA_DIR / "synthetic_train.csv"), require_labels=True)


@pytest.fixture(scope="session")
def test_corpus():
    return load_corpus(str(DATA_DIR / "synthetic_test.csv"), require_labels=True)


@pytest.fixture(scope="session")
def lexicon(train_corpus):
    return build_lexicon(train_corpus, min_doc_freq=2, seed_terms=bundled_seed_terms())


@pytest.fixture(scope="session")
def trained_model(train_corpus, lexicon):
    scheme = WeightingScheme.TFIDF
    data = vectorize_corpus(train_corpus, lexicon, scheme)
    return train_multiclass(data, lexicon, scheme, SvmParams())


@pytest.fixture(scope="session")
def train_instances(train_corpus, lexicon):
    return vectorize_corpus(train_corpus, lexicon, WeightingScheme.TFIDF)
