"""Turn documents into fixed-width numeric vectors over a lexicon.

Two weighting schemes:

* binary presence: component is 1.0 when the lexicon term occurs in the
  document, else 0.0.
* tf-idf: tf(t, d) is the raw count of t in d divided by the largest raw
  count among lexicon terms present in d; idf(t) is ln(D / (df(t) + 1))
  with D and df frozen in the lexicon at build time. The +1 in the
  denominator means a term present in every training document gets a
  negative idf; that is kept as-is unless clamp_idf floors idf at zero.

The log base is fixed to natural log; any other fixed base would only
rescale every idf uniformly, but the choice has to be pinned for
reproducibility.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .corpus import Corpus, Polarity
from .errors import UnknownTerm, UnlabeledRecord
from .features import FeatureLexicon
from .tokenize import TokenSequence, tokenize


class WeightingScheme(enum.Enum):
    BINARY_PRESENCE = "binary"
    TFIDF = "tfidf"

    @classmethod
    def parse(cls, text: str) -> "WeightingScheme":
        for scheme in cls:
            if scheme.value == text:
                return scheme
        raise ValueError(f"unknown weighting scheme {text!r}")


@dataclass(frozen=True)
class Instance:
    """One vectorized document: a weight vector plus an optional label."""

    weights: np.ndarray
    label: Polarity | None = None

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.label == other.label and np.array_equal(self.weights, other.weights)

    def __hash__(self):
        return hash((self.label, self.weights.tobytes()))


@dataclass(frozen=True)
class InstanceSet:
    """A batch of instances sharing one vector alignment.

    The width is carried explicitly so empty batches still know their
    schema; lexicon_version records which lexicon format produced them.
    """

    instances: tuple[Instance, ...]
    width: int
    lexicon_version: int = 1

    def __post_init__(self):
        for inst in self.instances:
            if inst.weights.shape != (self.width,):
                raise ValueError(
                    f"instance width {inst.weights.shape} != declared ({self.width},)"
                )

    def __len__(self) -> int:
        return len(self.instances)

    def __iter__(self):
        return iter(self.instances)


def _present_counts(tokens: TokenSequence, lexicon: FeatureLexicon) -> dict[str, int]:
    """Raw occurrence counts of the lexicon terms present in the tokens."""
    counts: dict[str, int] = {}
    for token in tokens:
        if token in lexicon:
            counts[token] = counts.get(token, 0) + 1
    return counts


def term_frequency(term: str, doc_tokens: TokenSequence, lexicon: FeatureLexicon) -> float:
    """Normalized frequency of one lexicon term within a tokenized document.

    The raw count is divided by the maximum raw count among lexicon terms
    present in the document, so the most frequent present term maps to 1.0;
    a document containing no lexicon term yields 0 for every term.
    """
    if term not in lexicon:
        raise UnknownTerm(term)
    counts = _present_counts(doc_tokens, lexicon)
    if not counts:
        return 0.0
    return counts.get(term, 0) / max(counts.values())


def inverse_doc_frequency(term: str, lexicon: FeatureLexicon, clamp_idf: bool = False) -> float:
    """ln(D / (df + 1)) from the lexicon's frozen training statistics.

    With df + 1 > D the value is negative; the formula is applied verbatim
    unless clamp_idf floors it at zero.
    """
    if term not in lexicon:
        raise UnknownTerm(term)
    idf = math.log(lexicon.train_doc_count / (lexicon.doc_freq[term] + 1))
    if clamp_idf and idf < 0.0:
        return 0.0
    return idf


def _idf_vector(lexicon: FeatureLexicon, clamp_idf: bool) -> np.ndarray:
    idf = np.array(
        [math.log(lexicon.train_doc_count / (lexicon.doc_freq[t] + 1)) for t in lexicon.terms],
        dtype=np.float64,
    )
    if clamp_idf:
        idf = np.maximum(idf, 0.0)
    return idf


def vectorize_document(
    text: str,
    lexicon: FeatureLexicon,
    scheme: WeightingScheme,
    clamp_idf: bool = False,
    label: Polarity | None = None,
) -> Instance:
    tokens = tokenize(text)
    weights = np.zeros(len(lexicon), dtype=np.float64)
    if scheme is WeightingScheme.BINARY_PRESENCE:
        for token in set(tokens):
            if token in lexicon:
                weights[lexicon.index_of(token)] = 1.0
    else:
        idf = _idf_vector(lexicon, clamp_idf)
        counts = _present_counts(tokens, lexicon)
        if counts:
            peak = max(counts.values())
            for term, count in counts.items():
                i = lexicon.index_of(term)
                weights[i] = (count / peak) * idf[i]
    return Instance(weights=weights, label=label)


def vectorize_corpus(
    corpus: Corpus,
    lexicon: FeatureLexicon,
    scheme: WeightingScheme,
    clamp_idf: bool = False,
    include_title: bool = True,
    attach_labels: bool = True,
) -> InstanceSet:
    """Vectorize every record, in order.

    With attach_labels each record must carry a human label, which is
    copied onto its instance; otherwise instances come out unlabeled.
    """
    instances = []
    for rec in corpus:
        if attach_labels and rec.human_label is None:
            raise UnlabeledRecord(rec.id)
        instances.append(
            vectorize_document(
                rec.text(include_title=include_title),
                lexicon,
                scheme,
                clamp_idf=clamp_idf,
                label=rec.human_label if attach_labels else None,
            )
        )
    return InstanceSet(
        instances=tuple(instances),
        width=len(lexicon),
        lexicon_version=lexicon.schema_version,
    )


def vectorize_single(
    text: str,
    lexicon: FeatureLexicon,
    scheme: WeightingScheme,
    clamp_idf: bool = False,
) -> Instance:
    """Vectorize one unlabeled text, e.g. for classify or the HTTP service."""
    return vectorize_document(text, lexicon, scheme, clamp_idf=clamp_idf, label=None)
