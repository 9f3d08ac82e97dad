"""The feature lexicon: which terms become vector attributes.

A lexicon is an ordered list of unique lowercase terms plus the training
statistics that inverse-document-frequency needs later: per-term document
frequency and the training document count, both frozen at build time.

File format (UTF-8 text): line 1 ``version 1``, line 2 ``D <doc_count>``,
then one ``<term> <doc_freq>`` line per term in lexicon order.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field

from .corpus import Corpus
from .errors import EmptyLexicon, FileFormatError, FormatVersionMismatch, UnlabeledRecord
from .tokenize import tokenize

LEXICON_FORMAT_VERSION = 1


@dataclass(frozen=True)
class FeatureLexicon:
    """Ordered term vocabulary with frozen training document statistics."""

    terms: tuple[str, ...]
    doc_freq: dict[str, int]
    train_doc_count: int
    schema_version: int = LEXICON_FORMAT_VERSION
    _index: dict[str, int] = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self):
        if not self.terms:
            raise EmptyLexicon("a lexicon needs at least one term")
        if self.train_doc_count < 1:
            raise ValueError("train_doc_count must be at least 1")
        seen = set()
        for t in self.terms:
            if not t or t != t.lower() or any(c.isspace() for c in t):
                raise ValueError(f"bad lexicon term {t!r}")
            if t in seen:
                raise ValueError(f"duplicate lexicon term {t!r}")
            seen.add(t)
        if set(self.doc_freq) != seen:
            raise ValueError("doc_freq keys must match terms exactly")
        for t, df in self.doc_freq.items():
            if not 0 <= df <= self.train_doc_count:
                raise ValueError(f"doc_freq[{t!r}]={df} outside [0, {self.train_doc_count}]")
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.terms)})

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, term: str) -> bool:
        return term in self._index

    def index_of(self, term: str) -> int:
        return self._index[term]


def build_lexicon(
    train: Corpus,
    min_doc_freq: int = 1,
    top_k: int | None = None,
    seed_terms: list[str] | None = None,
    include_title: bool = True,
) -> FeatureLexicon:
    """Derive a lexicon from a labeled training corpus.

    Candidates are all tokens whose document frequency reaches
    ``min_doc_freq``; ``top_k`` then keeps the most frequent (ties broken
    lexicographically). Seed terms are always included, even when the corpus
    never contains them. Final order is descending document frequency, then
    lexicographic, which makes the build fully deterministic.
    """
    if len(train) == 0:
        raise EmptyLexicon("training corpus is empty")
    doc_freq: dict[str, int] = {}
    for rec in train:
        if rec.human_label is None:
            raise UnlabeledRecord(rec.id)
        for token in set(tokenize(rec.text(include_title=include_title))):
            doc_freq[token] = doc_freq.get(token, 0) + 1

    candidates = [t for t, df in doc_freq.items() if df >= min_doc_freq]
    candidates.sort(key=lambda t: (-doc_freq[t], t))
    if top_k is not None:
        candidates = candidates[:top_k]

    chosen = set(candidates)
    if seed_terms:
        for raw in seed_terms:
            term = raw.strip().lower()
            if not term or any(c.isspace() for c in term):
                raise ValueError(f"bad seed term {raw!r}")
            chosen.add(term)
    if not chosen:
        raise EmptyLexicon(
            f"no term reaches min_doc_freq={min_doc_freq} and no seed terms were given"
        )

    freqs = {t: doc_freq.get(t, 0) for t in chosen}
    ordered = tuple(sorted(chosen, key=lambda t: (-freqs[t], t)))
    return FeatureLexicon(terms=ordered, doc_freq=freqs, train_doc_count=len(train))


def save_lexicon(lexicon: FeatureLexicon, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_lexicon(lexicon))


def format_lexicon(lexicon: FeatureLexicon) -> str:
    lines = [f"version {lexicon.schema_version}", f"D {lexicon.train_doc_count}"]
    lines.extend(f"{t} {lexicon.doc_freq[t]}" for t in lexicon.terms)
    return "\n".join(lines) + "\n"


def load_lexicon(path: str) -> FeatureLexicon:
    with open(path, encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    return parse_lexicon(lines)


def parse_lexicon(lines: list[str]) -> FeatureLexicon:
    """Parse the lexicon text format from a list of lines."""
    if len(lines) < 2:
        raise FileFormatError("lexicon file truncated before header")
    tag, _, version = lines[0].partition(" ")
    if tag != "version":
        raise FileFormatError(f"expected version line, got {lines[0]!r}")
    if version != str(LEXICON_FORMAT_VERSION):
        raise FormatVersionMismatch(version, str(LEXICON_FORMAT_VERSION))
    tag, _, count = lines[1].partition(" ")
    if tag != "D" or not count.isdigit():
        raise FileFormatError(f"expected document-count line, got {lines[1]!r}")

    terms: list[str] = []
    doc_freq: dict[str, int] = {}
    for line in lines[2:]:
        if not line:
            continue
        parts = line.split(" ")
        if len(parts) != 2:
            raise FileFormatError(f"bad term line {line!r}")
        term, df = parts
        try:
            doc_freq[term] = int(df)
        except ValueError:
            raise FileFormatError(f"bad doc_freq in line {line!r}") from None
        terms.append(term)
    return FeatureLexicon(terms=tuple(terms), doc_freq=doc_freq, train_doc_count=int(count))


def bundled_seed_terms() -> list[str]:
    """The default sentiment seed vocabulary shipped with the package."""
    text = importlib.resources.files("sentisvm").joinpath("data/seed_terms.txt").read_text("utf-8")
    return [ln.strip() for ln in text.splitlines() if ln.strip()]
