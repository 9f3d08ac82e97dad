"""Labeled review datasets: loading, validation, serialization, splitting.

On-disk format is UTF-8 CSV with the header
``id,category,title,body,human_label,machine_label`` and RFC-4180 quoting,
so titles and bodies may contain commas and newlines. Label cells hold
``positive``, ``negative``, ``neutral`` (case-insensitive) or are empty.
"""

from __future__ import annotations

import csv
import enum
import random
import time
from dataclasses import dataclass, field

from .errors import BadSplit, DuplicateId, MalformedRow, MissingLabel, UnknownLabel

CSV_HEADER = ["id", "category", "title", "body", "human_label", "machine_label"]


class Polarity(enum.Enum):
    """Three-way sentiment class, in canonical order positive < negative < neutral."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @property
    def index(self) -> int:
        """Position in the canonical ordering (0, 1 or 2)."""
        return _POLARITY_INDEX[self]

    @classmethod
    def parse(cls, text: str) -> "Polarity":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"not a polarity: {text!r}") from None


POLARITIES: tuple[Polarity, ...] = (Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL)
_POLARITY_INDEX = {p: i for i, p in enumerate(POLARITIES)}


@dataclass(frozen=True)
class ReviewRecord:
    """One product review row; labels are optional until assigned."""

    id: int
    category: str
    title: str
    body: str
    human_label: Polarity | None = None
    machine_label: Polarity | None = None

    def text(self, include_title: bool = True) -> str:
        """The text that feeds tokenization: title and body, or body only."""
        if include_title and self.title:
            return self.title + "\n" + self.body
        return self.body


@dataclass(frozen=True)
class Corpus:
    """Ordered, id-unique collection of records.

    Provenance (where and when it was loaded) is carried for reporting but
    excluded from equality so that a load/save/load round trip compares equal.
    """

    records: tuple[ReviewRecord, ...]
    source: str = field(default="<memory>", compare=False)
    loaded_at: float = field(default_factory=time.time, compare=False)

    def __post_init__(self):
        seen: set[int] = set()
        for rec in self.records:
            if rec.id in seen:
                raise DuplicateId(rec.id)
            seen.add(rec.id)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def _parse_label(cell: str, row: int) -> Polarity | None:
    cell = cell.strip()
    if not cell:
        return None
    try:
        return Polarity.parse(cell)
    except ValueError:
        raise UnknownLabel(row, cell) from None


def load_corpus(path: str, require_labels: bool = False) -> Corpus:
    """Read a review CSV into a Corpus, validating every row.

    Rows are numbered from 1, header excluded. With ``require_labels`` every
    record must carry a human label (training and evaluation inputs).
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MalformedRow(0, "empty file, expected header") from None
        if header != CSV_HEADER:
            raise MalformedRow(0, f"bad header {header!r}, expected {CSV_HEADER!r}")

        records: list[ReviewRecord] = []
        seen: set[int] = set()
        for row_no, row in enumerate(reader, start=1):
            if len(row) != len(CSV_HEADER):
                raise MalformedRow(row_no, f"expected {len(CSV_HEADER)} fields, got {len(row)}")
            raw_id, category, title, body, human, machine = row
            try:
                rec_id = int(raw_id)
            except ValueError:
                raise MalformedRow(row_no, f"id {raw_id!r} is not an integer") from None
            if rec_id <= 0:
                raise MalformedRow(row_no, f"id must be positive, got {rec_id}")
            if rec_id in seen:
                raise DuplicateId(rec_id)
            seen.add(rec_id)
            if not body.strip():
                raise MalformedRow(row_no, "empty body")
            human_label = _parse_label(human, row_no)
            if require_labels and human_label is None:
                raise MissingLabel(row_no)
            records.append(
                ReviewRecord(
                    id=rec_id,
                    category=category,
                    title=title,
                    body=body,
                    human_label=human_label,
                    machine_label=_parse_label(machine, row_no),
                )
            )
    return Corpus(records=tuple(records), source=str(path))


def save_corpus(corpus: Corpus, path: str) -> None:
    """Write a Corpus back to the CSV format accepted by load_corpus."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for rec in corpus.records:
            writer.writerow(
                [
                    rec.id,
                    rec.category,
                    rec.title,
                    rec.body,
                    rec.human_label.value if rec.human_label else "",
                    rec.machine_label.value if rec.machine_label else "",
                ]
            )


def split_corpus(corpus: Corpus, train_count: int, seed: int) -> tuple[Corpus, Corpus]:
    """Deterministically partition a corpus into (train, test).

    Sampling uses Python's Mersenne Twister seeded with ``seed``; both halves
    keep the records in their original relative order, so equal inputs always
    produce identical partitions.
    """
    n = len(corpus.records)
    if not 0 < train_count < n:
        raise BadSplit(f"train_count must be in (0, {n}), got {train_count}")
    picked = set(random.Random(seed).sample(range(n), train_count))
    train = tuple(rec for i, rec in enumerate(corpus.records) if i in picked)
    test = tuple(rec for i, rec in enumerate(corpus.records) if i not in picked)
    return (
        Corpus(records=train, source=corpus.source),
        Corpus(records=test, source=corpus.source),
    )
