"""Exception types shared across the package.

Everything derives from SentiSvmError so callers (notably the CLI) can map
domain failures to a single exit-code class without enumerating modules.
"""

from __future__ import annotations


class SentiSvmError(Exception):
    """Base class for all domain errors raised by this package."""


# --- corpus ---------------------------------------------------------------

class MalformedRow(SentiSvmError):
    def __init__(self, row: int, reason: str):
        super().__init__(f"row {row}: {reason}")
        self.row = row
        self.reason = reason


class MissingLabel(SentiSvmError):
    def __init__(self, row: int):
        super().__init__(f"row {row}: label required but empty")
        self.row = row


class UnknownLabel(SentiSvmError):
    def __init__(self, row: int, text: str):
        super().__init__(f"row {row}: unknown label {text!r}")
        self.row = row
        self.text = text


class DuplicateId(SentiSvmError):
    def __init__(self, record_id: int):
        super().__init__(f"duplicate record id {record_id}")
        self.record_id = record_id


class BadSplit(SentiSvmError):
    pass


# --- features -------------------------------------------------------------

class EmptyLexicon(SentiSvmError):
    pass


class UnlabeledRecord(SentiSvmError):
    def __init__(self, record_id: int):
        super().__init__(f"record {record_id} has no human label")
        self.record_id = record_id


class FormatVersionMismatch(SentiSvmError):
    def __init__(self, found: str, expected: str):
        super().__init__(f"unsupported format version {found!r}, expected {expected!r}")
        self.found = found
        self.expected = expected


class FileFormatError(SentiSvmError):
    """A lexicon or model file is structurally broken."""


# --- vectorize ------------------------------------------------------------

class UnknownTerm(SentiSvmError):
    def __init__(self, term: str):
        super().__init__(f"term {term!r} is not in the lexicon")
        self.term = term


# --- svm ------------------------------------------------------------------

class DimensionMismatch(SentiSvmError):
    def __init__(self, expected: int, got: int):
        super().__init__(f"instance has {got} weights, model expects {expected}")
        self.expected = expected
        self.got = got


class SingleClassData(SentiSvmError):
    pass


class MissingClass(SentiSvmError):
    def __init__(self, polarity):
        super().__init__(f"training data contains no {polarity.value!r} instance")
        self.polarity = polarity


class InvalidParams(SentiSvmError):
    pass
