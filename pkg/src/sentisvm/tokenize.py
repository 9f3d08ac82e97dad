"""Text normalization for frequency counting.

A token is a maximal run of letters, digits or apostrophes, lowercased;
every other character separates tokens. Apostrophes are stripped from token
edges so quoting does not leak into the vocabulary, but interior ones
survive ("don't" stays one token). No stemming and no stop-word removal:
lexicon terms are surface forms and matching is exact-token.
"""

from __future__ import annotations

import re

TokenSequence = list[str]

# [^\W_] = unicode letters and digits (word chars minus underscore);
# accented review text tokenizes like plain ASCII.
_TOKEN_RE = re.compile(r"(?:[^\W_]|')+", re.UNICODE)


def tokenize(text: str) -> TokenSequence:
    """Split text into lowercase word tokens; total on any input."""
    out = []
    for run in _TOKEN_RE.findall(text.lower()):
        token = run.strip("'")
        if token:
            out.append(token)
    return out
