"""Regenerate the bundled synthetic review corpus.

Writes src/sentisvm/data/synthetic_train.csv (60 records, 20 per class) and
synthetic_test.csv (30 records, 10 per class), then proves the bundle is
usable: the standard pipeline trained on the train half must reach
macro-averaged F >= 0.90 on the test half, and three canonical example
sentences must classify as expected. Generation is seeded, so reruns
reproduce the committed files byte for byte.

Run from the repository root: python3 tools/gen_synthetic_corpus.py
"""

from __future__ import annotations

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sentisvm.corpus import Corpus, Polarity, ReviewRecord, save_corpus
from sentisvm.evaluate import build_confusion, f_measure, report
from sentisvm.features import build_lexicon, bundled_seed_terms
from sentisvm.svm import SvmParams, classify_text, predict, train_multiclass
from sentisvm.vectorize import WeightingScheme, vectorize_corpus, vectorize_single

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "sentisvm" / "data"
SEED = 20240515

WORDS = {
    Polarity.POSITIVE: [
        "beautiful", "pretty", "cute", "good", "great", "nice", "comfortable",
        "love", "happy", "glad", "pleased", "excited", "recommend", "perfect",
        "soft", "lovely",
    ],
    Polarity.NEGATIVE: [
        "tight", "stiff", "poor", "wrong", "weird", "hate", "disappointed",
        "stupid", "return", "returned", "terrible", "awful", "broke", "cheap",
        "refund", "useless",
    ],
    Polarity.NEUTRAL: [
        "ok", "okay", "alright", "average", "fine", "decent", "fair",
        "expected", "plain", "ordinary", "acceptable", "standard",
    ],
}

NOUNS = ["shoes", "shirt", "dress", "bag", "watch", "jacket", "belt", "scarf"]
CATEGORIES = ["clothing", "shoes", "accessories"]

TEMPLATES = {
    Polarity.POSITIVE: [
        "I {w1} this {noun}, it is {w2} and {w3}.",
        "The {noun} looks {w1} and feels {w2}. Would {w3} it to anyone.",
        "Really {w1} with my {noun}, the fit is {w2} and the color is {w3}.",
        "This {noun} is {w1}. My wife was {w2} and I am {w3} too.",
    ],
    Polarity.NEGATIVE: [
        "I {w1} this {noun}, it is {w2} and {w3}.",
        "The {noun} arrived {w1} and the size was {w2}. I {w3} it the same week.",
        "Very {w1} with my {noun}, the material is {w2} and the stitching is {w3}.",
        "This {noun} is {w1}. The buckle {w2} after two days so I asked for a {w3}.",
    ],
    Polarity.NEUTRAL: [
        "The {noun} is {w1}, nothing more. It is {w2} and {w3} for the price.",
        "It is {w1}. The {noun} works as {w2}, a {w3} purchase overall.",
        "An {w1} {noun}. Quality is {w2} and the design is {w3}.",
        "This {noun} is just {w1}. Not bad, not great, simply {w2} and {w3}.",
    ],
}

TITLES = {
    Polarity.POSITIVE: ["{w1} {noun}", "so {w1}", "{w1} and {w2}"],
    Polarity.NEGATIVE: ["{w1} {noun}", "had to {w1}", "{w1} and {w2}"],
    Polarity.NEUTRAL: ["{w1} {noun}", "just {w1}", "{w1} and {w2}"],
}

CANONICAL_EXAMPLES = [
    ("love it, beautiful and comfortable", Polarity.POSITIVE),
    ("hate it, returned, disappointed", Polarity.NEGATIVE),
    ("it is okay", Polarity.NEUTRAL),
]

MACRO_F_FLOOR = 0.90


def make_record(rng: random.Random, rec_id: int, polarity: Polarity) -> ReviewRecord:
    pool = WORDS[polarity]
    w = rng.sample(pool, 4)
    noun = rng.choice(NOUNS)
    title = rng.choice(TITLES[polarity]).format(w1=w[0], w2=w[1], noun=noun)
    body = rng.choice(TEMPLATES[polarity]).format(w1=w[1], w2=w[2], w3=w[3], noun=noun)
    return ReviewRecord(
        id=rec_id,
        category=rng.choice(CATEGORIES),
        title=title,
        body=body,
        human_label=polarity,
    )


def generate() -> tuple[Corpus, Corpus]:
    rng = random.Random(SEED)
    train, test = [], []
    rec_id = 1
    for polarity in (Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL):
        for k in range(30):
            rec = make_record(rng, rec_id, polarity)
            (train if k < 20 else test).append(rec)
            rec_id += 1
    train.sort(key=lambda r: r.id)
    test.sort(key=lambda r: r.id)
    return Corpus(records=tuple(train)), Corpus(records=tuple(test))


def verify(train: Corpus, test: Corpus) -> None:
    lexicon = build_lexicon(train, min_doc_freq=2, seed_terms=bundled_seed_terms())
    scheme = WeightingScheme.TFIDF
    params = SvmParams()
    model = train_multiclass(
        vectorize_corpus(train, lexicon, scheme), lexicon, scheme, params
    )
    for m in model.models:
        assert m.converged, f"pair {m.pos_label}/{m.neg_label} did not converge"

    pairs = []
    for rec in test:
        machine, _ = predict(model, vectorize_single(rec.text(), lexicon, scheme))
        pairs.append((machine, rec.human_label))
    rep = report(build_confusion(pairs))
    fs = [f_measure(rep.matrix, p) for p in (Polarity.POSITIVE, Polarity.NEGATIVE, Polarity.NEUTRAL)]
    assert all(f is not None for f in fs), f"undefined F in {fs}"
    macro_f = sum(fs) / len(fs)
    print(f"macro-F on held-out test half: {macro_f:.4f} (floor {MACRO_F_FLOOR})")
    assert macro_f >= MACRO_F_FLOOR, f"macro-F {macro_f:.4f} below floor"

    for text, expected in CANONICAL_EXAMPLES:
        got = classify_text(model, text)
        print(f"  {text!r} -> {got.value}")
        assert got is expected, f"{text!r} classified {got.value}, expected {expected.value}"


def main() -> None:
    train, test = generate()
    verify(train, test)
    save_corpus(train, str(DATA_DIR / "synthetic_train.csv"))
    save_corpus(test, str(DATA_DIR / "synthetic_test.csv"))
    print(f"wrote {len(train)} train and {len(test)} test records to {DATA_DIR}")


if __name__ == "__main__":
    main()
