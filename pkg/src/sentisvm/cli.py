"""Command-line pipeline: build features, train, evaluate, classify, serve.

Exit codes are a contract for scripted callers: 0 success, 1 internal or
environment error, 2 input file not found, 3 domain validation error.
"""

from __future__ import annotations

import functools
import socket
import sys

import click

from .corpus import Corpus, ReviewRecord, load_corpus, save_corpus, split_corpus
from .errors import MissingLabel, SentiSvmError
from .evaluate import build_confusion, render_json, render_text, report
from .features import build_lexicon, load_lexicon, save_lexicon
from .svm import (
    SvmParams,
    load_model,
    predict,
    save_model,
    train_multiclass,
)
from .vectorize import WeightingScheme, vectorize_corpus, vectorize_single

EXIT_INTERNAL = 1
EXIT_NOT_FOUND = 2
EXIT_INVALID = 3


def _mapped_exit_codes(fn):
    """Translate exceptions into the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except FileNotFoundError as exc:
            click.echo(f"error: input not found: {exc.filename or exc}", err=True)
            sys.exit(EXIT_NOT_FOUND)
        except SentiSvmError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INTERNAL)

    return wrapper


def _read_seed_terms(path: str | None) -> list[str] | None:
    if path is None:
        return None
    with open(path, encoding="utf-8") as fh:
        return [ln.strip() for ln in fh if ln.strip()]


def _scheme_option(fn):
    return click.option(
        "--scheme",
        type=click.Choice([s.value for s in WeightingScheme]),
        default=WeightingScheme.TFIDF.value,
        show_default=True,
        help="Term weighting used to vectorize documents.",
    )(fn)


def _svm_options(fn):
    for opt in (
        click.option("-C", "c_value", type=float, default=1.0, show_default=True,
                     help="Slack penalty."),
        click.option("--tol", type=float, default=1e-3, show_default=True,
                     help="KKT tolerance."),
        click.option("--max-passes", type=int, default=10, show_default=True,
                     help="Consecutive sweeps without an update before stopping."),
    ):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Three-class sentiment classifier for product reviews."""


@main.group()
def features():
    """Feature lexicon commands."""


@features.command("build")
@click.option("--train", "train_path", required=True, help="Labeled training CSV.")
@click.option("--lexicon", "lexicon_path", required=True, help="Output lexicon file.")
@click.option("--min-doc-freq", type=int, default=1, show_default=True,
              help="Drop terms seen in fewer training documents.")
@click.option("--top-k", type=int, default=None,
              help="Keep only the most document-frequent candidates.")
@click.option("--seed-terms", "seed_terms_path", default=None,
              help="File of terms always included, one per line.")
@_mapped_exit_codes
def features_build(train_path, lexicon_path, min_doc_freq, top_k, seed_terms_path):
    """Derive the feature lexicon from a labeled training corpus."""
    train = load_corpus(train_path, require_labels=True)
    lexicon = build_lexicon(
        train,
        min_doc_freq=min_doc_freq,
        top_k=top_k,
        seed_terms=_read_seed_terms(seed_terms_path),
    )
    save_lexicon(lexicon, lexicon_path)
    click.echo(f"lexicon: {len(lexicon)} terms from {len(train)} documents")
    head = ", ".join(lexicon.terms[:10])
    click.echo(f"top terms: {head}")


@main.command("train")
@click.option("--train", "train_path", required=True, help="Labeled training CSV.")
@click.option("--lexicon", "lexicon_path", required=True, help="Lexicon file.")
@click.option("--model", "model_path", required=True, help="Output model file.")
@_scheme_option
@_svm_options
@click.option("--clamp-idf", is_flag=True, help="Floor negative idf values at zero.")
@_mapped_exit_codes
def train(train_path, lexicon_path, model_path, scheme, c_value, tol, max_passes, clamp_idf):
    """Train the three pairwise separators and write the model file."""
    corpus = load_corpus(train_path, require_labels=True)
    lexicon = load_lexicon(lexicon_path)
    weighting = WeightingScheme.parse(scheme)
    params = SvmParams(C=c_value, tol=tol, max_passes=max_passes)
    data = vectorize_corpus(corpus, lexicon, weighting, clamp_idf=clamp_idf)
    model = train_multiclass(data, lexicon, weighting, params, clamp_idf=clamp_idf)
    save_model(model, model_path)
    for m in model.models:
        click.echo(
            f"pair {m.pos_label.value}/{m.neg_label.value}: "
            f"{m.support_count} support vectors of {m.training_size}, "
            f"margin {m.margin:.6f}, {m.iterations} updates"
        )
        if not m.converged:
            click.echo(
                f"warning: pair {m.pos_label.value}/{m.neg_label.value} "
                "did not converge within the iteration cap",
                err=True,
            )
    click.echo(f"model written to {model_path}")


@main.command("evaluate")
@click.option("--test", "test_path", required=True, help="Labeled test CSV.")
@click.option("--model", "model_path", required=True, help="Trained model file.")
@click.option("--report", "report_path", default=None,
              help="Also write the report to this file.")
@click.option("--annotated", "annotated_path", default=None,
              help="Write the test CSV with machine labels filled in.")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@_mapped_exit_codes
def evaluate(test_path, model_path, report_path, annotated_path, as_json):
    """Classify a labeled test corpus and print the evaluation report."""
    try:
        corpus = load_corpus(test_path, require_labels=True)
    except MissingLabel as exc:
        raise SentiSvmError(f"labels required for evaluation ({exc})") from None
    model = load_model(model_path)

    annotated = []
    pairs = []
    for rec in corpus:
        instance = vectorize_single(
            rec.text(), model.lexicon, model.scheme, clamp_idf=model.clamp_idf
        )
        machine, _ = predict(model, instance)
        pairs.append((machine, rec.human_label))
        annotated.append(
            ReviewRecord(
                id=rec.id,
                category=rec.category,
                title=rec.title,
                body=rec.body,
                human_label=rec.human_label,
                machine_label=machine,
            )
        )

    rendered = (render_json if as_json else render_text)(report(build_confusion(pairs)))
    click.echo(rendered, nl=False)
    if report_path is not None:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    if annotated_path is not None:
        save_corpus(Corpus(records=tuple(annotated), source=test_path), annotated_path)


@main.command("classify")
@click.argument("text", required=False)
@click.option("--model", "model_path", required=True, help="Trained model file.")
@_mapped_exit_codes
def classify(text, model_path):
    """Label one text (argument) or each line read from stdin."""
    model = load_model(model_path)
    lines = [text] if text is not None else (ln.rstrip("\n") for ln in sys.stdin)
    for line in lines:
        instance = vectorize_single(
            line, model.lexicon, model.scheme, clamp_idf=model.clamp_idf
        )
        label, decisions = predict(model, instance)
        shown = " ".join(
            f"{plus.value}/{minus.value}={value:.6f}"
            for (plus, minus), value in decisions.items()
        )
        click.echo(f"{label.value}\t{shown}")


@main.command("serve")
@click.option("--model", "model_path", required=True, help="Trained model file.")
@click.option("--port", type=int, default=8000, show_default=True)
@_mapped_exit_codes
def serve(model_path, port):
    """Serve /classify and /health over HTTP until interrupted."""
    import uvicorn

    from .service import create_app

    model = load_model(model_path)
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind(("127.0.0.1", port))
    except OSError:
        click.echo(f"error: port {port} is already in use", err=True)
        sys.exit(EXIT_INTERNAL)
    finally:
        probe.close()
    uvicorn.run(create_app(model), host="127.0.0.1", port=port, log_level="warning")


@main.command("split")
@click.argument("input_csv")
@click.option("--train", "train_path", required=True, help="Output training CSV.")
@click.option("--test", "test_path", required=True, help="Output test CSV.")
@click.option("--train-count", type=int, required=True,
              help="Number of records to place in the training half.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Sampling seed; same seed reproduces the same split.")
@_mapped_exit_codes
def split(input_csv, train_path, test_path, train_count, seed):
    """Split a labeled CSV into train and test halves."""
    corpus = load_corpus(input_csv, require_labels=True)
    train_half, test_half = split_corpus(corpus, train_count, seed)
    save_corpus(train_half, train_path)
    save_corpus(test_half, test_path)
    click.echo(f"train: {len(train_half)} records -> {train_path}")
    click.echo(f"test: {len(test_half)} records -> {test_path}")


if __name__ == "__main__":
    main()
