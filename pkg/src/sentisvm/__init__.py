"""Three-class sentiment classification for product reviews.

Pipeline: CSV corpus -> tokenization -> feature lexicon -> TF-IDF or binary
vectors -> pairwise soft-margin linear SVMs (one-vs-one vote) -> confusion
matrix report. A small CLI and HTTP service front the same model files.
"""

from .corpus import (
    Corpus,
    POLARITIES,
    Polarity,
    ReviewRecord,
    load_corpus,
    save_corpus,
    split_corpus,
)
from .errors import SentiSvmError
from .evaluate import (
    ConfusionMatrix,
    EvalReport,
    accuracy,
    build_confusion,
    f_measure,
    precision,
    recall,
    render_json,
    render_text,
    report,
)
from .features import FeatureLexicon, build_lexicon, bundled_seed_terms, load_lexicon, save_lexicon
from .svm import (
    PAIRS,
    BinarySvmModel,
    MulticlassModel,
    SvmParams,
    classify_text,
    decision_value,
    decision_values,
    kkt_violations,
    load_model,
    predict,
    save_model,
    smo_train,
    train_binary,
    train_multiclass,
)
from .tokenize import tokenize
from .vectorize import (
    Instance,
    InstanceSet,
    WeightingScheme,
    inverse_doc_frequency,
    term_frequency,
    vectorize_corpus,
    vectorize_document,
    vectorize_single,
)

__version__ = "0.1.0"

__all__ = [
    "BinarySvmModel",
    "ConfusionMatrix",
    "Corpus",
    "EvalReport",
    "FeatureLexicon",
    "Instance",
    "InstanceSet",
    "MulticlassModel",
    "PAIRS",
    "POLARITIES",
    "Polarity",
    "ReviewRecord",
    "SentiSvmError",
    "SvmParams",
    "WeightingScheme",
    "accuracy",
    "build_confusion",
    "build_lexicon",
    "bundled_seed_terms",
    "classify_text",
    "decision_value",
    "decision_values",
    "f_measure",
    "inverse_doc_frequency",
    "kkt_violations",
    "load_corpus",
    "load_lexicon",
    "load_model",
    "precision",
    "predict",
    "recall",
    "render_json",
    "render_text",
    "report",
    "save_corpus",
    "save_lexicon",
    "save_model",
    "smo_train",
    "split_corpus",
    "term_frequency",
    "tokenize",
    "train_binary",
    "train_multiclass",
    "vectorize_corpus",
    "vectorize_document",
    "vectorize_single",
]
