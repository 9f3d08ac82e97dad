"""Soft-margin linear SVM trained by sequential minimal optimization.

The solver maximizes the dual of min ½‖w‖² + C·Σξ by repeatedly picking a
pair of dual variables and solving their two-variable subproblem in closed
form. Pair selection is fully deterministic: the first index is the next
KKT violator in index order, the second is the first index (again in index
order) whose joint update actually moves. Determinism makes training
byte-reproducible, which the persistence guarantees depend on.

Multiclass classification is one-vs-one: one binary model per unordered
polarity pair, combined by majority vote with a decision-magnitude tie
break.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import POLARITIES, Polarity
from .errors import (
    DimensionMismatch,
    FileFormatError,
    FormatVersionMismatch,
    InvalidParams,
    MissingClass,
    SingleClassData,
)
from .features import FeatureLexicon, format_lexicon, parse_lexicon
from .vectorize import Instance, InstanceSet, WeightingScheme, vectorize_single

MODEL_FORMAT_VERSION = 1

# Unordered class pairs in canonical order; each tuple is (plus side, minus side).
PAIRS: tuple[tuple[Polarity, Polarity], ...] = (
    (Polarity.POSITIVE, Polarity.NEGATIVE),
    (Polarity.POSITIVE, Polarity.NEUTRAL),
    (Polarity.NEGATIVE, Polarity.NEUTRAL),
)

# Smallest dual-variable move counted as progress. Well below tol so the
# sweep loop, not this threshold, decides convergence.
_MIN_ALPHA_STEP = 1e-10


@dataclass(frozen=True)
class SvmParams:
    """Training hyperparameters.

    C is the slack penalty, tol the KKT tolerance, max_passes the number of
    consecutive full sweeps without an update that ends training, and
    max_iters a hard cap on successful pair updates (None means 10000 per
    training point).
    """

    C: float = 1.0
    tol: float = 1e-3
    max_passes: int = 10
    max_iters: int | None = None

    def __post_init__(self):
        if not self.C > 0:
            raise InvalidParams(f"C must be positive, got {self.C}")
        if not self.tol > 0:
            raise InvalidParams(f"tol must be positive, got {self.tol}")
        if self.max_passes < 1:
            raise InvalidParams(f"max_passes must be at least 1, got {self.max_passes}")
        if self.max_iters is not None and self.max_iters < 1:
            raise InvalidParams(f"max_iters must be at least 1, got {self.max_iters}")

    def iteration_cap(self, n: int) -> int:
        return self.max_iters if self.max_iters is not None else 10_000 * n


@dataclass
class SmoResult:
    """Raw solver output on (+1, -1)-labeled numeric data."""

    w: np.ndarray
    b: float
    alpha: np.ndarray
    iterations: int
    converged: bool
    dual_objective: float


def _kkt_scan(
    r: np.ndarray, alpha: np.ndarray, C: float, tol: float
) -> list[tuple[int, str, float]]:
    """KKT breaches at the current iterate; r[i] = y_i * (f(x_i) - y_i).

    A point with alpha below C must sit on or outside the margin
    (r >= -tol); a point with alpha above zero must sit on or inside it
    (r <= tol). Interior points must satisfy both. Returns (index,
    condition class, excess) per breach.
    """
    breaches = []
    for i in range(len(alpha)):
        a = alpha[i]
        kind = "interior" if 0.0 < a < C else ("zero" if a == 0.0 else "at_C")
        if a < C and r[i] < -tol:
            breaches.append((i, kind, float(-tol - r[i])))
        elif a > 0.0 and r[i] > tol:
            breaches.append((i, kind, float(r[i] - tol)))
    return breaches


def smo_train(X: np.ndarray, y: np.ndarray, params: SvmParams) -> SmoResult:
    """Solve the dual on numeric data with labels in {-1, +1}.

    Returns the model even when the iteration cap fires first; the
    converged flag records whether a final scan found the KKT conditions
    satisfied within tol.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2 or len(X) != len(y):
        raise InvalidParams("X must be 2-d with one row per label")
    if not np.all(np.isin(y, (-1.0, 1.0))):
        raise InvalidParams("labels must be -1 or +1")
    if len(set(y.tolist())) < 2:
        raise SingleClassData("training data contains a single class")

    n, d = X.shape
    C, tol = params.C, params.tol
    K = X @ X.T
    alpha = np.zeros(n)
    w = np.zeros(d)
    b = 0.0
    iterations = 0
    cap = params.iteration_cap(n)
    passes = 0

    while passes < params.max_passes and iterations < cap:
        changed = 0
        for i in range(n):
            if iterations >= cap:
                break
            e_i = float(w @ X[i]) + b - y[i]
            r_i = y[i] * e_i
            if not ((r_i < -tol and alpha[i] < C) or (r_i > tol and alpha[i] > 0)):
                continue
            for j in range(n):
                if j == i:
                    continue
                eta = 2.0 * K[i, j] - K[i, i] - K[j, j]
                if eta >= 0.0:
                    continue
                if y[i] == y[j]:
                    lo = max(0.0, alpha[i] + alpha[j] - C)
                    hi = min(C, alpha[i] + alpha[j])
                else:
                    lo = max(0.0, alpha[j] - alpha[i])
                    hi = min(C, C + alpha[j] - alpha[i])
                if lo == hi:
                    continue
                e_j = float(w @ X[j]) + b - y[j]
                a_j = alpha[j] - y[j] * (e_i - e_j) / eta
                a_j = min(hi, max(lo, a_j))
                if abs(a_j - alpha[j]) < _MIN_ALPHA_STEP:
                    continue
                a_i = alpha[i] + y[i] * y[j] * (alpha[j] - a_j)
                a_i = min(C, max(0.0, a_i))
                d_i = a_i - alpha[i]
                d_j = a_j - alpha[j]
                w = w + y[i] * d_i * X[i] + y[j] * d_j * X[j]
                b1 = b - e_i - y[i] * d_i * K[i, i] - y[j] * d_j * K[i, j]
                b2 = b - e_j - y[i] * d_i * K[i, j] - y[j] * d_j * K[j, j]
                if 0.0 < a_i < C:
                    b = b1
                elif 0.0 < a_j < C:
                    b = b2
                else:
                    b = 0.5 * (b1 + b2)
                alpha[i] = a_i
                alpha[j] = a_j
                changed += 1
                iterations += 1
                # Debug-build feasibility checks; stripped under -O.
                assert abs(float(alpha @ y)) <= 1e-10, "equality constraint drifted"
                assert 0.0 <= a_i <= C and 0.0 <= a_j <= C, "box constraint broken"
                break
        passes = passes + 1 if changed == 0 else 0

    # Recompute w exactly from the final alphas so w == sum(a_i y_i x_i)
    # holds to the last bit, independent of incremental rounding.
    w = (alpha * y) @ X
    r = y * (X @ w + b - y)
    converged = not _kkt_scan(r, alpha, C, tol)
    objective = float(np.sum(alpha) - 0.5 * float(w @ w))
    return SmoResult(
        w=w, b=float(b), alpha=alpha, iterations=iterations,
        converged=converged, dual_objective=objective,
    )


@dataclass(frozen=True, eq=False)
class BinarySvmModel:
    """One trained pairwise separator: plus side vs minus side."""

    w: np.ndarray
    b: float
    pos_label: Polarity
    neg_label: Polarity
    params: SvmParams
    training_size: int
    converged: bool
    iterations: int
    dual_objective: float
    alpha: np.ndarray | None = None

    def __post_init__(self):
        w = np.asarray(self.w, dtype=np.float64)
        w.setflags(write=False)
        object.__setattr__(self, "w", w)

    @property
    def margin(self) -> float:
        """Separating-band width 2/‖w‖ (inf for the degenerate w = 0)."""
        norm = float(np.linalg.norm(self.w))
        return 2.0 / norm if norm > 0.0 else float("inf")

    @property
    def support_count(self) -> int | None:
        if self.alpha is None:
            return None
        return int(np.count_nonzero(self.alpha))

    def decision(self, weights: np.ndarray) -> float:
        if weights.shape != self.w.shape:
            raise DimensionMismatch(self.w.shape[0], weights.shape[0])
        return float(self.w @ weights) + self.b


def train_binary(
    data: InstanceSet,
    pos_label: Polarity,
    neg_label: Polarity,
    params: SvmParams,
) -> BinarySvmModel:
    """Train one pairwise model on the instances carrying the two labels."""
    rows, ys = [], []
    for inst in data:
        if inst.label is pos_label:
            rows.append(inst.weights)
            ys.append(1.0)
        elif inst.label is neg_label:
            rows.append(inst.weights)
            ys.append(-1.0)
    for label in (pos_label, neg_label):
        if not any(inst.label is label for inst in data):
            raise MissingClass(label)
    X = np.vstack(rows)
    y = np.asarray(ys)
    result = smo_train(X, y, params)
    return BinarySvmModel(
        w=result.w,
        b=result.b,
        pos_label=pos_label,
        neg_label=neg_label,
        params=params,
        training_size=len(y),
        converged=result.converged,
        iterations=result.iterations,
        dual_objective=result.dual_objective,
        alpha=result.alpha,
    )


@dataclass(frozen=True, eq=False)
class MulticlassModel:
    """Three pairwise models plus everything needed to classify raw text."""

    models: tuple[BinarySvmModel, ...]
    lexicon: FeatureLexicon
    scheme: WeightingScheme
    clamp_idf: bool = False

    def __post_init__(self):
        if tuple((m.pos_label, m.neg_label) for m in self.models) != PAIRS:
            raise ValueError("pairwise models must follow the canonical pair order")

    @property
    def width(self) -> int:
        return len(self.lexicon)


def train_multiclass(
    data: InstanceSet,
    lexicon: FeatureLexicon,
    scheme: WeightingScheme,
    params: SvmParams,
    clamp_idf: bool = False,
) -> MulticlassModel:
    if data.width != len(lexicon):
        raise DimensionMismatch(len(lexicon), data.width)
    present = {inst.label for inst in data}
    for polarity in POLARITIES:
        if polarity not in present:
            raise MissingClass(polarity)
    models = tuple(train_binary(data, a, b, params) for a, b in PAIRS)
    return MulticlassModel(models=models, lexicon=lexicon, scheme=scheme, clamp_idf=clamp_idf)


def decision_value(model: BinarySvmModel, instance: Instance) -> float:
    """Signed distance surrogate w·x + b for one pairwise model."""
    return model.decision(instance.weights)


def decision_values(
    model: MulticlassModel, instance: Instance
) -> dict[tuple[Polarity, Polarity], float]:
    return {
        (m.pos_label, m.neg_label): m.decision(instance.weights) for m in model.models
    }


def predict(
    model: MulticlassModel, instance: Instance
) -> tuple[Polarity, dict[tuple[Polarity, Polarity], float]]:
    """Majority vote over the pairwise models.

    A pairwise decision of exactly zero votes for the pair's plus side.
    Vote ties go to the candidate whose supporting decisions have the
    largest total magnitude, then to canonical polarity order.
    """
    decisions = decision_values(model, instance)
    votes: dict[Polarity, int] = {p: 0 for p in POLARITIES}
    strength: dict[Polarity, float] = {p: 0.0 for p in POLARITIES}
    for (plus, minus), value in decisions.items():
        winner = plus if value >= 0.0 else minus
        votes[winner] += 1
        strength[winner] += abs(value)
    best = max(votes.values())
    tied = [p for p in POLARITIES if votes[p] == best]
    if len(tied) > 1:
        top = max(strength[p] for p in tied)
        tied = [p for p in tied if strength[p] == top]
    return tied[0], decisions


def classify_text(model: MulticlassModel, text: str) -> Polarity:
    instance = vectorize_single(text, model.lexicon, model.scheme, clamp_idf=model.clamp_idf)
    label, _ = predict(model, instance)
    return label


def kkt_violations(model: BinarySvmModel, data: InstanceSet) -> list[tuple[int, str, float]]:
    """Re-derive KKT breaches for a model against its training instances.

    Requires the model to still carry its dual variables (training-time
    models do; loaded models do not).
    """
    if model.alpha is None:
        raise ValueError("model was loaded from disk and has no dual variables")
    rows, ys = [], []
    for inst in data:
        if inst.label is model.pos_label:
            rows.append(inst.weights)
            ys.append(1.0)
        elif inst.label is model.neg_label:
            rows.append(inst.weights)
            ys.append(-1.0)
    X = np.vstack(rows)
    y = np.asarray(ys)
    r = y * (X @ model.w + model.b - y)
    return _kkt_scan(r, model.alpha, model.params.C, model.params.tol)


def format_model(model: MulticlassModel) -> str:
    lines = [f"svmmodel {MODEL_FORMAT_VERSION}"]
    lexicon_lines = format_lexicon(model.lexicon).splitlines()
    lines.append(f"lexicon {len(lexicon_lines)}")
    lines.extend(lexicon_lines)
    lines.append(f"scheme {model.scheme.value}")
    lines.append(f"clamp_idf {1 if model.clamp_idf else 0}")
    lines.append(f"pairs {len(model.models)}")
    for m in model.models:
        lines.append(f"pair {m.pos_label.value} {m.neg_label.value}")
        lines.append(f"b {float(m.b)!r}")
        cap = "none" if m.params.max_iters is None else repr(m.params.max_iters)
        lines.append(
            f"params {m.params.C!r} {m.params.tol!r} {m.params.max_passes!r} {cap}"
        )
        lines.append(
            f"meta {int(m.training_size)!r} {1 if m.converged else 0} "
            f"{int(m.iterations)!r} {float(m.dual_objective)!r}"
        )
        nonzero = np.flatnonzero(m.w)
        lines.append(f"w {len(nonzero)}")
        lines.extend(f"{int(i)} {float(m.w[i])!r}" for i in nonzero)
    return "\n".join(lines) + "\n"


def save_model(model: MulticlassModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_model(model))


def _expect(lines: list[str], pos: int, tag: str) -> list[str]:
    if pos >= len(lines):
        raise FileFormatError(f"model file truncated, expected {tag} line")
    parts = lines[pos].split(" ")
    if parts[0] != tag:
        raise FileFormatError(f"expected {tag} line, got {lines[pos]!r}")
    return parts


def load_model(path: str) -> MulticlassModel:
    """Read a model file back; loaded models predict but carry no alphas."""
    with open(path, encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    header = _expect(lines, 0, "svmmodel")
    if header[1] != str(MODEL_FORMAT_VERSION):
        raise FormatVersionMismatch(header[1], str(MODEL_FORMAT_VERSION))
    lexicon_len = int(_expect(lines, 1, "lexicon")[1])
    lexicon = parse_lexicon(lines[2 : 2 + lexicon_len])
    pos = 2 + lexicon_len
    scheme = WeightingScheme.parse(_expect(lines, pos, "scheme")[1])
    clamp_idf = _expect(lines, pos + 1, "clamp_idf")[1] == "1"
    pair_count = int(_expect(lines, pos + 2, "pairs")[1])
    pos += 3

    models = []
    try:
        for _ in range(pair_count):
            pair = _expect(lines, pos, "pair")
            pos_label = Polarity.parse(pair[1])
            neg_label = Polarity.parse(pair[2])
            b = float(_expect(lines, pos + 1, "b")[1])
            raw = _expect(lines, pos + 2, "params")
            cap = None if raw[4] == "none" else int(raw[4])
            params = SvmParams(
                C=float(raw[1]), tol=float(raw[2]), max_passes=int(raw[3]), max_iters=cap
            )
            meta = _expect(lines, pos + 3, "meta")
            nnz = int(_expect(lines, pos + 4, "w")[1])
            w = np.zeros(len(lexicon))
            for k in range(nnz):
                idx, val = lines[pos + 5 + k].split(" ")
                w[int(idx)] = float(val)
            pos += 5 + nnz
            models.append(
                BinarySvmModel(
                    w=w,
                    b=b,
                    pos_label=pos_label,
                    neg_label=neg_label,
                    params=params,
                    training_size=int(meta[1]),
                    converged=meta[2] == "1",
                    iterations=int(meta[3]),
                    dual_objective=float(meta[4]),
                    alpha=None,
                )
            )
    except (IndexError, ValueError) as exc:
        raise FileFormatError(f"bad model file: {exc}") from None
    return MulticlassModel(
        models=tuple(models), lexicon=lexicon, scheme=scheme, clamp_idf=clamp_idf
    )
