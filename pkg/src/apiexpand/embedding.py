"""Skip-gram word embeddings with negative sampling, and query-API proximity."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .exceptions import EmptyVocabularyError, VectorFormatError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkipGramConfig:
    dim: int = 100
    window: int = 5
    min_count: int = 5
    epochs: int = 5
    negatives: int = 5
    learning_rate: float = 0.025
    seed: int = 1

    def __post_init__(self):
        for name in ("dim", "window", "min_count", "epochs", "negatives"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")


class EmbeddingModel:
    """Token to dense vector lookup."""

    def __init__(self, vocab: dict[str, int], vectors: np.ndarray, window: int = 5, min_count: int = 5):
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[0] != len(vocab):
            raise ValueError("vectors must have one row per vocabulary token")
        if not np.all(np.isfinite(vectors)):
            raise ValueError("vectors contain NaN or Inf")
        self.vocab = dict(vocab)
        self.vectors = vectors
        self.window = window
        self.min_count = min_count
        norms = np.linalg.norm(vectors, axis=1, keepdims=True)
        self._unit = np.divide(vectors, norms, out=np.zeros_like(vectors), where=norms > 0)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return len(self.vocab)

    def __contains__(self, token: str) -> bool:
        return token in self.vocab

    def __getitem__(self, token: str) -> np.ndarray:
        return self.vectors[self.vocab[token]]

    def words(self) -> list[str]:
        return sorted(self.vocab, key=self.vocab.__getitem__)

    def cosine(self, a: str, b: str) -> float:
        if a not in self.vocab or b not in self.vocab:
            return 0.0
        return float(self._unit[self.vocab[a]] @ self._unit[self.vocab[b]])

    def most_similar(self, token: str, top: int = 10) -> list[tuple[str, float]]:
        if token not in self.vocab:
            return []
        sims = self._unit @ self._unit[self.vocab[token]]
        order = np.argsort(-sims, kind="stable")
        words = self.words()
        return [(words[i], float(sims[i])) for i in order if words[i] != token][:top]


# ---------------------------------------------------------------------------
# Training


def _build_vocab(sentences: Sequence[Sequence[str]], min_count: int) -> tuple[dict[str, int], np.ndarray]:
    counts = Counter(tok for s in sentences for tok in s)
    kept = sorted((t for t, c in counts.items() if c >= min_count), key=lambda t: (-counts[t], t))
    if not kept:
        raise EmptyVocabularyError(min_count)
    return {t: i for i, t in enumerate(kept)}, np.array([counts[t] for t in kept], dtype=np.float64)


def train_skipgram(
    corpus: Iterable[Sequence[str]], config: Optional[SkipGramConfig] = None, **overrides
) -> EmbeddingModel:
    """Train skip-gram with negative sampling, single-threaded and seeded.

    Each centre word draws an effective window uniformly from
    ``1..window``; negatives come from the unigram distribution raised to
    0.75; the learning rate decays linearly to ``1e-4`` of its start value.
    """
    if config is None:
        config = SkipGramConfig(**overrides)
    elif overrides:
        config = SkipGramConfig(**{**config.__dict__, **overrides})
    sentences = [list(s) for s in corpus]
    if not any(sentences):
        raise EmptyVocabularyError(config.min_count)
    vocab, freqs = _build_vocab(sentences, config.min_count)
    encoded = [np.array([vocab[t] for t in s if t in vocab], dtype=np.int64) for s in sentences]
    encoded = [s for s in encoded if len(s) > 1]

    rng = np.random.default_rng(config.seed)
    V, D = len(vocab), config.dim
    w_in = (rng.random((V, D)) - 0.5) / D
    w_out = np.zeros((V, D))
    noise = freqs ** 0.75
    noise_cdf = np.cumsum(noise / noise.sum())

    total = config.epochs * sum(len(s) for s in encoded)
    seen = 0
    lr0 = config.learning_rate
    for _ in range(config.epochs):
        for sent in encoded:
            n = len(sent)
            spans = rng.integers(1, config.window + 1, size=n)
            for pos in range(n):
                lr = max(lr0 * (1.0 - seen / max(total, 1)), lr0 * 1e-4)
                seen += 1
                span = spans[pos]
                ctx = np.concatenate((sent[max(0, pos - span):pos], sent[pos + 1:pos + 1 + span]))
                if ctx.size == 0:
                    continue
                center = sent[pos]
                negs = np.searchsorted(noise_cdf, rng.random(ctx.size * config.negatives))
                negs = np.minimum(negs, V - 1)
                targets = np.concatenate((ctx, negs))
                labels = np.zeros(targets.size)
                labels[: ctx.size] = 1.0
                v = w_in[center]
                out = w_out[targets]
                score = 1.0 / (1.0 + np.exp(-np.clip(out @ v, -30, 30)))
                g = (labels - score) * lr
                w_in[center] += g @ out
                np.add.at(w_out, targets, np.outer(g, v))
    logger.debug("trained %d vectors of dim %d", V, D)
    return EmbeddingModel(vocab, w_in, window=config.window, min_count=config.min_count)


# ---------------------------------------------------------------------------
# Text vector format: "<count> <dim>" header, then "<token> <v1> ... <vdim>"


def save_vectors(model: EmbeddingModel, path) -> None:
    lines = [f"{len(model)} {model.dim}"]
    for w in model.words():
        lines.append(w + " " + " ".join(f"{x:.9g}" for x in model[w]))
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise VectorFormatError(f"cannot write vectors {path}: {exc.strerror or exc}") from exc


def load_vectors(path) -> EmbeddingModel:
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise VectorFormatError(f"cannot read vectors {path}: {exc.strerror or exc}") from exc
    if not lines:
        raise VectorFormatError(f"{path}: empty vector file")
    try:
        count, dim = (int(x) for x in lines[0].split())
    except ValueError:
        raise VectorFormatError(f"{path}:1: header must be '<vocab_size> <dim>'") from None
    vocab: dict[str, int] = {}
    rows = []
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        parts = line.rstrip().split(" ")
        if len(parts) != dim + 1:
            raise VectorFormatError(
                f"{path}:{lineno}: expected {dim} components, found {len(parts) - 1}"
            )
        try:
            rows.append([float(x) for x in parts[1:]])
        except ValueError:
            raise VectorFormatError(f"{path}:{lineno}: non-numeric component") from None
        if parts[0] in vocab:
            raise VectorFormatError(f"{path}:{lineno}: duplicate token {parts[0]!r}")
        vocab[parts[0]] = len(vocab)
    if len(vocab) != count:
        raise VectorFormatError(f"{path}: header announces {count} words, found {len(vocab)}")
    vectors = np.array(rows, dtype=np.float64).reshape(len(rows), dim)
    if not np.all(np.isfinite(vectors)):
        raise VectorFormatError(f"{path}: non-finite vector component")
    return EmbeddingModel(vocab, vectors)


# ---------------------------------------------------------------------------


def proximity(model: Optional[EmbeddingModel], api: str, query) -> float:
    """Largest cosine between the lowercased API class and any query keyword.

    ``query`` is a :class:`~apiexpand.corpus.Query` or a keyword sequence.
    Out-of-vocabulary tokens contribute nothing; the result is 0.0 when no
    pair is in vocabulary.
    """
    keywords = getattr(query, "keywords", query)
    if model is None:
        return 0.0
    token = api.lower()
    if token not in model:
        return 0.0
    sims = [model.cosine(token, q) for q in keywords if q in model]
    return max(sims) if sims else 0.0
