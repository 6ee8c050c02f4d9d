"""Inverted index with BM25 ranking.

Serves both feedback retrieval over the Q&A corpus and code retrieval over
the evaluation code corpus.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Iterable, Sequence

from .exceptions import IndexFormatError

FORMAT_NAME = "apiexpand-index"
FORMAT_VERSION = 1
DEFAULT_K1 = 1.2
DEFAULT_B = 0.75


@dataclass(frozen=True)
class SearchHit:
    doc_id: Hashable
    score: float


@dataclass
class InvertedIndex:
    postings: dict[str, list[tuple[Hashable, int]]] = field(default_factory=dict)
    doc_lengths: dict[Hashable, int] = field(default_factory=dict)
    k1: float = DEFAULT_K1
    b: float = DEFAULT_B

    @property
    def doc_count(self) -> int:
        return len(self.doc_lengths)

    @property
    def avg_doc_length(self) -> float:
        if not self.doc_lengths:
            return 0.0
        return sum(self.doc_lengths.values()) / len(self.doc_lengths)

    def df(self, token: str) -> int:
        return len(self.postings.get(token, ()))

    def idf(self, token: str) -> float:
        df = self.df(token)
        return math.log(1.0 + (self.doc_count - df + 0.5) / (df + 0.5))

    def search(self, query: Sequence[str], top: int = 10) -> list[SearchHit]:
        return search(self, query, top)


def build_index(
    docs: Iterable[tuple[Hashable, Sequence[str]]],
    k1: float = DEFAULT_K1,
    b: float = DEFAULT_B,
) -> InvertedIndex:
    index = InvertedIndex(k1=k1, b=b)
    id_type = None
    for doc_id, tokens in docs:
        if doc_id in index.doc_lengths:
            raise ValueError(f"duplicate doc_id {doc_id!r}")
        if id_type is None:
            id_type = type(doc_id)
        elif type(doc_id) is not id_type:
            raise TypeError(f"mixed doc_id types: {id_type.__name__} and {type(doc_id).__name__}")
        tokens = list(tokens)
        index.doc_lengths[doc_id] = len(tokens)
        for token, tf in Counter(tokens).items():
            index.postings.setdefault(token, []).append((doc_id, tf))
    return index


def search(index: InvertedIndex, query: Sequence[str], top: int = 10) -> list[SearchHit]:
    """Rank documents by BM25; repeated query tokens contribute once per occurrence.

    Ties are broken by ascending doc_id.
    """
    if top < 1:
        raise ValueError(f"top must be >= 1, got {top}")
    if not query or index.doc_count == 0:
        return []
    k1, b = index.k1, index.b
    avgdl = index.avg_doc_length or 1.0
    scores: dict[Hashable, float] = {}
    for token, qtf in Counter(query).items():
        plist = index.postings.get(token)
        if not plist:
            continue
        idf = index.idf(token)
        for doc_id, tf in plist:
            norm = k1 * (1.0 - b + b * index.doc_lengths[doc_id] / avgdl)
            scores[doc_id] = scores.get(doc_id, 0.0) + qtf * idf * tf * (k1 + 1.0) / (tf + norm)
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return [SearchHit(d, s) for d, s in ranked[:top]]


def save_index(index: InvertedIndex, path) -> None:
    payload = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "scoring": {"function": "bm25", "k1": index.k1, "b": index.b},
        "doc_lengths": [[d, n] for d, n in index.doc_lengths.items()],
        "postings": {t: [[d, tf] for d, tf in plist] for t, plist in sorted(index.postings.items())},
    }
    try:
        Path(path).write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")
    except OSError as exc:
        raise IndexFormatError(f"cannot write index {path}: {exc.strerror or exc}") from exc


def load_index(path, k1: float | None = None, b: float | None = None) -> InvertedIndex:
    """Load a persisted index.

    If ``k1``/``b`` are given they must equal the constants stored in the
    file header; the stored constants are always the ones used.
    """
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise IndexFormatError(f"cannot read index {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise IndexFormatError(f"{path}: not a JSON index ({exc.msg})") from exc
    if payload.get("format") != FORMAT_NAME or payload.get("version") != FORMAT_VERSION:
        raise IndexFormatError(f"{path}: unsupported index format/version")
    scoring = payload["scoring"]
    if scoring.get("function") != "bm25":
        raise IndexFormatError(f"{path}: unknown scoring function {scoring.get('function')!r}")
    for name, wanted in (("k1", k1), ("b", b)):
        if wanted is not None and not math.isclose(wanted, scoring[name]):
            raise IndexFormatError(
                f"{path}: index was built with {name}={scoring[name]}, requested {name}={wanted}"
            )
    return InvertedIndex(
        postings={t: [(d, tf) for d, tf in plist] for t, plist in payload["postings"].items()},
        doc_lengths={d: n for d, n in payload["doc_lengths"]},
        k1=scoring["k1"],
        b=scoring["b"],
    )
