"""TF-IDF and PageRank weighting of API classes found in feedback code."""
from __future__ import annotations

import enum
import json
import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus import QAThread
from .exceptions import CorpusFormatError, StaleDocumentFrequencyError
from .extract import ApiSequence, CoOccurrenceGraph, build_graph, scan_class_mentions


class ListSource(str, enum.Enum):
    WC_Q = "WC_Q"  # TF-IDF, question code
    WC_A = "WC_A"  # TF-IDF, answer code
    RC_Q = "RC_Q"  # PageRank, question code
    RC_A = "RC_A"  # PageRank, answer code


@dataclass(frozen=True)
class RankedCandidateList:
    source: ListSource
    entries: tuple[tuple[str, float], ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def classes(self) -> list[str]:
        return [c for c, _ in self.entries]

    def rank(self, api: str) -> int | None:
        """1-based position of ``api``, or None when absent."""
        for i, (c, _) in enumerate(self.entries, 1):
            if c == api:
                return i
        return None


# ---------------------------------------------------------------------------
# Document frequencies


@dataclass(frozen=True)
class DocumentFrequencies:
    """Number of corpus threads whose code mentions each API class."""

    counts: Mapping[str, int]
    thread_count: int

    def save(self, path) -> None:
        payload = {"thread_count": self.thread_count, "df": dict(sorted(self.counts.items()))}
        Path(path).write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")

    @classmethod
    def load(cls, path) -> "DocumentFrequencies":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
            return cls(counts=dict(payload["df"]), thread_count=int(payload["thread_count"]))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise CorpusFormatError(f"cannot read DF table {path}: {exc}") from exc


def document_frequencies(threads: Sequence[QAThread], caps_whitelist=None) -> DocumentFrequencies:
    counts: Counter = Counter()
    for t in threads:
        mentioned = set()
        for seg in t.code_segments:
            mentioned.update(scan_class_mentions(seg.raw_text, caps_whitelist))
        counts.update(mentioned)
    return DocumentFrequencies(counts=dict(counts), thread_count=len(threads))


# ---------------------------------------------------------------------------
# Weights


def tfidf_weights(
    prf_segments: Iterable[ApiSequence],
    corpus_df: Mapping[str, int],
    corpus_thread_count: int,
) -> dict[str, float]:
    """``(1 + ln TF) * ln(1 + N / DF)`` for each class in the feedback code.

    TF counts every raw mention across the segments; DF and N come from the
    whole thread corpus.
    """
    if corpus_thread_count < 1:
        raise ValueError("corpus_thread_count must be >= 1")
    tf: Counter = Counter()
    for seq in prf_segments:
        tf.update(seq.mention_counts())
    weights = {}
    for api, freq in tf.items():
        df = corpus_df.get(api, 0)
        if df < 1:
            raise StaleDocumentFrequencyError(
                f"API class {api!r} occurs in feedback code but has DF={df}"
            )
        weights[api] = (1.0 + math.log(freq)) * math.log(1.0 + corpus_thread_count / df)
    return weights


def pagerank(
    graph: CoOccurrenceGraph,
    phi: float = 0.85,
    init: float = 0.25,
    epsilon: float = 1e-4,
    max_iter: int = 100,
) -> dict[str, float]:
    """API Class Rank by synchronous iteration of ``(1-phi) + phi * sum(s_j / deg_j)``.

    Every edge counts as a link in both directions. Stops once the largest
    per-node change drops below ``epsilon`` or after ``max_iter`` sweeps.
    Isolated nodes settle at ``1 - phi``.
    """
    if not 0.0 <= phi <= 1.0:
        raise ValueError(f"phi must be in [0, 1], got {phi}")
    nodes = sorted(graph.adjacency)
    if not nodes:
        return {}
    # sorted neighbour order keeps float sums independent of set iteration order
    nbrs = {v: sorted(graph.adjacency[v]) for v in nodes}
    deg = {v: len(nbrs[v]) for v in nodes}
    scores = {v: float(init) for v in nodes}
    for _ in range(max_iter):
        new = {
            v: (1.0 - phi) + phi * sum(scores[u] / deg[u] for u in nbrs[v])
            for v in nodes
        }
        delta = max(abs(new[v] - scores[v]) for v in nodes)
        scores = new
        if delta < epsilon:
            break
    graph.scores = dict(scores)
    return scores


def top_candidates(
    weights: Mapping[str, float], n: int, source: ListSource | str
) -> RankedCandidateList:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ranked = sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))[:n]
    return RankedCandidateList(source=ListSource(source), entries=tuple(ranked))


def candidate_lists(
    question_sequences: Sequence[ApiSequence],
    answer_sequences: Sequence[ApiSequence],
    df: DocumentFrequencies,
    n: int = 16,
    phi: float = 0.85,
    init: float = 0.25,
    epsilon: float = 1e-4,
    max_iter: int = 100,
) -> dict[ListSource, RankedCandidateList]:
    """The four ranked lists: {TF-IDF, PageRank} x {question code, answer code}."""
    lists = {}
    for side, seqs in (("Q", question_sequences), ("A", answer_sequences)):
        tw = tfidf_weights(seqs, df.counts, df.thread_count)
        lists[ListSource(f"WC_{side}")] = top_candidates(tw, n, f"WC_{side}")
        acr = pagerank(build_graph(seqs), phi, init, epsilon, max_iter)
        lists[ListSource(f"RC_{side}")] = top_candidates(acr, n, f"RC_{side}")
    return lists
