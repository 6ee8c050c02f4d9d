"""Query reformulation with relevant API classes.

Feedback threads are retrieved for the query, their question and answer
code is weighted twice (TF-IDF and API Class Rank), the four resulting
lists are fused with a Borda count, combined with embedding proximity to
the query, and the top classes are appended to the query keywords.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .corpus import CodeSegment, QAThread, Query
from .embedding import EmbeddingModel, SkipGramConfig, proximity, train_skipgram
from .exceptions import ConfigError, NoFeedbackError
from .extract import ApiSequence, extract_api_sequence
from .index import InvertedIndex, build_index, search
from .validation import check_int, check_positive, check_query, check_queries, check_threads, check_unit_interval
from .weights import DocumentFrequencies, ListSource, RankedCandidateList, candidate_lists, document_frequencies


SCORING_MODES = ("both", "borda", "proximity")

# Totals are compared at this many decimals so that float noise from
# normalization cannot split ties between equally scored candidates.
_TIE_DECIMALS = 9


@dataclass(frozen=True)
class CandidateScore:
    api: str
    borda: float
    proximity: float
    norm_borda: float
    norm_proximity: float

    @property
    def total(self) -> float:
        return self.norm_borda + self.norm_proximity


@dataclass(frozen=True)
class ReformulatedQuery:
    base: Query
    suggested: tuple[str, ...]
    scores: tuple[CandidateScore, ...] = field(default=(), compare=False)

    @property
    def full_tokens(self) -> tuple[str, ...]:
        return self.base.keywords + self.suggested

    @property
    def text(self) -> str:
        return " ".join(self.full_tokens)

    def to_dict(self) -> dict:
        by_api = {s.api: s for s in self.scores}
        return {
            "query": self.base.raw,
            "keywords": list(self.base.keywords),
            "suggested": [
                {
                    "api": a,
                    "score": by_api[a].total,
                    "borda": by_api[a].borda,
                    "proximity": by_api[a].proximity,
                }
                if a in by_api
                else {"api": a}
                for a in self.suggested
            ],
            "reformulated": self.text,
        }


@dataclass(frozen=True)
class Feedback:
    thread_ids: tuple[int, ...]
    question_segments: tuple[CodeSegment, ...]
    answer_segments: tuple[CodeSegment, ...]


def collect_prf(
    query: Query,
    qa_index: InvertedIndex,
    threads: Mapping[int, QAThread],
    m: int = 35,
) -> Feedback:
    """Code segments of the top ``m`` threads, split by question and answer side."""
    hits = search(qa_index, query.keywords, top=m)
    if not hits:
        raise NoFeedbackError(query.keywords)
    ids = tuple(h.doc_id for h in hits)
    q_segs: list[CodeSegment] = []
    a_segs: list[CodeSegment] = []
    for tid in ids:
        thread = threads[tid]
        q_segs.extend(thread.question_code)
        a_segs.extend(thread.answer_code)
    return Feedback(ids, tuple(q_segs), tuple(a_segs))


def borda_score(api: str, lists: Sequence[RankedCandidateList] | Mapping) -> float:
    """Sum over lists of ``1 - rank / len``; absent classes and empty lists add 0."""
    if isinstance(lists, Mapping):
        lists = list(lists.values())
    total = 0.0
    for rl in lists:
        rank = rl.rank(api)
        if rank is not None:
            total += 1.0 - rank / len(rl)
    return total


def min_max(values: Mapping[str, float]) -> dict[str, float]:
    """Scale to [0, 1]; when all values coincide every entry maps to 1.0."""
    if not values:
        return {}
    lo, hi = min(values.values()), max(values.values())
    if hi == lo:
        return {k: 1.0 for k in values}
    span = hi - lo
    return {k: (v - lo) / span for k, v in values.items()}


def combine_scores(
    borda: Mapping[str, float], prox: Mapping[str, float]
) -> list[CandidateScore]:
    """Normalize both raw scores over the candidate set, sum with equal weights, and sort."""
    nb, np_ = min_max(borda), min_max(prox)
    scored = [
        CandidateScore(api, borda[api], prox[api], nb[api], np_[api]) for api in borda
    ]
    scored.sort(key=lambda s: (-round(s.total, _TIE_DECIMALS), s.api))
    return scored


def rank_candidates(
    lists: Mapping[ListSource, RankedCandidateList] | Sequence[RankedCandidateList],
    model: Optional[EmbeddingModel],
    query: Query,
    candidates=None,
    scoring: str = "both",
) -> list[CandidateScore]:
    """Score every candidate class and order them by combined score.

    ``scoring="borda"`` stubs proximity to zero, ``"proximity"`` stubs the
    Borda score to zero; a constant signal normalizes to 1.0 everywhere and
    so leaves the order to the other one.
    """
    if scoring not in SCORING_MODES:
        raise ConfigError(f"scoring must be one of {SCORING_MODES}, got {scoring!r}")
    rls = list(lists.values()) if isinstance(lists, Mapping) else list(lists)
    if candidates is None:
        candidates = {c for rl in rls for c in rl.classes}
    borda = {
        a: (borda_score(a, rls) if scoring != "proximity" else 0.0) for a in sorted(candidates)
    }
    prox = {
        a: (proximity(model, a, query) if scoring != "borda" else 0.0) for a in sorted(candidates)
    }
    return combine_scores(borda, prox)


class ApiQueryReformulator(BaseEstimator):
    """Suggest API classes for natural-language code search queries.

    ``fit`` takes a list of :class:`~apiexpand.corpus.QAThread` and builds
    the feedback index, the DF table and (unless ``embedding`` is given) a
    skip-gram model over the threads' preprocessed text. ``predict`` returns
    the suggested classes per query; ``transform`` returns the reformulated
    token lists.

    Parameters
    ----------
    m : int
        Feedback threads retrieved per query.
    n : int
        Length of each of the four candidate lists.
    k : int
        Classes appended to the query.
    phi, init, epsilon, max_iter :
        API Class Rank damping factor, initial score, convergence threshold
        and iteration cap.
    k1, b : float
        BM25 constants of the feedback index.
    scoring : {"both", "borda", "proximity"}
    embedding : EmbeddingModel, optional
        Pre-trained vectors; trained during ``fit`` when omitted.
    """

    def __init__(
        self,
        m=35,
        n=16,
        k=10,
        phi=0.85,
        init=0.25,
        epsilon=1e-4,
        max_iter=100,
        k1=1.2,
        b=0.75,
        scoring="both",
        embedding=None,
        embedding_dim=100,
        window=5,
        min_count=5,
        epochs=5,
        negatives=5,
        learning_rate=0.025,
        seed=1,
        caps_whitelist=None,
        vocabulary=None,
    ):
        self.m = m
        self.n = n
        self.k = k
        self.phi = phi
        self.init = init
        self.epsilon = epsilon
        self.max_iter = max_iter
        self.k1 = k1
        self.b = b
        self.scoring = scoring
        self.embedding = embedding
        self.embedding_dim = embedding_dim
        self.window = window
        self.min_count = min_count
        self.epochs = epochs
        self.negatives = negatives
        self.learning_rate = learning_rate
        self.seed = seed
        self.caps_whitelist = caps_whitelist
        self.vocabulary = vocabulary

    def _validate_params(self):
        check_int(self.m, "m")
        check_int(self.n, "n")
        check_int(self.k, "k", minimum=0)
        check_unit_interval(self.phi, "phi")
        check_positive(self.init, "init")
        check_positive(self.epsilon, "epsilon")
        check_int(self.max_iter, "max_iter")
        check_positive(self.k1, "k1")
        check_unit_interval(self.b, "b")
        if self.scoring not in SCORING_MODES:
            raise ConfigError(f"scoring must be one of {SCORING_MODES}, got {self.scoring!r}")

    def skipgram_config(self) -> SkipGramConfig:
        return SkipGramConfig(
            dim=self.embedding_dim,
            window=self.window,
            min_count=self.min_count,
            epochs=self.epochs,
            negatives=self.negatives,
            learning_rate=self.learning_rate,
            seed=self.seed,
        )

    def fit(self, X, y=None):
        self._validate_params()
        threads = check_threads(X)
        index = build_index(((t.id, t.preprocessed_text) for t in threads), k1=self.k1, b=self.b)
        df = document_frequencies(threads, self.caps_whitelist)
        model = self.embedding
        if model is None:
            model = train_skipgram((t.preprocessed_text for t in threads), self.skipgram_config())
        return self._set_fitted(threads, index, df, model)

    @classmethod
    def from_artifacts(
        cls,
        threads: Sequence[QAThread],
        index: InvertedIndex,
        df: DocumentFrequencies,
        embedding: Optional[EmbeddingModel],
        **params,
    ) -> "ApiQueryReformulator":
        """Assemble a fitted reformulator from persisted artifacts.

        ``embedding=None`` runs with zero proximity (Borda-only ranking).
        """
        params.setdefault("k1", index.k1)
        params.setdefault("b", index.b)
        est = cls(embedding=embedding, **params)
        est._validate_params()
        if (est.k1, est.b) != (index.k1, index.b):
            raise ConfigError(
                f"index uses k1={index.k1}, b={index.b}; configuration asks for k1={est.k1}, b={est.b}"
            )
        return est._set_fitted(check_threads(threads), index, df, embedding)

    def _set_fitted(self, threads, index, df, model):
        self.threads_ = {t.id: t for t in threads}
        self.index_ = index
        self.df_ = df
        self.embedding_ = model
        self._sequences: dict[int, ApiSequence] = {}
        return self

    def _sequences_for(self, segments: Sequence[CodeSegment]) -> list[ApiSequence]:
        out = []
        for seg in segments:
            seq = self._sequences.get(id(seg))
            if seq is None:
                seq = self._sequences[id(seg)] = extract_api_sequence(seg, self.caps_whitelist)
            out.append(seq)
        return out

    def candidate_lists(self, query, m=None, n=None) -> dict[ListSource, RankedCandidateList]:
        check_is_fitted(self, "index_")
        query = check_query(query, self.vocabulary)
        feedback = collect_prf(query, self.index_, self.threads_, self.m if m is None else m)
        return candidate_lists(
            self._sequences_for(feedback.question_segments),
            self._sequences_for(feedback.answer_segments),
            self.df_,
            n=self.n if n is None else n,
            phi=self.phi,
            init=self.init,
            epsilon=self.epsilon,
            max_iter=self.max_iter,
        )

    def reformulate(self, query, k=None, m=None, n=None) -> ReformulatedQuery:
        check_is_fitted(self, "index_")
        query = check_query(query, self.vocabulary)
        k = check_int(self.k if k is None else k, "k", minimum=0)
        lists = self.candidate_lists(query, m=m, n=n)
        ranked = rank_candidates(lists, self.embedding_, query, scoring=self.scoring)
        suggested = tuple(s.api for s in ranked[:k])
        return ReformulatedQuery(base=query, suggested=suggested, scores=tuple(ranked))

    def predict(self, X) -> list[list[str]]:
        return [list(r.suggested) for r in self.reformulate_many(X)]

    def transform(self, X) -> list[list[str]]:
        return [list(r.full_tokens) for r in self.reformulate_many(X)]

    def reformulate_many(self, X) -> list[ReformulatedQuery]:
        check_is_fitted(self, "index_")
        return [self.reformulate(q) for q in check_queries(X, self.vocabulary)]
