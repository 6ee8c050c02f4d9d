"""Query reformulation for code search with API classes mined from Q&A threads."""
from .corpus import CodeSegment, IngestionPolicy, QAThread, Query, Side, Vocabulary, ingest_threads, load_corpus, preprocess, save_corpus
from .embedding import EmbeddingModel, SkipGramConfig, load_vectors, proximity, save_vectors, train_skipgram
from .evaluation import EvalRecord, MetricReport, compare_queries, hit_at_k, map_at_k, mrr_at_k, query_effectiveness, recall_at_k, run_experiment
from .extract import ApiSequence, CoOccurrenceGraph, build_graph, extract_api_sequence, is_api_class
from .index import InvertedIndex, SearchHit, build_index, load_index, save_index, search
from .reformulate import ApiQueryReformulator, CandidateScore, ReformulatedQuery, borda_score, collect_prf, rank_candidates
from .weights import DocumentFrequencies, ListSource, RankedCandidateList, document_frequencies, pagerank, tfidf_weights, top_candidates

__version__ = "0.1.0"

__all__ = [
    "CodeSegment",
    "IngestionPolicy",
    "QAThread",
    "Query",
    "Side",
    "Vocabulary",
    "ingest_threads",
    "load_corpus",
    "preprocess",
    "save_corpus",
    "EmbeddingModel",
    "SkipGramConfig",
    "load_vectors",
    "proximity",
    "save_vectors",
    "train_skipgram",
    "EvalRecord",
    "MetricReport",
    "compare_queries",
    "hit_at_k",
    "map_at_k",
    "mrr_at_k",
    "query_effectiveness",
    "recall_at_k",
    "run_experiment",
    "ApiSequence",
    "CoOccurrenceGraph",
    "build_graph",
    "extract_api_sequence",
    "is_api_class",
    "InvertedIndex",
    "SearchHit",
    "build_index",
    "load_index",
    "save_index",
    "search",
    "ApiQueryReformulator",
    "CandidateScore",
    "ReformulatedQuery",
    "borda_score",
    "collect_prf",
    "rank_candidates",
    "DocumentFrequencies",
    "ListSource",
    "RankedCandidateList",
    "document_frequencies",
    "pagerank",
    "tfidf_weights",
    "top_candidates",
]
