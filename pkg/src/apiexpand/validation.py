"""Input validation helpers shared by the estimator, the harness and the CLI."""
from __future__ import annotations

import numbers
from typing import Iterable, Optional

from .corpus import QAThread, Query, Vocabulary
from .exceptions import ConfigError, EmptyQueryError


def check_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_unit_interval(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ConfigError(f"{name} must be a real number, got {value!r}")
    if not 0.0 <= value <= 1.0:
        raise ConfigError(f"{name} must lie in [0, 1], got {value}")
    return float(value)


def check_positive(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real) or not value > 0:
        raise ConfigError(f"{name} must be a positive number, got {value!r}")
    return float(value)


def check_query(query, vocabulary: Optional[Vocabulary] = None) -> Query:
    """Coerce ``str`` or :class:`Query` to a query with at least one keyword."""
    if isinstance(query, str):
        query = Query.from_text(query, vocabulary=vocabulary)
    elif not isinstance(query, Query):
        raise TypeError(f"expected str or Query, got {type(query).__name__}")
    if not query.keywords:
        raise EmptyQueryError(query.raw)
    return query


def check_queries(queries, vocabulary: Optional[Vocabulary] = None) -> list[Query]:
    if isinstance(queries, (str, Query)):
        raise TypeError("expected a sequence of queries, got a single query")
    return [check_query(q, vocabulary) for q in queries]


def check_threads(threads: Iterable[QAThread]) -> list[QAThread]:
    threads = list(threads)
    if not threads:
        raise ValueError("the Q&A corpus is empty")
    for t in threads:
        if not isinstance(t, QAThread):
            raise TypeError(f"expected QAThread, got {type(t).__name__}")
    ids = [t.id for t in threads]
    if len(set(ids)) != len(ids):
        raise ValueError("thread ids are not unique")
    return threads
