"""Q&A corpus ingestion, text preprocessing and corpus persistence.

Input records are JSON lines with the keys ``id``, ``title``,
``question_html``, ``answer_html``, ``tags`` and ``accepted``. Code regions
are the ``<pre>``/``<code>`` spans and fenced blocks of each body.
"""
from __future__ import annotations

import enum
import html
import json
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .exceptions import CorpusFormatError

logger = logging.getLogger(__name__)

_CODE_REGION = re.compile(
    r"<pre\b[^>]*>(?P<pre>.*?)</pre>"
    r"|<code\b[^>]*>(?P<code>.*?)</code>"
    r"|```[^\n]*\n(?P<fence>.*?)```",
    re.DOTALL | re.IGNORECASE,
)
_TAG = re.compile(r"<[^>]+>")
_RAW_TOKEN = re.compile(r"[A-Za-z0-9_]+")
_CAMEL_PART = re.compile(
    r"[A-Z0-9]+(?=[A-Z][a-z])|[A-Z]?[a-z0-9]+|[A-Z0-9]+"
)


class Side(str, enum.Enum):
    QUESTION = "Question"
    ANSWER = "Answer"


@dataclass(frozen=True)
class CodeSegment:
    thread_id: int
    side: Side
    raw_text: str

    def __post_init__(self):
        if not self.raw_text.strip():
            raise ValueError("code segment text is empty")


@dataclass(frozen=True)
class QAThread:
    """One question with its accepted answer.

    ``preprocessed_text`` covers title, prose and code of both posts.
    """

    id: int
    title: str
    question_body: str
    answer_body: str
    question_code: tuple[CodeSegment, ...]
    answer_code: tuple[CodeSegment, ...]
    tags: tuple[str, ...]
    preprocessed_text: tuple[str, ...]

    @property
    def code_segments(self) -> tuple[CodeSegment, ...]:
        return self.question_code + self.answer_code

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "question_body": self.question_body,
            "answer_body": self.answer_body,
            "question_code": [s.raw_text for s in self.question_code],
            "answer_code": [s.raw_text for s in self.answer_code],
            "tags": list(self.tags),
            "preprocessed_text": list(self.preprocessed_text),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QAThread":
        tid = int(d["id"])
        return cls(
            id=tid,
            title=d["title"],
            question_body=d["question_body"],
            answer_body=d["answer_body"],
            question_code=tuple(CodeSegment(tid, Side.QUESTION, t) for t in d["question_code"]),
            answer_code=tuple(CodeSegment(tid, Side.ANSWER, t) for t in d["answer_code"]),
            tags=tuple(d["tags"]),
            preprocessed_text=tuple(d["preprocessed_text"]),
        )


@dataclass(frozen=True)
class Query:
    raw: str
    keywords: tuple[str, ...]
    id: Optional[int] = None

    @classmethod
    def from_text(cls, raw: str, id: Optional[int] = None, vocabulary=None) -> "Query":
        return cls(raw=raw, keywords=tuple(dict.fromkeys(preprocess(raw, vocabulary))), id=id)


# ---------------------------------------------------------------------------
# Word lists


def _read_word_list(path) -> frozenset[str]:
    text = Path(path).read_text(encoding="utf-8")
    return frozenset(w.strip().lower() for w in text.splitlines() if w.strip())


@lru_cache(maxsize=None)
def bundled_word_list(name: str) -> frozenset[str]:
    """Load one of the bundled lists: ``stopwords``, ``java_keywords`` or ``caps_whitelist``."""
    ref = resources.files("apiexpand") / "data" / f"{name}.txt"
    return frozenset(
        w.strip() for w in ref.read_text(encoding="utf-8").splitlines() if w.strip()
    )


@dataclass(frozen=True)
class Vocabulary:
    """Tokens removed by :func:`preprocess`. Defaults to the bundled lists."""

    stopwords: frozenset[str] = field(default_factory=lambda: bundled_word_list("stopwords"))
    keywords: frozenset[str] = field(default_factory=lambda: bundled_word_list("java_keywords"))

    @classmethod
    def from_files(cls, stopwords=None, keywords=None) -> "Vocabulary":
        kwargs = {}
        if stopwords is not None:
            kwargs["stopwords"] = _read_word_list(stopwords)
        if keywords is not None:
            kwargs["keywords"] = _read_word_list(keywords)
        return cls(**kwargs)

    def drops(self, token: str) -> bool:
        return (
            len(token) < 2
            or token.isdigit()
            or token in self.stopwords
            or token in self.keywords
        )


_DEFAULT_VOCABULARY: Optional[Vocabulary] = None


def default_vocabulary() -> Vocabulary:
    global _DEFAULT_VOCABULARY
    if _DEFAULT_VOCABULARY is None:
        _DEFAULT_VOCABULARY = Vocabulary()
    return _DEFAULT_VOCABULARY


# ---------------------------------------------------------------------------
# Preprocessing


def split_identifier(identifier: str) -> list[str]:
    """Split a camelCase / snake_case identifier into lowercase parts.

    >>> split_identifier("FileOutputStream")
    ['file', 'output', 'stream']
    >>> split_identifier("CS_GRAY")
    ['cs', 'gray']
    """
    parts = []
    for chunk in identifier.split("_"):
        parts.extend(p.lower() for p in _CAMEL_PART.findall(chunk))
    return parts


def preprocess(text: str, vocabulary: Optional[Vocabulary] = None) -> list[str]:
    """Tokenize, split identifiers and drop stopwords, punctuation and Java keywords.

    A compound identifier is emitted whole (lowercased, underscores removed)
    followed by its parts. No stemming is applied. The output is a fixed
    point: ``preprocess(" ".join(preprocess(t))) == preprocess(t)``.
    """
    vocab = vocabulary or default_vocabulary()
    tokens: list[str] = []
    for raw in _RAW_TOKEN.findall(text):
        parts = split_identifier(raw)
        if not parts:
            continue
        whole = "".join(parts)
        if len(parts) > 1 and not vocab.drops(whole):
            tokens.append(whole)
        tokens.extend(p for p in parts if not vocab.drops(p))
    return tokens


def html_to_text(body: str) -> str:
    return html.unescape(_TAG.sub(" ", body))


def extract_code_regions(body: str) -> list[str]:
    """Return the code-delimited regions of a post body, in order of appearance."""
    regions = []
    for m in _CODE_REGION.finditer(body):
        raw = m.group("pre") or m.group("code") or m.group("fence") or ""
        text = html.unescape(_TAG.sub("", raw)).strip("\n")
        if text.strip():
            regions.append(text)
    return regions


# ---------------------------------------------------------------------------
# Ingestion


@dataclass(frozen=True)
class IngestionPolicy:
    """Membership criteria for a Q&A thread.

    ``code`` is ``"either"`` (question or answer carries code) or ``"both"``.
    ``tag=None`` disables the tag filter.
    """

    tag: Optional[str] = "java"
    require_accepted: bool = True
    code: str = "either"

    def __post_init__(self):
        if self.code not in ("either", "both"):
            raise ValueError(f"code policy must be 'either' or 'both', got {self.code!r}")


@dataclass
class IngestionReport:
    threads: list[QAThread]
    accepted: int = 0
    rejected: int = 0
    malformed: int = 0

    def summary(self) -> str:
        return f"{self.accepted} accepted, {self.rejected} rejected"


def _make_thread(record: dict, policy: IngestionPolicy, vocabulary) -> Optional[QAThread]:
    tid = int(record["id"])
    title = str(record["title"])
    q_html = str(record["question_html"])
    a_html = record.get("answer_html")
    tags = tuple(str(t).lower() for t in record.get("tags", ()))
    accepted = bool(record.get("accepted", False))

    if policy.tag is not None and policy.tag.lower() not in tags:
        return None
    if policy.require_accepted and (not accepted or not a_html):
        return None
    a_html = str(a_html or "")
    q_code = tuple(CodeSegment(tid, Side.QUESTION, c) for c in extract_code_regions(q_html))
    a_code = tuple(CodeSegment(tid, Side.ANSWER, c) for c in extract_code_regions(a_html))
    if policy.code == "both" and not (q_code and a_code):
        return None
    if not (q_code or a_code):
        return None

    text = " ".join((title, html_to_text(q_html), html_to_text(a_html)))
    return QAThread(
        id=tid,
        title=title,
        question_body=q_html,
        answer_body=a_html,
        question_code=q_code,
        answer_code=a_code,
        tags=tags,
        preprocessed_text=tuple(preprocess(text, vocabulary)),
    )


def ingest_threads(
    records: Iterable[dict],
    policy: Optional[IngestionPolicy] = None,
    vocabulary: Optional[Vocabulary] = None,
) -> IngestionReport:
    """Filter raw records into a corpus of :class:`QAThread`.

    Malformed records are skipped with a warning and counted both as
    rejected and as malformed.
    """
    policy = policy or IngestionPolicy()
    report = IngestionReport(threads=[])
    seen: set[int] = set()
    for n, record in enumerate(records, 1):
        try:
            thread = _make_thread(record, policy, vocabulary)
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            logger.warning("skipping malformed record #%d: %s", n, exc)
            report.malformed += 1
            report.rejected += 1
            continue
        if thread is None:
            report.rejected += 1
            continue
        if thread.id in seen:
            logger.warning("skipping duplicate thread id %d", thread.id)
            report.malformed += 1
            report.rejected += 1
            continue
        seen.add(thread.id)
        report.threads.append(thread)
        report.accepted += 1
    return report


def read_jsonl(path) -> Iterator[dict]:
    """Yield JSON objects from a JSON-lines file.

    Unparseable lines are yielded as ``None`` so callers can count them.
    """
    path = Path(path)
    try:
        fh = path.open(encoding="utf-8")
    except OSError as exc:
        raise CorpusFormatError(f"cannot read {path}: {exc.strerror or exc}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                logger.warning("%s:%d: invalid JSON (%s)", path, lineno, exc.msg)
                yield None
                continue
            yield obj


def ingest_file(path, policy=None, vocabulary=None) -> IngestionReport:
    return ingest_threads(read_jsonl(path), policy, vocabulary)


def save_corpus(threads: Iterable[QAThread], path) -> None:
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8") as fh:
            for t in threads:
                fh.write(json.dumps(t.to_dict(), ensure_ascii=False, sort_keys=True))
                fh.write("\n")
    except OSError as exc:
        raise CorpusFormatError(f"cannot write corpus {path}: {exc.strerror or exc}") from exc


def load_corpus(path) -> list[QAThread]:
    threads = []
    for n, d in enumerate(read_jsonl(path), 1):
        try:
            threads.append(QAThread.from_dict(d))
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusFormatError(f"{path}: bad thread record #{n}: {exc}") from exc
    return threads
