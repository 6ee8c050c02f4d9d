"""Island parsing of API class mentions and API co-occurrence graphs."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .corpus import CodeSegment, bundled_word_list

# string/char literals and comments, removed before scanning
_NON_CODE = re.compile(
    r'"(?:\\.|[^"\\\n])*"'
    r"|'(?:\\.|[^'\\\n])*'"
    r"|//[^\n]*"
    r"|/\*.*?\*/",
    re.DOTALL,
)
_CLASS_TOKEN = re.compile(r"(?<![A-Za-z0-9_$])[A-Z][A-Za-z0-9]*(?![A-Za-z0-9_$])")


def is_api_class(token: str, caps_whitelist: Optional[frozenset] = None) -> bool:
    """True for Java-style class names (``BufferedImage``) and whitelisted acronyms (``URL``)."""
    if not token or not token[0].isupper() or not token.isalnum() or not token.isascii():
        return False
    if any(c.islower() for c in token):
        return True
    whitelist = bundled_word_list("caps_whitelist") if caps_whitelist is None else caps_whitelist
    return 2 <= len(token) <= 4 and token in whitelist


@dataclass(frozen=True)
class ApiSequence:
    """API classes of one segment in order of appearance.

    ``classes`` has consecutive repeats collapsed; ``mentions`` keeps every
    raw match and feeds term-frequency counts.
    """

    segment: Optional[CodeSegment]
    classes: tuple[str, ...]
    mentions: tuple[str, ...] = ()

    def mention_counts(self) -> Counter:
        return Counter(self.mentions or self.classes)


def scan_class_mentions(code: str, caps_whitelist: Optional[frozenset] = None) -> list[str]:
    stripped = _NON_CODE.sub(" ", code)
    return [t for t in _CLASS_TOKEN.findall(stripped) if is_api_class(t, caps_whitelist)]


def extract_api_sequence(
    segment: CodeSegment | str, caps_whitelist: Optional[frozenset] = None
) -> ApiSequence:
    if isinstance(segment, str):
        text, seg = segment, None
    else:
        text, seg = segment.raw_text, segment
    mentions = scan_class_mentions(text, caps_whitelist)
    collapsed: list[str] = []
    for m in mentions:
        if not collapsed or collapsed[-1] != m:
            collapsed.append(m)
    return ApiSequence(segment=seg, classes=tuple(collapsed), mentions=tuple(mentions))


@dataclass
class CoOccurrenceGraph:
    """Undirected simple graph over API classes."""

    adjacency: dict[str, set[str]] = field(default_factory=dict)
    scores: dict[str, float] = field(default_factory=dict)

    @property
    def nodes(self) -> set[str]:
        return set(self.adjacency)

    @property
    def edges(self) -> set[frozenset[str]]:
        return {frozenset((a, b)) for a, nbrs in self.adjacency.items() for b in nbrs}

    def add_node(self, node: str) -> None:
        self.adjacency.setdefault(node, set())

    def add_edge(self, a: str, b: str) -> None:
        if a == b:
            raise ValueError(f"self-loop on {a!r}")
        self.adjacency.setdefault(a, set()).add(b)
        self.adjacency.setdefault(b, set()).add(a)

    def neighbors(self, node: str) -> set[str]:
        return self.adjacency[node]

    def degree(self, node: str) -> int:
        return len(self.adjacency[node])

    def __len__(self) -> int:
        return len(self.adjacency)


def build_graph(sequences: Iterable[ApiSequence | Iterable[str]]) -> CoOccurrenceGraph:
    """Join immediately adjacent distinct classes, accumulating over all sequences."""
    graph = CoOccurrenceGraph()
    for seq in sequences:
        classes = seq.classes if isinstance(seq, ApiSequence) else tuple(seq)
        for c in classes:
            graph.add_node(c)
        for a, b in zip(classes, classes[1:]):
            if a != b:
                graph.add_edge(a, b)
    return graph
