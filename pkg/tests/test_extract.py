import random

from hypothesis import given, strategies as st

from apiexpand.corpus import CodeSegment, Side
from apiexpand.extract import ApiSequence, build_graph, extract_api_sequence, is_api_class, scan_class_mentions

from conftest import GRAYSCALE_SNIPPET

GRAYSCALE_NODES = {"BufferedImage", "ImageIO", "URL", "ColorConvertOp", "ColorSpace", "File"}
GRAYSCALE_EDGES = {
    frozenset(e)
    for e in [
        ("BufferedImage", "ImageIO"),
        ("ImageIO", "URL"),
        ("URL", "BufferedImage"),
        ("BufferedImage", "ColorConvertOp"),
        ("ColorConvertOp", "ColorSpace"),
        ("ColorSpace", "ImageIO"),
        ("ImageIO", "File"),
    ]
}


def test_api_class_pattern():
    assert is_api_class("BufferedImage")
    assert is_api_class("URL")
    assert not is_api_class("main")
    assert not is_api_class("TYPE")
    assert not is_api_class("X")


def test_grayscale_snippet_sequence():
    seq = extract_api_sequence(CodeSegment(1, Side.QUESTION, GRAYSCALE_SNIPPET))
    assert set(seq.classes) == GRAYSCALE_NODES
    assert seq.classes == (
        "BufferedImage", "ImageIO", "URL", "BufferedImage", "ColorConvertOp",
        "ColorSpace", "ImageIO", "File", "ImageIO", "File",
    )
    assert seq.mention_counts()["BufferedImage"] == 4


def test_grayscale_snippet_graph():
    graph = build_graph([extract_api_sequence(GRAYSCALE_SNIPPET)])
    assert graph.nodes == GRAYSCALE_NODES
    assert graph.edges == GRAYSCALE_EDGES


def test_no_classes():
    assert extract_api_sequence("int x = 5;").classes == ()


def test_consecutive_duplicates_collapse():
    seq = extract_api_sequence("new URL(new URL(s))")
    assert seq.classes == ("URL",)
    assert seq.mentions == ("URL", "URL")


def test_literals_and_comments_ignored():
    code = 'String s = "Hello World"; // Foo bar\n/* Baz */ Integer i;'
    assert scan_class_mentions(code) == ["String", "Integer"]


def test_constants_not_classes():
    assert scan_class_mentions("BufferedImage.TYPE_INT_ARGB; ColorSpace.CS_GRAY") == [
        "BufferedImage", "ColorSpace",
    ]


class TestGraph:
    def test_chain(self):
        assert build_graph([["A", "B", "C"]]).edges == {frozenset("AB"), frozenset("BC")}

    def test_undirected_simple(self):
        g = build_graph([["A", "B"], ["B", "A"]])
        assert g.edges == {frozenset("AB")}

    def test_empty(self):
        assert len(build_graph([])) == 0

    def test_single_class_is_isolated_node(self):
        g = build_graph([ApiSequence(None, ("A",))])
        assert g.nodes == {"A"} and g.edges == set()

    @given(st.lists(st.lists(st.sampled_from("ABCDEFG"), max_size=8), max_size=8))
    def test_invariants(self, seqs):
        g = build_graph(seqs)
        assert g.nodes == {c for s in seqs for c in s}
        for e in g.edges:
            assert len(e) == 2 and e <= g.nodes
        shuffled = seqs[:]
        random.Random(0).shuffle(shuffled)
        assert build_graph(shuffled).edges == g.edges

    @given(st.text(alphabet="AbcXyZ_ .(){}=;\"/\n", max_size=120))
    def test_extracted_tokens_match_pattern(self, code):
        seq = extract_api_sequence(code)
        assert all(is_api_class(c) for c in seq.classes)
        assert all(a != b for a, b in zip(seq.classes, seq.classes[1:]))
