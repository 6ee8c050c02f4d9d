import json

import pytest
from hypothesis import given, strategies as st

from apiexpand.corpus import (
    IngestionPolicy,
    Query,
    Side,
    Vocabulary,
    extract_code_regions,
    ingest_threads,
    load_corpus,
    preprocess,
    read_jsonl,
    save_corpus,
    split_identifier,
)
from apiexpand.exceptions import CorpusFormatError


class TestPreprocess:
    def test_grayscale_query(self):
        assert preprocess("Convert image to grayscale without losing transparency") == [
            "convert", "image", "grayscale", "losing", "transparency",
        ]

    def test_empty(self):
        assert preprocess("") == []

    def test_identifier_kept_whole_and_split(self):
        assert preprocess("FileOutputStream") == ["fileoutputstream", "file", "output", "stream"]

    @pytest.mark.parametrize(
        "ident, parts",
        [
            ("ImageIO", ["image", "io"]),
            ("URLConnection", ["url", "connection"]),
            ("CS_GRAY", ["cs", "gray"]),
            ("getHTTP2Response", ["get", "http2", "response"]),
            ("Graphics2D", ["graphics2", "d"]),
            ("snake_case_name", ["snake", "case", "name"]),
        ],
    )
    def test_split_identifier(self, ident, parts):
        assert split_identifier(ident) == parts

    def test_drops_punctuation_keywords_and_stopwords(self):
        assert preprocess("public static void main(String[] args) { return; }") == [
            "main", "string", "args",
        ]

    def test_no_stemming(self):
        assert preprocess("losing converted images") == ["losing", "converted", "images"]

    def test_custom_vocabulary(self, tmp_path):
        sw = tmp_path / "sw.txt"
        sw.write_text("image\n")
        vocab = Vocabulary.from_files(stopwords=sw)
        assert preprocess("the image", vocab) == ["the"]

    @given(st.text(alphabet=st.characters(codec="utf-8"), max_size=200))
    def test_idempotent(self, text):
        tokens = preprocess(text)
        assert preprocess(" ".join(tokens)) == tokens

    @given(st.text(max_size=200))
    def test_tokens_are_clean(self, text):
        vocab = Vocabulary()
        for tok in preprocess(text):
            assert tok and tok.isalnum() and tok == tok.lower()
            assert tok not in vocab.stopwords and tok not in vocab.keywords


class TestQuery:
    def test_keywords_dedupe_in_first_occurrence_order(self):
        q = Query.from_text("image to image grayscale IMAGE")
        assert q.keywords == ("image", "grayscale")

    def test_all_stopwords(self):
        assert Query.from_text("the of and").keywords == ()


class TestCodeRegions:
    def test_pre_code_and_fence(self):
        body = (
            "<p>text <code>Foo.bar()</code></p><pre><code>int x = 1;\n</code></pre>"
            "\n```java\nString s;\n```"
        )
        assert extract_code_regions(body) == ["Foo.bar()", "int x = 1;", "String s;"]

    def test_entities_unescaped(self):
        assert extract_code_regions("<pre>List&lt;String&gt; a;</pre>") == ["List<String> a;"]

    def test_blank_region_ignored(self):
        assert extract_code_regions("<code>   </code>") == []


class TestIngest:
    def test_accepts_valid_thread(self, record_lines):
        report = ingest_threads([record_lines()])
        assert (report.accepted, report.rejected) == (1, 0)
        t = report.threads[0]
        assert [s.side for s in t.question_code] == [Side.QUESTION]
        assert [s.side for s in t.answer_code] == [Side.ANSWER]
        assert "bufferedreader" in t.preprocessed_text
        assert "pre" not in t.preprocessed_text

    def test_rejects_unaccepted(self, record_lines):
        report = ingest_threads([record_lines(accepted=False)])
        assert (report.accepted, report.rejected) == (0, 1)

    def test_rejects_codeless(self, record_lines):
        rec = record_lines(question_html="<p>no code</p>", answer_html="<p>none here</p>")
        assert ingest_threads([rec]).rejected == 1

    def test_rejects_wrong_tag(self, record_lines):
        assert ingest_threads([record_lines(tags=["python"])]).rejected == 1
        assert ingest_threads([record_lines(tags=["python"])], IngestionPolicy(tag=None)).accepted == 1

    def test_code_policy_both(self, record_lines):
        rec = record_lines(answer_html="<p>just prose</p>")
        assert ingest_threads([rec]).accepted == 1
        assert ingest_threads([rec], IngestionPolicy(code="both")).accepted == 0

    def test_malformed_record_skipped(self, record_lines, caplog):
        report = ingest_threads([{"title": "no id"}, None, record_lines()])
        assert (report.accepted, report.rejected, report.malformed) == (1, 2, 2)
        assert "malformed" in caplog.text

    def test_deterministic(self, record_lines):
        recs = [record_lines(id=i) for i in range(5)]
        assert ingest_threads(recs).threads == ingest_threads(recs).threads

    def test_every_thread_has_code(self, fixture_threads):
        assert fixture_threads
        for t in fixture_threads:
            assert t.question_code or t.answer_code

    def test_fixture_counts(self, fixture_threads):
        assert len(fixture_threads) == 48

    def test_unreadable_source(self, tmp_path):
        with pytest.raises(CorpusFormatError, match="nope.jsonl"):
            list(read_jsonl(tmp_path / "nope.jsonl"))


class TestPersistence:
    def test_round_trip(self, tmp_path, fixture_threads):
        path = tmp_path / "c.jsonl"
        save_corpus(fixture_threads[:3], path)
        assert load_corpus(path) == fixture_threads[:3]

    def test_empty(self, tmp_path):
        path = tmp_path / "c.jsonl"
        save_corpus([], path)
        assert load_corpus(path) == []

    def test_missing_path_named(self, tmp_path):
        with pytest.raises(CorpusFormatError, match="missing.jsonl"):
            load_corpus(tmp_path / "missing.jsonl")

    def test_bad_record(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(json.dumps({"id": 1}) + "\n")
        with pytest.raises(CorpusFormatError, match="record #1"):
            load_corpus(path)
